mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::Rng;
use scrollext::color::{
    dtree_coloration, g_prime, is_binomial_coloration, is_good_coloration, is_proper_coloration, reduction_vectors,
    search_binomial_coloration, validate_coloration, Coloration,
};
use scrollext::extension::reduced_vertices;
use scrollext::random::{random_d_tree_extension, random_extension_complex};

fn coloration(n: usize, colors: &[usize], k: usize) -> Coloration {
    let mut c = Coloration::new(k);
    for (v, &color) in colors.iter().enumerate().take(n) {
        c.set(v, color).unwrap();
    }
    c
}

#[test]
fn good_check_matches_cycle_search_exhaustively() {
    for n in 1..=4usize {
        let pairs = n * (n - 1) / 2;
        for mask in 0..(1u64 << pairs) {
            let g = common::graph_from_mask(n, mask);
            for code in 0..3usize.pow(n as u32) {
                let colors: Vec<usize> = (0..n).map(|v| code / 3usize.pow(v as u32) % 3).collect();
                let c = coloration(n, &colors, 3);
                let brute = is_proper_coloration(&g, &c).unwrap() && !common::has_two_colored_cycle(&g, &|v| colors[v]);
                assert_eq!(is_good_coloration(&g, &c).unwrap(), brute, "{:?} {colors:?}", g.edges());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn good_check_matches_cycle_search(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let n = rng.gen_range(1..=10);
        let k = rng.gen_range(2..=4);
        let p = rng.gen_range(0.1..0.5);
        let g = common::random_graph(&mut rng, n, p);
        let colors: Vec<usize> = (0..n).map(|_| rng.gen_range(0..k)).collect();
        let c = coloration(n, &colors, k);
        let brute = is_proper_coloration(&g, &c).unwrap() && !common::has_two_colored_cycle(&g, &|v| colors[v]);
        prop_assert_eq!(is_good_coloration(&g, &c).unwrap(), brute);
    }

    #[test]
    fn dtree_coloration_is_binomial_and_good(seed in any::<u64>(), d in 1usize..=3) {
        let ext = random_d_tree_extension(&mut common::rng(seed), d, 6, 2);
        let c = dtree_coloration(&ext).unwrap();
        prop_assert!(is_binomial_coloration(&ext, &c).ok());
        prop_assert!(is_good_coloration(&g_prime(&ext), &c).unwrap());
        prop_assert!(c.nclasses() <= d + 1);
        // classes partition the reduced vertices
        let colored: BTreeSet<usize> = c.colored().collect();
        prop_assert_eq!(colored, reduced_vertices(&ext));
        let vecs = reduction_vectors(&c, ext.nvars()).unwrap();
        prop_assert_eq!(vecs.len(), ext.dim() + 1);
    }

    #[test]
    fn search_results_validate(seed in any::<u64>()) {
        let ext = random_extension_complex(&mut common::rng(seed), 7, 3, 2);
        if let Some(c) = search_binomial_coloration(&ext) {
            prop_assert_eq!(validate_coloration(&ext, &c), Ok(()));
            prop_assert_eq!(search_binomial_coloration(&ext), Some(c));
        }
    }

    #[test]
    fn search_finds_a_coloration_on_d_trees(seed in any::<u64>(), d in 1usize..=2) {
        let ext = random_d_tree_extension(&mut common::rng(seed), d, 4, 1);
        prop_assert!(search_binomial_coloration(&ext).is_some());
    }
}
