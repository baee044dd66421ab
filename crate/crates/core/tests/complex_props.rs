mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;
use scrollext::complex::{
    clique_complex, clique_tree_criterion, facet_intersection_graph, is_generalized_d_tree, proper_edge_stars,
    skeleton_graph, stanley_reisner_generators, validate_complex,
};
use scrollext::random::random_generalized_d_tree;
use scrollext::{Graph, SimplicialComplex};

fn random_complex(seed: u64, max_vertices: usize, max_facets: usize) -> SimplicialComplex {
    let mut rng = common::rng(seed);
    let n = rng.gen_range(2..=max_vertices);
    let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let mut facets: Vec<Vec<String>> = Vec::new();
    for _ in 0..rng.gen_range(1..=max_facets) {
        let mut f = names.clone();
        f.shuffle(&mut rng);
        f.truncate(rng.gen_range(1..=n.min(4)));
        facets.push(f);
    }
    validate_complex(&facets).unwrap()
}

fn names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("v{i}")).collect()
}

/// Replay an elimination certificate.
fn certificate_holds(g: &Graph, d: usize, order: &[usize], base: &[usize]) -> bool {
    let mut h = g.clone();
    for &v in order {
        let nbrs: Vec<usize> = h.neighbors(v).iter().copied().collect();
        if !(1..=d).contains(&nbrs.len()) || !h.is_clique(&nbrs) {
            return false;
        }
        h.remove_vertex(v);
    }
    let rest: Vec<usize> = h.vertices().collect();
    rest == base && base.len() == d + 1 && h.is_clique(base)
}

fn agreement(g: &Graph, d: usize) {
    let v = is_generalized_d_tree(g, d);
    assert_eq!(v.is_tree, clique_tree_criterion(g, d), "edges {:?}, d {d}", g.edges());
    assert_eq!(v.is_tree, v.clique_tree_verdict);
    if v.is_tree {
        assert!(certificate_holds(g, d, &v.elimination_order, &v.base_clique));
    }
}

#[test]
fn d_tree_agreement_exhaustive_small_graphs() {
    for n in 1..=5usize {
        let pairs = n * (n - 1) / 2;
        for mask in 0..(1u64 << pairs) {
            let g = common::graph_from_mask(n, mask);
            for d in 0..=3 {
                agreement(&g, d);
            }
        }
    }
}

#[test]
fn star_is_a_one_tree() {
    let mut g = Graph::new(0..4);
    for v in 1..4 {
        g.add_edge(0, v);
    }
    let v = is_generalized_d_tree(&g, 1);
    assert!(v.is_tree);
    assert_eq!(v.elimination_order, vec![2, 3]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn facets_are_maximal(seed in any::<u64>()) {
        let c = random_complex(seed, 8, 6);
        let f = c.facets();
        for i in 0..f.len() {
            for j in 0..f.len() {
                if i != j {
                    prop_assert!(!f[i].iter().all(|v| f[j].contains(v)));
                }
            }
        }
        let covered: BTreeSet<usize> = f.iter().flatten().copied().collect();
        prop_assert_eq!(covered.len(), c.nvertices());
    }

    #[test]
    fn facets_are_faces_of_clique_complex(seed in any::<u64>()) {
        let c = random_complex(seed, 8, 6);
        let flag = clique_complex(&skeleton_graph(&c), &c.names()).unwrap();
        for f in c.facets() {
            prop_assert!(flag.is_face(f));
        }
    }

    #[test]
    fn d_tree_agreement_random(seed in any::<u64>(), d in 1usize..=3) {
        let mut rng = common::rng(seed);
        let n = rng.gen_range(1..=8);
        let p = rng.gen_range(0.2..0.9);
        let g = common::random_graph(&mut rng, n, p);
        agreement(&g, d);
    }

    #[test]
    fn generated_d_trees_are_recognized(seed in any::<u64>(), d in 1usize..=3) {
        let c = random_generalized_d_tree(&mut common::rng(seed), d, 6);
        let g = skeleton_graph(&c);
        prop_assert!(is_generalized_d_tree(&g, d).is_tree);
        prop_assert!(clique_tree_criterion(&g, d));
        // an extra chord across the base clique and a fresh vertex breaks the bound
        let n = c.nvertices();
        let mut bigger = g.clone();
        bigger.add_vertex(n);
        for v in 0..=d {
            bigger.add_edge(v, n);
        }
        prop_assert!(!is_generalized_d_tree(&bigger, d).is_tree);
        let _ = clique_complex(&g, &names(n)).unwrap();
    }

    #[test]
    fn stanley_reisner_generators_are_minimal_non_faces(seed in any::<u64>()) {
        let c = random_complex(seed, 7, 5);
        let gens = stanley_reisner_generators(&c);
        for s in &gens {
            prop_assert!(!c.is_face(s));
            prop_assert!(s.len() <= c.dim() + 2);
            for skip in 0..s.len() {
                let sub: Vec<usize> = s.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, &v)| v).collect();
                prop_assert!(c.is_face(&sub));
            }
        }
        for a in &gens {
            for b in &gens {
                if a != b {
                    prop_assert!(!a.iter().all(|v| b.contains(v)));
                }
            }
        }
        // every non-face contains a generator
        let n = c.nvertices();
        for mask in 1u32..(1 << n) {
            let set: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            if !c.is_face(&set) {
                prop_assert!(gens.iter().any(|g| g.iter().all(|v| set.contains(v))));
            }
        }
    }

    #[test]
    fn proper_edges_lie_in_one_facet(seed in any::<u64>()) {
        let c = random_complex(seed, 8, 5);
        for (fi, stars) in proper_edge_stars(&c).iter().enumerate() {
            for s in stars {
                prop_assert_eq!(s.facet, fi);
                prop_assert!(!s.targets.is_empty());
                for &t in &s.targets {
                    prop_assert_eq!(c.facets_containing(&[s.origin, t]), vec![fi]);
                }
            }
        }
    }

    #[test]
    fn intersection_graph_edges(seed in any::<u64>()) {
        let c = random_complex(seed, 8, 5);
        let h = facet_intersection_graph(&c);
        let f = c.facets();
        for i in 0..f.len() {
            for j in i + 1..f.len() {
                let meet = f[i].iter().any(|v| f[j].contains(v));
                prop_assert_eq!(h.has_edge(i, j), meet);
            }
        }
    }
}
