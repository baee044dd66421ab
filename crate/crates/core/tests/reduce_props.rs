mod common;

use proptest::prelude::*;
use rand::Rng;
use scrollext::color::ReductionVectors;
use scrollext::extension::{binomial_extension_ideal, scroll_minors};
use scrollext::poly::{buchberger, IntPoly, PolyRing, PrimeField};
use scrollext::random::{random_d_tree_extension, random_extension_complex, random_scroll_matrix};
use scrollext::reduce::{containment_by_groebner, degree_containment, modb_normal_pair, verify_main_theorem, Family};

fn gf() -> PrimeField {
    PrimeField::new(32003).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rewriter_is_sound_and_complete(seed in any::<u64>()) {
        let (m, names) = random_scroll_matrix(&mut common::rng(seed), 4, 3);
        let n = names.len();
        let ring = PolyRing::degrevlex(gf(), names.clone());
        let gens: Vec<_> = scroll_minors(&m, n).iter().map(|p| ring.from_int(p).unwrap()).collect();
        let gb = buchberger(&ring, &gens);
        let vars = m.variables();
        for (i, &u) in vars.iter().enumerate() {
            for &v in &vars[i + 1..] {
                if !(m.is_y(u) || m.is_y(v)) {
                    prop_assert!(modb_normal_pair(u, v, &m).is_err());
                    continue;
                }
                let t = modb_normal_pair(u, v, &m).unwrap();
                prop_assert!(gb.normal_form_int(&t.difference(n)).unwrap().is_zero());
                prop_assert!((1..=5).contains(&t.family.number()));
                // each step is a minor of the matrix
                for s in &t.steps {
                    prop_assert!(m.minors().contains(&s.minor));
                }
                // the final pair is a fixed point, unless it is x0*x1
                let end = t.end();
                if t.family == Family::OriginFirstTarget {
                    prop_assert!(end.contains(&m.origin()) && end.contains(&m.x(1)));
                } else {
                    let again = modb_normal_pair(end[0], end[1], &m).unwrap();
                    prop_assert!(again.steps.is_empty());
                    prop_assert_eq!(again.family, t.family);
                }
            }
        }
    }

    #[test]
    fn linear_algebra_matches_groebner(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let ext = random_extension_complex(&mut rng, 6, 2, 1);
        let n = ext.nvars();
        let ring = PolyRing::degrevlex(gf(), ext.names().to_vec());
        let forms: Vec<IntPoly> = (0..ext.dim() + 1)
            .map(|_| {
                let vars: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.4)).collect();
                IntPoly::linear_form(n, &vars)
            })
            .filter(|f| !f.is_zero())
            .collect();
        let g = ReductionVectors { classes: Vec::new(), forms };
        let b = binomial_extension_ideal(&ext);
        for rho in 1..=2 {
            let la = degree_containment(&ring, &g, &b, rho).unwrap();
            let gb = containment_by_groebner(&ring, &g, &b, rho);
            prop_assert_eq!(la.contained, gb.is_empty());
        }
    }

    #[test]
    fn containment_is_monotone(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let ext = random_extension_complex(&mut rng, 5, 2, 1);
        let n = ext.nvars();
        let ring = PolyRing::degrevlex(gf(), ext.names().to_vec());
        let forms: Vec<IntPoly> = (0..ext.dim() + 1)
            .map(|_| IntPoly::linear_form(n, &[rng.gen_range(0..n), rng.gen_range(0..n)]))
            .collect();
        let g = ReductionVectors { classes: Vec::new(), forms };
        let b = binomial_extension_ideal(&ext);
        let c1 = degree_containment(&ring, &g, &b, 1).unwrap();
        let c2 = degree_containment(&ring, &g, &b, 2).unwrap();
        prop_assert!(!c1.contained || c2.contained);
    }

    #[test]
    fn theorem_pipeline_is_deterministic(seed in any::<u64>(), d in 1usize..=2) {
        let ext = random_d_tree_extension(&mut common::rng(seed), d, 4, 1);
        let ring = PolyRing::degrevlex(gf(), ext.names().to_vec());
        let a = verify_main_theorem(&ring, &ext);
        let b = verify_main_theorem(&ring, &ext);
        prop_assert!(a.is_ok());
        prop_assert_eq!(a, b);
    }
}
