//! Cross-checks of the combinatorial fast paths against Gröbner-basis
//! recomputations.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::color::ReductionVectors;
use crate::complex::{clique_tree_criterion, is_generalized_d_tree, skeleton_graph, stanley_reisner_generators};
use crate::extension::{binomial_extension_ideal, component_ideals, scroll_minors, ExtensionComplex, IdealPresentation};
use crate::poly::{buchberger, ideal_intersection, Field, GroebnerBasis, Monomial, PolyRing, Polynomial};
use crate::reduce::{containment_by_groebner, modb_normal_pair, verify_main_theorem, DegreeSpan};

/// One comparison: the fast-path value and the recomputed value, both
/// rendered as text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleCheck {
    pub name: String,
    pub fast: String,
    pub oracle: String,
}

impl OracleCheck {
    pub fn agrees(&self) -> bool {
        self.fast == self.oracle
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport {
    pub checks: Vec<OracleCheck>,
}

impl OracleReport {
    pub fn diffs(&self) -> Vec<&OracleCheck> {
        self.checks.iter().filter(|c| !c.agrees()).collect()
    }
}

/// Number of membership samples drawn in each direction.
pub const SAMPLES: usize = 8;

fn check(name: impl Into<String>, fast: impl ToString, oracle: impl ToString) -> OracleCheck {
    OracleCheck {
        name: name.into(),
        fast: fast.to_string(),
        oracle: oracle.to_string(),
    }
}

fn to_ring<F: Field>(ring: &PolyRing<F>, p: &IdealPresentation) -> Vec<Polynomial<F::Elem>> {
    p.polys(ring).expect("ring built from the presentation names")
}

/// Reduced Gröbner basis of `⋂ J_l`.
pub fn intersect_components<F: Field>(ring: &PolyRing<F>, ext: &ExtensionComplex) -> GroebnerBasis<F> {
    let comps = component_ideals(ext);
    let mut acc = buchberger(ring, &to_ring(ring, &comps[0]));
    for c in &comps[1..] {
        acc = ideal_intersection(ring, acc.polys(), &to_ring(ring, c));
    }
    acc
}

/// Degree of `S/B` from the combinatorics: a scroll with `c` columns has
/// degree `c`, a plain facet degree 1, summed over facets of top dimension.
pub fn combinatorial_degree(ext: &ExtensionComplex) -> i64 {
    let top = ext.dim() + 1;
    (0..ext.nfacets())
        .filter(|&l| ext.base().facets()[l].len() == top)
        .map(|l| ext.matrix(l).map_or(1, |m| m.columns().len() as i64))
        .sum()
}

fn random_multiple<F: Field, R: Rng>(
    ring: &PolyRing<F>,
    gens: &[Polynomial<F::Elem>],
    rng: &mut R,
) -> Polynomial<F::Elem> {
    let field = ring.field();
    let mut acc = Polynomial::zero();
    for _ in 0..3 {
        let Some(g) = gens.choose(rng) else { break };
        let v = rng.gen_range(0..ring.nvars());
        let c = field.from_i64(rng.gen_range(1..100));
        acc = ring.add(&acc, &ring.mul_term(g, &Monomial::var(ring.nvars(), v), &c));
    }
    acc
}

/// Run every cross-check. `ring` must use the variable names of `ext`.
pub fn run_oracle<F: Field>(ring: &PolyRing<F>, ext: &ExtensionComplex, seed: u64) -> OracleReport {
    let names = ext.names();
    let n = ext.nvars();
    let mut checks = Vec::new();

    let b = binomial_extension_ideal(ext);
    let gb_b = buchberger(ring, &to_ring(ring, &b));
    let gb_cap = intersect_components(ring, ext);
    checks.push(check("decomposition", gb_b.format().join("; "), gb_cap.format().join("; ")));

    // Stanley–Reisner ideal as the intersection of the facet primes.
    let mut sr: Vec<String> = stanley_reisner_generators(ext.extended())
        .iter()
        .map(|s| Monomial::from_vars(n, s).format(names))
        .collect();
    sr.sort();
    let primes: Vec<Vec<Polynomial<F::Elem>>> = ext
        .extended()
        .facets()
        .iter()
        .map(|f| (0..n).filter(|v| !f.contains(v)).map(|v| ring.var(v)).collect())
        .collect();
    let mut cap = buchberger(ring, &primes[0]);
    for p in &primes[1..] {
        cap = ideal_intersection(ring, cap.polys(), p);
    }
    let mut sr_oracle: Vec<String> = cap.leading_monomials().iter().map(|m| m.format(names)).collect();
    sr_oracle.sort();
    checks.push(check("stanley_reisner", sr.join(", "), sr_oracle.join(", ")));

    let hd = gb_b.hilbert_data();
    checks.push(check("dimension", ext.dim() + 1, gb_b.krull_dimension_lt()));
    checks.push(check("hilbert_dimension", hd.dimension, gb_b.krull_dimension_lt()));
    checks.push(check("degree", combinatorial_degree(ext), hd.degree));
    checks.push(check("codimension", n - ext.dim() - 1, hd.codimension));

    let empty = ReductionVectors {
        classes: Vec::new(),
        forms: Vec::new(),
    };
    for d in 0..=3u32 {
        let span = DegreeSpan::new(ring, &empty, &b, d).expect("homogeneous generators");
        let direct = span.monomials.len() - span.rank();
        checks.push(check(format!("hilbert_function[{d}]"), hd.hilbert_function(d as usize), direct));
    }

    for (l, comp) in component_ideals(ext).iter().enumerate() {
        let gb = buchberger(ring, &to_ring(ring, comp));
        checks.push(check(
            format!("component_dimension[{l}]"),
            ext.base().facets()[l].len(),
            gb.krull_dimension_lt(),
        ));
    }

    for m in ext.matrices() {
        let minors = buchberger(ring, &to_ring(ring, &ext.presentation(scroll_minors(m, n))));
        let vars = m.variables();
        let (mut total, mut zero) = (0usize, 0usize);
        for (i, &u) in vars.iter().enumerate() {
            for &v in &vars[i + 1..] {
                if !(m.is_y(u) || m.is_y(v)) {
                    continue;
                }
                total += 1;
                let trace = modb_normal_pair(u, v, m).expect("pair with a point");
                if minors.normal_form_int(&trace.difference(n)).expect("same ring").is_zero() {
                    zero += 1;
                }
            }
        }
        checks.push(check(format!("rewriter[{}]", m.facet), total, zero));
    }

    let verdict = is_generalized_d_tree(&skeleton_graph(ext.base()), ext.dim());
    checks.push(check(
        "d_tree",
        verdict.is_tree,
        clique_tree_criterion(&skeleton_graph(ext.base()), ext.dim()),
    ));

    let (fast, slow) = match verify_main_theorem(ring, ext) {
        Ok(report) => {
            let b_gens = binomial_extension_ideal(ext);
            let slow = containment_by_groebner(ring, &report.vectors, &b_gens, 1);
            (
                format!("contained, uncovered [{}]", fmt_monomials(&report.containment.uncovered, names)),
                format!("{}, uncovered [{}]", if slow.is_empty() { "contained" } else { "not contained" }, fmt_monomials(&slow, names)),
            )
        }
        Err(e) => (format!("no certificate: {e}"), format!("no certificate: {e}")),
    };
    checks.push(check("containment_rho1", fast, slow));

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let b_polys = to_ring(ring, &b);
    let into_cap = (0..SAMPLES)
        .filter(|_| gb_cap.contains(&random_multiple(ring, &b_polys, &mut rng)))
        .count();
    checks.push(check("membership_b_in_intersection", SAMPLES, into_cap));
    let cap_polys = gb_cap.polys().to_vec();
    let into_b = (0..SAMPLES)
        .filter(|_| gb_b.contains(&random_multiple(ring, &cap_polys, &mut rng)))
        .count();
    checks.push(check("membership_intersection_in_b", SAMPLES, into_b));

    OracleReport { checks }
}

fn fmt_monomials(ms: &[Monomial], names: &[String]) -> String {
    ms.iter().map(|m| m.format(names)).collect::<Vec<_>>().join(", ")
}
