//! Reduction numbers: rewriting quadratic monomials modulo scroll minors,
//! degree-wise containment `m^{r+1} ⊆ (g) m^r + B` by exact linear algebra,
//! and the end-to-end check of a coloration.

use std::collections::HashMap;

use thiserror::Error;

use crate::color::{
    dtree_coloration, has_d_tree_skeleton, reduction_vectors, search_binomial_coloration,
    ColorError, Coloration, ReductionVectors,
};
use crate::complex::VertexId;
use crate::extension::{binomial_extension_ideal, ExtensionComplex, IdealPresentation, Minor, ScrollMatrix};
use crate::poly::{
    buchberger, monomials_of_degree, Field, IntPoly, Monomial, PolyRing, SparseEchelon,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RewriteError {
    #[error("variable {0} does not occur in the matrix")]
    NotInMatrix(VertexId),
    #[error("neither variable is a new point")]
    BothXVariables,
    #[error("the two variables coincide")]
    IdenticalVariables,
}

/// Canonical forms of a product of two matrix variables, `x_m` denoting the
/// end of block `m` and `Y_m` its new points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Family {
    /// `x_1 x_0`
    OriginFirstTarget = 1,
    /// `x_m p`, `p` in `Y_n`, `m <= n`
    TargetPoint = 2,
    /// `q y_{n,1}`, `q` in `Y_m`, `m <= n`, `n >= 2`
    PointHead = 3,
    /// `x_0 y_{1,j}`
    OriginFirstBlock = 4,
    /// `x_0 y_{n,1}`, `n >= 2`
    OriginHead = 5,
}

impl Family {
    pub fn number(&self) -> u8 {
        *self as u8
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteStep {
    pub minor: Minor,
    pub result: [VertexId; 2],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteTrace {
    pub start: [VertexId; 2],
    pub steps: Vec<RewriteStep>,
    pub family: Family,
}

impl RewriteTrace {
    pub fn end(&self) -> [VertexId; 2] {
        self.steps.last().map(|s| s.result).unwrap_or(self.start)
    }

    /// `start - end` as a polynomial.
    pub fn difference(&self, nvars: usize) -> IntPoly {
        let [a, b] = self.start;
        let [c, d] = self.end();
        IntPoly::product(nvars, &[a, b]).sub(&IntPoly::product(nvars, &[c, d]))
    }
}

type Pos = (usize, usize);

fn at(m: &ScrollMatrix, (b, i): Pos) -> VertexId {
    m.blocks[b - 1].run[i]
}

fn is_end(m: &ScrollMatrix, (b, i): Pos) -> bool {
    i + 1 == m.blocks[b - 1].run.len()
}

/// Block of `p` if it is a new point.
fn point_block(m: &ScrollMatrix, p: Pos) -> Option<usize> {
    let (b, i) = p;
    let interior = !is_end(m, p) && !(b == 1 && i == 0);
    interior.then_some(b)
}

fn classify(m: &ScrollMatrix, p: Pos, q: Pos) -> Option<Family> {
    let origin = |x: Pos| x == (1, 0);
    let head = |x: Pos| x.0 >= 2 && x.1 == 0;
    let either = |f: &dyn Fn(Pos, Pos) -> bool| f(p, q) || f(q, p);

    if either(&|a, b| origin(a) && b == (1, m.blocks[0].run.len() - 1)) {
        return Some(Family::OriginFirstTarget);
    }
    if either(&|a, b| is_end(m, a) && point_block(m, b).is_some_and(|n| a.0 <= n)) {
        return Some(Family::TargetPoint);
    }
    if either(&|a, b| head(a) && a != b && point_block(m, b).is_some_and(|k| k <= a.0)) {
        return Some(Family::PointHead);
    }
    if either(&|a, b| origin(a) && point_block(m, b) == Some(1)) {
        return Some(Family::OriginFirstBlock);
    }
    if either(&|a, b| origin(a) && head(b)) {
        return Some(Family::OriginHead);
    }
    None
}

/// Rewrite `u*v` modulo the minors of `m` until it is in one of the five
/// canonical families. Factors in different blocks move towards each other
/// (the earlier one forward, the later one back); factors in one block move
/// apart. The lowest-numbered matching family is reported.
pub fn modb_normal_pair(u: VertexId, v: VertexId, m: &ScrollMatrix) -> Result<RewriteTrace, RewriteError> {
    if u == v {
        return Err(RewriteError::IdenticalVariables);
    }
    let pu = m.position(u).ok_or(RewriteError::NotInMatrix(u))?;
    let pv = m.position(v).ok_or(RewriteError::NotInMatrix(v))?;
    if !m.is_y(u) && !m.is_y(v) {
        return Err(RewriteError::BothXVariables);
    }
    let (mut a, mut b) = if pu <= pv { (pu, pv) } else { (pv, pu) };
    let mut steps = Vec::new();
    loop {
        if let Some(family) = classify(m, a, b) {
            return Ok(RewriteTrace {
                start: [u, v],
                steps,
                family,
            });
        }
        let (c1, c2, na, nb) = if a.0 < b.0 {
            let c1 = m.column_index(a.0, a.1);
            let c2 = m.column_index(b.0, b.1 - 1);
            (c1, c2, (a.0, a.1 + 1), (b.0, b.1 - 1))
        } else {
            let c1 = m.column_index(a.0, a.1 - 1);
            let c2 = m.column_index(b.0, b.1);
            (c1, c2, (a.0, a.1 - 1), (b.0, b.1 + 1))
        };
        a = na;
        b = nb;
        steps.push(RewriteStep {
            minor: m.minor(c1, c2),
            result: [at(m, a), at(m, b)],
        });
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReduceError {
    #[error("expected {expected} linear forms, found {found}")]
    WrongCount { expected: i64, found: usize },
    #[error("the linear forms are not a system of parameters")]
    NotSOP,
    #[error("generator {0} is not homogeneous")]
    NotHomogeneous(String),
}

/// Is `(g)` a system of parameters modulo `B`? The number of forms must equal
/// the Krull dimension of `S/B`.
pub fn verify_sop<F: Field>(
    ring: &PolyRing<F>,
    g: &ReductionVectors,
    b: &IdealPresentation,
) -> Result<bool, ReduceError> {
    let gens = b.polys(ring).expect("ring matches presentation");
    let dim = buchberger(ring, &gens).krull_dimension_lt();
    if dim != g.len() as i64 {
        return Err(ReduceError::WrongCount {
            expected: dim,
            found: g.len(),
        });
    }
    let mut all = gens;
    all.extend(g.forms.iter().map(|f| ring.from_int(f).unwrap()));
    Ok(buchberger(ring, &all).krull_dimension_lt() == 0)
}

/// Degree-`r + 1` part of `(g) + B`, as an echelon form over the monomials.
pub struct DegreeSpan<F: Field> {
    pub degree: u32,
    pub monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    echelon: SparseEchelon<F>,
}

impl<F: Field> DegreeSpan<F> {
    pub fn new(
        ring: &PolyRing<F>,
        g: &ReductionVectors,
        b: &IdealPresentation,
        degree: u32,
    ) -> Result<Self, ReduceError> {
        let n = ring.nvars();
        let monomials = monomials_of_degree(n, degree);
        let index: HashMap<Monomial, usize> = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let echelon = SparseEchelon::new(ring.field().clone(), monomials.len());
        let mut span = DegreeSpan {
            degree,
            monomials,
            index,
            echelon,
        };
        let field = ring.field();
        let add = |span: &mut Self, p: &IntPoly| {
            if span.echelon.is_full_rank() {
                return;
            }
            let row = span.row(field, p);
            span.echelon.insert(row);
        };
        for gen in &b.generators {
            if !gen.is_homogeneous() {
                return Err(ReduceError::NotHomogeneous(gen.format(ring.names())));
            }
            let d = gen.degree();
            if d > degree {
                continue;
            }
            for m in monomials_of_degree(n, degree - d) {
                add(&mut span, &gen.mul_monomial(&m));
            }
        }
        if degree >= 1 {
            let lower = monomials_of_degree(n, degree - 1);
            for form in &g.forms {
                for m in &lower {
                    add(&mut span, &form.mul_monomial(m));
                }
            }
        }
        Ok(span)
    }

    fn row(&self, field: &F, p: &IntPoly) -> Vec<(usize, F::Elem)> {
        p.terms()
            .iter()
            .map(|(m, c)| (self.index[m], field.from_i64(*c)))
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }

    pub fn is_everything(&self) -> bool {
        self.echelon.is_full_rank()
    }

    pub fn contains_monomial(&self, m: &Monomial) -> bool {
        let col = self.index[m];
        self.echelon.contains(vec![(col, self.echelon.field().one())])
    }

    /// Monomials of this degree outside the span.
    pub fn uncovered(&self) -> Vec<Monomial> {
        if self.is_everything() {
            return Vec::new();
        }
        self.monomials.iter().filter(|m| !self.contains_monomial(m)).cloned().collect()
    }
}

/// Verdict of `m^{r+1} ⊆ (g) m^r + B` in degree `r + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Containment {
    pub rho: u32,
    pub contained: bool,
    pub rank: usize,
    pub dimension: usize,
    pub uncovered: Vec<Monomial>,
}

pub fn degree_containment<F: Field>(
    ring: &PolyRing<F>,
    g: &ReductionVectors,
    b: &IdealPresentation,
    rho: u32,
) -> Result<Containment, ReduceError> {
    let span = DegreeSpan::new(ring, g, b, rho + 1)?;
    Ok(Containment {
        rho,
        contained: span.is_everything(),
        rank: span.rank(),
        dimension: span.monomials.len(),
        uncovered: span.uncovered(),
    })
}

/// Same question answered with a Gröbner basis of `(g) + B`: the monomials of
/// degree `r + 1` with nonzero normal form.
pub fn containment_by_groebner<F: Field>(
    ring: &PolyRing<F>,
    g: &ReductionVectors,
    b: &IdealPresentation,
    rho: u32,
) -> Vec<Monomial> {
    let mut gens = b.polys(ring).expect("ring matches presentation");
    gens.extend(g.forms.iter().map(|f| ring.from_int(f).unwrap()));
    let gb = buchberger(ring, &gens);
    monomials_of_degree(ring.nvars(), rho + 1)
        .into_iter()
        .filter(|m| !gb.contains(&ring.term(m.clone(), ring.field().one())))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionReport {
    pub vectors: ReductionVectors,
    pub is_sop: bool,
    pub verdicts: Vec<Containment>,
    /// Smallest passing `r`, or `None` when none passes up to the bound.
    pub reduction_number: Option<u32>,
}

/// Smallest `r <= rho_max` with `m^{r+1} ⊆ (g) m^r + B`.
pub fn reduction_number<F: Field>(
    ring: &PolyRing<F>,
    g: &ReductionVectors,
    b: &IdealPresentation,
    rho_max: u32,
) -> Result<ReductionReport, ReduceError> {
    if !verify_sop(ring, g, b)? {
        return Err(ReduceError::NotSOP);
    }
    let mut verdicts = Vec::new();
    let mut found = None;
    for rho in 1..=rho_max {
        let c = degree_containment(ring, g, b, rho)?;
        let ok = c.contained;
        verdicts.push(c);
        if ok {
            found = Some(rho);
            break;
        }
    }
    Ok(ReductionReport {
        vectors: g.clone(),
        is_sop: true,
        verdicts,
        reduction_number: found,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ColorMethod {
    DTree,
    Search,
}

impl ColorMethod {
    pub fn name(&self) -> &'static str {
        match self {
            ColorMethod::DTree => "dtree",
            ColorMethod::Search => "search",
        }
    }
}

/// Per-facet hypothesis: the origin lies in no other facet, or every product
/// `x0 * y_{n,1}` (`n >= 2`) lies in `(g) m + B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetHypothesis {
    pub facet: usize,
    pub origin_interior: bool,
    /// `(y_{n,1}, x0 * y_{n,1} in the degree-2 span)`.
    pub origin_heads: Vec<(VertexId, bool)>,
    pub traces: Vec<RewriteTrace>,
}

impl FacetHypothesis {
    pub fn holds(&self) -> bool {
        self.origin_interior || self.origin_heads.iter().all(|(_, ok)| *ok)
    }

    pub fn condition(&self) -> &'static str {
        if self.origin_interior {
            "origin-interior"
        } else {
            "origin-head-products"
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremReport {
    pub method: ColorMethod,
    pub coloration: Coloration,
    pub vectors: ReductionVectors,
    pub hypotheses: Vec<FacetHypothesis>,
    pub containment: Containment,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TheoremError {
    #[error("no binomial coloration exists")]
    NoColorationFound,
    #[error("hypothesis fails on facet {facet}: {detail}")]
    HypothesisFailed { facet: usize, detail: String },
    #[error("{} degree-2 monomials are not covered", uncovered.len())]
    ContainmentFailed { uncovered: Vec<Monomial> },
    #[error(transparent)]
    Color(#[from] ColorError),
    #[error(transparent)]
    Reduce(#[from] ReduceError),
}

/// Find a coloration (constructively on d-tree skeletons, by search
/// otherwise), check the per-facet hypotheses, and certify
/// `(g) m + B = m^2` in degree 2.
pub fn verify_main_theorem<F: Field>(ring: &PolyRing<F>, ext: &ExtensionComplex) -> Result<TheoremReport, TheoremError> {
    let (method, coloration) = if has_d_tree_skeleton(ext.base()).is_ok() {
        (ColorMethod::DTree, dtree_coloration(ext)?)
    } else {
        let c = search_binomial_coloration(ext).ok_or(TheoremError::NoColorationFound)?;
        (ColorMethod::Search, c)
    };
    let vectors = reduction_vectors(&coloration, ext.nvars())?;
    let b = binomial_extension_ideal(ext);
    let span = DegreeSpan::new(ring, &vectors, &b, 2)?;

    let mut hypotheses = Vec::new();
    for l in 0..ext.nfacets() {
        let Some(m) = ext.matrix(l) else { continue };
        if m.k() < 2 {
            continue;
        }
        let x0 = m.origin();
        let mut heads = Vec::new();
        let mut traces = Vec::new();
        for n in 2..=m.k() {
            let y = m.first_y(n);
            let prod = Monomial::from_vars(ext.nvars(), &[x0, y]);
            heads.push((y, span.contains_monomial(&prod)));
            traces.push(modb_normal_pair(x0, y, m).expect("origin and head lie in the matrix"));
        }
        let h = FacetHypothesis {
            facet: l,
            origin_interior: ext.is_interior(l, x0),
            origin_heads: heads,
            traces,
        };
        if !h.holds() {
            return Err(TheoremError::HypothesisFailed {
                facet: l,
                detail: "origin is shared and some x0*y_{n,1} is not covered".to_string(),
            });
        }
        hypotheses.push(h);
    }

    let uncovered = span.uncovered();
    if !uncovered.is_empty() {
        return Err(TheoremError::ContainmentFailed { uncovered });
    }
    Ok(TheoremReport {
        method,
        coloration,
        vectors,
        hypotheses,
        containment: Containment {
            rho: 1,
            contained: true,
            rank: span.rank(),
            dimension: span.monomials.len(),
            uncovered: Vec::new(),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::validate_complex;
    use crate::extension::ExtensionSpec;
    use crate::poly::{PrimeField, Rationals};

    fn greduit() -> ExtensionComplex {
        let base = validate_complex(&[vec!["a", "b", "c", "d"]]).unwrap();
        let spec = ExtensionSpec::new(0, "a", &[("b", &["x"]), ("c", &["y"]), ("d", &["z"])]);
        ExtensionComplex::new(base, &[spec]).unwrap()
    }

    fn id(e: &ExtensionComplex, name: &str) -> VertexId {
        e.names().iter().position(|n| n == name).unwrap()
    }

    #[test]
    fn greduit_traces() {
        let e = greduit();
        let m = e.matrix(0).unwrap();
        let t = modb_normal_pair(id(&e, "x"), id(&e, "c"), m).unwrap();
        assert_eq!(t.steps.len(), 1);
        assert_eq!(t.steps[0].minor.format(e.names()), "x*c - b*y");
        assert_eq!(t.family, Family::TargetPoint);
        let mut end = t.end();
        end.sort();
        assert_eq!(end, [id(&e, "b"), id(&e, "y")]);

        let t = modb_normal_pair(id(&e, "a"), id(&e, "x"), m).unwrap();
        assert!(t.steps.is_empty());
        assert_eq!(t.family, Family::OriginFirstBlock);

        let t = modb_normal_pair(id(&e, "y"), id(&e, "d"), m).unwrap();
        assert_eq!(t.steps.len(), 1);
        assert_eq!(t.steps[0].minor.format(e.names()), "y*d - c*z");
        assert_eq!(t.family, Family::TargetPoint);
    }

    #[test]
    fn rewriter_errors() {
        let e = greduit();
        let m = e.matrix(0).unwrap();
        assert_eq!(modb_normal_pair(0, 0, m), Err(RewriteError::IdenticalVariables));
        assert_eq!(modb_normal_pair(id(&e, "a"), id(&e, "b"), m), Err(RewriteError::BothXVariables));
        assert_eq!(modb_normal_pair(99, id(&e, "x"), m), Err(RewriteError::NotInMatrix(99)));
    }

    #[test]
    fn simplex_has_reduction_number_one() {
        let base = validate_complex(&[vec!["a", "b", "c"]]).unwrap();
        let e = ExtensionComplex::new(base, &[]).unwrap();
        let ring = PolyRing::degrevlex(PrimeField::default(), e.names().to_vec());
        let c = Coloration::from_classes(3, &[vec![0], vec![1], vec![2]]).unwrap();
        let g = reduction_vectors(&c, 3).unwrap();
        let b = binomial_extension_ideal(&e);
        assert!(verify_sop(&ring, &g, &b).unwrap());
        assert!(matches!(verify_sop(&ring, &g.without(0), &b), Err(ReduceError::WrongCount { .. })));
        let r = reduction_number(&ring, &g, &b, 10).unwrap();
        assert_eq!(r.reduction_number, Some(1));
    }

    #[test]
    fn greduit_pipeline_over_both_fields() {
        let e = greduit();
        let rp = PolyRing::degrevlex(PrimeField::default(), e.names().to_vec());
        let rq = PolyRing::degrevlex(Rationals, e.names().to_vec());
        let p = verify_main_theorem(&rp, &e).unwrap();
        let q = verify_main_theorem(&rq, &e).unwrap();
        assert_eq!(p.coloration, q.coloration);
        assert_eq!(p.containment, q.containment);
        assert_eq!(p.method, ColorMethod::DTree);
    }

    #[test]
    fn linear_algebra_agrees_with_groebner() {
        let e = greduit();
        let ring = PolyRing::degrevlex(PrimeField::default(), e.names().to_vec());
        let b = binomial_extension_ideal(&e);
        // a deliberately poor choice: only three of the four forms, plus a bad one
        let c = Coloration::from_classes(4, &[vec![0, 1], vec![2], vec![3], vec![4, 5, 6]]).unwrap();
        let g = reduction_vectors(&c, e.nvars()).unwrap();
        for rho in 1..=2 {
            let lin = degree_containment(&ring, &g, &b, rho).unwrap();
            let gb = containment_by_groebner(&ring, &g, &b, rho);
            assert_eq!(lin.uncovered, gb, "rho {rho}");
        }
    }
}
