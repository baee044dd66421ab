//! Buchberger's algorithm with the Gebauer–Möller pair update, normal forms,
//! ideal membership and intersection by elimination.

use std::cmp::Ordering;

use super::field::Field;
use super::hilbert::{hilbert_data, HilbertData};
use super::monomial::{Monomial, MonomialOrder};
use super::polynomial::{IntPoly, PolyRing, Polynomial};
use super::PolyError;

/// A reduced Gröbner basis: monic, leading monomials pairwise non-dividing,
/// tails fully reduced, sorted ascending by leading monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<F: Field> {
    ring: PolyRing<F>,
    polys: Vec<Polynomial<F::Elem>>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BuchbergerStats {
    pub pairs_reduced: usize,
    pub zero_reductions: usize,
    pub pairs_discarded: usize,
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct Engine<'r, F: Field> {
    ring: &'r PolyRing<F>,
    polys: Vec<Polynomial<F::Elem>>,
    leads: Vec<Monomial>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
    stats: BuchbergerStats,
}

impl<'r, F: Field> Engine<'r, F> {
    fn new(ring: &'r PolyRing<F>) -> Self {
        Engine {
            ring,
            polys: Vec::new(),
            leads: Vec::new(),
            active: Vec::new(),
            pairs: Vec::new(),
            stats: BuchbergerStats::default(),
        }
    }

    fn find_divisor(&self, m: &Monomial) -> Option<usize> {
        (0..self.polys.len()).find(|&k| self.active[k] && self.leads[k].divides(m))
    }

    /// Full normal form with respect to the active elements.
    fn reduce(&self, f: Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        let ring = self.ring;
        let field = ring.field();
        let mut rest = f;
        let mut done: Vec<(Monomial, F::Elem)> = Vec::new();
        while let Some((lm, lc)) = rest.terms.first().cloned() {
            match self.find_divisor(&lm) {
                Some(k) => {
                    let q = self.leads[k].quotient_of(&lm).expect("divisor");
                    // polys[k] is monic
                    let coef = field.neg(&lc);
                    rest = ring.combine(&rest, &self.polys[k], &coef, Some(&q));
                }
                None => {
                    done.push((lm, lc));
                    rest.terms.remove(0);
                }
            }
        }
        Polynomial { terms: done }
    }

    fn s_polynomial(&self, pair: &Pair) -> Polynomial<F::Elem> {
        let ring = self.ring;
        let field = ring.field();
        let qi = self.leads[pair.i].quotient_of(&pair.lcm).expect("lcm");
        let qj = self.leads[pair.j].quotient_of(&pair.lcm).expect("lcm");
        let left = ring.mul_term(&self.polys[pair.i], &qi, &field.one());
        let minus_one = field.neg(&field.one());
        ring.combine(&left, &self.polys[pair.j], &minus_one, Some(&qj))
    }

    /// Insert a monic polynomial whose leading monomial is not divisible by any
    /// active leading monomial, applying the coprime and chain criteria.
    fn insert(&mut self, h: Polynomial<F::Elem>) {
        let hl = h.leading_monomial().expect("nonzero").clone();
        let hidx = self.polys.len();

        let mut cands: Vec<(usize, Monomial)> = (0..self.polys.len())
            .filter(|&g| self.active[g])
            .map(|g| (g, self.leads[g].lcm(&hl)))
            .collect();
        // Deterministic processing order.
        cands.sort_by(|a, b| self.ring.cmp(&a.1, &b.1).then(a.0.cmp(&b.0)));

        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        for idx in 0..cands.len() {
            let (g1, ref l1) = cands[idx];
            let coprime = self.leads[g1].is_coprime(&hl);
            let dominated_later = cands[idx + 1..].iter().any(|(_, l2)| l2.divides(l1));
            let dominated_kept = kept.iter().any(|(_, l2, _)| l2.divides(l1));
            if coprime || (!dominated_later && !dominated_kept) {
                kept.push((g1, l1.clone(), coprime));
            } else {
                self.stats.pairs_discarded += 1;
            }
        }

        let before = self.pairs.len();
        let leads = &self.leads;
        self.pairs.retain(|p| {
            let li = leads[p.i].lcm(&hl);
            let lj = leads[p.j].lcm(&hl);
            !(hl.divides(&p.lcm) && li != p.lcm && lj != p.lcm)
        });
        self.stats.pairs_discarded += before - self.pairs.len();

        for (g, lcm, coprime) in kept {
            if coprime {
                self.stats.pairs_discarded += 1;
            } else {
                self.pairs.push(Pair { i: g, j: hidx, lcm });
            }
        }

        for g in 0..self.polys.len() {
            if self.active[g] && hl.divides(&self.leads[g]) {
                self.active[g] = false;
            }
        }
        self.polys.push(h);
        self.leads.push(hl);
        self.active.push(true);
    }

    /// Normal selection strategy: smallest lcm first.
    fn next_pair(&mut self) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let ring = self.ring;
        let mut best = 0;
        for k in 1..self.pairs.len() {
            let a = &self.pairs[k];
            let b = &self.pairs[best];
            let ord = a
                .lcm
                .degree()
                .cmp(&b.lcm.degree())
                .then_with(|| ring.cmp(&a.lcm, &b.lcm))
                .then_with(|| (a.j, a.i).cmp(&(b.j, b.i)));
            if ord == Ordering::Less {
                best = k;
            }
        }
        Some(self.pairs.swap_remove(best))
    }
}

/// Reduced Gröbner basis of the ideal generated by `generators`.
pub fn buchberger<F: Field>(ring: &PolyRing<F>, generators: &[Polynomial<F::Elem>]) -> GroebnerBasis<F> {
    buchberger_with_stats(ring, generators).0
}

pub fn buchberger_with_stats<F: Field>(
    ring: &PolyRing<F>,
    generators: &[Polynomial<F::Elem>],
) -> (GroebnerBasis<F>, BuchbergerStats) {
    let mut gens: Vec<Polynomial<F::Elem>> = generators
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| ring.monic(g))
        .collect();
    // Input order must not matter: sort by leading monomial, then full term list.
    gens.sort_by(|a, b| compare_polys(ring, a, b));
    gens.dedup();

    let mut engine = Engine::new(ring);
    for g in gens {
        let r = engine.reduce(g);
        if !r.is_zero() {
            let r = ring.monic(&r);
            engine.insert(r);
        }
    }
    while let Some(pair) = engine.next_pair() {
        engine.stats.pairs_reduced += 1;
        let s = engine.s_polynomial(&pair);
        let r = engine.reduce(s);
        if r.is_zero() {
            engine.stats.zero_reductions += 1;
        } else {
            let r = ring.monic(&r);
            engine.insert(r);
        }
    }

    let stats = engine.stats;
    let candidates: Vec<Polynomial<F::Elem>> = engine
        .polys
        .into_iter()
        .zip(engine.active)
        .filter(|(_, a)| *a)
        .map(|(p, _)| p)
        .collect();
    (GroebnerBasis::interreduce(ring.clone(), candidates), stats)
}

fn compare_polys<F: Field>(ring: &PolyRing<F>, a: &Polynomial<F::Elem>, b: &Polynomial<F::Elem>) -> Ordering {
    for (ta, tb) in a.terms.iter().zip(b.terms.iter()) {
        let o = ring.cmp(&ta.0, &tb.0);
        if o != Ordering::Equal {
            return o;
        }
        let (fa, fb) = (ring.field().format(&ta.1), ring.field().format(&tb.1));
        if fa != fb {
            return fa.cmp(&fb);
        }
    }
    a.terms.len().cmp(&b.terms.len())
}

impl<F: Field> GroebnerBasis<F> {
    /// Turn a Gröbner basis (any, not necessarily minimal) into the reduced one.
    fn interreduce(ring: PolyRing<F>, mut polys: Vec<Polynomial<F::Elem>>) -> Self {
        polys.sort_by(|a, b| ring.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
        // minimal basis: drop elements whose leading monomial is divisible by another's
        let mut minimal: Vec<Polynomial<F::Elem>> = Vec::new();
        for p in polys {
            let lm = p.leading_monomial().unwrap();
            if !minimal.iter().any(|q| q.leading_monomial().unwrap().divides(lm)) {
                minimal.push(p);
            }
        }
        let mut basis = GroebnerBasis { ring, polys: Vec::new() };
        let mut reduced = Vec::with_capacity(minimal.len());
        for k in 0..minimal.len() {
            let others: Vec<&Polynomial<F::Elem>> = minimal
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != k)
                .map(|(_, p)| p)
                .collect();
            let lead = Polynomial {
                terms: vec![minimal[k].terms[0].clone()],
            };
            let tail = Polynomial {
                terms: minimal[k].terms[1..].to_vec(),
            };
            let tail = normal_form_by(&basis.ring, &others, tail);
            let p = basis.ring.add(&lead, &tail);
            reduced.push(basis.ring.monic(&p));
        }
        basis.polys = reduced;
        basis
    }

    pub fn ring(&self) -> &PolyRing<F> {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        self.ring.order()
    }

    pub fn polys(&self) -> &[Polynomial<F::Elem>] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// Is the ideal the whole ring?
    pub fn is_unit(&self) -> bool {
        self.polys.len() == 1 && self.polys[0].leading_monomial().unwrap().is_one()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys
            .iter()
            .map(|p| p.leading_monomial().unwrap().clone())
            .collect()
    }

    /// Remainder of multivariate division by the basis.
    pub fn normal_form(&self, f: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        let refs: Vec<&Polynomial<F::Elem>> = self.polys.iter().collect();
        normal_form_by(&self.ring, &refs, f.clone())
    }

    /// Normal form of a polynomial built in `source`; the orders must agree.
    pub fn normal_form_in(
        &self,
        source: &PolyRing<F>,
        f: &Polynomial<F::Elem>,
    ) -> Result<Polynomial<F::Elem>, PolyError> {
        if source.order() != self.ring.order() {
            return Err(PolyError::OrderMismatch);
        }
        if source.nvars() != self.ring.nvars() {
            return Err(PolyError::VariableMismatch {
                expected: self.ring.nvars(),
                found: source.nvars(),
            });
        }
        Ok(self.normal_form(f))
    }

    pub fn contains(&self, f: &Polynomial<F::Elem>) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn contains_int(&self, f: &IntPoly) -> Result<bool, PolyError> {
        let p = self.ring.from_int(f)?;
        Ok(self.contains(&p))
    }

    pub fn normal_form_int(&self, f: &IntPoly) -> Result<Polynomial<F::Elem>, PolyError> {
        let p = self.ring.from_int(f)?;
        Ok(self.normal_form(&p))
    }

    pub fn hilbert_data(&self) -> HilbertData {
        hilbert_data(self.ring.nvars(), &self.leading_monomials())
    }

    /// Krull dimension from the leading-term ideal: the largest set of variables
    /// supporting no leading monomial. `-1` for the unit ideal.
    pub fn krull_dimension_lt(&self) -> i64 {
        if self.is_unit() {
            return -1;
        }
        krull_dimension_of_supports(self.ring.nvars(), &self.leading_monomials())
    }

    /// Every S-pair reduces to zero modulo the basis.
    pub fn is_groebner(&self) -> bool {
        let ring = &self.ring;
        let field = ring.field();
        for i in 0..self.polys.len() {
            for j in i + 1..self.polys.len() {
                let li = self.polys[i].leading_monomial().unwrap();
                let lj = self.polys[j].leading_monomial().unwrap();
                let l = li.lcm(lj);
                let qi = li.quotient_of(&l).unwrap();
                let qj = lj.quotient_of(&l).unwrap();
                let a = ring.mul_term(&self.polys[i], &qi, &field.one());
                let minus_one = field.neg(&field.one());
                let s = ring.combine(&a, &self.polys[j], &minus_one, Some(&qj));
                if !self.contains(&s) {
                    return false;
                }
            }
        }
        true
    }

    /// Basis elements formatted with the ring's variable names.
    pub fn format(&self) -> Vec<String> {
        self.polys.iter().map(|p| self.ring.format(p)).collect()
    }
}

impl<F: Field> PartialEq for GroebnerBasis<F> {
    fn eq(&self, other: &Self) -> bool {
        self.ring.order() == other.ring.order()
            && self.ring.nvars() == other.ring.nvars()
            && self.polys == other.polys
    }
}

fn normal_form_by<F: Field>(
    ring: &PolyRing<F>,
    divisors: &[&Polynomial<F::Elem>],
    f: Polynomial<F::Elem>,
) -> Polynomial<F::Elem> {
    let field = ring.field();
    let mut rest = f;
    let mut done = Vec::new();
    while let Some((lm, lc)) = rest.terms.first().cloned() {
        let hit = divisors
            .iter()
            .find(|g| g.leading_monomial().map(|l| l.divides(&lm)).unwrap_or(false));
        match hit {
            Some(g) => {
                let gl = g.leading_monomial().unwrap();
                let q = gl.quotient_of(&lm).unwrap();
                let glc = g.leading_coefficient().unwrap();
                let coef = field.neg(&field.div(&lc, glc).expect("nonzero"));
                rest = ring.combine(&rest, g, &coef, Some(&q));
            }
            None => {
                done.push((lm, lc));
                rest.terms.remove(0);
            }
        }
    }
    Polynomial { terms: done }
}

/// Largest variable subset containing the support of no monomial in `monomials`,
/// by branch and bound on a minimum hitting set of the supports.
pub fn krull_dimension_of_supports(nvars: usize, monomials: &[Monomial]) -> i64 {
    if monomials.iter().any(|m| m.is_one()) {
        return -1;
    }
    let mut supports: Vec<Vec<usize>> = monomials.iter().map(|m| m.support().collect()).collect();
    supports.sort();
    supports.dedup();
    // drop supports containing another support
    let mut minimal: Vec<Vec<usize>> = Vec::new();
    supports.sort_by_key(|s| s.len());
    for s in supports {
        if !minimal.iter().any(|t| t.iter().all(|v| s.contains(v))) {
            minimal.push(s);
        }
    }

    fn search(supports: &[Vec<usize>], hit: &mut Vec<bool>, size: usize, best: &mut usize) {
        if size >= *best {
            return;
        }
        let open = supports.iter().find(|s| !s.iter().any(|&v| hit[v]));
        match open {
            None => *best = size,
            Some(s) => {
                for &v in s {
                    hit[v] = true;
                    search(supports, hit, size + 1, best);
                    hit[v] = false;
                }
            }
        }
    }

    let mut hit = vec![false; nvars];
    let mut best = nvars + 1;
    search(&minimal, &mut hit, 0, &mut best);
    nvars as i64 - best as i64
}

/// Ideal membership of `f` in the ideal generated by `generators`.
pub fn ideal_membership<F: Field>(
    ring: &PolyRing<F>,
    generators: &[Polynomial<F::Elem>],
    f: &Polynomial<F::Elem>,
) -> bool {
    buchberger(ring, generators).contains(f)
}

/// Generators of `I ∩ J` by eliminating an auxiliary variable `t` from
/// `t*I + (1 - t)*J`. The result is the reduced Gröbner basis of the
/// intersection in `ring`.
pub fn ideal_intersection<F: Field>(
    ring: &PolyRing<F>,
    left: &[Polynomial<F::Elem>],
    right: &[Polynomial<F::Elem>],
) -> GroebnerBasis<F> {
    let n = ring.nvars();
    let mut names = Vec::with_capacity(n + 1);
    names.push(fresh_name(ring.names()));
    names.extend(ring.names().iter().cloned());
    let mut ranking = vec![0usize];
    ranking.extend(ring.order().ranking().iter().map(|&v| v + 1));
    let order = MonomialOrder::with_ranking(ring.order().kind(), ranking)
        .expect("permutation")
        .eliminating(1);
    let big = PolyRing::new(ring.field().clone(), names, order).expect("consistent ring");
    let field = ring.field();

    let lift = |p: &Polynomial<F::Elem>| -> Polynomial<F::Elem> {
        big.from_terms(p.terms.iter().map(|(m, c)| (m.prepend(0), c.clone())))
    };
    let t = Monomial::var(n + 1, 0);
    let mut gens = Vec::new();
    for p in left {
        gens.push(big.mul_term(&lift(p), &t, &field.one()));
    }
    for p in right {
        let q = lift(p);
        let tq = big.mul_term(&q, &t, &field.one());
        gens.push(big.sub(&q, &tq));
    }
    let gb = buchberger(&big, &gens);
    let eliminated: Vec<Polynomial<F::Elem>> = gb
        .polys
        .iter()
        .filter(|p| p.terms.iter().all(|(m, _)| m.exponent(0) == 0))
        .map(|p| ring.from_terms(p.terms.iter().map(|(m, c)| (m.drop_first(), c.clone()))))
        .collect();
    buchberger(ring, &eliminated)
}

fn fresh_name(names: &[String]) -> String {
    let mut candidate = "t".to_string();
    while names.contains(&candidate) {
        candidate.push('_');
    }
    candidate
}
