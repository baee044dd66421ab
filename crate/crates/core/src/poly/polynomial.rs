//! Sparse multivariate polynomials.
//!
//! [`IntPoly`] is a field-free presentation with small integer coefficients;
//! the combinatorial modules build their generators in this form. A
//! [`PolyRing`] turns them into [`Polynomial`]s over a concrete field, sorted
//! by its monomial order.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use super::field::Field;
use super::monomial::{Monomial, MonomialOrder, OrderKind};
use super::PolyError;

/// Polynomial with integer coefficients, kept in a canonical order
/// (descending degree, then descending exponent vector).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IntPoly {
    nvars: usize,
    terms: Vec<(Monomial, i64)>,
}

impl IntPoly {
    pub fn zero(nvars: usize) -> Self {
        IntPoly {
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, i64)>) -> Self {
        let mut acc: BTreeMap<Vec<u16>, (Monomial, i64)> = BTreeMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), nvars);
            let entry = acc
                .entry(m.exponents().to_vec())
                .or_insert_with(|| (m.clone(), 0));
            entry.1 += c;
        }
        let mut terms: Vec<(Monomial, i64)> = acc.into_values().filter(|(_, c)| *c != 0).collect();
        terms.sort_by(|a, b| canonical_cmp(&b.0, &a.0));
        IntPoly { nvars, terms }
    }

    pub fn monomial(m: Monomial) -> Self {
        let nvars = m.nvars();
        IntPoly::from_terms(nvars, [(m, 1)])
    }

    /// Product of variables, as a monomial generator.
    pub fn product(nvars: usize, vars: &[usize]) -> Self {
        IntPoly::monomial(Monomial::from_vars(nvars, vars))
    }

    pub fn variable(nvars: usize, var: usize) -> Self {
        IntPoly::product(nvars, &[var])
    }

    /// `u1*u2 - v1*v2`.
    pub fn binomial(nvars: usize, plus: [usize; 2], minus: [usize; 2]) -> Self {
        IntPoly::from_terms(
            nvars,
            [
                (Monomial::from_vars(nvars, &plus), 1),
                (Monomial::from_vars(nvars, &minus), -1),
            ],
        )
    }

    /// Sum of the listed variables.
    pub fn linear_form(nvars: usize, vars: &[usize]) -> Self {
        IntPoly::from_terms(nvars, vars.iter().map(|&v| (Monomial::var(nvars, v), 1)))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Monomial, i64)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].1 == 1
    }

    /// Total degree of the highest-degree term (0 for the zero polynomial).
    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms
            .windows(2)
            .all(|w| w[0].0.degree() == w[1].0.degree())
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        IntPoly::from_terms(
            self.nvars,
            self.terms
                .iter()
                .cloned()
                .chain(other.terms.iter().map(|(m, c)| (m.clone(), -c))),
        )
    }

    pub fn mul_monomial(&self, m: &Monomial) -> IntPoly {
        IntPoly::from_terms(self.nvars, self.terms.iter().map(|(t, c)| (t.mul(m), *c)))
    }

    /// Variables occurring in some term, ascending.
    pub fn variables(&self) -> Vec<usize> {
        let mut seen = vec![false; self.nvars];
        for (m, _) in &self.terms {
            for v in m.support() {
                seen[v] = true;
            }
        }
        (0..self.nvars).filter(|&v| seen[v]).collect()
    }

    pub fn format(&self, names: &[String]) -> String {
        format_terms(
            self.terms.iter().map(|(m, c)| {
                let neg = *c < 0;
                (m, neg, c.unsigned_abs().to_string())
            }),
            names,
        )
    }
}

fn canonical_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| a.exponents().cmp(b.exponents()))
}

fn format_terms<'a>(terms: impl Iterator<Item = (&'a Monomial, bool, String)>, names: &[String]) -> String {
    let mut out = String::new();
    for (i, (m, neg, abs)) in terms.enumerate() {
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if m.is_one() {
            out.push_str(&abs);
        } else {
            if abs != "1" {
                out.push_str(&abs);
                out.push('*');
            }
            out.push_str(&m.format(names));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// A polynomial over a field: terms sorted strictly descending by the order of
/// the ring it was built in, no zero coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial<E> {
    pub(crate) terms: Vec<(Monomial, E)>,
}

impl<E> Polynomial<E> {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, E)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coefficient(&self) -> Option<&E> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }
}

/// Polynomial ring `K[x_0..x_{n-1}]` with a fixed monomial order.
#[derive(Clone, Debug)]
pub struct PolyRing<F: Field> {
    field: F,
    order: MonomialOrder,
    names: Vec<String>,
}

impl<F: Field> PolyRing<F> {
    pub fn new(field: F, names: Vec<String>, order: MonomialOrder) -> Result<Self, PolyError> {
        if order.nvars() != names.len() {
            return Err(PolyError::VariableMismatch {
                expected: names.len(),
                found: order.nvars(),
            });
        }
        Ok(PolyRing { field, order, names })
    }

    /// Ring with the default degree-reverse-lexicographic order on the names as given.
    pub fn degrevlex(field: F, names: Vec<String>) -> Self {
        let order = MonomialOrder::new(OrderKind::DegRevLex, names.len());
        PolyRing { field, order, names }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    /// Same variables and field, different order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Self, PolyError> {
        PolyRing::new(self.field.clone(), self.names.clone(), order)
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.compare(a, b)
    }

    pub fn one(&self) -> Polynomial<F::Elem> {
        Polynomial {
            terms: vec![(Monomial::one(self.nvars()), self.field.one())],
        }
    }

    pub fn var(&self, index: usize) -> Polynomial<F::Elem> {
        Polynomial {
            terms: vec![(Monomial::var(self.nvars(), index), self.field.one())],
        }
    }

    pub fn term(&self, m: Monomial, c: F::Elem) -> Polynomial<F::Elem> {
        if self.field.is_zero(&c) {
            Polynomial::zero()
        } else {
            Polynomial { terms: vec![(m, c)] }
        }
    }

    /// Build from arbitrary terms: combines duplicates, drops zeros, sorts.
    pub fn from_terms(&self, terms: impl IntoIterator<Item = (Monomial, F::Elem)>) -> Polynomial<F::Elem> {
        let mut v: Vec<(Monomial, F::Elem)> = terms.into_iter().collect();
        v.sort_by(|a, b| self.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, F::Elem)> = Vec::with_capacity(v.len());
        for (m, c) in v {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = self.field.add(lc, &c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !self.field.is_zero(c));
        Polynomial { terms: out }
    }

    pub fn from_int(&self, p: &IntPoly) -> Result<Polynomial<F::Elem>, PolyError> {
        if p.nvars() != self.nvars() {
            return Err(PolyError::VariableMismatch {
                expected: self.nvars(),
                found: p.nvars(),
            });
        }
        Ok(self.from_terms(p.terms().iter().map(|(m, c)| (m.clone(), self.field.from_i64(*c)))))
    }

    /// Re-sort a polynomial built in a ring with different order but the same variables.
    pub fn adopt(&self, p: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        self.from_terms(p.terms.iter().cloned())
    }

    pub fn add(&self, a: &Polynomial<F::Elem>, b: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        self.combine(a, b, &self.field.one(), None)
    }

    pub fn sub(&self, a: &Polynomial<F::Elem>, b: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        let minus_one = self.field.neg(&self.field.one());
        self.combine(a, b, &minus_one, None)
    }

    pub fn neg(&self, a: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        Polynomial {
            terms: a.terms.iter().map(|(m, c)| (m.clone(), self.field.neg(c))).collect(),
        }
    }

    pub fn scale(&self, a: &Polynomial<F::Elem>, c: &F::Elem) -> Polynomial<F::Elem> {
        if self.field.is_zero(c) {
            return Polynomial::zero();
        }
        Polynomial {
            terms: a.terms.iter().map(|(m, x)| (m.clone(), self.field.mul(x, c))).collect(),
        }
    }

    pub fn mul_term(&self, a: &Polynomial<F::Elem>, m: &Monomial, c: &F::Elem) -> Polynomial<F::Elem> {
        if self.field.is_zero(c) {
            return Polynomial::zero();
        }
        // monomial multiplication preserves the order
        Polynomial {
            terms: a
                .terms
                .iter()
                .map(|(t, x)| (t.mul(m), self.field.mul(x, c)))
                .collect(),
        }
    }

    pub fn mul(&self, a: &Polynomial<F::Elem>, b: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        let mut acc = Polynomial::zero();
        for (m, c) in &b.terms {
            let part = self.mul_term(a, m, c);
            acc = self.add(&acc, &part);
        }
        acc
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self, a: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        match a.leading_coefficient() {
            None => Polynomial::zero(),
            Some(lc) if self.field.is_one(lc) => a.clone(),
            Some(lc) => {
                let inv = self.field.inv(lc).expect("nonzero leading coefficient");
                self.scale(a, &inv)
            }
        }
    }

    /// `a + coef * m * b` (when `m` is given) or `a + coef * b`, by a sorted merge.
    pub(crate) fn combine(
        &self,
        a: &Polynomial<F::Elem>,
        b: &Polynomial<F::Elem>,
        coef: &F::Elem,
        m: Option<&Monomial>,
    ) -> Polynomial<F::Elem> {
        let f = &self.field;
        let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
        let mut i = 0;
        let mut j = 0;
        let shifted = |k: usize| -> Monomial {
            match m {
                Some(m) => b.terms[k].0.mul(m),
                None => b.terms[k].0.clone(),
            }
        };
        let mut bj = if b.terms.is_empty() { None } else { Some(shifted(0)) };
        while i < a.terms.len() || bj.is_some() {
            let ord = match (&bj, a.terms.get(i)) {
                (None, _) => Ordering::Greater,
                (Some(_), None) => Ordering::Less,
                (Some(bm), Some((am, _))) => self.cmp(am, bm),
            };
            match ord {
                Ordering::Greater => {
                    out.push(a.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = f.mul(&b.terms[j].1, coef);
                    out.push((bj.take().unwrap(), c));
                    j += 1;
                    bj = if j < b.terms.len() { Some(shifted(j)) } else { None };
                }
                Ordering::Equal => {
                    let c = f.add(&a.terms[i].1, &f.mul(&b.terms[j].1, coef));
                    if !f.is_zero(&c) {
                        out.push((a.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                    bj = if j < b.terms.len() { Some(shifted(j)) } else { None };
                }
            }
        }
        Polynomial { terms: out }
    }

    pub fn format(&self, p: &Polynomial<F::Elem>) -> String {
        format_terms(
            p.terms.iter().map(|(m, c)| {
                let s = self.field.format(c);
                match s.strip_prefix('-') {
                    Some(abs) => (m, true, abs.to_string()),
                    None => (m, false, s),
                }
            }),
            &self.names,
        )
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars).map(|i| format!("x{i}")).collect();
        write!(f, "{}", self.format(&names))
    }
}
