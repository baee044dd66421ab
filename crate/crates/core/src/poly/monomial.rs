//! Exponent-vector monomials and monomial orders.

use std::cmp::Ordering;
use std::fmt;

/// A monomial over a fixed ambient variable list, stored as an exponent vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Box<[u16]>,
    degree: u32,
    // bit (i % 128) set whenever exps[i] > 0; a cheap divisibility filter
    mask: u128,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars].into_boxed_slice(),
            degree: 0,
            mask: 0,
        }
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[index] = 1;
        Self::from_exponents(exps)
    }

    pub fn from_exponents(exps: Vec<u16>) -> Self {
        let degree = exps.iter().map(|&e| e as u32).sum();
        let mask = mask_of(&exps);
        Monomial {
            exps: exps.into_boxed_slice(),
            degree,
            mask,
        }
    }

    /// Product of the listed variables (repetitions allowed).
    pub fn from_vars(nvars: usize, vars: &[usize]) -> Self {
        let mut exps = vec![0u16; nvars];
        for &v in vars {
            exps[v] += 1;
        }
        Self::from_exponents(exps)
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn exponent(&self, var: usize) -> u16 {
        self.exps[var]
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Variables with positive exponent, ascending.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    /// Variables listed with multiplicity, ascending.
    pub fn factors(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.degree as usize);
        for (i, &e) in self.exps.iter().enumerate() {
            for _ in 0..e {
                out.push(i);
            }
        }
        out
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps: Vec<u16> = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| a + b)
            .collect();
        Monomial {
            exps: exps.into_boxed_slice(),
            degree: self.degree + other.degree,
            mask: self.mask | other.mask,
        }
    }

    /// Does `self` divide `other`?
    pub fn divides(&self, other: &Monomial) -> bool {
        if self.degree > other.degree || self.mask & !other.mask != 0 {
            return false;
        }
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps: Vec<u16> = other
            .exps
            .iter()
            .zip(self.exps.iter())
            .map(|(b, a)| b - a)
            .collect();
        Some(Monomial::from_exponents(exps))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Vec<u16> = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| *a.max(b))
            .collect();
        Monomial::from_exponents(exps)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Same monomial with one extra leading variable slot (exponent `e`).
    pub fn prepend(&self, e: u16) -> Monomial {
        let mut exps = Vec::with_capacity(self.exps.len() + 1);
        exps.push(e);
        exps.extend_from_slice(&self.exps);
        Monomial::from_exponents(exps)
    }

    /// Drop the first variable slot.
    pub fn drop_first(&self) -> Monomial {
        Monomial::from_exponents(self.exps[1..].to_vec())
    }

    pub fn format(&self, names: &[String]) -> String {
        if self.degree == 0 {
            return "1".to_string();
        }
        let mut out = String::new();
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !out.is_empty() {
                out.push('*');
            }
            out.push_str(&names[i]);
            if e > 1 {
                out.push('^');
                out.push_str(&e.to_string());
            }
        }
        out
    }
}

fn mask_of(exps: &[u16]) -> u128 {
    let mut mask = 0u128;
    for (i, &e) in exps.iter().enumerate() {
        if e > 0 {
            mask |= 1u128 << (i % 128);
        }
    }
    mask
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps)
    }
}

/// All monomials of the given degree in `nvars` variables, in descending lex order.
pub fn monomials_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
    fn rec(nvars: usize, pos: usize, left: u32, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if pos + 1 == nvars {
            cur[pos] = left as u16;
            out.push(Monomial::from_exponents(cur.clone()));
            cur[pos] = 0;
            return;
        }
        for e in (0..=left).rev() {
            cur[pos] = e as u16;
            rec(nvars, pos + 1, left - e, cur, out);
        }
        cur[pos] = 0;
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if degree == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    let mut cur = vec![0u16; nvars];
    rec(nvars, 0, degree, &mut cur, &mut out);
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    DegLex,
    DegRevLex,
}

impl OrderKind {
    pub fn parse(name: &str) -> Option<OrderKind> {
        match name.to_ascii_lowercase().as_str() {
            "lex" => Some(OrderKind::Lex),
            "deglex" | "grlex" => Some(OrderKind::DegLex),
            "degrevlex" | "grevlex" => Some(OrderKind::DegRevLex),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            OrderKind::Lex => "lex",
            OrderKind::DegLex => "deglex",
            OrderKind::DegRevLex => "degrevlex",
        }
    }
}

/// A monomial order: a kind applied to a variable ranking.
///
/// `ranking[r]` is the variable with rank `r`; rank 0 is the largest variable.
/// When `eliminate > 0` the total degree in the first `eliminate` ranked
/// variables is compared before anything else, which makes the order an
/// elimination order for those variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    ranking: Vec<usize>,
    eliminate: usize,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, nvars: usize) -> Self {
        MonomialOrder {
            kind,
            ranking: (0..nvars).collect(),
            eliminate: 0,
        }
    }

    /// Order with an explicit ranking; `ranking` must be a permutation of `0..n`.
    pub fn with_ranking(kind: OrderKind, ranking: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; ranking.len()];
        for &v in &ranking {
            if v >= ranking.len() || seen[v] {
                return None;
            }
            seen[v] = true;
        }
        Some(MonomialOrder {
            kind,
            ranking,
            eliminate: 0,
        })
    }

    pub fn eliminating(mut self, count: usize) -> Self {
        self.eliminate = count.min(self.ranking.len());
        self
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn nvars(&self) -> usize {
        self.ranking.len()
    }

    pub fn ranking(&self) -> &[usize] {
        &self.ranking
    }

    pub fn eliminated(&self) -> usize {
        self.eliminate
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        if self.eliminate > 0 {
            let da: u32 = self.ranking[..self.eliminate]
                .iter()
                .map(|&v| a.exps[v] as u32)
                .sum();
            let db: u32 = self.ranking[..self.eliminate]
                .iter()
                .map(|&v| b.exps[v] as u32)
                .sum();
            if da != db {
                return da.cmp(&db);
            }
        }
        match self.kind {
            OrderKind::Lex => self.lex(a, b),
            OrderKind::DegLex => a.degree.cmp(&b.degree).then_with(|| self.lex(a, b)),
            OrderKind::DegRevLex => a.degree.cmp(&b.degree).then_with(|| {
                for &v in self.ranking.iter().rev() {
                    let (ea, eb) = (a.exps[v], b.exps[v]);
                    if ea != eb {
                        return eb.cmp(&ea);
                    }
                }
                Ordering::Equal
            }),
        }
    }

    fn lex(&self, a: &Monomial, b: &Monomial) -> Ordering {
        for &v in &self.ranking {
            let (ea, eb) = (a.exps[v], b.exps[v]);
            if ea != eb {
                return ea.cmp(&eb);
            }
        }
        Ordering::Equal
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn degrevlex_textbook_cases() {
        let o = MonomialOrder::new(OrderKind::DegRevLex, 3);
        // x*z^2 < y^3 ? same degree; last variable z: 2 vs 0 -> y^3 bigger
        assert_eq!(o.compare(&m(&[1, 0, 2]), &m(&[0, 3, 0])), Ordering::Less);
        assert_eq!(o.compare(&m(&[1, 1, 0]), &m(&[0, 0, 3])), Ordering::Less);
        assert_eq!(o.compare(&m(&[2, 0, 0]), &m(&[1, 1, 0])), Ordering::Greater);
    }

    #[test]
    fn lex_and_elimination() {
        let lex = MonomialOrder::new(OrderKind::Lex, 3);
        assert_eq!(lex.compare(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
        let elim = MonomialOrder::new(OrderKind::DegRevLex, 3).eliminating(1);
        assert_eq!(elim.compare(&m(&[1, 0, 0]), &m(&[0, 4, 4])), Ordering::Greater);
    }

    #[test]
    fn divisibility_and_lcm() {
        let a = m(&[1, 0, 2]);
        let b = m(&[2, 1, 2]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(a.quotient_of(&b).unwrap(), m(&[1, 1, 0]));
        assert_eq!(a.lcm(&m(&[0, 3, 1])), m(&[1, 3, 2]));
        assert!(m(&[1, 0, 0]).is_coprime(&m(&[0, 2, 1])));
    }

    #[test]
    fn monomials_of_degree_count() {
        // C(n + d - 1, d)
        assert_eq!(monomials_of_degree(4, 2).len(), 10);
        assert_eq!(monomials_of_degree(3, 3).len(), 10);
        assert_eq!(monomials_of_degree(5, 0).len(), 1);
    }

    #[test]
    fn ranking_must_be_permutation() {
        assert!(MonomialOrder::with_ranking(OrderKind::Lex, vec![0, 0, 1]).is_none());
        assert!(MonomialOrder::with_ranking(OrderKind::Lex, vec![2, 0, 1]).is_some());
    }
}
