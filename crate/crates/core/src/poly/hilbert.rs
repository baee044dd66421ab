//! Hilbert series of monomial ideals.

use super::monomial::Monomial;

/// Hilbert series data of `S/I` for a homogeneous ideal `I`, computed from its
/// leading-term ideal. The series is `numerator(t) / (1 - t)^nvars`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    pub nvars: usize,
    /// Krull dimension; `-1` for the unit ideal.
    pub dimension: i64,
    pub codimension: i64,
    pub degree: i64,
    /// Coefficients of the unreduced numerator, lowest power first.
    pub numerator: Vec<i64>,
    /// Numerator after cancelling all factors of `(1 - t)`.
    pub reduced_numerator: Vec<i64>,
}

impl HilbertData {
    /// `dim_K (S/I)_d`.
    pub fn hilbert_function(&self, d: usize) -> i64 {
        // coefficient of t^d in numerator / (1-t)^n
        let mut total = 0i64;
        for (k, &c) in self.numerator.iter().enumerate() {
            if k > d || c == 0 {
                continue;
            }
            total += c * monomial_count(self.nvars, d - k);
        }
        total
    }

    /// Numerator formatted as a polynomial in `t`.
    pub fn format_numerator(&self, reduced: bool) -> String {
        let coeffs = if reduced { &self.reduced_numerator } else { &self.numerator };
        format_t_poly(coeffs)
    }
}

// number of monomials of degree `d` in `n` variables: C(d + n - 1, n - 1)
fn monomial_count(n: usize, d: usize) -> i64 {
    if n == 0 {
        return if d == 0 { 1 } else { 0 };
    }
    let mut r: i128 = 1;
    for i in 0..(n - 1) {
        r = r * (d + n - 1 - i) as i128 / (i + 1) as i128;
    }
    r as i64
}

fn format_t_poly(coeffs: &[i64]) -> String {
    let mut out = String::new();
    for (k, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let abs = c.unsigned_abs();
        if out.is_empty() {
            if c < 0 {
                out.push('-');
            }
        } else {
            out.push_str(if c < 0 { " - " } else { " + " });
        }
        let mono = match k {
            0 => String::new(),
            1 => "t".to_string(),
            _ => format!("t^{k}"),
        };
        if mono.is_empty() {
            out.push_str(&abs.to_string());
        } else if abs == 1 {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{abs}*{mono}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.len() > 1 && *v.last().unwrap() == 0 {
        v.pop();
    }
    if v.is_empty() {
        v.push(0);
    }
    v
}

fn poly_add(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, &c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, &c) in b.iter().enumerate() {
        out[i] += c;
    }
    out
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn minimalize(gens: &[Monomial]) -> Vec<Monomial> {
    let mut sorted: Vec<Monomial> = gens.to_vec();
    sorted.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.exponents().cmp(b.exponents())));
    sorted.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for m in sorted {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out
}

/// Numerator `N(t)` of the Hilbert series `N(t) / (1 - t)^n` of `S / (gens)`.
pub fn hilbert_numerator(nvars: usize, gens: &[Monomial]) -> Vec<i64> {
    trim(numerator_rec(nvars, minimalize(gens)))
}

fn numerator_rec(nvars: usize, gens: Vec<Monomial>) -> Vec<i64> {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|g| g.is_one()) {
        return vec![0];
    }
    let coprime = gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    if coprime {
        let mut acc = vec![1];
        for g in &gens {
            let mut f = vec![0; g.degree() as usize + 1];
            f[0] = 1;
            f[g.degree() as usize] -= 1;
            acc = poly_mul(&acc, &f);
        }
        return acc;
    }
    // pivot on the variable occurring in the most generators
    let mut counts = vec![0usize; nvars];
    for g in &gens {
        for v in g.support() {
            counts[v] += 1;
        }
    }
    let mut pivot = 0;
    for v in 1..nvars {
        if counts[v] > counts[pivot] {
            pivot = v;
        }
    }
    let x = Monomial::var(nvars, pivot);

    // I + (x)
    let mut plus: Vec<Monomial> = gens.iter().filter(|g| g.exponent(pivot) == 0).cloned().collect();
    plus.push(x.clone());
    // I : x
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| {
            if g.exponent(pivot) > 0 {
                x.quotient_of(g).unwrap()
            } else {
                g.clone()
            }
        })
        .collect();

    let a = numerator_rec(nvars, minimalize(&plus));
    let b = numerator_rec(nvars, minimalize(&colon));
    let tb = poly_mul(&[0, 1], &b);
    poly_add(&a, &tb)
}

/// Dimension, codimension and degree of `S / (gens)`.
///
/// For the unit ideal the convention is dimension `-1`, codimension `n + 1`
/// and degree `0`.
pub fn hilbert_data(nvars: usize, gens: &[Monomial]) -> HilbertData {
    let numerator = hilbert_numerator(nvars, gens);
    if numerator.iter().all(|&c| c == 0) {
        return HilbertData {
            nvars,
            dimension: -1,
            codimension: nvars as i64 + 1,
            degree: 0,
            numerator,
            reduced_numerator: vec![0],
        };
    }
    let mut reduced = numerator.clone();
    let mut divisions = 0usize;
    while reduced.iter().sum::<i64>() == 0 && divisions < nvars {
        // divide by (1 - t): q_k = sum_{i <= k} n_i
        let mut q = Vec::with_capacity(reduced.len());
        let mut run = 0;
        for &c in &reduced[..reduced.len() - 1] {
            run += c;
            q.push(run);
        }
        reduced = trim(q);
        divisions += 1;
    }
    let dimension = (nvars - divisions) as i64;
    HilbertData {
        nvars,
        dimension,
        codimension: nvars as i64 - dimension,
        degree: reduced.iter().sum(),
        numerator,
        reduced_numerator: reduced,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn polynomial_ring_and_hypersurface() {
        let h = hilbert_data(3, &[]);
        assert_eq!((h.dimension, h.degree), (3, 1));
        let h = hilbert_data(3, &[m(&[1, 1, 1])]);
        assert_eq!((h.dimension, h.codimension, h.degree), (2, 1, 3));
        assert_eq!(h.format_numerator(false), "1 - t^3");
        assert_eq!(h.format_numerator(true), "1 + t + t^2");
    }

    #[test]
    fn unit_ideal_convention() {
        let h = hilbert_data(4, &[Monomial::one(4)]);
        assert_eq!((h.dimension, h.codimension, h.degree), (-1, 5, 0));
    }

    #[test]
    fn coordinate_cross() {
        // (xy) in 2 vars: two lines
        let h = hilbert_data(2, &[m(&[1, 1])]);
        assert_eq!((h.dimension, h.degree), (1, 2));
        assert_eq!(h.hilbert_function(5), 2);
        // (xy, xz, yz): three coordinate points in P^2
        let h = hilbert_data(3, &[m(&[1, 1, 0]), m(&[1, 0, 1]), m(&[0, 1, 1])]);
        assert_eq!((h.dimension, h.degree), (1, 3));
        assert_eq!(h.hilbert_function(0), 1);
        assert_eq!(h.hilbert_function(1), 3);
        assert_eq!(h.hilbert_function(4), 3);
    }

    #[test]
    fn hilbert_function_counts_standard_monomials() {
        let gens = [m(&[2, 0, 0]), m(&[1, 1, 0]), m(&[0, 1, 2])];
        let h = hilbert_data(3, &gens);
        for d in 0..7u32 {
            let count = super::super::monomial::monomials_of_degree(3, d)
                .into_iter()
                .filter(|x| !gens.iter().any(|g| g.divides(x)))
                .count() as i64;
            assert_eq!(h.hilbert_function(d as usize), count, "degree {d}");
        }
    }
}
