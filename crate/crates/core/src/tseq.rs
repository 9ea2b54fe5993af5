//! Tileable sequences: the integer sequences whose generating function is
//! `scale * x / ((1 - p x)(1 - q x))`.
//!
//! Terms are indexed from 1; term 0 is defined as 0, matching the missing
//! constant term of the generating function.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{exact_div, int_pow, series_product, BiPoly, SeriesFactor};
use crate::error::{Error, Result};

/// Parameters `(p, q)` and the first term `scale` of a tileable sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SeqParams {
    p: i64,
    q: i64,
    scale: u64,
}

impl SeqParams {
    pub fn new(p: i64, q: i64) -> Self {
        Self { p, q, scale: 1 }
    }

    pub fn with_scale(p: i64, q: i64, scale: u64) -> Result<Self> {
        if scale == 0 {
            return Err(Error::Precondition("scale must be at least 1".into()));
        }
        Ok(Self { p, q, scale })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn scale(&self) -> u64 {
        self.scale
    }

    /// The same sequence with unit first term.
    pub fn unscaled(&self) -> Self {
        Self::new(self.p, self.q)
    }

    pub fn p_big(&self) -> BigInt {
        self.p.into()
    }

    pub fn q_big(&self) -> BigInt {
        self.q.into()
    }

    /// Both parameters at least 1, as the counting interpretations require.
    pub fn is_positive(&self) -> bool {
        self.p >= 1 && self.q >= 1
    }
}

impl fmt::Display for SeqParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T({}, {})", self.p, self.q)?;
        if self.scale != 1 {
            write!(f, " x{}", self.scale)?;
        }
        Ok(())
    }
}

/// An integer sequence `n -> n_F` with `0_F = 0`.
///
/// Implemented by tileable sequences and by the alpha-Fibonacci family, which
/// is tileable only over a quadratic extension.
pub trait TermSequence {
    fn term(&self, n: u64) -> BigInt;

    /// `n_F! = n_F * (n-1)_F * ... * 1_F`, with `0_F! = 1`.
    fn factorial(&self, n: u64) -> BigInt {
        (1..=n).map(|i| self.term(i)).product()
    }

    /// `n_F (n-1)_F ... (n-k+1)_F`.
    fn falling(&self, n: u64, k: u64) -> BigInt {
        if k > n {
            return BigInt::zero();
        }
        (0..k).map(|i| self.term(n - i)).product()
    }
}

impl TermSequence for SeqParams {
    fn term(&self, n: u64) -> BigInt {
        term_closed(self, n)
    }
}

/// `1, alpha, alpha^2 + 1, ...` with `F(n+1) = alpha F(n) + F(n-1)`.
/// `alpha = 1` gives the Fibonacci numbers, `alpha = 2` the Pell numbers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AlphaFibonacci {
    alpha: u64,
}

impl AlphaFibonacci {
    pub fn new(alpha: u64) -> Result<Self> {
        if alpha == 0 {
            return Err(Error::Precondition("alpha must be positive".into()));
        }
        Ok(Self { alpha })
    }

    pub fn alpha(&self) -> u64 {
        self.alpha
    }

    /// Terms `0..=n_max`.
    pub fn terms(&self, n_max: u64) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero()];
        let (mut prev, mut cur) = (BigInt::zero(), BigInt::one());
        let alpha = BigInt::from(self.alpha);
        for _ in 0..n_max {
            out.push(cur.clone());
            let next = &alpha * &cur + &prev;
            prev = std::mem::replace(&mut cur, next);
        }
        out
    }
}

impl TermSequence for AlphaFibonacci {
    fn term(&self, n: u64) -> BigInt {
        self.terms(n).pop().unwrap_or_default()
    }

    fn factorial(&self, n: u64) -> BigInt {
        self.terms(n).into_iter().skip(1).product()
    }
}

/// Closed form: `(q^n - p^n)/(q - p)` for `p != q`, `n q^(n-1)` otherwise,
/// times `scale`.
pub fn term_closed(params: &SeqParams, n: u64) -> BigInt {
    if n == 0 {
        return BigInt::zero();
    }
    let base = if params.p == params.q {
        BigInt::from(n) * int_pow(params.q, n - 1)
    } else {
        let num = int_pow(params.q, n) - int_pow(params.p, n);
        exact_div(&num, &BigInt::from(params.q - params.p)).expect("q - p divides q^n - p^n")
    };
    base * params.scale
}

/// `sum_{i=1..n} q^(n-i) p^(i-1)`, times `scale`.
pub fn term_sum(params: &SeqParams, n: u64) -> BigInt {
    let s: BigInt = (1..=n)
        .map(|i| int_pow(params.q, n - i) * int_pow(params.p, i - 1))
        .sum();
    s * params.scale
}

/// The same sum with `p` and `q` indeterminate; homogeneous of degree `n - 1`.
pub fn term_symbolic(n: u64) -> BiPoly {
    (1..=n).fold(BiPoly::zero(), |acc, i| {
        &acc + &BiPoly::monomial(BigInt::one(), (i - 1) as u32, (n - i) as u32)
    })
}

/// Coefficients `0..order` of the generating function expansion.
pub fn terms_from_generating_function(params: &SeqParams, order: usize) -> Result<Vec<BigInt>> {
    let factors = [
        SeriesFactor::Poly(vec![BigInt::zero(), BigInt::from(params.scale)]),
        SeriesFactor::InverseLinear(params.p_big()),
        SeriesFactor::InverseLinear(params.q_big()),
    ];
    Ok(series_product(&factors, order, &())?.into_coeffs())
}

/// `(k+m)_T == p^m k_T + q^k m_T`.
pub fn check_split_recurrence(params: &SeqParams, k: u64, m: u64) -> bool {
    let lhs = term_closed(params, k + m);
    let rhs = int_pow(params.p, m) * term_closed(params, k)
        + int_pow(params.q, k) * term_closed(params, m);
    lhs == rhs
}

/// Ordered tuple of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<u64>,
}

impl Composition {
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::Precondition(
                "composition needs at least one part".into(),
            ));
        }
        if parts.contains(&0) {
            return Err(Error::Precondition(format!(
                "composition parts must be positive: {parts:?}"
            )));
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn total(&self) -> u64 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(">")
    }
}

/// `n_T == sum_i p^(b_{i+1}+...+b_k) q^(b_1+...+b_{i-1}) (b_i)_T` where `n`
/// is the total of the composition.
pub fn check_composition_recurrence(params: &SeqParams, c: &Composition) -> bool {
    let total = c.total();
    let mut before = 0u64;
    let mut rhs = BigInt::zero();
    for &b in c.parts() {
        let after = total - before - b;
        rhs += int_pow(params.p, after) * int_pow(params.q, before) * term_closed(params, b);
        before += b;
    }
    term_closed(params, total) == rhs
}

/// Compositions of `n` into exactly `parts` positive parts, in lexicographic
/// order.
pub fn compositions_of(n: u64, parts: usize) -> Compositions {
    let first = if parts == 0 || (parts as u64) > n {
        None
    } else {
        let mut v = vec![1u64; parts];
        v[parts - 1] = n - (parts as u64 - 1);
        Some(v)
    };
    Compositions { next: first }
}

/// All compositions of `n`, grouped by number of parts.
pub fn all_compositions(n: u64) -> impl Iterator<Item = Composition> {
    (1..=n as usize).flat_map(move |s| compositions_of(n, s))
}

/// Iterator returned by [`compositions_of`].
#[derive(Clone, Debug)]
pub struct Compositions {
    next: Option<Vec<u64>>,
}

impl Iterator for Compositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        let current = self.next.take()?;
        self.next = successor(&current);
        Some(Composition { parts: current })
    }
}

fn successor(parts: &[u64]) -> Option<Vec<u64>> {
    let len = parts.len();
    // Rightmost position whose suffix can give up one unit while every
    // suffix part stays positive.
    let mut suffix_sum = 0u64;
    for i in (0..len.saturating_sub(1)).rev() {
        suffix_sum += parts[i + 1];
        let suffix_len = (len - 1 - i) as u64;
        if suffix_sum > suffix_len {
            let mut next = parts[..=i].to_vec();
            next[i] += 1;
            let rest = suffix_sum - 1;
            next.extend(std::iter::repeat_n(1, suffix_len as usize - 1));
            next.push(rest - (suffix_len - 1));
            return Some(next);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| x.into()).collect()
    }

    // Direct evaluation used as the oracle for the closed form.
    fn power_difference(p: i64, q: i64, n: u32) -> i64 {
        (q.pow(n) - p.pow(n)) / (q - p)
    }

    #[test]
    fn closed_form_examples() {
        let t = SeqParams::new(2, 3);
        let got: Vec<_> = (1..=5).map(|n| term_closed(&t, n)).collect();
        let oracle: Vec<_> = (1..=5)
            .map(|n| BigInt::from(power_difference(2, 3, n)))
            .collect();
        assert_eq!(got, oracle);
        assert_eq!(got, ints(&[1, 5, 19, 65, 211]));

        let t = SeqParams::new(2, 2);
        let got: Vec<_> = (1..=4).map(|n| term_closed(&t, n)).collect();
        assert_eq!(got, ints(&[1, 4, 12, 32]));

        assert_eq!(term_closed(&SeqParams::new(1, 1), 7), BigInt::from(7));
        assert_eq!(term_closed(&SeqParams::new(1, 1), 0), BigInt::from(0));
    }

    #[test]
    fn sum_form_examples() {
        assert_eq!(term_sum(&SeqParams::new(2, 3), 3), BigInt::from(19));
        assert_eq!(term_sum(&SeqParams::new(1, 2), 4), BigInt::from(15));
        assert_eq!(term_sum(&SeqParams::new(1, 1), 5), BigInt::from(5));
    }

    #[test]
    fn scale_multiplies_terms() {
        let t = SeqParams::with_scale(2, 3, 3).unwrap();
        assert_eq!(term_closed(&t, 3), BigInt::from(57));
        assert_eq!(term_sum(&t, 3), BigInt::from(57));
        assert!(SeqParams::with_scale(2, 3, 0).is_err());
    }

    #[test]
    fn symbolic_terms() {
        assert_eq!(term_symbolic(1), BiPoly::one());
        assert_eq!(term_symbolic(2), &BiPoly::p() + &BiPoly::q());
        let (p, q) = (BiPoly::p(), BiPoly::q());
        let expected = &(&p.pow(2) + &(&p * &q)) + &q.pow(2);
        assert_eq!(term_symbolic(3), expected);
        assert!(term_symbolic(0).is_zero());
    }

    #[test]
    fn generating_function_matches_closed_form() {
        for p in -3..=5 {
            for q in -3..=5 {
                for scale in 1..=2 {
                    let t = SeqParams::with_scale(p, q, scale).unwrap();
                    let gf = terms_from_generating_function(&t, 16).unwrap();
                    for (n, c) in gf.iter().enumerate() {
                        assert_eq!(c, &term_closed(&t, n as u64), "{t} n={n}");
                    }
                }
            }
        }
    }

    #[test]
    fn split_recurrence_examples() {
        assert!(check_split_recurrence(&SeqParams::new(2, 3), 2, 1));
        assert!(check_split_recurrence(&SeqParams::new(1, 1), 4, 9));
        assert!(check_split_recurrence(&SeqParams::new(1, 2), 1, 2));
    }

    #[test]
    fn composition_recurrence_examples() {
        let t = SeqParams::new(2, 3);
        assert!(check_composition_recurrence(
            &t,
            &Composition::new(vec![1, 1, 1]).unwrap()
        ));
        assert!(check_composition_recurrence(
            &t,
            &Composition::new(vec![2, 1]).unwrap()
        ));
        assert!(check_composition_recurrence(
            &t,
            &Composition::new(vec![6]).unwrap()
        ));
    }

    #[test]
    fn composition_validation() {
        assert!(Composition::new(vec![]).is_err());
        assert!(Composition::new(vec![2, 0]).is_err());
        assert_eq!(Composition::new(vec![2, 3]).unwrap().total(), 5);
    }

    fn parts(c: Vec<Composition>) -> Vec<Vec<u64>> {
        c.into_iter().map(|c| c.parts().to_vec()).collect()
    }

    #[test]
    fn composition_enumeration() {
        assert_eq!(
            parts(compositions_of(3, 2).collect()),
            vec![vec![1, 2], vec![2, 1]]
        );
        assert_eq!(parts(compositions_of(4, 1).collect()), vec![vec![4]]);
        assert_eq!(compositions_of(6, 3).count(), 10);
        assert_eq!(compositions_of(2, 3).count(), 0);
        assert_eq!(compositions_of(3, 0).count(), 0);
        assert_eq!(all_compositions(7).count(), 64);
    }

    // Exhaustive oracle: every tuple in [1, n]^parts with the right sum.
    fn brute_compositions(n: u64, parts: usize) -> Vec<Vec<u64>> {
        let mut out = Vec::new();
        let mut cur = vec![1u64; parts];
        loop {
            if cur.iter().sum::<u64>() == n {
                out.push(cur.clone());
            }
            let mut i = parts;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if cur[i] < n {
                    cur[i] += 1;
                    break;
                }
                cur[i] = 1;
            }
        }
    }

    #[test]
    fn enumeration_matches_brute_force_in_order() {
        for n in 1..=7 {
            for s in 1..=n as usize {
                let got = parts(compositions_of(n, s).collect());
                assert_eq!(got, brute_compositions(n, s), "n={n} s={s}");
                assert_eq!(
                    BigInt::from(got.len()),
                    crate::algebra::binomial(n - 1, s as u64 - 1)
                );
            }
        }
    }

    #[test]
    fn alpha_fibonacci_terms() {
        assert_eq!(
            AlphaFibonacci::new(1).unwrap().terms(6),
            ints(&[0, 1, 1, 2, 3, 5, 8])
        );
        assert_eq!(
            AlphaFibonacci::new(2).unwrap().terms(4),
            ints(&[0, 1, 2, 5, 12])
        );
        assert_eq!(
            AlphaFibonacci::new(1).unwrap().factorial(5),
            BigInt::from(30)
        );
        assert!(AlphaFibonacci::new(0).is_err());
    }

    #[test]
    fn falling_factorial() {
        let t = SeqParams::new(1, 2);
        assert_eq!(t.falling(4, 2), BigInt::from(105));
        assert_eq!(t.falling(4, 0), BigInt::from(1));
        assert_eq!(t.falling(2, 3), BigInt::from(0));
    }
}
