//! T-nomial coefficients `C(n, k)_T` by several independent routes:
//!
//! * factorial ratio `n_T! / (k_T! (n-k)_T!)`,
//! * the Pascal-like recurrence (numeric or symbolic in `Z[p, q]`),
//! * the product closed form,
//! * symmetric sums of the box weights `lambda_i = q^(i-1) p^(n-i)`,
//! * partial fractions over `mu_s = q^s p^(k-s)`.
//!
//! Also multinomials and the composition-sum inverse coefficients.

mod triangle;

pub use triangle::Triangle;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{
    binomial, choose2, exact_div, int_pow, rational_pow, sign_pow, BiPoly, Rational,
};
use crate::error::{Error, Result};
use crate::tseq::{compositions_of, SeqParams, TermSequence};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CoeffQuery {
    pub params: SeqParams,
    pub n: u64,
    pub k: u64,
}

impl CoeffQuery {
    pub fn new(params: SeqParams, n: u64, k: u64) -> Self {
        Self { params, n, k }
    }

    fn require_n_ge_k(&self) -> Result<()> {
        if self.k > self.n {
            Err(Error::Precondition(format!(
                "k = {} exceeds n = {}",
                self.k, self.n
            )))
        } else {
            Ok(())
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultinomialQuery {
    pub params: SeqParams,
    pub n: u64,
    pub parts: Vec<u64>,
}

/// Which computation route to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Route {
    Factorial,
    Recurrence,
    Product,
    LambdaMultiset,
    LambdaSubset,
    PartialFractions,
}

impl Route {
    pub const ALL: [Route; 6] = [
        Route::Factorial,
        Route::Recurrence,
        Route::Product,
        Route::LambdaMultiset,
        Route::LambdaSubset,
        Route::PartialFractions,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Route::Factorial => "factorial",
            Route::Recurrence => "recurrence",
            Route::Product => "product",
            Route::LambdaMultiset => "lambda-multiset",
            Route::LambdaSubset => "lambda-subset",
            Route::PartialFractions => "partial-fractions",
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Route {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Route::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown route `{s}`")))
    }
}

/// `C(n, k)_T` via the chosen route. Routes that need extra conditions on
/// `(p, q)` fail with [`Error::Degenerate`] outside them.
pub fn coeff_by_route(route: Route, query: &CoeffQuery) -> Result<BigInt> {
    query.require_n_ge_k()?;
    let CoeffQuery { params, n, k } = *query;
    match route {
        Route::Factorial => coeff_factorial(query),
        Route::Recurrence => coeff_recurrence(query),
        Route::Product => coeff_product(query),
        Route::LambdaMultiset => coeff_lambda_multiset(&params, n - k + 1, k),
        Route::LambdaSubset => {
            let weight = (params.p_big() * params.q_big()).pow(choose2(k) as u32);
            let sum = coeff_lambda_subset(&params, n, k)?;
            if weight.is_zero() {
                return Err(Error::Degenerate(format!(
                    "(pq)^C({k},2) vanishes for {params}"
                )));
            }
            exact_div(&sum, &weight)
        }
        Route::PartialFractions => {
            let r = coeff_partial_fractions(&params, n as i64, k)?;
            if !r.is_integer() {
                return Err(Error::Divisibility {
                    dividend: r.numer().clone(),
                    divisor: r.denom().clone(),
                });
            }
            Ok(r.to_integer())
        }
    }
}

/// F-nomial coefficient of any sequence by the factorial ratio.
pub fn fnomial_factorial<S: TermSequence + ?Sized>(seq: &S, n: u64, k: u64) -> Result<BigInt> {
    if k > n {
        return Err(Error::Precondition(format!("k = {k} exceeds n = {n}")));
    }
    let den = seq.factorial(k) * seq.factorial(n - k);
    if den.is_zero() {
        return Err(Error::Degenerate(format!(
            "a sequence term up to max({k}, {}) vanishes",
            n - k
        )));
    }
    exact_div(&seq.factorial(n), &den)
}

pub fn coeff_factorial(query: &CoeffQuery) -> Result<BigInt> {
    fnomial_factorial(&query.params, query.n, query.k)
}

/// Recurrence route. Builds a fresh triangle; use [`Tnomials`] to reuse one.
pub fn coeff_recurrence(query: &CoeffQuery) -> Result<BigInt> {
    query.require_n_ge_k()?;
    Tnomials::new(query.params, query.n)?.coeff(query.n, query.k)
}

/// `C(n, k)` in `Z[p, q]`, homogeneous of degree `k (n - k)`.
pub fn coeff_symbolic(n: u64, k: u64) -> Result<BiPoly> {
    if k > n {
        return Err(Error::Precondition(format!("k = {k} exceeds n = {n}")));
    }
    symbolic_triangle(n)?.get(n, k)
}

pub fn symbolic_triangle(n_max: u64) -> Result<Triangle<BiPoly>> {
    Triangle::new(BiPoly::p(), BiPoly::q(), n_max)
}

/// Product closed form, accumulated in exact rationals.
pub fn coeff_product(query: &CoeffQuery) -> Result<BigInt> {
    query.require_n_ge_k()?;
    let CoeffQuery { params, n, k } = *query;
    let (p, q) = (params.p(), params.q());
    if p == q {
        return Ok(binomial(n, k) * int_pow(p, k * (n - k)));
    }
    let mut acc = Rational::one();
    for i in 1..=k {
        let num = int_pow(p, n - i + 1) - int_pow(q, n - i + 1);
        let den = int_pow(p, i) - int_pow(q, i);
        if den.is_zero() {
            return Err(Error::Degenerate(format!("p^{i} = q^{i} for {params}")));
        }
        acc *= Rational::new(num, den);
    }
    if !acc.is_integer() {
        return Err(Error::Divisibility {
            dividend: acc.numer().clone(),
            divisor: acc.denom().clone(),
        });
    }
    Ok(acc.to_integer())
}

/// Box weights `lambda_i = q^(i-1) p^(n-i)`, `i = 1..=n`.
pub fn lambda_weights(params: &SeqParams, n: u64) -> Vec<BigInt> {
    (1..=n)
        .map(|i| int_pow(params.q(), i - 1) * int_pow(params.p(), n - i))
        .collect()
}

/// Sum over multisets `1 <= b_1 <= ... <= b_k <= n` of `lambda_b1 ... lambda_bk`
/// (the complete homogeneous symmetric polynomial), equal to `C(n+k-1, k)_T`.
pub fn coeff_lambda_multiset(params: &SeqParams, n: u64, k: u64) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::Precondition("need at least one box".into()));
    }
    // h[j] = h_j(lambda_1..lambda_i) after processing box i
    let mut h = vec![BigInt::zero(); k as usize + 1];
    h[0] = BigInt::one();
    for w in lambda_weights(params, n) {
        for j in 1..=k as usize {
            let add = &w * &h[j - 1];
            h[j] += add;
        }
    }
    Ok(h.pop().expect("nonempty"))
}

/// Sum over subsets `1 <= b_1 < ... < b_k <= n` of `lambda_b1 ... lambda_bk`
/// (the elementary symmetric polynomial), equal to `C(n, k)_T (pq)^C(k,2)`.
pub fn coeff_lambda_subset(params: &SeqParams, n: u64, k: u64) -> Result<BigInt> {
    if k > n {
        return Err(Error::Precondition(format!("k = {k} exceeds n = {n}")));
    }
    let mut e = vec![BigInt::zero(); k as usize + 1];
    e[0] = BigInt::one();
    for w in lambda_weights(params, n) {
        for j in (1..=k as usize).rev() {
            let add = &w * &e[j - 1];
            e[j] += add;
        }
    }
    Ok(e.pop().expect("nonempty"))
}

/// `mu_s = q^s p^(k-s)` for `s = 0..=k`, rejecting coincident values.
pub fn partial_fraction_nodes(params: &SeqParams, k: u64) -> Result<Vec<BigInt>> {
    if params.p() == params.q() {
        return Err(Error::Degenerate(format!("p = q for {params}")));
    }
    let mu: Vec<BigInt> = (0..=k)
        .map(|s| int_pow(params.q(), s) * int_pow(params.p(), k - s))
        .collect();
    for i in 0..mu.len() {
        for j in i + 1..mu.len() {
            if mu[i] == mu[j] {
                return Err(Error::Degenerate(format!(
                    "mu_{i} = mu_{j} = {} for {params}, k = {k}",
                    mu[i]
                )));
            }
        }
    }
    Ok(mu)
}

/// `sum_i (-1)^(k-i) mu_i^n / (prod_{j<i} (mu_i - mu_j) prod_{j>i} (mu_j - mu_i))`.
///
/// Defined for every integer `n`, including `n < k` and negative `n`; for
/// `n >= k` it equals `C(n, k)_T`.
pub fn coeff_partial_fractions(params: &SeqParams, n: i64, k: u64) -> Result<Rational> {
    let mu = partial_fraction_nodes(params, k)?;
    let mut sum = Rational::zero();
    for (i, mi) in mu.iter().enumerate() {
        let mut den = BigInt::one();
        for (j, mj) in mu.iter().enumerate() {
            if j < i {
                den *= mi - mj;
            } else if j > i {
                den *= mj - mi;
            }
        }
        let power = rational_pow(&Rational::from_integer(mi.clone()), n)
            .map_err(|_| Error::Degenerate(format!("mu_{i} = 0 raised to negative power {n}")))?;
        let term =
            power / Rational::from_integer(den) * Rational::from_integer(sign_pow(k - i as u64));
        sum += term;
    }
    Ok(sum)
}

/// Numeric T-nomials for one sequence, backed by a memoized triangle bounded
/// by `n_max`.
#[derive(Debug)]
pub struct Tnomials {
    params: SeqParams,
    triangle: Triangle<BigInt>,
}

impl Tnomials {
    pub fn new(params: SeqParams, n_max: u64) -> Result<Self> {
        Ok(Self {
            params,
            triangle: Triangle::new(params.p_big(), params.q_big(), n_max)?,
        })
    }

    pub fn params(&self) -> &SeqParams {
        &self.params
    }

    pub fn n_max(&self) -> u64 {
        self.triangle.n_max()
    }

    /// `C(n, k)_T`, zero for `k > n`.
    pub fn coeff(&self, n: u64, k: u64) -> Result<BigInt> {
        self.triangle.get(n, k)
    }

    pub fn row(&self, n: u64) -> Result<Vec<BigInt>> {
        self.triangle.row(n)
    }

    /// `C(n; i_1, ..., i_s) = C(n, i_1) C(n - i_1, i_2) ...`.
    pub fn multinomial(&self, n: u64, parts: &[u64]) -> Result<BigInt> {
        let total: u64 = parts.iter().sum();
        if total > n {
            return Err(Error::Precondition(format!(
                "parts {parts:?} sum to {total} > n = {n}"
            )));
        }
        let mut remaining = n;
        let mut acc = BigInt::one();
        for &i in parts {
            acc *= self.coeff(remaining, i)?;
            remaining -= i;
        }
        Ok(acc)
    }

    /// Inverse coefficient from the signed sum of multinomials over all
    /// compositions of `n - k`; `1` on the diagonal.
    pub fn inverse(&self, n: u64, k: u64) -> Result<BigInt> {
        if k > n {
            return Err(Error::Precondition(format!("k = {k} exceeds n = {n}")));
        }
        if n == k {
            return Ok(BigInt::one());
        }
        let d = n - k;
        let mut sum = BigInt::zero();
        for s in 1..=d {
            let mut inner = BigInt::zero();
            for c in compositions_of(d, s as usize) {
                inner += self.multinomial(d, c.parts())?;
            }
            sum += sign_pow(s) * inner;
        }
        Ok(self.coeff(n, k)? * sum)
    }
}

pub fn multinomial(query: &MultinomialQuery) -> Result<BigInt> {
    Tnomials::new(query.params, query.n)?.multinomial(query.n, &query.parts)
}

pub fn coeff_inverse(query: &CoeffQuery) -> Result<BigInt> {
    query.require_n_ge_k()?;
    Tnomials::new(query.params, query.n)?.inverse(query.n, query.k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(p: i64, q: i64) -> SeqParams {
        SeqParams::new(p, q)
    }

    fn query(p: i64, q: i64, n: u64, k: u64) -> CoeffQuery {
        CoeffQuery::new(t(p, q), n, k)
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn factorial_route() {
        // Gaussian integers 1, 3, 7, 15: 1*3*7*15 / (1*3 * 1*3) = 35
        assert_eq!(coeff_factorial(&query(1, 2, 4, 2)).unwrap(), big(35));
        // 1*5*19*65 / (1*5)^2 = 6175 / 25
        assert_eq!(coeff_factorial(&query(2, 3, 4, 2)).unwrap(), big(247));
        for n in 0..6 {
            assert_eq!(coeff_factorial(&query(2, 3, n, 0)).unwrap(), big(1));
            assert_eq!(coeff_factorial(&query(2, 3, n, n)).unwrap(), big(1));
        }
    }

    #[test]
    fn factorial_route_rejects_vanishing_terms() {
        // p = -q makes 2_T = 0
        let err = coeff_factorial(&query(1, -1, 4, 2)).unwrap_err();
        assert!(matches!(err, Error::Degenerate(_)));
        assert!(matches!(
            coeff_factorial(&query(1, 2, 2, 3)),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn recurrence_route() {
        assert_eq!(coeff_recurrence(&query(2, 3, 3, 1)).unwrap(), big(19));
        assert_eq!(coeff_recurrence(&query(2, 3, 4, 2)).unwrap(), big(247));
        assert_eq!(coeff_recurrence(&query(1, 1, 5, 2)).unwrap(), big(10));
    }

    #[test]
    fn symbolic_route() {
        let (p, q) = (BiPoly::p(), BiPoly::q());
        assert_eq!(coeff_symbolic(2, 1).unwrap(), &p + &q);
        assert_eq!(coeff_symbolic(3, 1).unwrap(), crate::tseq::term_symbolic(3));
        let expected = [
            BiPoly::monomial(big(1), 4, 0),
            BiPoly::monomial(big(1), 3, 1),
            BiPoly::monomial(big(2), 2, 2),
            BiPoly::monomial(big(1), 1, 3),
            BiPoly::monomial(big(1), 0, 4),
        ]
        .iter()
        .fold(BiPoly::zero(), |a, m| &a + m);
        let c42 = coeff_symbolic(4, 2).unwrap();
        assert_eq!(c42, expected);
        assert_eq!(c42.eval(&big(2), &big(3)), big(247));
        assert_eq!(c42.to_string(), "q^4 + p*q^3 + 2*p^2*q^2 + p^3*q + p^4");
    }

    #[test]
    fn product_route() {
        assert_eq!(coeff_product(&query(2, 3, 4, 2)).unwrap(), big(247));
        assert_eq!(coeff_product(&query(2, 2, 4, 2)).unwrap(), big(96));
        for n in 0..8 {
            for k in 0..=n {
                assert_eq!(coeff_product(&query(1, 1, n, k)).unwrap(), binomial(n, k));
            }
        }
        let err = coeff_product(&query(2, -2, 4, 2)).unwrap_err();
        assert!(matches!(err, Error::Degenerate(_)));
    }

    #[test]
    fn lambda_multiset_route() {
        // lambda = (2, 3): 4 + 6 + 9
        assert_eq!(coeff_lambda_multiset(&t(2, 3), 2, 2).unwrap(), big(19));
        assert_eq!(coeff_lambda_multiset(&t(2, 3), 5, 0).unwrap(), big(1));
        assert_eq!(coeff_lambda_multiset(&t(1, 1), 3, 2).unwrap(), big(6));
        assert!(coeff_lambda_multiset(&t(1, 1), 0, 2).is_err());
    }

    #[test]
    fn lambda_subset_route() {
        // lambda = (4, 6, 9): 24 + 36 + 54 = 114 = 19 * 6
        assert_eq!(lambda_weights(&t(2, 3), 3), vec![big(4), big(6), big(9)]);
        assert_eq!(coeff_lambda_subset(&t(2, 3), 3, 2).unwrap(), big(114));
        let n = 5;
        let expected = (int_pow(2, 1) * int_pow(3, 1)).pow(choose2(n) as u32);
        assert_eq!(coeff_lambda_subset(&t(2, 3), n, n).unwrap(), expected);
        assert_eq!(coeff_lambda_subset(&t(1, 1), 6, 3).unwrap(), big(20));
        assert_eq!(
            coeff_by_route(Route::LambdaSubset, &query(2, 3, 3, 2)).unwrap(),
            big(19)
        );
    }

    #[test]
    fn partial_fractions_route() {
        // mu = (4, 6, 9): 64/10 - 216/6 + 729/15 = 19
        assert_eq!(coeff_partial_fractions(&t(2, 3), 3, 2).unwrap(), rat(19, 1));
        // n = k collapses to 1: 16/10 - 36/6 + 81/15
        assert_eq!(coeff_partial_fractions(&t(2, 3), 2, 2).unwrap(), rat(1, 1));
        assert_eq!(coeff_partial_fractions(&t(1, 2), 4, 2).unwrap(), rat(35, 1));
    }

    #[test]
    fn partial_fractions_below_k_and_negative_n() {
        // C(n, k) vanishes as a polynomial in q^n for 0 <= n < k
        for n in 0..3 {
            assert_eq!(coeff_partial_fractions(&t(2, 3), n, 3).unwrap(), rat(0, 1));
        }
        // n = -1, k = 1: (q^-1 - p^-1) / (q - p) = -1/(pq)
        assert_eq!(
            coeff_partial_fractions(&t(2, 3), -1, 1).unwrap(),
            rat(-1, 6)
        );
    }

    #[test]
    fn partial_fractions_degenerate() {
        assert!(matches!(
            coeff_partial_fractions(&t(2, 2), 3, 1),
            Err(Error::Degenerate(_))
        ));
        // p = -q: mu_0 = mu_2
        assert!(matches!(
            coeff_partial_fractions(&t(1, -1), 3, 2),
            Err(Error::Degenerate(_))
        ));
        // p = 0: mu_0 = mu_1 = 0 once k >= 2
        assert!(matches!(
            coeff_partial_fractions(&t(0, 3), 4, 2),
            Err(Error::Degenerate(_))
        ));
        assert!(matches!(
            coeff_partial_fractions(&t(0, 3), -1, 1),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn multinomials() {
        let q = |p, q, n, parts: &[u64]| MultinomialQuery {
            params: t(p, q),
            n,
            parts: parts.to_vec(),
        };
        assert_eq!(multinomial(&q(2, 3, 4, &[2])).unwrap(), big(247));
        assert_eq!(multinomial(&q(1, 1, 4, &[2, 2])).unwrap(), big(6));
        assert_eq!(multinomial(&q(2, 3, 3, &[1, 1, 1])).unwrap(), big(95));
        assert!(matches!(
            multinomial(&q(2, 3, 3, &[2, 2])),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn inverse_coefficients() {
        for n in 0..6 {
            assert_eq!(coeff_inverse(&query(2, 3, n, n)).unwrap(), big(1));
        }
        // Pascal: (-1)^(n-k) C(n, k)
        for n in 0..8 {
            for k in 0..=n {
                let expected = sign_pow(n - k) * binomial(n, k);
                assert_eq!(coeff_inverse(&query(1, 1, n, k)).unwrap(), expected);
            }
        }
        // T(2,2), n - k = 2: A_2(2) = 3 labelled acyclic digraphs on 2 nodes
        let tn = Tnomials::new(t(2, 2), 6).unwrap();
        assert_eq!(tn.inverse(5, 3).unwrap(), big(3) * tn.coeff(5, 3).unwrap());
    }

    #[test]
    fn route_parse_roundtrip() {
        for r in Route::ALL {
            assert_eq!(r.name().parse::<Route>().unwrap(), r);
        }
        assert!("bogus".parse::<Route>().is_err());
    }
}
