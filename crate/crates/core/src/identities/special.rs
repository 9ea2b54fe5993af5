//! Specializations: the Gaussian case `p = 1`, the alpha-Fibonacci family
//! in the quadratic ring, and the partial-fraction normalization.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::gf::{into_result, negate_if};
use super::report::{IdentityId, IdentityReport, Location, ReportBuilder, ReportParams};
use crate::algebra::{choose2, int_pow, series_product, QuadElem, Rational, Ring, SeriesFactor};
use crate::error::{Error, Result};
use crate::tnomial::{coeff_partial_fractions, fnomial_factorial, Tnomials, Triangle};
use crate::tseq::{AlphaFibonacci, SeqParams};

/// Whether the partial-fraction sum at `n = k` is exactly `1`.
pub fn equal1_check(params: &SeqParams, k: u64) -> Result<bool> {
    Ok(coeff_partial_fractions(params, k as i64, k)? == Rational::one())
}

fn gaussian_params(q: i64) -> SeqParams {
    SeqParams::new(1, q)
}

/// `prod_{j=1..i} (q^j - 1)`.
fn q_pochhammer(q: i64, i: u64) -> BigInt {
    (1..=i).map(|j| int_pow(q, j) - 1).product()
}

/// Alternating sum
/// `sum_i (-1)^i q^((k-i)(n-i) - C(k-i,2)) / (prod_{j<=i} (q^j-1) prod_{j<=k-i} (q^j-1))`,
/// checked against `C(n, k)` at `T(1, q)`.
pub fn gaussian_explicit(q: i64, n: u64, k: u64) -> Result<BigInt> {
    if k > n {
        return Err(Error::Precondition(format!("k = {k} exceeds n = {n}")));
    }
    let mut sum = Rational::zero();
    for i in 0..=k {
        let den = q_pochhammer(q, i) * q_pochhammer(q, k - i);
        if den.is_zero() {
            return Err(Error::Degenerate(format!(
                "q^j = 1 for some j <= {k} at q = {q}"
            )));
        }
        let e = (k - i) * (n - i) - choose2(k - i);
        let term = Rational::new(int_pow(q, e), den);
        sum += negate_if(i % 2 == 1, term);
    }
    let expected = Tnomials::new(gaussian_params(q), n)?.coeff(n, k)?;
    if sum != Rational::from_integer(expected.clone()) {
        return Err(Error::IdentityViolation {
            identity: IdentityId::GaussianExplicit.to_string(),
            location: Location::nk(n, k).to_string(),
            lhs: sum.to_string(),
            rhs: expected.to_string(),
        });
    }
    Ok(expected)
}

/// Coefficients of `Phi_n(x) = prod_{s<n} (x - q^s)`, lowest degree first.
pub fn phi_polynomial(q: i64, n: u64) -> Result<Vec<BigInt>> {
    let factors: Vec<_> = (0..n)
        .map(|s| SeriesFactor::Poly(vec![-int_pow(q, s), BigInt::one()]))
        .collect();
    Ok(series_product(&factors, n as usize + 1, &())?.into_coeffs())
}

pub(crate) fn check_phi_inversion(q: i64, n: u64, b: &mut ReportBuilder) -> Result<()> {
    let tn = Tnomials::new(gaussian_params(q), n)?;
    let phi = phi_polynomial(q, n)?;
    for k in 0..=n {
        let d = n - k;
        let expected = negate_if(d % 2 == 1, tn.coeff(n, k)? * int_pow(q, choose2(d)));
        b.check(Location::nk(n, k), &phi[k as usize], &expected);
    }
    // x^n = sum_k C(n, k) Phi_k(x)
    let mut back = vec![BigInt::zero(); n as usize + 1];
    for k in 0..=n {
        let c = tn.coeff(n, k)?;
        for (j, v) in phi_polynomial(q, k)?.into_iter().enumerate() {
            back[j] += &c * v;
        }
    }
    for (j, v) in back.iter().enumerate() {
        let want = if j as u64 == n {
            BigInt::one()
        } else {
            BigInt::zero()
        };
        b.check(Location::nk(n, j as u64), v, &want);
    }
    Ok(())
}

/// Expansion of `Phi_n` in powers of `x` and of `x^n` in the `Phi_k` basis.
pub fn phi_inversion(q: i64, n: u64) -> Result<bool> {
    let mut b = ReportBuilder::new(IdentityId::PhiInversion, ReportParams::Gaussian(q), (n, n));
    check_phi_inversion(q, n, &mut b)?;
    Ok(b.finish().holds())
}

/// The inverse coefficients at `p = 1` against
/// `(-1)^(n-k) q^C(n-k,2) C(n, k)` for `k <= n <= n_max`.
pub fn gaussian_inverse(q: i64, n_max: u64) -> Result<IdentityReport> {
    let tn = Tnomials::new(gaussian_params(q), n_max)?;
    let mut b = ReportBuilder::new(
        IdentityId::GaussianInverse,
        ReportParams::Gaussian(q),
        (n_max, n_max),
    );
    for n in 0..=n_max {
        for k in 0..=n {
            let d = n - k;
            let expected = negate_if(d % 2 == 1, int_pow(q, choose2(d)) * tn.coeff(n, k)?);
            b.check(Location::nk(n, k), &tn.inverse(n, k)?, &expected);
        }
    }
    Ok(b.finish())
}

/// Three reports for the alpha-Fibonacci family: the splitting recurrence of
/// the sequence, the Pascal-like recurrence of its F-nomials, and the
/// quadratic-ring generating functions whose coefficients are integers.
pub fn fibonomial_suite(alpha: u64, n_max: u64) -> Result<[IdentityReport; 3]> {
    let seq = AlphaFibonacci::new(alpha)?;
    let f = seq.terms(n_max + 1);
    let params = ReportParams::Alpha(alpha);
    let range = (n_max, n_max);

    let mut split = ReportBuilder::new(IdentityId::FibonacciSplit, params.clone(), range);
    for n in 2..=n_max {
        for k in 1..n {
            let m = n - k;
            let rhs = &f[(m - 1) as usize] * &f[k as usize] + &f[(k + 1) as usize] * &f[m as usize];
            split.check(Location::nk(n, k).with_m(m), &f[n as usize], &rhs);
        }
    }

    let fib = |n: u64, k: u64| fnomial_factorial(&seq, n, k);
    let quad = Triangle::new(QuadElem::phi_plus(alpha), QuadElem::phi_minus(alpha), n_max)?;
    let mut rec = ReportBuilder::new(IdentityId::FibonomialRecurrence, params.clone(), range);
    for n in 1..=n_max {
        for k in 1..n {
            let m = n - k;
            let rhs =
                &f[(m - 1) as usize] * fib(n - 1, k - 1)? + &f[(k + 1) as usize] * fib(n - 1, k)?;
            rec.check(Location::nk(n, k), &fib(n, k)?, &rhs);
        }
        // the T-nomial recurrence with p, q the two roots lands on the same values
        for k in 0..=n {
            let integer = QuadElem::integer(fib(n, k)?, alpha);
            rec.check(Location::nk(n, k), &quad.get(n, k)?, &integer);
        }
    }

    let mut gf = ReportBuilder::new(IdentityId::FibonomialGeneratingFunction, params, range);
    let (plus, minus) = (QuadElem::phi_plus(alpha), QuadElem::phi_minus(alpha));
    for n in 0..=n_max {
        let factors = (1..=n)
            .map(|s| {
                Ok(SeriesFactor::linear(
                    &minus.ring_pow(s - 1)?.ring_mul(&plus.ring_pow(n - s)?)?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        let series = series_product(&factors, n as usize + 1, &alpha)?;
        for k in 0..=n {
            let want = QuadElem::integer(negate_if(choose2(k + 1) % 2 == 1, fib(n, k)?), alpha);
            gf.check(Location::nk(n, k), &series.coeffs()[k as usize], &want);
        }
    }
    // x^k / prod_{s=0..k} (1 - phi+^(k-s) phi-^s x) = sum_n C(n, k) x^n
    for k in 0..n_max {
        let factors = (0..=k)
            .map(|s| {
                Ok(SeriesFactor::InverseLinear(
                    plus.ring_pow(k - s)?.ring_mul(&minus.ring_pow(s)?)?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        let order = (n_max - k + 1) as usize;
        let series = series_product(&factors, order, &alpha)?;
        for j in 0..order as u64 {
            let want = QuadElem::integer(fib(k + j, k)?, alpha);
            gf.check(Location::nk(k + j, k), &series.coeffs()[j as usize], &want);
        }
    }

    Ok([split.finish(), rec.finish(), gf.finish()])
}

/// [`fibonomial_suite`] collapsed to an error on the first violation.
pub fn fibonomial_check(alpha: u64, n_max: u64) -> Result<()> {
    for r in fibonomial_suite(alpha, n_max)? {
        into_result(r)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partial_fraction_unity_examples() {
        assert!(equal1_check(&SeqParams::new(2, 3), 2).unwrap());
        assert!(equal1_check(&SeqParams::new(2, 3), 0).unwrap());
        assert!(equal1_check(&SeqParams::new(1, 2), 3).unwrap());
        assert!(matches!(
            equal1_check(&SeqParams::new(2, 2), 2),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn gaussian_explicit_examples() {
        assert_eq!(gaussian_explicit(2, 4, 2).unwrap(), BigInt::from(35));
        assert_eq!(gaussian_explicit(3, 3, 1).unwrap(), BigInt::from(13));
        assert_eq!(gaussian_explicit(5, 6, 0).unwrap(), BigInt::from(1));
        assert!(matches!(
            gaussian_explicit(1, 3, 1),
            Err(Error::Degenerate(_))
        ));
        assert!(matches!(
            gaussian_explicit(-1, 3, 2),
            Err(Error::Degenerate(_))
        ));
        assert_eq!(gaussian_explicit(-1, 3, 1).unwrap(), BigInt::from(1));
    }

    #[test]
    fn phi_pair() {
        // (x - 1)(x - 2) = 2 - 3x + x^2
        let want: Vec<BigInt> = [2, -3, 1].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(phi_polynomial(2, 2).unwrap(), want);
        for q in [1, 2, 3, -2] {
            for n in 0..=6 {
                assert!(phi_inversion(q, n).unwrap(), "q={q} n={n}");
            }
        }
    }

    #[test]
    fn gaussian_inverse_holds() {
        for q in [1, 2, 3] {
            assert!(gaussian_inverse(q, 8).unwrap().holds());
        }
    }

    #[test]
    fn fibonomial_examples() {
        let seq = AlphaFibonacci::new(1).unwrap();
        assert_eq!(fnomial_factorial(&seq, 5, 2).unwrap(), BigInt::from(15));
        let pell = AlphaFibonacci::new(2).unwrap();
        assert_eq!(fnomial_factorial(&pell, 3, 1).unwrap(), BigInt::from(5));
        for alpha in [1, 2, 3] {
            for r in fibonomial_suite(alpha, 10).unwrap() {
                assert!(r.holds(), "{r}");
            }
        }
        fibonomial_check(1, 6).unwrap();
    }
}
