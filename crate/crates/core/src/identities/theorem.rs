//! The binomial-like theorem in two forms.
//!
//! Both sides are homogeneous of degree `n` in `(x, y)`, so a product is
//! stored as a series in `x` alone: the coefficient of `x^j` carries the
//! implied factor `y^(n-j)`.

use std::fmt;

use num_bigint::BigInt;

use super::gf::{into_result, loc, pq_pow, Mode};
use super::report::{IdentityId, ReportBuilder};
use crate::algebra::{choose2, series_product, BiPoly, Ring, SeriesFactor, XSeries};
use crate::error::{Error, Result};
use crate::tnomial::Triangle;
use crate::tseq::SeqParams;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Form {
    /// `prod_{i=1..n} (x + p^(n-i) q^(i-1) y)`.
    A,
    /// `prod_{i=0..n-1} (p^i x + q^i y)`.
    B,
}

impl Form {
    pub(crate) fn identity(&self) -> IdentityId {
        match self {
            Form::A => IdentityId::BinomialLikeA,
            Form::B => IdentityId::BinomialLikeB,
        }
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Form::A => "A",
            Form::B => "B",
        })
    }
}

/// The product side, coefficient `j` holding `x^j y^(n-j)`.
pub fn binomial_like_product<R: Ring>(tri: &Triangle<R>, n: u64, form: Form) -> Result<XSeries<R>> {
    let factors = match form {
        Form::A => (1..=n)
            .map(|i| {
                Ok(SeriesFactor::Poly(vec![
                    pq_pow(tri, n - i, i - 1)?,
                    R::one_with(&tri.p().params()),
                ]))
            })
            .collect::<Result<Vec<_>>>()?,
        Form::B => (0..n)
            .map(|i| {
                Ok(SeriesFactor::Poly(vec![
                    tri.q().ring_pow(i)?,
                    tri.p().ring_pow(i)?,
                ]))
            })
            .collect::<Result<Vec<_>>>()?,
    };
    series_product(&factors, n as usize + 1, &tri.p().params())
}

/// Coefficient of `y^k x^(n-k)` on the sum side.
fn sum_coeff<R: Ring>(tri: &Triangle<R>, n: u64, k: u64, form: Form) -> Result<R> {
    let (pe, qe) = match form {
        Form::A => (choose2(k), choose2(k)),
        Form::B => (choose2(n - k), choose2(k)),
    };
    pq_pow(tri, pe, qe)?.ring_mul(&tri.get(n, k)?)
}

pub(crate) fn check_binomial_like<R: Ring>(
    tri: &Triangle<R>,
    n: u64,
    form: Form,
    b: &mut ReportBuilder,
    at: Option<SeqParams>,
) -> Result<()> {
    let prod = binomial_like_product(tri, n, form)?;
    for k in 0..=n {
        let lhs = &prod.coeffs()[(n - k) as usize];
        b.check(loc(n, k, at), lhs, &sum_coeff(tri, n, k, form)?);
    }
    Ok(())
}

/// Expands both sides and compares every coefficient. In symbolic mode this
/// is a polynomial identity in `Z[p, q]`.
pub fn binomial_like(n: u64, form: Form, mode: Mode) -> Result<bool> {
    if n == 0 {
        return Err(Error::Precondition(
            "binomial-like theorem needs n >= 1".into(),
        ));
    }
    let mut b = ReportBuilder::new(form.identity(), mode.report_params(), (n, n));
    match mode {
        Mode::Numeric(params) => {
            let tri = Triangle::new(params.p_big(), params.q_big(), n)?;
            check_binomial_like(&tri, n, form, &mut b, None)?;
        }
        Mode::Symbolic => {
            let tri = Triangle::new(BiPoly::p(), BiPoly::q(), n)?;
            check_binomial_like(&tri, n, form, &mut b, None)?;
        }
    }
    into_result(b.finish())?;
    Ok(true)
}

/// Coefficients of `y^k x^(n-k)`, `k = 0..=n`, of the numeric product.
pub fn binomial_like_coefficients(params: &SeqParams, n: u64, form: Form) -> Result<Vec<BigInt>> {
    let tri = Triangle::new(params.p_big(), params.q_big(), n)?;
    let mut c = binomial_like_product(&tri, n, form)?.into_coeffs();
    c.reverse();
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::binomial;

    #[test]
    fn form_a_two_factors() {
        let tri = Triangle::new(BiPoly::p(), BiPoly::q(), 2).unwrap();
        let prod = binomial_like_product(&tri, 2, Form::A).unwrap();
        let shown: Vec<String> = prod.coeffs().iter().map(ToString::to_string).collect();
        // y^2, x y, x^2
        assert_eq!(shown, vec!["p*q", "q + p", "1"]);
        assert!(binomial_like(2, Form::A, Mode::Symbolic).unwrap());
    }

    #[test]
    fn form_b_numeric_against_direct_product() {
        // (x + y)(2x + 3y) = 2x^2 + 5xy + 3y^2
        // times (4x + 9y): 8x^3 + (18 + 20) x^2 y + (45 + 12) x y^2 + 27 y^3
        let c = binomial_like_coefficients(&SeqParams::new(2, 3), 3, Form::B).unwrap();
        let want: Vec<BigInt> = [8, 38, 57, 27].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(c, want);
        assert!(binomial_like(3, Form::B, Mode::Numeric(SeqParams::new(2, 3))).unwrap());
    }

    #[test]
    fn classical_binomial_theorem() {
        for n in 1..8 {
            let c = binomial_like_coefficients(&SeqParams::new(1, 1), n, Form::A).unwrap();
            let want: Vec<BigInt> = (0..=n).map(|k| binomial(n, k)).collect();
            assert_eq!(c, want);
        }
    }

    #[test]
    fn symbolic_up_to_seven() {
        for n in 1..=7 {
            assert!(binomial_like(n, Form::A, Mode::Symbolic).unwrap());
            assert!(binomial_like(n, Form::B, Mode::Symbolic).unwrap());
        }
    }
}
