//! The generating functions `A_n`, `B_n`, `C_n` and their coefficient
//! identities, over any ring that can host `p` and `q`.

use num_bigint::BigInt;

use super::report::{IdentityId, IdentityReport, Location, ReportBuilder, ReportParams};
use crate::algebra::{choose2, series_product, BiPoly, Ring, SeriesFactor, XSeries};
use crate::error::{Error, Result};
use crate::tnomial::{Tnomials, Triangle};
use crate::tseq::SeqParams;

/// Numeric evaluation at fixed `(p, q)` or symbolic in `Z[p, q]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Numeric(SeqParams),
    Symbolic,
}

impl Mode {
    pub(crate) fn report_params(&self) -> ReportParams {
        match self {
            Mode::Numeric(p) => ReportParams::Sequence(*p),
            Mode::Symbolic => ReportParams::Symbolic,
        }
    }
}

/// A verified expansion.
#[derive(Clone, Debug, PartialEq)]
pub enum Expansion {
    Numeric(XSeries<BigInt>),
    Symbolic(XSeries<BiPoly>),
}

impl Expansion {
    pub fn order(&self) -> usize {
        match self {
            Expansion::Numeric(s) => s.order(),
            Expansion::Symbolic(s) => s.order(),
        }
    }

    pub fn numeric(&self) -> Option<&XSeries<BigInt>> {
        match self {
            Expansion::Numeric(s) => Some(s),
            Expansion::Symbolic(_) => None,
        }
    }

    pub fn symbolic(&self) -> Option<&XSeries<BiPoly>> {
        match self {
            Expansion::Symbolic(s) => Some(s),
            Expansion::Numeric(_) => None,
        }
    }

    /// Coefficients rendered in ascending powers of `x`.
    pub fn coeff_strings(&self) -> Vec<String> {
        match self {
            Expansion::Numeric(s) => s.coeffs().iter().map(ToString::to_string).collect(),
            Expansion::Symbolic(s) => s.coeffs().iter().map(ToString::to_string).collect(),
        }
    }
}

pub(crate) fn loc(n: u64, k: u64, at: Option<SeqParams>) -> Location {
    let l = Location::nk(n, k);
    match at {
        Some(p) => l.at(p),
        None => l,
    }
}

/// Turns the first counterexample of a report into an error.
pub(crate) fn into_result(report: IdentityReport) -> Result<()> {
    match report.first_counterexample() {
        Some(c) if report.is_failure() => Err(Error::IdentityViolation {
            identity: report.identity().to_string(),
            location: c.location.to_string(),
            lhs: c.lhs.clone(),
            rhs: c.rhs.clone(),
        }),
        _ => Ok(()),
    }
}

pub(crate) fn negate_if<R: Ring>(neg: bool, v: R) -> R {
    if neg {
        v.ring_neg()
    } else {
        v
    }
}

/// `p^a q^b` in the triangle's ring.
pub(crate) fn pq_pow<R: Ring>(tri: &Triangle<R>, a: u64, b: u64) -> Result<R> {
    tri.p().ring_pow(a)?.ring_mul(&tri.q().ring_pow(b)?)
}

fn box_weight<R: Ring>(tri: &Triangle<R>, n: u64, i: u64) -> Result<R> {
    pq_pow(tri, n - i, i - 1)
}

/// `prod_{i=1..n} (1 - q^(i-1) p^(n-i) x)` truncated at `order`.
pub fn series_a<R: Ring>(tri: &Triangle<R>, n: u64, order: usize) -> Result<XSeries<R>> {
    let factors = (1..=n)
        .map(|i| Ok(SeriesFactor::linear(&box_weight(tri, n, i)?)))
        .collect::<Result<Vec<_>>>()?;
    series_product(&factors, order, &tri.p().params())
}

/// `prod_{i=1..n} 1 / (1 - q^(i-1) p^(n-i) x)` truncated at `order`.
pub fn series_b<R: Ring>(tri: &Triangle<R>, n: u64, order: usize) -> Result<XSeries<R>> {
    let factors = (1..=n)
        .map(|i| Ok(SeriesFactor::InverseLinear(box_weight(tri, n, i)?)))
        .collect::<Result<Vec<_>>>()?;
    series_product(&factors, order, &tri.p().params())
}

/// `prod_{i=1..n} (p^(i-1) - q^(i-1) x)`, a polynomial of degree `n`.
pub fn series_c<R: Ring>(tri: &Triangle<R>, n: u64) -> Result<XSeries<R>> {
    let factors = (1..=n)
        .map(|i| {
            Ok(SeriesFactor::Poly(vec![
                tri.p().ring_pow(i - 1)?,
                tri.q().ring_pow(i - 1)?.ring_neg(),
            ]))
        })
        .collect::<Result<Vec<_>>>()?;
    series_product(&factors, n as usize + 1, &tri.p().params())
}

pub(crate) fn check_a<R: Ring>(
    tri: &Triangle<R>,
    n: u64,
    b: &mut ReportBuilder,
    at: Option<SeqParams>,
) -> Result<XSeries<R>> {
    let s = series_a(tri, n, n as usize + 1)?;
    for k in 0..=n {
        let w = choose2(k);
        let expected = negate_if(k % 2 == 1, pq_pow(tri, w, w)?.ring_mul(&tri.get(n, k)?)?);
        b.check(loc(n, k, at), &s.coeffs()[k as usize], &expected);
    }
    Ok(s)
}

pub(crate) fn check_b<R: Ring>(
    tri: &Triangle<R>,
    n: u64,
    order: usize,
    b: &mut ReportBuilder,
    at: Option<SeqParams>,
) -> Result<XSeries<R>> {
    let s = series_b(tri, n, order)?;
    for k in 0..order as u64 {
        b.check(
            loc(n, k, at),
            &s.coeffs()[k as usize],
            &tri.get(n + k - 1, k)?,
        );
    }
    Ok(s)
}

pub(crate) fn check_c<R: Ring>(
    tri: &Triangle<R>,
    n: u64,
    b: &mut ReportBuilder,
    at: Option<SeqParams>,
) -> Result<XSeries<R>> {
    let s = series_c(tri, n)?;
    for k in 0..=n {
        let expected = pq_pow(tri, choose2(n - k), choose2(k))?.ring_mul(&tri.get(n, k)?)?;
        b.check(
            loc(n, k, at),
            &s.coeffs()[k as usize],
            &negate_if(k % 2 == 1, expected),
        );
    }
    Ok(s)
}

/// `A_n B_n == 1` up to `order`.
pub(crate) fn check_series_inverse<R: Ring>(
    tri: &Triangle<R>,
    n: u64,
    order: usize,
    b: &mut ReportBuilder,
    at: Option<SeqParams>,
) -> Result<()> {
    let prod = series_a(tri, n, order)?.mul(&series_b(tri, n, order)?)?;
    let one = XSeries::<R>::one(order, &tri.p().params());
    for k in 0..order {
        b.check(loc(n, k as u64, at), &prod.coeffs()[k], &one.coeffs()[k]);
    }
    Ok(())
}

fn numeric_triangle(params: &SeqParams, n_max: u64) -> Result<Triangle<BigInt>> {
    Triangle::new(params.p_big(), params.q_big(), n_max)
}

fn symbolic_triangle(n_max: u64) -> Result<Triangle<BiPoly>> {
    Triangle::new(BiPoly::p(), BiPoly::q(), n_max)
}

fn run<F, G>(
    id: IdentityId,
    mode: Mode,
    n_max: u64,
    range: (u64, u64),
    num: F,
    sym: G,
) -> Result<Expansion>
where
    F: FnOnce(&Triangle<BigInt>, &mut ReportBuilder) -> Result<XSeries<BigInt>>,
    G: FnOnce(&Triangle<BiPoly>, &mut ReportBuilder) -> Result<XSeries<BiPoly>>,
{
    let mut b = ReportBuilder::new(id, mode.report_params(), range);
    let out = match mode {
        Mode::Numeric(params) => {
            Expansion::Numeric(num(&numeric_triangle(&params, n_max)?, &mut b)?)
        }
        Mode::Symbolic => Expansion::Symbolic(sym(&symbolic_triangle(n_max)?, &mut b)?),
    };
    into_result(b.finish())?;
    Ok(out)
}

/// Expands `A_n(x)` and checks every coefficient against
/// `(-1)^k (pq)^C(k,2) C(n, k)`.
pub fn expand_a(n: u64, mode: Mode) -> Result<Expansion> {
    run(
        IdentityId::GeneratingFunctionA,
        mode,
        n,
        (n, n),
        |t, b| check_a(t, n, b, None),
        |t, b| check_a(t, n, b, None),
    )
}

/// Expands `B_n(x)` to `order` terms and checks coefficient `k` against
/// `C(n+k-1, k)`. Only `n >= 1` is handled.
pub fn expand_b(n: u64, order: usize, mode: Mode) -> Result<Expansion> {
    if n == 0 {
        return Err(Error::Precondition("B_n is handled for n >= 1 only".into()));
    }
    let n_max = n + (order as u64).max(1) - 1;
    run(
        IdentityId::GeneratingFunctionB,
        mode,
        n_max,
        (n, order as u64),
        |t, b| check_b(t, n, order, b, None),
        |t, b| check_b(t, n, order, b, None),
    )
}

/// Expands `C_n(x)` and checks coefficient `k` against
/// `(-1)^k q^C(k,2) p^C(n-k,2) C(n, k)`.
pub fn expand_c(n: u64, mode: Mode) -> Result<Expansion> {
    run(
        IdentityId::GeneratingFunctionC,
        mode,
        n,
        (n, n),
        |t, b| check_c(t, n, b, None),
        |t, b| check_c(t, n, b, None),
    )
}

/// Whether `A_n(x) B_n(x) = 1` up to `order`.
pub fn series_inverse(n: u64, order: usize, mode: Mode) -> Result<bool> {
    let n_max = n.max(1);
    let mut b = ReportBuilder::new(
        IdentityId::SeriesInverse,
        mode.report_params(),
        (n, order as u64),
    );
    match mode {
        Mode::Numeric(params) => {
            check_series_inverse(&numeric_triangle(&params, n_max)?, n, order, &mut b, None)?
        }
        Mode::Symbolic => check_series_inverse(&symbolic_triangle(n_max)?, n, order, &mut b, None)?,
    }
    Ok(b.finish().holds())
}

/// Both orthogonality sums for `(n, s)`: the first is
/// `sum_{k=0..s} (-1)^k (pq)^C(k,2) C(n,k) C(n+s-k-1, n-1)`, the second
/// `sum_{k=0..n} C(n+k-1,k) (-1)^(n-k) (pq)^C(n-k,2) C(n,k)`.
pub(crate) fn orthogonality_sums(tn: &Tnomials, n: u64, s: u64) -> Result<(BigInt, BigInt)> {
    let pq = tn.params().p_big() * tn.params().q_big();
    let mut first = BigInt::from(0);
    for k in 0..=s.min(n) {
        let term = pq.pow(choose2(k) as u32) * tn.coeff(n, k)? * tn.coeff(n + s - k - 1, n - 1)?;
        first += negate_if(k % 2 == 1, term);
    }
    let mut second = BigInt::from(0);
    for k in 0..=n {
        let term = tn.coeff(n + k - 1, k)? * pq.pow(choose2(n - k) as u32) * tn.coeff(n, k)?;
        second += negate_if((n - k) % 2 == 1, term);
    }
    Ok((first, second))
}

/// Both orthogonality relations at `(n, s)`; `false` on violation.
pub fn orthogonality(params: &SeqParams, n: u64, s: u64) -> Result<bool> {
    if n == 0 || s == 0 {
        return Err(Error::Precondition(
            "orthogonality needs n >= 1 and s >= 1".into(),
        ));
    }
    let tn = Tnomials::new(*params, 2 * n + s)?;
    let (first, second) = orthogonality_sums(&tn, n, s)?;
    Ok(first == BigInt::from(0) && second == BigInt::from(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn t(p: i64, q: i64) -> Mode {
        Mode::Numeric(SeqParams::new(p, q))
    }

    #[test]
    fn a_examples() {
        let a0 = expand_a(0, t(2, 3)).unwrap();
        assert_eq!(a0.numeric().unwrap().coeffs(), &ints(&[1])[..]);
        let a2 = expand_a(2, t(2, 3)).unwrap();
        assert_eq!(a2.numeric().unwrap().coeffs(), &ints(&[1, -5, 6])[..]);
        let sym = expand_a(2, Mode::Symbolic).unwrap();
        assert_eq!(sym.coeff_strings(), vec!["1", "-q - p", "p*q"]);
    }

    #[test]
    fn b_examples() {
        let b1 = expand_b(1, 5, t(2, 3)).unwrap();
        assert_eq!(b1.numeric().unwrap().coeffs(), &ints(&[1, 1, 1, 1, 1])[..]);
        let b2 = expand_b(2, 3, t(2, 3)).unwrap();
        assert_eq!(b2.numeric().unwrap().coeffs()[2], BigInt::from(19));
        let pascal = expand_b(3, 4, t(1, 1)).unwrap();
        assert_eq!(
            pascal.numeric().unwrap().coeffs(),
            &ints(&[1, 3, 6, 10])[..]
        );
        assert!(matches!(
            expand_b(0, 3, t(2, 3)),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn c_examples() {
        let c1 = expand_c(1, t(5, 7)).unwrap();
        assert_eq!(c1.numeric().unwrap().coeffs(), &ints(&[1, -1])[..]);
        let c2 = expand_c(2, t(2, 3)).unwrap();
        assert_eq!(c2.numeric().unwrap().coeffs(), &ints(&[2, -5, 3])[..]);
        let sym = expand_c(2, Mode::Symbolic).unwrap();
        assert_eq!(sym.coeff_strings(), vec!["p", "-q - p", "q"]);
        assert_eq!(
            expand_c(0, Mode::Symbolic).unwrap().coeff_strings(),
            vec!["1"]
        );
    }

    #[test]
    fn a_times_b_is_one() {
        assert!(series_inverse(4, 10, t(2, 3)).unwrap());
        assert!(series_inverse(3, 6, Mode::Symbolic).unwrap());
    }

    #[test]
    fn orthogonality_examples() {
        assert!(orthogonality(&SeqParams::new(2, 3), 2, 1).unwrap());
        assert!(orthogonality(&SeqParams::new(1, 1), 2, 2).unwrap());
        assert!(orthogonality(&SeqParams::new(-2, 4), 5, 7).unwrap());
    }

    #[test]
    fn orthogonality_hand_sum() {
        // 1*5 + (-5)*1
        let tn = Tnomials::new(SeqParams::new(2, 3), 6).unwrap();
        assert_eq!(tn.coeff(2, 1).unwrap(), BigInt::from(5));
        let (first, _) = orthogonality_sums(&tn, 2, 1).unwrap();
        assert_eq!(first, BigInt::from(0));
    }
}
