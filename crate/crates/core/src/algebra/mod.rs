//! Exact arithmetic: big integers, rationals, the bivariate ring `Z[p,q]`,
//! the quadratic ring `Z[t]/(t^2 - alpha t - 1)` and truncated series in `x`
//! over any of them.
//!
//! Nothing here uses floating point. Every operation either produces an
//! exact canonical value or fails with an [`Error`].

mod bipoly;
mod quad;
mod rational;
mod series;

pub use bipoly::BiPoly;
pub use quad::QuadElem;
pub use rational::{rational_pow, Rational};
pub use series::{series_product, SeriesFactor, XSeries};

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A commutative ring with exact, canonical elements.
///
/// Some rings carry a runtime parameter (the `alpha` of [`QuadElem`]); values
/// with different parameters live in different rings and may not be mixed.
/// Parameter-free rings use `()`.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display {
    type Params: Clone + PartialEq + fmt::Debug;

    fn params(&self) -> Self::Params;
    fn zero_with(params: &Self::Params) -> Self;
    fn one_with(params: &Self::Params) -> Self;
    fn from_int(value: &BigInt, params: &Self::Params) -> Self;
    fn ring_is_zero(&self) -> bool;

    fn ring_add(&self, rhs: &Self) -> Result<Self>;
    fn ring_mul(&self, rhs: &Self) -> Result<Self>;
    fn ring_neg(&self) -> Self;

    fn ring_sub(&self, rhs: &Self) -> Result<Self> {
        self.ring_add(&rhs.ring_neg())
    }

    fn ring_pow(&self, mut exp: u64) -> Result<Self> {
        let mut base = self.clone();
        let mut acc = Self::one_with(&self.params());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.ring_mul(&base)?;
            }
            exp >>= 1;
            if exp > 0 {
                base = base.ring_mul(&base)?;
            }
        }
        Ok(acc)
    }
}

/// Checks that two ring elements share parameters.
pub(crate) fn same_params<R: Ring>(a: &R, b: &R) -> Result<()> {
    if a.params() == b.params() {
        Ok(())
    } else {
        Err(Error::ParamMismatch(format!(
            "{:?} vs {:?}",
            a.params(),
            b.params()
        )))
    }
}

impl Ring for BigInt {
    type Params = ();

    fn params(&self) {}
    fn zero_with(_: &()) -> Self {
        BigInt::zero()
    }
    fn one_with(_: &()) -> Self {
        BigInt::one()
    }
    fn from_int(value: &BigInt, _: &()) -> Self {
        value.clone()
    }
    fn ring_is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn ring_add(&self, rhs: &Self) -> Result<Self> {
        Ok(self + rhs)
    }
    fn ring_mul(&self, rhs: &Self) -> Result<Self> {
        Ok(self * rhs)
    }
    fn ring_neg(&self) -> Self {
        -self
    }
}

/// Exact integer division. Fails unless `divisor` divides `dividend`.
pub fn exact_div(dividend: &BigInt, divisor: &BigInt) -> Result<BigInt> {
    if Zero::is_zero(divisor) {
        return Err(Error::DivisionByZero);
    }
    let (quot, rem) = dividend.div_rem(divisor);
    if !Zero::is_zero(&rem) {
        return Err(Error::Divisibility {
            dividend: dividend.clone(),
            divisor: divisor.clone(),
        });
    }
    Ok(quot)
}

/// `base^exp` for a machine-sized base, with `0^0 = 1`.
pub fn int_pow(base: i64, exp: u64) -> BigInt {
    num_traits::pow(BigInt::from(base), exp as usize)
}

/// Ordinary binomial coefficient, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `(-1)^e` as a big integer.
pub fn sign_pow(e: u64) -> BigInt {
    if e.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// `n choose 2`.
pub fn choose2(n: u64) -> u64 {
    n * n.saturating_sub(1) / 2
}
