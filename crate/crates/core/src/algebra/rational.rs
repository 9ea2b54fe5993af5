use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::Ring;
use crate::error::{Error, Result};

/// Reduced fraction with positive denominator; zero is `0/1`.
///
/// `BigRational` normalizes after every operation, which is the invariant we
/// need, so it is used directly.
pub type Rational = BigRational;

impl Ring for Rational {
    type Params = ();

    fn params(&self) {}
    fn zero_with(_: &()) -> Self {
        Rational::zero()
    }
    fn one_with(_: &()) -> Self {
        Rational::one()
    }
    fn from_int(value: &BigInt, _: &()) -> Self {
        Rational::from_integer(value.clone())
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

/// Integer power of a rational. Negative exponents invert; `0^e` with `e < 0`
/// is a division by zero.
pub fn rational_pow(base: &Rational, exp: i64) -> Result<Rational> {
    if exp >= 0 {
        return Ok(num_traits::pow(base.clone(), exp as usize));
    }
    if Zero::is_zero(base) {
        return Err(Error::DivisionByZero);
    }
    Ok(num_traits::pow(base.recip(), exp.unsigned_abs() as usize))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn sums_reduce() {
        let s = r(16, 10).ring_add(&r(2, 5)).unwrap();
        assert_eq!(s, r(2, 1));
        assert_eq!(s.numer(), &BigInt::from(2));
        assert_eq!(s.denom(), &BigInt::from(1));
    }

    #[test]
    fn denominator_is_positive() {
        let x = r(3, -6);
        assert_eq!(x.numer(), &BigInt::from(-1));
        assert_eq!(x.denom(), &BigInt::from(2));
        assert_eq!(Rational::zero().denom(), &BigInt::from(1));
    }

    #[test]
    fn negative_powers() {
        assert_eq!(rational_pow(&r(2, 3), -2).unwrap(), r(9, 4));
        assert_eq!(rational_pow(&r(0, 1), -1), Err(Error::DivisionByZero));
        assert_eq!(rational_pow(&r(0, 1), 0).unwrap(), r(1, 1));
    }
}
