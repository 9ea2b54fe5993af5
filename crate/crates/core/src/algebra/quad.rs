use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{same_params, Ring};
use crate::error::Result;

/// `a + b*t` in `Z[t]/(t^2 - alpha*t - 1)`.
///
/// The two roots of `t^2 = alpha*t + 1` are `t` itself and `alpha - t`; their
/// product is `-1` and their sum is `alpha`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadElem {
    a: BigInt,
    b: BigInt,
    alpha: u64,
}

impl QuadElem {
    pub fn new(a: BigInt, b: BigInt, alpha: u64) -> Self {
        Self { a, b, alpha }
    }

    pub fn integer(a: BigInt, alpha: u64) -> Self {
        Self::new(a, BigInt::zero(), alpha)
    }

    /// The larger root, represented as `t`.
    pub fn phi_plus(alpha: u64) -> Self {
        Self::new(BigInt::zero(), BigInt::one(), alpha)
    }

    /// The smaller root, represented as `alpha - t`.
    pub fn phi_minus(alpha: u64) -> Self {
        Self::new(BigInt::from(alpha), -BigInt::one(), alpha)
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn alpha(&self) -> u64 {
        self.alpha
    }

    /// True when the `t`-component vanishes.
    pub fn is_integer(&self) -> bool {
        self.b.is_zero()
    }

    /// Image under `t -> alpha - t`.
    pub fn conjugate(&self) -> Self {
        Self::new(
            &self.a + &self.b * BigInt::from(self.alpha),
            -&self.b,
            self.alpha,
        )
    }

    /// `x * conjugate(x)`, always an integer.
    pub fn norm(&self) -> BigInt {
        let alpha = BigInt::from(self.alpha);
        &self.a * &self.a + &self.a * &self.b * alpha - &self.b * &self.b
    }
}

impl fmt::Debug for QuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuadElem({self}; alpha={})", self.alpha)
    }
}

impl fmt::Display for QuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let sign = if self.b.is_negative() { "-" } else { "+" };
        let mag = self.b.abs();
        let coeff = if mag.is_one() {
            String::new()
        } else {
            format!("{mag}*")
        };
        if self.a.is_zero() {
            let lead = if self.b.is_negative() { "-" } else { "" };
            write!(f, "{lead}{coeff}t")
        } else {
            write!(f, "{} {sign} {coeff}t", self.a)
        }
    }
}

impl Ring for QuadElem {
    type Params = u64;

    fn params(&self) -> u64 {
        self.alpha
    }
    fn zero_with(alpha: &u64) -> Self {
        Self::integer(BigInt::zero(), *alpha)
    }
    fn one_with(alpha: &u64) -> Self {
        Self::integer(BigInt::one(), *alpha)
    }
    fn from_int(value: &BigInt, alpha: &u64) -> Self {
        Self::integer(value.clone(), *alpha)
    }
    fn ring_is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn ring_add(&self, rhs: &Self) -> Result<Self> {
        same_params(self, rhs)?;
        Ok(Self::new(&self.a + &rhs.a, &self.b + &rhs.b, self.alpha))
    }

    fn ring_mul(&self, rhs: &Self) -> Result<Self> {
        same_params(self, rhs)?;
        // (a1 + b1 t)(a2 + b2 t) with t^2 = alpha t + 1
        let bb = &self.b * &rhs.b;
        let a = &self.a * &rhs.a + &bb;
        let b = &self.a * &rhs.b + &rhs.a * &self.b + bb * BigInt::from(self.alpha);
        Ok(Self::new(a, b, self.alpha))
    }

    fn ring_neg(&self) -> Self {
        Self::new(-&self.a, -&self.b, self.alpha)
    }
}
