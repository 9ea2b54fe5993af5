use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Ring;
use crate::error::Result;

/// Polynomial in `Z[p, q]`, stored sparsely as `(p_exp, q_exp) -> coeff`.
///
/// Zero coefficients are never stored, so structural equality is polynomial
/// equality. Iteration and display follow the map order: lexicographic by
/// `(p-degree, q-degree)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::monomial(c, 0, 0)
    }

    /// `c * p^i * q^j`.
    pub fn monomial(c: BigInt, i: u32, j: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        Self { terms }
    }

    /// The indeterminate `p`.
    pub fn p() -> Self {
        Self::monomial(BigInt::one(), 1, 0)
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::monomial(BigInt::one(), 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &BigInt)> {
        self.terms.iter().map(|(&(i, j), c)| (i, j, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of `p^i q^j` (zero if absent).
    pub fn coeff(&self, i: u32, j: u32) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, key: (u32, u32), c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// `Some(d)` if every monomial has total degree `d`; the zero polynomial
    /// is homogeneous of every degree and reports `None`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(|&(i, j)| i + j);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous_of(&self, degree: u32) -> bool {
        self.is_zero() || self.homogeneous_degree() == Some(degree)
    }

    /// Exchanges the roles of `p` and `q`.
    pub fn swap_vars(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| ((j, i), c.clone()))
                .collect(),
        }
    }

    /// Exact evaluation at an integer point.
    pub fn eval(&self, p: &BigInt, q: &BigInt) -> BigInt {
        self.terms
            .iter()
            .map(|(&(i, j), c)| {
                c * num_traits::pow(p.clone(), i as usize) * num_traits::pow(q.clone(), j as usize)
            })
            .sum()
    }

    /// Evaluation at any ring point; used to push symbolic identities into
    /// the quadratic ring.
    pub fn eval_in<R: Ring>(&self, p: &R, q: &R) -> Result<R> {
        let params = p.params();
        let mut acc = R::zero_with(&params);
        for (&(i, j), c) in &self.terms {
            let term = R::from_int(c, &params)
                .ring_mul(&p.ring_pow(i as u64)?)?
                .ring_mul(&q.ring_pow(j as u64)?)?;
            acc = acc.ring_add(&term)?;
        }
        Ok(acc)
    }

    pub fn pow(&self, exp: u64) -> Self {
        // Infallible ring, so the generic square-and-multiply never errors.
        self.ring_pow(exp).expect("BiPoly arithmetic is infallible")
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

fn write_var(f: &mut fmt::Formatter<'_>, name: char, exp: u32, first: &mut bool) -> fmt::Result {
    if exp == 0 {
        return Ok(());
    }
    if !*first {
        f.write_str("*")?;
    }
    *first = false;
    if exp == 1 {
        write!(f, "{name}")
    } else {
        write!(f, "{name}^{exp}")
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (&(i, j), c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (idx, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            let mut first = true;
            if !mag.is_one() || (i == 0 && j == 0) {
                write!(f, "{mag}")?;
                first = false;
            }
            write_var(f, 'p', i, &mut first)?;
            write_var(f, 'q', j, &mut first)?;
        }
        Ok(())
    }
}

impl Ring for BiPoly {
    type Params = ();

    fn params(&self) {}
    fn zero_with(_: &()) -> Self {
        BiPoly::zero()
    }
    fn one_with(_: &()) -> Self {
        BiPoly::one()
    }
    fn from_int(value: &BigInt, _: &()) -> Self {
        BiPoly::constant(value.clone())
    }
    fn ring_is_zero(&self) -> bool {
        self.terms.is_empty()
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

impl<'a> Add<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, -c);
        }
        out
    }
}

impl<'a> Mul<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                out.add_term((i1 + i2, j1 + j2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $method:ident),*) => {$(
        impl $tr<BiPoly> for BiPoly {
            type Output = BiPoly;
            fn $method(self, rhs: BiPoly) -> BiPoly {
                (&self).$method(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        -&self
    }
}

impl From<i64> for BiPoly {
    fn from(c: i64) -> Self {
        BiPoly::constant(c.into())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn difference_of_squares() {
        let (p, q) = (BiPoly::p(), BiPoly::q());
        let prod = &(&p + &q) * &(&p - &q);
        let expected = &p.pow(2) - &q.pow(2);
        assert_eq!(prod, expected);
        assert_eq!(prod.num_terms(), 2);
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let p = BiPoly::p();
        assert!((&p - &p).is_zero());
        assert_eq!((&p - &p).num_terms(), 0);
        assert_eq!(&p - &p, BiPoly::zero());
    }

    #[test]
    fn display_order_and_signs() {
        let (p, q) = (BiPoly::p(), BiPoly::q());
        let poly = &(&p.pow(2) - &(&BiPoly::from(3) * &(&p * &q))) + &BiPoly::from(-2);
        assert_eq!(poly.to_string(), "-2 - 3*p*q + p^2");
        assert_eq!(BiPoly::zero().to_string(), "0");
        assert_eq!(BiPoly::from(1).to_string(), "1");
        assert_eq!((&q * &q).to_string(), "q^2");
    }

    #[test]
    fn homogeneity() {
        let (p, q) = (BiPoly::p(), BiPoly::q());
        let h = &(&p * &p) + &(&p * &q);
        assert_eq!(h.homogeneous_degree(), Some(2));
        let nh = &h + &p;
        assert_eq!(nh.homogeneous_degree(), None);
        assert!(BiPoly::zero().is_homogeneous_of(7));
    }

    fn small_poly() -> impl Strategy<Value = BiPoly> {
        prop::collection::vec((0u32..4, 0u32..4, -5i64..6), 0..6).prop_map(|terms| {
            terms.into_iter().fold(BiPoly::zero(), |acc, (i, j, c)| {
                &acc + &BiPoly::monomial(c.into(), i, j)
            })
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a + &(-&a)).is_zero());
        }

        #[test]
        fn eval_is_a_homomorphism(a in small_poly(), b in small_poly(), p0 in -4i64..5, q0 in -4i64..5) {
            let (p0, q0) = (BigInt::from(p0), BigInt::from(q0));
            prop_assert_eq!((&a * &b).eval(&p0, &q0), a.eval(&p0, &q0) * b.eval(&p0, &q0));
            prop_assert_eq!((&a + &b).eval(&p0, &q0), a.eval(&p0, &q0) + b.eval(&p0, &q0));
        }

        #[test]
        fn swap_is_involution(a in small_poly()) {
            prop_assert_eq!(a.swap_vars().swap_vars(), a);
        }
    }
}
