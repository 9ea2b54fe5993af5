use std::fmt;

use super::Ring;
use crate::error::{Error, Result};

/// Power series in `x` truncated at `order`: coefficients of `x^k` for
/// `k < order` are exact, everything above is unknown.
///
/// Stored densely; `coeffs.len() == order` always.
#[derive(Clone, PartialEq)]
pub struct XSeries<R: Ring> {
    coeffs: Vec<R>,
    params: R::Params,
}

impl<R: Ring> XSeries<R> {
    /// Builds a series from leading coefficients, padding with zeros or
    /// dropping terms at and above `order`.
    pub fn from_coeffs(mut coeffs: Vec<R>, order: usize, params: &R::Params) -> Result<Self> {
        if let Some(bad) = coeffs.iter().find(|c| &c.params() != params) {
            return Err(Error::ParamMismatch(format!(
                "coefficient {bad} does not belong to ring {params:?}"
            )));
        }
        coeffs.truncate(order);
        coeffs.resize(order, R::zero_with(params));
        Ok(Self {
            coeffs,
            params: params.clone(),
        })
    }

    pub fn zero(order: usize, params: &R::Params) -> Self {
        Self {
            coeffs: vec![R::zero_with(params); order],
            params: params.clone(),
        }
    }

    pub fn one(order: usize, params: &R::Params) -> Self {
        let mut s = Self::zero(order, params);
        if order > 0 {
            s.coeffs[0] = R::one_with(params);
        }
        s
    }

    /// `1 / (1 - lambda x) = sum_j lambda^j x^j`.
    pub fn geometric(lambda: &R, order: usize) -> Result<Self> {
        let params = lambda.params();
        let mut coeffs = Vec::with_capacity(order);
        let mut power = R::one_with(&params);
        for _ in 0..order {
            coeffs.push(power.clone());
            power = power.ring_mul(lambda)?;
        }
        Ok(Self { coeffs, params })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn params(&self) -> &R::Params {
        &self.params
    }

    pub fn coeff(&self, k: usize) -> Option<&R> {
        self.coeffs.get(k)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    fn check_compatible(&self, rhs: &Self) -> Result<()> {
        if self.params == rhs.params {
            Ok(())
        } else {
            Err(Error::ParamMismatch(format!(
                "series over {:?} vs {:?}",
                self.params, rhs.params
            )))
        }
    }

    /// Sum, truncated at the smaller of the two orders.
    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.check_compatible(rhs)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a.ring_add(b))
            .collect::<Result<_>>()?;
        Ok(Self {
            coeffs,
            params: self.params.clone(),
        })
    }

    /// Cauchy product, truncated at the smaller of the two orders.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.check_compatible(rhs)?;
        let order = self.order().min(rhs.order());
        let mut out = Self::zero(order, &self.params);
        for (i, a) in self.coeffs.iter().take(order).enumerate() {
            if a.ring_is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(order - i).enumerate() {
                if b.ring_is_zero() {
                    continue;
                }
                out.coeffs[i + j] = out.coeffs[i + j].ring_add(&a.ring_mul(b)?)?;
            }
        }
        Ok(out)
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one(self.order(), &self.params)
    }
}

impl<R: Ring> fmt::Debug for XSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "XSeries[")?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "; O(x^{})]", self.order())
    }
}

/// One factor of a series product.
#[derive(Clone, Debug)]
pub enum SeriesFactor<R: Ring> {
    /// A polynomial given by its coefficients, lowest degree first.
    Poly(Vec<R>),
    /// `1 / (1 - lambda x)`, expanded as a geometric series.
    InverseLinear(R),
    Series(XSeries<R>),
}

impl<R: Ring> SeriesFactor<R> {
    /// `1 - lambda x`.
    pub fn linear(lambda: &R) -> Self {
        let params = lambda.params();
        SeriesFactor::Poly(vec![R::one_with(&params), lambda.ring_neg()])
    }

    fn expand(&self, order: usize, params: &R::Params) -> Result<XSeries<R>> {
        match self {
            SeriesFactor::Poly(c) => XSeries::from_coeffs(c.clone(), order, params),
            SeriesFactor::InverseLinear(lambda) => {
                if &lambda.params() != params {
                    return Err(Error::ParamMismatch(format!(
                        "factor over {:?}, product over {params:?}",
                        lambda.params()
                    )));
                }
                XSeries::geometric(lambda, order)
            }
            SeriesFactor::Series(s) => {
                if s.params() != params {
                    return Err(Error::ParamMismatch(format!(
                        "factor over {:?}, product over {params:?}",
                        s.params()
                    )));
                }
                XSeries::from_coeffs(s.coeffs().to_vec(), order.min(s.order()), params)
            }
        }
    }
}

/// Product of all `factors`, truncated at `order`. The empty product is `1`.
pub fn series_product<R: Ring>(
    factors: &[SeriesFactor<R>],
    order: usize,
    params: &R::Params,
) -> Result<XSeries<R>> {
    factors
        .iter()
        .try_fold(XSeries::one(order, params), |acc, f| {
            acc.mul(&f.expand(order, params)?)
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::QuadElem;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn series(v: &[i64], order: usize) -> XSeries<BigInt> {
        XSeries::from_coeffs(ints(v), order, &()).unwrap()
    }

    #[test]
    fn two_linear_factors() {
        let f = [
            SeriesFactor::linear(&BigInt::from(2)),
            SeriesFactor::linear(&BigInt::from(3)),
        ];
        assert_eq!(series_product(&f, 3, &()).unwrap(), series(&[1, -5, 6], 3));
    }

    #[test]
    fn geometric_series() {
        let f = [SeriesFactor::InverseLinear(BigInt::from(1))];
        assert_eq!(
            series_product(&f, 4, &()).unwrap(),
            series(&[1, 1, 1, 1], 4)
        );
    }

    #[test]
    fn reciprocal_pairs_cancel() {
        let f = [
            SeriesFactor::linear(&BigInt::from(2)),
            SeriesFactor::linear(&BigInt::from(3)),
            SeriesFactor::InverseLinear(BigInt::from(2)),
            SeriesFactor::InverseLinear(BigInt::from(3)),
        ];
        let prod = series_product(&f, 5, &()).unwrap();
        assert!(prod.is_one());
        assert_eq!(prod.order(), 5);
    }

    #[test]
    fn empty_product_is_one() {
        let prod = series_product::<BigInt>(&[], 3, &()).unwrap();
        assert_eq!(prod, series(&[1], 3));
    }

    #[test]
    fn zero_order() {
        let prod = series_product(&[SeriesFactor::linear(&BigInt::from(2))], 0, &()).unwrap();
        assert_eq!(prod.order(), 0);
    }

    #[test]
    fn parameter_mismatch_in_quadratic_ring() {
        let f = [SeriesFactor::linear(&QuadElem::phi_plus(2))];
        let err = series_product(&f, 3, &1).unwrap_err();
        assert!(matches!(err, Error::ParamMismatch(_)));
    }

    fn full_product(a: &[i64], b: &[i64]) -> Vec<BigInt> {
        let mut out = vec![BigInt::from(0); a.len() + b.len()];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    }

    proptest! {
        #[test]
        fn truncated_product_matches_full_product(
            a in prop::collection::vec(-9i64..10, 0..8),
            b in prop::collection::vec(-9i64..10, 0..8),
            order in 0usize..12,
        ) {
            let prod = series(&a, order).mul(&series(&b, order)).unwrap();
            let mut full = full_product(&a, &b);
            full.resize(order.max(full.len()), BigInt::from(0));
            prop_assert_eq!(prod.coeffs(), &full[..order]);
        }
    }
}
