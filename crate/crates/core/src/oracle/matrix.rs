use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::Rational;
use crate::error::{Error, Result};

/// Lower-triangular square matrix over the rationals. Row `i` stores
/// columns `0..=i`; entries above the diagonal are zero.
#[derive(Clone, PartialEq, Eq)]
pub struct TriMatrix {
    rows: Vec<Vec<Rational>>,
}

impl TriMatrix {
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        Self {
            rows: (0..order)
                .map(|i| (0..=i).map(|j| f(i, j)).collect())
                .collect(),
        }
    }

    /// From integer rows; row `i` must hold at least `i + 1` entries.
    pub fn from_integer_rows(rows: &[Vec<BigInt>]) -> Result<Self> {
        if let Some(i) = (0..rows.len()).find(|&i| rows[i].len() <= i) {
            return Err(Error::Precondition(format!("row {i} is too short")));
        }
        Ok(Self::from_fn(rows.len(), |i, j| {
            Rational::from_integer(rows[i][j].clone())
        }))
    }

    pub fn identity(order: usize) -> Self {
        Self::from_fn(order, |i, j| {
            if i == j {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        if j > i {
            Rational::zero()
        } else {
            self.rows[i][j].clone()
        }
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.order() != rhs.order() {
            return Err(Error::Precondition(format!(
                "orders {} and {} differ",
                self.order(),
                rhs.order()
            )));
        }
        Ok(Self::from_fn(self.order(), |i, j| {
            (j..=i).map(|l| &self.rows[i][l] * &rhs.rows[l][j]).sum()
        }))
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.order())
    }
}

impl fmt::Debug for TriMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.rows.iter().map(|r| {
                r.iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(" ")
            }))
            .finish()
    }
}

/// Exact inverse by forward substitution.
#[allow(clippy::needless_range_loop)]
pub fn invert_triangular(m: &TriMatrix) -> Result<TriMatrix> {
    let order = m.order();
    if let Some(i) = (0..order).find(|&i| m.rows[i][i].is_zero()) {
        return Err(Error::SingularMatrix(i));
    }
    let mut x: Vec<Vec<Rational>> = (0..order).map(|i| vec![Rational::zero(); i + 1]).collect();
    for j in 0..order {
        x[j][j] = m.rows[j][j].recip();
        for i in j + 1..order {
            let s: Rational = (j..i).map(|l| &m.rows[i][l] * &x[l][j]).sum();
            x[i][j] = -s / &m.rows[i][i];
        }
    }
    Ok(TriMatrix { rows: x })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::binomial;

    fn int(v: i64) -> Rational {
        Rational::from_integer(v.into())
    }

    #[test]
    fn identity_inverts_to_itself() {
        let id = TriMatrix::identity(5);
        assert_eq!(invert_triangular(&id).unwrap(), id);
    }

    #[test]
    fn pascal_inverse_is_signed_pascal() {
        let pascal = TriMatrix::from_fn(4, |i, j| {
            Rational::from_integer(binomial(i as u64, j as u64))
        });
        let inv = invert_triangular(&pascal).unwrap();
        let signed = TriMatrix::from_fn(4, |i, j| {
            let c = Rational::from_integer(binomial(i as u64, j as u64));
            if (i - j) % 2 == 1 {
                -c
            } else {
                c
            }
        });
        assert_eq!(inv, signed);
        assert!(pascal.mul(&inv).unwrap().is_identity());
        assert!(inv.mul(&pascal).unwrap().is_identity());
    }

    #[test]
    fn rational_diagonal() {
        let m = TriMatrix::from_fn(3, |i, j| if i == j { int(i as i64 + 2) } else { int(1) });
        let inv = invert_triangular(&m).unwrap();
        assert_eq!(inv.get(0, 0), Rational::new(1.into(), 2.into()));
        assert!(m.mul(&inv).unwrap().is_identity());
        assert!(inv.mul(&m).unwrap().is_identity());
    }

    #[test]
    fn singular() {
        let m = TriMatrix::from_fn(3, |i, j| if i == 1 && j == 1 { int(0) } else { int(1) });
        assert_eq!(invert_triangular(&m).unwrap_err(), Error::SingularMatrix(1));
    }

    #[test]
    fn ragged_rows_rejected() {
        assert!(TriMatrix::from_integer_rows(&[vec![1.into()], vec![2.into()]]).is_err());
    }
}
