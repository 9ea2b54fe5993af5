//! Comparisons of the enumeration oracles against the coefficient routes.
//! This is the only oracle file that sees the coefficient code.

use num_bigint::BigInt;

use super::{
    acyclic_multidigraphs_recurrence, count_acyclic_multidigraphs, count_bipartite_multigraphs,
    count_selections, invert_triangular, volume_ratio, BoxWeights, Budget, TriMatrix,
};
use crate::algebra::{binomial, choose2, int_pow, Rational};
use crate::error::Result;
use crate::identities::{IdentityId, IdentityReport, Location, ReportBuilder, ReportParams};
use crate::tnomial::Tnomials;
use crate::tseq::SeqParams;

fn values(name: &str, v: impl IntoIterator<Item = u64>) -> ReportParams {
    ReportParams::Values {
        name: name.into(),
        values: v.into_iter().map(|x| x as i64).collect(),
    }
}

fn signed(negative: bool, v: BigInt) -> BigInt {
    if negative {
        -v
    } else {
        v
    }
}

/// Weighted selections against `C(n+k-1, k)` (with repetition) and
/// `C(n, k) (pq)^C(k,2)` (without), for `1 <= n <= n_max`, `k <= k_max`.
pub fn selections_report(
    points: &[SeqParams],
    rp: ReportParams,
    n_max: u64,
    k_max: u64,
    budget: &Budget,
) -> Result<IdentityReport> {
    let mut b = ReportBuilder::new(IdentityId::Selections, rp, (n_max, k_max));
    for sp in points {
        let tn = Tnomials::new(*sp, n_max + k_max)?;
        let pq = sp.p_big() * sp.q_big();
        for n in 1..=n_max {
            let w = BoxWeights::new(sp, n)?;
            for k in 0..=k_max {
                let at = Location::nk(n, k).at(*sp);
                let multi = count_selections(&w, k, true, budget)?;
                b.check(at.clone(), &multi, &tn.coeff(n + k - 1, k)?);
                let subsets = count_selections(&w, k, false, budget)?;
                b.check(at, &subsets, &(tn.coeff(n, k)? * pq.pow(choose2(k) as u32)));
            }
        }
    }
    Ok(b.finish())
}

/// Bipartite multigraph counts against `C(n, k)` at `T(alpha, alpha)` and
/// against `C(n, k) alpha^(k(n-k))`.
pub fn bipartite_report(alpha_max: u64, n_max: u64, budget: &Budget) -> Result<IdentityReport> {
    let mut b = ReportBuilder::new(
        IdentityId::BipartiteMultigraphs,
        values("alpha", 1..=alpha_max),
        (n_max, n_max),
    );
    for alpha in 1..=alpha_max {
        let sp = SeqParams::new(alpha as i64, alpha as i64);
        let tn = Tnomials::new(sp, n_max)?;
        for n in 1..=n_max {
            for k in 0..=n {
                let count = count_bipartite_multigraphs(alpha, n, k, budget)?;
                let at = Location::nk(n, k).at(sp);
                b.check(at.clone(), &count, &tn.coeff(n, k)?);
                b.check(
                    at,
                    &count,
                    &(binomial(n, k) * int_pow(alpha as i64, k * (n - k))),
                );
            }
        }
    }
    Ok(b.finish())
}

/// Brute-force acyclic counts against the inclusion-exclusion recurrence.
pub fn acyclic_recurrence_report(
    p_values: &[u64],
    n_max: u64,
    budget: &Budget,
) -> Result<IdentityReport> {
    let mut b = ReportBuilder::new(
        IdentityId::AcyclicRecurrence,
        values("p", p_values.iter().copied()),
        (n_max, 0),
    );
    for &p in p_values {
        let rec = acyclic_multidigraphs_recurrence(p, n_max);
        for n in 0..=n_max {
            let at = Location::nk(n, 0).at(SeqParams::new(p as i64, p as i64));
            b.check(
                at,
                &count_acyclic_multidigraphs(p, n, budget)?,
                &rec[n as usize],
            );
        }
    }
    Ok(b.finish())
}

/// Inverse coefficients at `T(p, p)` against `(-1)^(n-k) A_p(n-k) C(n, k)`.
pub fn verify_inverse_relation(p: u64, n_max: u64) -> Result<IdentityReport> {
    let sp = SeqParams::new(p as i64, p as i64);
    let tn = Tnomials::new(sp, n_max)?;
    let a = acyclic_multidigraphs_recurrence(p, n_max);
    let mut b = ReportBuilder::new(
        IdentityId::AcyclicInverse,
        ReportParams::Sequence(sp),
        (n_max, n_max),
    );
    for n in 0..=n_max {
        for k in 0..=n {
            let d = n - k;
            let expected = signed(d % 2 == 1, &a[d as usize] * tn.coeff(n, k)?);
            b.check(Location::nk(n, k), &tn.inverse(n, k)?, &expected);
        }
    }
    Ok(b.finish())
}

/// The composition-sum inverse against forward substitution on the matrix
/// `[C(n, k)]`, plus both products with the matrix being the identity.
pub fn inverse_matrix_report(
    points: &[SeqParams],
    rp: ReportParams,
    order: usize,
) -> Result<IdentityReport> {
    let n_max = order.saturating_sub(1) as u64;
    let mut b = ReportBuilder::new(IdentityId::InverseMatrixOracle, rp, (n_max, n_max));
    for sp in points {
        let tn = Tnomials::new(*sp, n_max)?;
        let rows = (0..order as u64)
            .map(|n| tn.row(n))
            .collect::<Result<Vec<_>>>()?;
        let m = TriMatrix::from_integer_rows(&rows)?;
        let inv = invert_triangular(&m)?;
        for n in 0..order {
            for k in 0..=n {
                let ours = Rational::from_integer(tn.inverse(n as u64, k as u64)?);
                b.check(
                    Location::nk(n as u64, k as u64).at(*sp),
                    &ours,
                    &inv.get(n, k),
                );
            }
        }
        let at = Location::nk(n_max, n_max).at(*sp);
        b.check(at.clone(), &m.mul(&inv)?.is_identity(), &true);
        b.check(at, &inv.mul(&m)?.is_identity(), &true);
    }
    Ok(b.finish())
}

/// Volume ratio against `C(n, n-k+1)` wherever the first `n_max` terms are
/// positive.
pub fn volume_ratio_report(
    points: &[SeqParams],
    rp: ReportParams,
    n_max: u64,
) -> Result<IdentityReport> {
    let mut b = ReportBuilder::new(IdentityId::VolumeRatio, rp, (n_max, n_max));
    for sp in points {
        if !sp.is_positive() {
            continue;
        }
        let tn = Tnomials::new(*sp, n_max)?;
        for n in 1..=n_max {
            for k in 1..=n {
                let at = Location::nk(n, k).at(*sp);
                b.check(at, &volume_ratio(sp, k, n)?, &tn.coeff(n, n - k + 1)?);
            }
        }
    }
    Ok(b.finish())
}
