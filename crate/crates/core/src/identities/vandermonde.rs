//! Vandermonde-type convolution for T-nomials, under two exponent readings.
//!
//! `C(n+m, k) = sum_s C(n, s) C(m, k-s) p^E q^((n-s)(k-s))` where `E` is
//! `(m+s-k) s` in the proof reading and `m-k+s` in the statement reading.
//! Only the first is an identity.

use num_bigint::BigInt;

use super::report::{IdentityId, IdentityReport, Location, ReportBuilder, ReportParams};
use crate::algebra::int_pow;
use crate::error::{Error, Result};
use crate::tnomial::Tnomials;
use crate::tseq::SeqParams;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VandermondePoint {
    pub lhs: BigInt,
    pub proof_rhs: BigInt,
    pub statement_rhs: BigInt,
}

impl VandermondePoint {
    pub fn proof_holds(&self) -> bool {
        self.lhs == self.proof_rhs
    }

    pub fn statement_holds(&self) -> bool {
        self.lhs == self.statement_rhs
    }
}

pub(crate) fn vandermonde_point(tn: &Tnomials, n: u64, m: u64, k: u64) -> Result<VandermondePoint> {
    if k > n + m {
        return Err(Error::Precondition(format!(
            "k = {k} exceeds n + m = {}",
            n + m
        )));
    }
    let (p, q) = (tn.params().p(), tn.params().q());
    let mut proof_rhs = BigInt::from(0);
    let mut statement_rhs = BigInt::from(0);
    for s in 0..=k.min(n) {
        if k - s > m {
            continue;
        }
        let base = tn.coeff(n, s)? * tn.coeff(m, k - s)? * int_pow(q, (n - s) * (k - s));
        proof_rhs += &base * int_pow(p, (m + s - k) * s);
        statement_rhs += base * int_pow(p, m + s - k);
    }
    Ok(VandermondePoint {
        lhs: tn.coeff(n + m, k)?,
        proof_rhs,
        statement_rhs,
    })
}

/// Both sides at one point, under both readings.
pub fn vandermonde(params: &SeqParams, n: u64, m: u64, k: u64) -> Result<VandermondePoint> {
    vandermonde_point(&Tnomials::new(*params, n + m)?, n, m, k)
}

/// Sweeps `n, m <= max`, `k <= n + m` over each parameter point. Returns the
/// proof-reading report and the statement-reading report, the latter marked
/// as an expected failure.
pub fn vandermonde_sweep(
    params: &[SeqParams],
    max: u64,
    report_params: ReportParams,
) -> Result<[IdentityReport; 2]> {
    let range = (max, 2 * max);
    let mut proof = ReportBuilder::new(IdentityId::VandermondeProof, report_params.clone(), range);
    let mut statement =
        ReportBuilder::new(IdentityId::VandermondeStatement, report_params, range).expect_failure();
    let several = params.len() > 1;
    for sp in params {
        let tn = Tnomials::new(*sp, 2 * max)?;
        for n in 0..=max {
            for m in 0..=max {
                for k in 0..=n + m {
                    let v = vandermonde_point(&tn, n, m, k)?;
                    let mut at = Location::nk(n, k).with_m(m);
                    if several {
                        at = at.at(*sp);
                    }
                    proof.check(at.clone(), &v.lhs, &v.proof_rhs);
                    statement.check(at, &v.lhs, &v.statement_rhs);
                }
            }
        }
    }
    Ok([proof.finish(), statement.finish()])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::Status;

    #[test]
    fn readings_disagree_at_two_two_two() {
        let v = vandermonde(&SeqParams::new(2, 3), 2, 2, 2).unwrap();
        assert_eq!(v.lhs, BigInt::from(247));
        assert_eq!(v.proof_rhs, BigInt::from(247));
        assert_eq!(v.statement_rhs, BigInt::from(235));
        assert!(v.proof_holds() && !v.statement_holds());
    }

    #[test]
    fn k_zero() {
        let v = vandermonde(&SeqParams::new(2, 3), 3, 0, 0).unwrap();
        assert_eq!(v.lhs, BigInt::from(1));
        assert_eq!(v.proof_rhs, BigInt::from(1));
        assert_eq!(v.statement_rhs, BigInt::from(1));
        // with m > 0 the statement reading already picks up p^m
        let v = vandermonde(&SeqParams::new(2, 3), 3, 2, 0).unwrap();
        assert!(v.proof_holds());
        assert_eq!(v.statement_rhs, BigInt::from(4));
    }

    #[test]
    fn sweep_reports() {
        let sp = SeqParams::new(2, 3);
        let [proof, statement] = vandermonde_sweep(&[sp], 4, ReportParams::Sequence(sp)).unwrap();
        assert!(proof.holds());
        assert_eq!(statement.status(), Status::Fails);
        assert!(!statement.is_failure());
        assert!(statement.failures() > 0);
    }
}
