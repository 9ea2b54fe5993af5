//! Sweeps of the coefficient-level identities over `(p, q)` grids.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::gf::{check_a, check_b, check_c, check_series_inverse, loc, orthogonality_sums};
use super::report::{IdentityId, IdentityReport, ReportBuilder, ReportParams};
use super::theorem::{check_binomial_like, Form};
use super::vandermonde::vandermonde_sweep;
use crate::algebra::{choose2, BiPoly, Rational};
use crate::error::{Error, Result};
use crate::tnomial::{
    coeff_lambda_multiset, coeff_lambda_subset, coeff_partial_fractions, coeff_product,
    fnomial_factorial, symbolic_triangle, CoeffQuery, Tnomials, Triangle,
};
use crate::tseq::{
    all_compositions, check_composition_recurrence, check_split_recurrence, term_closed, term_sum,
    term_symbolic, terms_from_generating_function, SeqParams,
};

/// Inclusive box of integer `(p, q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Grid {
    pub p: (i64, i64),
    pub q: (i64, i64),
}

impl Grid {
    pub fn new(p: (i64, i64), q: (i64, i64)) -> Self {
        Self { p, q }
    }

    /// Same range for both parameters.
    pub fn square(lo: i64, hi: i64) -> Self {
        Self::new((lo, hi), (lo, hi))
    }

    /// Points in `p`-major order.
    pub fn points(&self) -> Vec<SeqParams> {
        (self.p.0..=self.p.1)
            .flat_map(|p| (self.q.0..=self.q.1).map(move |q| SeqParams::new(p, q)))
            .collect()
    }

    pub fn report_params(&self) -> ReportParams {
        ReportParams::Grid {
            p: self.p,
            q: self.q,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    /// Largest `n` swept.
    pub n_max: u64,
    /// Truncation order for the `B_n` and `A_n B_n` series.
    pub order: usize,
    /// Scales tried by the scale-invariance sweep.
    pub scales: Vec<u64>,
}

impl SuiteConfig {
    pub fn new(n_max: u64) -> Self {
        Self {
            n_max,
            order: 10,
            scales: vec![1, 2, 3],
        }
    }
}

impl IdentityId {
    /// Identities swept per `(p, q)` point by [`run_identity`].
    pub const PER_PARAMS: [IdentityId; 20] = [
        IdentityId::RouteAgreement,
        IdentityId::SymbolicCoherence,
        IdentityId::Complementation,
        IdentityId::IterativeRule,
        IdentityId::ScaleInvariance,
        IdentityId::TermForms,
        IdentityId::SplitRecurrence,
        IdentityId::CompositionRecurrence,
        IdentityId::SequenceGeneratingFunction,
        IdentityId::GeneratingFunctionA,
        IdentityId::GeneratingFunctionB,
        IdentityId::GeneratingFunctionC,
        IdentityId::SeriesInverse,
        IdentityId::BinomialLikeA,
        IdentityId::BinomialLikeB,
        IdentityId::Orthogonality,
        IdentityId::VandermondeProof,
        IdentityId::VandermondeStatement,
        IdentityId::PartialFractionUnity,
        IdentityId::Inversion,
    ];

    pub fn is_per_params(&self) -> bool {
        Self::PER_PARAMS.contains(self)
    }
}

/// Sweeps `id` for a single parameter point.
pub fn run_identity(
    id: IdentityId,
    params: &SeqParams,
    cfg: &SuiteConfig,
) -> Result<IdentityReport> {
    sweep(id, &[*params], ReportParams::Sequence(*params), cfg)
}

/// Sweeps `id` over every point of `grid`; locations carry the point.
pub fn run_on_grid(id: IdentityId, grid: &Grid, cfg: &SuiteConfig) -> Result<IdentityReport> {
    sweep(id, &grid.points(), grid.report_params(), cfg)
}

/// Sweeps `id` over an explicit list of points, summarized under `rp`.
pub fn run_on_points(
    id: IdentityId,
    points: &[SeqParams],
    rp: ReportParams,
    cfg: &SuiteConfig,
) -> Result<IdentityReport> {
    sweep(id, points, rp, cfg)
}

fn sweep(
    id: IdentityId,
    points: &[SeqParams],
    rp: ReportParams,
    cfg: &SuiteConfig,
) -> Result<IdentityReport> {
    let n_max = cfg.n_max;
    match id {
        IdentityId::VandermondeProof | IdentityId::VandermondeStatement => {
            let [proof, statement] = vandermonde_sweep(points, n_max, rp)?;
            return Ok(if id == IdentityId::VandermondeProof {
                proof
            } else {
                statement
            });
        }
        _ if !id.is_per_params() => {
            return Err(Error::Precondition(format!(
                "{id} is not swept over (p, q) points"
            )))
        }
        _ => {}
    }
    let mut b = ReportBuilder::new(id, rp, (n_max, n_max));
    let symbolic = if id == IdentityId::SymbolicCoherence {
        Some(symbolic_triangle(n_max)?)
    } else {
        None
    };
    for sp in points {
        let at = (points.len() > 1).then_some(*sp);
        let ctx = Point { sp, at, cfg };
        match id {
            IdentityId::RouteAgreement => ctx.route_agreement(&mut b)?,
            IdentityId::SymbolicCoherence => {
                ctx.symbolic(symbolic.as_ref().expect("built"), &mut b)?
            }
            IdentityId::Complementation => ctx.complementation(&mut b)?,
            IdentityId::IterativeRule => ctx.iterative_rule(&mut b)?,
            IdentityId::ScaleInvariance => ctx.scale_invariance(&mut b)?,
            IdentityId::TermForms => ctx.term_forms(&mut b),
            IdentityId::SplitRecurrence => ctx.split(&mut b),
            IdentityId::CompositionRecurrence => ctx.compositions(&mut b),
            IdentityId::SequenceGeneratingFunction => ctx.sequence_gf(&mut b)?,
            IdentityId::GeneratingFunctionA
            | IdentityId::GeneratingFunctionB
            | IdentityId::GeneratingFunctionC
            | IdentityId::SeriesInverse
            | IdentityId::BinomialLikeA
            | IdentityId::BinomialLikeB => ctx.series(id, &mut b)?,
            IdentityId::Orthogonality => ctx.orthogonality(&mut b)?,
            IdentityId::PartialFractionUnity => ctx.partial_fraction_unity(&mut b)?,
            IdentityId::Inversion => ctx.inversion(&mut b)?,
            _ => unreachable!("filtered above"),
        }
    }
    Ok(b.finish())
}

struct Point<'a> {
    sp: &'a SeqParams,
    at: Option<SeqParams>,
    cfg: &'a SuiteConfig,
}

/// `Ok(None)` when a route does not apply to the parameters.
fn applicable<T>(r: Result<T>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::Degenerate(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

impl Point<'_> {
    fn n_max(&self) -> u64 {
        self.cfg.n_max
    }

    fn tnomials(&self, bound: u64) -> Result<Tnomials> {
        Tnomials::new(*self.sp, bound)
    }

    fn route_agreement(&self, b: &mut ReportBuilder) -> Result<()> {
        let tn = self.tnomials(self.n_max())?;
        let pq = self.sp.p_big() * self.sp.q_big();
        for n in 0..=self.n_max() {
            for k in 0..=n {
                let rec = tn.coeff(n, k)?;
                let at = loc(n, k, self.at);
                let query = CoeffQuery::new(*self.sp, n, k);
                if let Some(v) = applicable(fnomial_factorial(self.sp, n, k))? {
                    b.check(at.clone(), &v, &rec);
                }
                if let Some(v) = applicable(coeff_product(&query))? {
                    b.check(at.clone(), &v, &rec);
                }
                if let Some(v) = applicable(coeff_partial_fractions(self.sp, n as i64, k))? {
                    b.check(at.clone(), &v, &Rational::from_integer(rec.clone()));
                }
                let subset = coeff_lambda_subset(self.sp, n, k)?;
                b.check(at.clone(), &subset, &(&rec * pq.pow(choose2(k) as u32)));
                // C(n'+k-1, k) with n' = n-k+1 boxes
                b.check(at, &coeff_lambda_multiset(self.sp, n - k + 1, k)?, &rec);
            }
        }
        Ok(())
    }

    fn symbolic(&self, sym: &Triangle<BiPoly>, b: &mut ReportBuilder) -> Result<()> {
        let tn = self.tnomials(self.n_max())?;
        let (p, q) = (self.sp.p_big(), self.sp.q_big());
        for n in 0..=self.n_max() {
            for k in 0..=n {
                let poly = sym.get(n, k)?;
                let at = loc(n, k, self.at);
                b.check(at.clone(), &poly.eval(&p, &q), &tn.coeff(n, k)?);
                b.check(
                    at.clone(),
                    &poly.is_homogeneous_of((k * (n - k)) as u32),
                    &true,
                );
                b.check(at, &poly.swap_vars(), &poly);
            }
        }
        Ok(())
    }

    fn complementation(&self, b: &mut ReportBuilder) -> Result<()> {
        let tn = self.tnomials(self.n_max())?;
        for n in 0..=self.n_max() {
            for k in 0..=n {
                b.check(loc(n, k, self.at), &tn.coeff(n, k)?, &tn.coeff(n, n - k)?);
            }
        }
        Ok(())
    }

    fn iterative_rule(&self, b: &mut ReportBuilder) -> Result<()> {
        let tn = self.tnomials(self.n_max())?;
        for n in 0..=self.n_max() {
            for m in 0..=n {
                for k in 0..=m {
                    let lhs = tn.coeff(n, m)? * tn.coeff(m, k)?;
                    let rhs = tn.coeff(n, k)? * tn.coeff(n - k, n - m)?;
                    b.check(loc(n, k, self.at).with_m(m), &lhs, &rhs);
                }
            }
        }
        Ok(())
    }

    fn scale_invariance(&self, b: &mut ReportBuilder) -> Result<()> {
        let tn = self.tnomials(self.n_max())?;
        let base = self.sp.unscaled();
        for &s in &self.cfg.scales {
            let scaled = SeqParams::with_scale(base.p(), base.q(), s)?;
            for n in 0..=self.n_max() {
                let at = loc(n, 0, self.at);
                b.check(at, &term_closed(&scaled, n), &(term_closed(&base, n) * s));
                for k in 0..=n {
                    if let Some(v) = applicable(fnomial_factorial(&scaled, n, k))? {
                        b.check(loc(n, k, self.at), &v, &tn.coeff(n, k)?);
                    }
                }
            }
        }
        Ok(())
    }

    fn term_forms(&self, b: &mut ReportBuilder) {
        let (p, q) = (self.sp.p_big(), self.sp.q_big());
        for n in 0..=self.n_max() {
            let closed = term_closed(self.sp, n);
            let at = loc(n, 0, self.at);
            b.check(at.clone(), &term_sum(self.sp, n), &closed);
            b.check(
                at,
                &(term_symbolic(n).eval(&p, &q) * self.sp.scale()),
                &closed,
            );
        }
    }

    fn split(&self, b: &mut ReportBuilder) {
        for n in 0..=self.n_max() {
            for k in 0..=n {
                b.check(
                    loc(n, k, self.at).with_m(n - k),
                    &check_split_recurrence(self.sp, k, n - k),
                    &true,
                );
            }
        }
    }

    fn compositions(&self, b: &mut ReportBuilder) {
        for n in 1..=self.n_max() {
            for c in all_compositions(n) {
                b.check(
                    loc(n, c.len() as u64, self.at),
                    &check_composition_recurrence(self.sp, &c),
                    &true,
                );
            }
        }
    }

    fn sequence_gf(&self, b: &mut ReportBuilder) -> Result<()> {
        let terms = terms_from_generating_function(self.sp, self.n_max() as usize + 1)?;
        for (n, t) in terms.iter().enumerate() {
            b.check(
                loc(n as u64, 0, self.at),
                t,
                &term_closed(self.sp, n as u64),
            );
        }
        Ok(())
    }

    fn series(&self, id: IdentityId, b: &mut ReportBuilder) -> Result<()> {
        let order = self.cfg.order;
        let bound = self.n_max() + order as u64;
        let tri = Triangle::new(self.sp.p_big(), self.sp.q_big(), bound)?;
        for n in 0..=self.n_max() {
            match id {
                IdentityId::GeneratingFunctionA => {
                    check_a(&tri, n, b, self.at)?;
                }
                IdentityId::GeneratingFunctionB if n >= 1 => {
                    check_b(&tri, n, order, b, self.at)?;
                }
                IdentityId::GeneratingFunctionC => {
                    check_c(&tri, n, b, self.at)?;
                }
                IdentityId::SeriesInverse => check_series_inverse(&tri, n, order, b, self.at)?,
                IdentityId::BinomialLikeA if n >= 1 => {
                    check_binomial_like(&tri, n, Form::A, b, self.at)?
                }
                IdentityId::BinomialLikeB if n >= 1 => {
                    check_binomial_like(&tri, n, Form::B, b, self.at)?
                }
                _ => {}
            }
        }
        Ok(())
    }

    fn orthogonality(&self, b: &mut ReportBuilder) -> Result<()> {
        let tn = self.tnomials(3 * self.n_max())?;
        let zero = BigInt::zero();
        for n in 1..=self.n_max() {
            for s in 1..=self.n_max() {
                let (first, second) = orthogonality_sums(&tn, n, s)?;
                b.check(loc(n, s, self.at), &first, &zero);
                if s == 1 {
                    b.check(loc(n, n, self.at), &second, &zero);
                }
            }
        }
        Ok(())
    }

    fn partial_fraction_unity(&self, b: &mut ReportBuilder) -> Result<()> {
        for k in 0..=self.n_max() {
            if let Some(v) = applicable(coeff_partial_fractions(self.sp, k as i64, k))? {
                b.check(loc(k, k, self.at), &v, &Rational::one());
            }
        }
        Ok(())
    }

    fn inversion(&self, b: &mut ReportBuilder) -> Result<()> {
        let tn = self.tnomials(self.n_max())?;
        let size = self.n_max() as usize + 1;
        let mut c = vec![vec![BigInt::zero(); size]; size];
        let mut inv = vec![vec![BigInt::zero(); size]; size];
        for n in 0..size {
            for k in 0..=n {
                c[n][k] = tn.coeff(n as u64, k as u64)?;
                inv[n][k] = tn.inverse(n as u64, k as u64)?;
            }
        }
        for n in 0..size {
            for k in 0..=n {
                let delta = if n == k {
                    BigInt::one()
                } else {
                    BigInt::zero()
                };
                let left: BigInt = (k..=n).map(|j| &c[n][j] * &inv[j][k]).sum();
                let right: BigInt = (k..=n).map(|j| &inv[n][j] * &c[j][k]).sum();
                let at = loc(n as u64, k as u64, self.at);
                b.check(at.clone(), &left, &delta);
                b.check(at, &right, &delta);
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_per_params_identity_holds_at_a_point() {
        let cfg = SuiteConfig::new(6);
        for id in IdentityId::PER_PARAMS {
            let r = run_identity(id, &SeqParams::new(2, 3), &cfg).unwrap();
            assert!(!r.is_failure(), "{r}");
            assert!(r.checked() > 0, "{id} checked nothing");
        }
    }

    #[test]
    fn small_grid() {
        let cfg = SuiteConfig::new(4);
        let grid = Grid::square(-1, 2);
        assert_eq!(grid.points().len(), 16);
        for id in IdentityId::PER_PARAMS {
            let r = run_on_grid(id, &grid, &cfg).unwrap();
            assert!(!r.is_failure(), "{r}");
        }
    }

    #[test]
    fn non_grid_identity_is_rejected() {
        let err = run_identity(
            IdentityId::Selections,
            &SeqParams::new(1, 1),
            &SuiteConfig::new(3),
        );
        assert!(matches!(err, Err(Error::Precondition(_))));
    }
}
