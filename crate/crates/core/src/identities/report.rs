use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::tseq::SeqParams;

/// Every identity and cross-check this crate can sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    RouteAgreement,
    SymbolicCoherence,
    Complementation,
    IterativeRule,
    ScaleInvariance,
    TermForms,
    SplitRecurrence,
    CompositionRecurrence,
    SequenceGeneratingFunction,
    GeneratingFunctionA,
    GeneratingFunctionB,
    GeneratingFunctionC,
    SeriesInverse,
    BinomialLikeA,
    BinomialLikeB,
    Orthogonality,
    VandermondeProof,
    VandermondeStatement,
    PartialFractionUnity,
    Inversion,
    GaussianExplicit,
    GaussianInverse,
    PhiInversion,
    FibonacciSplit,
    FibonomialRecurrence,
    FibonomialGeneratingFunction,
    Selections,
    BipartiteMultigraphs,
    AcyclicRecurrence,
    AcyclicInverse,
    InverseMatrixOracle,
    VolumeRatio,
}

impl IdentityId {
    pub const ALL: [IdentityId; 32] = [
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
        IdentityId::GaussianExplicit,
        IdentityId::GaussianInverse,
        IdentityId::PhiInversion,
        IdentityId::FibonacciSplit,
        IdentityId::FibonomialRecurrence,
        IdentityId::FibonomialGeneratingFunction,
        IdentityId::Selections,
        IdentityId::BipartiteMultigraphs,
        IdentityId::AcyclicRecurrence,
        IdentityId::AcyclicInverse,
        IdentityId::InverseMatrixOracle,
        IdentityId::VolumeRatio,
    ];

    pub fn name(&self) -> &'static str {
        use IdentityId::*;
        match self {
            RouteAgreement => "route-agreement",
            SymbolicCoherence => "symbolic-coherence",
            Complementation => "complementation",
            IterativeRule => "iterative-rule",
            ScaleInvariance => "scale-invariance",
            TermForms => "term-forms",
            SplitRecurrence => "split-recurrence",
            CompositionRecurrence => "composition-recurrence",
            SequenceGeneratingFunction => "sequence-gf",
            GeneratingFunctionA => "gf-a",
            GeneratingFunctionB => "gf-b",
            GeneratingFunctionC => "gf-c",
            SeriesInverse => "series-inverse",
            BinomialLikeA => "binomial-like-a",
            BinomialLikeB => "binomial-like-b",
            Orthogonality => "orthogonality",
            VandermondeProof => "vandermonde-proof",
            VandermondeStatement => "vandermonde-statement",
            PartialFractionUnity => "partial-fraction-unity",
            Inversion => "inversion",
            GaussianExplicit => "gaussian-explicit",
            GaussianInverse => "gaussian-inverse",
            PhiInversion => "phi-inversion",
            FibonacciSplit => "fibonacci-split",
            FibonomialRecurrence => "fibonomial-recurrence",
            FibonomialGeneratingFunction => "fibonomial-gf",
            Selections => "selections",
            BipartiteMultigraphs => "bipartite-multigraphs",
            AcyclicRecurrence => "acyclic-recurrence",
            AcyclicInverse => "acyclic-inverse",
            InverseMatrixOracle => "inverse-matrix-oracle",
            VolumeRatio => "volume-ratio",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown identity `{s}`")))
    }
}

/// What a report was evaluated over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReportParams {
    Sequence(SeqParams),
    /// `p`, `q` left as indeterminates.
    Symbolic,
    /// The alpha-Fibonacci family.
    Alpha(u64),
    /// Gaussian case `p = 1` with the given `q`.
    Gaussian(i64),
    /// Every `(p, q)` in the inclusive box.
    Grid {
        p: (i64, i64),
        q: (i64, i64),
    },
    /// An explicit list of parameter points.
    Points(Vec<SeqParams>),
    /// A named parameter taking each listed value.
    Values {
        name: String,
        values: Vec<i64>,
    },
}

impl fmt::Display for ReportParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReportParams::Sequence(s) => write!(f, "{s}"),
            ReportParams::Symbolic => f.write_str("symbolic"),
            ReportParams::Alpha(a) => write!(f, "alpha={a}"),
            ReportParams::Gaussian(q) => write!(f, "gaussian q={q}"),
            ReportParams::Grid { p, q } => {
                write!(f, "p in [{}, {}], q in [{}, {}]", p.0, p.1, q.0, q.1)
            }
            ReportParams::Points(points) => {
                let shown: Vec<String> = points.iter().map(ToString::to_string).collect();
                f.write_str(&shown.join(", "))
            }
            ReportParams::Values { name, values } => {
                let shown: Vec<String> = values.iter().map(ToString::to_string).collect();
                write!(f, "{name} in {{{}}}", shown.join(", "))
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Holds,
    Fails,
}

impl Status {
    pub fn name(&self) -> &'static str {
        match self {
            Status::Holds => "holds",
            Status::Fails => "fails",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Where a check was evaluated.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Location {
    pub n: i64,
    pub k: i64,
    /// Third index, used by the Vandermonde convolution.
    pub m: Option<i64>,
    /// Set when a report sweeps several parameter points.
    pub params: Option<SeqParams>,
}

impl Location {
    pub fn nk(n: u64, k: u64) -> Self {
        Self {
            n: n as i64,
            k: k as i64,
            ..Self::default()
        }
    }

    pub fn with_m(mut self, m: u64) -> Self {
        self.m = Some(m as i64);
        self
    }

    pub fn at(mut self, params: SeqParams) -> Self {
        self.params = Some(params);
        self
    }
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(p) = &self.params {
            write!(f, "{p} ")?;
        }
        write!(f, "n={}", self.n)?;
        if let Some(m) = self.m {
            write!(f, " m={m}")?;
        }
        write!(f, " k={}", self.k)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub location: Location,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of sweeping one identity over a range.
///
/// `status` is `Fails` exactly when a counterexample is recorded. `expected`
/// is `Fails` only for checks that exist to document a false claim.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    identity: IdentityId,
    params: ReportParams,
    range: (u64, u64),
    expected: Status,
    checked: u64,
    failures: u64,
    first_counterexample: Option<Counterexample>,
}

impl IdentityReport {
    pub fn identity(&self) -> IdentityId {
        self.identity
    }

    pub fn params(&self) -> &ReportParams {
        &self.params
    }

    /// `(n_max, k_max)` of the sweep.
    pub fn range(&self) -> (u64, u64) {
        self.range
    }

    pub fn status(&self) -> Status {
        if self.first_counterexample.is_some() {
            Status::Fails
        } else {
            Status::Holds
        }
    }

    pub fn expected(&self) -> Status {
        self.expected
    }

    /// Number of individual equalities evaluated.
    pub fn checked(&self) -> u64 {
        self.checked
    }

    /// Number of evaluated equalities that did not hold.
    pub fn failures(&self) -> u64 {
        self.failures
    }

    pub fn first_counterexample(&self) -> Option<&Counterexample> {
        self.first_counterexample.as_ref()
    }

    pub fn holds(&self) -> bool {
        self.status() == Status::Holds
    }

    /// True when the outcome differs from what was expected.
    pub fn is_failure(&self) -> bool {
        self.status() != self.expected
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.is_failure() { "FAIL" } else { "ok" };
        write!(
            f,
            "{verdict:4} {} [{}] n<={} k<={}: {} ({}/{} checks failed",
            self.identity,
            self.params,
            self.range.0,
            self.range.1,
            self.status(),
            self.failures,
            self.checked
        )?;
        if self.expected == Status::Fails {
            write!(f, ", expected to fail")?;
        }
        write!(f, ")")?;
        if let Some(c) = &self.first_counterexample {
            write!(
                f,
                "; first counterexample at {}: {} != {}",
                c.location, c.lhs, c.rhs
            )?;
        }
        Ok(())
    }
}

/// Accumulates checks into an [`IdentityReport`], keeping the first mismatch.
#[derive(Debug)]
pub struct ReportBuilder {
    identity: IdentityId,
    params: ReportParams,
    range: (u64, u64),
    expected: Status,
    checked: u64,
    failures: u64,
    first: Option<Counterexample>,
}

impl ReportBuilder {
    pub fn new(identity: IdentityId, params: ReportParams, range: (u64, u64)) -> Self {
        Self {
            identity,
            params,
            range,
            expected: Status::Holds,
            checked: 0,
            failures: 0,
            first: None,
        }
    }

    /// Marks the identity as one that is expected to have counterexamples.
    pub fn expect_failure(mut self) -> Self {
        self.expected = Status::Fails;
        self
    }

    pub fn check<T: PartialEq + fmt::Display>(&mut self, at: Location, lhs: &T, rhs: &T) -> bool {
        self.checked += 1;
        let ok = lhs == rhs;
        if !ok {
            self.failures += 1;
        }
        if !ok && self.first.is_none() {
            self.first = Some(Counterexample {
                location: at,
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
        ok
    }

    pub fn failed(&self) -> bool {
        self.first.is_some()
    }

    pub fn finish(self) -> IdentityReport {
        IdentityReport {
            identity: self.identity,
            params: self.params,
            range: self.range,
            expected: self.expected,
            checked: self.checked,
            failures: self.failures,
            first_counterexample: self.first,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_tracks_counterexample() {
        let mut b = ReportBuilder::new(
            IdentityId::PartialFractionUnity,
            ReportParams::Symbolic,
            (3, 3),
        );
        assert!(b.check(Location::nk(1, 1), &1, &1));
        let r = b.finish();
        assert!(r.holds() && !r.is_failure() && r.first_counterexample().is_none());

        let mut b = ReportBuilder::new(
            IdentityId::PartialFractionUnity,
            ReportParams::Symbolic,
            (3, 3),
        );
        assert!(!b.check(Location::nk(2, 1), &1, &2));
        b.check(Location::nk(3, 1), &5, &6);
        let r = b.finish();
        assert_eq!(r.status(), Status::Fails);
        assert_eq!(
            r.first_counterexample().unwrap().location,
            Location::nk(2, 1)
        );
        assert_eq!(r.checked(), 2);
        assert_eq!(r.failures(), 2);
        assert!(r.is_failure());
    }

    #[test]
    fn expected_failures_are_not_failures() {
        let mut b = ReportBuilder::new(
            IdentityId::VandermondeStatement,
            ReportParams::Sequence(SeqParams::new(2, 3)),
            (2, 4),
        )
        .expect_failure();
        b.check(Location::nk(2, 2).with_m(2), &235, &247);
        let r = b.finish();
        assert!(!r.holds());
        assert!(!r.is_failure());
        assert!(r.to_string().contains("n=2 m=2 k=2"));
    }

    #[test]
    fn names_roundtrip() {
        for id in IdentityId::ALL {
            assert_eq!(id.name().parse::<IdentityId>().unwrap(), id);
        }
    }
}
