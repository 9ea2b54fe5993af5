use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use tnomial_core::identities::{
    fibonomial_suite, gaussian_explicit, gaussian_inverse, phi_inversion, run_on_points, Grid,
    Location, ReportBuilder, ReportParams, SuiteConfig,
};
use tnomial_core::oracle::{
    acyclic_recurrence_report, bipartite_report, inverse_matrix_report, selections_report,
    verify_inverse_relation, volume_ratio_report, Budget,
};
use tnomial_core::tnomial::{coeff_by_route, symbolic_triangle};
use tnomial_core::{
    coeff_inverse, CoeffQuery, Error, IdentityId, IdentityReport, Route, SeqParams, Tnomials,
};

use crate::cli::{Cli, CoeffArgs, Command, Format, ModeArg, OracleArgs, TableArgs, VerifyArgs};
use crate::render::{csv_text, json_text, reports_text};

pub const BUDGET_VAR: &str = "TNOMIAL_MAX_BUDGET";

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Runtime(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Precondition(msg) => Failure::Usage(msg),
            other => Failure::Runtime(other),
        }
    }
}

type Outcome<T> = std::result::Result<T, Failure>;

pub struct Output {
    pub text: String,
    pub all_hold: bool,
}

impl Output {
    fn value(text: String) -> Self {
        Self {
            text,
            all_hold: true,
        }
    }
}

pub fn run(cli: Cli) -> Outcome<Output> {
    match cli.command {
        Command::Coeff(a) => coeff(&a),
        Command::Table(a) => table(&a),
        Command::Verify(a) => verify(&a),
        Command::Oracle(a) => oracle(&a),
    }
}

fn budget_from_env() -> Outcome<Budget> {
    match std::env::var(BUDGET_VAR) {
        Ok(v) => v.trim().parse().map(Budget::new).map_err(|_| {
            Failure::Usage(format!(
                "{BUDGET_VAR} must be a non-negative integer, got `{v}`"
            ))
        }),
        Err(_) => Ok(Budget::default()),
    }
}

fn numeric_params(p: Option<i64>, q: Option<i64>, scale: u64) -> Outcome<SeqParams> {
    match (p, q) {
        (Some(p), Some(q)) => Ok(SeqParams::with_scale(p, q, scale)?),
        _ => Err(Failure::Usage(
            "--p and --q are required in numeric mode".into(),
        )),
    }
}

fn coeff(a: &CoeffArgs) -> Outcome<Output> {
    if a.mode == ModeArg::Symbolic {
        if a.inverse || a.route != "recurrence" {
            return Err(Failure::Usage(
                "symbolic mode supports only the recurrence route".into(),
            ));
        }
        let value = tnomial_core::coeff_symbolic(a.n, a.k)?.to_string();
        return Ok(Output::value(coeff_text(
            a,
            "p",
            "q",
            &[("symbolic".into(), value)],
        )?));
    }
    let params = numeric_params(a.p, a.q, a.scale)?;
    let query = CoeffQuery::new(params, a.n, a.k);
    let (p, q) = (params.p().to_string(), params.q().to_string());
    if a.inverse {
        let v = coeff_inverse(&query)?.to_string();
        return Ok(Output::value(coeff_text(
            a,
            &p,
            &q,
            &[("inverse".into(), v)],
        )?));
    }
    if a.route == "all" {
        if a.format == Format::Csv {
            return Err(Failure::Usage("--route all has no CSV form".into()));
        }
        let rows = Route::ALL
            .iter()
            .map(|r| {
                let v = match coeff_by_route(*r, &query) {
                    Ok(v) => v.to_string(),
                    Err(Error::Degenerate(msg)) => format!("n/a ({msg})"),
                    Err(e) => return Err(e.into()),
                };
                Ok((r.name().to_string(), v))
            })
            .collect::<Outcome<Vec<_>>>()?;
        return Ok(Output::value(coeff_text(a, &p, &q, &rows)?));
    }
    let route = Route::from_str(&a.route).map_err(|e| Failure::Usage(e.to_string()))?;
    let v = coeff_by_route(route, &query)?.to_string();
    Ok(Output::value(coeff_text(
        a,
        &p,
        &q,
        &[(route.name().into(), v)],
    )?))
}

fn coeff_text(a: &CoeffArgs, p: &str, q: &str, values: &[(String, String)]) -> Outcome<String> {
    Ok(match a.format {
        Format::Plain if values.len() == 1 => format!("{}\n", values[0].1),
        Format::Plain => values.iter().map(|(r, v)| format!("{r}: {v}\n")).collect(),
        Format::Csv => csv_text(
            &["n", "k", "p", "q", "value"],
            &[vec![
                a.n.to_string(),
                a.k.to_string(),
                p.into(),
                q.into(),
                values[0].1.clone(),
            ]],
        ),
        Format::Json => {
            let entry = |(route, value): &(String, String)| {
                json!({
                    "n": a.n.to_string(),
                    "k": a.k.to_string(),
                    "p": p,
                    "q": q,
                    "scale": a.scale.to_string(),
                    "route": route,
                    "value": value,
                })
            };
            let v = if values.len() == 1 {
                entry(&values[0])
            } else {
                Value::Array(values.iter().map(entry).collect())
            };
            json_text(&v)
        }
    })
}

fn table(a: &TableArgs) -> Outcome<Output> {
    let (p, q, rows): (String, String, Vec<Vec<String>>) = match a.mode {
        ModeArg::Numeric => {
            let params = numeric_params(a.p, a.q, 1)?;
            let tn = Tnomials::new(params, a.max)?;
            let rows = (0..=a.max)
                .map(|n| Ok(tn.row(n)?.iter().map(ToString::to_string).collect()))
                .collect::<Outcome<_>>()?;
            (params.p().to_string(), params.q().to_string(), rows)
        }
        ModeArg::Symbolic => {
            let tri = symbolic_triangle(a.max)?;
            let rows = (0..=a.max)
                .map(|n| Ok(tri.row(n)?.iter().map(ToString::to_string).collect()))
                .collect::<Outcome<_>>()?;
            ("p".into(), "q".into(), rows)
        }
    };
    let text = match a.format {
        Format::Plain if a.mode == ModeArg::Numeric => {
            rows.iter().map(|r| format!("{}\n", r.join(" "))).collect()
        }
        Format::Plain => rows
            .iter()
            .enumerate()
            .flat_map(|(n, r)| {
                r.iter()
                    .enumerate()
                    .map(move |(k, v)| format!("C({n}, {k}) = {v}\n"))
            })
            .collect(),
        Format::Csv => {
            let cells: Vec<Vec<String>> = rows
                .iter()
                .enumerate()
                .flat_map(|(n, r)| {
                    let (p, q) = (&p, &q);
                    r.iter().enumerate().map(move |(k, v)| {
                        vec![
                            n.to_string(),
                            k.to_string(),
                            p.clone(),
                            q.clone(),
                            v.clone(),
                        ]
                    })
                })
                .collect();
            csv_text(&["n", "k", "p", "q", "value"], &cells)
        }
        Format::Json => json_text(&json!({
            "p": p,
            "q": q,
            "max": a.max.to_string(),
            "rows": rows,
        })),
    };
    Ok(Output::value(text))
}

fn parse_grid(s: &str) -> Outcome<Grid> {
    let bad = || Failure::Usage(format!("--grid expects LO:HI, got `{s}`"));
    let (lo, hi) = s.split_once(':').ok_or_else(bad)?;
    let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: i64 = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok(Grid::square(lo, hi))
}

/// The parameter points a verify run sweeps.
struct Scope {
    points: Vec<SeqParams>,
    params: ReportParams,
}

impl Scope {
    fn from_args(a: &VerifyArgs) -> Outcome<Self> {
        if let (Some(p), Some(q)) = (a.p, a.q) {
            let sp = SeqParams::new(p, q);
            return Ok(Self {
                points: vec![sp],
                params: ReportParams::Sequence(sp),
            });
        }
        let grid = parse_grid(&a.grid)?;
        let mut points = grid.points();
        match a.samples {
            None => Ok(Self {
                points,
                params: grid.report_params(),
            }),
            Some(k) => {
                let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
                points = points.choose_multiple(&mut rng, k).copied().collect();
                points.sort_by_key(|sp| (sp.p(), sp.q()));
                Ok(Self {
                    params: ReportParams::Points(points.clone()),
                    points,
                })
            }
        }
    }

    fn filtered(&self, keep: impl Fn(&SeqParams) -> bool) -> Vec<SeqParams> {
        self.points.iter().copied().filter(|sp| keep(sp)).collect()
    }

    fn subset(&self, keep: impl Fn(&SeqParams) -> bool) -> Option<(Vec<SeqParams>, ReportParams)> {
        let pts = self.filtered(keep);
        if pts.is_empty() {
            None
        } else if pts.len() == self.points.len() {
            Some((pts, self.params.clone()))
        } else if let [single] = pts[..] {
            Some((pts, ReportParams::Sequence(single)))
        } else {
            let rp = ReportParams::Points(pts.clone());
            Some((pts, rp))
        }
    }

    /// Distinct `q` of the points with `p = 1`.
    fn gaussian_qs(&self) -> Vec<i64> {
        let mut qs: Vec<i64> = self
            .filtered(|sp| sp.p() == 1)
            .iter()
            .map(SeqParams::q)
            .collect();
        qs.dedup();
        qs
    }

    /// Distinct positive `p` of the points with `p = q`.
    fn diagonal(&self) -> Vec<u64> {
        self.filtered(|sp| sp.p() == sp.q() && sp.p() >= 1)
            .iter()
            .map(|sp| sp.p() as u64)
            .collect()
    }
}

fn selected_identities(name: &str) -> Outcome<Vec<IdentityId>> {
    use IdentityId::*;
    Ok(match name {
        "all" => IdentityId::ALL.to_vec(),
        "vandermonde" => vec![VandermondeProof, VandermondeStatement],
        "binomial-like" => vec![BinomialLikeA, BinomialLikeB],
        "gf" => vec![
            GeneratingFunctionA,
            GeneratingFunctionB,
            GeneratingFunctionC,
            SeriesInverse,
        ],
        "fibonomial" => vec![
            FibonacciSplit,
            FibonomialRecurrence,
            FibonomialGeneratingFunction,
        ],
        "gaussian" => vec![GaussianExplicit, GaussianInverse, PhiInversion],
        "oracle" => vec![
            Selections,
            BipartiteMultigraphs,
            AcyclicRecurrence,
            AcyclicInverse,
            InverseMatrixOracle,
            VolumeRatio,
        ],
        other => vec![IdentityId::from_str(other).map_err(|e| Failure::Usage(e.to_string()))?],
    })
}

fn verify(a: &VerifyArgs) -> Outcome<Output> {
    let scope = Scope::from_args(a)?;
    let budget = budget_from_env()?;
    let ids = selected_identities(&a.identity)?;
    let single = ids.len() == 1;
    let mut reports = Vec::new();
    for id in ids {
        match verify_one(id, a, &scope, &budget)? {
            Some(mut rs) => reports.append(&mut rs),
            None if single => {
                return Err(Failure::Usage(format!(
                    "no parameter point in scope applies to {id}"
                )))
            }
            None => {}
        }
    }
    Ok(Output {
        all_hold: reports.iter().all(|r| !r.is_failure()),
        text: reports_text(&reports, a.format),
    })
}

fn verify_one(
    id: IdentityId,
    a: &VerifyArgs,
    scope: &Scope,
    budget: &Budget,
) -> Outcome<Option<Vec<IdentityReport>>> {
    use IdentityId::*;
    let cfg = SuiteConfig {
        order: a.order,
        ..SuiteConfig::new(a.max)
    };
    if id.is_per_params() {
        return Ok(Some(vec![run_on_points(
            id,
            &scope.points,
            scope.params.clone(),
            &cfg,
        )?]));
    }
    let reports = match id {
        GaussianExplicit => {
            let qs = scope.gaussian_qs();
            if qs.is_empty() {
                return Ok(None);
            }
            let mut b = ReportBuilder::new(
                id,
                ReportParams::Values {
                    name: "q".into(),
                    values: qs.clone(),
                },
                (a.max, a.max),
            );
            for &q in &qs {
                for n in 0..=a.max {
                    for k in 0..=n {
                        let at = Location::nk(n, k).at(SeqParams::new(1, q));
                        match gaussian_explicit(q, n, k) {
                            Ok(v) => {
                                b.check(at, &v, &v);
                            }
                            Err(Error::IdentityViolation { lhs, rhs, .. }) => {
                                b.check(at, &lhs, &rhs);
                            }
                            Err(Error::Degenerate(_)) => {}
                            Err(e) => return Err(e.into()),
                        }
                    }
                }
            }
            vec![b.finish()]
        }
        GaussianInverse => scope
            .gaussian_qs()
            .into_iter()
            .map(|q| gaussian_inverse(q, a.max))
            .collect::<Result<_, _>>()?,
        PhiInversion => {
            let qs = scope.gaussian_qs();
            if qs.is_empty() {
                return Ok(None);
            }
            let mut b = ReportBuilder::new(
                id,
                ReportParams::Values {
                    name: "q".into(),
                    values: qs.clone(),
                },
                (a.max, 0),
            );
            for &q in &qs {
                for n in 0..=a.max {
                    b.check(
                        Location::nk(n, 0).at(SeqParams::new(1, q)),
                        &phi_inversion(q, n)?,
                        &true,
                    );
                }
            }
            vec![b.finish()]
        }
        FibonacciSplit | FibonomialRecurrence | FibonomialGeneratingFunction => {
            fibonomial_suite(a.alpha, a.max)?
                .into_iter()
                .filter(|r| r.identity() == id)
                .collect()
        }
        Selections => match scope.subset(|sp| sp.p() >= 1 && sp.q() >= 1) {
            Some((pts, rp)) => vec![selections_report(
                &pts,
                rp,
                a.brute_max,
                a.brute_max,
                budget,
            )?],
            None => return Ok(None),
        },
        BipartiteMultigraphs => match scope.diagonal().into_iter().max() {
            Some(alpha) => vec![bipartite_report(alpha, a.brute_max, budget)?],
            None => return Ok(None),
        },
        AcyclicRecurrence => {
            let ps = scope.diagonal();
            vec![acyclic_recurrence_report(&ps, a.brute_max, budget)?]
        }
        AcyclicInverse => scope
            .diagonal()
            .into_iter()
            .map(|p| verify_inverse_relation(p, a.max))
            .collect::<Result<_, _>>()?,
        InverseMatrixOracle => vec![inverse_matrix_report(
            &scope.points,
            scope.params.clone(),
            a.max as usize + 1,
        )?],
        VolumeRatio => match scope.subset(SeqParams::is_positive) {
            Some((pts, rp)) => vec![volume_ratio_report(&pts, rp, a.max)?],
            None => return Ok(None),
        },
        _ => unreachable!("per-parameter identities handled above"),
    };
    Ok(
        if reports.is_empty() || reports.iter().all(|r: &IdentityReport| r.checked() == 0) {
            None
        } else {
            Some(reports)
        },
    )
}

fn oracle(a: &OracleArgs) -> Outcome<Output> {
    let budget = budget_from_env()?;
    let grid = Grid::square(1, a.p_max);
    let pts = grid.points();
    let mut reports = vec![
        selections_report(&pts, grid.report_params(), a.n_max, a.k_max, &budget)?,
        bipartite_report(a.alpha_max, a.n_max, &budget)?,
        acyclic_recurrence_report(&[2, 3], a.dag_max, &budget)?,
    ];
    for p in [2, 3] {
        reports.push(verify_inverse_relation(p, a.inverse_max)?);
    }
    let mixed = Grid::square(-2, a.p_max.max(1));
    reports.push(inverse_matrix_report(
        &mixed.points(),
        mixed.report_params(),
        a.inverse_max as usize + 1,
    )?);
    reports.push(volume_ratio_report(
        &pts,
        grid.report_params(),
        a.inverse_max,
    )?);
    Ok(Output {
        all_hold: reports.iter().all(|r| !r.is_failure()),
        text: reports_text(&reports, a.format),
    })
}
