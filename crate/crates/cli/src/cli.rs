use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "tnomial",
    version,
    about = "Exact T-nomial coefficients and identity checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print one coefficient C(n, k) for T(p, q).
    Coeff(CoeffArgs),
    /// Print the coefficient triangle up to row --max.
    Table(TableArgs),
    /// Run identity sweeps and print one report per identity.
    Verify(VerifyArgs),
    /// Run the brute-force enumeration cross-checks.
    Oracle(OracleArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Numeric,
    Symbolic,
}

#[derive(Debug, Args)]
pub struct CoeffArgs {
    #[arg(long, allow_negative_numbers = true, required_if_eq("mode", "numeric"))]
    pub p: Option<i64>,
    #[arg(long, allow_negative_numbers = true, required_if_eq("mode", "numeric"))]
    pub q: Option<i64>,
    #[arg(long)]
    pub n: u64,
    #[arg(long)]
    pub k: u64,
    /// A route name, or `all` to print every route.
    #[arg(long, default_value = "recurrence")]
    pub route: String,
    #[arg(long, value_enum, default_value_t = ModeArg::Numeric)]
    pub mode: ModeArg,
    /// Positive integer multiplying every sequence term.
    #[arg(long, default_value_t = 1)]
    pub scale: u64,
    /// Print the inverse coefficient instead.
    #[arg(long)]
    pub inverse: bool,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, allow_negative_numbers = true, required_if_eq("mode", "numeric"))]
    pub p: Option<i64>,
    #[arg(long, allow_negative_numbers = true, required_if_eq("mode", "numeric"))]
    pub q: Option<i64>,
    #[arg(long)]
    pub max: u64,
    #[arg(long, value_enum, default_value_t = ModeArg::Numeric)]
    pub mode: ModeArg,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Identity name, a group (vandermonde, binomial-like, gf, fibonomial,
    /// gaussian, oracle) or `all`.
    #[arg(long, default_value = "all")]
    pub identity: String,
    /// Single parameter point; needs --q as well. Overrides --grid.
    #[arg(long, allow_negative_numbers = true, requires = "q")]
    pub p: Option<i64>,
    #[arg(long, allow_negative_numbers = true, requires = "p")]
    pub q: Option<i64>,
    /// Inclusive box LO:HI for both p and q.
    #[arg(long, default_value = "-2:4", allow_hyphen_values = true)]
    pub grid: String,
    /// Largest n swept.
    #[arg(long, default_value_t = 6)]
    pub max: u64,
    /// Truncation order for series identities.
    #[arg(long, default_value_t = 10)]
    pub order: usize,
    /// Largest n for brute-force enumerations.
    #[arg(long, default_value_t = 3)]
    pub brute_max: u64,
    /// Parameter of the alpha-Fibonacci family.
    #[arg(long, default_value_t = 1)]
    pub alpha: u64,
    /// Sweep this many grid points chosen at random instead of all.
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    /// Largest p and q for weighted selections and volume ratios.
    #[arg(long, default_value_t = 3)]
    pub p_max: i64,
    /// Largest number of boxes or vertices.
    #[arg(long, default_value_t = 5)]
    pub n_max: u64,
    /// Largest number of balls selected.
    #[arg(long, default_value_t = 4)]
    pub k_max: u64,
    /// Largest edge multiplicity bound for bipartite multigraphs.
    #[arg(long, default_value_t = 3)]
    pub alpha_max: u64,
    /// Largest n for brute-force acyclic digraph counts.
    #[arg(long, default_value_t = 4)]
    pub dag_max: u64,
    /// Largest n for the inverse relation and matrix checks.
    #[arg(long, default_value_t = 8)]
    pub inverse_max: u64,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
}
