//! Generating-function and theorem-level identities, each evaluated exactly
//! and summarized as an [`IdentityReport`].

mod gf;
mod report;
mod special;
mod suites;
mod theorem;
mod vandermonde;

pub use gf::{
    expand_a, expand_b, expand_c, orthogonality, series_a, series_b, series_c, series_inverse,
    Expansion, Mode,
};
pub use report::{
    Counterexample, IdentityId, IdentityReport, Location, ReportBuilder, ReportParams, Status,
};
pub use special::{
    equal1_check, fibonomial_check, fibonomial_suite, gaussian_explicit, gaussian_inverse,
    phi_inversion, phi_polynomial,
};
pub use suites::{run_identity, run_on_grid, run_on_points, Grid, SuiteConfig};
pub use theorem::{binomial_like, binomial_like_coefficients, binomial_like_product, Form};
pub use vandermonde::{vandermonde, vandermonde_sweep, VandermondePoint};
