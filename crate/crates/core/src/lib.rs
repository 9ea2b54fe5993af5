//! Exact T-nomial coefficients for tileable sequences `T(p, q)`, the
//! generating-function identities they satisfy, and brute-force oracles
//! for their combinatorial readings.
//!
//! ```
//! use tnomial_core::{coeff_recurrence, CoeffQuery, SeqParams};
//!
//! let q = CoeffQuery::new(SeqParams::new(2, 3), 4, 2);
//! assert_eq!(coeff_recurrence(&q).unwrap(), 247.into());
//! ```

pub mod algebra;
pub mod error;
pub mod identities;
pub mod oracle;
pub mod tnomial;
pub mod tseq;

pub use algebra::{BiPoly, QuadElem, Rational, XSeries};
pub use error::{Error, Result};
pub use identities::{IdentityId, IdentityReport, Status};
pub use tnomial::{
    coeff_by_route, coeff_inverse, coeff_recurrence, coeff_symbolic, CoeffQuery, Route, Tnomials,
};
pub use tseq::{AlphaFibonacci, SeqParams, TermSequence};
