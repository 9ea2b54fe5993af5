//! Shared inputs for the criterion benchmarks.

use tnomial_core::{CoeffQuery, SeqParams};

/// A mid-sized query every route can answer: `T(2, 3)`, `n = 24`, `k = 12`.
pub fn central_query() -> CoeffQuery {
    CoeffQuery::new(SeqParams::new(2, 3), 24, 12)
}
