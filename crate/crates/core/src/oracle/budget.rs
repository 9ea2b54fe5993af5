use num_bigint::BigInt;

use crate::error::{Error, Result};

/// Hard cap on the number of objects a brute-force enumeration may visit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    limit: u64,
}

impl Budget {
    pub const DEFAULT_LIMIT: u64 = 1 << 21;

    pub fn new(limit: u64) -> Self {
        Self { limit }
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// Fails with [`Error::BudgetExceeded`] when `needed` is over the cap.
    pub fn check(&self, needed: &BigInt) -> Result<()> {
        if *needed > BigInt::from(self.limit) {
            Err(Error::BudgetExceeded {
                needed: needed.clone(),
                limit: self.limit,
            })
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Self::new(Self::DEFAULT_LIMIT)
    }
}
