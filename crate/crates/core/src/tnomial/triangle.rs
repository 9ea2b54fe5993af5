use std::sync::RwLock;

use crate::algebra::Ring;
use crate::error::{Error, Result};

/// Memoized triangle of `C(n, k) = p^(n-k) C(n-1, k-1) + q^k C(n-1, k)` with
/// `C(n, 0) = C(n, n) = 1`, over any ring.
///
/// Rows are filled lazily up to `n_max`. Readers share the lock; growth takes
/// the write lock once per batch of new rows.
#[derive(Debug)]
pub struct Triangle<R: Ring> {
    p: R,
    q: R,
    n_max: u64,
    state: RwLock<State<R>>,
}

#[derive(Debug)]
struct State<R> {
    rows: Vec<Vec<R>>,
    p_pows: Vec<R>,
    q_pows: Vec<R>,
}

impl<R: Ring> Triangle<R> {
    pub fn new(p: R, q: R, n_max: u64) -> Result<Self> {
        if p.params() != q.params() {
            return Err(Error::ParamMismatch(format!(
                "p over {:?}, q over {:?}",
                p.params(),
                q.params()
            )));
        }
        let one = R::one_with(&p.params());
        Ok(Self {
            p,
            q,
            n_max,
            state: RwLock::new(State {
                rows: vec![vec![one.clone()]],
                p_pows: vec![one.clone()],
                q_pows: vec![one],
            }),
        })
    }

    pub fn n_max(&self) -> u64 {
        self.n_max
    }

    pub fn p(&self) -> &R {
        &self.p
    }

    pub fn q(&self) -> &R {
        &self.q
    }

    /// `C(n, k)`; zero when `k > n`.
    pub fn get(&self, n: u64, k: u64) -> Result<R> {
        if n > self.n_max {
            return Err(Error::Precondition(format!(
                "row {n} exceeds the triangle bound {}",
                self.n_max
            )));
        }
        if k > n {
            return Ok(R::zero_with(&self.p.params()));
        }
        {
            let state = self.state.read().expect("triangle lock poisoned");
            if let Some(row) = state.rows.get(n as usize) {
                return Ok(row[k as usize].clone());
            }
        }
        self.extend_to(n)?;
        let state = self.state.read().expect("triangle lock poisoned");
        Ok(state.rows[n as usize][k as usize].clone())
    }

    /// Row `n`, entries `k = 0..=n`.
    pub fn row(&self, n: u64) -> Result<Vec<R>> {
        self.get(n, 0)?;
        let state = self.state.read().expect("triangle lock poisoned");
        Ok(state.rows[n as usize].clone())
    }

    fn extend_to(&self, n: u64) -> Result<()> {
        let mut state = self.state.write().expect("triangle lock poisoned");
        let params = self.p.params();
        while state.p_pows.len() <= n as usize {
            let next = state.p_pows.last().expect("nonempty").ring_mul(&self.p)?;
            state.p_pows.push(next);
            let next = state.q_pows.last().expect("nonempty").ring_mul(&self.q)?;
            state.q_pows.push(next);
        }
        while state.rows.len() <= n as usize {
            let m = state.rows.len();
            let prev = &state.rows[m - 1];
            let mut row = Vec::with_capacity(m + 1);
            row.push(R::one_with(&params));
            for k in 1..m {
                let left = state.p_pows[m - k].ring_mul(&prev[k - 1])?;
                let right = state.q_pows[k].ring_mul(&prev[k])?;
                row.push(left.ring_add(&right)?);
            }
            row.push(R::one_with(&params));
            state.rows.push(row);
        }
        Ok(())
    }
}
