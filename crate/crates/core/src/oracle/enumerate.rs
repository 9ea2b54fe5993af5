//! Exhaustive counts. Nothing here calls coefficient code.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Budget;
use crate::algebra::{binomial, int_pow};
use crate::error::{Error, Result};
use crate::tseq::SeqParams;

/// `n` boxes with weights `lambda_i = q^(i-1) p^(n-i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoxWeights {
    weights: Vec<BigInt>,
}

impl BoxWeights {
    pub fn new(params: &SeqParams, n: u64) -> Result<Self> {
        if params.p() < 1 || params.q() < 1 {
            return Err(Error::Precondition(format!(
                "box weights need p, q >= 1, got {params}"
            )));
        }
        if n == 0 {
            return Err(Error::Precondition("need at least one box".into()));
        }
        let weights = (1..=n)
            .map(|i| int_pow(params.q(), i - 1) * int_pow(params.p(), n - i))
            .collect();
        Ok(Self { weights })
    }

    pub fn n(&self) -> u64 {
        self.weights.len() as u64
    }

    pub fn weights(&self) -> &[BigInt] {
        &self.weights
    }
}

/// Sum over all ways to pick `k` balls from the boxes, one ball contributing
/// its box weight, of the product of weights. With `repetition` a box may be
/// picked several times (multisets), otherwise at most once (subsets).
pub fn count_selections(
    w: &BoxWeights,
    k: u64,
    repetition: bool,
    budget: &Budget,
) -> Result<BigInt> {
    let n = w.n();
    let visits = if repetition {
        binomial(n + k - 1, k)
    } else {
        binomial(n, k)
    };
    budget.check(&visits)?;
    let mut total = BigInt::zero();
    let mut picks = Vec::with_capacity(k as usize);
    select(
        &w.weights, k as usize, repetition, 0, &mut picks, &mut total,
    );
    Ok(total)
}

fn select(
    w: &[BigInt],
    k: usize,
    rep: bool,
    from: usize,
    picks: &mut Vec<usize>,
    total: &mut BigInt,
) {
    if picks.len() == k {
        *total += picks.iter().map(|&i| &w[i]).product::<BigInt>();
        return;
    }
    for i in from..w.len() {
        picks.push(i);
        select(w, k, rep, if rep { i } else { i + 1 }, picks, total);
        picks.pop();
    }
}

/// Steps `digits` to the next tuple in `{0..base-1}^len`; `false` after the last.
fn odometer(digits: &mut [u64], base: u64) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

/// Labeled multigraphs on `n` vertices with a distinguished `k`-subset as
/// one side, edge multiplicities in `{0..alpha-1}`, and no edge inside a
/// side. Every multigraph on all `C(n,2)` pairs is generated and filtered.
pub fn count_bipartite_multigraphs(alpha: u64, n: u64, k: u64, budget: &Budget) -> Result<BigInt> {
    if alpha == 0 {
        return Err(Error::Precondition("alpha must be positive".into()));
    }
    if n == 0 || n > 16 {
        return Err(Error::Precondition(format!("n = {n} outside 1..=16")));
    }
    if k > n {
        return Ok(BigInt::zero());
    }
    let pairs: Vec<(u64, u64)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    budget.check(&(binomial(n, k) * BigInt::from(alpha).pow(pairs.len() as u32)))?;
    let mut count = 0u64;
    for side in (0u32..1 << n).filter(|s| s.count_ones() as u64 == k) {
        let across = |&(i, j): &(u64, u64)| (side >> i & 1) != (side >> j & 1);
        let mut mult = vec![0u64; pairs.len()];
        loop {
            if pairs.iter().zip(&mult).all(|(e, &m)| m == 0 || across(e)) {
                count += 1;
            }
            if !odometer(&mut mult, alpha) {
                break;
            }
        }
    }
    Ok(BigInt::from(count))
}

fn is_acyclic(n: usize, succ: &[u32]) -> bool {
    let mut indeg = vec![0u32; n];
    for s in succ {
        for (v, d) in indeg.iter_mut().enumerate() {
            *d += s >> v & 1;
        }
    }
    let mut ready: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut seen = 0;
    while let Some(u) = ready.pop() {
        seen += 1;
        for (v, d) in indeg.iter_mut().enumerate() {
            if succ[u] >> v & 1 == 1 {
                *d -= 1;
                if *d == 0 {
                    ready.push(v);
                }
            }
        }
    }
    seen == n
}

/// Labeled digraphs on `n` nodes with arc multiplicities in `{0..p-1}` and
/// no directed cycle, by exhaustive enumeration.
pub fn count_acyclic_multidigraphs(p: u64, n: u64, budget: &Budget) -> Result<BigInt> {
    if p == 0 {
        return Err(Error::Precondition("p must be positive".into()));
    }
    if n > 16 {
        return Err(Error::Precondition(format!("n = {n} exceeds 16")));
    }
    let arcs: Vec<(usize, usize)> = (0..n as usize)
        .flat_map(|i| {
            (0..n as usize)
                .filter(move |&j| j != i)
                .map(move |j| (i, j))
        })
        .collect();
    budget.check(&BigInt::from(p).pow(arcs.len() as u32))?;
    let mut mult = vec![0u64; arcs.len()];
    let mut count = 0u64;
    loop {
        let mut succ = vec![0u32; n as usize];
        for (&(i, j), &m) in arcs.iter().zip(&mult) {
            if m > 0 {
                succ[i] |= 1 << j;
            }
        }
        if is_acyclic(n as usize, &succ) {
            count += 1;
        }
        if !odometer(&mut mult, p) {
            break;
        }
    }
    Ok(BigInt::from(count))
}

/// `A_p(0..=n_max)` by inclusion-exclusion over the set of sources:
/// `a_n = sum_{k>=1} (-1)^(k+1) C(n,k) p^(k(n-k)) a_(n-k)`.
pub fn acyclic_multidigraphs_recurrence(p: u64, n_max: u64) -> Vec<BigInt> {
    let mut a = vec![BigInt::one()];
    for n in 1..=n_max {
        let mut sum = BigInt::zero();
        for k in 1..=n {
            let term = binomial(n, k) * int_pow(p as i64, k * (n - k)) * &a[(n - k) as usize];
            if k % 2 == 1 {
                sum += term;
            } else {
                sum -= term;
            }
        }
        a.push(sum);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn selections_examples() {
        let b = Budget::default();
        let w = BoxWeights::new(&SeqParams::new(2, 3), 2).unwrap();
        assert_eq!(count_selections(&w, 2, true, &b).unwrap(), big(19));
        let w = BoxWeights::new(&SeqParams::new(2, 3), 3).unwrap();
        assert_eq!(w.weights(), &[big(4), big(6), big(9)][..]);
        assert_eq!(count_selections(&w, 2, false, &b).unwrap(), big(114));
        assert_eq!(count_selections(&w, 0, false, &b).unwrap(), big(1));
        assert_eq!(count_selections(&w, 0, true, &b).unwrap(), big(1));
        assert_eq!(count_selections(&w, 4, false, &b).unwrap(), big(0));
    }

    #[test]
    fn box_weights_need_positive_params() {
        assert!(BoxWeights::new(&SeqParams::new(0, 3), 2).is_err());
        assert!(BoxWeights::new(&SeqParams::new(2, 3), 0).is_err());
    }

    #[test]
    fn bipartite_examples() {
        let b = Budget::default();
        assert_eq!(count_bipartite_multigraphs(2, 3, 1, &b).unwrap(), big(12));
        assert_eq!(count_bipartite_multigraphs(2, 4, 2, &b).unwrap(), big(96));
        for n in 1..=5 {
            for k in 0..=n {
                assert_eq!(
                    count_bipartite_multigraphs(1, n, k, &b).unwrap(),
                    binomial(n, k)
                );
            }
        }
    }

    #[test]
    fn acyclic_examples() {
        let b = Budget::default();
        let brute: Vec<BigInt> = (0..=4)
            .map(|n| count_acyclic_multidigraphs(2, n, &b).unwrap())
            .collect();
        assert_eq!(brute, [1, 1, 3, 25, 543].map(big));
        assert_eq!(acyclic_multidigraphs_recurrence(2, 5)[5], big(29281));
        for p in 1..=3 {
            assert_eq!(count_acyclic_multidigraphs(p, 1, &b).unwrap(), big(1));
        }
    }

    #[test]
    fn budget_is_enforced() {
        let small = Budget::new(100);
        let err = count_acyclic_multidigraphs(2, 4, &small).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { limit: 100, .. }));
        assert!(count_bipartite_multigraphs(3, 5, 2, &small).is_err());
        let w = BoxWeights::new(&SeqParams::new(1, 1), 8).unwrap();
        assert!(count_selections(&w, 6, true, &small).is_err());
    }
}
