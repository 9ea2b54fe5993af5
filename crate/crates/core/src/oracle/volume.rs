use num_bigint::BigInt;
use num_traits::Signed;

use crate::algebra::exact_div;
use crate::error::{Error, Result};
use crate::tseq::TermSequence;

/// `|V_(k,n)| / |V_(1,m)|` with `|V_(k,n)| = prod_{s=k..n} s_F` and
/// `m = n - k + 1`: how many `m`-dimensional unit bricks fit the box by volume.
pub fn volume_ratio<S: TermSequence + ?Sized>(seq: &S, k: u64, n: u64) -> Result<BigInt> {
    if k == 0 || k > n {
        return Err(Error::Precondition(format!(
            "need 1 <= k <= n, got k = {k}, n = {n}"
        )));
    }
    let terms: Vec<BigInt> = (1..=n).map(|s| seq.term(s)).collect();
    if let Some(s) = terms.iter().position(|t| !t.is_positive()) {
        return Err(Error::Precondition(format!(
            "term {} is not positive",
            s + 1
        )));
    }
    let box_volume: BigInt = terms[(k - 1) as usize..].iter().product();
    let brick: BigInt = terms[..(n - k + 1) as usize].iter().product();
    exact_div(&box_volume, &brick)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tseq::{AlphaFibonacci, SeqParams};

    #[test]
    fn examples() {
        let gauss = SeqParams::new(1, 2);
        assert_eq!(volume_ratio(&gauss, 1, 5).unwrap(), BigInt::from(1));
        assert_eq!(volume_ratio(&gauss, 3, 4).unwrap(), BigInt::from(35));
        let fib = AlphaFibonacci::new(1).unwrap();
        assert_eq!(volume_ratio(&fib, 2, 5).unwrap(), BigInt::from(5));
    }

    #[test]
    fn preconditions() {
        let t = SeqParams::new(1, 1);
        assert!(volume_ratio(&t, 0, 3).is_err());
        assert!(volume_ratio(&t, 4, 3).is_err());
        assert!(volume_ratio(&SeqParams::new(1, -1), 1, 3).is_err());
    }
}
