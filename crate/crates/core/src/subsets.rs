//! Subset enumeration and ranking utilities.
//!
//! Two orders matter here and they are not the same:
//! * **lexicographic** order of subsets written as ascending index tuples,
//!   used wherever a deterministic "first failing subset" is reported;
//! * **colexicographic** order (equivalently: ascending order of bitmasks),
//!   used to index the coordinates of functions on k-subsets.

use crate::error::{Error, Result};

/// Exact binomial coefficient as u64, erroring on overflow.
pub fn binomial(n: u64, k: u64) -> Result<u64> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        // multiply first, divide by (i+1) afterwards: the running product of
        // i+1 consecutive integers is divisible by (i+1)!
        acc = acc
            .checked_mul(n - i)
            .ok_or(Error::Overflow { context: "binomial" })?
            / (i + 1);
    }
    Ok(acc)
}

/// Binomial coefficient with integer (possibly negative) upper index, by the
/// falling-factorial rule: C(m, k) = m(m-1)...(m-k+1) / k!.
/// Always an exact integer.
pub fn generalized_binomial(m: i64, k: u64) -> Result<i128> {
    let mut num: i128 = 1;
    let mut den: i128 = 1;
    for i in 0..k as i128 {
        num = num
            .checked_mul(m as i128 - i)
            .ok_or(Error::Overflow { context: "generalized_binomial" })?;
        den *= i + 1;
    }
    debug_assert_eq!(num % den, 0);
    Ok(num / den)
}

/// Arbitrary-precision variant of `generalized_binomial`, for parameter
/// ranges where the falling factorial exceeds i128. Uses the recurrence
/// C(m, i+1) = C(m, i) * (m - i) / (i + 1), whose division is exact for
/// every integer m.
pub fn generalized_binomial_big(m: i64, k: u64) -> num_bigint::BigInt {
    use num_bigint::BigInt;
    let mut acc = BigInt::from(1);
    for i in 0..k as i64 {
        acc = acc * BigInt::from(m - i) / BigInt::from(i + 1);
    }
    acc
}

/// Iterator over all k-subsets of {0..n} in lexicographic order of their
/// ascending index tuples. Yields a borrowed view to avoid per-item allocation.
pub struct LexSubsets {
    n: usize,
    k: usize,
    current: Vec<usize>,
    started: bool,
    done: bool,
}

impl LexSubsets {
    pub fn new(n: usize, k: usize) -> Self {
        LexSubsets {
            n,
            k,
            current: (0..k).collect(),
            started: false,
            done: k > n,
        }
    }

    /// Advance and return the next subset, or None when exhausted.
    pub fn next_subset(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.current);
        }
        // find the rightmost position that can still move right
        let k = self.k;
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                return None;
            }
            i -= 1;
            if self.current[i] != self.n - k + i {
                break;
            }
        }
        self.current[i] += 1;
        for j in i + 1..k {
            self.current[j] = self.current[j - 1] + 1;
        }
        Some(&self.current)
    }
}

/// Bitmask of a subset given as indices.
pub fn mask_of(subset: &[usize]) -> u64 {
    subset.iter().fold(0u64, |m, &i| m | (1u64 << i))
}

/// Indices of a bitmask, ascending.
pub fn indices_of(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

/// All k-subsets of {0..n} as bitmasks in colexicographic order, which for
/// masks is plain ascending numeric order (Gosper's hack).
pub fn colex_masks(n: usize, k: usize) -> Vec<u64> {
    assert!(n <= 63, "point sets are limited to 63 coordinates");
    if k == 0 {
        return vec![0];
    }
    if k > n {
        return vec![];
    }
    let mut out = Vec::new();
    let limit = 1u64 << n;
    let mut v = (1u64 << k) - 1;
    while v < limit {
        out.push(v);
        // Gosper: next larger integer with the same popcount
        let c = v & v.wrapping_neg();
        let r = v + c;
        v = (((r ^ v) >> 2) / c) | r;
    }
    out
}

/// Rank of a k-subset bitmask in colexicographic order:
/// sum of C(a_i, i+1) over the ascending member positions a_0 < a_1 < ...
pub fn colex_rank(mask: u64) -> usize {
    let mut rank = 0u64;
    let mut i = 0u64;
    let mut rest = mask;
    while rest != 0 {
        let pos = rest.trailing_zeros() as u64;
        rank += binomial(pos, i + 1).expect("rank fits in u64");
        rest &= rest - 1;
        i += 1;
    }
    rank as usize
}
