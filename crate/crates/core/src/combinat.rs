//! Small combinatorial helpers shared across modules: exact binomials,
//! non-decreasing index sequences and fixed-size subsets of a bitmask.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Exact binomial coefficient, with `C(a, b) = 0` whenever `b < 0`, `a < 0` or `b > a`.
pub fn binomial(a: i64, b: i64) -> BigUint {
    if a < 0 || b < 0 || b > a {
        return BigUint::zero();
    }
    let b = b.min(a - b) as u64;
    let a = a as u64;
    let mut acc = BigUint::one();
    for k in 0..b {
        acc *= a - k;
        acc /= k + 1;
    }
    acc
}

/// Machine-width binomial; panics on overflow.
pub fn binomial_u64(a: i64, b: i64) -> u64 {
    if a < 0 || b < 0 || b > a {
        return 0;
    }
    let b = b.min(a - b) as u64;
    let a = a as u64;
    let mut acc: u128 = 1;
    for k in 0..b {
        acc = acc * (a - k) as u128 / (k + 1) as u128;
    }
    u64::try_from(acc).expect("binomial overflows u64")
}

/// Iterator over all non-decreasing sequences of length `len` with entries in `0..alphabet`,
/// in lexicographic order.
#[derive(Debug, Clone)]
pub struct Multisets {
    alphabet: usize,
    current: Option<Vec<usize>>,
}

impl Multisets {
    pub fn new(alphabet: usize, len: usize) -> Self {
        let current = if alphabet == 0 && len > 0 {
            None
        } else {
            Some(vec![0; len])
        };
        Self { alphabet, current }
    }
}

impl Iterator for Multisets {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let cur = self.current.as_mut().unwrap();
        // advance: bump the rightmost entry that can still grow, reset the tail to it
        let mut pos = cur.len();
        while pos > 0 && cur[pos - 1] + 1 == self.alphabet {
            pos -= 1;
        }
        if pos == 0 {
            self.current = None;
        } else {
            let v = cur[pos - 1] + 1;
            for x in &mut cur[pos - 1..] {
                *x = v;
            }
        }
        Some(out)
    }
}

/// All subsets of `mask` with exactly `k` elements, as bitmasks, in increasing numeric order.
pub fn subsets_of_size(mask: u64, k: usize) -> SubsetsOfSize {
    let bits: Vec<u32> = (0..64).filter(|b| mask >> b & 1 == 1).collect();
    let m = bits.len();
    let state = if k > m {
        None
    } else if k == 0 {
        Some(0u64)
    } else {
        Some((1u64 << k) - 1)
    };
    SubsetsOfSize { bits, k, state }
}

#[derive(Debug, Clone)]
pub struct SubsetsOfSize {
    bits: Vec<u32>,
    k: usize,
    state: Option<u64>,
}

impl Iterator for SubsetsOfSize {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let compressed = self.state?;
        let mut out = 0u64;
        let mut c = compressed;
        while c != 0 {
            let t = c.trailing_zeros();
            out |= 1u64 << self.bits[t as usize];
            c &= c - 1;
        }
        if self.k == 0 {
            self.state = None;
        } else {
            // Gosper's hack over the compressed index space
            let u = compressed & compressed.wrapping_neg();
            let m = self.bits.len();
            self.state = compressed.checked_add(u).and_then(|v| {
                let next = v + (((v ^ compressed) / u) >> 2);
                (m == 64 || next >> m == 0).then_some(next)
            });
        }
        Some(out)
    }
}
