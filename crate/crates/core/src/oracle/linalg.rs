//! Ranks of sparse-entry `{0, +1, -1}` matrices, stored densely.

use num_rational::BigRational;
use num_traits::Zero;

use super::field::FieldSpec;

/// A matrix given row by row as `(column, sign)` pairs with sign `+1` or `-1`.
pub type SignedRows = Vec<Vec<(usize, i8)>>;

pub fn rank(rows: &SignedRows, ncols: usize, field: FieldSpec) -> usize {
    if rows.is_empty() || ncols == 0 {
        return 0;
    }
    match field.characteristic() {
        0 => rank_rational(rows, ncols),
        2 => rank_gf2(rows, ncols),
        p => rank_mod_p(rows, ncols, p as u64),
    }
}

fn rank_gf2(rows: &SignedRows, ncols: usize) -> usize {
    let words = ncols.div_ceil(64);
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| {
            let mut v = vec![0u64; words];
            for &(c, _) in r {
                v[c / 64] ^= 1 << (c % 64);
            }
            v
        })
        .collect();
    let mut rank = 0;
    for col in 0..ncols {
        let (w, b) = (col / 64, 1u64 << (col % 64));
        let Some(piv) = (rank..m.len()).find(|&r| m[r][w] & b != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let (head, tail) = m.split_at_mut(rank + 1);
        let pivot = &head[rank];
        for row in tail.iter_mut() {
            if row[w] & b != 0 {
                for (x, y) in row[w..].iter_mut().zip(&pivot[w..]) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

fn inverse_mod(a: u64, p: u64) -> u64 {
    let (mut base, mut e, mut acc) = (a % p, p - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

fn rank_mod_p(rows: &SignedRows, ncols: usize, p: u64) -> usize {
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| {
            let mut v = vec![0u64; ncols];
            for &(c, s) in r {
                v[c] = (v[c] + if s > 0 { 1 } else { p - 1 }) % p;
            }
            v
        })
        .collect();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = inverse_mod(m[rank][col], p);
        for x in m[rank][col..].iter_mut() {
            *x = *x * inv % p;
        }
        let (head, tail) = m.split_at_mut(rank + 1);
        let pivot = &head[rank];
        for row in tail.iter_mut() {
            let f = row[col];
            if f != 0 {
                let neg = p - f;
                for (x, &y) in row[col..].iter_mut().zip(&pivot[col..]) {
                    if y != 0 {
                        *x = (*x + neg * y) % p;
                    }
                }
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

fn rank_rational(rows: &SignedRows, ncols: usize) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| {
            let mut v = vec![BigRational::zero(); ncols];
            for &(c, s) in r {
                v[c] += BigRational::from_integer(s.into());
            }
            v
        })
        .collect();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, piv);
        let (head, tail) = m.split_at_mut(rank + 1);
        let pivot = &head[rank];
        for row in tail.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let f = &row[col] / &pivot[col];
            for (x, y) in row[col..].iter_mut().zip(&pivot[col..]) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}
