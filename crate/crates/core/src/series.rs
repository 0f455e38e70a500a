//! Truncated bigraded Hilbert series of Rees algebras.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::Zero;
use serde::Serialize;

use crate::combinat::binomial;
use crate::error::{Error, Result};

/// Coefficients `c[d][s]` for `d <= d_max`, `s <= s_max`: `c[d][s] = dim (I^s)_d`
/// when the series is that of a Rees algebra with `T` in bidegree `(deg u, 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BigradedSeries {
    pub d_max: usize,
    pub s_max: usize,
    #[serde(serialize_with = "decimal_grid")]
    coeffs: Vec<Vec<BigUint>>,
}

fn decimal_grid<S: serde::Serializer>(g: &[Vec<BigUint>], s: S) -> std::result::Result<S::Ok, S::Error> {
    let out: Vec<Vec<String>> = g.iter().map(|row| row.iter().map(ToString::to_string).collect()).collect();
    out.serialize(s)
}

impl BigradedSeries {
    pub fn coefficient(&self, d: usize, s: usize) -> Option<&BigUint> {
        self.coeffs.get(d)?.get(s)
    }

    /// `c[·][s]`, i.e. `(1/s!) ∂^s/∂z2^s` at `z2 = 0`, the Hilbert function of `I^s`.
    pub fn power_row(&self, s: usize) -> Result<Vec<BigUint>> {
        if s > self.s_max {
            return Err(Error::InvalidParameter(format!(
                "power {s} beyond the truncation s_max = {}",
                self.s_max
            )));
        }
        Ok(self.coeffs.iter().map(|row| row[s].clone()).collect())
    }
}

type Grid = Vec<Vec<BigInt>>;

fn product(a: &Grid, b: &Grid, d_max: usize, s_max: usize) -> Grid {
    let mut out = vec![vec![BigInt::zero(); s_max + 1]; d_max + 1];
    for (d1, row) in a.iter().enumerate() {
        for (s1, x) in row.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (d2, row2) in b.iter().enumerate().take(d_max + 1 - d1) {
                for (s2, y) in row2.iter().enumerate().take(s_max + 1 - s1) {
                    if !y.is_zero() {
                        out[d1 + d2][s1 + s2] += x * y;
                    }
                }
            }
        }
    }
    out
}

/// Expansion of `(1 - z1^{n-1} z2)^{n-2} / ((1 - z1)^n (1 - z1^{n-2} z2)^{n-1})` up to
/// `z1^{d_max} z2^{s_max}`: the series of `S[T]/K` for `K` a complete intersection of
/// `n - 2` forms of bidegree `(1, 1)` in `n` variables `x` of bidegree `(1, 0)` and
/// `n - 1` variables `T` of bidegree `(n - 2, 1)`.
pub fn rees_hilbert_ci(n: usize, d_max: usize, s_max: usize) -> Result<BigradedSeries> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("need n >= 3, got {n}")));
    }
    let zero_grid = || vec![vec![BigInt::zero(); s_max + 1]; d_max + 1];
    let ni = n as i64;

    let mut numerator = zero_grid();
    for k in 0..=(n - 2).min(s_max) {
        let d = k * (n - 1);
        if d > d_max {
            break;
        }
        let c = BigInt::from_biguint(Sign::Plus, binomial(ni - 2, k as i64));
        numerator[d][k] = if k % 2 == 0 { c } else { -c };
    }
    let mut x_part = zero_grid();
    for (d, row) in x_part.iter_mut().enumerate() {
        row[0] = BigInt::from_biguint(Sign::Plus, binomial(d as i64 + ni - 1, ni - 1));
    }
    let mut t_part = zero_grid();
    for k in 0..=s_max {
        let d = k * (n - 2);
        if d > d_max {
            break;
        }
        t_part[d][k] = BigInt::from_biguint(Sign::Plus, binomial(k as i64 + ni - 2, ni - 2));
    }
    let full = product(&product(&numerator, &x_part, d_max, s_max), &t_part, d_max, s_max);
    let coeffs = full
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|c| {
                    c.to_biguint()
                        .ok_or_else(|| Error::Contradiction(format!("negative coefficient {c}")))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BigradedSeries { d_max, s_max, coeffs })
}

/// Hilbert function `d ↦ dim (I^s)_d`, `d = 0..=d_max`, read off the series.
pub fn extract_power_series(series: &BigradedSeries, s: usize) -> Result<Vec<BigUint>> {
    series.power_row(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use crate::graph::SimpleGraph;
    use crate::monomial::{monomials_of_degree, HilbertMode};

    #[test]
    fn row_zero_is_polynomial_ring() {
        for n in 3..7 {
            let b = rees_hilbert_ci(n, 12, 2).unwrap();
            let row = extract_power_series(&b, 0).unwrap();
            for (d, c) in row.iter().enumerate() {
                assert_eq!(*c, monomials_of_degree(n, d as u32));
            }
        }
    }

    #[test]
    fn rows_match_tree_powers() {
        for g in [SimpleGraph::path(4).unwrap(), SimpleGraph::star(4).unwrap(), SimpleGraph::path(5).unwrap()] {
            let n = g.n();
            let j = g.ideal_from_graph().unwrap();
            let b = rees_hilbert_ci(n, 3 * n, 2).unwrap();
            for s in 1..=2u32 {
                let js = j.power(s).unwrap();
                let row = extract_power_series(&b, s as usize).unwrap();
                for (d, c) in row.iter().enumerate() {
                    assert_eq!(*c, js.hilbert_function(d as u32, HilbertMode::Ideal), "{g} s={s} d={d}");
                }
            }
        }
    }

    #[test]
    fn out_of_range() {
        let b = rees_hilbert_ci(4, 5, 1).unwrap();
        assert!(extract_power_series(&b, 2).is_err());
        assert!(rees_hilbert_ci(2, 5, 1).is_err());
        assert_eq!(b.coefficient(0, 0), Some(&BigUint::one()));
        assert_eq!(b.coefficient(6, 0), None);
    }
}
