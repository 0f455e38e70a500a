//! Closed forms for Betti numbers, regularity and projective dimension.
//! Binomials vanish outside `0 <= b <= a`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::combinat::binomial;
use crate::error::{Error, Result};

/// `(β_0, β_1, β_2)` of the degree-`(n-2)` ideal of a connected graph with `r` edges on
/// `n` vertices, in degrees `n-2, n-1, n`: `(r, 2r - n, r - n + 1)`.
pub fn betti_connected_graph(r: u64, n: u64) -> Result<[u64; 3]> {
    if n < 3 || r + 1 < n || r > n * (n - 1) / 2 {
        return Err(Error::InvalidParameter(format!(
            "need n >= 3 and n - 1 <= r <= C(n, 2), got r = {r}, n = {n}"
        )));
    }
    Ok([r, 2 * r - n, r + 1 - n])
}

/// Connected planar graph with `m` bounded regions: `(n + m - 1, n + 2m - 2, m)`.
pub fn betti_planar(n: u64, m: u64) -> Result<[u64; 3]> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("need n >= 3, got {n}")));
    }
    Ok([n + m - 1, n + 2 * m - 2, m])
}

/// `β_i(J(K_n)^s) = C(n-1, i) C(n-1-i+s, n-1)`, in degree `s(n-1) + i`.
pub fn betti_complete_power(n: u64, s: u64, i: u64) -> BigUint {
    let (n, s, i) = (n as i64, s as i64, i as i64);
    binomial(n - 1, i) * binomial(n - 1 - i + s, n - 1)
}

/// `β_i(J(G)^s)` for the complement `G` of a tree on `n` vertices: `C(n-2, i) C(n-2-i+s, n-2)`.
pub fn betti_tree_complement_power(n: u64, s: u64, i: u64) -> BigUint {
    let (n, s, i) = (n as i64, s as i64, i as i64);
    binomial(n - 2, i) * binomial(n - 2 - i + s, n - 2)
}

/// `reg(S/J(G)^s)` for the complete multipartite graph with part sizes `w_1 <= ... <= w_n`.
pub fn reg_multipartite(weights: &[u32], s: u64) -> Result<i64> {
    let n = weights.len();
    if n < 2 || s < 1 {
        return Err(Error::InvalidParameter(format!("need n >= 2 parts and s >= 1, got n = {n}, s = {s}")));
    }
    if weights.contains(&0) || weights.windows(2).any(|p| p[0] > p[1]) {
        return Err(Error::InvalidParameter(format!("weights {weights:?} must be positive and sorted ascending")));
    }
    let total: i64 = weights.iter().map(|&w| w as i64).sum();
    let (n, s) = (n as i64, s as i64);
    Ok(if s < n - 1 {
        s * total - (s + 1)
    } else {
        s * total - weights[0] as i64 * (s - n + 1) - n
    })
}

/// `pdim(S/J(K_n)^s)`: `s + 1` for `s < n - 1`, otherwise `n`.
pub fn pdim_complete_power(n: u64, s: u64) -> u64 {
    if s + 1 < n {
        s + 1
    } else {
        n
    }
}

/// Number of generators of `J(K_n)^s` with `|set(u)| = t`: `C(n-1, t) C(s, t)`.
pub fn a_t_formula(n: u64, s: u64, t: u64) -> BigUint {
    binomial(n as i64 - 1, t as i64) * binomial(s as i64, t as i64)
}

/// `Σ_t C(n-1, t) C(s, t) C(t, i)`, the mapping-cone count of `β_i(J(K_n)^s)`.
pub fn chu_vandermonde_sum(n: u64, s: u64, i: u64) -> BigUint {
    (0..=n.min(s))
        .map(|t| a_t_formula(n, s, t) * binomial(t as i64, i as i64))
        .fold(BigUint::zero(), |a, b| a + b)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FormulaId {
    ConnectedGraph,
    Planar,
    CompletePower,
    TreeComplementPower,
    RegMultipartite,
    PdimCompletePower,
    ATFormula,
    ChuVandermonde,
}

impl FormulaId {
    pub const ALL: [FormulaId; 8] = [
        FormulaId::ConnectedGraph,
        FormulaId::Planar,
        FormulaId::CompletePower,
        FormulaId::TreeComplementPower,
        FormulaId::RegMultipartite,
        FormulaId::PdimCompletePower,
        FormulaId::ATFormula,
        FormulaId::ChuVandermonde,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FormulaId::ConnectedGraph => "connected-graph",
            FormulaId::Planar => "planar",
            FormulaId::CompletePower => "complete-power",
            FormulaId::TreeComplementPower => "tree-complement-power",
            FormulaId::RegMultipartite => "reg-multipartite",
            FormulaId::PdimCompletePower => "pdim-complete-power",
            FormulaId::ATFormula => "a-t",
            FormulaId::ChuVandermonde => "chu-vandermonde",
        }
    }

    /// Parameter names in the order they are echoed.
    pub fn parameters(self) -> &'static [&'static str] {
        match self {
            FormulaId::ConnectedGraph => &["r", "n"],
            FormulaId::Planar => &["n", "m"],
            FormulaId::CompletePower | FormulaId::TreeComplementPower | FormulaId::ChuVandermonde => &["n", "s", "i"],
            FormulaId::RegMultipartite => &["weights", "s"],
            FormulaId::PdimCompletePower => &["n", "s"],
            FormulaId::ATFormula => &["n", "s", "t"],
        }
    }
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FormulaId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FormulaId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown formula {s:?}")))
    }
}

/// Inputs to [`evaluate`]; unused fields are ignored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FormulaParams {
    pub n: Option<u64>,
    pub s: Option<u64>,
    pub i: Option<u64>,
    pub r: Option<u64>,
    pub m: Option<u64>,
    pub t: Option<u64>,
    pub weights: Option<Vec<u32>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormulaResult {
    pub formula: FormulaId,
    pub inputs: Vec<(String, Input)>,
    #[serde(serialize_with = "exact_list")]
    pub values: Vec<BigUint>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Input {
    Int(u64),
    List(Vec<u32>),
}

/// Numbers that fit in 64 bits are written as JSON numbers, larger ones as decimal strings.
fn exact_list<S: Serializer>(v: &[BigUint], s: S) -> std::result::Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    #[serde(untagged)]
    enum Exact {
        Small(u64),
        Big(String),
    }
    let out: Vec<Exact> = v
        .iter()
        .map(|x| x.to_u64().map_or_else(|| Exact::Big(x.to_string()), Exact::Small))
        .collect();
    out.serialize(s)
}

impl fmt::Display for FormulaResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.formula)?;
        for (k, (name, v)) in self.inputs.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            match v {
                Input::Int(x) => write!(f, "{name}={x}")?,
                Input::List(w) => write!(f, "{name}={w:?}")?,
            }
        }
        write!(f, ") =")?;
        for v in &self.values {
            write!(f, " {v}")?;
        }
        Ok(())
    }
}

pub fn evaluate(id: FormulaId, p: &FormulaParams) -> Result<FormulaResult> {
    let need = |name: &str, v: Option<u64>| {
        v.ok_or_else(|| Error::InvalidParameter(format!("formula {id} needs parameter {name}")))
    };
    let mut inputs = Vec::new();
    let mut int = |name: &str, v: Option<u64>| -> Result<u64> {
        let x = need(name, v)?;
        inputs.push((name.to_string(), Input::Int(x)));
        Ok(x)
    };
    let values: Vec<BigUint> = match id {
        FormulaId::ConnectedGraph => {
            let (r, n) = (int("r", p.r)?, int("n", p.n)?);
            betti_connected_graph(r, n)?.iter().map(|&x| x.into()).collect()
        }
        FormulaId::Planar => {
            let (n, m) = (int("n", p.n)?, int("m", p.m)?);
            betti_planar(n, m)?.iter().map(|&x| x.into()).collect()
        }
        FormulaId::CompletePower | FormulaId::TreeComplementPower | FormulaId::ChuVandermonde => {
            let (n, s) = (int("n", p.n)?, int("s", p.s)?);
            let f = match id {
                FormulaId::CompletePower => betti_complete_power,
                FormulaId::TreeComplementPower => betti_tree_complement_power,
                _ => chu_vandermonde_sum,
            };
            match p.i {
                Some(i) => {
                    inputs.push(("i".into(), Input::Int(i)));
                    vec![f(n, s, i)]
                }
                // whole row i = 0..=n
                None => (0..=n).map(|i| f(n, s, i)).collect(),
            }
        }
        FormulaId::RegMultipartite => {
            let w = p
                .weights
                .clone()
                .ok_or_else(|| Error::InvalidParameter(format!("formula {id} needs parameter weights")))?;
            let s = need("s", p.s)?;
            let v = reg_multipartite(&w, s)?;
            inputs.push(("weights".into(), Input::List(w)));
            inputs.push(("s".into(), Input::Int(s)));
            let v = u64::try_from(v).map_err(|_| Error::InvalidParameter("negative regularity".into()))?;
            vec![v.into()]
        }
        FormulaId::PdimCompletePower => {
            let (n, s) = (int("n", p.n)?, int("s", p.s)?);
            vec![pdim_complete_power(n, s).into()]
        }
        FormulaId::ATFormula => {
            let (n, s) = (int("n", p.n)?, int("s", p.s)?);
            match p.t {
                Some(t) => {
                    inputs.push(("t".into(), Input::Int(t)));
                    vec![a_t_formula(n, s, t)]
                }
                None => (0..=n).map(|t| a_t_formula(n, s, t)).collect(),
            }
        }
    };
    Ok(FormulaResult {
        formula: id,
        inputs,
        values,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&x| x.into()).collect()
    }

    #[test]
    fn connected_and_planar() {
        for n in 3..10 {
            assert_eq!(betti_connected_graph(n - 1, n).unwrap(), [n - 1, n - 2, 0]);
            assert_eq!(betti_planar(n, 0).unwrap(), [n - 1, n - 2, 0]);
            for m in 0..5 {
                if n + m - 1 <= n * (n - 1) / 2 {
                    assert_eq!(betti_planar(n, m).unwrap(), betti_connected_graph(n + m - 1, n).unwrap());
                }
            }
        }
        assert_eq!(betti_connected_graph(4, 4).unwrap(), [4, 4, 1]);
        assert_eq!(betti_connected_graph(2, 3).unwrap(), [2, 1, 0]);
        assert_eq!(betti_planar(4, 1).unwrap(), [4, 4, 1]);
        assert_eq!(betti_planar(4, 2).unwrap(), [5, 6, 2]);
        assert!(betti_connected_graph(2, 4).is_err());
        assert!(betti_connected_graph(7, 4).is_err());
        assert!(betti_planar(2, 0).is_err());
    }

    #[test]
    fn complete_power_values() {
        let row = |n, s| (0..=n).map(|i| betti_complete_power(n, s, i)).collect::<Vec<_>>();
        assert_eq!(row(3, 1), big(&[3, 2, 0, 0]));
        assert_eq!(row(2, 1), big(&[2, 1, 0]));
        assert!(betti_complete_power(5, 2, 4).is_zero());
        for n in 3..8 {
            for s in 1..6 {
                for i in 0..n {
                    assert_eq!(betti_tree_complement_power(n, s, i), betti_complete_power(n - 1, s, i));
                }
                assert!(betti_tree_complement_power(n, s, n - 1).is_zero());
            }
        }
        assert_eq!(betti_tree_complement_power(4, 2, 1), BigUint::from(6u32));
    }

    #[test]
    fn regularity_values() {
        for n in 2..7usize {
            for s in 1..6 {
                let ones = vec![1; n];
                let v = reg_multipartite(&ones, s).unwrap();
                assert_eq!(v, s as i64 * n as i64 - s as i64 - 1);
            }
        }
        assert_eq!(reg_multipartite(&[2, 3], 2).unwrap(), 6);
        assert_eq!(reg_multipartite(&[1, 1], 3).unwrap(), 2);
        assert!(reg_multipartite(&[3, 2], 2).is_err());
        assert!(reg_multipartite(&[2], 2).is_err());
    }

    #[test]
    fn pdim_and_census() {
        assert_eq!(pdim_complete_power(4, 2), 3);
        assert_eq!(pdim_complete_power(4, 3), 4);
        assert_eq!(pdim_complete_power(4, 7), 4);
        assert_eq!(pdim_complete_power(2, 1), 2);
        assert_eq!((0..4).map(|t| a_t_formula(4, 2, t)).collect::<Vec<_>>(), big(&[1, 6, 3, 0]));
        assert_eq!(a_t_formula(7, 3, 0), BigUint::from(1u32));
        assert!(a_t_formula(3, 5, 3).is_zero());
    }

    #[test]
    fn double_count_and_identity() {
        for n in 1..8u64 {
            for s in 1..7u64 {
                let lhs: BigUint = (0..=n).map(|i| betti_complete_power(n, s, i)).sum();
                let rhs: BigUint = (0..=n).map(|t| a_t_formula(n, s, t) << t as usize).sum();
                assert_eq!(lhs, rhs, "n={n} s={s}");
                for i in 0..=n {
                    assert_eq!(chu_vandermonde_sum(n, s, i), betti_complete_power(n, s, i));
                }
            }
        }
    }

    #[test]
    fn evaluate_and_json() {
        let p = FormulaParams {
            n: Some(3),
            s: Some(1),
            ..Default::default()
        };
        let r = evaluate("complete-power".parse().unwrap(), &p).unwrap();
        assert_eq!(r.values, big(&[3, 2, 0, 0]));
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"formula":"complete-power","inputs":[["n",3],["s",1]],"values":[3,2,0,0]}"#
        );
        let p = FormulaParams {
            weights: Some(vec![2, 3]),
            s: Some(2),
            ..Default::default()
        };
        assert_eq!(evaluate(FormulaId::RegMultipartite, &p).unwrap().values, big(&[6]));
        assert!(evaluate(FormulaId::Planar, &p).is_err());
        assert!("nope".parse::<FormulaId>().is_err());
        let huge = evaluate(
            FormulaId::CompletePower,
            &FormulaParams {
                n: Some(60),
                s: Some(60),
                i: Some(30),
                ..Default::default()
            },
        )
        .unwrap();
        assert!(serde_json::to_string(&huge).unwrap().contains("\"values\":[\""));
    }
}
