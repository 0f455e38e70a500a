//! Relations of the Rees algebra `R(I) = ⊕ I^s t^s`, presented as `S[T_1, ..., T_r] / K`
//! with `T_j ↦ u_j t`.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::combinat::Multisets;
use crate::error::{Error, Result};
use crate::graph::graph_from_ideal;
use crate::monomial::{Monomial, MonomialIdeal};
use crate::quotients::{linear_quotient_data, SetData};

/// Node budget for the linear-quotient order search behind the reduced `K_1`.
pub const ORDER_SEARCH_BUDGET: usize = 200_000;

/// A non-decreasing sequence of 1-based generator indices, `α = (i_1 ≤ ... ≤ i_s)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct IndexMultiset(Vec<usize>);

impl IndexMultiset {
    pub fn new(mut indices: Vec<usize>) -> Result<Self> {
        if indices.is_empty() || indices.contains(&0) {
            return Err(Error::InvalidParameter(
                "index multisets are non-empty and 1-based".into(),
            ));
        }
        indices.sort_unstable();
        Ok(Self(indices))
    }

    pub fn single(j: usize) -> Result<Self> {
        Self::new(vec![j])
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// `u_α = u_{i_1} ... u_{i_s}`.
    pub fn product(&self, ideal: &MonomialIdeal) -> Result<Monomial> {
        let gens = ideal.generators();
        let mut out = Monomial::one(ideal.context());
        for &i in &self.0 {
            let g = gens.get(i - 1).ok_or_else(|| {
                Error::InvalidParameter(format!("index {i} exceeds the {} generators", gens.len()))
            })?;
            out = out.mul(g)?;
        }
        Ok(out)
    }
}

impl fmt::Display for IndexMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            write!(f, "T{i}")?;
        }
        Ok(())
    }
}

/// `coef * T_α`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReesTerm {
    pub coef: Monomial,
    pub t: IndexMultiset,
}

impl Serialize for ReesTerm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("ReesTerm", 2)?;
        st.serialize_field("coef", &self.coef)?;
        st.serialize_field("T", &self.t)?;
        st.end()
    }
}

impl fmt::Display for ReesTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coef.is_one() {
            write!(f, "{}", self.t)
        } else {
            write!(f, "{}*{}", self.coef, self.t)
        }
    }
}

/// The binomial `left - right`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReesBinomial {
    pub left: ReesTerm,
    pub right: ReesTerm,
}

impl ReesBinomial {
    pub fn t_degree(&self) -> usize {
        self.left.t.degree()
    }

    pub fn negate(&self) -> ReesBinomial {
        ReesBinomial {
            left: self.right.clone(),
            right: self.left.clone(),
        }
    }

    /// Whether the binomial maps to zero under `T_j ↦ u_j t`.
    pub fn is_in_kernel(&self, ideal: &MonomialIdeal) -> Result<bool> {
        if self.left.t.degree() != self.right.t.degree() {
            return Ok(false);
        }
        let l = self.left.coef.mul(&self.left.t.product(ideal)?)?;
        let r = self.right.coef.mul(&self.right.t.product(ideal)?)?;
        Ok(l == r)
    }

    /// Bidegree `(1, 1)`: both coefficients are variables and the T-degree is one.
    pub fn is_linear(&self) -> bool {
        self.t_degree() == 1 && self.left.coef.degree() == 1 && self.right.coef.degree() == 1
    }
}

impl fmt::Display for ReesBinomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} - {}", self.left, self.right)
    }
}

/// `T_{α,β} = lcm(u_α, u_β)/u_β · T_β − lcm(u_α, u_β)/u_α · T_α`.
pub fn taylor_relation(ideal: &MonomialIdeal, alpha: &IndexMultiset, beta: &IndexMultiset) -> Result<ReesBinomial> {
    if alpha.degree() != beta.degree() {
        return Err(Error::InvalidParameter(format!(
            "T-degrees differ: {} vs {}",
            alpha.degree(),
            beta.degree()
        )));
    }
    if alpha == beta {
        return Err(Error::InvalidParameter("α = β gives the zero relation".into()));
    }
    let ua = alpha.product(ideal)?;
    let ub = beta.product(ideal)?;
    let l = ua.lcm(&ub)?;
    Ok(ReesBinomial {
        left: ReesTerm {
            coef: l.div(&ub).expect("lcm is a multiple"),
            t: beta.clone(),
        },
        right: ReesTerm {
            coef: l.div(&ua).expect("lcm is a multiple"),
            t: alpha.clone(),
        },
    })
}

/// All `T_{(i),(j)}` with `i < j`: `C(r, 2)` relations spanning `K_1`.
pub fn k1_generators(ideal: &MonomialIdeal) -> Result<Vec<ReesBinomial>> {
    let r = ideal.len();
    let mut out = Vec::with_capacity(r * r.saturating_sub(1) / 2);
    for i in 1..=r {
        for j in i + 1..=r {
            out.push(taylor_relation(ideal, &IndexMultiset::single(i)?, &IndexMultiset::single(j)?)?);
        }
    }
    Ok(out)
}

/// One relation `x_k T_j − (u_l : u_j... ) T_l` per pair `(u_j, x_k ∈ set(u_j))`, where `u_l`
/// is the first earlier generator with `u_l : u_j = x_k`. There are `β_1(I)` of them.
pub fn reduced_k1_generators(data: &SetData) -> Result<Vec<ReesBinomial>> {
    let ideal = data.order().ideal();
    let index_of: BTreeMap<&[u32], usize> = ideal
        .generators()
        .iter()
        .enumerate()
        .map(|(k, g)| (g.exponents(), k + 1))
        .collect();
    let seq = data.order().sequence();
    let mut out = Vec::new();
    for (pos, (u, set)) in data.iter().enumerate() {
        for &k in set {
            let x = Monomial::var(ideal.context(), k);
            let earlier = seq[..pos]
                .iter()
                .find(|v| v.colon(u).is_ok_and(|c| c == x))
                .expect("set(u) variables come from colon generators");
            let j = index_of[u.exponents()];
            let l = index_of[earlier.exponents()];
            out.push(taylor_relation(ideal, &IndexMultiset::single(l)?, &IndexMultiset::single(j)?)?);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoincidenceCaps {
    pub max_generators: usize,
    pub max_degree: usize,
}

impl Default for CoincidenceCaps {
    fn default() -> Self {
        Self {
            max_generators: 24,
            max_degree: 5,
        }
    }
}

/// `P_s`: every unordered pair `α < β` of degree-`s` multisets with `u_α = u_β`,
/// written `T_α − T_β`, sorted by `(α, β)`.
pub fn binomial_coincidences(ideal: &MonomialIdeal, s: usize, caps: CoincidenceCaps) -> Result<Vec<ReesBinomial>> {
    if s < 2 {
        return Err(Error::InvalidParameter("coincidences start at s = 2".into()));
    }
    let r = ideal.len();
    if r > caps.max_generators || s > caps.max_degree {
        return Err(Error::BudgetExceeded(format!(
            "coincidence search with r = {r}, s = {s} exceeds caps r <= {}, s <= {}",
            caps.max_generators, caps.max_degree
        )));
    }
    if r < 2 {
        return Ok(Vec::new());
    }
    let gens = ideal.generators();
    let n = ideal.n();
    let multisets: Vec<Vec<usize>> = Multisets::new(r, s).collect();
    let mut keyed: Vec<(Vec<u32>, &Vec<usize>)> = multisets
        .par_iter()
        .map(|a| {
            let mut e = vec![0u32; n];
            for &i in a {
                for (x, y) in e.iter_mut().zip(gens[i].exponents()) {
                    *x += y;
                }
            }
            (e, a)
        })
        .collect();
    keyed.par_sort_unstable();
    let one = Monomial::one(ideal.context());
    let mut out = Vec::new();
    for group in keyed.chunk_by(|a, b| a.0 == b.0) {
        for (x, (_, a)) in group.iter().enumerate() {
            for (_, b) in &group[x + 1..] {
                out.push(ReesBinomial {
                    left: ReesTerm {
                        coef: one.clone(),
                        t: IndexMultiset(a.iter().map(|i| i + 1).collect()),
                    },
                    right: ReesTerm {
                        coef: one.clone(),
                        t: IndexMultiset(b.iter().map(|i| i + 1).collect()),
                    },
                });
            }
        }
    }
    out.sort_by(|p, q| (&p.left.t, &p.right.t).cmp(&(&q.left.t, &q.right.t)));
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DefiningIdeal {
    pub k1: Vec<ReesBinomial>,
    /// False when no linear-quotient order was found and `k1` holds all Taylor relations.
    pub k1_reduced: bool,
    /// `(s, P_s)` for `s = 2..=s_max`.
    pub coincidences: Vec<(usize, Vec<ReesBinomial>)>,
}

fn k1_for(ideal: &MonomialIdeal) -> Result<(Vec<ReesBinomial>, bool)> {
    match linear_quotient_data(ideal, ORDER_SEARCH_BUDGET) {
        Ok(data) => Ok((reduced_k1_generators(&data)?, true)),
        Err(Error::NotLinearQuotients { .. }) | Err(Error::BudgetExceeded(_)) => Ok((k1_generators(ideal)?, false)),
        Err(e) => Err(e),
    }
}

/// `K_1` together with `P_2, ..., P_{s_max}` for a squarefree ideal generated in degree `n - 2`.
pub fn defining_ideal_generators(ideal: &MonomialIdeal, s_max: usize) -> Result<DefiningIdeal> {
    graph_from_ideal(ideal)?;
    let (k1, k1_reduced) = k1_for(ideal)?;
    let coincidences = (2..=s_max)
        .map(|s| Ok((s, binomial_coincidences(ideal, s, CoincidenceCaps::default())?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(DefiningIdeal {
        k1,
        k1_reduced,
        coincidences,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphVerdict {
    Forest,
    OddUnicyclic,
    /// Disconnected, and every component is a tree or odd-unicyclic.
    ComponentwiseLinearType,
    Other,
}

impl GraphVerdict {
    pub fn predicts_linear_type(self) -> bool {
        self != GraphVerdict::Other
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "verdict")]
pub enum SearchVerdict {
    NoCoincidence { s_max: usize },
    Witness { s: usize, binomial: ReesBinomial },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinearTypeReport {
    pub graph_verdict: GraphVerdict,
    pub search: SearchVerdict,
    /// Always true in a returned report: a contradiction is an error.
    pub consistent: bool,
    /// False when the graph is not of linear type but no witness appeared up to `s_max`.
    pub conclusive: bool,
}

/// Graph criterion for linear type, checked against a bounded coincidence search.
pub fn linear_type(ideal: &MonomialIdeal, s_max: usize) -> Result<LinearTypeReport> {
    let g = graph_from_ideal(ideal)?;
    let st = g.structure();
    let graph_verdict = if st.is_forest {
        GraphVerdict::Forest
    } else if st.odd_unicyclic {
        GraphVerdict::OddUnicyclic
    } else if st.componentwise_linear_type {
        GraphVerdict::ComponentwiseLinearType
    } else {
        GraphVerdict::Other
    };
    let mut search = SearchVerdict::NoCoincidence { s_max };
    for s in 2..=s_max {
        if let Some(b) = binomial_coincidences(ideal, s, CoincidenceCaps::default())?.into_iter().next() {
            search = SearchVerdict::Witness { s, binomial: b };
            break;
        }
    }
    let found = matches!(search, SearchVerdict::Witness { .. });
    if graph_verdict.predicts_linear_type() && found {
        return Err(Error::Contradiction(format!(
            "G_J is {graph_verdict:?} but a coincidence was found: {search:?}"
        )));
    }
    Ok(LinearTypeReport {
        graph_verdict,
        search,
        consistent: true,
        conclusive: graph_verdict.predicts_linear_type() || found,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CiVerdict {
    CompleteIntersection,
    AlmostCompleteIntersection,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CiReport {
    pub n: usize,
    pub generators: usize,
    /// Number of reduced `K_1` generators.
    pub mu_k: usize,
    /// `(n + r) - (n + 1)`, from `dim S[T] - dim R(J)`.
    pub expected_height: usize,
    pub all_bidegree_1_1: bool,
    pub verdict: CiVerdict,
}

/// Generator count and bidegrees of `K` when `G_J` is a tree or odd-unicyclic.
pub fn ci_report(ideal: &MonomialIdeal) -> Result<CiReport> {
    let g = graph_from_ideal(ideal)?;
    let st = g.structure();
    if !st.is_connected || !(st.is_forest || st.odd_unicyclic) {
        return Err(Error::Precondition(
            "ci_report needs G_J to be a tree or a connected graph with one odd cycle".into(),
        ));
    }
    let data = linear_quotient_data(ideal, ORDER_SEARCH_BUDGET)?;
    let k1 = reduced_k1_generators(&data)?;
    let r = ideal.len();
    let expected_height = r - 1;
    let mu_k = k1.len();
    let verdict = if mu_k == expected_height {
        CiVerdict::CompleteIntersection
    } else if mu_k == expected_height + 1 {
        CiVerdict::AlmostCompleteIntersection
    } else {
        return Err(Error::Contradiction(format!(
            "{mu_k} generators against expected height {expected_height}"
        )));
    };
    Ok(CiReport {
        n: ideal.n(),
        generators: r,
        mu_k,
        expected_height,
        all_bidegree_1_1: k1.iter().all(ReesBinomial::is_linear),
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::SimpleGraph;
    use crate::monomial::RingContext;

    fn ms(v: &[usize]) -> IndexMultiset {
        IndexMultiset::new(v.to_vec()).unwrap()
    }

    /// Canonical generator index (1-based) of `X / (x_a x_b)` for the edge `{a, b}`.
    fn edge_index(j: &MonomialIdeal, a: usize, b: usize) -> usize {
        let n = j.n();
        let u = Monomial::from_support(j.context(), (0..n).filter(|&v| v != a - 1 && v != b - 1)).unwrap();
        j.generators().iter().position(|g| *g == u).unwrap() + 1
    }

    #[test]
    fn taylor_two_generators() {
        let r = RingContext::new(3).unwrap();
        let i = MonomialIdeal::from_exponents(&r, vec![vec![1, 1, 0], vec![0, 1, 1]]).unwrap();
        let rel = taylor_relation(&i, &ms(&[1]), &ms(&[2])).unwrap();
        assert_eq!(rel.to_string(), "x1*T2 - x3*T1");
        assert!(rel.is_in_kernel(&i).unwrap());
        assert_eq!(taylor_relation(&i, &ms(&[2]), &ms(&[1])).unwrap(), rel.negate());
        assert!(taylor_relation(&i, &ms(&[1]), &ms(&[1])).is_err());
        assert!(taylor_relation(&i, &ms(&[1]), &ms(&[1, 2])).is_err());
        let json = serde_json::to_string(&rel).unwrap();
        assert_eq!(json, r#"{"left":{"coef":[1,0,0],"T":[2]},"right":{"coef":[0,0,1],"T":[1]}}"#);
    }

    #[test]
    fn four_cycle_quadric() {
        let j = SimpleGraph::cycle(4).unwrap().ideal_from_graph().unwrap();
        // edges along the cycle: e1 = 12, e2 = 23, e3 = 34, e4 = 41
        let e: Vec<usize> = [(1, 2), (2, 3), (3, 4), (4, 1)].iter().map(|&(a, b)| edge_index(&j, a, b)).collect();
        let rel = taylor_relation(&j, &ms(&[e[0], e[2]]), &ms(&[e[1], e[3]])).unwrap();
        assert!(rel.left.coef.is_one() && rel.right.coef.is_one());
        let p2 = binomial_coincidences(&j, 2, CoincidenceCaps::default()).unwrap();
        assert_eq!(p2.len(), 1);
        let pair = [p2[0].left.t.clone(), p2[0].right.t.clone()];
        assert!(pair.contains(&ms(&[e[0], e[2]])) && pair.contains(&ms(&[e[1], e[3]])));
        assert!(p2[0].is_in_kernel(&j).unwrap());
    }

    #[test]
    fn k1_counts() {
        let r = RingContext::new(2).unwrap();
        let single = MonomialIdeal::from_exponents(&r, vec![vec![1, 1]]).unwrap();
        assert!(k1_generators(&single).unwrap().is_empty());

        let path = SimpleGraph::path(4).unwrap().ideal_from_graph().unwrap();
        let d = linear_quotient_data(&path, 1000).unwrap();
        assert_eq!(reduced_k1_generators(&d).unwrap().len(), 2);

        let k3 = SimpleGraph::complete(3).unwrap().cover_ideal().unwrap();
        assert_eq!(k1_generators(&k3).unwrap().len(), 3);
        let d = linear_quotient_data(&k3, 1000).unwrap();
        let red = reduced_k1_generators(&d).unwrap();
        assert_eq!(red.len(), 2);
        assert!(red.iter().all(|b| b.is_in_kernel(&k3).unwrap() && b.is_linear()));
    }

    #[test]
    fn coincidences_for_linear_type_graphs() {
        for g in [
            SimpleGraph::path(5).unwrap(),
            SimpleGraph::star(6).unwrap(),
            SimpleGraph::cycle(3).unwrap(),
            SimpleGraph::cycle(5).unwrap(),
        ] {
            let j = g.ideal_from_graph().unwrap();
            for s in 2..=4 {
                assert!(binomial_coincidences(&j, s, CoincidenceCaps::default()).unwrap().is_empty());
            }
        }
        let j = SimpleGraph::path(3).unwrap().ideal_from_graph().unwrap();
        assert!(binomial_coincidences(&j, 1, CoincidenceCaps::default()).is_err());
        let caps = CoincidenceCaps {
            max_generators: 1,
            max_degree: 5,
        };
        assert!(matches!(binomial_coincidences(&j, 2, caps), Err(Error::BudgetExceeded(_))));
    }

    #[test]
    fn defining_ideals() {
        let tree = SimpleGraph::from_prufer(&[2, 2, 3]).unwrap().ideal_from_graph().unwrap();
        let d = defining_ideal_generators(&tree, 3).unwrap();
        assert!(d.k1_reduced);
        assert_eq!(d.k1.len(), 5 - 2);
        assert!(d.coincidences.iter().all(|(_, p)| p.is_empty()));

        let c4 = SimpleGraph::cycle(4).unwrap().ideal_from_graph().unwrap();
        let d = defining_ideal_generators(&c4, 3).unwrap();
        assert_eq!(d.k1.len(), 4);
        assert_eq!(d.coincidences[0].1.len(), 1);

        let c5 = SimpleGraph::cycle(5).unwrap().ideal_from_graph().unwrap();
        let d = defining_ideal_generators(&c5, 4).unwrap();
        assert!(d.coincidences.iter().all(|(_, p)| p.is_empty()));

        let r = RingContext::new(3).unwrap();
        let bad = MonomialIdeal::from_exponents(&r, vec![vec![1, 1, 0]]).unwrap();
        assert!(defining_ideal_generators(&bad, 2).is_err());
    }

    #[test]
    fn linear_type_reports() {
        let rep = linear_type(&SimpleGraph::path(5).unwrap().ideal_from_graph().unwrap(), 4).unwrap();
        assert_eq!(rep.graph_verdict, GraphVerdict::Forest);
        assert!(rep.consistent && rep.conclusive);

        let rep = linear_type(&SimpleGraph::cycle(4).unwrap().ideal_from_graph().unwrap(), 4).unwrap();
        assert_eq!(rep.graph_verdict, GraphVerdict::Other);
        assert!(matches!(rep.search, SearchVerdict::Witness { s: 2, .. }));

        let rep = linear_type(&SimpleGraph::cycle(7).unwrap().ideal_from_graph().unwrap(), 4).unwrap();
        assert_eq!(rep.graph_verdict, GraphVerdict::OddUnicyclic);
        assert_eq!(rep.search, SearchVerdict::NoCoincidence { s_max: 4 });

        let rep = linear_type(&SimpleGraph::cycle(6).unwrap().ideal_from_graph().unwrap(), 4).unwrap();
        assert!(matches!(rep.search, SearchVerdict::Witness { s: 3, .. }));
    }

    #[test]
    fn ci_reports() {
        let t4 = SimpleGraph::path(4).unwrap().ideal_from_graph().unwrap();
        let rep = ci_report(&t4).unwrap();
        assert_eq!((rep.mu_k, rep.expected_height, rep.verdict), (2, 2, CiVerdict::CompleteIntersection));
        assert!(rep.all_bidegree_1_1);

        let c3 = SimpleGraph::cycle(3).unwrap().ideal_from_graph().unwrap();
        let rep = ci_report(&c3).unwrap();
        assert_eq!((rep.mu_k, rep.verdict), (3, CiVerdict::AlmostCompleteIntersection));

        let star = SimpleGraph::star(5).unwrap().ideal_from_graph().unwrap();
        let rep = ci_report(&star).unwrap();
        assert_eq!((rep.mu_k, rep.verdict), (3, CiVerdict::CompleteIntersection));

        let c4 = SimpleGraph::cycle(4).unwrap().ideal_from_graph().unwrap();
        assert!(matches!(ci_report(&c4), Err(Error::Precondition(_))));
    }
}
