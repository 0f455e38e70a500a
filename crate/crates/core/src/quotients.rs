//! Linear quotients and the Betti tables of the iterated mapping cone.
//!
//! For an order `u_1, ..., u_r` of the minimal generators with non-decreasing
//! degrees, `set(u_j)` collects the variables `x_k` with `x_k u_j` in
//! `(u_1, ..., u_{j-1})`. When every colon ideal `(u_1, ..., u_{j-1}) : u_j` is
//! generated by those variables the mapping cone is a minimal resolution with
//! one basis element per pair `(u, sigma)`, `sigma` a subset of `set(u)`, in
//! homological degree `|sigma|` and internal degree `deg(u) + |sigma|`.

use std::collections::{HashMap, HashSet};

use crate::betti::{BettiModule, BettiTable};
use crate::combinat::binomial_u64;
use crate::error::{Error, Result};
use crate::graph::graph_from_ideal;
use crate::monomial::{canonical_cmp, Monomial, MonomialIdeal};

/// A permutation of the minimal generators with non-decreasing degrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientOrder {
    ideal: MonomialIdeal,
    sequence: Vec<Monomial>,
}

impl QuotientOrder {
    pub fn new(ideal: &MonomialIdeal, sequence: Vec<Monomial>) -> Result<Self> {
        let mut sorted = sequence.clone();
        sorted.sort_by(canonical_cmp);
        if sorted != ideal.generators() {
            return Err(Error::InvalidParameter(
                "sequence is not a permutation of the minimal generators".into(),
            ));
        }
        if sequence.windows(2).any(|w| w[0].degree() > w[1].degree()) {
            return Err(Error::InvalidParameter("generator degrees must be non-decreasing".into()));
        }
        Ok(Self {
            ideal: ideal.clone(),
            sequence,
        })
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn sequence(&self) -> &[Monomial] {
        &self.sequence
    }
}

/// Generators sorted by degree, and within a degree descending in revlex with
/// `x1 > ... > xn` (this is the ideal's canonical order).
pub fn revlex_order(ideal: &MonomialIdeal) -> QuotientOrder {
    QuotientOrder {
        ideal: ideal.clone(),
        sequence: ideal.generators().to_vec(),
    }
}

/// `set(u_j)` for every position of a linear-quotient order, as sorted 0-based variable indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetData {
    order: QuotientOrder,
    sets: Vec<Vec<usize>>,
}

impl SetData {
    pub fn order(&self) -> &QuotientOrder {
        &self.order
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    /// `(u_j, set(u_j))` pairs in order.
    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &[usize])> {
        self.order.sequence.iter().zip(self.sets.iter().map(Vec::as_slice))
    }

    pub fn set_of(&self, u: &Monomial) -> Option<&[usize]> {
        self.iter().find(|(g, _)| *g == u).map(|(_, s)| s)
    }
}

/// Lookup structure over the generators placed so far: equal-degree generators are
/// found by hashing `x_k u / x_m`, lower-degree ones by a scan.
struct PrefixIndex<'a> {
    by_exponents: HashMap<&'a [u32], usize>,
}

impl<'a> PrefixIndex<'a> {
    fn new() -> Self {
        Self {
            by_exponents: HashMap::new(),
        }
    }

    fn push(&mut self, u: &'a Monomial, pos: usize) {
        self.by_exponents.insert(u.exponents(), pos);
    }

    /// Is `x_k * u` divisible by some indexed generator?
    fn contains_shift(&self, u: &Monomial, k: usize, all: &[&'a Monomial]) -> bool {
        let mut e = u.exponents().to_vec();
        e[k] += 1;
        let d = u.degree();
        for m in 0..e.len() {
            if m == k || e[m] == 0 {
                continue;
            }
            e[m] -= 1;
            let hit = self.by_exponents.get(e.as_slice()).is_some_and(|&p| all[p].degree() == d);
            e[m] += 1;
            if hit {
                return true;
            }
        }
        all.iter()
            .filter(|g| g.degree() < d)
            .any(|g| g.exponents().iter().zip(e.iter()).all(|(a, b)| a <= b))
    }
}

fn variable_set(prefix: &PrefixIndex, u: &Monomial, placed: &[&Monomial]) -> Vec<usize> {
    (0..u.exponents().len())
        .filter(|&k| prefix.contains_shift(u, k, placed))
        .collect()
}

/// Colon generators `u_l / gcd(u_l, u)` not divisible by any variable of `set`;
/// returns the first minimal one in canonical order.
fn offending_colon(placed: &[&Monomial], u: &Monomial, set: &[usize]) -> Option<Monomial> {
    let mask: u64 = set.iter().fold(0, |m, &k| m | 1 << k);
    let mut bad: Vec<Monomial> = placed
        .iter()
        .map(|p| p.colon(u).expect("same ring"))
        .filter(|c| c.support_mask() & mask == 0)
        .collect();
    if bad.is_empty() {
        return None;
    }
    bad.sort_by(canonical_cmp);
    bad.dedup();
    bad.iter()
        .find(|c| !bad.iter().any(|d| d != *c && d.divides(c)))
        .cloned()
}

/// `set(u_j)` for every `j`, or `NotLinearQuotients` at the first position whose
/// colon ideal is not generated by variables (position is 1-based).
pub fn compute_set_data(order: &QuotientOrder) -> Result<SetData> {
    let seq = &order.sequence;
    let mut prefix = PrefixIndex::new();
    let mut placed: Vec<&Monomial> = Vec::with_capacity(seq.len());
    let mut sets = Vec::with_capacity(seq.len());
    for (j, u) in seq.iter().enumerate() {
        let set = variable_set(&prefix, u, &placed);
        if let Some(witness) = offending_colon(&placed, u, &set) {
            return Err(Error::NotLinearQuotients {
                position: j + 1,
                witness,
            });
        }
        sets.push(set);
        prefix.push(u, j);
        placed.push(u);
    }
    Ok(SetData {
        order: order.clone(),
        sets,
    })
}

/// Closed form for `J(K_n)^s` in revlex order: writing `u = X^s / v` with
/// `deg v = s`, `set(u)` is `supp(v)` without the last variable.
pub fn set_formula_complete_power(n: usize, s: u32, u: &Monomial) -> Result<Vec<usize>> {
    if u.exponents().len() != n {
        return Err(Error::ArityMismatch {
            expected: n,
            got: u.exponents().len(),
        });
    }
    if u.exponents().iter().any(|&a| a > s) || u.degree() != s * (n as u32 - 1) {
        return Err(Error::InvalidParameter(format!("{u} is not a generator of J(K_{n})^{s}")));
    }
    // v = X^s / u
    Ok((0..n - 1).filter(|&i| u.exponent(i) < s).collect())
}

/// `A_t = #{u : |set(u)| = t}` for `t = 0..=n`.
pub fn a_t_census(data: &SetData) -> Vec<u64> {
    let n = data.order.ideal.n();
    let mut counts = vec![0u64; n + 1];
    for s in &data.sets {
        counts[s.len()] += 1;
    }
    counts
}

/// Betti table of the ideal: `beta_{i, deg(u)+i} += C(|set(u)|, i)`.
pub fn betti_from_linear_quotients(data: &SetData) -> BettiTable {
    let mut table = BettiTable::new(BettiModule::Ideal);
    for (u, set) in data.iter() {
        let t = set.len();
        for i in 0..=t {
            table.add(i, u.degree() as u64 + i as u64, binomial_u64(t as i64, i as i64));
        }
    }
    table
}

/// Weighted analogue: each `(u, sigma)` sits in degree `deg_w(u) + sum_{k in sigma} w_k`.
pub fn weighted_betti(data: &SetData, weights: &[u32]) -> Result<BettiTable> {
    let n = data.order.ideal.n();
    if weights.len() != n || weights.contains(&0) {
        return Err(Error::InvalidParameter(format!("weights {weights:?} for {n} variables")));
    }
    let mut table = BettiTable::weighted(BettiModule::Ideal, weights.to_vec());
    for (u, set) in data.iter() {
        let base: u64 = u
            .exponents()
            .iter()
            .zip(weights)
            .map(|(&a, &w)| a as u64 * w as u64)
            .sum();
        for sigma in 0u64..1 << set.len() {
            let extra: u64 = (0..set.len())
                .filter(|b| sigma >> b & 1 == 1)
                .map(|b| weights[set[b]] as u64)
                .sum();
            table.add(sigma.count_ones() as usize, base + extra, 1);
        }
    }
    Ok(table)
}

/// Result of [`find_linear_quotient_order`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrderSearch {
    Found(QuotientOrder),
    /// Exhaustive search proved that no degree-compatible order has linear quotients.
    NoneExists,
    /// The node budget ran out before the search finished.
    BudgetExhausted,
}

/// Depth-first search for a linear-quotient order. Dead prefixes are memoized by
/// their generator set, since the colon condition for later generators depends
/// only on which generators came before.
pub fn find_linear_quotient_order(ideal: &MonomialIdeal, budget: usize) -> OrderSearch {
    let gens = ideal.generators();
    let r = gens.len();
    if r == 0 {
        return OrderSearch::Found(revlex_order(ideal));
    }
    let words = r.div_ceil(64);
    let mut dead: HashSet<Vec<u64>> = HashSet::new();
    let mut chosen: Vec<usize> = Vec::with_capacity(r);
    let mut used = vec![0u64; words];
    let mut nodes = 0usize;

    fn fits(gens: &[Monomial], chosen: &[usize], cand: usize) -> bool {
        let placed: Vec<&Monomial> = chosen.iter().map(|&c| &gens[c]).collect();
        let u = &gens[cand];
        let set: Vec<usize> = (0..u.exponents().len())
            .filter(|&k| {
                let mut e = u.exponents().to_vec();
                e[k] += 1;
                placed
                    .iter()
                    .any(|g| g.exponents().iter().zip(e.iter()).all(|(a, b)| a <= b))
            })
            .collect();
        offending_colon(&placed, u, &set).is_none()
    }

    #[allow(clippy::too_many_arguments)]
    fn dfs(
        gens: &[Monomial],
        chosen: &mut Vec<usize>,
        used: &mut Vec<u64>,
        dead: &mut HashSet<Vec<u64>>,
        nodes: &mut usize,
        budget: usize,
    ) -> Option<bool> {
        if chosen.len() == gens.len() {
            return Some(true);
        }
        if dead.contains(used) {
            return Some(false);
        }
        *nodes += 1;
        if *nodes > budget {
            return None;
        }
        let min_deg = (0..gens.len())
            .filter(|&k| used[k / 64] >> (k % 64) & 1 == 0)
            .map(|k| gens[k].degree())
            .min()
            .unwrap();
        for k in 0..gens.len() {
            if used[k / 64] >> (k % 64) & 1 == 1 || gens[k].degree() != min_deg {
                continue;
            }
            if !fits(gens, chosen, k) {
                continue;
            }
            chosen.push(k);
            used[k / 64] |= 1 << (k % 64);
            let res = dfs(gens, chosen, used, dead, nodes, budget);
            if res != Some(false) {
                return res;
            }
            chosen.pop();
            used[k / 64] &= !(1 << (k % 64));
        }
        dead.insert(used.clone());
        Some(false)
    }

    match dfs(gens, &mut chosen, &mut used, &mut dead, &mut nodes, budget) {
        Some(true) => {
            let seq = chosen.iter().map(|&k| gens[k].clone()).collect();
            OrderSearch::Found(QuotientOrder::new(ideal, seq).expect("search keeps degrees sorted"))
        }
        Some(false) => OrderSearch::NoneExists,
        None => OrderSearch::BudgetExhausted,
    }
}

/// For a squarefree ideal in degree `n - 2` whose graph `G_J` is connected: the order
/// `X_{[n] \ e_1}, ..., X_{[n] \ e_r}` induced by the shelling edge order of `G_J`.
pub fn shelling_quotient_order(ideal: &MonomialIdeal) -> Result<QuotientOrder> {
    let g = graph_from_ideal(ideal)?;
    let order = g.shelling_edge_order()?;
    let n = ideal.n();
    let seq = order
        .iter()
        .map(|&(a, b)| Monomial::from_support(ideal.context(), (0..n).filter(|&v| v != a - 1 && v != b - 1)))
        .collect::<Result<Vec<_>>>()?;
    QuotientOrder::new(ideal, seq)
}

/// Set data from the revlex order, falling back to a bounded order search.
pub fn linear_quotient_data(ideal: &MonomialIdeal, budget: usize) -> Result<SetData> {
    match compute_set_data(&revlex_order(ideal)) {
        Ok(d) => Ok(d),
        Err(first) => match find_linear_quotient_order(ideal, budget) {
            OrderSearch::Found(order) => compute_set_data(&order),
            OrderSearch::NoneExists => Err(first),
            OrderSearch::BudgetExhausted => Err(Error::BudgetExceeded(format!(
                "no linear-quotient order found within {budget} nodes"
            ))),
        },
    }
}
