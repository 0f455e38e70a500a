//! Betti numbers from Hochster's formula, independent of any resolution.
//!
//! For a squarefree ideal `I` with Stanley–Reisner complex `Δ`,
//! `β_{i,σ}(S/I) = dim H̃_{|σ|-i-1}(Δ_σ)`. The ideal is polarized first, and only
//! vertex sets `σ` that are unions of generator supports are visited: any other
//! `σ` has a vertex outside every non-face it contains, so `Δ_σ` is a cone.
//! Each entry is computed either on `Δ_σ` or, through Alexander duality inside
//! `σ`, as `dim H̃_{i-2}` of the complex `{τ ⊆ σ : σ \ τ ∉ Δ}`, whichever has
//! fewer faces in the needed dimensions.

mod complex;
mod field;
mod linalg;
mod polarize;

use std::collections::HashSet;
use std::ops::RangeInclusive;

use rayon::prelude::*;

pub use complex::{homology_rank, reduced_homology, SimplicialComplexView};
pub use field::{is_prime, FieldSpec, DEFAULT_CHARACTERISTIC};
pub use linalg::{rank, SignedRows};
pub use polarize::{polarize, PolarizedIdeal};

use crate::betti::{BettiModule, BettiTable};
use crate::combinat::{binomial_u64, subsets_of_size};
use crate::error::{Error, Result};
use crate::monomial::MonomialIdeal;

pub const DEFAULT_VERTEX_CAP: usize = 22;

/// Which complex the homology is computed on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Route {
    /// The restriction `Δ_σ`.
    StanleyReisner,
    /// The Alexander dual inside `σ`.
    Dual,
    #[default]
    Auto,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleOptions {
    pub field: FieldSpec,
    /// Largest polarized vertex count accepted by [`betti_table_oracle`].
    pub vertex_cap: usize,
    /// Internal degrees to compute; `None` for all.
    pub window: Option<RangeInclusive<u64>>,
    pub route: Route,
    /// `Some(1)` forces a sequential sweep; otherwise the current rayon pool is used.
    pub jobs: Option<usize>,
}

impl Default for OracleOptions {
    fn default() -> Self {
        Self {
            field: FieldSpec::default(),
            vertex_cap: DEFAULT_VERTEX_CAP,
            window: None,
            route: Route::Auto,
            jobs: None,
        }
    }
}

impl OracleOptions {
    pub fn with_field(field: FieldSpec) -> Self {
        Self {
            field,
            ..Self::default()
        }
    }
}

const CLOSURE_CAP: usize = 1 << 21;
const SCAN_CAP: u64 = 1 << 23;

/// All non-empty unions of the given supports, or `None` once more than `cap` are found.
fn union_closure(supports: &[u64], cap: usize) -> Option<Vec<u64>> {
    let mut seen: HashSet<u64> = HashSet::new();
    let mut frontier: Vec<u64> = Vec::new();
    for &s in supports {
        if seen.insert(s) {
            frontier.push(s);
        }
    }
    while let Some(x) = frontier.pop() {
        for &s in supports {
            let y = x | s;
            if y != x && seen.insert(y) {
                if seen.len() > cap {
                    return None;
                }
                frontier.push(y);
            }
        }
    }
    let mut out: Vec<u64> = seen.into_iter().collect();
    out.sort_unstable();
    Some(out)
}

fn is_union(sigma: u64, supports: &[u64]) -> bool {
    supports
        .iter()
        .filter(|&&s| s & !sigma == 0)
        .fold(0, |acc, &s| acc | s)
        == sigma
}

/// Unions of supports, found by closure or, if that blows up, by scanning all subsets.
fn candidate_sets(supports: &[u64], vertices: usize, size: Option<usize>) -> Result<Vec<u64>> {
    let universe = if vertices == 64 { u64::MAX } else { (1u64 << vertices) - 1 };
    if let Some(k) = size {
        if binomial_u64(vertices as i64, k as i64) <= SCAN_CAP {
            return Ok(subsets_of_size(universe, k).filter(|&s| is_union(s, supports)).collect());
        }
    }
    if let Some(all) = union_closure(supports, CLOSURE_CAP) {
        return Ok(match size {
            Some(k) => all.into_iter().filter(|s| s.count_ones() as usize == k).collect(),
            None => all,
        });
    }
    if vertices as u32 > SCAN_CAP.trailing_zeros() {
        return Err(Error::BudgetExceeded(format!(
            "too many candidate vertex sets on {vertices} polarized variables"
        )));
    }
    Ok((1..=universe)
        .filter(|&s| size.is_none_or(|k| s.count_ones() as usize == k) && is_union(s, supports))
        .collect())
}

/// `β_{i,σ}(S/I)` for `i ≥ 1` on the complex restricted to `σ`.
fn local_betti(view: &SimplicialComplexView, i: usize, field: FieldSpec, route: Route) -> usize {
    let m = view.vertices().count_ones() as i64;
    let primal_dim = m - i as i64 - 1;
    let dual_dim = i as i64 - 2;
    let use_dual = match route {
        Route::StanleyReisner => false,
        Route::Dual => true,
        Route::Auto => {
            let lo = |d: i64| (d.max(0)) as usize;
            let (p, _) = view.face_counts(lo(primal_dim), lo(primal_dim + 2));
            let (_, q) = view.face_counts(lo(dual_dim), lo(dual_dim + 2));
            q <= p
        }
    };
    if use_dual {
        view.dual_reduced_homology(dual_dim, field)
    } else {
        view.reduced_homology(primal_dim, field)
    }
}

/// All `β_{i,σ}(S/I)`, `i ≥ 1`, at one vertex set `σ`, as `(i, multiplicity)` pairs.
fn betti_at(sigma: u64, supports: &[u64], field: FieldSpec, route: Route) -> Vec<(usize, usize)> {
    let view = SimplicialComplexView::new(sigma, supports);
    let m = sigma.count_ones() as usize;
    let dmin = view.nonfaces().iter().map(|g| g.count_ones() as usize).min().unwrap_or(m);
    // below this the complex is a full skeleton and the homology vanishes
    let top = (m + 1).saturating_sub(dmin).min(m);
    (1..=top)
        .filter_map(|i| {
            let b = local_betti(&view, i, field, route);
            (b > 0).then_some((i, b))
        })
        .collect()
}

fn sigma_degree(sigma: u64, weights: &[u32]) -> u64 {
    let mut rest = sigma;
    let mut d = 0u64;
    while rest != 0 {
        d += weights[rest.trailing_zeros() as usize] as u64;
        rest &= rest - 1;
    }
    d
}

/// Betti table of `S/I` computed from Hochster's formula.
pub fn betti_table_oracle(ideal: &MonomialIdeal, opts: &OracleOptions) -> Result<BettiTable> {
    let mut table = BettiTable::new(BettiModule::Quotient);
    if !ideal.context().is_standard() {
        table.weights = Some(ideal.context().weights().to_vec());
    }
    let in_window = |d: u64| opts.window.as_ref().is_none_or(|w| w.contains(&d));
    if ideal.generators().iter().any(|g| g.is_one()) {
        return Ok(table);
    }
    if in_window(0) {
        table.add(0, 0, 1);
    }
    if ideal.is_zero() {
        return Ok(table);
    }
    let pol = polarize(ideal);
    let nv = pol.vertex_count();
    if nv > opts.vertex_cap {
        return Err(Error::BudgetExceeded(format!(
            "{nv} polarized variables exceed the cap of {}; compute single entries instead",
            opts.vertex_cap
        )));
    }
    let supports = pol.support_masks()?;
    let weights = pol.slot_weights();
    let sigmas: Vec<u64> = candidate_sets(&supports, nv, None)?
        .into_iter()
        .filter(|&s| in_window(sigma_degree(s, &weights)))
        .collect();
    let work = |&sigma: &u64| -> Vec<(usize, u64, u64)> {
        let d = sigma_degree(sigma, &weights);
        betti_at(sigma, &supports, opts.field, opts.route)
            .into_iter()
            .map(|(i, b)| (i, d, b as u64))
            .collect()
    };
    let parts: Vec<Vec<(usize, u64, u64)>> = if opts.jobs == Some(1) {
        sigmas.iter().map(work).collect()
    } else {
        sigmas.par_iter().map(work).collect()
    };
    for (i, d, b) in parts.into_iter().flatten() {
        table.add(i, d, b);
    }
    Ok(table)
}

/// A single `β_{i,j}(S/I)`; no vertex cap, since only sets of degree `j` are visited.
pub fn hochster_entry(ideal: &MonomialIdeal, i: usize, j: u64, opts: &OracleOptions) -> Result<u64> {
    if ideal.generators().iter().any(|g| g.is_one()) {
        return Ok(0);
    }
    if i == 0 || ideal.is_zero() {
        return Ok(u64::from(i == 0 && j == 0));
    }
    let pol = polarize(ideal);
    let supports = pol.support_masks()?;
    let weights = pol.slot_weights();
    let nv = pol.vertex_count();
    let size = if ideal.context().is_standard() {
        if j > nv as u64 {
            return Ok(0);
        }
        Some(j as usize)
    } else {
        None
    };
    let sigmas: Vec<u64> = candidate_sets(&supports, nv, size)?
        .into_iter()
        .filter(|&s| sigma_degree(s, &weights) == j)
        .collect();
    let work = |&sigma: &u64| -> u64 {
        let view = SimplicialComplexView::new(sigma, &supports);
        local_betti(&view, i, opts.field, opts.route) as u64
    };
    Ok(if opts.jobs == Some(1) {
        sigmas.iter().map(work).sum()
    } else {
        sigmas.par_iter().map(work).sum()
    })
}
