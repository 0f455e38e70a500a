//! Monomials and monomial ideals in a fixed polynomial ring `k[x1, ..., xn]`.
//!
//! Variables are indexed from 0 in the API and printed from 1 (`x1`, `x2`, ...).
//! Every [`Monomial`] carries its [`RingContext`]; binary operations between
//! monomials of different rings fail with [`Error::ContextMismatch`].
//!
//! Ideals keep their minimal generators in a canonical order: ascending total
//! degree, and within a degree descending in reverse lexicographic order with
//! `x1 > x2 > ... > xn`.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::combinat::binomial;
use crate::error::{Error, Result};

/// The ambient polynomial ring: number of variables and a positive weight per variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingContext {
    weights: Vec<u32>,
}

impl RingContext {
    /// Standard grading, all weights 1.
    pub fn new(n: usize) -> Result<Arc<Self>> {
        Self::weighted(vec![1; n])
    }

    pub fn weighted(weights: Vec<u32>) -> Result<Arc<Self>> {
        if weights.is_empty() {
            return Err(Error::InvalidContext("n = 0".into()));
        }
        if weights.contains(&0) {
            return Err(Error::InvalidContext(format!("weights {weights:?}")));
        }
        Ok(Arc::new(Self { weights }))
    }

    pub fn n(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn is_standard(&self) -> bool {
        self.weights.iter().all(|&w| w == 1)
    }
}

fn same_ring(a: &Arc<RingContext>, b: &Arc<RingContext>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

#[derive(Clone)]
pub struct Monomial {
    ctx: Arc<RingContext>,
    exps: Box<[u32]>,
}

impl Monomial {
    pub fn new(ctx: &Arc<RingContext>, exps: Vec<u32>) -> Result<Self> {
        if exps.len() != ctx.n() {
            return Err(Error::ArityMismatch {
                expected: ctx.n(),
                got: exps.len(),
            });
        }
        Ok(Self {
            ctx: Arc::clone(ctx),
            exps: exps.into_boxed_slice(),
        })
    }

    pub fn one(ctx: &Arc<RingContext>) -> Self {
        Self {
            ctx: Arc::clone(ctx),
            exps: vec![0; ctx.n()].into_boxed_slice(),
        }
    }

    pub fn var(ctx: &Arc<RingContext>, i: usize) -> Self {
        let mut exps = vec![0; ctx.n()];
        exps[i] = 1;
        Self {
            ctx: Arc::clone(ctx),
            exps: exps.into_boxed_slice(),
        }
    }

    /// The squarefree monomial `X_F` for a set `F` of variable indices.
    pub fn from_support<I: IntoIterator<Item = usize>>(ctx: &Arc<RingContext>, support: I) -> Result<Self> {
        let mut exps = vec![0; ctx.n()];
        for i in support {
            if i >= ctx.n() {
                return Err(Error::InvalidParameter(format!("variable index {i} out of range")));
            }
            exps[i] = 1;
        }
        Self::new(ctx, exps)
    }

    /// The product of all variables, `X = x1 * ... * xn`.
    pub fn all_variables(ctx: &Arc<RingContext>) -> Self {
        Self {
            ctx: Arc::clone(ctx),
            exps: vec![1; ctx.n()].into_boxed_slice(),
        }
    }

    pub fn context(&self) -> &Arc<RingContext> {
        &self.ctx
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn weighted_degree(&self) -> u64 {
        weighted_degree(self, &self.ctx)
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&a| a == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&a| a <= 1)
    }

    /// Indices of the variables dividing this monomial.
    pub fn support(&self) -> Vec<usize> {
        (0..self.exps.len()).filter(|&i| self.exps[i] > 0).collect()
    }

    /// Support as a bitmask; only meaningful for rings with at most 64 variables.
    pub fn support_mask(&self) -> u64 {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .fold(0, |m, (i, _)| m | 1 << i)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert!(same_ring(&self.ctx, &other.ctx));
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    fn check_ring(&self, other: &Monomial) -> Result<()> {
        if same_ring(&self.ctx, &other.ctx) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    fn zip_with(&self, other: &Monomial, f: impl Fn(u32, u32) -> u32) -> Result<Monomial> {
        self.check_ring(other)?;
        let exps = self.exps.iter().zip(other.exps.iter()).map(|(&a, &b)| f(a, b)).collect();
        Ok(Monomial {
            ctx: Arc::clone(&self.ctx),
            exps,
        })
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        self.zip_with(other, u32::max)
    }

    pub fn gcd(&self, other: &Monomial) -> Result<Monomial> {
        self.zip_with(other, u32::min)
    }

    /// `self / gcd(self, other)`: the generator of the principal colon `(self) : other`.
    pub fn colon(&self, other: &Monomial) -> Result<Monomial> {
        self.zip_with(other, |a, b| a.saturating_sub(b))
    }

    /// Exact quotient; `None` unless `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !same_ring(&self.ctx, &other.ctx) || !other.divides(self) {
            return None;
        }
        let exps = self.exps.iter().zip(other.exps.iter()).map(|(a, b)| a - b).collect();
        Some(Monomial {
            ctx: Arc::clone(&self.ctx),
            exps,
        })
    }

    pub fn pow(&self, s: u32) -> Monomial {
        Monomial {
            ctx: Arc::clone(&self.ctx),
            exps: self.exps.iter().map(|a| a * s).collect(),
        }
    }

    /// Graded reverse lexicographic comparison with `x1 > x2 > ... > xn`.
    /// `Ordering::Greater` means `self` is the larger monomial.
    pub fn cmp_grevlex(&self, other: &Monomial) -> Ordering {
        grevlex(&self.exps, &other.exps)
    }
}

/// Graded revlex on raw exponent vectors: higher total degree wins; on ties the
/// monomial whose last differing exponent is smaller is the larger one.
pub fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b.iter()).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

/// Canonical generator order: ascending degree, then descending revlex.
pub fn canonical_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| b.cmp_grevlex(a))
}

impl PartialEq for Monomial {
    fn eq(&self, other: &Self) -> bool {
        self.exps == other.exps && same_ring(&self.ctx, &other.ctx)
    }
}

impl Eq for Monomial {}

impl Hash for Monomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.exps.hash(state);
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &a) in self.exps.iter().enumerate() {
            if a == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if a > 1 {
                write!(f, "^{a}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Monomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.exps.serialize(s)
    }
}

pub fn lcm(u: &Monomial, v: &Monomial) -> Result<Monomial> {
    u.lcm(v)
}

pub fn colon(u: &Monomial, v: &Monomial) -> Result<Monomial> {
    u.colon(v)
}

/// `sum a_i * w_i` using the weights of `ctx` (which need not be the monomial's own ring,
/// only of the same size).
pub fn weighted_degree(u: &Monomial, ctx: &RingContext) -> u64 {
    debug_assert_eq!(u.exps.len(), ctx.n());
    u.exps
        .iter()
        .zip(ctx.weights.iter())
        .map(|(&a, &w)| a as u64 * w as u64)
        .sum()
}

/// `u' = X / u` for squarefree `u`.
pub fn complement_monomial(u: &Monomial) -> Result<Monomial> {
    if !u.is_squarefree() {
        return Err(Error::NotSquarefree(u.clone()));
    }
    Ok(Monomial {
        ctx: Arc::clone(&u.ctx),
        exps: u.exps.iter().map(|a| 1 - a).collect(),
    })
}

/// Which side of `0 -> I -> S -> S/I -> 0` a count refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HilbertMode {
    Ideal,
    Quotient,
}

/// Largest generator count for which the Hilbert function is computed by inclusion-exclusion.
pub const INCLUSION_EXCLUSION_LIMIT: usize = 20;

#[derive(Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    ctx: Arc<RingContext>,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn zero(ctx: &Arc<RingContext>) -> Self {
        Self {
            ctx: Arc::clone(ctx),
            gens: Vec::new(),
        }
    }

    pub fn unit(ctx: &Arc<RingContext>) -> Self {
        Self {
            ctx: Arc::clone(ctx),
            gens: vec![Monomial::one(ctx)],
        }
    }

    /// Build an ideal from any non-empty generating set, keeping only minimal generators.
    pub fn minimalize<I: IntoIterator<Item = Monomial>>(gens: I) -> Result<Self> {
        let gens: Vec<Monomial> = gens.into_iter().collect();
        let first = gens.first().ok_or(Error::EmptyGenerators)?;
        let ctx = Arc::clone(&first.ctx);
        if gens.iter().any(|g| !same_ring(&g.ctx, &ctx)) {
            return Err(Error::ContextMismatch);
        }
        Ok(Self {
            gens: minimal_antichain(gens),
            ctx,
        })
    }

    pub fn from_exponents(ctx: &Arc<RingContext>, gens: Vec<Vec<u32>>) -> Result<Self> {
        let gens = gens
            .into_iter()
            .map(|e| Monomial::new(ctx, e))
            .collect::<Result<Vec<_>>>()?;
        if gens.is_empty() {
            return Ok(Self::zero(ctx));
        }
        Self::minimalize(gens)
    }

    pub fn context(&self) -> &Arc<RingContext> {
        &self.ctx
    }

    pub fn n(&self) -> usize {
        self.ctx.n()
    }

    /// Minimal generators in canonical order.
    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Same ideal viewed in a different ring of the same size (used to attach weights).
    pub fn with_context(&self, ctx: &Arc<RingContext>) -> Result<Self> {
        if ctx.n() != self.n() {
            return Err(Error::ContextMismatch);
        }
        Ok(Self {
            ctx: Arc::clone(ctx),
            gens: self
                .gens
                .iter()
                .map(|g| Monomial {
                    ctx: Arc::clone(ctx),
                    exps: g.exps.clone(),
                })
                .collect(),
        })
    }

    /// Common degree of all generators, if there is one.
    pub fn generated_in_degree(&self) -> Option<u32> {
        let d = self.gens.first()?.degree();
        self.gens.iter().all(|g| g.degree() == d).then_some(d)
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if !same_ring(&self.ctx, &other.ctx) {
            return Err(Error::ContextMismatch);
        }
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.ctx));
        }
        let mut seen: HashSet<Box<[u32]>> = HashSet::new();
        let mut products = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                let exps: Box<[u32]> = a.exps.iter().zip(b.exps.iter()).map(|(x, y)| x + y).collect();
                if seen.insert(exps.clone()) {
                    products.push(Monomial {
                        ctx: Arc::clone(&self.ctx),
                        exps,
                    });
                }
            }
        }
        Ok(Self {
            ctx: Arc::clone(&self.ctx),
            gens: minimal_antichain(products),
        })
    }

    /// Minimal generators of `I^s`, `s >= 1`, built by repeated multiplication
    /// with minimalization after each step.
    pub fn power(&self, s: u32) -> Result<MonomialIdeal> {
        if s == 0 {
            return Err(Error::InvalidParameter("power must be at least 1".into()));
        }
        let mut acc = self.clone();
        for _ in 1..s {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// Number of monomials of total degree `d` lying in `I` (or in `S/I`).
    pub fn hilbert_function(&self, d: u32, mode: HilbertMode) -> BigUint {
        let in_ideal = if self.gens.len() <= INCLUSION_EXCLUSION_LIMIT {
            self.hilbert_inclusion_exclusion(d)
        } else {
            self.hilbert_enumerate(d)
        };
        match mode {
            HilbertMode::Ideal => in_ideal,
            HilbertMode::Quotient => monomials_of_degree(self.n(), d) - in_ideal,
        }
    }

    /// Inclusion-exclusion over lcms of generator subsets, pruning subsets whose lcm
    /// already exceeds degree `d`.
    pub fn hilbert_inclusion_exclusion(&self, d: u32) -> BigUint {
        fn walk(
            gens: &[Monomial],
            start: usize,
            current: &mut Vec<u32>,
            size: usize,
            d: u32,
            n: usize,
            acc: &mut BigInt,
        ) {
            for k in start..gens.len() {
                let saved = current.clone();
                for (c, &e) in current.iter_mut().zip(gens[k].exps.iter()) {
                    *c = (*c).max(e);
                }
                let deg: u32 = current.iter().sum();
                if deg <= d {
                    let term = BigInt::from(monomials_of_degree(n, d - deg));
                    if size.is_multiple_of(2) {
                        *acc += term;
                    } else {
                        *acc -= term;
                    }
                    walk(gens, k + 1, current, size + 1, d, n, acc);
                }
                *current = saved;
            }
        }
        let mut acc = BigInt::zero();
        let mut current = vec![0; self.n()];
        walk(&self.gens, 0, &mut current, 0, d, self.n(), &mut acc);
        debug_assert!(!acc.is_negative());
        acc.to_biguint().unwrap_or_default()
    }

    /// Direct enumeration of all degree-`d` monomials.
    pub fn hilbert_enumerate(&self, d: u32) -> BigUint {
        fn walk(gens: &[&[u32]], exps: &mut Vec<u32>, var: usize, left: u32, count: &mut u64) {
            let n = exps.len();
            if var + 1 == n {
                exps[var] = left;
                if gens.iter().any(|g| g.iter().zip(exps.iter()).all(|(a, b)| a <= b)) {
                    *count += 1;
                }
                exps[var] = 0;
                return;
            }
            for a in 0..=left {
                exps[var] = a;
                walk(gens, exps, var + 1, left - a, count);
            }
            exps[var] = 0;
        }
        let gens: Vec<&[u32]> = self.gens.iter().map(|g| &*g.exps).collect();
        let mut count = 0u64;
        let mut exps = vec![0; self.n()];
        walk(&gens, &mut exps, 0, d, &mut count);
        BigUint::from(count)
    }
}

/// `C(d + n - 1, n - 1)`, the number of monomials of degree `d` in `n` variables.
pub fn monomials_of_degree(n: usize, d: u32) -> BigUint {
    binomial(d as i64 + n as i64 - 1, n as i64 - 1)
}

fn minimal_antichain(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(canonical_cmp);
    gens.dedup_by(|a, b| a.exps == b.exps);
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        // kept generators have degree <= deg(g); equal-degree ones cannot divide g
        if !kept.iter().any(|k| k.degree() < g.degree() && k.divides(&g)) {
            kept.push(g);
        }
    }
    kept
}

pub fn minimalize<I: IntoIterator<Item = Monomial>>(gens: I) -> Result<MonomialIdeal> {
    MonomialIdeal::minimalize(gens)
}

pub fn power(ideal: &MonomialIdeal, s: u32) -> Result<MonomialIdeal> {
    ideal.power(s)
}

pub fn hilbert_function(ideal: &MonomialIdeal, d: u32, mode: HilbertMode) -> BigUint {
    ideal.hilbert_function(d, mode)
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// JSON form of an ideal: `{"n": 3, "weights": [1,1,1], "generators": [[1,1,0], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<u32>>,
    pub generators: Vec<Vec<u32>>,
}

impl From<&MonomialIdeal> for IdealJson {
    fn from(ideal: &MonomialIdeal) -> Self {
        IdealJson {
            n: ideal.n(),
            weights: (!ideal.ctx.is_standard()).then(|| ideal.ctx.weights.clone()),
            generators: ideal.gens.iter().map(|g| g.exps.to_vec()).collect(),
        }
    }
}

impl TryFrom<IdealJson> for MonomialIdeal {
    type Error = Error;

    fn try_from(json: IdealJson) -> Result<Self> {
        let ctx = match json.weights {
            Some(w) if w.len() != json.n => {
                return Err(Error::ArityMismatch {
                    expected: json.n,
                    got: w.len(),
                })
            }
            Some(w) => RingContext::weighted(w)?,
            None => RingContext::new(json.n)?,
        };
        MonomialIdeal::from_exponents(&ctx, json.generators)
    }
}

impl Serialize for MonomialIdeal {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        IdealJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for MonomialIdeal {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let json = IdealJson::deserialize(d)?;
        MonomialIdeal::try_from(json).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(n: usize) -> Arc<RingContext> {
        RingContext::new(n).unwrap()
    }

    fn mono(ctx: &Arc<RingContext>, e: &[u32]) -> Monomial {
        Monomial::new(ctx, e.to_vec()).unwrap()
    }

    /// Cover ideal of K_n written out directly: all products of n-1 distinct variables.
    fn complete_cover(n: usize) -> MonomialIdeal {
        let ctx = ring(n);
        MonomialIdeal::minimalize((0..n).map(|i| {
            Monomial::from_support(&ctx, (0..n).filter(|&j| j != i)).unwrap()
        }))
        .unwrap()
    }

    #[test]
    fn lcm_examples() {
        let r = ring(3);
        assert_eq!(lcm(&mono(&r, &[1, 1, 0]), &mono(&r, &[0, 1, 1])).unwrap(), mono(&r, &[1, 1, 1]));
        let u = mono(&r, &[2, 0, 5]);
        assert_eq!(lcm(&u, &Monomial::one(&r)).unwrap(), u);
        assert_eq!(lcm(&mono(&r, &[2, 0, 0]), &mono(&r, &[1, 1, 0])).unwrap(), mono(&r, &[2, 1, 0]));
    }

    #[test]
    fn colon_examples() {
        let r = ring(3);
        assert_eq!(colon(&mono(&r, &[1, 1, 0]), &mono(&r, &[0, 1, 1])).unwrap(), mono(&r, &[1, 0, 0]));
        let u = mono(&r, &[3, 1, 2]);
        assert!(colon(&u, &u).unwrap().is_one());
        assert_eq!(colon(&mono(&r, &[3, 1, 0]), &mono(&r, &[1, 0, 0])).unwrap(), mono(&r, &[2, 1, 0]));
    }

    #[test]
    fn context_mismatch_is_rejected() {
        let a = mono(&ring(2), &[1, 0]);
        let b = mono(&ring(3), &[1, 0, 0]);
        assert_eq!(lcm(&a, &b), Err(Error::ContextMismatch));
        assert_eq!(colon(&a, &b), Err(Error::ContextMismatch));
        let w = RingContext::weighted(vec![1, 2]).unwrap();
        let c = mono(&w, &[1, 0]);
        assert_eq!(a.mul(&c), Err(Error::ContextMismatch));
        assert!(Monomial::new(&ring(2), vec![1]).is_err());
    }

    #[test]
    fn invalid_contexts() {
        assert!(RingContext::new(0).is_err());
        assert!(RingContext::weighted(vec![1, 0]).is_err());
    }

    #[test]
    fn weighted_degree_examples() {
        let r = ring(2);
        assert_eq!(weighted_degree(&mono(&r, &[1, 2]), &r), 3);
        assert_eq!(weighted_degree(&Monomial::one(&r), &r), 0);
        let w = RingContext::weighted(vec![2, 3]).unwrap();
        assert_eq!(weighted_degree(&mono(&w, &[1, 1]), &w), 5);
    }

    #[test]
    fn complement_examples() {
        let r = ring(4);
        assert_eq!(
            complement_monomial(&mono(&r, &[1, 1, 0, 0])).unwrap(),
            mono(&r, &[0, 0, 1, 1])
        );
        assert!(complement_monomial(&Monomial::all_variables(&r)).unwrap().is_one());
        let r3 = ring(3);
        assert_eq!(complement_monomial(&mono(&r3, &[0, 1, 0])).unwrap(), mono(&r3, &[1, 0, 1]));
        assert!(matches!(
            complement_monomial(&mono(&r, &[2, 0, 0, 0])),
            Err(Error::NotSquarefree(_))
        ));
    }

    /// Every squarefree monomial in n variables.
    fn squarefree_all(ctx: &Arc<RingContext>) -> Vec<Monomial> {
        let n = ctx.n();
        (0u32..1 << n)
            .map(|m| Monomial::from_support(ctx, (0..n).filter(|i| m >> i & 1 == 1)).unwrap())
            .collect()
    }

    #[test]
    fn complement_is_involution_and_lcm_identity() {
        for n in 1..=5 {
            let r = ring(n);
            let all = squarefree_all(&r);
            for u in &all {
                let uc = complement_monomial(u).unwrap();
                assert_eq!(&complement_monomial(&uc).unwrap(), u);
                for v in &all {
                    let vc = complement_monomial(v).unwrap();
                    let lhs = uc.lcm(&vc).unwrap().div(&vc).unwrap();
                    let rhs = u.lcm(v).unwrap().div(u).unwrap();
                    assert_eq!(lhs, rhs, "u={u} v={v}");
                }
            }
        }
    }

    #[test]
    fn minimalize_examples() {
        let r = ring(3);
        let i = minimalize(vec![mono(&r, &[1, 0, 0]), mono(&r, &[1, 1, 0])]).unwrap();
        assert_eq!(i.generators(), &[mono(&r, &[1, 0, 0])]);
        let anti = vec![mono(&r, &[1, 1, 0]), mono(&r, &[0, 1, 1])];
        let i = minimalize(anti.clone()).unwrap();
        assert_eq!(i.len(), 2);
        assert_eq!(minimalize(i.generators().to_vec()).unwrap(), i);
        let i = minimalize(vec![mono(&r, &[1, 1, 0]), mono(&r, &[0, 1, 1]), mono(&r, &[1, 1, 1])]).unwrap();
        assert_eq!(i.generators(), &anti[..]);
        assert_eq!(minimalize(Vec::new()), Err(Error::EmptyGenerators));
    }

    #[test]
    fn canonical_order_is_revlex_within_degree() {
        let i = complete_cover(3);
        let r = i.context().clone();
        assert_eq!(
            i.generators(),
            &[mono(&r, &[1, 1, 0]), mono(&r, &[1, 0, 1]), mono(&r, &[0, 1, 1])]
        );
        let mixed = minimalize(vec![mono(&r, &[0, 2, 1]), mono(&r, &[0, 0, 1]), mono(&r, &[3, 0, 0])]).unwrap();
        assert_eq!(mixed.generators()[0], mono(&r, &[0, 0, 1]));
    }

    /// Brute force: all s-fold products with repetition, then remove non-minimal ones.
    fn power_brute(i: &MonomialIdeal, s: u32) -> Vec<Monomial> {
        let mut prods = vec![Monomial::one(i.context())];
        for _ in 0..s {
            prods = prods
                .iter()
                .flat_map(|p| i.generators().iter().map(move |g| p.mul(g).unwrap()))
                .collect();
        }
        let mut min: Vec<Monomial> = prods
            .iter()
            .filter(|p| !prods.iter().any(|q| q != *p && q.divides(p)))
            .cloned()
            .collect();
        min.sort_by(canonical_cmp);
        min.dedup();
        min
    }

    #[test]
    fn power_examples() {
        let j3 = complete_cover(3);
        let sq = j3.power(2).unwrap();
        assert_eq!(sq.len(), 6);
        assert_eq!(sq.generators(), &power_brute(&j3, 2)[..]);
        assert_eq!(j3.power(1).unwrap(), j3);
        let j4 = complete_cover(4);
        let cube = j4.power(3).unwrap();
        assert_eq!(cube.len(), 20);
        assert_eq!(cube.generators(), &power_brute(&j4, 3)[..]);
        assert!(j3.power(0).is_err());
    }

    #[test]
    fn complete_power_generator_counts() {
        for n in 2..=6 {
            let j = complete_cover(n);
            for s in 1..=5u32 {
                let p = j.power(s).unwrap();
                assert_eq!(
                    BigUint::from(p.len()),
                    binomial((n as u32 + s - 1) as i64, s as i64),
                    "n={n} s={s}"
                );
            }
        }
    }

    #[test]
    fn power_is_additive() {
        let r = ring(3);
        let i = minimalize(vec![mono(&r, &[2, 1, 0]), mono(&r, &[0, 1, 1]), mono(&r, &[1, 0, 3])]).unwrap();
        for a in 1..=3 {
            for b in 1..=3 {
                let lhs = i.power(a + b).unwrap();
                let rhs = i.power(a).unwrap().product(&i.power(b).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn hilbert_examples() {
        let r = ring(2);
        let i = minimalize(vec![mono(&r, &[1, 0])]).unwrap();
        assert_eq!(i.hilbert_function(2, HilbertMode::Ideal), BigUint::from(2u32));
        let j3 = complete_cover(3);
        assert_eq!(j3.hilbert_function(1, HilbertMode::Ideal), BigUint::zero());
        assert_eq!(j3.hilbert_function(2, HilbertMode::Ideal), BigUint::from(3u32));
        let zero = MonomialIdeal::zero(&r);
        assert_eq!(zero.hilbert_function(4, HilbertMode::Quotient), BigUint::from(5u32));
    }

    #[test]
    fn hilbert_routes_agree_and_complement() {
        for n in 2..=4 {
            let j = complete_cover(n);
            for s in 1..=3 {
                let p = j.power(s).unwrap();
                for d in 0..=(s * n as u32 + 2) {
                    let ie = p.hilbert_inclusion_exclusion(d);
                    let en = p.hilbert_enumerate(d);
                    assert_eq!(ie, en, "n={n} s={s} d={d}");
                    let total = p.hilbert_function(d, HilbertMode::Ideal) + p.hilbert_function(d, HilbertMode::Quotient);
                    assert_eq!(total, monomials_of_degree(n, d));
                }
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let j = complete_cover(4).power(2).unwrap();
        let s = serde_json::to_string(&j).unwrap();
        let back: MonomialIdeal = serde_json::from_str(&s).unwrap();
        assert_eq!(back, j);
        let m = mono(j.context(), &[1, 0, 2, 0]);
        assert_eq!(serde_json::to_string(&m).unwrap(), "[1,0,2,0]");
        let bad = r#"{"n":2,"generators":[[1,0,0]]}"#;
        assert!(serde_json::from_str::<MonomialIdeal>(bad).is_err());
    }
}
