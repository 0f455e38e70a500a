use std::sync::Arc;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal, RingContext};

/// Squarefree image of a monomial ideal: `x_i^a` becomes `y_{i,1} ... y_{i,a}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolarizedIdeal {
    original: Arc<RingContext>,
    /// `slots[i][e]` is the polarized index of `y_{i, e+1}`.
    slots: Vec<Vec<usize>>,
    ideal: MonomialIdeal,
}

impl PolarizedIdeal {
    pub fn original_context(&self) -> &Arc<RingContext> {
        &self.original
    }

    pub fn slot(&self, variable: usize, occurrence: usize) -> Option<usize> {
        self.slots.get(variable)?.get(occurrence).copied()
    }

    pub fn slots(&self) -> &[Vec<usize>] {
        &self.slots
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn vertex_count(&self) -> usize {
        self.slots.iter().map(Vec::len).sum()
    }

    /// Weight of each polarized variable, inherited from the variable it came from.
    pub fn slot_weights(&self) -> Vec<u32> {
        let w = self.original.weights();
        let mut out = vec![0; self.vertex_count()];
        for (i, slot) in self.slots.iter().enumerate() {
            for &k in slot {
                out[k] = w[i];
            }
        }
        out
    }

    /// Generator supports as bitmasks (requires at most 64 polarized variables).
    pub fn support_masks(&self) -> Result<Vec<u64>> {
        if self.vertex_count() > 64 {
            return Err(Error::InvalidParameter(format!(
                "{} polarized variables exceed the 64-bit vertex sets",
                self.vertex_count()
            )));
        }
        Ok(self.ideal.generators().iter().map(Monomial::support_mask).collect())
    }
}

pub fn polarize(ideal: &MonomialIdeal) -> PolarizedIdeal {
    let n = ideal.n();
    let original = ideal.context().clone();
    let mut max_exp = vec![0u32; n];
    for g in ideal.generators() {
        for (m, &a) in max_exp.iter_mut().zip(g.exponents()) {
            *m = (*m).max(a);
        }
    }
    let mut slots = Vec::with_capacity(n);
    let mut next = 0;
    for &m in &max_exp {
        slots.push((next..next + m as usize).collect::<Vec<_>>());
        next += m as usize;
    }
    let total = next;
    let weights: Vec<u32> = slots
        .iter()
        .enumerate()
        .flat_map(|(i, s)| std::iter::repeat_n(original.weights()[i], s.len()))
        .collect();
    // a ring needs at least one variable; the zero and unit ideals get a dummy one
    let ctx = if total == 0 {
        RingContext::new(1).expect("one variable")
    } else if original.is_standard() {
        RingContext::new(total).expect("positive variable count")
    } else {
        RingContext::weighted(weights).expect("weights are positive")
    };
    let ideal = if ideal.is_zero() {
        MonomialIdeal::zero(&ctx)
    } else {
        let gens = ideal.generators().iter().map(|g| {
            let mut e = vec![0u32; ctx.n()];
            for (i, &a) in g.exponents().iter().enumerate() {
                for &k in &slots[i][..a as usize] {
                    e[k] = 1;
                }
            }
            Monomial::new(&ctx, e).expect("arity matches")
        });
        MonomialIdeal::minimalize(gens).expect("non-empty generator list")
    };
    PolarizedIdeal { original, slots, ideal }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_of_variable() {
        let r = RingContext::new(1).unwrap();
        let i = MonomialIdeal::from_exponents(&r, vec![vec![2]]).unwrap();
        let p = polarize(&i);
        assert_eq!(p.vertex_count(), 2);
        assert_eq!(p.ideal().generators()[0].exponents(), &[1, 1]);
        assert_eq!(p.slot(0, 1), Some(1));
    }

    #[test]
    fn squarefree_is_unchanged() {
        let r = RingContext::new(3).unwrap();
        let i = MonomialIdeal::from_exponents(&r, vec![vec![1, 1, 0], vec![0, 1, 1]]).unwrap();
        let p = polarize(&i);
        assert_eq!(p.ideal().generators(), i.generators());
    }

    #[test]
    fn degrees_and_counts() {
        let r = RingContext::weighted(vec![1, 2, 3]).unwrap();
        let i = MonomialIdeal::from_exponents(&r, vec![vec![2, 1, 0], vec![0, 3, 1], vec![1, 0, 2]]).unwrap();
        let p = polarize(&i);
        assert_eq!(p.vertex_count(), 2 + 3 + 2);
        assert_eq!(p.slot_weights(), vec![1, 1, 2, 2, 2, 3, 3]);
        let mut a: Vec<u64> = i.generators().iter().map(Monomial::weighted_degree).collect();
        let mut b: Vec<u64> = p.ideal().generators().iter().map(Monomial::weighted_degree).collect();
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }
}
