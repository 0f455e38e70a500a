//! Simplicial complexes on bitmask vertex sets and their reduced homology.

use std::collections::HashMap;

use crate::combinat::subsets_of_size;

use super::field::FieldSpec;
use super::linalg::{rank, SignedRows};

/// The Stanley–Reisner complex of a squarefree ideal restricted to `vertices`:
/// `F ⊆ vertices` is a face iff no non-face (generator support) lies inside `F`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplexView {
    vertices: u64,
    nonfaces: Vec<u64>,
}

impl SimplicialComplexView {
    /// Keeps only the non-faces contained in `vertices`, and only the inclusion-minimal ones.
    pub fn new(vertices: u64, nonfaces: &[u64]) -> Self {
        let mut inside: Vec<u64> = nonfaces.iter().copied().filter(|&g| g & !vertices == 0).collect();
        inside.sort_by_key(|g| (g.count_ones(), *g));
        inside.dedup();
        let mut minimal: Vec<u64> = Vec::with_capacity(inside.len());
        for g in inside {
            if !minimal.iter().any(|&h| h & !g == 0) {
                minimal.push(g);
            }
        }
        Self {
            vertices,
            nonfaces: minimal,
        }
    }

    pub fn vertices(&self) -> u64 {
        self.vertices
    }

    pub fn nonfaces(&self) -> &[u64] {
        &self.nonfaces
    }

    pub fn is_face(&self, f: u64) -> bool {
        f & !self.vertices == 0 && !self.nonfaces.iter().any(|&g| g & !f == 0)
    }

    /// `{ τ ⊆ vertices : vertices \ τ is not a face }`, the Alexander dual taken inside `vertices`.
    pub fn is_dual_face(&self, t: u64) -> bool {
        let rest = self.vertices & !t;
        t & !self.vertices == 0 && self.nonfaces.iter().any(|&g| g & !rest == 0)
    }

    pub fn faces_of_size(&self, k: usize) -> Vec<u64> {
        subsets_of_size(self.vertices, k).filter(|&f| self.is_face(f)).collect()
    }

    pub fn reduced_homology(&self, d: i64, field: FieldSpec) -> usize {
        reduced_homology(self.vertices, |f| self.is_face(f), d, field)
    }

    pub fn dual_reduced_homology(&self, d: i64, field: FieldSpec) -> usize {
        reduced_homology(self.vertices, |f| self.is_dual_face(f), d, field)
    }

    /// Number of faces of the complex and of its dual in sizes `lo..=hi`.
    pub(crate) fn face_counts(&self, lo: usize, hi: usize) -> (usize, usize) {
        let mut primal = 0;
        let mut dual = 0;
        for k in lo..=hi {
            for f in subsets_of_size(self.vertices, k) {
                primal += self.is_face(f) as usize;
                dual += self.is_dual_face(f) as usize;
            }
        }
        (primal, dual)
    }
}

/// `dim H̃_d` of the complex `{ F ⊆ vertices : is_face(F) }` over `field`, using only
/// faces of dimensions `d - 1`, `d`, `d + 1`.
pub fn reduced_homology<P: Fn(u64) -> bool>(vertices: u64, is_face: P, d: i64, field: FieldSpec) -> usize {
    if d < -1 {
        return 0;
    }
    let k = (d + 1) as usize; // face size in dimension d
    let faces = |size: usize| -> Vec<u64> {
        if size == 0 {
            return if is_face(0) { vec![0] } else { vec![] };
        }
        subsets_of_size(vertices, size).filter(|&f| is_face(f)).collect()
    };
    let cur = faces(k);
    if cur.is_empty() {
        return 0;
    }
    let below = if k == 0 { Vec::new() } else { faces(k - 1) };
    let above = faces(k + 1);
    let rank_here = boundary_rank(&cur, &below, field);
    let rank_above = boundary_rank(&above, &cur, field);
    cur.len() - rank_here - rank_above
}

/// Rank of the simplicial boundary from faces `top` to faces `bottom` (one size smaller).
fn boundary_rank(top: &[u64], bottom: &[u64], field: FieldSpec) -> usize {
    if top.is_empty() || bottom.is_empty() {
        return 0;
    }
    let index: HashMap<u64, usize> = bottom.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let rows: SignedRows = top
        .iter()
        .map(|&f| {
            let mut row = Vec::with_capacity(f.count_ones() as usize);
            let mut rest = f;
            let mut pos = 0;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                rest ^= bit;
                if let Some(&c) = index.get(&(f ^ bit)) {
                    row.push((c, if pos % 2 == 0 { 1 } else { -1 }));
                }
                pos += 1;
            }
            row
        })
        .collect();
    // keep the dense matrix narrow
    if rows.len() < bottom.len() {
        rank(&rows, bottom.len(), field)
    } else {
        rank(&transpose(&rows, bottom.len()), rows.len(), field)
    }
}

fn transpose(rows: &SignedRows, ncols: usize) -> SignedRows {
    let mut out: SignedRows = vec![Vec::new(); ncols];
    for (r, row) in rows.iter().enumerate() {
        for &(c, s) in row {
            out[c].push((r, s));
        }
    }
    out
}

/// `dim H̃_d` of the complex on `vertices` with the given minimal non-faces.
pub fn homology_rank(vertices: u64, nonfaces: &[u64], d: i64, field: FieldSpec) -> usize {
    SimplicialComplexView::new(vertices, nonfaces).reduced_homology(d, field)
}
