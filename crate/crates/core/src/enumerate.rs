//! Enumeration of small graphs: trees from Prüfer sequences, graphs up to
//! isomorphism by vertex extension, all labelled connected graphs, and seeded
//! random connected graphs for sweeps.

use std::collections::{BTreeMap, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// Largest vertex count accepted by the brute-force canonical form.
pub const MAX_CANONICAL_VERTICES: usize = 10;

/// AHU encoding of a tree rooted at `root`.
fn ahu(adj: &[u64], v: usize, parent: usize) -> String {
    let mut children: Vec<String> = Vec::new();
    let mut nb = adj[v];
    while nb != 0 {
        let u = nb.trailing_zeros() as usize;
        nb &= nb - 1;
        if u != parent {
            children.push(ahu(adj, u, v));
        }
    }
    children.sort();
    let mut s = String::with_capacity(2 + children.iter().map(String::len).sum::<usize>());
    s.push('(');
    for c in children {
        s.push_str(&c);
    }
    s.push(')');
    s
}

/// Canonical string of a tree: AHU code rooted at the centre (the smaller code
/// of the two centres when the centre is an edge).
pub fn tree_canonical_form(tree: &SimpleGraph) -> Result<String> {
    let st = tree.structure();
    if !(st.is_forest && st.is_connected) {
        return Err(Error::InvalidParameter(format!("{tree} is not a tree")));
    }
    let n = tree.n();
    let adj = tree.adjacency();
    if n <= 2 {
        return Ok(format!("n{n}"));
    }
    // peel leaves layer by layer until one or two centres remain
    let mut alive: u64 = if n == 64 { u64::MAX } else { (1 << n) - 1 };
    while alive.count_ones() > 2 {
        let leaves: u64 = (0..n)
            .filter(|&v| alive >> v & 1 == 1 && (adj[v] & alive).count_ones() <= 1)
            .fold(0, |m, v| m | 1 << v);
        alive &= !leaves;
    }
    let centres: Vec<usize> = (0..n).filter(|&v| alive >> v & 1 == 1).collect();
    let code = centres
        .iter()
        .map(|&c| ahu(&adj, c, usize::MAX))
        .min()
        .unwrap();
    Ok(code)
}

/// All labelled trees on `n >= 2` vertices, one per Prüfer sequence.
pub fn labelled_trees(n: usize) -> impl Iterator<Item = SimpleGraph> {
    let len = n.saturating_sub(2);
    let total = (n as u64).pow(len as u32);
    (0..total).map(move |mut code| {
        let mut seq = vec![0; len];
        for x in seq.iter_mut() {
            *x = (code % n as u64) as usize + 1;
            code /= n as u64;
        }
        SimpleGraph::from_prufer(&seq).expect("valid Prüfer sequence")
    })
}

/// One representative per isomorphism class of trees on `n` vertices, sorted by
/// canonical form. Built by deduplicating all Prüfer sequences.
pub fn trees_up_to_isomorphism(n: usize) -> Vec<SimpleGraph> {
    match n {
        0 => return Vec::new(),
        1 => return vec![SimpleGraph::edgeless(1).unwrap()],
        _ => {}
    }
    let mut reps: BTreeMap<String, SimpleGraph> = BTreeMap::new();
    for t in labelled_trees(n) {
        let code = tree_canonical_form(&t).unwrap();
        reps.entry(code).or_insert(t);
    }
    reps.into_values().collect()
}

fn pair_index(i: usize, j: usize, n: usize) -> usize {
    // position of (i, j), i < j, in the row-major upper triangle
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

fn encode(n: usize, adj: &[u64], label: &[usize]) -> u64 {
    let mut code = 0u64;
    for i in 0..n {
        let mut nb = adj[i] >> (i + 1) << (i + 1);
        while nb != 0 {
            let j = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            let (a, b) = (label[i].min(label[j]), label[i].max(label[j]));
            code |= 1 << pair_index(a, b, n);
        }
    }
    code
}

/// Colour refinement; returns an isomorphism-invariant colour per vertex.
fn refine(n: usize, adj: &[u64]) -> Vec<usize> {
    let mut colour: Vec<usize> = (0..n).map(|v| adj[v].count_ones() as usize).collect();
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nbc: Vec<usize> = (0..n).filter(|&u| adj[v] >> u & 1 == 1).map(|u| colour[u]).collect();
                nbc.sort_unstable();
                (colour[v], nbc)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sigs.iter().map(|s| distinct.binary_search(s).unwrap()).collect();
        let before = colour.iter().collect::<HashSet<_>>().len();
        let after = distinct.len();
        colour = next;
        if after == before {
            return colour;
        }
    }
}

/// Canonical adjacency code: the minimum edge-bit encoding over all labellings that
/// respect the refined colour classes. Graphs are isomorphic iff codes (and `n`) agree.
pub fn canonical_code(graph: &SimpleGraph) -> Result<u64> {
    let n = graph.n();
    if n > MAX_CANONICAL_VERTICES {
        return Err(Error::GraphTooLarge(n));
    }
    let adj = graph.adjacency();
    let colour = refine(n, &adj);
    let mut cells: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        cells.entry(colour[v]).or_default().push(v);
    }
    let cells: Vec<Vec<usize>> = cells.into_values().collect();
    let mut label = vec![0usize; n];
    let mut best = u64::MAX;
    assign(&cells, 0, 0, &mut label, &mut vec![false; n], &adj, n, &mut best);
    Ok(best)
}

#[allow(clippy::too_many_arguments)]
fn assign(
    cells: &[Vec<usize>],
    cell: usize,
    next_label: usize,
    label: &mut Vec<usize>,
    used: &mut Vec<bool>,
    adj: &[u64],
    n: usize,
    best: &mut u64,
) {
    if cell == cells.len() {
        *best = (*best).min(encode(n, adj, label));
        return;
    }
    let members = &cells[cell];
    let placed = members.iter().filter(|&&v| used[v]).count();
    if placed == members.len() {
        assign(cells, cell + 1, next_label, label, used, adj, n, best);
        return;
    }
    for &v in members {
        if !used[v] {
            used[v] = true;
            label[v] = next_label;
            assign(cells, cell, next_label + 1, label, used, adj, n, best);
            used[v] = false;
        }
    }
}

fn from_code(n: usize, code: u64) -> SimpleGraph {
    let mut adj = vec![0u64; n];
    for i in 0..n {
        for j in i + 1..n {
            if code >> pair_index(i, j, n) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
    }
    SimpleGraph::from_adjacency(n, &adj)
}

/// All graphs on `n` vertices up to isomorphism, each in its canonical labelling,
/// sorted by canonical code.
pub fn graphs_up_to_isomorphism(n: usize) -> Result<Vec<SimpleGraph>> {
    if n > MAX_CANONICAL_VERTICES {
        return Err(Error::GraphTooLarge(n));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut layer: Vec<SimpleGraph> = vec![SimpleGraph::edgeless(1)?];
    for m in 2..=n {
        let mut codes: HashSet<u64> = HashSet::new();
        for g in &layer {
            let base = g.adjacency();
            for nb in 0u64..1 << (m - 1) {
                let mut adj = base.clone();
                adj.push(nb);
                for (v, a) in adj.iter_mut().enumerate().take(m - 1) {
                    if nb >> v & 1 == 1 {
                        *a |= 1 << (m - 1);
                    }
                }
                codes.insert(canonical_code(&SimpleGraph::from_adjacency(m, &adj))?);
            }
        }
        let mut sorted: Vec<u64> = codes.into_iter().collect();
        sorted.sort_unstable();
        layer = sorted.into_iter().map(|c| from_code(m, c)).collect();
    }
    Ok(layer)
}

pub fn connected_graphs_up_to_isomorphism(n: usize) -> Result<Vec<SimpleGraph>> {
    Ok(graphs_up_to_isomorphism(n)?
        .into_iter()
        .filter(SimpleGraph::is_connected)
        .collect())
}

/// Every labelled connected graph on `n` vertices (exponential; meant for `n <= 6`).
pub fn labelled_connected_graphs(n: usize) -> Vec<SimpleGraph> {
    let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            SimpleGraph::new(
                n,
                pairs
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, &e)| e),
            )
            .unwrap()
        })
        .filter(SimpleGraph::is_connected)
        .collect()
}

/// `count` random connected graphs on `n` vertices: each pair is an edge with
/// probability 1/2, resampled until connected. Deterministic for a given seed.
pub fn random_connected_graphs(n: usize, count: usize, seed: u64) -> Vec<SimpleGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let mut edges = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                if rng.gen_bool(0.5) {
                    edges.push((i, j));
                }
            }
        }
        let g = SimpleGraph::new(n, edges).unwrap();
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}

/// A uniformly random labelled tree on `n >= 2` vertices, from a seeded Prüfer sequence.
pub fn random_tree(n: usize, seed: u64) -> Result<SimpleGraph> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("random trees need n >= 2, got {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(1..=n)).collect();
    SimpleGraph::from_prufer(&seq)
}
