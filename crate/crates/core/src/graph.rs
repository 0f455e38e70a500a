//! Simple graphs on vertices `1..=n`, their cover and edge ideals, and the
//! correspondence between graphs and squarefree ideals generated in degree `n - 2`.
//!
//! Vertex `i` corresponds to the variable with index `i - 1`.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal, RingContext};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

/// A minimal vertex cover, as a sorted list of 1-based vertices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct VertexCover(pub Vec<usize>);

impl SimpleGraph {
    pub fn new<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Result<Self> {
        if n > 64 {
            return Err(Error::GraphTooLarge(n));
        }
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b || a == 0 || b == 0 || a > n || b > n {
                return Err(Error::InvalidParameter(format!("bad edge {{{a},{b}}} for n = {n}")));
            }
            if !set.insert((a.min(b), a.max(b))) {
                return Err(Error::InvalidParameter(format!("repeated edge {{{a},{b}}}")));
            }
        }
        Ok(Self {
            n,
            edges: set.into_iter().collect(),
        })
    }

    pub(crate) fn from_adjacency(n: usize, adj: &[u64]) -> Self {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if adj[i] >> j & 1 == 1 {
                    edges.push((i + 1, j + 1));
                }
            }
        }
        Self { n, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges `(i, j)` with `i < j`, lexicographically sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.binary_search(&(a.min(b), a.max(b))).is_ok()
    }

    /// Neighbourhood bitmasks indexed by `vertex - 1`.
    pub fn adjacency(&self) -> Vec<u64> {
        let mut adj = vec![0u64; self.n];
        for &(a, b) in &self.edges {
            adj[a - 1] |= 1 << (b - 1);
            adj[b - 1] |= 1 << (a - 1);
        }
        adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn complement(&self) -> SimpleGraph {
        let mut edges = Vec::new();
        for i in 1..=self.n {
            for j in i + 1..=self.n {
                if !self.has_edge(i, j) {
                    edges.push((i, j));
                }
            }
        }
        SimpleGraph { n: self.n, edges }
    }

    pub fn edgeless(n: usize) -> Result<Self> {
        check_at_least("n", n, 1)?;
        Self::new(n, [])
    }

    pub fn complete(n: usize) -> Result<Self> {
        check_at_least("n", n, 1)?;
        Self::new(n, (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))))
    }

    pub fn cycle(len: usize) -> Result<Self> {
        check_at_least("cycle length", len, 3)?;
        Self::new(len, (1..=len).map(|i| (i, i % len + 1)))
    }

    pub fn path(n: usize) -> Result<Self> {
        check_at_least("n", n, 1)?;
        Self::new(n, (1..n).map(|i| (i, i + 1)))
    }

    /// Star with centre `1` and leaves `2..=n`.
    pub fn star(n: usize) -> Result<Self> {
        check_at_least("n", n, 1)?;
        Self::new(n, (2..=n).map(|i| (1, i)))
    }

    /// Complete multipartite graph with consecutive parts of the given sizes.
    pub fn complete_multipartite(parts: &[usize]) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::InvalidParameter(format!("part sizes {parts:?}")));
        }
        let mut part_of = Vec::new();
        for (p, &size) in parts.iter().enumerate() {
            part_of.extend(std::iter::repeat_n(p, size));
        }
        let n = part_of.len();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if part_of[i] != part_of[j] {
                    edges.push((i + 1, j + 1));
                }
            }
        }
        Self::new(n, edges)
    }

    /// Labelled tree on `len + 2` vertices from a Prüfer sequence with 1-based entries.
    pub fn from_prufer(seq: &[usize]) -> Result<Self> {
        let n = seq.len() + 2;
        if seq.iter().any(|&v| v == 0 || v > n) {
            return Err(Error::InvalidParameter(format!("Prüfer sequence {seq:?}")));
        }
        let mut degree = vec![1usize; n + 1];
        for &v in seq {
            degree[v] += 1;
        }
        let mut edges = Vec::with_capacity(n - 1);
        for &v in seq {
            let leaf = (1..=n).find(|&u| degree[u] == 1).expect("a leaf always exists");
            edges.push((leaf, v));
            degree[leaf] -= 1;
            degree[v] -= 1;
        }
        let rest: Vec<usize> = (1..=n).filter(|&u| degree[u] == 1).collect();
        edges.push((rest[0], rest[1]));
        Self::new(n, edges)
    }

    /// Connected components as vertex bitmasks (bit `i - 1` for vertex `i`), ordered by least vertex.
    pub fn components(&self) -> Vec<u64> {
        let adj = self.adjacency();
        let mut seen = 0u64;
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen >> start & 1 == 1 {
                continue;
            }
            let mut comp = 1u64 << start;
            let mut frontier = comp;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = adj[v] & !comp;
                comp |= fresh;
                frontier |= fresh;
            }
            seen |= comp;
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    pub fn has_triangle(&self) -> bool {
        let adj = self.adjacency();
        self.edges
            .iter()
            .any(|&(a, b)| adj[a - 1] & adj[b - 1] != 0)
    }

    /// True when some 4-cycle exists as a (not necessarily induced) subgraph.
    pub fn has_four_cycle(&self) -> bool {
        let adj = self.adjacency();
        (0..self.n).any(|a| (a + 1..self.n).any(|b| (adj[a] & adj[b]).count_ones() >= 2))
    }

    /// All minimal vertex covers, i.e. complements of maximal independent sets,
    /// sorted lexicographically.
    pub fn minimal_vertex_covers(&self) -> Vec<VertexCover> {
        let all = if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 };
        let adj = self.adjacency();
        // maximal independent sets of G are maximal cliques of the complement
        let co: Vec<u64> = (0..self.n).map(|v| all & !adj[v] & !(1 << v)).collect();
        let mut out = Vec::new();
        bron_kerbosch(&co, 0, all, 0, &mut out);
        let mut covers: Vec<VertexCover> = out
            .into_iter()
            .map(|indep| VertexCover(mask_to_vertices(all & !indep)))
            .collect();
        covers.sort();
        covers
    }

    fn ring(&self) -> Result<Arc<RingContext>> {
        RingContext::new(self.n)
    }

    /// `J(G)`: generated by `X_C` over minimal vertex covers `C`.
    pub fn cover_ideal(&self) -> Result<MonomialIdeal> {
        let ctx = self.ring()?;
        let gens = self
            .minimal_vertex_covers()
            .into_iter()
            .map(|c| Monomial::from_support(&ctx, c.0.iter().map(|v| v - 1)))
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::minimalize(gens)
    }

    /// `I(G)`: one generator `x_i x_j` per edge; the zero ideal for an edgeless graph.
    pub fn edge_ideal(&self) -> Result<MonomialIdeal> {
        let ctx = self.ring()?;
        if self.edges.is_empty() {
            return Ok(MonomialIdeal::zero(&ctx));
        }
        let gens = self
            .edges
            .iter()
            .map(|&(a, b)| Monomial::from_support(&ctx, [a - 1, b - 1]))
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::minimalize(gens)
    }

    /// The squarefree ideal generated by `X_{[n] \ e}` over edges `e`, in degree `n - 2`.
    pub fn ideal_from_graph(&self) -> Result<MonomialIdeal> {
        if self.n < 3 {
            return Err(Error::InvalidParameter("ideal_from_graph needs n >= 3".into()));
        }
        if self.edges.is_empty() {
            return Err(Error::InvalidParameter("ideal_from_graph needs at least one edge".into()));
        }
        let ctx = self.ring()?;
        let gens = self
            .edges
            .iter()
            .map(|&(a, b)| Monomial::from_support(&ctx, (0..self.n).filter(|&v| v != a - 1 && v != b - 1)))
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::minimalize(gens)
    }

    /// When every maximal clique of `G` is an edge (triangle-free, no isolated vertices),
    /// the cover ideal of the complement coincides with [`ideal_from_graph`](Self::ideal_from_graph).
    pub fn maximal_cliques_are_edges(&self) -> bool {
        !self.has_triangle() && (1..=self.n).all(|v| self.degree(v) > 0)
    }

    /// Part sizes, ascending, when the graph is complete multipartite (its complement is a
    /// disjoint union of cliques).
    pub fn multipartite_parts(&self) -> Option<Vec<usize>> {
        let co = self.complement();
        let adj = co.adjacency();
        let mut parts = Vec::new();
        for c in co.components() {
            let size = c.count_ones() as usize;
            let mut rest = c;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if (adj[v] & c).count_ones() as usize != size - 1 {
                    return None;
                }
            }
            parts.push(size);
        }
        parts.sort_unstable();
        Some(parts)
    }

    pub fn structure(&self) -> GraphStructure {
        let comps = self.components();
        let adj = self.adjacency();
        let mut per_component = Vec::with_capacity(comps.len());
        for &c in &comps {
            let vertices = c.count_ones() as usize;
            let edges = self
                .edges
                .iter()
                .filter(|&&(a, _)| c >> (a - 1) & 1 == 1)
                .count();
            let cyclomatic = edges + 1 - vertices;
            let cycle_len = (cyclomatic == 1).then(|| unique_cycle_length(&adj, c));
            per_component.push((cyclomatic, cycle_len));
        }
        let cyclomatic_number = self.edges.len() + comps.len() - self.n;
        let is_connected = comps.len() <= 1;
        let unique_cycle_length = if is_connected && cyclomatic_number == 1 {
            per_component[0].1
        } else {
            None
        };
        let componentwise_linear_type = per_component
            .iter()
            .all(|&(c, len)| c == 0 || (c == 1 && len.is_some_and(|l| l % 2 == 1)));
        GraphStructure {
            is_forest: cyclomatic_number == 0,
            is_connected,
            components: comps.len(),
            cyclomatic_number,
            odd_unicyclic: unique_cycle_length.is_some_and(|l| l % 2 == 1),
            unique_cycle_length,
            componentwise_linear_type,
        }
    }

    /// Edge order `e_1, ..., e_r` in which the first `n - 1` edges form a spanning tree
    /// grown from a leaf edge, each meeting an earlier one, followed by the remaining
    /// edges in canonical order.
    pub fn shelling_edge_order(&self) -> Result<Vec<(usize, usize)>> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        if self.edges.is_empty() {
            return Ok(Vec::new());
        }
        // BFS spanning tree rooted at vertex 1
        let adj = self.adjacency();
        let mut parent = vec![usize::MAX; self.n];
        let mut order = vec![0usize];
        parent[0] = 0;
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            let mut nb = adj[v];
            while nb != 0 {
                let u = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                if parent[u] == usize::MAX {
                    parent[u] = v;
                    order.push(u);
                }
            }
        }
        let tree: Vec<(usize, usize)> = (1..self.n)
            .map(|u| (u.min(parent[u]) + 1, u.max(parent[u]) + 1))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let tree_degree = |v: usize| tree.iter().filter(|&&(a, b)| a == v || b == v).count();
        let first = *tree
            .iter()
            .find(|&&(a, b)| tree_degree(a) == 1 || tree_degree(b) == 1)
            .expect("a tree with an edge has a leaf");
        let mut chosen = vec![first];
        let mut covered = (1u64 << (first.0 - 1)) | (1u64 << (first.1 - 1));
        let mut used = vec![false; tree.len()];
        used[tree.iter().position(|&e| e == first).unwrap()] = true;
        while chosen.len() < tree.len() {
            let k = (0..tree.len())
                .find(|&k| {
                    let (a, b) = tree[k];
                    !used[k] && (covered >> (a - 1) & 1 == 1 || covered >> (b - 1) & 1 == 1)
                })
                .expect("tree edges stay connected to the covered set");
            used[k] = true;
            chosen.push(tree[k]);
            covered |= (1u64 << (tree[k].0 - 1)) | (1u64 << (tree[k].1 - 1));
        }
        chosen.extend(self.edges.iter().filter(|e| !tree.contains(e)));
        Ok(chosen)
    }
}

fn check_at_least(what: &str, value: usize, min: usize) -> Result<()> {
    if value < min {
        Err(Error::InvalidParameter(format!("{what} = {value}, need at least {min}")))
    } else {
        Ok(())
    }
}

fn mask_to_vertices(mut m: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(m.count_ones() as usize);
    while m != 0 {
        out.push(m.trailing_zeros() as usize + 1);
        m &= m - 1;
    }
    out
}

/// Bron-Kerbosch with pivoting; `adj` is the graph whose maximal cliques we list.
fn bron_kerbosch(adj: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
    if p == 0 {
        if x == 0 {
            out.push(r);
        }
        return;
    }
    let px = p | x;
    let pivot = (0..adj.len())
        .filter(|&u| px >> u & 1 == 1)
        .max_by_key(|&u| (adj[u] & p).count_ones())
        .unwrap();
    let mut candidates = p & !adj[pivot];
    while candidates != 0 {
        let v = candidates.trailing_zeros() as usize;
        candidates &= candidates - 1;
        bron_kerbosch(adj, r | 1 << v, p & adj[v], x & adj[v], out);
        p &= !(1 << v);
        x |= 1 << v;
    }
}

/// Cycle length of a unicyclic component: strip leaves until only the cycle is left.
fn unique_cycle_length(adj: &[u64], comp: u64) -> usize {
    let mut alive = comp;
    loop {
        let leaf = (0..adj.len()).find(|&v| alive >> v & 1 == 1 && (adj[v] & alive).count_ones() <= 1);
        match leaf {
            Some(v) => alive &= !(1 << v),
            None => return alive.count_ones() as usize,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphStructure {
    pub is_forest: bool,
    pub is_connected: bool,
    pub components: usize,
    /// `|E| - n + #components`.
    pub cyclomatic_number: usize,
    /// Connected with exactly one cycle, of odd length.
    pub odd_unicyclic: bool,
    /// Length of the cycle when the graph is connected and unicyclic.
    pub unique_cycle_length: Option<usize>,
    /// Every component is a tree or an odd-unicyclic graph.
    pub componentwise_linear_type: bool,
}

/// `G_J` for a squarefree ideal generated in degree `n - 2`: one edge per generator,
/// given by the two variables missing from its support.
pub fn graph_from_ideal(ideal: &MonomialIdeal) -> Result<SimpleGraph> {
    let n = ideal.n();
    if n < 2 {
        return Err(Error::InvalidParameter("graph_from_ideal needs n >= 2".into()));
    }
    let mut edges = Vec::with_capacity(ideal.len());
    for g in ideal.generators() {
        if !g.is_squarefree() {
            return Err(Error::NotSquarefree(g.clone()));
        }
        if g.degree() as usize != n - 2 {
            return Err(Error::WrongDegree {
                generator: g.clone(),
                degree: g.degree(),
                expected: n as u32 - 2,
            });
        }
        let missing: Vec<usize> = (0..n).filter(|&i| g.exponent(i) == 0).collect();
        edges.push((missing[0] + 1, missing[1] + 1));
    }
    SimpleGraph::new(n, edges)
}

pub fn ideal_from_graph(g: &SimpleGraph) -> Result<MonomialIdeal> {
    g.ideal_from_graph()
}

impl fmt::Display for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G(n={}; ", self.n)?;
        for (k, (a, b)) in self.edges.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{a}-{b}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `{"n": 4, "edges": [[1,2],[2,3]]}` with 1-based labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl Serialize for SimpleGraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphJson {
            n: self.n,
            edges: self.edges.iter().map(|&(a, b)| [a, b]).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SimpleGraph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let json = GraphJson::deserialize(d)?;
        SimpleGraph::new(json.n, json.edges.into_iter().map(|[a, b]| (a, b))).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::Monomial;

    fn g(n: usize, edges: &[(usize, usize)]) -> SimpleGraph {
        SimpleGraph::new(n, edges.iter().copied()).unwrap()
    }

    fn supports(i: &MonomialIdeal) -> Vec<Vec<usize>> {
        let mut v: Vec<Vec<usize>> = i
            .generators()
            .iter()
            .map(|m| m.support().iter().map(|x| x + 1).collect())
            .collect();
        v.sort();
        v
    }

    #[test]
    fn multipartite_recognition() {
        let g = SimpleGraph::complete_multipartite(&[3, 1, 2]).unwrap();
        assert_eq!(g.multipartite_parts(), Some(vec![1, 2, 3]));
        assert_eq!(SimpleGraph::complete(4).unwrap().multipartite_parts(), Some(vec![1, 1, 1, 1]));
        assert_eq!(SimpleGraph::cycle(4).unwrap().multipartite_parts(), Some(vec![2, 2]));
        assert_eq!(SimpleGraph::path(4).unwrap().multipartite_parts(), None);
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(SimpleGraph::new(3, [(1, 1)]).is_err());
        assert!(SimpleGraph::new(3, [(1, 4)]).is_err());
        assert!(SimpleGraph::new(3, [(1, 2), (2, 1)]).is_err());
        assert!(SimpleGraph::cycle(2).is_err());
        assert!(SimpleGraph::complete_multipartite(&[2, 0]).is_err());
    }

    #[test]
    fn complement_examples() {
        for n in 1..6 {
            assert_eq!(SimpleGraph::complete(n).unwrap().complement(), SimpleGraph::edgeless(n).unwrap());
        }
        let c4 = SimpleGraph::cycle(4).unwrap();
        assert_eq!(c4.complement(), g(4, &[(1, 3), (2, 4)]));
        let p = SimpleGraph::path(5).unwrap();
        assert_eq!(p.complement().complement(), p);
    }

    #[test]
    fn builders() {
        assert_eq!(SimpleGraph::complete_multipartite(&[1, 1, 1]).unwrap(), SimpleGraph::complete(3).unwrap());
        assert_eq!(SimpleGraph::cycle(3).unwrap(), SimpleGraph::complete(3).unwrap());
        let k23 = SimpleGraph::complete_multipartite(&[2, 3]).unwrap();
        assert_eq!(k23.edge_count(), 6);
        assert!(!k23.has_edge(1, 2) && !k23.has_edge(3, 5) && k23.has_edge(2, 3));
        assert_eq!(SimpleGraph::star(4).unwrap(), g(4, &[(1, 2), (1, 3), (1, 4)]));
        assert_eq!(SimpleGraph::from_prufer(&[4, 4]).unwrap(), SimpleGraph::star(4).unwrap().relabel_center(4));
    }

    impl SimpleGraph {
        fn relabel_center(&self, c: usize) -> SimpleGraph {
            let swap = |v: usize| if v == 1 { c } else if v == c { 1 } else { v };
            SimpleGraph::new(self.n, self.edges.iter().map(|&(a, b)| (swap(a), swap(b)))).unwrap()
        }
    }

    #[test]
    fn covers_of_examples() {
        let c4 = SimpleGraph::cycle(4).unwrap();
        assert_eq!(
            c4.minimal_vertex_covers(),
            vec![VertexCover(vec![1, 3]), VertexCover(vec![2, 4])]
        );
        for n in 2..7 {
            let covers = SimpleGraph::complete(n).unwrap().minimal_vertex_covers();
            assert_eq!(covers.len(), n);
            for i in 1..=n {
                let expect: Vec<usize> = (1..=n).filter(|&v| v != i).collect();
                assert!(covers.contains(&VertexCover(expect)));
            }
        }
        assert_eq!(SimpleGraph::edgeless(3).unwrap().minimal_vertex_covers(), vec![VertexCover(vec![])]);
    }

    #[test]
    fn cover_ideal_examples() {
        let c4 = SimpleGraph::cycle(4).unwrap();
        assert_eq!(supports(&c4.cover_ideal().unwrap()), vec![vec![1, 3], vec![2, 4]]);
        let k3 = SimpleGraph::complete(3).unwrap();
        assert_eq!(supports(&k3.cover_ideal().unwrap()), vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
        let unit = SimpleGraph::edgeless(3).unwrap().cover_ideal().unwrap();
        assert_eq!(unit.len(), 1);
        assert!(unit.generators()[0].is_one());
    }

    #[test]
    fn edge_ideal_examples() {
        assert_eq!(supports(&g(2, &[(1, 2)]).edge_ideal().unwrap()), vec![vec![1, 2]]);
        let c4 = SimpleGraph::cycle(4).unwrap();
        assert_eq!(
            supports(&c4.edge_ideal().unwrap()),
            vec![vec![1, 2], vec![1, 4], vec![2, 3], vec![3, 4]]
        );
        assert!(SimpleGraph::edgeless(4).unwrap().edge_ideal().unwrap().is_zero());
    }

    /// Independent enumeration of minimal covers over all 2^n subsets.
    fn covers_brute(graph: &SimpleGraph) -> Vec<VertexCover> {
        let n = graph.n();
        let is_cover = |m: u32| graph.edges().iter().all(|&(a, b)| m >> (a - 1) & 1 == 1 || m >> (b - 1) & 1 == 1);
        let mut out: Vec<VertexCover> = (0u32..1 << n)
            .filter(|&m| is_cover(m) && (0..n).all(|v| m >> v & 1 == 0 || !is_cover(m & !(1 << v))))
            .map(|m| VertexCover((0..n).filter(|v| m >> v & 1 == 1).map(|v| v + 1).collect()))
            .collect();
        out.sort();
        out
    }

    #[test]
    fn covers_match_brute_force_small_graphs() {
        for n in 1..=5usize {
            let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
            for mask in 0u32..1 << pairs.len() {
                let graph = g(n, &pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e).collect::<Vec<_>>());
                assert_eq!(graph.minimal_vertex_covers(), covers_brute(&graph), "{graph}");
            }
        }
    }

    #[test]
    fn graph_ideal_examples() {
        let ctx = RingContext::new(4).unwrap();
        let j = MonomialIdeal::minimalize(
            [[0, 0, 1, 1], [1, 0, 0, 1], [1, 1, 0, 0], [0, 1, 1, 0]]
                .iter()
                .map(|e| Monomial::new(&ctx, e.to_vec()).unwrap()),
        )
        .unwrap();
        assert_eq!(graph_from_ideal(&j).unwrap(), SimpleGraph::cycle(4).unwrap());

        let ctx3 = RingContext::new(3).unwrap();
        let single = MonomialIdeal::minimalize([Monomial::var(&ctx3, 2)]).unwrap();
        assert_eq!(graph_from_ideal(&single).unwrap(), g(3, &[(1, 2)]));

        let path = SimpleGraph::path(3).unwrap();
        assert_eq!(supports(&path.ideal_from_graph().unwrap()), vec![vec![1], vec![3]]);

        let one_edge = g(4, &[(2, 3)]).ideal_from_graph().unwrap();
        assert_eq!(one_edge.len(), 1);
        assert_eq!(one_edge.generators()[0].degree(), 2);

        assert!(SimpleGraph::complete(2).unwrap().ideal_from_graph().is_err());
        let bad = MonomialIdeal::minimalize([Monomial::var(&ctx, 0)]).unwrap();
        assert!(matches!(graph_from_ideal(&bad), Err(Error::WrongDegree { .. })));
    }

    #[test]
    fn complete_graph_ideal_is_squarefree_veronese() {
        for n in 3..7 {
            let k = SimpleGraph::complete(n).unwrap();
            let j = k.ideal_from_graph().unwrap();
            assert_eq!(j.len(), n * (n - 1) / 2);
            assert!(j.generators().iter().all(|u| u.is_squarefree() && u.degree() as usize == n - 2));
            assert!(!k.maximal_cliques_are_edges());
        }
    }

    #[test]
    fn cover_of_complement_matches_when_cliques_are_edges() {
        for graph in [
            SimpleGraph::path(3).unwrap(),
            SimpleGraph::cycle(5).unwrap(),
            SimpleGraph::cycle(7).unwrap(),
            SimpleGraph::star(6).unwrap(),
            SimpleGraph::complete_multipartite(&[2, 3]).unwrap(),
        ] {
            assert!(graph.maximal_cliques_are_edges());
            assert_eq!(graph.complement().cover_ideal().unwrap(), graph.ideal_from_graph().unwrap(), "{graph}");
        }
    }

    #[test]
    fn structure_examples() {
        let tree = SimpleGraph::from_prufer(&[3, 3, 5]).unwrap();
        let st = tree.structure();
        assert!(st.is_forest && st.is_connected && st.cyclomatic_number == 0);
        let c5 = SimpleGraph::cycle(5).unwrap().structure();
        assert!(c5.odd_unicyclic && c5.unique_cycle_length == Some(5));
        let c4 = SimpleGraph::cycle(4).unwrap().structure();
        assert!(!c4.odd_unicyclic && c4.cyclomatic_number == 1 && c4.unique_cycle_length == Some(4));
        let two_triangles = g(6, &[(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)]).structure();
        assert!(!two_triangles.is_connected && two_triangles.componentwise_linear_type);
        assert!(!two_triangles.odd_unicyclic);
        let tail = g(7, &[(1, 2), (2, 3), (3, 4), (4, 5), (1, 5), (5, 6), (6, 7)]).structure();
        assert!(tail.odd_unicyclic && tail.unique_cycle_length == Some(5));
        let k4 = SimpleGraph::complete(4).unwrap().structure();
        assert_eq!(k4.cyclomatic_number, 3);
        assert!(!k4.componentwise_linear_type);
    }

    fn assert_shelling(graph: &SimpleGraph) {
        let order = graph.shelling_edge_order().unwrap();
        let n = graph.n();
        assert_eq!(order.len(), graph.edge_count());
        let mut sorted = order.clone();
        sorted.sort();
        assert_eq!(sorted, graph.edges());
        let (a, b) = order[0];
        let tree: Vec<_> = order[..n - 1].to_vec();
        let tdeg = |v: usize| tree.iter().filter(|&&(x, y)| x == v || y == v).count();
        assert!(tdeg(a) == 1 || tdeg(b) == 1, "first edge must hang off a leaf");
        for i in 1..n - 1 {
            let (x, y) = order[i];
            let touching: usize = [x, y]
                .iter()
                .filter(|&&v| order[..i].iter().any(|&(p, q)| p == v || q == v))
                .count();
            assert_eq!(touching, 1, "tree edge {i} must meet earlier edges in exactly one vertex");
        }
    }

    #[test]
    fn shelling_orders() {
        assert_shelling(&SimpleGraph::star(6).unwrap());
        let c4 = SimpleGraph::cycle(4).unwrap();
        assert_shelling(&c4);
        let order = c4.shelling_edge_order().unwrap();
        let path = g(4, &order[..3]);
        assert!(path.is_connected() && path.structure().is_forest);
        for seq in [[1, 1, 1], [2, 3, 4], [5, 5, 2], [3, 1, 3]] {
            assert_shelling(&SimpleGraph::from_prufer(&seq).unwrap());
        }
        assert_shelling(&SimpleGraph::complete(5).unwrap());
        assert_eq!(
            g(4, &[(1, 2), (3, 4)]).shelling_edge_order(),
            Err(Error::Disconnected)
        );
    }

    #[test]
    fn json_format() {
        let c4 = SimpleGraph::cycle(4).unwrap();
        let s = serde_json::to_string(&c4).unwrap();
        assert_eq!(s, r#"{"n":4,"edges":[[1,2],[1,4],[2,3],[3,4]]}"#);
        let back: SimpleGraph = serde_json::from_str(&s).unwrap();
        assert_eq!(back, c4);
        assert!(serde_json::from_str::<SimpleGraph>(r#"{"n":2,"edges":[[1,3]]}"#).is_err());
    }
}
