//! Undirected weighted graphs with contiguous integer vertex ids.
//!
//! Vertex ids are 0-based and run over exactly `0..n`. Graphs are immutable
//! after construction, hold no self-loops or duplicate edges, and keep all
//! weights strictly positive. Adjacency is stored twice: sorted neighbor
//! lists for O(degree) iteration in a deterministic order, and a hash table
//! for O(1) edge lookup.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use hashbrown::HashMap;
#[allow(unused_imports)] use num_traits::Float; // float math in no_std builds

use crate::error::{Error, Result};
use crate::matrix::Matrix;

/// Immutable undirected weighted graph.
#[derive(Debug, Clone, PartialEq)]
pub struct Graph {
    n: usize,
    m: usize,
    /// Sorted `(neighbor, weight)` lists, mirrored for both endpoints.
    adj: Vec<Vec<(u32, f64)>>,
    /// Packed `(min << 32) | max` edge keys. Probed only, never iterated.
    lookup: HashMap<u64, f64>,
    weighted: bool,
}

#[inline]
fn edge_key(i: usize, j: usize) -> u64 {
    let (a, b) = if i < j { (i, j) } else { (j, i) };
    ((a as u64) << 32) | b as u64
}

impl Graph {
    /// Build from an unweighted edge list (all weights 1).
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::build(n, edges.iter().map(|&(i, j)| (i, j, 1.0)))
    }

    /// Build from a weighted edge list.
    pub fn weighted(n: usize, edges: &[(usize, usize, f64)]) -> Result<Self> {
        Self::build(n, edges.iter().copied())
    }

    /// Build from `(i, j, w)` triples. `(i, j)` and `(j, i)` denote the same
    /// edge; repeated entries collapse keeping the last weight, so noisy
    /// ingestion with duplicates is tolerated.
    pub fn build(n: usize, edges: impl IntoIterator<Item = (usize, usize, f64)>) -> Result<Self> {
        let mut dedup: BTreeMap<(u32, u32), f64> = BTreeMap::new();
        for (i, j, w) in edges {
            if i == j {
                return Err(Error::SelfLoop(i));
            }
            if i >= n {
                return Err(Error::VertexOutOfRange { vertex: i, n });
            }
            if j >= n {
                return Err(Error::VertexOutOfRange { vertex: j, n });
            }
            if !(w > 0.0) || !w.is_finite() {
                return Err(Error::NonpositiveWeight { i, j, weight: w });
            }
            let (a, b) = if i < j { (i, j) } else { (j, i) };
            dedup.insert((a as u32, b as u32), w);
        }

        let mut adj: Vec<Vec<(u32, f64)>> = vec![Vec::new(); n];
        let mut lookup = HashMap::with_capacity(dedup.len());
        let mut weighted = false;
        for (&(a, b), &w) in &dedup {
            adj[a as usize].push((b, w));
            adj[b as usize].push((a, w));
            lookup.insert(((a as u64) << 32) | b as u64, w);
            if w != 1.0 {
                weighted = true;
            }
        }
        for list in &mut adj {
            list.sort_unstable_by_key(|&(v, _)| v);
        }
        Ok(Graph {
            n,
            m: dedup.len(),
            adj,
            lookup,
            weighted,
        })
    }

    /// Vertex count |V|.
    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Edge count |E|.
    #[inline]
    pub fn edge_count(&self) -> usize {
        self.m
    }

    /// True if any edge carries a weight other than 1.
    pub fn is_weighted(&self) -> bool {
        self.weighted
    }

    /// Sorted `(neighbor, weight)` list of a vertex.
    #[inline]
    pub fn neighbors(&self, i: usize) -> &[(u32, f64)] {
        &self.adj[i]
    }

    /// Weighted degree `d_i = sum of incident edge weights`.
    pub fn degree(&self, i: usize) -> f64 {
        self.adj[i].iter().map(|&(_, w)| w).sum()
    }

    /// Number of neighbors, ignoring weights.
    #[inline]
    pub fn unweighted_degree(&self, i: usize) -> usize {
        self.adj[i].len()
    }

    pub fn max_degree(&self) -> f64 {
        (0..self.n).fold(0.0f64, |m, i| m.max(self.degree(i)))
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.lookup.contains_key(&edge_key(i, j))
    }

    pub fn weight(&self, i: usize, j: usize) -> Option<f64> {
        self.lookup.get(&edge_key(i, j)).copied()
    }

    /// Edges as `(i, j, w)` with `i < j`, ascending lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        (0..self.n).flat_map(move |i| {
            self.adj[i]
                .iter()
                .filter(move |&&(j, _)| (j as usize) > i)
                .map(move |&(j, w)| (i, j as usize, w))
        })
    }

    /// Adjacency matrix: symmetric, zero diagonal, `A[i][j] = w_ij`.
    pub fn adjacency_matrix(&self) -> Matrix {
        let mut a = Matrix::zeros(self.n);
        for (i, j, w) in self.edges() {
            a[(i, j)] = w;
            a[(j, i)] = w;
        }
        a
    }

    /// Laplacian `L = D - A`, or the symmetric normalized form
    /// `D^{-1/2} L D^{-1/2}` where isolated vertices take `D^{-1/2}_{ii} = 0`
    /// and so contribute all-zero rows and columns.
    pub fn laplacian_matrix(&self, normalized: bool) -> Matrix {
        let n = self.n;
        let degrees: Vec<f64> = (0..n).map(|i| self.degree(i)).collect();
        let mut l = Matrix::zeros(n);
        for i in 0..n {
            l[(i, i)] = degrees[i];
        }
        for (i, j, w) in self.edges() {
            l[(i, j)] = -w;
            l[(j, i)] = -w;
        }
        if !normalized {
            return l;
        }
        let scale: Vec<f64> = degrees
            .iter()
            .map(|&d| if d != 0.0 { 1.0 / d.sqrt() } else { 0.0 })
            .collect();
        for i in 0..n {
            for j in 0..n {
                l[(i, j)] *= scale[i] * scale[j];
            }
        }
        l
    }

    /// Connected components as disjoint sorted vertex sets covering `0..n`,
    /// ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut components = Vec::new();
        let mut stack = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            seen[start] = true;
            stack.push(start);
            while let Some(u) = stack.pop() {
                comp.push(u);
                for &(v, _) in &self.adj[u] {
                    let v = v as usize;
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            components.push(comp);
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.connected_components().len() == 1
    }

    /// Relabel vertices: vertex `i` becomes `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidParams("permutation length != n".into()));
        }
        let mut hit = vec![false; self.n];
        for &p in perm {
            if p >= self.n || hit[p] {
                return Err(Error::InvalidParams("not a permutation".into()));
            }
            hit[p] = true;
        }
        Graph::build(self.n, self.edges().map(|(i, j, w)| (perm[i], perm[j], w)))
    }

    /// Subgraph induced by `vertices` (relabeled to `0..vertices.len()` in
    /// the given order).
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let mut index = HashMap::with_capacity(vertices.len());
        for (new, &old) in vertices.iter().enumerate() {
            index.insert(old as u32, new);
        }
        let mut edges = Vec::new();
        for (new_i, &old_i) in vertices.iter().enumerate() {
            for &(old_j, w) in &self.adj[old_i] {
                if let Some(&new_j) = index.get(&old_j) {
                    if new_i < new_j {
                        edges.push((new_i, new_j, w));
                    }
                }
            }
        }
        Graph::build(vertices.len(), edges)
    }

    /// Order-independent 64-bit digest of `(n, edge set)`; used to assert
    /// that experiment variants saw identical draws.
    pub fn fingerprint(&self) -> u64 {
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        let mut absorb = |x: u64| {
            h ^= x;
            h = h.wrapping_mul(0x1000_0000_01b3);
        };
        absorb(self.n as u64);
        for (i, j, w) in self.edges() {
            absorb(i as u64);
            absorb(j as u64);
            absorb(w.to_bits());
        }
        h
    }
}

/// Degree sequence in vertex order. Real-valued in general; integer-valued
/// for unweighted graphs, which is what the degree-sequence sampler needs.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DegreeSequence(pub Vec<f64>);

impl DegreeSequence {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The sequence as integers, or an error when any entry is negative or
    /// non-integral.
    pub fn as_integers(&self) -> Result<Vec<usize>> {
        self.0
            .iter()
            .map(|&d| {
                if d >= 0.0 && d.fract() == 0.0 && d <= usize::MAX as f64 {
                    Ok(d as usize)
                } else {
                    Err(Error::InvalidParams("degree sequence must be non-negative integers".into()))
                }
            })
            .collect()
    }

    /// Erdős–Gallai test: can an integer sequence be realized by a simple
    /// graph? Requires an even sum and the k-prefix inequalities.
    pub fn is_graphical(&self) -> bool {
        let Ok(mut d) = self.as_integers() else {
            return false;
        };
        let n = d.len();
        if d.iter().any(|&x| x >= n.max(1)) {
            return n == 0;
        }
        let total: usize = d.iter().sum();
        if total % 2 != 0 {
            return false;
        }
        d.sort_unstable_by(|a, b| b.cmp(a));
        let mut prefix = 0usize;
        for k in 1..=n {
            prefix += d[k - 1];
            let mut rhs = k * (k - 1);
            for &di in &d[k..] {
                rhs += di.min(k);
            }
            if prefix > rhs {
                return false;
            }
        }
        true
    }
}

/// A single face-to-face contact at time `t` between vertices `u` and `v`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ContactEvent {
    pub t: f64,
    pub u: usize,
    pub v: usize,
}

/// Threshold a symmetric correlation matrix into a graph: edge `(u, v)`
/// present iff `|P(u,v)| >= threshold` (and nonzero), weighted by `|P(u,v)|`
/// or by 1 when `binarize` is set. The diagonal is ignored.
pub fn graph_from_correlation(p: &Matrix, threshold: f64, binarize: bool) -> Result<Graph> {
    if !(0.0..=1.0).contains(&threshold) {
        return Err(Error::InvalidParams("threshold must be in [0, 1]".into()));
    }
    if p.max_asymmetry() > 1e-12 {
        return Err(Error::AsymmetricInput);
    }
    let n = p.n();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            let w = p[(u, v)].abs();
            if w >= threshold && w > 0.0 {
                edges.push((u, v, if binarize { 1.0 } else { w }));
            }
        }
    }
    Graph::build(n, edges)
}

/// Bucket timestamped contacts into `intervals` unweighted graphs over
/// equal-width half-open intervals of `[t_start, t_end)`. Repeated contacts
/// within one interval produce one edge.
pub fn bucket_contacts(
    events: &[ContactEvent],
    t_start: f64,
    t_end: f64,
    intervals: usize,
    n: usize,
) -> Result<Vec<Graph>> {
    if !(t_start < t_end) || intervals == 0 {
        return Err(Error::InvalidParams("need t_start < t_end and intervals >= 1".into()));
    }
    let width = (t_end - t_start) / intervals as f64;
    let mut buckets: Vec<Vec<(usize, usize, f64)>> = vec![Vec::new(); intervals];
    for ev in events {
        if ev.u == ev.v {
            return Err(Error::SelfLoop(ev.u));
        }
        if !ev.t.is_finite() || ev.t < t_start || ev.t >= t_end {
            return Err(Error::EventOutOfRange { t: ev.t });
        }
        let idx = (((ev.t - t_start) / width) as usize).min(intervals - 1);
        buckets[idx].push((ev.u, ev.v, 1.0));
    }
    buckets
        .into_iter()
        .map(|edges| Graph::build(n, edges))
        .collect()
}
