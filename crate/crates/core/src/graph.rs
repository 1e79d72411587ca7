//! Dense simple undirected graphs and the standard builders.
//!
//! Vertices are the integers `0..n`. Adjacency is a symmetric bit matrix
//! stored row by row, `words_per_row(n)` 64-bit words per row.

use std::fmt;

use serde::Serialize;

use crate::error::{invalid, Result};

/// Largest vertex count a [`Graph`] may have.
pub const MAX_VERTICES: usize = 512;

#[inline]
pub(crate) fn words_per_row(n: usize) -> usize {
    n.div_ceil(64).max(1)
}

/// Iterates the set bits of a bit row in ascending order.
pub(crate) fn iter_bits(row: &[u64]) -> impl Iterator<Item = usize> + '_ {
    row.iter().enumerate().flat_map(|(w, &word)| {
        let mut rest = word;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(w * 64 + b)
            }
        })
    })
}

/// Read access to a symmetric bit adjacency matrix.
///
/// Implemented by [`Graph`] and by the search oracle's mutable state so the
/// containment routines run on either.
pub trait Adjacency {
    fn order(&self) -> usize;
    fn row(&self, v: usize) -> &[u64];

    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.row(u)[v / 64] >> (v % 64) & 1 == 1
    }

    fn degree_of(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }
}

/// A finite simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl Adjacency for Graph {
    fn order(&self) -> usize {
        self.n
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(invalid(format!(
                "vertex count {n} exceeds the supported bound {MAX_VERTICES}"
            )));
        }
        let words = words_per_row(n);
        Ok(Graph {
            n,
            words,
            rows: vec![0; n * words],
        })
    }

    /// Builds a graph from an edge list. Loops, out-of-range endpoints and
    /// repeated edges are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(invalid(format!("edge ({u},{v}) out of range for n = {n}")));
            }
            if u == v {
                return Err(invalid(format!("self-loop at vertex {u}")));
            }
            if g.has_edge(u, v) {
                return Err(invalid(format!("duplicate edge ({u},{v})")));
            }
            g.insert(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from bit rows of width one word; `n <= 64`.
    pub(crate) fn from_word_rows(rows: &[u64]) -> Self {
        debug_assert!(rows.len() <= 64);
        Graph {
            n: rows.len(),
            words: 1,
            rows: rows.to_vec(),
        }
    }

    pub(crate) fn insert(&mut self, u: usize, v: usize) {
        self.rows[u * self.words + v / 64] |= 1 << (v % 64);
        self.rows[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub(crate) fn remove(&mut self, u: usize, v: usize) {
        self.rows[u * self.words + v / 64] &= !(1 << (v % 64));
        self.rows[v * self.words + u / 64] &= !(1 << (u % 64));
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adjacent(u, v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degree_of(v)
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        iter_bits(self.row(v))
    }

    pub fn edge_count(&self) -> usize {
        self.degrees().iter().sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in row-major order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn complement(&self) -> Graph {
        let mut c = Graph::empty(self.n).expect("same order");
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    c.insert(u, v);
                }
            }
        }
        c
    }

    /// The subgraph induced on `vertices`, relabelled `0..len` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut h = Graph::empty(vertices.len()).expect("subgraph is no larger");
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    h.insert(i, j);
                }
            }
        }
        h
    }

    /// Applies the relabelling `v -> perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(invalid("permutation length differs from vertex count"));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(invalid("not a permutation"));
            }
        }
        let mut h = Graph::empty(self.n)?;
        for (u, v) in self.edges() {
            h.insert(perm[u], perm[v]);
        }
        Ok(h)
    }

    /// Renders the graph in Graphviz DOT syntax.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("graph {name} {{\n");
        for v in 0..self.n {
            out.push_str(&format!("  {v};\n"));
        }
        for (u, v) in self.edges() {
            out.push_str(&format!("  {u} -- {v};\n"));
        }
        out.push_str("}\n");
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<_> = self.edges().collect();
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &edges)
            .finish()
    }
}

/// Part sizes of a complete multipartite graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct PartSpec {
    pub part_sizes: Vec<usize>,
}

impl PartSpec {
    pub fn new(part_sizes: Vec<usize>) -> Result<Self> {
        if part_sizes.is_empty() {
            return Err(invalid("empty part list"));
        }
        if part_sizes.contains(&0) {
            return Err(invalid("part of size zero"));
        }
        Ok(PartSpec { part_sizes })
    }

    pub fn vertex_count(&self) -> usize {
        self.part_sizes.iter().sum()
    }

    /// Contiguous label ranges, one per part, in part order.
    pub fn ranges(&self) -> Vec<std::ops::Range<usize>> {
        let mut start = 0;
        self.part_sizes
            .iter()
            .map(|&s| {
                let r = start..start + s;
                start += s;
                r
            })
            .collect()
    }

    /// Part index of every vertex.
    pub fn part_of(&self) -> Vec<usize> {
        self.part_sizes
            .iter()
            .enumerate()
            .flat_map(|(i, &s)| std::iter::repeat_n(i, s))
            .collect()
    }
}

/// Complete multipartite graph with contiguous parts.
pub fn make_complete_multipartite(parts: &PartSpec) -> Result<Graph> {
    let parts = PartSpec::new(parts.part_sizes.clone())?;
    let part_of = parts.part_of();
    let n = part_of.len();
    let mut g = Graph::empty(n)?;
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] != part_of[v] {
                g.insert(u, v);
            }
        }
    }
    Ok(g)
}

/// Turán graph `T(n, r)`: `n mod r` parts of size `ceil(n/r)` first, then the
/// parts of size `floor(n/r)`.
pub fn make_turan(n: usize, r: usize) -> Result<(Graph, PartSpec)> {
    if r < 1 || r > n {
        return Err(invalid(format!("Turán graph needs 1 <= r <= n, got n = {n}, r = {r}")));
    }
    let (q, s) = (n / r, n % r);
    let sizes = (0..r).map(|i| if i < s { q + 1 } else { q }).collect();
    let parts = PartSpec::new(sizes)?;
    Ok((make_complete_multipartite(&parts)?, parts))
}

pub fn make_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid(format!("cycle needs at least 3 vertices, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn make_complete(k: usize) -> Result<Graph> {
    if k < 1 {
        return Err(invalid("complete graph needs at least one vertex"));
    }
    Graph::from_edges(k, (0..k).flat_map(|u| (u + 1..k).map(move |v| (u, v))))
}

/// Disjoint union with consecutive relabelling, summands in order.
pub fn disjoint_union(graphs: &[Graph]) -> Result<Graph> {
    let n = graphs.iter().map(Graph::vertex_count).sum();
    let mut g = Graph::empty(n)?;
    let mut offset = 0;
    for h in graphs {
        for (u, v) in h.edges() {
            g.insert(offset + u, offset + v);
        }
        offset += h.vertex_count();
    }
    Ok(g)
}

/// An explicit set of edges to delete, with the degree drop each vertex is
/// expected to suffer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RemovalPlan {
    pub edges: Vec<(usize, usize)>,
    pub quota: Vec<usize>,
}

impl RemovalPlan {
    /// Plan whose quotas are read off the edge list.
    pub fn from_edges(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut quota = vec![0; n];
        for &(u, v) in &edges {
            if u < n {
                quota[u] += 1;
            }
            if v < n {
                quota[v] += 1;
            }
        }
        RemovalPlan { edges, quota }
    }

    /// Checks that every vertex is incident to exactly its quota of edges.
    pub fn quotas_met(&self) -> bool {
        let mut seen = vec![0; self.quota.len()];
        for &(u, v) in &self.edges {
            if u >= seen.len() || v >= seen.len() {
                return false;
            }
            seen[u] += 1;
            seen[v] += 1;
        }
        seen == self.quota
    }
}

/// Deletes the plan's edges from `g`.
pub fn remove_edge_set(g: &Graph, plan: &RemovalPlan) -> Result<Graph> {
    if plan.quota.len() != g.vertex_count() {
        return Err(invalid("removal plan quota length differs from vertex count"));
    }
    if !plan.quotas_met() {
        return Err(invalid("removal plan edges do not match their quotas"));
    }
    let mut h = g.clone();
    for &(u, v) in &plan.edges {
        if !h.has_edge(u, v) {
            let why = if g.has_edge(u, v) { "duplicated" } else { "nonexistent" };
            return Err(invalid(format!("{why} edge ({u},{v}) in removal plan")));
        }
        h.remove(u, v);
    }
    Ok(h)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    pub min: usize,
    pub max: usize,
    pub is_regular: bool,
    pub degree: Option<usize>,
}

/// Minimum and maximum degree; the empty graph counts as 0-regular.
pub fn degree_profile(g: &Graph) -> DegreeProfile {
    let degrees = g.degrees();
    let min = degrees.iter().copied().min().unwrap_or(0);
    let max = degrees.iter().copied().max().unwrap_or(0);
    DegreeProfile {
        min,
        max,
        is_regular: min == max,
        degree: (min == max).then_some(min),
    }
}
