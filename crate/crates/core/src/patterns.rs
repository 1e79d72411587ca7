//! Containment predicates: cliques, trees and small forests, complete
//! multipartite recognition, r-colourability and components.
//!
//! Containment is always the non-induced subgraph relation. All searches
//! try host vertices in ascending label order, so returned embeddings are
//! reproducible.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::graph::{iter_bits, make_complete, make_cycle, words_per_row, Adjacency, Graph, PartSpec};
use crate::graph6::encode_graph6;
use crate::trees::{NamedTree, Tree};

/// Injective map from pattern vertices to host vertices preserving edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Embedding {
    pub mapping: Vec<usize>,
}

impl Embedding {
    /// Checks the embedding against the host and pattern directly.
    pub fn is_valid(&self, host: &Graph, pattern: &Graph) -> bool {
        let m = &self.mapping;
        if m.len() != pattern.vertex_count() || m.iter().any(|&h| h >= host.vertex_count()) {
            return false;
        }
        let mut sorted = m.clone();
        sorted.sort_unstable();
        sorted.dedup();
        sorted.len() == m.len() && pattern.edges().all(|(u, v)| host.has_edge(m[u], m[v]))
    }
}

fn popcount(set: &[u64]) -> usize {
    set.iter().map(|w| w.count_ones() as usize).sum()
}

fn full_set(n: usize) -> Vec<u64> {
    let mut set = vec![0u64; words_per_row(n)];
    for v in 0..n {
        set[v / 64] |= 1 << (v % 64);
    }
    set
}

/// Greedy colouring of `cand`; the number of classes bounds any clique inside it.
fn color_bound<A: Adjacency + ?Sized>(g: &A, cand: &[u64]) -> usize {
    let mut uncolored = cand.to_vec();
    let mut q = vec![0u64; cand.len()];
    let mut colors = 0;
    while uncolored.iter().any(|&w| w != 0) {
        colors += 1;
        q.copy_from_slice(&uncolored);
        loop {
            let Some(v) = iter_bits(&q).next() else { break };
            uncolored[v / 64] &= !(1 << (v % 64));
            q[v / 64] &= !(1 << (v % 64));
            for (qw, rw) in q.iter_mut().zip(g.row(v)) {
                *qw &= !rw;
            }
        }
    }
    colors
}

fn clique_rec<A: Adjacency + ?Sized>(g: &A, cand: &[u64], need: usize, chosen: &mut Vec<usize>) -> bool {
    if need == 0 {
        return true;
    }
    let mut left = popcount(cand);
    if left < need || (need >= 3 && color_bound(g, cand) < need) {
        return false;
    }
    let mut next = vec![0u64; cand.len()];
    for v in iter_bits(cand) {
        if left < need {
            break;
        }
        left -= 1;
        for (i, (nw, (&cw, &rw))) in next.iter_mut().zip(cand.iter().zip(g.row(v))).enumerate() {
            // keep only labels above v
            let above = if i < v / 64 {
                0
            } else if i == v / 64 {
                !((2u64 << (v % 64)).wrapping_sub(1))
            } else {
                u64::MAX
            };
            *nw = cw & rw & above;
        }
        chosen.push(v);
        if clique_rec(g, &next, need - 1, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Lexicographically least `k`-clique whose vertices all lie in `cand`.
pub(crate) fn find_clique_within<A: Adjacency + ?Sized>(g: &A, cand: &[u64], k: usize) -> Option<Vec<usize>> {
    let mut chosen = Vec::with_capacity(k);
    clique_rec(g, cand, k, &mut chosen).then_some(chosen)
}

/// Lexicographically least `k`-clique, if any. `k = 0` yields the empty clique.
pub fn contains_clique(g: &Graph, k: usize) -> Option<Embedding> {
    find_clique_within(g, &full_set(g.vertex_count()), k).map(|mapping| Embedding { mapping })
}

/// Embedding order for a pattern: components largest first, each explored
/// breadth-first from a maximum-degree vertex so leaves come last.
struct PatternPlan {
    /// pattern vertex placed at each step
    vertex: Vec<usize>,
    /// step index of the earlier neighbour whose image anchors the candidates
    anchor: Vec<Option<usize>>,
    /// further earlier neighbours (non-tree patterns only)
    back: Vec<Vec<usize>>,
    degree: Vec<usize>,
}

impl PatternPlan {
    fn new(pattern: &Graph) -> Self {
        let deg = pattern.degrees();
        let mut comps = components(pattern);
        comps.sort_by(|a, b| b.vertices.len().cmp(&a.vertices.len()).then(a.vertices[0].cmp(&b.vertices[0])));
        let m = pattern.vertex_count();
        let mut step_of = vec![usize::MAX; m];
        let mut plan = PatternPlan { vertex: vec![], anchor: vec![], back: vec![], degree: vec![] };
        for comp in &comps {
            let root = *comp.vertices.iter().max_by_key(|&&v| (deg[v], std::cmp::Reverse(v))).expect("nonempty");
            let mut queue = std::collections::VecDeque::from([root]);
            let mut queued = vec![false; m];
            queued[root] = true;
            while let Some(p) = queue.pop_front() {
                let step = plan.vertex.len();
                step_of[p] = step;
                let mut earlier: Vec<usize> = pattern.neighbors(p).filter(|&q| step_of[q] != usize::MAX).map(|q| step_of[q]).collect();
                earlier.sort_unstable();
                let anchor = earlier.first().copied();
                plan.vertex.push(p);
                plan.anchor.push(anchor);
                plan.back.push(earlier.into_iter().skip(1).collect());
                plan.degree.push(deg[p]);
                let mut nbrs: Vec<usize> = pattern.neighbors(p).filter(|&q| !queued[q]).collect();
                nbrs.sort_by_key(|&q| (std::cmp::Reverse(deg[q]), q));
                for q in nbrs {
                    queued[q] = true;
                    queue.push_back(q);
                }
            }
        }
        plan
    }
}

struct Embedder<'a, A: Adjacency + ?Sized> {
    host: &'a A,
    host_degree: Vec<usize>,
    plan: PatternPlan,
    image: Vec<usize>,
    used: Vec<u64>,
    all: Vec<u64>,
}

impl<A: Adjacency + ?Sized> Embedder<'_, A> {
    fn extend(&mut self, step: usize) -> bool {
        if step == self.plan.vertex.len() {
            return true;
        }
        let words = self.used.len();
        let mut cand = vec![0u64; words];
        let base = match self.plan.anchor[step] {
            Some(a) => self.host.row(self.image[a]),
            None => &self.all,
        };
        for (c, (&b, &u)) in cand.iter_mut().zip(base.iter().zip(&self.used)) {
            *c = b & !u;
        }
        for h in iter_bits(&cand) {
            if self.host_degree[h] < self.plan.degree[step] {
                continue;
            }
            if !self.plan.back[step].iter().all(|&b| self.host.adjacent(h, self.image[b])) {
                continue;
            }
            self.image[step] = h;
            self.used[h / 64] |= 1 << (h % 64);
            if self.extend(step + 1) {
                return true;
            }
            self.used[h / 64] &= !(1 << (h % 64));
        }
        false
    }
}

/// Finds a (not necessarily induced) copy of `pattern` in `host`. Patterns
/// larger than the host are simply absent.
pub fn embed_pattern<A: Adjacency + ?Sized>(host: &A, pattern: &Graph) -> Option<Embedding> {
    let n = host.order();
    let m = pattern.vertex_count();
    if m > n {
        return None;
    }
    let plan = PatternPlan::new(pattern);
    let words = words_per_row(n);
    let all = full_set(n);
    let mut e = Embedder {
        host,
        host_degree: (0..n).map(|v| host.degree_of(v)).collect(),
        image: vec![0; m],
        used: vec![0; words],
        all,
        plan,
    };
    if !e.extend(0) {
        return None;
    }
    let mut mapping = vec![0; m];
    for (step, &p) in e.plan.vertex.iter().enumerate() {
        mapping[p] = e.image[step];
    }
    Some(Embedding { mapping })
}

pub fn contains_tree(g: &Graph, t: &Tree) -> Option<Embedding> {
    embed_pattern(g, &t.to_graph())
}

/// A forbidden subgraph: a clique, a tree, or any small graph (forests and
/// cycle-bearing patterns).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Forbidden {
    Clique(usize),
    Tree(Tree),
    Graph(Graph),
}

impl Forbidden {
    /// The pattern as an explicit graph.
    pub fn to_graph(&self) -> Result<Graph> {
        match self {
            Forbidden::Clique(k) => make_complete(*k),
            Forbidden::Tree(t) => Ok(t.to_graph()),
            Forbidden::Graph(g) => Ok(g.clone()),
        }
    }

    pub fn vertex_count(&self) -> usize {
        match self {
            Forbidden::Clique(k) => *k,
            Forbidden::Tree(t) => t.vertex_count(),
            Forbidden::Graph(g) => g.vertex_count(),
        }
    }

    /// Connected components of the pattern.
    pub fn components(&self) -> Result<Vec<Graph>> {
        Ok(components(&self.to_graph()?).into_iter().map(|c| c.graph).collect())
    }
}

/// Finds a copy of `f` in `g`.
pub fn find_forbidden(g: &Graph, f: &Forbidden) -> Option<Embedding> {
    match f {
        Forbidden::Clique(k) => contains_clique(g, *k),
        Forbidden::Tree(t) => contains_tree(g, t),
        Forbidden::Graph(p) => embed_pattern(g, p),
    }
}

impl fmt::Display for Forbidden {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Forbidden::Clique(k) => write!(f, "K{k}"),
            Forbidden::Tree(t) => write!(f, "tree[{t}]"),
            Forbidden::Graph(g) => write!(f, "graph6[{}]", encode_graph6(g)),
        }
    }
}

fn parse_indexed(token: &str, prefix: char) -> Option<usize> {
    token.strip_prefix(prefix)?.parse().ok()
}

/// One component token: `P<k>`, `C<k>`, `K<k>` or a tree spec.
fn parse_component(token: &str) -> Result<Graph> {
    if let Some(k) = parse_indexed(token, 'P') {
        return Ok(Tree::path(k)?.to_graph());
    }
    if let Some(k) = parse_indexed(token, 'C') {
        return make_cycle(k);
    }
    if let Some(k) = parse_indexed(token, 'K') {
        return make_complete(k);
    }
    Ok(token.parse::<Tree>()?.to_graph())
}

impl FromStr for Forbidden {
    type Err = Error;

    /// `K4` or `clique:4` is a clique; a tree spec (`path:5`, `A:6`,
    /// `5; 0-1,...`) a tree; a comma-separated list of `P<k>`, `C<k>`,
    /// `K<k>` or named tree specs is the disjoint union of its components.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(k) = s.strip_prefix("clique:") {
            return k.parse().map(Forbidden::Clique).map_err(|_| invalid(format!("bad clique size in `{s}`")));
        }
        if let Some(k) = parse_indexed(s, 'K') {
            return Ok(Forbidden::Clique(k));
        }
        if s.contains(';') {
            return Ok(Forbidden::Tree(s.parse()?));
        }
        let tokens: Vec<&str> = s.split(',').map(str::trim).filter(|x| !x.is_empty()).collect();
        match tokens.as_slice() {
            [] => Err(invalid("empty pattern")),
            [one] if one.parse::<NamedTree>().is_ok() => Ok(Forbidden::Tree(one.parse()?)),
            [one] if parse_indexed(one, 'P').is_some() => Ok(Forbidden::Tree(Tree::path(parse_indexed(one, 'P').unwrap_or(0))?)),
            _ => {
                let parts = tokens.iter().map(|t| parse_component(t)).collect::<Result<Vec<_>>>()?;
                Ok(Forbidden::Graph(crate::graph::disjoint_union(&parts)?))
            }
        }
    }
}

/// Vertex classes of a complete multipartite graph (classes ordered by
/// their least vertex), or `None` if non-adjacency is not an equivalence.
pub fn multipartite_classes(g: &Graph) -> Option<Vec<Vec<usize>>> {
    let n = g.vertex_count();
    if n == 0 {
        return None;
    }
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        if class_of[v] != usize::MAX {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|&u| u == v || !g.has_edge(u, v)).collect();
        for &u in &members {
            if class_of[u] != usize::MAX {
                return None;
            }
            class_of[u] = classes.len();
        }
        classes.push(members);
    }
    // every cross-class pair must be adjacent
    for u in 0..n {
        for v in u + 1..n {
            if (class_of[u] == class_of[v]) == g.has_edge(u, v) {
                return None;
            }
        }
    }
    Some(classes)
}

pub fn is_complete_multipartite(g: &Graph) -> Option<PartSpec> {
    multipartite_classes(g).map(|cs| PartSpec {
        part_sizes: cs.iter().map(Vec::len).collect(),
    })
}

fn color_rec(g: &Graph, v: usize, r: usize, color: &mut Vec<usize>, used: usize) -> bool {
    if v == g.vertex_count() {
        return true;
    }
    for c in 0..r.min(used + 1) {
        if g.neighbors(v).filter(|&u| u < v).all(|u| color[u] != c) {
            color[v] = c;
            if color_rec(g, v + 1, r, color, used.max(c + 1)) {
                return true;
            }
        }
    }
    false
}

/// Proper `r`-colourability by backtracking; desk scale only.
pub fn is_r_partite(g: &Graph, r: usize) -> bool {
    if g.vertex_count() == 0 {
        return true;
    }
    if r == 0 {
        return false;
    }
    let mut color = vec![usize::MAX; g.vertex_count()];
    color_rec(g, 0, r, &mut color, 0)
}

/// A connected component together with the host labels of its vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub vertices: Vec<usize>,
    pub graph: Graph,
}

/// Connected components ordered by least vertex; each component's graph is
/// relabelled in ascending host-label order.
pub fn components(g: &Graph) -> Vec<Component> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut stack = vec![s];
        let mut vertices = vec![s];
        while let Some(u) = stack.pop() {
            for v in g.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    vertices.push(v);
                    stack.push(v);
                }
            }
        }
        vertices.sort_unstable();
        let graph = g.induced(&vertices);
        out.push(Component { vertices, graph });
    }
    out
}
