//! Row-by-row exhaustive search for regular `F`-free graphs.
//!
//! Vertex `i` picks its neighbours among `i+1..n` once all earlier rows are
//! fixed. Candidates with identical adjacency to the earlier vertices are
//! interchangeable, so only prefixes of each such twin class are tried; the
//! lexicographically least valid graph survives this reduction, as does at
//! least one member of every isomorphism class.

use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;

use crate::graph::{Adjacency, Graph};
use crate::patterns::{embed_pattern, find_clique_within, Forbidden};

/// Partial adjacency during the search; `n <= 64`.
#[derive(Clone)]
pub(crate) struct State {
    rows: Vec<u64>,
    deg: Vec<usize>,
}

impl Adjacency for State {
    fn order(&self) -> usize {
        self.rows.len()
    }

    fn row(&self, v: usize) -> &[u64] {
        std::slice::from_ref(&self.rows[v])
    }

    fn degree_of(&self, v: usize) -> usize {
        self.deg[v]
    }
}

impl State {
    fn new(n: usize) -> Self {
        State { rows: vec![0; n], deg: vec![0; n] }
    }

    fn add(&mut self, u: usize, v: usize) {
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
        self.deg[u] += 1;
        self.deg[v] += 1;
    }

    fn del(&mut self, u: usize, v: usize) {
        self.rows[u] &= !(1 << v);
        self.rows[v] &= !(1 << u);
        self.deg[u] -= 1;
        self.deg[v] -= 1;
    }

    fn to_graph(&self) -> Graph {
        Graph::from_word_rows(&self.rows)
    }
}

/// How freeness is enforced during the search.
pub(crate) enum Check {
    /// Every graph on `n` vertices avoids the pattern.
    Nothing,
    /// Every graph on `n` vertices contains the pattern.
    Impossible,
    /// `K_k` with `k >= 2`, tested on each new edge.
    Clique(usize),
    /// Any other pattern, tested whenever a row is completed.
    Pattern(Graph),
}

impl Check {
    pub(crate) fn new(n: usize, forbidden: &Forbidden) -> crate::Result<Self> {
        let pattern = forbidden.to_graph()?;
        if pattern.edge_count() == 0 {
            return Ok(if pattern.vertex_count() <= n { Check::Impossible } else { Check::Nothing });
        }
        Ok(match forbidden {
            Forbidden::Clique(k) => Check::Clique(*k),
            _ => Check::Pattern(pattern),
        })
    }
}

struct Searcher<'a> {
    n: usize,
    d: usize,
    check: &'a Check,
    nodes: u64,
}

impl Searcher<'_> {
    /// Completes rows `i..stop`, handing each resulting state to `visit`.
    /// Returns true as soon as `visit` does.
    fn rows_from(&mut self, st: &mut State, i: usize, stop: usize, visit: &mut dyn FnMut(&State) -> bool) -> bool {
        if i == stop {
            return visit(st);
        }
        self.nodes += 1;
        let need = self.d - st.deg[i];
        let cands: Vec<usize> = (i + 1..self.n).filter(|&j| st.deg[j] < self.d).collect();
        if cands.len() < need {
            return false;
        }
        let mut keys: Vec<u64> = Vec::new();
        let class: Vec<usize> = cands
            .iter()
            .map(|&j| match keys.iter().position(|&k| k == st.rows[j]) {
                Some(c) => c,
                None => {
                    keys.push(st.rows[j]);
                    keys.len() - 1
                }
            })
            .collect();
        self.choose(st, i, &cands, &class, 0, need, 0, stop, visit)
    }

    #[allow(clippy::too_many_arguments)]
    fn choose(
        &mut self,
        st: &mut State,
        i: usize,
        cands: &[usize],
        class: &[usize],
        pos: usize,
        need: usize,
        mut blocked: u64,
        stop: usize,
        visit: &mut dyn FnMut(&State) -> bool,
    ) -> bool {
        if need == 0 {
            return self.finish_row(st, i, stop, visit);
        }
        for idx in pos..cands.len() {
            if cands.len() - idx < need {
                break;
            }
            let (c, cl) = (cands[idx], class[idx]);
            if blocked >> cl & 1 == 0 {
                st.add(i, c);
                let hit = self.edge_ok(st, i, c) && self.choose(st, i, cands, class, idx + 1, need - 1, blocked, stop, visit);
                st.del(i, c);
                if hit {
                    return true;
                }
            }
            blocked |= 1 << cl;
        }
        false
    }

    fn edge_ok(&self, st: &State, u: usize, v: usize) -> bool {
        match self.check {
            Check::Clique(k) => {
                let common = st.rows[u] & st.rows[v];
                match k {
                    2 => false,
                    3 => common == 0,
                    _ => find_clique_within(st, &[common], k - 2).is_none(),
                }
            }
            _ => true,
        }
    }

    fn finish_row(&mut self, st: &mut State, i: usize, stop: usize, visit: &mut dyn FnMut(&State) -> bool) -> bool {
        let open: Vec<usize> = (i + 1..self.n).filter(|&j| st.deg[j] < self.d).collect();
        let mut missing = 0;
        for &j in &open {
            let short = self.d - st.deg[j];
            if short > open.len() - 1 {
                return false;
            }
            missing += short;
        }
        if missing % 2 == 1 {
            return false;
        }
        if let Check::Pattern(p) = self.check {
            if st.deg[i] > 0 && embed_pattern(st, p).is_some() {
                return false;
            }
        }
        self.rows_from(st, i + 1, stop, visit)
    }
}

/// Result of a search together with the number of expanded nodes.
#[derive(Debug, Clone, Default)]
pub struct SearchStats {
    /// Rows expanded across all workers.
    pub nodes: u64,
    /// Independent subtrees handed to the workers.
    pub branches: usize,
}

pub(crate) struct Plan<'a> {
    pub n: usize,
    pub d: usize,
    pub check: &'a Check,
}

impl Plan<'_> {
    fn searcher(&self) -> Searcher<'_> {
        Searcher { n: self.n, d: self.d, check: self.check, nodes: 0 }
    }

    /// Splits the tree into subtrees at the shallowest row depth giving
    /// enough branches, preserving lexicographic order.
    fn frontier(&self, want: usize, stats: &mut SearchStats) -> (Vec<State>, usize) {
        let mut level = vec![State::new(self.n)];
        let mut depth = 0;
        while depth < self.n && level.len() < want {
            let mut s = self.searcher();
            let mut next = Vec::new();
            for st in &mut level {
                s.rows_from(st, depth, depth + 1, &mut |x| {
                    next.push(x.clone());
                    false
                });
            }
            stats.nodes += s.nodes;
            level = next;
            depth += 1;
            if level.is_empty() {
                break;
            }
        }
        (level, depth)
    }

    fn want(&self, serial: bool) -> usize {
        if serial {
            1
        } else {
            8 * rayon::current_num_threads()
        }
    }

    pub(crate) fn first(&self, serial: bool) -> (Option<Graph>, SearchStats) {
        let mut stats = SearchStats::default();
        if matches!(self.check, Check::Impossible) {
            return (None, stats);
        }
        let (level, depth) = self.frontier(self.want(serial), &mut stats);
        stats.branches = level.len();
        let nodes = AtomicU64::new(0);
        let run = |st: &State| {
            let mut s = self.searcher();
            let mut found = None;
            s.rows_from(&mut st.clone(), depth, self.n, &mut |leaf| {
                found = Some(leaf.to_graph());
                true
            });
            nodes.fetch_add(s.nodes, Ordering::Relaxed);
            found
        };
        let found = if serial { level.iter().find_map(run) } else { level.par_iter().find_map_first(run) };
        stats.nodes += nodes.into_inner();
        (found, stats)
    }

    pub(crate) fn all(&self, serial: bool) -> (Vec<Graph>, SearchStats) {
        let mut stats = SearchStats::default();
        if matches!(self.check, Check::Impossible) {
            return (Vec::new(), stats);
        }
        let (level, depth) = self.frontier(self.want(serial), &mut stats);
        stats.branches = level.len();
        let nodes = AtomicU64::new(0);
        let run = |st: &State| {
            let mut s = self.searcher();
            let mut out = Vec::new();
            s.rows_from(&mut st.clone(), depth, self.n, &mut |leaf| {
                out.push(leaf.to_graph());
                false
            });
            nodes.fetch_add(s.nodes, Ordering::Relaxed);
            out
        };
        let parts: Vec<Vec<Graph>> = if serial { level.iter().map(run).collect() } else { level.par_iter().map(run).collect() };
        stats.nodes += nodes.into_inner();
        (parts.into_iter().flatten().collect(), stats)
    }
}
