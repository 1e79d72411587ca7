//! Hamiltonian cycles in Dirac graphs and perfect matchings of complete
//! multipartite graphs.

use crate::error::{Error, Result};
use crate::graph::{degree_profile, Graph, PartSpec};
use crate::patterns::multipartite_classes;

/// True iff `cycle` lists every vertex of `g` once and consecutive vertices
/// (cyclically) are adjacent.
pub fn is_hamiltonian_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let n = g.vertex_count();
    if n < 3 || cycle.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in cycle {
        if v >= n || std::mem::replace(&mut seen[v], true) {
            return false;
        }
    }
    (0..n).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % n]))
}

/// Hamiltonian cycle of a graph with minimum degree at least `n/2`.
///
/// Complete multipartite hosts are handled by interleaving their parts;
/// everything else (and any interleaving that fails to close) goes through
/// rotation-extension.
pub fn hamiltonian_cycle(g: &Graph) -> Result<Vec<usize>> {
    let n = g.vertex_count();
    let min = degree_profile(g).min;
    if n < 3 || 2 * min < n {
        return Err(Error::Precondition(format!(
            "Dirac condition fails: n = {n}, minimum degree {min}"
        )));
    }
    if let Some(classes) = multipartite_classes(g) {
        if let Some(cycle) = interleave(&classes) {
            if is_hamiltonian_cycle(g, &cycle) {
                return Ok(cycle);
            }
        }
    }
    let cycle = rotation_extension(g);
    debug_assert!(is_hamiltonian_cycle(g, &cycle));
    Ok(cycle)
}

/// Orders the vertices so that cyclically adjacent entries come from
/// different classes: always take the fullest class other than the previous
/// one, preferring the starting class on ties.
fn interleave(classes: &[Vec<usize>]) -> Option<Vec<usize>> {
    let n: usize = classes.iter().map(Vec::len).sum();
    let mut next = vec![0usize; classes.len()];
    let remaining = |next: &[usize], c: usize| classes[c].len() - next[c];
    let first = (0..classes.len()).max_by_key(|&c| (classes[c].len(), std::cmp::Reverse(c)))?;
    let mut order = Vec::with_capacity(n);
    let mut prev = first;
    order.push(classes[first][0]);
    next[first] = 1;
    while order.len() < n {
        let pick = (0..classes.len())
            .filter(|&c| c != prev && remaining(&next, c) > 0)
            .max_by_key(|&c| (remaining(&next, c), c == first, std::cmp::Reverse(c)))?;
        order.push(classes[pick][next[pick]]);
        next[pick] += 1;
        prev = pick;
    }
    (prev != first).then_some(order)
}

/// Constructive Dirac: grow a path until both ends are saturated, close it
/// into a cycle through a crossing pair, then reopen the cycle at a vertex
/// with an outside neighbour and continue.
fn rotation_extension(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut path = vec![0usize];
    let mut on_path = vec![false; n];
    on_path[0] = true;
    loop {
        loop {
            let end = *path.last().expect("nonempty path");
            if let Some(w) = g.neighbors(end).find(|&w| !on_path[w]) {
                on_path[w] = true;
                path.push(w);
                continue;
            }
            if let Some(w) = g.neighbors(path[0]).find(|&w| !on_path[w]) {
                on_path[w] = true;
                path.reverse();
                path.push(w);
                continue;
            }
            break;
        }
        let len = path.len();
        let (first, last) = (path[0], path[len - 1]);
        let cycle = if g.has_edge(first, last) {
            path.clone()
        } else {
            let i = (0..len - 1)
                .find(|&i| g.has_edge(first, path[i + 1]) && g.has_edge(path[i], last))
                .expect("degree sum >= n forces a crossing pair");
            let mut c = path[..=i].to_vec();
            c.extend(path[i + 1..].iter().rev());
            c
        };
        if cycle.len() == n {
            return cycle;
        }
        let (j, w) = cycle
            .iter()
            .enumerate()
            .find_map(|(j, &c)| g.neighbors(c).find(|&w| !on_path[w]).map(|w| (j, w)))
            .expect("Dirac graphs are connected");
        path = cycle[j + 1..].iter().chain(&cycle[..=j]).copied().collect();
        on_path[w] = true;
        path.push(w);
    }
}

/// Perfect matching across the given vertex classes, pairing the two
/// fullest classes first (ties to the lower index).
pub(crate) fn matching_across(classes: &[Vec<usize>]) -> Result<Vec<(usize, usize)>> {
    let total: usize = classes.iter().map(Vec::len).sum();
    let largest = classes.iter().map(Vec::len).max().unwrap_or(0);
    if total % 2 == 1 {
        return Err(Error::Precondition(format!("odd vertex count {total} has no perfect matching")));
    }
    if 2 * largest > total {
        return Err(Error::Precondition(format!(
            "a part of size {largest} exceeds half of {total} vertices"
        )));
    }
    let mut next = vec![0usize; classes.len()];
    let mut pairs = Vec::with_capacity(total / 2);
    for _ in 0..total / 2 {
        let mut order: Vec<usize> = (0..classes.len()).collect();
        order.sort_by_key(|&c| (std::cmp::Reverse(classes[c].len() - next[c]), c));
        let (a, b) = (order[0], order[1]);
        pairs.push((classes[a][next[a]], classes[b][next[b]]));
        next[a] += 1;
        next[b] += 1;
    }
    Ok(pairs)
}

/// Perfect matching of the complete multipartite graph with the given
/// parts (contiguous labels).
pub fn multipartite_matching(parts: &PartSpec) -> Result<Vec<(usize, usize)>> {
    let classes: Vec<Vec<usize>> = parts.ranges().into_iter().map(|r| r.collect()).collect();
    matching_across(&classes)
}
