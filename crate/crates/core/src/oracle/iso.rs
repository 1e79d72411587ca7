//! Isomorphism testing for the small graphs the oracle enumerates.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::hash::{Hash, Hasher};

use crate::graph::Graph;

/// Colour refinement. Colours are ranks of label-independent signatures, so
/// isomorphic graphs receive matching colourings; the returned hash covers
/// every round's signatures.
fn refine(g: &Graph) -> (Vec<usize>, u64) {
    let n = g.vertex_count();
    let mut color: Vec<usize> = g.degrees();
    let mut h = DefaultHasher::new();
    n.hash(&mut h);
    let mut sorted = color.clone();
    sorted.sort_unstable();
    sorted.hash(&mut h);
    let mut classes = distinct(&color);
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).map(|u| color[u]).collect();
                nb.sort_unstable();
                (color[v], nb)
            })
            .collect();
        let mut ranked = sigs.clone();
        ranked.sort();
        ranked.dedup();
        ranked.hash(&mut h);
        color = sigs.iter().map(|s| ranked.binary_search(s).expect("present")).collect();
        let now = distinct(&color);
        if now == classes {
            break;
        }
        classes = now;
    }
    (color, h.finish())
}

fn distinct(c: &[usize]) -> usize {
    let mut s = c.to_vec();
    s.sort_unstable();
    s.dedup();
    s.len()
}

/// Isomorphism invariant: equal for isomorphic graphs.
pub fn invariant(g: &Graph) -> u64 {
    refine(g).1
}

#[allow(clippy::too_many_arguments)]
fn extend(a: &Graph, b: &Graph, order: &[usize], ca: &[usize], cb: &[usize], map: &mut Vec<usize>, used: &mut [bool], step: usize) -> bool {
    if step == order.len() {
        return true;
    }
    let v = order[step];
    for w in 0..b.vertex_count() {
        if used[w] || cb[w] != ca[v] {
            continue;
        }
        if order[..step].iter().any(|&u| a.has_edge(u, v) != b.has_edge(map[u], w)) {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if extend(a, b, order, ca, cb, map, used, step + 1) {
            return true;
        }
        used[w] = false;
    }
    false
}

/// Exact isomorphism test by refinement-guided backtracking.
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    let n = a.vertex_count();
    if n != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    let (ca, ha) = refine(a);
    let (cb, hb) = refine(b);
    if ha != hb {
        return false;
    }
    // small colour classes first, then breadth-first so each vertex meets
    // already-mapped neighbours
    let mut size = HashMap::new();
    for &c in &ca {
        *size.entry(c).or_insert(0usize) += 1;
    }
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let start = (0..n).filter(|&v| !placed[v]).min_by_key(|&v| (size[&ca[v]], v)).expect("unplaced vertex");
        let mut queue = std::collections::VecDeque::from([start]);
        placed[start] = true;
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for u in a.neighbors(v) {
                if !placed[u] {
                    placed[u] = true;
                    queue.push_back(u);
                }
            }
        }
    }
    let mut map = vec![0; n];
    let mut used = vec![false; n];
    extend(a, b, &order, &ca, &cb, &mut map, &mut used, 0)
}

/// Keeps the first graph of each isomorphism class, in input order.
pub fn dedup_isomorphic(graphs: Vec<Graph>) -> Vec<Graph> {
    let mut buckets: HashMap<u64, Vec<usize>> = HashMap::new();
    let mut kept: Vec<Graph> = Vec::new();
    for g in graphs {
        let key = invariant(&g);
        let bucket = buckets.entry(key).or_default();
        if bucket.iter().any(|&i| isomorphic(&kept[i], &g)) {
            continue;
        }
        bucket.push(kept.len());
        kept.push(g);
    }
    kept
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{disjoint_union, make_complete, make_complete_multipartite, make_cycle, PartSpec};

    #[test]
    fn relabelled_graphs_match() {
        let g = make_complete_multipartite(&PartSpec::new(vec![1, 2, 3]).unwrap()).unwrap();
        let h = g.relabel(&[5, 3, 1, 0, 2, 4]).unwrap();
        assert!(isomorphic(&g, &h));
        assert_eq!(invariant(&g), invariant(&h));
    }

    #[test]
    fn regular_graphs_are_told_apart() {
        let c6 = make_cycle(6).unwrap();
        let two_c3 = disjoint_union(&[make_cycle(3).unwrap(), make_cycle(3).unwrap()]).unwrap();
        assert!(!isomorphic(&c6, &two_c3));
        let k33 = make_complete_multipartite(&PartSpec::new(vec![3, 3]).unwrap()).unwrap();
        let prism = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]).unwrap();
        assert!(!isomorphic(&k33, &prism));
    }

    #[test]
    fn dedup_keeps_first() {
        let k4 = make_complete(4).unwrap();
        let c4 = make_cycle(4).unwrap();
        let c4b = c4.relabel(&[0, 2, 1, 3]).unwrap();
        let out = dedup_isomorphic(vec![c4.clone(), k4.clone(), c4b]);
        assert_eq!(out, vec![c4, k4]);
    }
}
