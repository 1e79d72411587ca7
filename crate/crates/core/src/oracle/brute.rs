//! Unpruned enumeration of every labelled graph on a few vertices.

use crate::error::{invalid, Result};
use crate::graph::Graph;
use crate::patterns::{find_forbidden, Forbidden};

/// Largest order accepted by [`all_graphs`].
pub const BRUTE_MAX_N: usize = 7;

/// Every labelled graph on `n <= 7` vertices, `2^(n(n-1)/2)` in all. The
/// `filter` sees the edge count and bit rows before a [`Graph`] is built.
pub fn all_graphs<'a>(n: usize, filter: impl Fn(usize, &[u64]) -> bool + 'a) -> Result<impl Iterator<Item = Graph> + 'a> {
    if n > BRUTE_MAX_N {
        return Err(invalid(format!("exhaustive enumeration limited to n <= {BRUTE_MAX_N}")));
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let total = 1u64 << pairs.len();
    Ok((0..total).filter_map(move |mask| {
        let mut rows = [0u64; BRUTE_MAX_N];
        for (b, &(u, v)) in pairs.iter().enumerate() {
            if mask >> b & 1 == 1 {
                rows[u] |= 1 << v;
                rows[v] |= 1 << u;
            }
        }
        filter(mask.count_ones() as usize, &rows[..n]).then(|| Graph::from_word_rows(&rows[..n]))
    }))
}

/// All `d`-regular labelled graphs on `n` vertices avoiding `forbidden`,
/// found by scanning every graph.
pub fn naive_regular_free(n: usize, d: usize, forbidden: &Forbidden) -> Result<Vec<Graph>> {
    let regular = move |_: usize, rows: &[u64]| rows.iter().all(|r| r.count_ones() as usize == d);
    Ok(all_graphs(n, regular)?.filter(|g| find_forbidden(g, forbidden).is_none()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(all_graphs(4, |_, _| true).unwrap().count(), 64);
        assert_eq!(all_graphs(0, |_, _| true).unwrap().count(), 1);
        // labelled perfect matchings of K_6
        assert_eq!(naive_regular_free(6, 1, &Forbidden::Clique(3)).unwrap().len(), 15);
        // labelled 2-regular graphs on 5 vertices are the 12 five-cycles
        assert_eq!(naive_regular_free(5, 2, &Forbidden::Clique(3)).unwrap().len(), 12);
        assert!(all_graphs(8, |_, _| true).is_err());
    }
}
