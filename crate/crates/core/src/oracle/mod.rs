//! Exhaustive search at desk scale: existence and enumeration of regular
//! `F`-free graphs, exact `regex` values, and the structure checks that go
//! with them.

mod brute;
mod iso;
mod search;
mod shapes;

use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::graph::Graph;
use crate::patterns::Forbidden;
use search::{Check, Plan};

pub use brute::{all_graphs, naive_regular_free, BRUTE_MAX_N};
pub use iso::{dedup_isomorphic, invariant, isomorphic};
pub use search::SearchStats;
pub use shapes::{classify_components_shape, ComponentShape, ShapeReport};

/// Default largest `n` the oracle accepts.
pub const DEFAULT_MAX_N: usize = 14;

/// Ceiling on any configured bound; the search state is one word per row.
pub const HARD_MAX_N: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exists,
    Enumerate,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchSpec {
    pub n: usize,
    pub d: usize,
    pub forbidden: Forbidden,
    pub mode: Mode,
}

impl SearchSpec {
    pub fn exists(n: usize, d: usize, forbidden: Forbidden) -> Self {
        SearchSpec { n, d, forbidden, mode: Mode::Exists }
    }

    pub fn enumerate(n: usize, d: usize, forbidden: Forbidden) -> Self {
        SearchSpec { n, d, forbidden, mode: Mode::Enumerate }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleConfig {
    /// Searches with more vertices are refused.
    pub max_n: usize,
    /// Worker threads; `Some(1)` runs serially, `None` uses the global pool.
    pub workers: Option<usize>,
    /// Keep one graph per isomorphism class when enumerating.
    pub dedup: bool,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { max_n: DEFAULT_MAX_N, workers: None, dedup: false }
    }
}

impl OracleConfig {
    fn admit(&self, n: usize) -> Result<()> {
        let bound = self.max_n.min(HARD_MAX_N);
        if n > bound {
            return Err(Error::Refused { n, bound });
        }
        Ok(())
    }

    fn run<T: Send>(&self, job: impl FnOnce(bool) -> T + Send) -> Result<T> {
        match self.workers {
            Some(0) => Err(invalid("worker count must be positive")),
            Some(1) => Ok(job(true)),
            Some(w) => {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(w)
                    .build()
                    .map_err(|e| invalid(format!("cannot start {w} workers: {e}")))?;
                Ok(pool.install(|| job(false)))
            }
            None => Ok(job(false)),
        }
    }
}

fn validate(spec: &SearchSpec, cfg: &OracleConfig) -> Result<()> {
    cfg.admit(spec.n)?;
    if spec.d >= spec.n {
        return Err(invalid(format!("degree {} needs more than {} vertices", spec.d, spec.n)));
    }
    if let Forbidden::Tree(t) = &spec.forbidden {
        crate::trees::classify(t)?;
    }
    Ok(())
}

/// A witness (the lexicographically least one) if some `d`-regular
/// `F`-free graph on `n` vertices exists. Odd `n·d` returns at once with
/// zero nodes expanded.
pub fn exists_regular_free(spec: &SearchSpec, cfg: &OracleConfig) -> Result<(Option<Graph>, SearchStats)> {
    validate(spec, cfg)?;
    if spec.n * spec.d % 2 == 1 {
        return Ok((None, SearchStats::default()));
    }
    let check = Check::new(spec.n, &spec.forbidden)?;
    let plan = Plan { n: spec.n, d: spec.d, check: &check };
    cfg.run(|serial| plan.first(serial))
}

/// Every `d`-regular `F`-free graph the reduced search reaches. This covers
/// every isomorphism class; with `cfg.dedup` exactly one graph per class is
/// kept.
pub fn enumerate_regular_free(spec: &SearchSpec, cfg: &OracleConfig) -> Result<(Vec<Graph>, SearchStats)> {
    validate(spec, cfg)?;
    if spec.mode != Mode::Enumerate {
        return Err(invalid("enumeration requires mode = enumerate"));
    }
    if spec.n * spec.d % 2 == 1 {
        return Ok((Vec::new(), SearchStats::default()));
    }
    let check = Check::new(spec.n, &spec.forbidden)?;
    let plan = Plan { n: spec.n, d: spec.d, check: &check };
    let (graphs, stats) = cfg.run(|serial| plan.all(serial))?;
    Ok((if cfg.dedup { dedup_isomorphic(graphs) } else { graphs }, stats))
}

/// Exact `regex(n, F)` with a witness.
#[derive(Debug, Clone)]
pub struct OracleValue {
    pub n: usize,
    pub value: usize,
    pub witness: Graph,
    pub nodes: u64,
}

/// Tries `d = n-1, n-2, ...` and stops at the first degree with a witness;
/// `0` with the edgeless graph when nothing else works.
pub fn regex_oracle(n: usize, forbidden: &Forbidden, cfg: &OracleConfig) -> Result<OracleValue> {
    cfg.admit(n)?;
    if n == 0 {
        return Err(invalid("n must be positive"));
    }
    if forbidden.to_graph()?.edge_count() == 0 {
        return Err(invalid(format!("{forbidden} has no edges")));
    }
    let mut nodes = 0;
    for d in (1..n).rev() {
        let (found, stats) = exists_regular_free(&SearchSpec::exists(n, d, forbidden.clone()), cfg)?;
        nodes += stats.nodes;
        if let Some(witness) = found {
            return Ok(OracleValue { n, value: d, witness, nodes });
        }
    }
    Ok(OracleValue { n, value: 0, witness: Graph::empty(n)?, nodes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::verify;
    use crate::graph::{disjoint_union, make_complete, make_cycle};
    use crate::trees::Tree;

    fn cfg() -> OracleConfig {
        OracleConfig::default()
    }

    fn tree(s: &str) -> Forbidden {
        s.parse().unwrap()
    }

    #[test]
    fn parity_short_circuit() {
        let (g, stats) = exists_regular_free(&SearchSpec::exists(7, 3, Forbidden::Clique(4)), &cfg()).unwrap();
        assert!(g.is_none());
        assert_eq!(stats.nodes, 0);
    }

    #[test]
    fn two_k4_is_the_cubic_p5_free_graph() {
        let (g, _) = exists_regular_free(&SearchSpec::exists(8, 3, tree("P5")), &cfg()).unwrap();
        let k4 = make_complete(4).unwrap();
        assert_eq!(g.unwrap(), disjoint_union(&[k4.clone(), k4]).unwrap());
    }

    #[test]
    fn triangle_free_two_regular_on_nine() {
        let (g, _) = exists_regular_free(&SearchSpec::exists(9, 2, Forbidden::Clique(3)), &cfg()).unwrap();
        let g = g.unwrap();
        assert!(verify(&g, &Forbidden::Clique(3), 2).valid);
    }

    #[test]
    fn witness_is_lex_least() {
        // lex-least 2-regular graph on 6 vertices is two triangles
        let (g, _) = exists_regular_free(&SearchSpec::exists(6, 2, Forbidden::Clique(4)), &cfg()).unwrap();
        let c3 = make_cycle(3).unwrap();
        assert_eq!(g.unwrap(), disjoint_union(&[c3.clone(), c3]).unwrap());
    }

    #[test]
    fn oracle_values() {
        let v = regex_oracle(5, &Forbidden::Clique(3), &cfg()).unwrap();
        assert_eq!(v.value, 2);
        assert_eq!(regex_oracle(9, &Forbidden::Clique(4), &cfg()).unwrap().value, 6);
        assert_eq!(regex_oracle(9, &tree("P4"), &cfg()).unwrap().value, 2);
        let v = regex_oracle(4, &tree("P4,P4"), &cfg()).unwrap();
        assert_eq!(v.value, 3);
    }

    #[test]
    fn k4_free_quintic_on_eight() {
        // above 2·⌊8/3⌋ = 4: the complement of C_3 ⊔ C_5
        let v = regex_oracle(8, &Forbidden::Clique(4), &cfg()).unwrap();
        assert_eq!(v.value, 5);
        let co = disjoint_union(&[make_cycle(3).unwrap(), make_cycle(5).unwrap()]).unwrap().complement();
        assert!(isomorphic(&v.witness, &co));
    }

    #[test]
    fn enumeration_examples() {
        let mut c = cfg();
        c.dedup = true;
        let (gs, _) = enumerate_regular_free(&SearchSpec::enumerate(4, 3, Forbidden::Clique(5)), &c).unwrap();
        assert_eq!(gs, vec![make_complete(4).unwrap()]);
        let (gs, _) = enumerate_regular_free(&SearchSpec::enumerate(8, 3, tree("P5")), &c).unwrap();
        assert_eq!(gs.len(), 1);
        let (gs, _) = enumerate_regular_free(&SearchSpec::enumerate(6, 3, Forbidden::Tree(Tree::a_tree(6).unwrap())), &c).unwrap();
        assert_eq!(gs.len(), 1);
        assert_eq!(classify_components_shape(&gs[0], 6).shapes, vec![ComponentShape::BipartiteTMinus3]);
    }

    #[test]
    fn serial_and_parallel_agree() {
        let spec = SearchSpec::enumerate(10, 3, tree("P6"));
        let serial = OracleConfig { workers: Some(1), ..cfg() };
        let par = OracleConfig { workers: Some(4), ..cfg() };
        assert_eq!(enumerate_regular_free(&spec, &serial).unwrap().0, enumerate_regular_free(&spec, &par).unwrap().0);
        let spec = SearchSpec::exists(10, 4, Forbidden::Clique(4));
        assert_eq!(exists_regular_free(&spec, &serial).unwrap().0, exists_regular_free(&spec, &par).unwrap().0);
    }

    #[test]
    fn refusals_and_bad_input() {
        assert!(matches!(regex_oracle(15, &Forbidden::Clique(4), &cfg()), Err(Error::Refused { n: 15, bound: 14 })));
        let wide = OracleConfig { max_n: 100, ..cfg() };
        assert!(matches!(regex_oracle(65, &Forbidden::Clique(4), &wide), Err(Error::Refused { bound: 64, .. })));
        assert!(exists_regular_free(&SearchSpec::exists(5, 5, Forbidden::Clique(3)), &cfg()).is_err());
        assert!(regex_oracle(5, &Forbidden::Clique(1), &cfg()).is_err());
        assert!(enumerate_regular_free(&SearchSpec::exists(5, 2, Forbidden::Clique(3)), &cfg()).is_err());
    }

    #[test]
    fn matches_naive_enumeration() {
        let patterns = [Forbidden::Clique(3), Forbidden::Clique(4), tree("P4"), tree("P5"), tree("star:4"), tree("P3,P3")];
        let dedup = OracleConfig { dedup: true, ..cfg() };
        for n in 1..=7 {
            for d in 0..n {
                let regular: Vec<Graph> = all_graphs(n, |_, rows| rows.iter().all(|r| r.count_ones() as usize == d)).unwrap().collect();
                for f in &patterns {
                    let naive: Vec<Graph> = regular.iter().filter(|g| crate::patterns::find_forbidden(g, f).is_none()).cloned().collect();
                    let (found, _) = exists_regular_free(&SearchSpec::exists(n, d, f.clone()), &cfg()).unwrap();
                    assert_eq!(found.as_ref(), naive.iter().min_by_key(|g| lex_key(g)), "n={n} d={d} {f}");
                    let (classes, _) = enumerate_regular_free(&SearchSpec::enumerate(n, d, f.clone()), &dedup).unwrap();
                    assert_eq!(classes.len(), dedup_isomorphic(naive).len(), "n={n} d={d} {f}");
                }
            }
        }
    }

    /// Row-major neighbour lists above the diagonal, the order the search uses.
    fn lex_key(g: &Graph) -> Vec<Vec<usize>> {
        (0..g.vertex_count()).map(|i| g.neighbors(i).filter(|&j| j > i).collect()).collect()
    }
}
