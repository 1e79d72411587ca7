//! Disjoint-union witnesses for trees.

use serde::Serialize;

use super::{verify, WitnessCertificate};
use crate::error::{infeasible, invalid, Result};
use crate::formulas::CaseTag;
use crate::graph::{disjoint_union, make_complete, make_complete_multipartite, Graph, PartSpec};
use crate::patterns::Forbidden;
use crate::trees::{classify, Tree};

/// `n = a·x + b·y` with the largest possible `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub a: usize,
    pub b: usize,
    pub x: usize,
    pub y: usize,
}

pub fn decompose(n: usize, x: usize, y: usize) -> Option<Decomposition> {
    if x == 0 {
        return None;
    }
    (0..=n / x).rev().find_map(|a| {
        let rest = n - a * x;
        match (rest, y) {
            (0, _) => Some(Decomposition { a, b: 0, x, y }),
            (_, 0) => None,
            _ if rest.is_multiple_of(y) => Some(Decomposition { a, b: rest / y, x, y }),
            _ => None,
        }
    })
}

/// `K_k` minus a perfect matching (`k` even).
fn cocktail_party(k: usize) -> Result<Graph> {
    let mut g = make_complete(k)?;
    for i in (0..k).step_by(2) {
        g.remove(i, i + 1);
    }
    Ok(g)
}

/// Circulant `d`-regular graph on `n` vertices: `i ~ i ± 1..=d/2`, plus the
/// antipodal vertex when `d` is odd.
pub fn regular_graph(n: usize, d: usize) -> Result<Graph> {
    if d >= n.max(1) && !(n == 0 && d == 0) {
        return Err(invalid(format!("no {d}-regular graph on {n} vertices")));
    }
    if n * d % 2 == 1 {
        return Err(invalid(format!("n·d = {} is odd", n * d)));
    }
    let mut g = Graph::empty(n)?;
    for i in 0..n {
        for j in 1..=d / 2 {
            g.insert(i, (i + j) % n);
        }
        if d % 2 == 1 {
            g.insert(i, (i + n / 2) % n);
        }
    }
    Ok(g)
}

fn union_of(d: Decomposition, first: &Graph, second: &Graph) -> Result<Graph> {
    let mut parts = vec![first.clone(); d.a];
    parts.extend(std::iter::repeat_n(second.clone(), d.b));
    disjoint_union(&parts)
}

fn two_kinds(n: usize, first: Graph, second: Graph, step: &str) -> Result<Graph> {
    let (x, y) = (first.vertex_count(), second.vertex_count());
    let d = decompose(n, x, y).ok_or_else(|| infeasible(step, format!("{n} is not of the form a·{x} + b·{y}")))?;
    union_of(d, &first, &second)
}

type Builder = Box<dyn Fn() -> Result<Graph>>;

/// Candidate constructions at degree `d` for the tree, in the order the
/// branch conditions list them.
fn candidates(n: usize, tr: &Tree, d: usize) -> Result<(CaseTag, Vec<(&'static str, Builder)>)> {
    let t = tr.vertex_count();
    let class = classify(tr)?;
    let mut out: Vec<(&'static str, Builder)> = Vec::new();
    let tag = if d + 2 == t {
        if n.is_multiple_of(t - 1) {
            out.push(("copies of K_{t-1}", Box::new(move || two_kinds(n, make_complete(t - 1)?, Graph::empty(0)?, "copies of K_{t-1}"))));
        }
        if class.is_star {
            out.push(("(t-2)-regular circulant", Box::new(move || regular_graph(n, t - 2))));
        }
        CaseTag::TreeT2
    } else if d + 3 == t {
        if t % 2 == 1 {
            out.push((
                "K_{t-1} minus a perfect matching with K_{t-2}",
                Box::new(move || two_kinds(n, cocktail_party(t - 1)?, make_complete(t - 2)?, "a(t-1) + b(t-2)")),
            ));
        }
        if n.is_multiple_of(t - 2) {
            out.push(("copies of K_{t-2}", Box::new(move || two_kinds(n, make_complete(t - 2)?, Graph::empty(0)?, "copies of K_{t-2}"))));
        }
        if class.is_star {
            out.push(("(t-3)-regular circulant", Box::new(move || regular_graph(n, t - 3))));
        }
        if class.is_almost_star && t >= 4 {
            out.push((
                "K_{t-2} with K_{t-3,t-3}",
                Box::new(move || {
                    let kbb = make_complete_multipartite(&PartSpec::new(vec![t - 3, t - 3])?)?;
                    two_kinds(n, make_complete(t - 2)?, kbb, "a(t-2) + b(2t-6)")
                }),
            ));
        }
        CaseTag::TreeT3
    } else if d + 4 == t {
        if t.is_multiple_of(2) {
            out.push((
                "K_{t-2} minus a perfect matching with K_{t-3}",
                Box::new(move || two_kinds(n, cocktail_party(t - 2)?, make_complete(t - 3)?, "a(t-2) + b(t-3)")),
            ));
        }
        CaseTag::TreeT4
    } else {
        return Err(invalid(format!("degree {d} is not one of t-2, t-3, t-4 for t = {t}")));
    };
    Ok((tag, out))
}

/// Builds and certifies a `d`-regular `T`-free graph on `n` vertices, where
/// `d` is one of the branch values `t-2`, `t-3`, `t-4`.
pub fn tree_witness(n: usize, tr: &Tree, d: usize) -> Result<WitnessCertificate> {
    let (tag, builders) = candidates(n, tr, d)?;
    let forbidden = Forbidden::Tree(tr.clone());
    let mut first_invalid = None;
    let mut last_err = None;
    for (_, build) in &builders {
        match build() {
            Ok(g) => {
                let mut cert = verify(&g, &forbidden, d);
                cert.case_tag = Some(tag);
                if cert.valid {
                    return Ok(cert);
                }
                first_invalid.get_or_insert(cert);
            }
            Err(e) => last_err = Some(e),
        }
    }
    if let Some(cert) = first_invalid {
        return Ok(cert);
    }
    Err(last_err.unwrap_or_else(|| infeasible("tree construction", format!("no construction applies at degree {d}"))))
}
