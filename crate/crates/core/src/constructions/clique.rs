//! `K_{r+1}`-free regular subgraphs of the Turán graph.
//!
//! Layout of `T(n, r)` with `n = qr + s`: parts `0..s` have `q + 1`
//! vertices (minimum degree `delta`), parts `s..r` have `q` vertices
//! (degree `delta + 1` when `s > 0`). Every construction deletes a
//! [`RemovalPlan`] whose quotas bring all degrees down to the target value.

use std::ops::Range;

use serde::Serialize;

use super::hamilton::{hamiltonian_cycle, matching_across};
use super::{verify, WitnessCertificate};
use crate::error::{infeasible, Error, Result};
use crate::formulas::{regex_clique, CaseTag, CliqueParams, RegexResult};
use crate::graph::{make_turan, remove_edge_set, Graph, PartSpec, RemovalPlan};
use crate::patterns::Forbidden;

/// A removal plan together with the Turán graph it applies to.
#[derive(Debug, Clone, Serialize)]
pub struct CliquePlan {
    pub result: RegexResult,
    pub parts: PartSpec,
    pub plan: RemovalPlan,
    /// `(max-degree vertex, other endpoint)` edges in the order they were
    /// assigned; empty for the constructions that do not use them.
    pub spokes: Vec<(usize, usize)>,
    #[serde(skip)]
    pub turan: Graph,
}

struct Layout<'a> {
    turan: &'a Graph,
    ranges: Vec<Range<usize>>,
    part_of: Vec<usize>,
}

impl Layout<'_> {
    /// Groups `subset` by Turán part, keeping part order.
    fn classes(&self, subset: &[usize]) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.ranges.len()];
        for &v in subset {
            classes[self.part_of[v]].push(v);
        }
        classes.retain(|c| !c.is_empty());
        classes
    }

    fn hamiltonian_on(&self, subset: &[usize], step: &str) -> Result<Vec<usize>> {
        let sub = self.turan.induced(subset);
        let cycle = hamiltonian_cycle(&sub).map_err(|e| infeasible(step, e.to_string()))?;
        Ok(cycle.into_iter().map(|i| subset[i]).collect())
    }

    /// All edges of a Hamiltonian cycle on `subset` (degree drop 2).
    fn full_cycle(&self, subset: &[usize], step: &str) -> Result<Vec<(usize, usize)>> {
        if subset.is_empty() {
            return Ok(vec![]);
        }
        let c = self.hamiltonian_on(subset, step)?;
        Ok((0..c.len()).map(|i| (c[i], c[(i + 1) % c.len()])).collect())
    }

    /// Every other edge of a Hamiltonian cycle on `subset` (degree drop 1).
    fn alternate_cycle(&self, subset: &[usize], step: &str) -> Result<Vec<(usize, usize)>> {
        if subset.len() % 2 == 1 {
            return Err(infeasible(step, format!("odd vertex set of size {} has no alternating cycle", subset.len())));
        }
        match subset {
            [] => Ok(vec![]),
            [a, b] if self.turan.has_edge(*a, *b) => Ok(vec![(*a, *b)]),
            [_, _] => Err(infeasible(step, "two vertices in the same part")),
            _ => {
                let c = self.hamiltonian_on(subset, step)?;
                Ok(c.chunks(2).map(|p| (p[0], p[1])).collect())
            }
        }
    }

    fn matching_on(&self, subset: &[usize], step: &str) -> Result<Vec<(usize, usize)>> {
        matching_across(&self.classes(subset)).map_err(|e| infeasible(step, e.to_string()))
    }

    /// `count` distinct vertices dealt round-robin over `parts` (ascending
    /// part index, ascending label within a part).
    fn round_robin(&self, parts: Range<usize>, count: usize, step: &str) -> Result<Vec<usize>> {
        let width = parts.len();
        (0..count)
            .map(|k| {
                let range = &self.ranges[parts.start + k % width];
                let v = range.start + k / width;
                if v < range.end {
                    Ok(v)
                } else {
                    Err(infeasible(step, format!("parts {parts:?} cannot host {count} distinct endpoints")))
                }
            })
            .collect()
    }
}

fn minus(all: &[usize], taken: &[usize]) -> Vec<usize> {
    all.iter().copied().filter(|v| !taken.contains(v)).collect()
}

/// The deletion plan realising `regex_clique(n, r)` inside `T(n, r)`.
pub fn clique_removal_plan(n: usize, r: usize) -> Result<CliquePlan> {
    let result = regex_clique(n, r)?;
    let p = CliqueParams::new(n, r)?;
    let (q, s) = (p.q, p.s);
    let (turan, parts) = make_turan(n, r)?;
    let layout = Layout {
        turan: &turan,
        ranges: parts.ranges(),
        part_of: parts.part_of(),
    };
    let min_vertices: Vec<usize> = (0..n).filter(|&v| layout.part_of[v] < s).collect();
    let max_vertices: Vec<usize> = (0..n).filter(|&v| layout.part_of[v] >= s).collect();
    let mut spokes = Vec::new();

    let edges: Vec<(usize, usize)> = match result.case_tag {
        CaseTag::T1I => vec![],
        CaseTag::T1III => layout.matching_on(&max_vertices, "perfect matching on the maximum-degree vertices")?,
        CaseTag::T1IV => match s {
            0 => vec![],
            1 => layout.ranges[1].clone().zip(layout.ranges[2].clone()).collect(),
            _ => {
                let (a, b, c) = (&layout.ranges[0], &layout.ranges[1], &layout.ranges[2]);
                let mut e = Vec::with_capacity(2 * q + 1);
                for i in 0..q {
                    e.push((a.start + i, c.start + i));
                    e.push((c.start + i, b.start + i));
                }
                e.push((a.start + q, b.start + q));
                e
            }
        },
        CaseTag::T2I if s >= 2 && r - s >= 2 => {
            let mut e = layout.full_cycle(&max_vertices, "Hamiltonian cycle on the maximum-degree vertices")?;
            e.extend(layout.alternate_cycle(&min_vertices, "alternating cycle on the minimum-degree vertices")?);
            e
        }
        CaseTag::T2I if s == 1 => {
            let targets = layout.round_robin(1..r, q + 1, "spokes from the minimum-degree part")?;
            spokes = min_vertices.iter().copied().zip(targets.iter().copied()).map(|(a, b)| (b, a)).collect();
            let mut e = spokes.clone();
            e.extend(layout.matching_on(&targets, "1-factor on the spoke endpoints")?);
            let rest = minus(&max_vertices, &targets);
            if matches!(rest.len(), 1 | 2) {
                return Err(infeasible("Hamiltonian cycle on the untouched maximum-degree vertices", format!("only {} vertices remain", rest.len())));
            }
            e.extend(layout.full_cycle(&rest, "Hamiltonian cycle on the untouched maximum-degree vertices")?);
            e
        }
        CaseTag::T2I => {
            // r - s = 1: the maximum-degree vertices form the last part
            spokes = spokes_from_max(&layout, &max_vertices, 2, s)?;
            let touched: Vec<usize> = spokes.iter().map(|&(_, b)| b).collect();
            let mut e = spokes.clone();
            e.extend(layout.alternate_cycle(&minus(&min_vertices, &touched), "alternating cycle on the untouched minimum-degree vertices")?);
            e
        }
        CaseTag::T2II => {
            spokes = spokes_from_max(&layout, &max_vertices, 3, s)?;
            let touched: Vec<usize> = spokes.iter().map(|&(_, b)| b).collect();
            let mut untouched = minus(&min_vertices, &touched);
            let mut touched_sorted = touched.clone();
            touched_sorted.sort_unstable();
            if matches!(untouched.len(), 1 | 2) {
                return Err(infeasible("Hamiltonian cycle C1", format!("only {} untouched vertices", untouched.len())));
            }
            untouched.sort_unstable();
            let mut e = spokes.clone();
            e.extend(layout.full_cycle(&untouched, "Hamiltonian cycle C1")?);
            e.extend(layout.alternate_cycle(&touched_sorted, "alternating cycle C2")?);
            e
        }
        CaseTag::T2III => {
            spokes = spokes_from_max(&layout, &max_vertices, 2, s)?;
            let touched: Vec<usize> = spokes.iter().map(|&(_, b)| b).collect();
            let mut e = spokes.clone();
            e.extend(layout.alternate_cycle(&minus(&min_vertices, &touched), "alternating cycle on the untouched minimum-degree vertices")?);
            e
        }
        tag => return Err(Error::InvalidArgument(format!("{tag} is not a clique case"))),
    };

    let plan = RemovalPlan::from_edges(n, edges);
    let expected: Vec<usize> = turan.degrees().iter().map(|&d| d - result.value).collect();
    if plan.quota != expected {
        return Err(infeasible("quota audit", "removal plan does not lower every degree to the target"));
    }
    Ok(CliquePlan { result, parts, plan, spokes, turan })
}

/// `per_vertex` spokes from each maximum-degree vertex, the `j`-th vertex
/// taking dealt endpoints `per_vertex·j ..` over the minimum-degree parts.
fn spokes_from_max(layout: &Layout<'_>, max_vertices: &[usize], per_vertex: usize, s: usize) -> Result<Vec<(usize, usize)>> {
    let targets = layout.round_robin(0..s, per_vertex * max_vertices.len(), "distinct spoke endpoints")?;
    Ok(max_vertices
        .iter()
        .enumerate()
        .flat_map(|(j, &m)| targets[per_vertex * j..per_vertex * (j + 1)].iter().map(move |&t| (m, t)))
        .collect())
}

/// Builds and certifies a `regex_clique(n, r)`-regular `K_{r+1}`-free graph.
pub fn clique_witness(n: usize, r: usize) -> Result<WitnessCertificate> {
    let plan = clique_removal_plan(n, r)?;
    let g = remove_edge_set(&plan.turan, &plan.plan)?;
    let mut cert = verify(&g, &Forbidden::Clique(r + 1), plan.result.value);
    cert.case_tag = Some(plan.result.case_tag);
    Ok(cert)
}
