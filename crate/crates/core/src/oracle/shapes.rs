//! Component shapes allowed in extremal tree-free regular graphs.

use std::fmt;

use serde::Serialize;

use crate::graph::Graph;
use crate::patterns::{components, is_complete_multipartite};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "shape", rename_all = "snake_case")]
pub enum ComponentShape {
    /// `K_{t-1}`
    CompleteTMinus1,
    /// `K_{t-2}`
    CompleteTMinus2,
    /// `K_{t-3,t-3}`
    BipartiteTMinus3,
    /// Complete `(k+1)`-partite with parts of size `(t-3)/k`.
    BalancedMultipartite { parts: usize, part_size: usize },
    Unclassified { order: usize },
}

impl fmt::Display for ComponentShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComponentShape::CompleteTMinus1 => write!(f, "K_{{t-1}}"),
            ComponentShape::CompleteTMinus2 => write!(f, "K_{{t-2}}"),
            ComponentShape::BipartiteTMinus3 => write!(f, "K_{{t-3,t-3}}"),
            ComponentShape::BalancedMultipartite { parts, part_size } => write!(f, "K_{{{parts}x{part_size}}}"),
            ComponentShape::Unclassified { order } => write!(f, "unclassified({order})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShapeReport {
    pub t: usize,
    /// One entry per component, in order of least vertex.
    pub shapes: Vec<ComponentShape>,
}

impl ShapeReport {
    pub fn all_classified(&self) -> bool {
        !self.shapes.iter().any(|s| matches!(s, ComponentShape::Unclassified { .. }))
    }

    /// True iff every component is one of `allowed`.
    pub fn only(&self, allowed: &[ComponentShape]) -> bool {
        self.shapes.iter().all(|s| allowed.contains(s))
    }
}

fn shape_of(c: &Graph, t: usize) -> ComponentShape {
    let m = c.vertex_count();
    let complete = c.edge_count() == m * m.saturating_sub(1) / 2;
    if complete && m + 1 == t {
        return ComponentShape::CompleteTMinus1;
    }
    if complete && m + 2 == t {
        return ComponentShape::CompleteTMinus2;
    }
    let unclassified = ComponentShape::Unclassified { order: m };
    if t <= 3 {
        return unclassified;
    }
    let Some(spec) = is_complete_multipartite(c) else { return unclassified };
    let sizes = &spec.part_sizes;
    let size = sizes[0];
    let k = sizes.len() - 1;
    if k == 0 || sizes.iter().any(|&s| s != size) || !(t - 3).is_multiple_of(k) || (t - 3) / k != size {
        return unclassified;
    }
    if k == 1 {
        ComponentShape::BipartiteTMinus3
    } else {
        ComponentShape::BalancedMultipartite { parts: k + 1, part_size: size }
    }
}

/// Matches each component of `g` against the shapes for tree order `t`.
pub fn classify_components_shape(g: &Graph, t: usize) -> ShapeReport {
    ShapeReport { t, shapes: components(g).iter().map(|c| shape_of(&c.graph, t)).collect() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{disjoint_union, make_complete, make_complete_multipartite, make_cycle, PartSpec};

    #[test]
    fn k4_pairs() {
        let k4 = make_complete(4).unwrap();
        let r = classify_components_shape(&disjoint_union(&[k4.clone(), k4]).unwrap(), 5);
        assert_eq!(r.shapes, vec![ComponentShape::CompleteTMinus1; 2]);
        assert!(r.all_classified());
    }

    #[test]
    fn allowed_shapes_at_six() {
        let k33 = make_complete_multipartite(&PartSpec::new(vec![3, 3]).unwrap()).unwrap();
        let g = disjoint_union(&[make_complete(4).unwrap(), k33]).unwrap();
        let r = classify_components_shape(&g, 6);
        assert_eq!(r.shapes, vec![ComponentShape::CompleteTMinus2, ComponentShape::BipartiteTMinus3]);
        assert!(r.only(&[ComponentShape::CompleteTMinus2, ComponentShape::BipartiteTMinus3]));
    }

    #[test]
    fn balanced_multipartite() {
        // t = 9: k = 2 gives K_{3,3,3}
        let g = make_complete_multipartite(&PartSpec::new(vec![3, 3, 3]).unwrap()).unwrap();
        let r = classify_components_shape(&g, 9);
        assert_eq!(r.shapes, vec![ComponentShape::BalancedMultipartite { parts: 3, part_size: 3 }]);
        let g = make_complete_multipartite(&PartSpec::new(vec![2, 2, 2]).unwrap()).unwrap();
        assert!(!classify_components_shape(&g, 9).all_classified());
    }

    #[test]
    fn cycle_is_unclassified() {
        let r = classify_components_shape(&make_cycle(5).unwrap(), 5);
        assert_eq!(r.shapes, vec![ComponentShape::Unclassified { order: 5 }]);
        assert!(!r.all_classified());
    }
}
