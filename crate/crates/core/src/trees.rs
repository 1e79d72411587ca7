//! Tree patterns, named families and their classification.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::graph::Graph;

/// A tree on `t` vertices labelled `0..t`. Construction validates that the
/// edge list is connected and acyclic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    t: usize,
    edges: Vec<(usize, usize)>,
}

impl Tree {
    pub fn new(t: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if t == 0 {
            return Err(invalid("a tree needs at least one vertex"));
        }
        if edges.len() != t - 1 {
            return Err(invalid(format!(
                "a tree on {t} vertices has {} edges, got {}",
                t - 1,
                edges.len()
            )));
        }
        let g = Graph::from_edges(t, edges.iter().copied())?;
        if crate::patterns::components(&g).len() != 1 {
            return Err(invalid("edge list is not connected"));
        }
        Ok(Tree { t, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.t
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn to_graph(&self) -> Graph {
        Graph::from_edges(self.t, self.edges.iter().copied()).expect("validated at construction")
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.t];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Proper 2-colouring with vertex 0 in class 0.
    pub fn two_coloring(&self) -> Vec<u8> {
        let g = self.to_graph();
        let mut color = vec![u8::MAX; self.t];
        color[0] = 0;
        let mut stack = vec![0];
        while let Some(u) = stack.pop() {
            for v in g.neighbors(u) {
                if color[v] == u8::MAX {
                    color[v] = 1 - color[u];
                    stack.push(v);
                }
            }
        }
        color
    }

    /// Path on `t >= 1` vertices.
    pub fn path(t: usize) -> Result<Self> {
        if t == 0 {
            return Err(invalid("path needs t >= 1"));
        }
        Tree::new(t, (1..t).map(|i| (i - 1, i)).collect())
    }

    /// Star `K_{1,t-1}` on `t >= 2` vertices, centre 0.
    pub fn star(t: usize) -> Result<Self> {
        if t < 2 {
            return Err(invalid("star needs t >= 2"));
        }
        Tree::new(t, (1..t).map(|i| (0, i)).collect())
    }

    /// `A_t` for `t >= 5`: vertex 0 of degree `t-3` and vertex 2 of degree 2
    /// share the neighbour 1.
    pub fn a_tree(t: usize) -> Result<Self> {
        if t < 5 {
            return Err(invalid("A_t needs t >= 5"));
        }
        let mut edges = vec![(0, 1), (1, 2), (2, 3)];
        edges.extend((4..t).map(|i| (0, i)));
        Tree::new(t, edges)
    }

    /// Double star: adjacent centres 0 and 1 carrying `p` and `q` leaves.
    pub fn double_star(p: usize, q: usize) -> Result<Self> {
        if p == 0 || q == 0 {
            return Err(invalid("double star needs p, q >= 1"));
        }
        let mut edges = vec![(0, 1)];
        edges.extend((0..p).map(|i| (0, 2 + i)));
        edges.extend((0..q).map(|i| (1, 2 + p + i)));
        Tree::new(p + q + 2, edges)
    }

    /// Spider: centre 0 with legs of the given lengths.
    pub fn spider(legs: &[usize]) -> Result<Self> {
        if legs.is_empty() || legs.contains(&0) {
            return Err(invalid("spider needs at least one leg, each of length >= 1"));
        }
        let mut edges = Vec::new();
        let mut next = 1;
        for &len in legs {
            let mut prev = 0;
            for _ in 0..len {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
        }
        Tree::new(next, edges)
    }
}

/// Named tree families accepted by [`make_named`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NamedTree {
    Path(usize),
    Star(usize),
    A(usize),
    DoubleStar(usize, usize),
    Spider(Vec<usize>),
    Custom(usize, Vec<(usize, usize)>),
}

pub fn make_named(kind: &NamedTree) -> Result<Tree> {
    match kind {
        NamedTree::Path(t) => Tree::path(*t),
        NamedTree::Star(t) => Tree::star(*t),
        NamedTree::A(t) => Tree::a_tree(*t),
        NamedTree::DoubleStar(p, q) => Tree::double_star(*p, *q),
        NamedTree::Spider(legs) => Tree::spider(legs),
        NamedTree::Custom(t, edges) => Tree::new(*t, edges.clone()),
    }
}

fn parse_num(s: &str, what: &str) -> Result<usize> {
    s.trim()
        .parse()
        .map_err(|_| invalid(format!("expected a number for {what}, got `{s}`")))
}

impl FromStr for NamedTree {
    type Err = Error;

    /// `path:6` (or `P6`), `star:5`, `A:6`, `dstar:2:3`, `spider:1:2:2`, or an explicit
    /// edge list `t; u-v,u-w,...`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some((t, rest)) = s.split_once(';') {
            let t = parse_num(t, "vertex count")?;
            let mut edges = Vec::new();
            for item in rest.split(',').map(str::trim).filter(|x| !x.is_empty()) {
                let (u, v) = item
                    .split_once('-')
                    .ok_or_else(|| invalid(format!("edge `{item}` is not of the form u-v")))?;
                edges.push((parse_num(u, "edge endpoint")?, parse_num(v, "edge endpoint")?));
            }
            return Ok(NamedTree::Custom(t, edges));
        }
        if let Some(t) = s.strip_prefix('P').and_then(|k| k.parse().ok()) {
            return Ok(NamedTree::Path(t));
        }
        let mut fields = s.split(':');
        let kind = fields.next().unwrap_or_default();
        let args = fields.map(|f| parse_num(f, kind)).collect::<Result<Vec<_>>>()?;
        match (kind, args.as_slice()) {
            ("path", [t]) => Ok(NamedTree::Path(*t)),
            ("star", [t]) => Ok(NamedTree::Star(*t)),
            ("A", [t]) => Ok(NamedTree::A(*t)),
            ("dstar", [p, q]) => Ok(NamedTree::DoubleStar(*p, *q)),
            ("spider", legs) if !legs.is_empty() => Ok(NamedTree::Spider(legs.to_vec())),
            _ => Err(invalid(format!("unrecognised tree spec `{s}`"))),
        }
    }
}

impl FromStr for Tree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        make_named(&s.parse()?)
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.t)?;
        for (i, (u, v)) in self.edges.iter().enumerate() {
            let sep = if i == 0 { " " } else { "," };
            write!(f, "{sep}{u}-{v}")?;
        }
        Ok(())
    }
}

/// Shape flags of a tree. `bipartition_sizes` is (smaller, larger).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TreeClass {
    pub t: usize,
    pub is_star: bool,
    pub is_almost_star: bool,
    pub is_a_t: bool,
    pub is_double_star: bool,
    pub bipartition_sizes: (usize, usize),
}

pub fn classify(tr: &Tree) -> Result<TreeClass> {
    let t = tr.vertex_count();
    if t < 2 {
        return Err(invalid("classification needs a tree with at least 2 vertices"));
    }
    let deg = tr.degrees();
    let color = tr.two_coloring();
    let ones = color.iter().filter(|&&c| c == 1).count();
    let (small, large) = (ones.min(t - ones), ones.max(t - ones));
    let is_almost_star = small <= 2;
    let is_a_t = t >= 5 && small == 2 && {
        let small_class = if ones == small { 1 } else { 0 };
        let mut ds: Vec<usize> = (0..t).filter(|&v| color[v] == small_class).map(|v| deg[v]).collect();
        ds.sort_unstable();
        let mut want = vec![2, t - 3];
        want.sort_unstable();
        ds == want
    };
    Ok(TreeClass {
        t,
        is_star: deg.iter().any(|&d| d == t - 1),
        is_almost_star,
        is_a_t,
        is_double_star: deg.iter().filter(|&&d| d > 1).count() == 2,
        bipartition_sizes: (small, large),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(Tree::new(0, vec![]).is_err());
        assert!(Tree::new(1, vec![]).is_ok());
        assert!(Tree::new(3, vec![(0, 1)]).is_err());
        // right edge count but a cycle plus an isolated vertex
        assert!(Tree::new(4, vec![(0, 1), (1, 2), (2, 0)]).is_err());
        assert!(Tree::new(3, vec![(0, 1), (1, 1)]).is_err());
    }

    #[test]
    fn star_classification() {
        let c = classify(&Tree::star(5).unwrap()).unwrap();
        assert!(c.is_star && c.is_almost_star && !c.is_a_t && !c.is_double_star);
        assert_eq!(c.bipartition_sizes, (1, 4));
    }

    #[test]
    fn a6_classification() {
        let c = classify(&Tree::a_tree(6).unwrap()).unwrap();
        assert!(c.is_a_t && c.is_almost_star && !c.is_star);
        // centre, middle vertex and the degree-2 vertex all exceed degree 1
        assert!(!c.is_double_star);
        assert_eq!(c.bipartition_sizes, (2, 4));
    }

    #[test]
    fn p6_classification() {
        let c = classify(&Tree::path(6).unwrap()).unwrap();
        assert!(!c.is_star && !c.is_almost_star && !c.is_a_t && !c.is_double_star);
        assert_eq!(c.bipartition_sizes, (3, 3));
    }

    #[test]
    fn short_paths_follow_the_definition() {
        for (t, star, almost) in [(2, true, true), (3, true, true), (4, false, true), (5, false, true), (6, false, false)] {
            let c = classify(&Tree::path(t).unwrap()).unwrap();
            assert_eq!((c.is_star, c.is_almost_star), (star, almost), "P_{t}");
        }
        // P_5 colours as {0,2,4} and {1,3}
        assert_eq!(classify(&Tree::path(5).unwrap()).unwrap().bipartition_sizes, (2, 3));
        assert!(classify(&Tree::path(1).unwrap()).is_err());
    }

    #[test]
    fn a5_is_the_five_path() {
        let a5 = Tree::a_tree(5).unwrap();
        let deg = a5.degrees();
        assert_eq!((deg[0], deg[2]), (2, 2));
        assert!(classify(&a5).unwrap().is_a_t);
        assert!(classify(&Tree::path(5).unwrap()).unwrap().is_a_t);
    }

    #[test]
    fn double_star_shape() {
        let t = Tree::double_star(2, 2).unwrap();
        assert_eq!(t.degrees().iter().filter(|&&d| d > 1).count(), 2);
        let c = classify(&t).unwrap();
        assert!(c.is_double_star && !c.is_almost_star && !c.is_a_t);
        let c = classify(&Tree::double_star(1, 3).unwrap()).unwrap();
        assert!(c.is_double_star && c.is_almost_star && !c.is_a_t);
        assert!(Tree::double_star(0, 2).is_err());
        assert!(Tree::a_tree(4).is_err());
    }

    #[test]
    fn parse_specs() {
        assert_eq!("path:6".parse::<Tree>().unwrap(), Tree::path(6).unwrap());
        assert_eq!("star:5".parse::<Tree>().unwrap(), Tree::star(5).unwrap());
        assert_eq!("A:6".parse::<Tree>().unwrap(), Tree::a_tree(6).unwrap());
        assert_eq!("dstar:2:3".parse::<Tree>().unwrap(), Tree::double_star(2, 3).unwrap());
        let custom: Tree = "4; 0-1,1-2,1-3".parse().unwrap();
        assert!(classify(&custom).unwrap().is_star);
        assert_eq!(custom.to_string().parse::<Tree>().unwrap(), custom);
        assert!("path".parse::<Tree>().is_err());
        assert!("blob:3".parse::<Tree>().is_err());
        assert!("3; 0-1".parse::<Tree>().is_err());
        let spider: Tree = "spider:1:2".parse().unwrap();
        assert_eq!(spider.edges(), &[(0, 1), (0, 2), (2, 3)]);
    }
}
