//! 2-regular witnesses for patterns whose regular Turán number is positive
//! for all large `n`.

use super::tree::decompose;
use super::{verify, WitnessCertificate};
use crate::error::{infeasible, invalid, Result};
use crate::formulas::prop4_infinitely_zero;
use crate::graph::{disjoint_union, make_cycle, Graph};
use crate::patterns::Forbidden;

fn cycles(lengths: &[usize]) -> Result<Graph> {
    let parts = lengths.iter().map(|&k| make_cycle(k)).collect::<Result<Vec<_>>>()?;
    disjoint_union(&parts)
}

/// Cycle lengths of the candidate 2-regular graphs on `n` vertices: `C_n`,
/// then `a·C_4 ⊔ b·C_3`, then `(a-1)·C_3 ⊔ C_{3+p}` with `n = 3a + p`.
fn candidates(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if n < 3 {
        return out;
    }
    out.push(vec![n]);
    if let Some(d) = decompose(n, 4, 3) {
        let mut lens = vec![4; d.a];
        lens.extend(std::iter::repeat_n(3, d.b));
        out.push(lens);
    }
    let (a, p) = (n / 3, n % 3);
    let mut lens = vec![3; a - 1];
    lens.push(3 + p);
    out.push(lens);
    out.dedup();
    out
}

/// A 2-regular `F`-free graph on `n` vertices, for patterns `F` outside the
/// family whose regular Turán number vanishes infinitely often.
pub fn zero_witness(n: usize, forbidden: &Forbidden) -> Result<WitnessCertificate> {
    if prop4_infinitely_zero(&forbidden.components()?)? {
        return Err(invalid(format!(
            "{forbidden} has regular Turán number 0 for infinitely many n; no uniform witness exists"
        )));
    }
    for lens in candidates(n) {
        let cert = verify(&cycles(&lens)?, forbidden, 2);
        if cert.valid {
            return Ok(cert);
        }
    }
    Err(infeasible("2-regular witness", format!("no union of cycles on {n} vertices avoids {forbidden}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::components;
    use crate::trees::Tree;

    fn cycle_lengths(c: &WitnessCertificate) -> Vec<usize> {
        components(&c.graph).iter().map(|k| k.vertices.len()).collect()
    }

    #[test]
    fn claw_gives_long_cycle() {
        let c = zero_witness(10, &Forbidden::Tree(Tree::star(4).unwrap())).unwrap();
        assert!(c.valid);
        assert_eq!(c.graph, make_cycle(10).unwrap());
    }

    #[test]
    fn p5_gives_short_cycles() {
        let c = zero_witness(11, &Forbidden::Tree(Tree::path(5).unwrap())).unwrap();
        assert_eq!(cycle_lengths(&c), vec![4, 4, 3]);
    }

    #[test]
    fn two_p4_gives_triangles() {
        let f: Forbidden = "P4,P4".parse().unwrap();
        let c = zero_witness(11, &f).unwrap();
        assert_eq!(cycle_lengths(&c), vec![3, 3, 5]);
    }

    #[test]
    fn cycle_pattern_skips_its_own_length() {
        let f: Forbidden = "C7".parse().unwrap();
        let c = zero_witness(7, &f).unwrap();
        assert!(c.valid);
        assert_eq!(cycle_lengths(&c), vec![4, 3]);
        assert_eq!(zero_witness(9, &f).unwrap().graph, make_cycle(9).unwrap());
    }

    #[test]
    fn rejects_infinitely_zero_patterns() {
        let f: Forbidden = "P3,P4".parse().unwrap();
        assert!(matches!(zero_witness(11, &f), Err(crate::Error::InvalidArgument(_))));
    }

    #[test]
    fn tiny_orders() {
        assert!(zero_witness(2, &Forbidden::Tree(Tree::path(5).unwrap())).is_err());
        assert_eq!(candidates(4), vec![vec![4]]);
    }
}
