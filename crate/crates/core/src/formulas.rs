//! Closed forms: Turán quantities, regex for cliques and trees, and the
//! characterisation of patterns with rex = 0 for infinitely many n.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{invalid, Error, Result};
use crate::graph::Graph;
use crate::trees::{classify, Tree};

/// `n = q·r + s` with `0 <= s < r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CliqueParams {
    pub n: usize,
    pub r: usize,
    pub q: usize,
    pub s: usize,
    pub q_even: bool,
    pub r_even: bool,
    pub r_minus_s_even: bool,
}

impl CliqueParams {
    pub fn new(n: usize, r: usize) -> Result<Self> {
        check_range(n, r)?;
        let (q, s) = (n / r, n % r);
        Ok(CliqueParams {
            n,
            r,
            q,
            s,
            q_even: q % 2 == 0,
            r_even: r.is_multiple_of(2),
            r_minus_s_even: (r - s).is_multiple_of(2),
        })
    }
}

fn check_range(n: usize, r: usize) -> Result<()> {
    if r < 1 || r > n {
        return Err(invalid(format!("need 1 <= r <= n, got n = {n}, r = {r}")));
    }
    Ok(())
}

/// Minimum degree of the Turán graph `T(n, r)`.
pub fn delta(n: usize, r: usize) -> Result<usize> {
    let p = CliqueParams::new(n, r)?;
    Ok(if p.s == 0 { n - p.q } else { n - p.q - 1 })
}

/// Edge count `t(n, r)` of the Turán graph.
pub fn turan_edges(n: usize, r: usize) -> Result<usize> {
    let p = CliqueParams::new(n, r)?;
    let squares = p.s * (p.q + 1) * (p.q + 1) + (r - p.s) * p.q * p.q;
    Ok((n * n - squares) / 2)
}

/// Edge bound `t(n,r) - floor(n/r) + 1` for `K_{r+1}`-free graphs that are
/// not r-partite (meaningful for `n >= 2r + 1`).
pub fn brouwer_bound(n: usize, r: usize) -> Result<i64> {
    Ok(turan_edges(n, r)? as i64 - (n / r) as i64 + 1)
}

/// Which branch of the case analysis produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseTag {
    /// `r | n`: the Turán graph is regular.
    T1I,
    /// `1 <= s <= r-2`, `r-s` or `q` even.
    T1III,
    /// `K_4`: `2q` for every residue.
    T1IV,
    /// `q` and `r-s` odd.
    T2I,
    /// `s = r-1`, `q` and `r` even.
    T2II,
    /// `s = r-1`, `q` even, `r` odd.
    T2III,
    TreeT2,
    TreeT3,
    TreeT4,
}

impl CaseTag {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseTag::T1I => "T1_i",
            CaseTag::T1III => "T1_iii",
            CaseTag::T1IV => "T1_iv",
            CaseTag::T2I => "T2_i",
            CaseTag::T2II => "T2_ii",
            CaseTag::T2III => "T2_iii",
            CaseTag::TreeT2 => "TREE_t2",
            CaseTag::TreeT3 => "TREE_t3",
            CaseTag::TreeT4 => "TREE_t4",
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for CaseTag {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// `n·d/2`, kept exact as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rex {
    pub twice: usize,
}

impl Rex {
    /// False when `n·d` is odd, i.e. no such regular graph exists.
    pub fn is_integral(self) -> bool {
        self.twice.is_multiple_of(2)
    }

    pub fn as_f64(self) -> f64 {
        self.twice as f64 / 2.0
    }
}

impl fmt::Display for Rex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integral() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

impl Serialize for Rex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if self.is_integral() {
            s.serialize_u64((self.twice / 2) as u64)
        } else {
            s.serialize_f64(self.as_f64())
        }
    }
}

pub fn rex_from(n: usize, d: usize) -> Rex {
    Rex { twice: n * d }
}

/// Whether a formula value is backed by a verified construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Advisory {
    /// Closed-form value; the theorem only asserts it for large n.
    AsymptoticRegime,
    /// A witness was built and verified at this n.
    CertifiedLowerBound,
}

impl fmt::Display for Advisory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Advisory::AsymptoticRegime => "asymptotic-regime",
            Advisory::CertifiedLowerBound => "certified-lower-bound",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RegexResult {
    pub n: usize,
    pub value: usize,
    pub case_tag: CaseTag,
    pub rex: Rex,
    pub advisory: Advisory,
}

impl RegexResult {
    fn new(n: usize, value: usize, case_tag: CaseTag) -> Self {
        RegexResult {
            n,
            value,
            case_tag,
            rex: rex_from(n, value),
            advisory: Advisory::AsymptoticRegime,
        }
    }
}

/// `regex(n, K_{r+1})` for `r >= 3`.
pub fn regex_clique(n: usize, r: usize) -> Result<RegexResult> {
    if r < 2 {
        return Err(invalid(format!("clique order r + 1 needs r >= 2, got r = {r}")));
    }
    if r == 2 {
        return Err(Error::Unsupported(
            "regex(n, K_3) has no closed form here; use the search oracle".into(),
        ));
    }
    let p = CliqueParams::new(n, r)?;
    let d = delta(n, r)?;
    let (value, tag) = if r == 3 {
        (2 * p.q, CaseTag::T1IV)
    } else if p.s == 0 {
        (d, CaseTag::T1I)
    } else if p.s <= r - 2 {
        if p.r_minus_s_even || p.q_even {
            (d, CaseTag::T1III)
        } else {
            (d - 1, CaseTag::T2I)
        }
    } else if !p.q_even {
        (d - 1, CaseTag::T2I)
    } else if p.r_even {
        (d.saturating_sub(2), CaseTag::T2II)
    } else {
        (d - 1, CaseTag::T2III)
    };
    Ok(RegexResult::new(n, value, tag))
}

/// `regex(n, T)` for a tree on `t >= 2` vertices, branches tested in order
/// `t-2`, `t-3`, `t-4`; the value floors at 0.
pub fn regex_tree(n: usize, tr: &Tree) -> Result<RegexResult> {
    let t = tr.vertex_count();
    if t < 2 {
        return Err(invalid("regex for trees needs t >= 2"));
    }
    if n < 1 {
        return Err(invalid("n must be positive"));
    }
    let class = classify(tr)?;
    let n_even = n.is_multiple_of(2);
    let t_even = t.is_multiple_of(2);
    if n.is_multiple_of(t - 1) || (class.is_star && (t_even || n_even)) {
        return Ok(RegexResult::new(n, t - 2, CaseTag::TreeT2));
    }
    // t >= 3 here: t = 2 always takes the first branch
    if !t_even || n.is_multiple_of(t - 2) || class.is_star || (class.is_almost_star && n_even) {
        return Ok(RegexResult::new(n, t - 3, CaseTag::TreeT3));
    }
    Ok(RegexResult::new(n, t.saturating_sub(4), CaseTag::TreeT4))
}

fn path_order(c: &Graph) -> Option<usize> {
    let n = c.vertex_count();
    let degs = c.degrees();
    let is_path = n >= 1 && c.edge_count() == n - 1 && degs.iter().all(|&d| d <= 2);
    is_path.then_some(n)
}

/// True iff every component with an edge is `P_2` or `P_3`, except for at
/// most one `P_4`. Components must be connected; isolated vertices are
/// ignored since they never affect freeness once `n >= |V(F)|`.
pub fn prop4_infinitely_zero(components: &[Graph]) -> Result<bool> {
    let mut edges = 0;
    for c in components {
        if c.vertex_count() == 0 {
            return Err(invalid("empty component"));
        }
        if crate::patterns::components(c).len() != 1 {
            return Err(invalid("component is not connected"));
        }
        edges += c.edge_count();
    }
    if edges == 0 {
        return Err(invalid("pattern needs at least one edge"));
    }
    let mut p4 = 0;
    for c in components.iter().filter(|c| c.vertex_count() > 1) {
        match path_order(c) {
            Some(2) | Some(3) => {}
            Some(4) => p4 += 1,
            _ => return Ok(false),
        }
    }
    Ok(p4 <= 1)
}
