//! Acceptance suite: one PASS/FAIL line per criterion.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use regexlab::constructions::{clique_witness, hamiltonian_cycle, is_hamiltonian_cycle, zero_witness};
use regexlab::formulas::{brouwer_bound, prop4_infinitely_zero, regex_clique, regex_tree};
use regexlab::graph::degree_profile;
use regexlab::graph6::{decode_graph6_str, encode_graph6};
use regexlab::oracle::{
    all_graphs, classify_components_shape, enumerate_regular_free, exists_regular_free, regex_oracle, ComponentShape,
    OracleConfig, SearchSpec,
};
use regexlab::patterns::{contains_clique, is_r_partite};
use regexlab::{Forbidden, Graph, Tree};

/// Criteria whose failure is a documented property of small `n`, not a
/// defect: the K4 closed form is exceeded at n = 8.
const KNOWN_FAILURES: &[usize] = &[2];

type Check = (&'static str, fn() -> Verdict);

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict { pass, detail: detail.into() }
}

fn forbidden(s: &str) -> Forbidden {
    s.parse().expect("pattern parses")
}

fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Graph::from_edges(n, edges.into_iter().filter(|_| rng.gen_bool(p))).unwrap()
}

fn witness_certification() -> Verdict {
    let mut checked = 0;
    let mut failures = Vec::new();
    // smallest q that worked, per case tag
    let mut min_q: BTreeMap<&str, usize> = BTreeMap::new();
    for r in 4..=6 {
        for q in 2..=6 {
            for s in 0..r {
                let n = q * r + s;
                if n > 45 {
                    continue;
                }
                checked += 1;
                let formula = regex_clique(n, r).unwrap();
                match clique_witness(n, r) {
                    Ok(c) if c.valid && c.claimed_degree == formula.value => {
                        let e = min_q.entry(formula.case_tag.as_str()).or_insert(q);
                        *e = (*e).min(q);
                    }
                    Ok(c) => failures.push(format!("(n={n}, r={r}) certificate regular={} free={}", c.regular, c.free)),
                    Err(e) => failures.push(format!("(n={n}, r={r}) {e}")),
                }
            }
        }
    }
    let mins: Vec<String> = min_q.iter().map(|(k, q)| format!("{k}:q>={q}")).collect();
    verdict(failures.is_empty(), format!("{checked} instances, {} failed {:?}; smallest working q {}", failures.len(), failures, mins.join(" ")))
}

fn k4_oracle() -> Verdict {
    let cfg = OracleConfig::default();
    let mut mismatches = Vec::new();
    for n in 6..=11 {
        let v = regex_oracle(n, &Forbidden::Clique(4), &cfg).unwrap();
        if v.value != 2 * (n / 3) {
            mismatches.push(format!("n={n}: oracle {} vs 2q={} (witness {})", v.value, 2 * (n / 3), encode_graph6(&v.witness)));
        }
    }
    verdict(mismatches.is_empty(), format!("n=6..11; mismatches {mismatches:?}"))
}

fn tree_oracle() -> Verdict {
    let cfg = OracleConfig::default();
    let cases = [(9, "P4", 2), (7, "P5", 2), (8, "P5", 3), (7, "star:5", 2), (8, "star:5", 3), (14, "P6", 2)];
    let mut bad = Vec::new();
    for (n, spec, expected) in cases {
        let tree: Tree = spec.parse().unwrap();
        let formula = regex_tree(n, &tree).unwrap().value;
        let oracle = regex_oracle(n, &Forbidden::Tree(tree), &cfg).unwrap();
        if formula != expected || oracle.value != expected {
            bad.push(format!("({n},{spec}) formula {formula} oracle {}", oracle.value));
        }
    }
    verdict(bad.is_empty(), format!("{} cases; disagreements {bad:?}", cases.len()))
}

/// Every enumerated cubic `pattern`-free graph on each `n` has only the
/// `allowed` component shapes for tree order `t`.
fn structure(pattern: &str, t: usize, orders: &[usize], allowed: &[ComponentShape]) -> (bool, String) {
    let cfg = OracleConfig::default();
    let mut ok = true;
    let mut counts = Vec::new();
    for &n in orders {
        let (graphs, _) = enumerate_regular_free(&SearchSpec::enumerate(n, 3, forbidden(pattern)), &cfg).unwrap();
        let stray = graphs.iter().filter(|g| !classify_components_shape(g, t).only(allowed)).count();
        ok &= stray == 0;
        counts.push(format!("n={n}: {} graphs, {stray} outside", graphs.len()));
    }
    (ok, counts.join(", "))
}

fn cubic_p5_free() -> Verdict {
    let (ok, detail) = structure("P5", 5, &[8, 12], &[ComponentShape::CompleteTMinus1]);
    verdict(ok, format!("only K4 components; {detail}"))
}

fn cubic_a6_and_p6_free() -> Verdict {
    let allowed = [ComponentShape::CompleteTMinus2, ComponentShape::BipartiteTMinus3];
    let (a_ok, a) = structure("A:6", 6, &[6, 8, 10], &allowed);
    let (p_ok, p) = structure("P6", 6, &[6, 8, 10], &[ComponentShape::CompleteTMinus2]);
    let (k33, _) = enumerate_regular_free(&SearchSpec::enumerate(6, 3, forbidden("A:6")), &OracleConfig::default()).unwrap();
    let has_k33 = k33.iter().any(|g| classify_components_shape(g, 6).shapes == [ComponentShape::BipartiteTMinus3]);
    verdict(a_ok && p_ok && has_k33, format!("A6-free within {{K4, K3,3}} ({a}); P6-free only K4 ({p}); K3,3 found at n=6: {has_k33}"))
}

fn zero_suite() -> Verdict {
    let cases = [("P2,P3,P3", true), ("P3,P4", true), ("P4,P4", false), ("star:4", false), ("P5", false)];
    let mut bad = Vec::new();
    for (spec, expected) in cases {
        let f = forbidden(spec);
        let got = prop4_infinitely_zero(&f.components().unwrap()).unwrap();
        if got != expected {
            bad.push(format!("{spec}: verdict {got}"));
        }
        if !expected {
            for n in 7..=30 {
                match zero_witness(n, &f) {
                    Ok(c) if c.valid && c.graph.edge_count() > 0 => {}
                    Ok(_) => bad.push(format!("{spec} n={n}: invalid witness")),
                    Err(e) => bad.push(format!("{spec} n={n}: {e}")),
                }
            }
        }
    }
    verdict(bad.is_empty(), format!("5 verdicts, 72 witnesses; problems {bad:?}"))
}

fn brouwer() -> Verdict {
    let mut parts = Vec::new();
    let mut ok = true;
    for r in [3usize, 2] {
        let bound = brouwer_bound(7, r).unwrap();
        let lower = bound.max(0) as usize;
        let mut worst = 0;
        let mut violations = 0;
        for g in all_graphs(7, move |e, _| e >= lower).unwrap() {
            if contains_clique(&g, r + 1).is_some() || is_r_partite(&g, r) {
                continue;
            }
            worst = worst.max(g.edge_count());
            if g.edge_count() as i64 > bound {
                violations += 1;
            }
        }
        ok &= violations == 0;
        parts.push(format!("r={r}: bound {bound}, largest non-{r}-partite K{}-free {worst}, violations {violations}", r + 1));
    }
    verdict(ok, parts.join("; "))
}

fn dirac() -> Verdict {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let (mut tried, mut good) = (0, 0);
    for n in 6..=14 {
        let mut made = 0;
        while made < 200 {
            let p = rng.gen_range(0.5..0.95);
            let g = random_graph(&mut rng, n, p);
            if 2 * degree_profile(&g).min < n {
                continue;
            }
            made += 1;
            tried += 1;
            if hamiltonian_cycle(&g).is_ok_and(|c| is_hamiltonian_cycle(&g, &c)) {
                good += 1;
            }
        }
    }
    verdict(good == tried, format!("{good}/{tried} cycles accepted"))
}

fn parity() -> Verdict {
    let cfg = OracleConfig::default();
    let patterns = [Forbidden::Clique(3), Forbidden::Clique(4), forbidden("P5"), forbidden("A:6")];
    let (mut runs, mut bad) = (0, 0);
    for n in 1..=14 {
        for d in (0..n).filter(|d| n * d % 2 == 1) {
            for f in &patterns {
                runs += 1;
                let (g, stats) = exists_regular_free(&SearchSpec::exists(n, d, f.clone()), &cfg).unwrap();
                if g.is_some() || stats.nodes != 0 {
                    bad += 1;
                }
            }
        }
    }
    verdict(bad == 0, format!("{runs} odd n*d searches, {bad} expanded a node or returned a graph"))
}

fn graph6_round_trip() -> Verdict {
    let mut rng = StdRng::seed_from_u64(20);
    let mut bad = 0;
    for _ in 0..1000 {
        let n = rng.gen_range(0..=20);
        let p = rng.gen_range(0.0..1.0);
        let g = random_graph(&mut rng, n, p);
        let s = encode_graph6(&g);
        match decode_graph6_str(&s) {
            Ok(back) if back == g && encode_graph6(&back) == s => {}
            _ => bad += 1,
        }
    }
    verdict(bad == 0, format!("1000 graphs, {bad} mismatches"))
}

fn main() -> ExitCode {
    let criteria: [Check; 10] = [
        ("clique witnesses certify the formula, r=4..6, q=2..6", witness_certification),
        ("K4 oracle equals 2*floor(n/3), n=6..11", k4_oracle),
        ("tree oracle equals the tree formula", tree_oracle),
        ("cubic P5-free graphs are unions of K4", cubic_p5_free),
        ("cubic A6-free and P6-free component shapes", cubic_a6_and_p6_free),
        ("infinitely-zero classifier and 2-regular witnesses", zero_suite),
        ("Brouwer edge bound on all graphs of order 7", brouwer),
        ("Dirac graphs yield validated Hamiltonian cycles", dirac),
        ("odd n*d searches expand no node", parity),
        ("graph6 round trip", graph6_round_trip),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let v = check();
        let mark = if v.pass { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {mark}  {name}  [{:.2?}]  {}", i + 1, start.elapsed(), v.detail);
        if !v.pass {
            failed.push(i + 1);
        }
    }
    if failed == KNOWN_FAILURES {
        println!("failures match the documented set {KNOWN_FAILURES:?}");
        ExitCode::SUCCESS
    } else {
        println!("unexpected result: failed {failed:?}, documented {KNOWN_FAILURES:?}");
        ExitCode::FAILURE
    }
}
