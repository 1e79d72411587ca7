use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use regexlab::constructions::{certify, clique_witness, tree_witness, verify, zero_witness, WitnessCertificate};
use regexlab::formulas::{prop4_infinitely_zero, regex_clique, regex_tree, RegexResult};
use regexlab::graph6::{read_graph6_stream, write_graph6_stream};
use regexlab::oracle::{enumerate_regular_free, exists_regular_free, regex_oracle, OracleConfig, SearchSpec, DEFAULT_MAX_N};
use regexlab::trees::classify;
use regexlab::{Error, Forbidden, Graph, Tree};

const SPEC_HELP: &str = "\
Tree specs: path:T (or PT), star:T, A:T, dstar:P:Q, spider:L1:L2:..., or an explicit
edge list \"T; u-v,u-w,...\" on vertices 0..T.
Forbidden patterns: K<k> (or clique:<k>), a tree spec, or a comma-separated
union of P<k>, C<k>, K<k> and tree specs, e.g. \"P3,P4\".";

#[derive(Parser)]
#[command(name = "regexlab", version, about = "Regular Turán numbers for cliques and trees", after_help = SPEC_HELP)]
struct Cli {
    /// Emit one JSON object instead of a table.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Target {
    /// Forbid K_{r+1}.
    #[arg(long, value_name = "R")]
    clique: Option<usize>,
    /// Forbid a tree given by a tree spec.
    #[arg(long, value_name = "SPEC")]
    tree: Option<String>,
}

#[derive(Args)]
struct Output {
    /// Write the witness here.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Graph6)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form regex(n, F) with case tag, rex and advisory.
    Regex {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        n: usize,
    },
    /// Build and certify the extremal witness.
    Construct {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        n: usize,
        /// Tree branch degree to build instead of the formula value.
        #[arg(long)]
        degree: Option<usize>,
        #[command(flatten)]
        output: Output,
    },
    /// Re-check graphs from a graph6 file.
    Verify {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        forbidden: String,
        #[arg(long)]
        degree: usize,
    },
    /// Exhaustive search: exact regex, existence at a degree, or enumeration.
    Oracle {
        #[arg(long)]
        forbidden: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        degree: Option<usize>,
        /// List every graph found (needs --degree).
        #[arg(long, requires = "degree")]
        enumerate: bool,
        /// One graph per isomorphism class.
        #[arg(long, requires = "enumerate")]
        dedup: bool,
        /// Largest n searched [env: REGEXLAB_MAX_N; default 14].
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        workers: Option<usize>,
        #[command(flatten)]
        output: Output,
    },
    /// Star, almost-star, A_t and double-star flags of a tree.
    ClassifyTree {
        #[arg(long)]
        tree: String,
    },
    /// Whether regex(n, F) = 0 for infinitely many n; otherwise a 2-regular witness.
    Prop4 {
        #[arg(long)]
        forest: String,
        #[arg(long)]
        n: Option<usize>,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Serialize)]
struct Report {
    command: &'static str,
    params: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    value: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    case_tag: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rex: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    advisory: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness_path: Option<String>,
    #[serde(skip)]
    ok: bool,
    #[serde(skip)]
    notes: Vec<String>,
}

impl Report {
    fn new(command: &'static str, params: Value) -> Self {
        Report {
            command,
            params,
            value: None,
            case_tag: None,
            rex: None,
            advisory: None,
            certificate: None,
            witness_path: None,
            ok: true,
            notes: Vec::new(),
        }
    }

    fn formula(&mut self, r: &RegexResult) {
        self.value = Some(json!(r.value));
        self.case_tag = Some(r.case_tag.as_str().to_string());
        self.rex = Some(json!(r.rex));
        self.advisory = Some(r.advisory.to_string());
    }

    fn certificate(&mut self, c: &WitnessCertificate) {
        self.ok &= c.valid;
        self.certificate = Some(serde_json::to_value(c).expect("certificate serialises"));
    }

    fn print(&self, as_json: bool) {
        if as_json {
            println!("{}", serde_json::to_string(self).expect("report serialises"));
            return;
        }
        let mut rows: Vec<(String, String)> = vec![("command".into(), self.command.into())];
        if let Value::Object(m) = &self.params {
            rows.extend(m.iter().filter(|(_, v)| !v.is_null()).map(|(k, v)| (k.clone(), plain(v))));
        }
        let opt = |k: &str, v: Option<Value>| v.map(|v| (k.to_string(), plain(&v)));
        rows.extend(opt("value", self.value.clone()));
        rows.extend(opt("case_tag", self.case_tag.clone().map(Value::from)));
        rows.extend(opt("rex", self.rex.clone()));
        rows.extend(opt("advisory", self.advisory.clone().map(Value::from)));
        if let Some(Value::Object(c)) = &self.certificate {
            for key in ["regular", "free", "valid", "graph6"] {
                rows.extend(opt(key, c.get(key).cloned()));
            }
        }
        rows.extend(opt("witness_path", self.witness_path.clone().map(Value::from)));
        let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        for (k, v) in rows {
            println!("{k:<width$}  {v}");
        }
        for note in &self.notes {
            println!("{note}");
        }
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

enum Failure {
    Usage(String),
    Constraint(String),
    Refused(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidArgument(_) | Error::Parse { .. } | Error::Unsupported(_) => Failure::Usage(e.to_string()),
            Error::Refused { .. } => Failure::Refused(e.to_string()),
            Error::Precondition(_) | Error::Infeasible { .. } => Failure::Constraint(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<Report, Failure>;

fn parse_tree(spec: &str) -> Result<Tree, Failure> {
    Ok(spec.parse::<Tree>()?)
}

fn parse_forbidden(spec: &str) -> Result<Forbidden, Failure> {
    Ok(spec.parse::<Forbidden>()?)
}

fn write_witness(g: &Graph, output: &Output, report: &mut Report) -> Result<(), Failure> {
    let Some(path) = &output.out else { return Ok(()) };
    let text = match output.format {
        Format::Graph6 => {
            let mut buf = Vec::new();
            write_graph6_stream(&mut buf, [g])?;
            String::from_utf8(buf).expect("graph6 is ASCII")
        }
        Format::Dot => g.to_dot("witness"),
    };
    fs::write(path, text)?;
    report.witness_path = Some(path.display().to_string());
    Ok(())
}

fn formula_for(target: &Target, n: usize) -> Result<(Value, RegexResult, Option<Tree>), Failure> {
    match (target.clique, &target.tree) {
        (Some(r), _) => Ok((json!({"clique": r, "n": n}), regex_clique(n, r)?, None)),
        (None, Some(spec)) => {
            let tree = parse_tree(spec)?;
            Ok((json!({"tree": spec, "n": n}), regex_tree(n, &tree)?, Some(tree)))
        }
        (None, None) => Err(Failure::Usage("one of --clique or --tree is required".into())),
    }
}

fn run_regex(target: &Target, n: usize) -> Outcome {
    let (params, result, _) = formula_for(target, n)?;
    let mut report = Report::new("regex", params);
    report.formula(&result);
    Ok(report)
}

fn run_construct(target: &Target, n: usize, degree: Option<usize>, output: &Output) -> Outcome {
    let (mut params, result, tree) = formula_for(target, n)?;
    let cert = match (&tree, target.clique) {
        (Some(tree), _) => {
            let d = degree.unwrap_or(result.value);
            params["degree"] = json!(d);
            tree_witness(n, tree, d)?
        }
        (None, Some(r)) => {
            if degree.is_some() {
                return Err(Failure::Usage("--degree applies to trees only".into()));
            }
            clique_witness(n, r)?
        }
        (None, None) => unreachable!("formula_for checked the target"),
    };
    let mut report = Report::new("construct", params);
    report.formula(&certify(result, &cert));
    report.certificate(&cert);
    write_witness(&cert.graph, output, &mut report)?;
    Ok(report)
}

fn run_verify(file: &PathBuf, forbidden: &str, degree: usize) -> Outcome {
    let f = parse_forbidden(forbidden)?;
    let reader = io::BufReader::new(fs::File::open(file)?);
    let graphs = read_graph6_stream(reader)?;
    if graphs.is_empty() {
        return Err(Failure::Usage(format!("{} holds no graphs", file.display())));
    }
    let mut report = Report::new("verify", json!({"file": file.display().to_string(), "forbidden": forbidden, "degree": degree}));
    let certs: Vec<WitnessCertificate> = graphs.iter().map(|g| verify(g, &f, degree)).collect();
    report.ok = certs.iter().all(|c| c.valid);
    report.value = Some(json!(report.ok));
    if let [single] = certs.as_slice() {
        report.certificate(single);
    } else {
        report.certificate = Some(serde_json::to_value(&certs).expect("certificates serialise"));
        report.notes = certs.iter().enumerate().map(|(i, c)| format!("graph {i}: valid = {}", c.valid)).collect();
    }
    Ok(report)
}

fn max_n(flag: Option<usize>) -> Result<usize, Failure> {
    if let Some(m) = flag {
        return Ok(m);
    }
    match std::env::var("REGEXLAB_MAX_N") {
        Ok(s) => s.trim().parse().map_err(|_| Failure::Usage(format!("REGEXLAB_MAX_N must be a number, got `{s}`"))),
        Err(_) => Ok(DEFAULT_MAX_N),
    }
}

#[allow(clippy::too_many_arguments)]
fn run_oracle(
    forbidden: &str,
    n: usize,
    degree: Option<usize>,
    enumerate: bool,
    dedup: bool,
    bound: Option<usize>,
    workers: Option<usize>,
    output: &Output,
) -> Outcome {
    let f = parse_forbidden(forbidden)?;
    let cfg = OracleConfig { max_n: max_n(bound)?, workers, dedup };
    let mut params = json!({"forbidden": forbidden, "n": n, "max_n": cfg.max_n});
    let mut report;
    match degree {
        None => {
            let v = regex_oracle(n, &f, &cfg)?;
            eprintln!("nodes expanded: {}", v.nodes);
            report = Report::new("oracle", params);
            report.value = Some(json!(v.value));
            report.certificate(&verify(&v.witness, &f, v.value));
            write_witness(&v.witness, output, &mut report)?;
        }
        Some(d) if enumerate => {
            params["degree"] = json!(d);
            params["dedup"] = json!(dedup);
            let (graphs, stats) = enumerate_regular_free(&SearchSpec::enumerate(n, d, f), &cfg)?;
            eprintln!("nodes expanded: {}, graphs: {}", stats.nodes, graphs.len());
            report = Report::new("oracle", params);
            match &output.out {
                Some(path) => {
                    write_graph6_stream(fs::File::create(path)?, &graphs)?;
                    report.witness_path = Some(path.display().to_string());
                    report.value = Some(json!(graphs.len()));
                }
                None => {
                    let codes: Vec<String> = graphs.iter().map(regexlab::graph6::encode_graph6).collect();
                    report.value = Some(json!({"count": graphs.len(), "graph6": codes}));
                }
            }
        }
        Some(d) => {
            params["degree"] = json!(d);
            let (found, stats) = exists_regular_free(&SearchSpec::exists(n, d, f.clone()), &cfg)?;
            eprintln!("nodes expanded: {}", stats.nodes);
            report = Report::new("oracle", params);
            report.value = Some(json!(found.is_some()));
            match found {
                Some(g) => {
                    report.certificate(&verify(&g, &f, d));
                    write_witness(&g, output, &mut report)?;
                }
                None => report.ok = false,
            }
        }
    }
    Ok(report)
}

fn run_classify(spec: &str) -> Outcome {
    let tree = parse_tree(spec)?;
    let class = classify(&tree)?;
    let mut report = Report::new("classify-tree", json!({"tree": spec}));
    report.value = Some(serde_json::to_value(class).expect("class serialises"));
    Ok(report)
}

fn run_prop4(forest: &str, n: Option<usize>, output: &Output) -> Outcome {
    let f = parse_forbidden(forest)?;
    let verdict = prop4_infinitely_zero(&f.components()?)?;
    let mut report = Report::new("prop4", json!({"forest": forest, "n": n}));
    report.value = Some(json!(verdict));
    if let (false, Some(n)) = (verdict, n) {
        let cert = zero_witness(n, &f)?;
        report.certificate(&cert);
        write_witness(&cert.graph, output, &mut report)?;
    }
    Ok(report)
}

fn dispatch(cmd: &Command) -> Outcome {
    match cmd {
        Command::Regex { target, n } => run_regex(target, *n),
        Command::Construct { target, n, degree, output } => run_construct(target, *n, *degree, output),
        Command::Verify { file, forbidden, degree } => run_verify(file, forbidden, *degree),
        Command::Oracle { forbidden, n, degree, enumerate, dedup, max_n, workers, output } => {
            run_oracle(forbidden, *n, *degree, *enumerate, *dedup, *max_n, *workers, output)
        }
        Command::ClassifyTree { tree } => run_classify(tree),
        Command::Prop4 { forest, n, output } => run_prop4(forest, *n, output),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let (code, message) = match dispatch(&cli.command) {
        Ok(report) => {
            report.print(cli.json);
            (if report.ok { 0 } else { 1 }, None)
        }
        Err(Failure::Usage(m)) => (2, Some(m)),
        Err(Failure::Constraint(m)) => (1, Some(m)),
        Err(Failure::Refused(m)) => (3, Some(m)),
    };
    if let Some(m) = message {
        if cli.json {
            println!("{}", json!({"error": m, "exit_code": code}));
        }
        eprintln!("error: {m}");
    }
    let _ = io::stdout().flush();
    ExitCode::from(code)
}
