//! Command-line front end. [`run`] parses arguments, dispatches to the
//! library and renders a report envelope carrying the seed, the crate
//! version and a hash of the effective configuration.
//!
//! Exit codes: 0 success or decided, 1 usage or validation error, 2 an
//! undecided search or an exhausted work budget.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::bounds::{
    coefficient_for, construction_sizes, lemma_dwa_host_size, lemma_trzy_host_size, parse_rational, theorem_coefficient, to_decimal, xi,
    ConstructionId, HoleParams, Rational, TargetTriple,
};
use crate::coloring::{EdgeColoring, GraphFile};
use crate::constructions::{self, Claim, ClaimKind, ConstructionReport, ReportFile, Verdict};
use crate::cycles::{cycle_at_least, erdos_gallai_cycle, has_cycle_of_length, longest_cycle, CycleCertificate, DEFAULT_BUDGET};
use crate::error::{Error, Result};
use crate::graph::{Graph, HoleSpec};
use crate::matching::{
    best_component_matching, bipartite_split, closed_walk_through_matching, gallai_edmonds, maximum_matching, tutte_partition,
    MatchingCertificate,
};
use crate::search::{
    arrow_exhaustive, arrow_randomized, format_targets, lemma_harness, parse_targets, ramsey_number_exact, tau_check, ArrowInstance,
    ArrowVerdict, Arrows, ExhaustiveConfig, HarnessOptions, InstanceFile, LemmaId, LemmaParams, RamseyOutcome, Schedule,
};
use crate::vertex_set::VertexSet;
use crate::Parity;

/// Seed used when `--seed` is not given.
pub const DEFAULT_SEED: u64 = 0x5eed_c1c1_e5;

#[derive(Parser, Debug)]
#[command(name = "cycle-ramsey", version, about = "Monochromatic cycles and matchings in edge-colored nearly complete graphs")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Serialize)]
struct Common {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    #[serde(skip)]
    format: Format,
    /// Seed for every random choice.
    #[arg(long, default_value_t = DEFAULT_SEED, global = true)]
    seed: u64,
    /// Worker threads (0: one per core). Outputs do not depend on it.
    #[arg(long, default_value_t = 0, global = true)]
    #[serde(skip)]
    threads: usize,
    /// Work budget (search nodes or path extensions).
    #[arg(long, default_value_t = DEFAULT_BUDGET, global = true)]
    budget: u64,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    #[serde(skip)]
    report: Option<PathBuf>,
    /// Add wall-clock time to the report (makes reports differ between runs).
    #[arg(long, global = true)]
    #[serde(skip)]
    timing: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a lower-bound coloring and verify its claims.
    Construct(ConstructArgs),
    /// Verify cycle claims about a coloring.
    Verify(VerifyArgs),
    /// Cycle queries on a graph.
    Cycles(CyclesArgs),
    /// Maximum matchings on a graph.
    Matching(MatchingArgs),
    /// Barrier decompositions, bipartite splits and closed walks.
    Decompose(DecomposeArgs),
    /// Exact coefficients, host sizes and construction sizes.
    Bound(BoundArgs),
    /// Arrowing decisions for cycle and matching targets.
    Search(SearchArgs),
    /// Sample a matching lemma at finite size.
    Lemma(LemmaArgs),
}

#[derive(Args, Debug, Serialize)]
struct ConstructArgs {
    /// Four cliques for three odd targets of length at most M.
    #[arg(long, value_name = "M")]
    odd_triple: Option<usize>,
    /// Four cliques of size M-1 (any M >= 3).
    #[arg(long, value_name = "M")]
    four_cliques: Option<usize>,
    /// Two even targets M1 >= M2, one odd: four parts.
    #[arg(long, value_name = "M1,M2", value_delimiter = ',')]
    eeo_four: Option<Vec<usize>>,
    /// Two even targets and an odd M3: three parts.
    #[arg(long, value_name = "M1,M2,M3", value_delimiter = ',')]
    eeo_three: Option<Vec<usize>>,
    /// One even target M1 and an odd M2: four parts.
    #[arg(long, value_name = "M1,M2", value_delimiter = ',')]
    oee_four: Option<Vec<usize>>,
    /// Write the coloring file here.
    #[arg(long)]
    #[serde(skip)]
    out: Option<PathBuf>,
    /// Skip claim verification.
    #[arg(long)]
    no_verify: bool,
}

#[derive(Args, Debug, Serialize)]
struct VerifyArgs {
    /// A construction report, bare or as written by `construct --format json`.
    #[arg(long, conflicts_with = "coloring")]
    #[serde(skip)]
    input: Option<PathBuf>,
    /// A coloring file; claims come from --claims.
    #[arg(long, requires = "claims")]
    #[serde(skip)]
    coloring: Option<PathBuf>,
    /// Claims `COLOR:long:L` (no cycle of length >= L), `COLOR:odd`, `COLOR:cycle`.
    #[arg(long, value_delimiter = ',')]
    claims: Option<Vec<String>>,
}

#[derive(Args, Debug, Serialize)]
struct CyclesArgs {
    /// Graph file `{n, edges}`.
    #[arg(long)]
    #[serde(skip)]
    graph: PathBuf,
    /// Find a cycle of exactly this length.
    #[arg(long, group = "query")]
    length: Option<usize>,
    /// Find a longest cycle (optionally of a parity).
    #[arg(long, group = "query")]
    longest: bool,
    #[arg(long, requires = "longest")]
    parity: Option<String>,
    /// Find a cycle of length at least L.
    #[arg(long, group = "query", value_name = "L")]
    at_least: Option<usize>,
    /// Long cycle for a graph above the edge threshold for length M.
    #[arg(long, group = "query", value_name = "M")]
    threshold: Option<usize>,
}

#[derive(Args, Debug, Serialize)]
struct MatchingArgs {
    #[arg(long)]
    #[serde(skip)]
    graph: PathBuf,
    /// Best matching inside a single component.
    #[arg(long)]
    component: bool,
    /// With --component: only non-bipartite components qualify.
    #[arg(long, requires = "component")]
    nonbipartite: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum DecomposeMode {
    GallaiEdmonds,
    Tutte,
    Split,
    Walk,
}

#[derive(Args, Debug, Serialize)]
struct DecomposeArgs {
    #[arg(long)]
    #[serde(skip)]
    graph: PathBuf,
    #[arg(long, value_enum)]
    mode: DecomposeMode,
    /// Tutte: the saturation no matching reaches.
    #[arg(long)]
    target: Option<usize>,
    /// Split: forbidden saturation is alpha * scale.
    #[arg(long)]
    alpha: Option<String>,
    #[arg(long)]
    scale: Option<usize>,
    /// Walk: parity of the closed walk.
    #[arg(long)]
    parity: Option<String>,
}

#[derive(Args, Debug, Serialize)]
struct BoundArgs {
    /// Parities of the three targets, e.g. `eeo`.
    #[arg(long, requires = "alphas")]
    parities: Option<String>,
    /// Length ratios, e.g. `1,1,1` or `1/2,0.3,1`.
    #[arg(long, value_delimiter = ',')]
    alphas: Option<Vec<String>>,
    /// Scale; adds target lengths and construction sizes.
    #[arg(long)]
    n: Option<u64>,
    /// Evaluate xi(alpha, beta, nu).
    #[arg(long, value_name = "ALPHA,BETA,NU", value_delimiter = ',', conflicts_with = "parities")]
    xi: Option<Vec<String>>,
    /// Host size of a two-color hole lemma (`dwa` or `trzy`).
    #[arg(long, conflicts_with_all = ["parities", "xi"], requires_all = ["alpha", "beta", "nu", "epsilon", "n"])]
    host: Option<String>,
    #[arg(long)]
    alpha: Option<String>,
    #[arg(long)]
    beta: Option<String>,
    #[arg(long)]
    nu: Option<String>,
    #[arg(long)]
    epsilon: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum SearchMode {
    Exhaustive,
    Randomized,
    Tau,
}

#[derive(Args, Debug, Serialize)]
struct SearchArgs {
    /// Targets `C5:1,M4:2,MN4:3` (cycle, component matching, non-bipartite).
    #[arg(long)]
    targets: Option<String>,
    /// Host size.
    #[arg(long)]
    n: Option<usize>,
    /// Instance file; replaces --targets/--n/--holes.
    #[arg(long, conflicts_with_all = ["targets", "n"])]
    #[serde(skip)]
    instance: Option<PathBuf>,
    /// Holes as `0,1,2;5,6`.
    #[arg(long)]
    holes: Option<String>,
    /// Edges the colorer may delete.
    #[arg(long, default_value_t = 0)]
    deleted_budget: usize,
    #[arg(long, value_enum, default_value_t = SearchMode::Exhaustive)]
    mode: SearchMode,
    /// Decide every host size in `LO..HI` and report the Ramsey number.
    #[arg(long, value_name = "LO..HI", conflicts_with_all = ["n", "instance"])]
    ramsey: Option<String>,
    #[arg(long, default_value_t = 13)]
    exact_cap: usize,
    /// Disable symmetry breaking.
    #[arg(long)]
    no_symmetry: bool,
    #[arg(long, default_value_t = 4)]
    chains: usize,
    #[arg(long, default_value_t = 20_000)]
    steps: u64,
    /// Write the witness coloring here.
    #[arg(long)]
    #[serde(skip)]
    witness_out: Option<PathBuf>,
}

#[derive(Args, Debug, Serialize)]
struct LemmaArgs {
    #[arg(long)]
    lemma: String,
    #[arg(long, default_value_t = 200)]
    samples: usize,
    /// Local-search steps per adversarial sample.
    #[arg(long, default_value_t = 100)]
    steps: usize,
    #[arg(long)]
    n: Option<u64>,
    #[arg(long)]
    epsilon: Option<String>,
    #[arg(long)]
    v1: Option<usize>,
    #[arg(long)]
    v2: Option<usize>,
    #[arg(long)]
    nu1: Option<String>,
    #[arg(long)]
    nu2: Option<String>,
    #[arg(long)]
    alpha: Option<String>,
    #[arg(long)]
    beta: Option<String>,
    #[arg(long)]
    nu: Option<String>,
    #[arg(long)]
    alpha1: Option<String>,
    #[arg(long)]
    alpha2: Option<String>,
}

/// What a subcommand produced.
struct Outcome {
    config: Value,
    result: Value,
    human: String,
    exit: i32,
}

impl Outcome {
    fn new(config: &impl Serialize, result: Value, human: String) -> Self {
        Self { config: serde_json::to_value(config).unwrap_or(Value::Null), result, human, exit: 0 }
    }
}

/// Runs the tool on `argv` (including the program name) and returns the
/// exit code. Reports go to standard output or `--report`.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let start = Instant::now();
    let (name, outcome) = match dispatch(&cli) {
        Ok(x) => x,
        Err(e) => {
            eprintln!("error: {e}");
            return match e {
                Error::BudgetExceeded { .. } => 2,
                _ => 1,
            };
        }
    };
    let elapsed = cli.common.timing.then(|| start.elapsed().as_secs_f64() * 1e3);
    let text = render(&cli.common, name, &outcome, elapsed);
    let written = match &cli.common.report {
        Some(p) => std::fs::write(p, text).map_err(Error::from),
        None => {
            print!("{text}");
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return 1;
    }
    outcome.exit
}

fn dispatch(cli: &Cli) -> Result<(&'static str, Outcome)> {
    let c = &cli.common;
    Ok(match &cli.command {
        Command::Construct(a) => ("construct", construct(c, a)?),
        Command::Verify(a) => ("verify", verify(c, a)?),
        Command::Cycles(a) => ("cycles", cycles(c, a)?),
        Command::Matching(a) => ("matching", matching(a)?),
        Command::Decompose(a) => ("decompose", decompose(a)?),
        Command::Bound(a) => ("bound", bound(a)?),
        Command::Search(a) => ("search", search(c, a)?),
        Command::Lemma(a) => ("lemma", lemma(c, a)?),
    })
}

fn config_hash(command: &str, common: &Common, config: &Value) -> String {
    let canonical = json!({ "command": command, "common": common, "args": config });
    hex::encode(Sha256::digest(canonical.to_string().as_bytes()))
}

fn render(common: &Common, command: &str, o: &Outcome, elapsed_ms: Option<f64>) -> String {
    let hash = config_hash(command, common, &o.config);
    let version = env!("CARGO_PKG_VERSION");
    match common.format {
        Format::Json => {
            let mut env = json!({
                "tool": "cycle-ramsey",
                "version": version,
                "command": command,
                "seed": common.seed,
                "config_hash": hash,
                "config": o.config,
                "result": o.result,
            });
            if let Some(ms) = elapsed_ms {
                env["wall_time_ms"] = json!(ms);
            }
            let mut s = serde_json::to_string_pretty(&env).expect("values serialize");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut rows = vec![
                ("tool".to_string(), "cycle-ramsey".to_string()),
                ("command".into(), command.to_string()),
                ("version".into(), version.into()),
                ("seed".into(), common.seed.to_string()),
                ("config_hash".into(), hash),
            ];
            flatten("config", &o.config, &mut rows);
            flatten("result", &o.result, &mut rows);
            if let Some(ms) = elapsed_ms {
                rows.push(("wall_time_ms".into(), format!("{ms:.3}")));
            }
            let mut s = String::from("key,value\n");
            for (k, v) in rows {
                let _ = writeln!(s, "{},{}", csv_field(&k), csv_field(&v));
            }
            s
        }
        Format::Human => {
            let mut s = o.human.clone();
            if !s.ends_with('\n') {
                s.push('\n');
            }
            if let Some(ms) = elapsed_ms {
                let _ = writeln!(s, "wall time: {ms:.1} ms");
            }
            s
        }
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                flatten(&format!("{prefix}.{k}"), x, out);
            }
        }
        Value::Array(xs) if xs.iter().any(|x| x.is_object() || x.is_array()) => {
            for (i, x) in xs.iter().enumerate() {
                flatten(&format!("{prefix}.{i}"), x, out);
            }
        }
        Value::String(s) => out.push((prefix.to_string(), s.clone())),
        other => out.push((prefix.to_string(), other.to_string())),
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

fn write_json(path: &Path, v: &impl Serialize) -> Result<()> {
    let mut s = serde_json::to_string_pretty(v)?;
    s.push('\n');
    std::fs::write(path, s)?;
    Ok(())
}

fn read_graph(path: &Path) -> Result<Graph> {
    read_json::<GraphFile>(path)?.to_graph()
}

fn rational(s: &Option<String>, name: &str) -> Result<Rational> {
    let s = s.as_deref().ok_or_else(|| Error::Precondition(format!("--{name} is required")))?;
    parse_rational(s)
}

fn required<T: Copy>(x: Option<T>, name: &str) -> Result<T> {
    x.ok_or_else(|| Error::Precondition(format!("--{name} is required")))
}

fn parity(s: &Option<String>) -> Result<Option<Parity>> {
    s.as_deref().map(str::parse).transpose()
}

fn set_json(s: &VertexSet) -> Value {
    json!(s.to_vec())
}

fn cycle_json(c: &Option<CycleCertificate>) -> Value {
    match c {
        Some(c) => json!({ "length": c.len(), "vertices": c.vertices }),
        None => Value::Null,
    }
}

fn verdict_text(v: &Option<Verdict>) -> String {
    match v {
        None => "unchecked".into(),
        Some(Verdict::Holds { method }) => format!("holds ({})", serde_json::to_value(method).unwrap().as_str().unwrap_or("")),
        Some(Verdict::Fails { witness }) => format!("FAILS: cycle {:?}", witness.vertices),
        Some(Verdict::BudgetExceeded { budget }) => format!("undecided (budget {budget} exhausted)"),
    }
}

fn claim_text(c: &Claim) -> String {
    match c.kind {
        ClaimKind::NoCycleAtLeast { min_len } => format!("color {}: no cycle of length >= {min_len}", c.color),
        ClaimKind::NoOddCycle => format!("color {}: no odd cycle", c.color),
        ClaimKind::NoCycle => format!("color {}: no cycle", c.color),
    }
}

fn report_outcome(config: &impl Serialize, r: &ConstructionReport) -> Outcome {
    let mut h = String::new();
    if let Some(id) = r.construction {
        let _ = writeln!(h, "construction {id} {:?} on {} vertices", r.parameters, r.vertex_count());
    } else {
        let _ = writeln!(h, "coloring on {} vertices", r.vertex_count());
    }
    for (c, v) in r.claims.iter().zip(&r.verdicts) {
        let _ = writeln!(h, "  {}: {}", claim_text(c), verdict_text(v));
    }
    for remark in &r.remarks {
        let _ = writeln!(h, "  note: {remark}");
    }
    let all = r.all_hold();
    let _ = writeln!(h, "all claims hold: {all}");
    let file = r.to_file();
    let result = json!({
        "construction": file.construction,
        "parameters": file.parameters,
        "vertices": r.vertex_count(),
        "parts": file.parts,
        "claims": file.claims,
        "verdicts": file.verdicts,
        "remarks": file.remarks,
        "all_hold": all,
        "coloring": file.coloring,
    });
    let mut o = Outcome::new(config, result, h);
    let undecided = r.verdicts.iter().any(|v| matches!(v, Some(Verdict::BudgetExceeded { .. })));
    o.exit = if undecided {
        2
    } else if all || r.verdicts.iter().all(Option::is_none) {
        0
    } else {
        1
    };
    o
}

fn construct(c: &Common, a: &ConstructArgs) -> Result<Outcome> {
    let chosen: Vec<(ConstructionId, Vec<usize>)> = [
        a.odd_triple.map(|m| (ConstructionId::FourCliques, vec![m])),
        a.four_cliques.map(|m| (ConstructionId::FourCliques, vec![m])),
        a.eeo_four.clone().map(|p| (ConstructionId::EeoFourPart, p)),
        a.eeo_three.clone().map(|p| (ConstructionId::EeoThreePart, p)),
        a.oee_four.clone().map(|p| (ConstructionId::OeeFourPart, p)),
    ]
    .into_iter()
    .flatten()
    .collect();
    let [(id, params)] = <[_; 1]>::try_from(chosen).map_err(|_| {
        Error::Precondition("choose exactly one of --odd-triple, --four-cliques, --eeo-four, --eeo-three, --oee-four".into())
    })?;
    let report = match a.odd_triple {
        Some(m) => constructions::build_odd_triple(m)?,
        None => constructions::build(id, &params)?,
    };
    let report = if a.no_verify { report } else { constructions::verify_claims(report, c.budget) };
    if let Some(out) = &a.out {
        write_json(out, &report.coloring.to_file())?;
    }
    Ok(report_outcome(a, &report))
}

fn parse_claim(s: &str) -> Result<Claim> {
    let bad = || Error::Precondition(format!("cannot parse claim '{s}' (COLOR:long:L, COLOR:odd or COLOR:cycle)"));
    let parts: Vec<&str> = s.split(':').collect();
    let color: u8 = parts.first().and_then(|x| x.parse().ok()).ok_or_else(bad)?;
    let kind = match parts[1..] {
        ["long", l] => ClaimKind::NoCycleAtLeast { min_len: l.parse().map_err(|_| bad())? },
        ["odd"] => ClaimKind::NoOddCycle,
        ["cycle"] => ClaimKind::NoCycle,
        _ => return Err(bad()),
    };
    Ok(Claim { color, kind })
}

fn verify(c: &Common, a: &VerifyArgs) -> Result<Outcome> {
    let report = match (&a.input, &a.coloring) {
        (Some(p), _) => {
            // Either a bare report or a `construct` JSON envelope around one.
            let mut v: Value = read_json(p)?;
            if v.get("tool").is_some() {
                v = v["result"].take();
            }
            ConstructionReport::from_file(&serde_json::from_value::<ReportFile>(v)?)?
        }
        (None, Some(p)) => {
            let coloring = EdgeColoring::from_file(&read_json(p)?)?;
            let claims = a.claims.iter().flatten().map(|s| parse_claim(s)).collect::<Result<Vec<_>>>()?;
            for cl in &claims {
                if cl.color == 0 || cl.color > coloring.colors() {
                    return Err(Error::InvalidColor { color: cl.color, k: coloring.colors() });
                }
            }
            ConstructionReport::for_coloring(coloring, claims)
        }
        (None, None) => return Err(Error::Precondition("give --input or --coloring".into())),
    };
    let report = constructions::verify_claims(report, c.budget);
    Ok(report_outcome(a, &report))
}

fn cycles(c: &Common, a: &CyclesArgs) -> Result<Outcome> {
    let g = read_graph(&a.graph)?;
    let (query, found) = if let Some(l) = a.length {
        (format!("cycle of length {l}"), has_cycle_of_length(&g, l, c.budget)?)
    } else if let Some(l) = a.at_least {
        (format!("cycle of length >= {l}"), cycle_at_least(&g, &g.vertices(), l, c.budget)?)
    } else if let Some(m) = a.threshold {
        (format!("cycle of length >= {m} above the edge threshold"), Some(erdos_gallai_cycle(&g, m, c.budget)?))
    } else {
        let p = parity(&a.parity)?;
        let what = p.map_or("longest cycle".to_string(), |p| format!("longest {p} cycle"));
        (what, longest_cycle(&g, p, c.budget)?)
    };
    let human = match &found {
        Some(cy) => format!("{query}: length {} through {:?}", cy.len(), cy.vertices),
        None => format!("{query}: none"),
    };
    Ok(Outcome::new(a, json!({ "query": query, "cycle": cycle_json(&found) }), human))
}

fn matching_json(m: &MatchingCertificate) -> Value {
    json!({ "saturation": m.saturation(), "edges": m.edges })
}

fn matching(a: &MatchingArgs) -> Result<Outcome> {
    let g = read_graph(&a.graph)?;
    if a.component {
        return Ok(match best_component_matching(&g, a.nonbipartite) {
            Ok((comp, m)) => {
                let human = format!("best component ({} vertices) matching saturates {} vertices", comp.len(), m.saturation());
                Outcome::new(a, json!({ "component": set_json(&comp), "matching": matching_json(&m) }), human)
            }
            Err(Error::NoQualifyingComponent) => {
                Outcome::new(a, json!({ "component": Value::Null, "matching": Value::Null }), "no qualifying component".into())
            }
            Err(e) => return Err(e),
        });
    }
    let m = maximum_matching(&g);
    let human = format!("maximum matching: {} edges saturating {} vertices", m.len(), m.saturation());
    Ok(Outcome::new(a, json!({ "matching": matching_json(&m) }), human))
}

fn decompose(a: &DecomposeArgs) -> Result<Outcome> {
    let g = read_graph(&a.graph)?;
    Ok(match a.mode {
        DecomposeMode::GallaiEdmonds => {
            let ge = gallai_edmonds(&g);
            let human = format!(
                "D = {:?}\nA = {:?}\nC = {:?}\nmaximum matching saturates {}",
                ge.d.to_vec(),
                ge.a.to_vec(),
                ge.c.to_vec(),
                ge.matching.saturation()
            );
            Outcome::new(
                a,
                json!({ "d": set_json(&ge.d), "a": set_json(&ge.a), "c": set_json(&ge.c), "matching": matching_json(&ge.matching) }),
                human,
            )
        }
        DecomposeMode::Tutte => {
            let p = tutte_partition(&g, required(a.target, "target")?)?;
            let human = format!("S = {:?}\nT = {:?}\nU = {:?}", p.s.to_vec(), p.t.to_vec(), p.u.to_vec());
            Outcome::new(a, json!({ "s": set_json(&p.s), "t": set_json(&p.t), "u": set_json(&p.u), "target": p.n_target }), human)
        }
        DecomposeMode::Split => {
            let alpha = rational(&a.alpha, "alpha")?;
            let split = bipartite_split(&g, &alpha, required(a.scale, "scale")?)?;
            let human = format!("V' = {:?}\nV'' = {:?}", split.vprime.to_vec(), split.vdoubleprime.to_vec());
            let result = json!({ "vprime": set_json(&split.vprime), "vdoubleprime": set_json(&split.vdoubleprime), "bound": split.alpha_bound.to_string() });
            Outcome::new(a, result, human)
        }
        DecomposeMode::Walk => {
            let p = parity(&a.parity)?.ok_or_else(|| Error::Precondition("--parity is required".into()))?;
            let (_, m) = best_component_matching(&g, p == Parity::Odd)?;
            let w = closed_walk_through_matching(&g, &m, p)?;
            let human = format!("closed {p} walk of length {} through a matching of {} edges: {:?}", w.len(), m.len(), w.vertices);
            Outcome::new(a, json!({ "matching": matching_json(&m), "walk": w.vertices, "length": w.len() }), human)
        }
    })
}

fn bound(a: &BoundArgs) -> Result<Outcome> {
    if let Some(x) = &a.xi {
        let v: Vec<Rational> = x.iter().map(|s| parse_rational(s)).collect::<Result<_>>()?;
        let [al, be, nu] = <[Rational; 3]>::try_from(v).map_err(|_| Error::Precondition("--xi takes three values".into()))?;
        let val = xi(&al, &be, &nu);
        return Ok(Outcome::new(a, json!({ "xi": val.to_string(), "decimal": to_decimal(&val, 6) }), val.to_string()));
    }
    if let Some(which) = &a.host {
        let p = HoleParams {
            alpha: rational(&a.alpha, "alpha")?,
            beta: rational(&a.beta, "beta")?,
            nu: rational(&a.nu, "nu")?,
            epsilon: rational(&a.epsilon, "epsilon")?,
        };
        let n = required(a.n, "n")?;
        let size = match which.parse::<LemmaId>()? {
            LemmaId::Dwa => lemma_dwa_host_size(&p, n)?,
            LemmaId::Trzy => lemma_trzy_host_size(&p, n)?,
            other => return Err(Error::Precondition(format!("--host takes dwa or trzy, not {other}"))),
        };
        return Ok(Outcome::new(a, json!({ "host_size": size }), size.to_string()));
    }
    let (Some(ps), Some(al)) = (&a.parities, &a.alphas) else {
        return Err(Error::Precondition("give --parities with --alphas, --xi, or --host".into()));
    };
    let parities: Vec<Parity> = ps.chars().map(|ch| ch.to_string().parse()).collect::<Result<_>>()?;
    let alphas: Vec<Rational> = al.iter().map(|s| parse_rational(s)).collect::<Result<_>>()?;
    let parities = <[Parity; 3]>::try_from(parities).map_err(|_| Error::Precondition("--parities takes three letters".into()))?;
    let alphas = <[Rational; 3]>::try_from(alphas).map_err(|_| Error::Precondition("--alphas takes three values".into()))?;
    let (coef, canon) = match a.n {
        Some(n) => theorem_coefficient(&TargetTriple::new(alphas.clone(), parities, n)?)?,
        None => {
            if alphas.iter().any(|x| *x <= Rational::from_integer(0.into())) {
                return Err(Error::Precondition("alphas must be positive".into()));
            }
            coefficient_for(&alphas, &parities)
        }
    };
    let mut human = coef.to_string();
    let mut result = json!({ "coefficient": coef.to_string(), "decimal": to_decimal(&coef, 6), "canonical": canon });
    if let Some(n) = a.n {
        let t = TargetTriple::new(alphas, parities, n)?;
        let lengths = t.target_lengths()?;
        let sizes = construction_sizes(&t)?;
        let _ = write!(human, "\ntarget lengths: {lengths:?}");
        for s in &sizes {
            let _ = write!(human, "\n{} {:?}: {} vertices", s.id, s.lengths, s.vertices);
        }
        result["target_lengths"] = json!(lengths);
        result["constructions"] = serde_json::to_value(&sizes)?;
    }
    Ok(Outcome::new(a, result, human))
}

fn parse_holes(s: &str) -> Result<HoleSpec> {
    let mut holes = Vec::new();
    for part in s.split(';').filter(|p| !p.trim().is_empty()) {
        let vs: Vec<usize> = part
            .split(',')
            .map(|x| x.trim().parse().map_err(|_| Error::Precondition(format!("bad hole vertex '{x}'"))))
            .collect::<Result<_>>()?;
        holes.push(vs.iter().collect());
    }
    Ok(HoleSpec::new(holes))
}

fn verdict_json(v: &ArrowVerdict) -> Value {
    json!({
        "arrows": v.arrows,
        "witness": v.witness.as_ref().map(EdgeColoring::to_file),
        "stats": v.stats,
        "note": v.note,
    })
}

fn verdict_human(v: &ArrowVerdict) -> String {
    let mut s = format!(
        "arrows={} (nodes {}, target prunes {}, symmetry prunes {})",
        v.arrows, v.stats.nodes, v.stats.target_prunes, v.stats.symmetry_prunes
    );
    if let Some(note) = &v.note {
        let _ = write!(s, "\nnote: {note}");
    }
    if let Some(w) = &v.witness {
        let _ = write!(s, "\nwitness: {:?}", w.colored_edges());
    }
    s
}

fn exit_for(a: Arrows) -> i32 {
    if a == Arrows::Unknown {
        2
    } else {
        0
    }
}

fn search(c: &Common, a: &SearchArgs) -> Result<Outcome> {
    let exhaustive = ExhaustiveConfig {
        budget: c.budget,
        exact_cap: a.exact_cap,
        symmetry: !a.no_symmetry,
        threads: c.threads,
        ..ExhaustiveConfig::default()
    };
    let targets_arg = || a.targets.as_deref().ok_or_else(|| Error::Precondition("--targets is required".into())).and_then(parse_targets);
    if let Some(range) = &a.ramsey {
        let (lo, hi) = range.split_once("..").ok_or_else(|| Error::Precondition("--ramsey takes LO..HI".into()))?;
        let parse = |x: &str| x.trim_start_matches('=').parse::<usize>().map_err(|_| Error::Precondition(format!("bad range '{range}'")));
        let (lo, hi) = (parse(lo)?, parse(hi)?);
        let targets = targets_arg()?;
        let r = ramsey_number_exact(&targets, lo..=hi, &exhaustive)?;
        let verdicts: Vec<Value> = r.verdicts.iter().map(|(n, v)| json!({ "n": n, "verdict": verdict_json(v) })).collect();
        let mut human = match r.outcome {
            RamseyOutcome::Exact { value } => format!("R({}) = {value}", format_targets(&targets)),
            RamseyOutcome::Bracket { lower, upper: Some(u) } => format!("{lower} <= R({}) <= {u}", format_targets(&targets)),
            RamseyOutcome::Bracket { lower, upper: None } => format!("R({}) >= {lower}", format_targets(&targets)),
        };
        for (n, v) in &r.verdicts {
            let _ = write!(human, "\n  N = {n}: arrows={}", v.arrows);
        }
        let mut o = Outcome::new(a, json!({ "targets": format_targets(&targets), "outcome": r.outcome, "verdicts": verdicts }), human);
        o.exit = if matches!(r.outcome, RamseyOutcome::Exact { .. }) { 0 } else { 2 };
        return Ok(o);
    }
    let (inst, initial) = match &a.instance {
        Some(p) => ArrowInstance::from_file(&read_json::<InstanceFile>(p)?)?,
        None => {
            let mut inst = ArrowInstance::complete(required(a.n, "n")?, targets_arg()?)?;
            if let Some(h) = &a.holes {
                inst.holes = parse_holes(h)?;
            }
            inst.deleted_budget = a.deleted_budget;
            inst.validate()?;
            (inst, None)
        }
    };
    let verdict = match a.mode {
        SearchMode::Exhaustive => arrow_exhaustive(&inst, &exhaustive)?,
        SearchMode::Tau => tau_check(&inst, &exhaustive)?,
        SearchMode::Randomized => {
            let sched = Schedule { chains: a.chains, steps: a.steps, threads: c.threads, ..Schedule::default() };
            arrow_randomized(&inst, initial.as_ref(), &sched, c.seed)?
        }
    };
    if let (Some(p), Some(w)) = (&a.witness_out, &verdict.witness) {
        write_json(p, &w.to_file())?;
    }
    let header = format!(
        "instance: N = {}, targets {}, {} hole(s), {} fixed deletion(s), colorer may delete {} edge(s)",
        inst.n,
        format_targets(&inst.targets),
        inst.holes.holes.len(),
        inst.fixed_deleted.len(),
        inst.deleted_budget
    );
    let human = format!("{header}\n{}", verdict_human(&verdict));
    let mut result = verdict_json(&verdict);
    result["instance"] = json!(header);
    let mut o = Outcome::new(a, result, human);
    o.exit = exit_for(verdict.arrows);
    Ok(o)
}

fn lemma(c: &Common, a: &LemmaArgs) -> Result<Outcome> {
    let id: LemmaId = a.lemma.parse()?;
    let eps = || rational(&a.epsilon, "epsilon");
    let params = match id {
        LemmaId::L2 => LemmaParams::L2 { v1: required(a.v1, "v1")?, v2: required(a.v2, "v2")?, epsilon: eps()? },
        LemmaId::Double => LemmaParams::Double {
            n: required(a.n, "n")? as usize,
            nu1: rational(&a.nu1, "nu1")?,
            nu2: rational(&a.nu2, "nu2")?,
            epsilon: eps()?,
        },
        LemmaId::Dwa | LemmaId::Trzy => {
            let hole = HoleParams {
                alpha: rational(&a.alpha, "alpha")?,
                beta: rational(&a.beta, "beta")?,
                nu: rational(&a.nu, "nu")?,
                epsilon: eps()?,
            };
            let n = required(a.n, "n")?;
            if id == LemmaId::Dwa {
                LemmaParams::Dwa { hole, n }
            } else {
                LemmaParams::Trzy { hole, n }
            }
        }
        LemmaId::F1 => LemmaParams::F1 {
            alpha1: rational(&a.alpha1, "alpha1")?,
            alpha2: rational(&a.alpha2, "alpha2")?,
            epsilon: eps()?,
            n: required(a.n, "n")?,
        },
    };
    let opts = HarnessOptions { local_search_steps: a.steps, threads: c.threads };
    let rep = lemma_harness(&params, a.samples, c.seed, &opts)?;
    let mut human = format!(
        "lemma {} on {} vertices: {}/{} samples pass ({} uniform, {} adversarial), least margin {}",
        rep.lemma, rep.host_size, rep.passed, rep.samples, rep.uniform_samples, rep.adversarial_samples, rep.min_margin
    );
    for n in &rep.notes {
        let _ = write!(human, "\nnote: {n}");
    }
    for f in &rep.failures {
        let _ = write!(human, "\nfailure: sample {} ({:?}) short by {}", f.sample, f.kind, f.shortfall);
        if let Some(v) = &f.hypothesis_violation {
            let _ = write!(human, "; witness violates a hypothesis: {v}");
        }
    }
    Ok(Outcome::new(a, serde_json::to_value(&rep)?, human))
}
