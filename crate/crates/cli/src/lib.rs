//! Argument grammar, dispatch and rendering for the `woi` binary.

pub mod cache;
pub mod corpus;
pub mod error;

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use woi_core::harness::{self, Claim, Options, Verdict};
use woi_core::monomial::minimal_masks;
use woi_core::regularity::{betti_table_with, regularity_with, Limits, DEFAULT_LATTICE_CAP};
use woi_core::symbolic::symbolic_power_by_primes;
use woi_core::{
    edge_ideal, symbolic_power, Characteristic, Engine, MonomialIdeal, SymbolicMethod, VertexSet, WeightedOrientedGraph,
    SCHEMA,
};

use crate::cache::{Cache, Request};
use crate::corpus::{Corpus, Quantity};
use crate::error::{CliError, Result};

#[derive(Debug, Parser)]
#[command(name = "woi", version, about = "Powers, symbolic powers and regularity of edge ideals of weighted oriented graphs")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Field characteristic: 0 or a prime.
    #[arg(long = "char", global = true, env = "WOI_CHAR", default_value = "0", value_parser = parse_char)]
    pub characteristic: Characteristic,
    /// Include wall-clock timings in verdicts.
    #[arg(long, global = true)]
    pub timings: bool,
    /// Result cache directory; caching is off when unset.
    #[arg(long, global = true, env = "WOI_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,
    /// Directory holding the example corpus.
    #[arg(long, global = true, env = "WOI_CORPUS_DIR")]
    pub corpus_dir: Option<PathBuf>,
    /// Worker threads.
    #[arg(long, global = true, env = "WOI_THREADS")]
    pub threads: Option<usize>,
    /// Largest lcm lattice the Betti engine may build.
    #[arg(long, global = true, default_value_t = DEFAULT_LATTICE_CAP)]
    pub lattice_cap: usize,
    /// Largest exponent sweep the degree-complex engine and the claim checks may run.
    #[arg(long, global = true, default_value_t = harness::DEFAULT_SWEEP_CAP)]
    pub sweep_cap: usize,
    #[command(subcommand)]
    pub command: Command,
}

fn parse_char(s: &str) -> std::result::Result<Characteristic, String> {
    Characteristic::parse(s).ok_or_else(|| format!("`{s}` is neither 0 nor a prime below 2^32"))
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the edge ideal of a graph.
    EdgeIdeal {
        #[arg(long)]
        graph: String,
    },
    /// Print an ordinary power.
    Power {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        power: u32,
    },
    /// Print a symbolic power.
    Symbolic {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        power: u32,
        #[arg(long, default_value = "primes")]
        method: SymbolicMethod,
    },
    /// Castelnuovo-Mumford regularity of an ideal, a power or a symbolic power.
    Reg(TargetArgs),
    /// Graded Betti numbers of an ideal, a power or a symbolic power.
    Betti(TargetArgs),
    /// Check a claim (or `all`) on a graph.
    Verify(VerifyArgs),
    /// The bundled example graphs.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
    /// Inspect and audit the result cache.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Graph document, or the name of a corpus entry.
    #[arg(long, conflicts_with = "ideal", required_unless_present = "ideal")]
    pub graph: Option<String>,
    /// Ideal document.
    #[arg(long)]
    pub ideal: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct TargetArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long)]
    pub power: Option<u32>,
    /// Take the symbolic power instead of the ordinary one.
    #[arg(long, requires = "power")]
    pub symbolic: bool,
    #[arg(long, default_value = "primes")]
    pub method: SymbolicMethod,
    #[arg(long, default_value = "takayama")]
    pub engine: Engine,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Claim name, or `all`.
    pub claim: String,
    #[arg(long)]
    pub graph: String,
    #[arg(long, default_value_t = 3)]
    pub kmax: u32,
    /// Vertices of the induced subgraph for betti-monotonicity; every
    /// single-vertex deletion when omitted.
    #[arg(long, value_delimiter = ',')]
    pub keep: Vec<String>,
    #[arg(long, default_value = "takayama")]
    pub engine: Engine,
}

#[derive(Debug, Subcommand)]
pub enum CorpusAction {
    List,
    Export {
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
    },
    /// Recompute every expected value and compare.
    Run {
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
        #[arg(long, default_value = "takayama")]
        engine: Engine,
    },
}

#[derive(Debug, Subcommand)]
pub enum CacheAction {
    List,
    Get { key: String },
    /// Recompute records and compare with the stored values. Records from
    /// another version are always recomputed.
    Audit {
        /// Check at most this many current records, evenly spaced (0 = all).
        #[arg(long, default_value_t = 0)]
        sample: usize,
    },
}

/// A rendered result. `failure` is set when a claim or comparison failed;
/// the output is still meaningful.
#[derive(Debug, Clone, PartialEq)]
pub struct Output {
    pub json: Value,
    pub text: String,
    pub failure: Option<String>,
}

impl Output {
    fn new(json: Value, text: String) -> Self {
        Output { json, text, failure: None }
    }

    pub fn render(&self, as_json: bool) -> String {
        if as_json {
            serde_json::to_string_pretty(&self.json).expect("values serialize") + "\n"
        } else {
            self.text.clone()
        }
    }
}

struct Context {
    characteristic: Characteristic,
    timings: bool,
    cache: Option<Cache>,
    corpus_dir: PathBuf,
    limits: Limits,
    sweep_cap: usize,
}

impl Context {
    fn corpus(&self) -> Result<Corpus> {
        Corpus::load(&self.corpus_dir)
    }

    fn cache(&self) -> Result<&Cache> {
        self.cache
            .as_ref()
            .ok_or_else(|| CliError::Usage("no cache directory: set WOI_CACHE_DIR or pass --cache-dir".into()))
    }

    fn options(&self, engine: Engine) -> Options {
        Options { characteristic: self.characteristic, engine, limits: self.limits, sweep_cap: self.sweep_cap }
    }

    fn load_graph(&self, arg: &str) -> Result<WeightedOrientedGraph> {
        let path = Path::new(arg);
        if path.exists() {
            let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
            return woi_core::graph::parse_graph(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())));
        }
        let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or(arg);
        if let Ok(corpus) = self.corpus() {
            if let Some(entry) = corpus.get(stem) {
                return Ok(entry.graph.clone());
            }
        }
        Err(CliError::io(path, std::io::Error::from(std::io::ErrorKind::NotFound)))
    }

    fn load_ideal(&self, path: &Path) -> Result<MonomialIdeal> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        let doc = serde_json::from_str(&text).map_err(|e| CliError::json(path, e))?;
        MonomialIdeal::from_document(&doc).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
    }

    fn load_input(&self, input: &InputArgs) -> Result<Input> {
        match (&input.graph, &input.ideal) {
            (Some(g), None) => Ok(Input::Graph(self.load_graph(g)?)),
            (None, Some(i)) => Ok(Input::Ideal(self.load_ideal(i)?)),
            _ => Err(CliError::Usage("give exactly one of --graph and --ideal".into())),
        }
    }

    /// Serves `request` from the cache when possible.
    fn cached(&self, request: &Request) -> Result<Value> {
        if let Some(cache) = &self.cache {
            if let Some(v) = cache.get(request) {
                return Ok(v);
            }
        }
        let value = compute(request, self.limits)?;
        if let Some(cache) = &self.cache {
            cache.put(request, &value)?;
        }
        Ok(value)
    }
}

enum Input {
    Graph(WeightedOrientedGraph),
    Ideal(MonomialIdeal),
}

impl Input {
    fn base(&self) -> MonomialIdeal {
        match self {
            Input::Graph(g) => edge_ideal(g),
            Input::Ideal(i) => i.clone(),
        }
    }

    fn symbolic(&self, k: u32, method: SymbolicMethod) -> Result<MonomialIdeal> {
        match self {
            Input::Graph(g) => Ok(symbolic_power(g, k, method)?),
            Input::Ideal(i) => {
                if k == 0 {
                    return Err(CliError::Usage("symbolic powers need k >= 1".into()));
                }
                let associated = i.associated_primes();
                let primes: Vec<u64> = match method {
                    SymbolicMethod::Primes | SymbolicMethod::Auto => minimal_masks(associated),
                    SymbolicMethod::Associated => associated,
                    SymbolicMethod::SinkFormula => {
                        return Err(CliError::Usage("the sink formula needs --graph".into()));
                    }
                };
                let primes: Vec<VertexSet> = primes.into_iter().map(VertexSet).collect();
                Ok(symbolic_power_by_primes(i, &primes, k))
            }
        }
    }

    fn target(&self, power: Option<u32>, symbolic: bool, method: SymbolicMethod) -> Result<MonomialIdeal> {
        match power {
            None => Ok(self.base()),
            Some(k) if symbolic => self.symbolic(k, method),
            Some(k) => Ok(self.base().power(k)),
        }
    }
}

fn ch_param(ch: Characteristic) -> String {
    ch.value().to_string()
}

fn engine_name(engine: Engine) -> &'static str {
    match engine {
        Engine::Lcm => "lcm",
        Engine::Takayama => "takayama",
        Engine::Both => "both",
    }
}

fn reg_request(ideal: &MonomialIdeal, ch: Characteristic, engine: Engine) -> Request {
    Request {
        operation: "reg".into(),
        ideal: ideal.to_document(),
        params: BTreeMap::from([
            ("characteristic".into(), ch_param(ch)),
            ("engine".into(), engine_name(engine).into()),
        ]),
    }
}

fn betti_request(ideal: &MonomialIdeal, ch: Characteristic) -> Request {
    Request {
        operation: "betti".into(),
        ideal: ideal.to_document(),
        params: BTreeMap::from([("characteristic".into(), ch_param(ch))]),
    }
}

/// Evaluates a cacheable request from scratch.
pub fn compute(request: &Request, limits: Limits) -> Result<Value> {
    let ideal = MonomialIdeal::from_document(&request.ideal)?;
    let param = |name: &str| {
        request
            .params
            .get(name)
            .ok_or_else(|| CliError::Usage(format!("cache request lacks parameter `{name}`")))
    };
    let ch = parse_char(param("characteristic")?).map_err(CliError::Usage)?;
    match request.operation.as_str() {
        "reg" => {
            let engine: Engine = param("engine")?.parse()?;
            let reg = regularity_with(&ideal, ch, engine, limits)?;
            Ok(json!({
                "schema": SCHEMA,
                "operation": "reg",
                "characteristic": ch.value(),
                "engine": engine,
                "regularity": reg,
            }))
        }
        "betti" => {
            let table = betti_table_with(&ideal, ch, limits)?;
            let coarse: Vec<Value> = table
                .coarse()
                .into_iter()
                .map(|((i, j), beta)| json!({"i": i, "j": j, "beta": beta}))
                .collect();
            Ok(json!({
                "schema": SCHEMA,
                "operation": "betti",
                "characteristic": ch.value(),
                "regularity": table.regularity(),
                "totals": table.totals(),
                "table": coarse,
                "entries": table.entries(),
            }))
        }
        other => Err(CliError::Usage(format!("unknown cached operation `{other}`"))),
    }
}

fn ideal_output(ideal: &MonomialIdeal) -> Output {
    let json = serde_json::to_value(ideal.to_document()).expect("documents serialize");
    Output::new(json, format!("{ideal}\n"))
}

/// Betti table in the usual layout: columns are homological degrees, rows
/// are `j - i`.
fn betti_text(value: &Value) -> String {
    let mut cells: BTreeMap<(i64, usize), u64> = BTreeMap::new();
    let mut width = 0;
    for row in value["table"].as_array().into_iter().flatten() {
        let (i, j, beta) = (row["i"].as_u64().unwrap_or(0), row["j"].as_u64().unwrap_or(0), row["beta"].as_u64().unwrap_or(0));
        cells.insert((j as i64 - i as i64, i as usize), beta);
        width = width.max(i as usize + 1);
    }
    let totals: Vec<u64> = value["totals"].as_array().into_iter().flatten().filter_map(Value::as_u64).collect();
    let col = |s: String| format!("{s:>6}");
    let mut out = String::from("       ");
    for i in 0..width {
        out.push_str(&col(i.to_string()));
    }
    out.push_str("\ntotal: ");
    for t in &totals {
        out.push_str(&col(t.to_string()));
    }
    out.push('\n');
    let rows: std::collections::BTreeSet<i64> = cells.keys().map(|&(r, _)| r).collect();
    for r in rows {
        let _ = write!(out, "{:>5}: ", r);
        for i in 0..width {
            let cell = cells.get(&(r, i)).map_or(".".to_string(), u64::to_string);
            out.push_str(&col(cell));
        }
        out.push('\n');
    }
    out
}

fn verdict_line(v: &Verdict, timings: bool) -> String {
    let mut line = v.claim.to_string();
    if let Some(k) = v.k {
        let _ = write!(line, " k={k}");
    }
    let status = match v.holds {
        Some(true) => "holds".to_string(),
        Some(false) => "FAILS".to_string(),
        None if v.hypotheses_met => "recorded".to_string(),
        None => format!("not applicable ({})", v.reasons.join("; ")),
    };
    let _ = write!(line, ": {status}");
    if !v.quantities.is_empty() {
        let q: Vec<String> = v.quantities.iter().map(|(k, x)| format!("{k}={x}")).collect();
        let _ = write!(line, " [{}]", q.join(" "));
    }
    if !v.notes.is_empty() {
        let _ = write!(line, " # {}", v.notes.join("; "));
    }
    if let (true, Some(ms)) = (timings, v.elapsed_ms) {
        let _ = write!(line, " ({ms} ms)");
    }
    line
}

fn verify(ctx: &Context, args: &VerifyArgs) -> Result<Output> {
    let graph = ctx.load_graph(&args.graph)?;
    let opts = ctx.options(args.engine);
    let kmax = args.kmax.max(1);
    let claim = match args.claim.as_str() {
        "all" => None,
        name => Some(Claim::parse(name).ok_or_else(|| {
            let names: Vec<&str> = Claim::ALL.iter().map(|c| c.name()).collect();
            CliError::Usage(format!("unknown claim `{name}`; expected `all` or one of {}", names.join(", ")))
        })?),
    };
    let keep = if args.keep.is_empty() { None } else { Some(graph.vertex_set(&args.keep)?) };
    let mut verdicts = match claim {
        None if keep.is_none() => harness::run_all(&graph, kmax, &opts)?,
        _ => {
            let mut out = Vec::new();
            let wanted = |c: Claim| claim.is_none_or(|x| x == c);
            if wanted(Claim::LowerBound) {
                for k in 1..=kmax {
                    out.push(harness::check_lower_bound(&graph, k, &opts)?);
                }
            }
            if wanted(Claim::SymbolicVsOrdinary) {
                out.extend(harness::check_symbolic_vs_ordinary(&graph, kmax, &opts)?);
            }
            if Claim::ALL[2..7].iter().any(|&c| wanted(c)) {
                out.extend(harness::check_second_power_bounds(&graph, &opts)?);
            }
            if Claim::ALL[7..10].iter().any(|&c| wanted(c)) {
                for k in 2..=kmax.min(3) {
                    out.extend(harness::check_colon_lemmas(&graph, k, &opts)?);
                }
            }
            if wanted(Claim::BettiMonotonicity) {
                let subsets: Vec<VertexSet> = match keep {
                    Some(s) => vec![s],
                    None => (0..graph.num_vertices())
                        .map(|v| graph.all_vertices().difference(VertexSet::singleton(v)))
                        .collect(),
                };
                for s in subsets {
                    out.push(harness::check_betti_monotonicity(&graph, s, 2, &opts)?);
                }
            }
            if wanted(Claim::ForestBound) || wanted(Claim::Slopes) {
                out.extend(harness::check_forest_bound_and_slopes(&graph, kmax, &opts)?);
            }
            out.retain(|v| wanted(v.claim));
            out
        }
    };
    if !ctx.timings {
        for v in &mut verdicts {
            v.elapsed_ms = None;
        }
    }
    let text: String = verdicts.iter().map(|v| verdict_line(v, ctx.timings) + "\n").collect();
    let failed: Vec<String> = verdicts
        .iter()
        .filter(|v| v.failed())
        .map(|v| match v.k {
            Some(k) => format!("{} (k={k})", v.claim),
            None => v.claim.to_string(),
        })
        .collect();
    let mut out = Output::new(json!({"schema": SCHEMA, "graph": graph.name(), "verdicts": verdicts}), text);
    if !failed.is_empty() {
        out.failure = Some(format!("claims failed on {}: {}", graph.name(), failed.join(", ")));
    }
    Ok(out)
}

fn corpus_command(ctx: &Context, action: &CorpusAction) -> Result<Output> {
    let corpus = ctx.corpus()?;
    match action {
        CorpusAction::List => {
            let items: Vec<Value> = corpus
                .entries
                .iter()
                .map(|e| {
                    json!({
                        "name": e.name,
                        "vertices": e.graph.num_vertices(),
                        "edges": e.graph.edges().len(),
                        "rows": corpus.rows_for(&e.name).count(),
                    })
                })
                .collect();
            let text = corpus
                .entries
                .iter()
                .map(|e| format!("{}\t{}\n", e.name, edge_ideal(&e.graph)))
                .collect();
            Ok(Output::new(json!({"schema": SCHEMA, "entries": items}), text))
        }
        CorpusAction::Export { only } => {
            let docs: Vec<Value> = corpus
                .select(only)?
                .into_iter()
                .map(|e| serde_json::to_value(e.graph.to_document()).expect("documents serialize"))
                .collect();
            let json = if docs.len() == 1 { docs[0].clone() } else { Value::Array(docs) };
            let text = serde_json::to_string_pretty(&json).expect("values serialize") + "\n";
            Ok(Output::new(json, text))
        }
        CorpusAction::Run { only, engine } => {
            let mut rows = Vec::new();
            let mut text = String::new();
            let mut mismatches = Vec::new();
            for entry in corpus.select(only)? {
                for row in corpus.rows_for(&entry.name) {
                    let input = Input::Graph(entry.graph.clone());
                    let method = row.method.unwrap_or(SymbolicMethod::Primes);
                    let ideal = input.target(Some(row.k), row.quantity == Quantity::RegSymbolic, method)?;
                    let value = ctx.cached(&reg_request(&ideal, ctx.characteristic, *engine))?;
                    let got = value["regularity"].as_i64().expect("reg values are integers");
                    let matches = row.value.map(|v| v == got);
                    let status = match (row.value, matches) {
                        (Some(v), Some(true)) => format!("ok (expected {v})"),
                        (Some(v), _) => {
                            mismatches.push(format!("{}: expected {v}, got {got}", row.label()));
                            format!("MISMATCH (expected {v})")
                        }
                        (None, _) => "reported".to_string(),
                    };
                    let _ = writeln!(text, "{} = {got}  {status}", row.label());
                    rows.push(json!({
                        "entry": row.entry,
                        "quantity": row.quantity,
                        "k": row.k,
                        "method": corpus::method_name(method),
                        "expected": row.value,
                        "computed": got,
                        "matches": matches,
                    }));
                }
            }
            let mut out = Output::new(
                json!({"schema": SCHEMA, "characteristic": ctx.characteristic.value(), "engine": engine, "rows": rows}),
                text,
            );
            if !mismatches.is_empty() {
                out.failure = Some(mismatches.join("; "));
            }
            Ok(out)
        }
    }
}

fn cache_command(ctx: &Context, action: &CacheAction) -> Result<Output> {
    let cache = ctx.cache()?;
    match action {
        CacheAction::List => {
            let mut items = Vec::new();
            let mut text = String::new();
            for key in cache.keys()? {
                match cache.record(&key) {
                    Some(r) => {
                        let _ = writeln!(text, "{key}\t{}\t{}", r.request.operation, r.version);
                        items.push(json!({"key": key, "operation": r.request.operation, "version": r.version}));
                    }
                    None => {
                        let _ = writeln!(text, "{key}\tcorrupt");
                        items.push(json!({"key": key, "corrupt": true}));
                    }
                }
            }
            Ok(Output::new(json!({"schema": SCHEMA, "records": items}), text))
        }
        CacheAction::Get { key } => {
            let record = cache.record(key).ok_or_else(|| CliError::Usage(format!("no usable cache record `{key}`")))?;
            let json = serde_json::to_value(&record).expect("records serialize");
            let text = serde_json::to_string_pretty(&record.value).expect("values serialize") + "\n";
            Ok(Output::new(json, text))
        }
        CacheAction::Audit { sample } => {
            let records: Vec<_> = cache.keys()?.iter().filter_map(|k| cache.record(k)).collect();
            let (stale, current): (Vec<_>, Vec<_>) = records.into_iter().partition(|r| r.version != cache::VERSION);
            let stride = if *sample == 0 || current.len() <= *sample { 1 } else { current.len().div_ceil(*sample) };
            let chosen = current.iter().step_by(stride).chain(stale.iter());
            let mut checked = 0;
            let mut divergent = Vec::new();
            for record in chosen {
                let fresh = compute(&record.request, ctx.limits)?;
                checked += 1;
                if fresh != record.value {
                    divergent.push(record.key.clone());
                }
                if record.version != cache::VERSION {
                    cache.put(&record.request, &fresh)?;
                }
            }
            let text = format!(
                "checked {checked} record(s), {} from another version, {} divergent\n{}",
                stale.len(),
                divergent.len(),
                divergent.iter().map(|k| format!("divergent: {k}\n")).collect::<String>()
            );
            let mut out = Output::new(
                json!({"schema": SCHEMA, "checked": checked, "stale": stale.len(), "divergent": divergent}),
                text,
            );
            if !divergent.is_empty() {
                out.failure = Some(format!("{} cache record(s) differ from recomputation", divergent.len()));
            }
            Ok(out)
        }
    }
}

/// Executes a parsed command line.
pub fn run(cli: &Cli) -> Result<Output> {
    let ctx = Context {
        characteristic: cli.characteristic,
        timings: cli.timings,
        cache: cli.cache_dir.as_ref().map(Cache::open).transpose()?,
        corpus_dir: cli.corpus_dir.clone().unwrap_or_else(corpus::default_dir),
        limits: Limits { lattice_cap: cli.lattice_cap, sweep_cap: cli.sweep_cap },
        sweep_cap: cli.sweep_cap,
    };
    match &cli.command {
        Command::EdgeIdeal { graph } => Ok(ideal_output(&edge_ideal(&ctx.load_graph(graph)?))),
        Command::Power { input, power } => Ok(ideal_output(&ctx.load_input(input)?.base().power(*power))),
        Command::Symbolic { input, power, method } => Ok(ideal_output(&ctx.load_input(input)?.symbolic(*power, *method)?)),
        Command::Reg(t) => {
            let ideal = ctx.load_input(&t.input)?.target(t.power, t.symbolic, t.method)?;
            let value = ctx.cached(&reg_request(&ideal, ctx.characteristic, t.engine))?;
            let text = format!("{}\n", value["regularity"]);
            Ok(Output::new(value, text))
        }
        Command::Betti(t) => {
            let ideal = ctx.load_input(&t.input)?.target(t.power, t.symbolic, t.method)?;
            let value = ctx.cached(&betti_request(&ideal, ctx.characteristic))?;
            let text = betti_text(&value);
            Ok(Output::new(value, text))
        }
        Command::Verify(args) => verify(&ctx, args),
        Command::Corpus { action } => corpus_command(&ctx, action),
        Command::Cache { action } => cache_command(&ctx, action),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Result<Output> {
        let cli = Cli::try_parse_from(std::iter::once("woi").chain(args.iter().copied())).unwrap();
        run(&cli)
    }

    #[test]
    fn corpus_names_resolve_as_graphs() {
        let out = run_args(&["reg", "--graph", "fig1.json", "--power", "2"]).unwrap();
        assert_eq!(out.text, "23\n");
        assert_eq!(out.json["regularity"], 23);
    }

    #[test]
    fn missing_files_are_input_errors() {
        let err = run_args(&["reg", "--graph", "/nonexistent/g.json"]).unwrap_err();
        assert_eq!(err.exit_code(), 1);
    }

    #[test]
    fn resource_caps_map_to_exit_three() {
        let err = run_args(&["reg", "--graph", "fig1", "--power", "3", "--engine", "lcm", "--lattice-cap", "10"]).unwrap_err();
        assert_eq!(err.exit_code(), 3);
    }

    #[test]
    fn symbolic_powers_of_ideal_documents() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("i.json");
        std::fs::write(&path, r#"{"variables":["x","y"],"generators":[[1,1]]}"#).unwrap();
        let out = run_args(&["symbolic", "--ideal", path.to_str().unwrap(), "--power", "3"]).unwrap();
        assert_eq!(out.json["generators"], json!([[3, 3]]));
    }

    #[test]
    fn betti_text_layout() {
        let out = run_args(&["betti", "--graph", "fig4-prime"]).unwrap();
        assert_eq!(out.json["totals"], json!([2, 1]));
        assert!(out.text.contains("total:"), "{}", out.text);
    }

    #[test]
    fn unknown_claims_are_rejected() {
        let err = run_args(&["verify", "nonsense", "--graph", "fig1"]).unwrap_err();
        assert!(err.to_string().contains("lower-bound"));
    }
}
