use std::collections::BTreeMap;
use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use contraction_lab::fpt::tk1_contract_fpt;
use contraction_lab::graph::{build_canopy, build_k1ab, build_k1abc, build_pattern, Graph, Pattern};
use contraction_lab::harness::fuzz::{run_fuzz, FuzzConfig};
use contraction_lab::harness::{emit_graph6, parse_graph6, ReductionBundle};
use contraction_lab::reductions::{classify_pattern, reduce, Classification, Construction, LegacyVariant, ReductionOptions, Request};
use contraction_lab::solvers::{
    solve_dominating_set, solve_domatic, solve_hfc_with, solve_vertex_cover, Decision, Engine, HfcOptions, Witness,
};
use contraction_lab::Error;
use serde_json::json;

fn exit_code_help() -> String {
    let mut s = String::from("Exit codes:\n  0   success (a \"no\" answer is a success)\n  1   I/O failure\n  2   bad command line\n");
    for (name, code) in Error::EXIT_CODES {
        s.push_str(&format!("  {code}  {name}\n"));
    }
    s.push_str("\nCONTRACTION_LAB_BUDGET overrides the search ceiling (default 10^8).");
    s
}

/// Hardness reductions, exact solvers and fuzzing for H-free edge contraction.
#[derive(Parser)]
#[command(name = "contraction-lab", version, after_help = exit_code_help())]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Apply a construction to a source graph and print the bundle as JSON.
    Reduce(ReduceArgs),
    /// Decide vc, ds, domatic, hfc or tk1 on a graph.
    Solve(SolveArgs),
    /// Report which hardness case a pattern H falls into.
    Classify {
        pattern: String,
    },
    /// Compare brute-force answers on random sources and their reductions.
    Fuzz(FuzzArgs),
    /// Print a pattern graph (K3, P4, T3,1, k1ab:4,3, k1abc:4,3,2, ...).
    Pattern {
        shape: String,
        /// Print a JSON bundle instead of graph6.
        #[arg(long)]
        json: bool,
    },
    /// Print the (t,k)-canopy as a JSON bundle with level labels L_0..L_k.
    Canopy {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Args)]
struct GraphInput {
    /// Graph in graph6.
    #[arg(long, conflicts_with = "input")]
    graph: Option<String>,
    /// File whose first non-empty line is a graph6 string. Standard input when neither is given.
    #[arg(long)]
    input: Option<String>,
}

impl GraphInput {
    fn read(&self) -> Result<Graph, CliError> {
        let text = match (&self.graph, &self.input) {
            (Some(g), _) => g.clone(),
            (None, Some(path)) => std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{path}: {e}")))?,
            (None, None) => {
                let mut s = String::new();
                std::io::stdin().read_to_string(&mut s).map_err(|e| CliError::Io(e.to_string()))?;
                s
            }
        };
        let line = text.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("");
        Ok(parse_graph6(line)?)
    }
}

#[derive(Args)]
struct ReduceArgs {
    /// Construction id (vc, unisep-strip, ..., legacy-starw) or canopy.
    construction: String,
    #[command(flatten)]
    input: GraphInput,
    #[arg(long)]
    pattern: Option<String>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    t2: Option<usize>,
    /// Distinguished pattern vertex for vc and ds-tree.
    #[arg(long)]
    w: Option<usize>,
    #[arg(long, default_value_t = 100_000)]
    max_vertices: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProblemArg {
    Vc,
    Ds,
    Domatic,
    Hfc,
    Tk1,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EngineArg {
    Brute,
    Fpt,
}

#[derive(Clone, Copy, ValueEnum)]
enum SearchArg {
    Enumerate,
    Branch,
}

impl From<SearchArg> for Engine {
    fn from(s: SearchArg) -> Engine {
        match s {
            SearchArg::Enumerate => Engine::Enumerate,
            SearchArg::Branch => Engine::Branch,
        }
    }
}

#[derive(Args)]
struct SolveArgs {
    problem: ProblemArg,
    #[command(flatten)]
    input: GraphInput,
    /// Budget: cover or dominating set size, or number of contractions.
    #[arg(long, default_value_t = 0)]
    k: usize,
    /// Number of disjoint dominating sets (domatic).
    #[arg(long, default_value_t = 1)]
    d: usize,
    /// H for hfc.
    #[arg(long)]
    pattern: Option<String>,
    /// t for tk1.
    #[arg(long, default_value_t = 2)]
    t: usize,
    /// tk1 solver.
    #[arg(long, value_enum, default_value_t = EngineArg::Brute)]
    engine: EngineArg,
    /// Brute-force strategy for hfc and tk1.
    #[arg(long, value_enum, default_value_t = SearchArg::Enumerate)]
    search: SearchArg,
}

#[derive(Args)]
struct FuzzArgs {
    construction: String,
    #[arg(long, default_value_t = 200)]
    trials: usize,
    #[arg(long, default_value_t = 1)]
    n_min: usize,
    #[arg(long, default_value_t = 4)]
    n_max: usize,
    #[arg(long, default_value_t = 1)]
    k_max: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    pattern: Option<String>,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    t2: Option<usize>,
    /// Redraw samples whose target has this many vertices or more.
    #[arg(long, default_value_t = 40)]
    max_target: usize,
    #[arg(long, value_enum, default_value_t = SearchArg::Branch)]
    search: SearchArg,
}

enum CliError {
    Lib(Error),
    Io(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

fn need<T>(v: Option<T>, flag: &str, what: &str) -> Result<T, CliError> {
    v.ok_or_else(|| CliError::Lib(Error::BadParameter(format!("{what} needs --{flag}"))))
}

/// The construction, with `--t` applied to legacy-starw.
fn construction(id: &str, t: Option<usize>) -> Result<Construction, CliError> {
    let c: Construction = id.parse()?;
    Ok(match (c, t) {
        (Construction::Legacy(LegacyVariant::StarW(_)), Some(t)) => Construction::Legacy(LegacyVariant::StarW(t)),
        _ => c,
    })
}

fn config(c: Construction, pattern: &Option<String>, t: Option<usize>, t2: Option<usize>) -> Result<FuzzConfig, CliError> {
    let mut cfg = FuzzConfig::new(c);
    if let Some(p) = pattern {
        cfg.pattern = Some(p.parse()?);
    }
    cfg.t = t.unwrap_or(cfg.t);
    cfg.t2 = t2.unwrap_or(cfg.t2);
    Ok(cfg)
}

fn canopy_bundle(t: usize, k: usize) -> Result<String, CliError> {
    let c = build_canopy(t, k)?;
    let labels = c.levels.iter().enumerate().map(|(i, l)| (format!("L_{i}"), l.clone())).collect();
    let params = BTreeMap::from([("t".to_string(), t), ("k".to_string(), k)]);
    Ok(ReductionBundle::for_graph("canopy", &c.graph, labels, params).to_json())
}

fn cmd_reduce(a: &ReduceArgs) -> Result<String, CliError> {
    if a.construction == "canopy" {
        return canopy_bundle(need(a.t, "t", "canopy")?, need(a.k, "k", "canopy")?);
    }
    let c = construction(&a.construction, a.t)?;
    let req = if c == Construction::K2K1Domatic {
        Request::K2K1Domatic { d: need(a.d, "d", c.id())? }
    } else {
        config(c, &a.pattern, a.t, a.t2)?.request(need(a.k, "k", c.id())?)?
    };
    let gp = a.input.read()?;
    let red = reduce(&gp, &req, &ReductionOptions { max_vertices: a.max_vertices, w: a.w })?;
    Ok(ReductionBundle::new(&red).to_json())
}

fn witness_json(w: &Witness) -> serde_json::Value {
    match w {
        Witness::Edges(f) => json!({ "edges": f.iter().map(|(u, v)| [u, v]).collect::<Vec<_>>() }),
        Witness::Vertices(v) => json!({ "vertices": v }),
        Witness::Sets(s) => json!({ "sets": s }),
    }
}

fn decision_text(d: &Decision) -> String {
    let mut s = String::from(if d.answer { "yes" } else { "no" });
    if let Some(w) = &d.witness {
        s.push('\n');
        s.push_str(&witness_json(w).to_string());
    }
    s
}

fn cmd_solve(a: &SolveArgs) -> Result<String, CliError> {
    let g = a.input.read()?;
    let opts = HfcOptions::with_engine(a.search.into());
    let d = match a.problem {
        ProblemArg::Vc => solve_vertex_cover(&g, a.k),
        ProblemArg::Ds => solve_dominating_set(&g, a.k),
        ProblemArg::Domatic => solve_domatic(&g, a.d)?,
        ProblemArg::Hfc => {
            let h: Pattern = need(a.pattern.as_deref(), "pattern", "hfc")?.parse()?;
            solve_hfc_with(&g, &h, a.k, &opts)?
        }
        ProblemArg::Tk1 if a.engine == EngineArg::Fpt => tk1_contract_fpt(&g, a.t, a.k)?,
        ProblemArg::Tk1 => solve_hfc_with(&g, &Pattern::IndepSet(a.t), a.k, &opts)?,
    };
    Ok(decision_text(&d))
}

fn classification_json(h: &str, c: &Classification) -> serde_json::Value {
    let detail = match c {
        Classification::PolyTrivial => json!({}),
        Classification::CompleteKt(t) => json!({ "t": t }),
        Classification::GeneralVc { w } => json!({ "w": w }),
        Classification::UniSepHetero { k, j, c, h_prime } => {
            json!({ "separator": k, "j": emit_graph6(j), "c": c, "h_prime": emit_graph6(h_prime) })
        }
        Classification::UniSepHomog { k, j, t, enforcer } => json!({
            "separator": k, "j": emit_graph6(j), "t": t,
            "enforcer": { "graph6": emit_graph6(&enforcer.graph), "u": enforcer.u, "v": enforcer.v, "w": enforcer.w },
        }),
        Classification::StarBranch(t) => json!({ "t": t }),
        Classification::IsolatedVertexPad { v, rest } => json!({ "v": v, "rest": emit_graph6(rest) }),
        Classification::MatchingChain(t) => json!({ "t": t }),
        Classification::DisconnectedBigComponent { component, h_prime } => {
            json!({ "component": component, "h_prime": emit_graph6(h_prime) })
        }
        Classification::SmallBase(name) => json!({ "base": name }),
    };
    json!({ "pattern": h, "case": c.name(), "detail": detail })
}

fn cmd_classify(pattern: &str) -> Result<String, CliError> {
    let h: Pattern = pattern.parse()?;
    let c = classify_pattern(&h)?;
    Ok(classification_json(&h.to_string(), &c).to_string())
}

fn parse_list(s: &str, len: usize) -> Result<Vec<usize>, CliError> {
    let bad = || CliError::Lib(Error::BadPattern(format!("expected {len} comma-separated numbers, got {s:?}")));
    let v: Vec<usize> = s.split(',').map(|x| x.trim().parse().map_err(|_| bad())).collect::<Result<_, _>>()?;
    if v.len() == len {
        Ok(v)
    } else {
        Err(bad())
    }
}

fn cmd_pattern(shape: &str, as_json: bool) -> Result<String, CliError> {
    let (g, params) = if let Some(rest) = shape.strip_prefix("k1abc:") {
        let v = parse_list(rest, 3)?;
        (build_k1abc(v[0], v[1], v[2])?, BTreeMap::from([("a".into(), v[0]), ("b".into(), v[1]), ("c".into(), v[2])]))
    } else if let Some(rest) = shape.strip_prefix("k1ab:") {
        let v = parse_list(rest, 2)?;
        (build_k1ab(v[0], v[1])?, BTreeMap::from([("a".into(), v[0]), ("b".into(), v[1])]))
    } else {
        (build_pattern(&shape.parse()?)?, BTreeMap::new())
    };
    if as_json {
        Ok(ReductionBundle::for_graph("pattern", &g, BTreeMap::new(), params).to_json())
    } else {
        Ok(emit_graph6(&g))
    }
}

fn cmd_fuzz(a: &FuzzArgs) -> Result<String, CliError> {
    let c = construction(&a.construction, a.t)?;
    let mut cfg = config(c, &a.pattern, a.t, a.t2)?;
    cfg.trials = a.trials;
    cfg.n_min = a.n_min;
    cfg.n_max = a.n_max;
    cfg.k_max = a.k_max;
    cfg.seed = a.seed;
    cfg.max_target = a.max_target;
    cfg.engine = a.search.into();
    Ok(run_fuzz(&cfg)?.to_json())
}

fn run(cli: &Cli) -> Result<String, CliError> {
    match &cli.command {
        Command::Reduce(a) => cmd_reduce(a),
        Command::Solve(a) => cmd_solve(a),
        Command::Classify { pattern } => cmd_classify(pattern),
        Command::Fuzz(a) => cmd_fuzz(a),
        Command::Pattern { shape, json } => cmd_pattern(shape, *json),
        Command::Canopy { t, k } => canopy_bundle(*t, *k),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(CliError::Lib(e)) => {
            eprintln!("error: {}: {e}", e.name());
            ExitCode::from(e.exit_code() as u8)
        }
        Err(CliError::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
