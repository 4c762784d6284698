use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use blocker_core::blockers::{
    solve_bipartite_contraction_alpha, solve_bruteforce, BlockerInstance, BlockerResult,
    MAX_BIPARTITE_D,
};
use blocker_core::generate::{generate, Family};
use blocker_core::graph::{is_bipartite, parse_edge_list, serialize_edge_list};
use blocker_core::invariants::{check_critical_with_limit, parameter_value_with_limit};
use blocker_core::reductions::{
    build_apex_gadget, build_chordal_gadget, vc_to_wp2sat, Role, Wp2SatInstance,
};
use blocker_core::suites::{Suite, SuiteConfig};
use blocker_core::{Error, Graph, Operation, ParameterKind};

const SCHEMA: u32 = 1;

#[derive(Parser)]
#[command(
    name = "blocker",
    version,
    about = "Contraction and deletion blockers for alpha and omega"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether k operations can lower the parameter by d.
    Solve {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        op: Operation,
        #[arg(long)]
        pi: ParameterKind,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, value_enum, default_value_t = Engine::Auto)]
        engine: Engine,
    },
    /// Build a hardness gadget and write it as an edge list.
    Reduce {
        #[arg(long, value_enum)]
        from: Source,
        #[arg(long, value_enum)]
        to: Target,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Budget for a vertex cover input turned into a chordal gadget.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Run a seeded property suite.
    Verify {
        #[arg(long)]
        suite: Suite,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        count: Option<usize>,
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Print a generated graph as an edge list.
    Gen {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.3)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Engine {
    Auto,
    Brute,
    Bipartite,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Source {
    Vc,
    Wp2sat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Target {
    ChordalContract,
    ChordalDelete,
    ApexOmega,
}

/// What a command produced: a JSON report for stdout and the exit code.
struct Outcome {
    report: Value,
    code: u8,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let result = match cli.command {
        Command::Solve {
            graph,
            op,
            pi,
            k,
            d,
            engine,
        } => solve(&graph, op, pi, k, d, engine),
        Command::Reduce {
            from,
            to,
            input,
            out,
            k,
        } => reduce(from, to, &input, &out, k),
        Command::Verify {
            suite,
            seed,
            count,
            max_n,
        } => verify(suite, seed, count, max_n),
        Command::Gen { family, n, p, seed } => {
            return match generate(family, n, p, seed) {
                Ok(g) => {
                    print!("{}", serialize_edge_list(&g));
                    ExitCode::SUCCESS
                }
                Err(e) => fail(&e.to_string()),
            };
        }
    };
    match result {
        Ok(Outcome { mut report, code }) => {
            report["elapsed_ms"] = json!(start.elapsed().as_millis() as u64);
            println!(
                "{}",
                serde_json::to_string_pretty(&report).expect("reports serialize")
            );
            ExitCode::from(code)
        }
        Err(message) => fail(&message),
    }
}

fn fail(message: &str) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(2)
}

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

fn read_graph(path: &Path) -> Result<Graph, String> {
    parse_edge_list(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn write(path: &Path, contents: &str) -> Result<(), String> {
    fs::write(path, contents).map_err(|e| format!("cannot write {}: {e}", path.display()))
}

fn bipartite_applies(g: &Graph, op: Operation, pi: ParameterKind, d: usize) -> bool {
    op == Operation::Contract
        && pi == ParameterKind::Independence
        && (1..=MAX_BIPARTITE_D).contains(&d)
        && g.is_connected()
        && is_bipartite(g).is_some()
}

fn solve(
    path: &Path,
    op: Operation,
    pi: ParameterKind,
    k: usize,
    d: usize,
    engine: Engine,
) -> Result<Outcome, String> {
    let g = read_graph(path)?;
    let used = match engine {
        Engine::Auto if bipartite_applies(&g, op, pi, d) => Engine::Bipartite,
        Engine::Auto => Engine::Brute,
        Engine::Bipartite if op != Operation::Contract || pi != ParameterKind::Independence => {
            return Err("the bipartite engine only handles --op contract --pi alpha".into());
        }
        other => other,
    };
    let result: BlockerResult = match used {
        Engine::Bipartite => solve_bipartite_contraction_alpha(&g, k, d),
        _ => BlockerInstance::new(g.clone(), op, pi, k, d).and_then(|inst| solve_bruteforce(&inst)),
    }
    .map_err(|e| e.to_string())?;

    let verification = match &result.witness {
        None => "none",
        Some(w) => {
            let ok = w.len() <= k
                && check_critical_with_limit(&g, w, pi, d, usize::MAX)
                    .map_err(|e| e.to_string())?;
            if !ok {
                return Err(format!("internal: witness {w:?} failed re-verification"));
            }
            "passed"
        }
    };
    let report = json!({
        "schema": SCHEMA,
        "command": {
            "name": "solve",
            "graph": path.display().to_string(),
            "op": op,
            "pi": pi,
            "k": k,
            "d": d,
            "engine": engine,
        },
        "instance": { "n": g.n(), "m": g.m() },
        "engine": used,
        "answer": result.answer,
        "witness": result.witness,
        "pi_before": result.pi_before,
        "pi_after": result.pi_after,
        "verification": verification,
    });
    Ok(Outcome {
        report,
        code: if result.is_yes() { 0 } else { 1 },
    })
}

fn reduce(
    from: Source,
    to: Target,
    input: &Path,
    out: &Path,
    k: Option<usize>,
) -> Result<Outcome, String> {
    let text = read(input)?;
    let err = |e: Error| format!("{}: {e}", input.display());
    let (graph, roles, warnings, expected) = match to {
        Target::ChordalContract | Target::ChordalDelete => {
            let phi = match from {
                Source::Wp2sat => Wp2SatInstance::parse(&text).map_err(err)?,
                Source::Vc => {
                    let g = parse_edge_list(&text).map_err(err)?;
                    let k = k.ok_or("--from vc --to chordal-* needs --k")?;
                    vc_to_wp2sat(&g, k)
                }
            };
            let gadget = build_chordal_gadget(&phi);
            let expected = json!({ "alpha": gadget.expected_alpha(), "k": phi.k() });
            (
                gadget.graph.clone(),
                gadget.roles(),
                gadget.degeneracies(),
                expected,
            )
        }
        Target::ApexOmega => {
            let base = match from {
                Source::Vc => parse_edge_list(&text).map_err(err)?,
                Source::Wp2sat => {
                    let phi = Wp2SatInstance::parse(&text).map_err(err)?;
                    Graph::from_edges(phi.num_vars(), phi.clauses().iter().copied()).map_err(err)?
                }
            };
            let gadget = build_apex_gadget(&base).map_err(err)?;
            (
                gadget.graph.clone(),
                gadget.roles(),
                Vec::new(),
                json!({ "omega": 3 }),
            )
        }
    };
    for w in &warnings {
        eprintln!("warning: {w}");
    }

    let sidecar = roles_path(out);
    write(out, &serialize_edge_list(&graph))?;
    let roles_json = json!({ "schema": SCHEMA, "roles": roles_with_ids(&roles) });
    write(
        &sidecar,
        &(serde_json::to_string_pretty(&roles_json).expect("roles serialize") + "\n"),
    )?;

    let pi = match to {
        Target::ApexOmega => parameter_value_with_limit(&graph, ParameterKind::Clique, usize::MAX),
        _ => parameter_value_with_limit(&graph, ParameterKind::Independence, usize::MAX),
    }
    .map_err(|e| e.to_string())?;
    let report = json!({
        "schema": SCHEMA,
        "command": {
            "name": "reduce",
            "from": from,
            "to": to,
            "in": input.display().to_string(),
            "out": out.display().to_string(),
            "k": k,
        },
        "gadget": { "n": graph.n(), "m": graph.m(), "roles": sidecar.display().to_string() },
        "expected": expected,
        "pi": pi,
        "warnings": warnings,
    });
    Ok(Outcome { report, code: 0 })
}

/// `gadget.el` → `gadget.el.roles.json`.
fn roles_path(out: &Path) -> PathBuf {
    let mut name = out.as_os_str().to_owned();
    name.push(".roles.json");
    PathBuf::from(name)
}

fn roles_with_ids(roles: &[Role]) -> Vec<Value> {
    roles
        .iter()
        .enumerate()
        .map(|(v, role)| {
            let mut entry = serde_json::to_value(role).expect("roles serialize");
            entry["id"] = json!(v);
            entry
        })
        .collect()
}

fn verify(
    suite: Suite,
    seed: u64,
    count: Option<usize>,
    max_n: Option<usize>,
) -> Result<Outcome, String> {
    let mut cfg: SuiteConfig = suite.config(seed);
    cfg.count = count.unwrap_or(cfg.count);
    cfg.max_n = max_n.unwrap_or(cfg.max_n);
    let report = suite.run(&cfg).map_err(|e| e.to_string())?;
    for c in &report.counterexamples {
        eprintln!(
            "counterexample ({}): {}\n{}",
            c.params, c.reason, c.instance
        );
    }
    let passed = report.passed();
    let mut value = serde_json::to_value(&report).expect("reports serialize");
    value["schema"] = json!(SCHEMA);
    value["passed"] = json!(passed);
    Ok(Outcome {
        report: value,
        code: if passed { 0 } else { 1 },
    })
}
