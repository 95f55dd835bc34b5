//! The `dinterval` command line.
//!
//! Exit codes: 0 yes/ok, 1 no/violation, 2 usage or input error, 3 budget
//! exhausted.

use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use dinterval_core::construction::{
    build_disjoint_unit_d_rep_eclaw_free, build_unit_d_rep, BuildOptions, ConstructionError,
};
use dinterval_core::generators::{
    balanced_gadget, complete_bipartite, counterexample_d, counterexample_graph,
    random_interval_rep,
};
use dinterval_core::graph::{find_e_claw, has_induced_star};
use dinterval_core::interval::{d_intersection_graph, verify_representation, Requirements};
use dinterval_core::recognition::recognize_interval;
use dinterval_core::split::{
    verify_split, Mode, PruneRule, SearchLimits, SearchOutcome, SplitSolution,
};
use dinterval_core::{DIntervalRep, Graph, VerifyReport};

use crate::bench;
use crate::edgelist::{parse_graph, write_graph};
use crate::repfile::{parse_rep, rep_from_value, rep_to_value, write_rep};
use crate::runtime::{search_parallel, stats_line, LogLevel};
use crate::svg::render_svg;

pub const EXIT_OK: u8 = 0;
pub const EXIT_NO: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_BUDGET: u8 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "dinterval",
    version,
    about = "Unit d-interval representations of interval graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether a graph is an interval graph and print a representation.
    RecognizeInterval {
        graph: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// Look for an induced K_{1,t}, or an E-claw with --e-claw.
    ClawCheck {
        #[arg(short = 't', default_value_t = 3)]
        t: usize,
        #[arg(long)]
        e_claw: bool,
        graph: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Build a unit d-interval representation of an interval graph.
    BuildUnit(Build),
    /// Build a disjoint unit d-interval representation of an E-claw-free
    /// interval graph.
    BuildDisjointUnit(Build),
    /// Decide (disjoint) unit 2-interval membership by split search.
    CheckSplit {
        #[arg(long, default_value = "disjoint")]
        mode: Mode,
        graph: PathBuf,
        #[arg(long)]
        node_budget: Option<u64>,
        /// Seconds.
        #[arg(long)]
        time_budget: Option<u64>,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long)]
        json: bool,
    },
    /// Check a representation file against a graph.
    Verify {
        #[arg(long)]
        unit: bool,
        #[arg(long)]
        disjoint: bool,
        #[arg(long)]
        balanced: bool,
        rep: PathBuf,
        graph: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Write a named graph (edge list) or a random representation (JSON).
    ///
    /// Names: counterexample:<0..5>, counterexample-d:<d>,
    /// balanced-gadget:<d>, kbip:<a>,<b>, random:<n>,<max_m>,<seed>.
    Gen {
        name: String,
        /// For random:… write the intersection graph instead.
        #[arg(long)]
        graph: bool,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Draw a representation file as SVG.
    Render {
        rep: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Time the transform phase on random representations.
    Bench {
        #[arg(long, value_delimiter = ',', default_value = "25000,50000,100000")]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 4)]
        max_m: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        repeats: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args, Debug)]
struct Output {
    #[arg(short, long)]
    out: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct Build {
    #[arg(short = 'd', default_value_t = 2)]
    d: usize,
    /// Edge list, or a one-interval-per-vertex representation file.
    input: PathBuf,
    /// Do not pad vertices to exactly d intervals.
    #[arg(long)]
    no_pad: bool,
    #[command(flatten)]
    output: Output,
}

struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

type Outcome = Result<u8, Failure>;

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Io<'_> {
    fn print(&mut self, text: &str) -> Result<(), Failure> {
        self.out
            .write_all(text.as_bytes())
            .map_err(|e| usage(format!("cannot write output: {e}")))
    }

    fn json(&mut self, value: &Value) -> Result<(), Failure> {
        let text = serde_json::to_string_pretty(value).expect("serializable");
        self.print(&text)?;
        self.print("\n")
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| usage(format!("cannot read stdin: {e}")))?;
        return Ok(text);
    }
    fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    parse_graph(&read(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn load_rep(path: &Path) -> Result<DIntervalRep, Failure> {
    parse_rep(&read(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| usage(format!("cannot write {}: {e}", path.display())))
}

/// Writes an artifact to `--out`, or to stdout unless it goes into the JSON
/// summary.
fn emit(io: &mut Io, output: &Output, text: &str) -> Result<(), Failure> {
    match &output.out {
        Some(path) => write_file(path, text),
        None if output.json => Ok(()),
        None => io.print(text),
    }
}

fn report_value(report: &VerifyReport) -> Value {
    let violations: Vec<Value> = report
        .violations
        .iter()
        .map(|v| {
            json!({
                "kind": v.kind.as_str(),
                "vertices": v.vertices,
                "intervals": v.intervals.iter().map(|iv| json!([iv.l.to_string(), iv.r.to_string()])).collect::<Vec<_>>(),
                "detail": v.detail,
            })
        })
        .collect();
    json!({ "ok": report.ok(), "violations": violations })
}

fn report_text(report: &VerifyReport) -> String {
    if report.ok() {
        return "ok\n".to_string();
    }
    let mut out = String::new();
    for v in &report.violations {
        out.push_str(&format!(
            "{}: {} (vertices {:?})\n",
            v.kind, v.detail, v.vertices
        ));
    }
    out
}

fn solution_value(s: &SplitSolution) -> Value {
    let edges: Vec<Value> = s
        .rep_edges
        .iter()
        .map(|(&(u, v), pairs)| json!({ "edge": [u, v], "pairs": pairs }))
        .collect();
    json!({
        "split": s.split,
        "internal": s.internal_edges,
        "rep_edges": edges,
    })
}

fn solution_text(g: &Graph, s: &SplitSolution) -> String {
    let mut out = format!("split: {:?}\n", s.split);
    if !s.internal_edges.is_empty() {
        out.push_str(&format!("internal: {:?}\n", s.internal_edges));
    }
    for (v, i) in s.representatives(g.n()) {
        if !s.is_split(v) {
            continue;
        }
        let nb: Vec<String> = s
            .rep_neighbors(v, i)
            .into_iter()
            .map(|(u, j)| {
                if s.is_split(u) {
                    format!("{u}_{j}")
                } else {
                    u.to_string()
                }
            })
            .collect();
        out.push_str(&format!("{v}_{i}: {}\n", nb.join(" ")));
    }
    out
}

fn recognize(io: &mut Io, graph: &Path, output: &Output) -> Outcome {
    let g = load_graph(graph)?;
    let Some(rep) = recognize_interval(&g) else {
        if output.json {
            io.json(&json!({ "interval": false, "representation": null }))?;
        } else {
            io.print("not an interval graph\n")?;
        }
        return Ok(EXIT_NO);
    };
    let report = verify_representation(&rep, &g, Requirements::default());
    if !report.ok() {
        writeln!(io.err, "internal error: representation fails verification").ok();
        io.print(&report_text(&report))?;
        return Ok(EXIT_NO);
    }
    emit(io, output, &write_rep(&rep))?;
    if output.json {
        io.json(&json!({ "interval": true, "representation": rep_to_value(&rep) }))?;
    }
    Ok(EXIT_OK)
}

fn claw_check(io: &mut Io, t: usize, e_claw: bool, graph: &Path, json_out: bool) -> Outcome {
    let g = load_graph(graph)?;
    if e_claw {
        let w = find_e_claw(&g);
        if json_out {
            io.json(
                &json!({ "e_claw_free": w.is_none(), "witness": w.as_ref().map(|w| w.0.to_vec()) }),
            )?;
        } else {
            match &w {
                None => io.print("E-claw-free\n")?,
                Some(w) => io.print(&format!("induced E-claw: {:?}\n", w.0))?,
            }
        }
        return Ok(if w.is_none() { EXIT_OK } else { EXIT_NO });
    }
    if t == 0 {
        return Err(usage("-t must be at least 1"));
    }
    let w = has_induced_star(&g, t);
    if json_out {
        let witness = w
            .as_ref()
            .map(|w| json!({ "center": w.center, "leaves": w.leaves }));
        io.json(&json!({ "t": t, "free": w.is_none(), "witness": witness }))?;
    } else {
        match &w {
            None => io.print(&format!("K_{{1,{t}}}-free\n"))?,
            Some(w) => io.print(&format!(
                "induced K_{{1,{t}}}: [{}; {:?}]\n",
                w.center, w.leaves
            ))?,
        }
    }
    Ok(if w.is_none() { EXIT_OK } else { EXIT_NO })
}

fn build(io: &mut Io, args: &Build, disjoint: bool) -> Outcome {
    if args.d == 0 {
        return Err(usage("-d must be at least 1"));
    }
    let text = read(&args.input)?;
    let input = args.input.display();
    let (rep, g) = if text.trim_start().starts_with('{') {
        let rep = parse_rep(&text).map_err(|e| usage(format!("{input}: {e}")))?;
        if !rep.is_single() {
            return Err(usage(format!("{input}: expected one interval per vertex")));
        }
        let g = d_intersection_graph(&rep);
        (rep, g)
    } else {
        let g = parse_graph(&text).map_err(|e| usage(format!("{input}: {e}")))?;
        match recognize_interval(&g) {
            Some(rep) => (rep, g),
            None => {
                io.print("not an interval graph\n")?;
                return Ok(EXIT_NO);
            }
        }
    };
    let opts = BuildOptions {
        pad: !args.no_pad,
        ..BuildOptions::default()
    };
    let built = if disjoint {
        build_disjoint_unit_d_rep_eclaw_free(&rep, args.d, opts)
    } else {
        build_unit_d_rep(&rep, args.d, opts)
    };
    let built = match built {
        Ok(b) => b,
        Err(
            e @ (ConstructionError::ClawBoundExceeded { .. } | ConstructionError::NotEClawFree(_)),
        ) => {
            if args.output.json {
                io.json(&json!({ "ok": false, "error": e.to_string() }))?;
            } else {
                io.print(&format!("{e}\n"))?;
            }
            return Ok(EXIT_NO);
        }
        Err(e) => {
            writeln!(io.err, "construction failed: {e}").ok();
            return Ok(EXIT_NO);
        }
    };
    let req = Requirements {
        unit: true,
        disjoint,
        balanced: false,
    };
    let report = verify_representation(&built, &g, req);
    if !report.ok() || built.d() != args.d {
        writeln!(io.err, "internal error: output fails verification").ok();
        io.print(&report_text(&report))?;
        return Ok(EXIT_NO);
    }
    let text = write_rep(&built);
    emit(io, &args.output, &text)?;
    if args.output.json {
        io.json(&json!({ "ok": true, "d": args.d, "representation": rep_to_value(&built) }))?;
    } else if let Some(path) = &args.output.out {
        writeln!(
            io.err,
            "wrote {} intervals for {} vertices to {}",
            built.interval_count(),
            built.len(),
            path.display()
        )
        .ok();
    }
    Ok(EXIT_OK)
}

#[allow(clippy::too_many_arguments)]
fn check_split(
    io: &mut Io,
    mode: Mode,
    graph: &Path,
    node_budget: Option<u64>,
    time_budget: Option<u64>,
    threads: usize,
    json_out: bool,
    log: LogLevel,
) -> Outcome {
    let g = load_graph(graph)?;
    let mut limits = SearchLimits::default();
    if let Some(n) = node_budget {
        limits.node_budget = n;
    }
    if let Some(s) = time_budget {
        limits.time_budget_ms = Some(s.saturating_mul(1000));
    }
    if threads == 0 {
        return Err(usage("--threads must be at least 1"));
    }
    let sink: Mutex<Box<dyn Write + Send>> = Mutex::new(Box::new(std::io::stderr()));
    let result =
        search_parallel(&g, mode, limits, threads, log, &sink).map_err(|e| usage(e.to_string()))?;
    let (verdict, code) = match &result.outcome {
        SearchOutcome::Yes(s) => {
            if !verify_split(&g, s, mode).ok() {
                writeln!(
                    io.err,
                    "internal error: split certificate fails verification"
                )
                .ok();
                return Ok(EXIT_NO);
            }
            ("yes", EXIT_OK)
        }
        SearchOutcome::No => ("no", EXIT_NO),
        SearchOutcome::Exhausted => ("exhausted", EXIT_BUDGET),
    };
    if json_out {
        let prunes: serde_json::Map<String, Value> = PruneRule::ALL
            .iter()
            .map(|r| {
                (
                    r.as_str().to_string(),
                    json!(result.stats.prunes[*r as usize]),
                )
            })
            .collect();
        let solution = match &result.outcome {
            SearchOutcome::Yes(s) => solution_value(s),
            _ => Value::Null,
        };
        io.json(&json!({
            "mode": mode.as_str(),
            "verdict": verdict,
            "nodes": result.stats.nodes,
            "prunes": prunes,
            "solution": solution,
        }))?;
    } else {
        io.print(&format!("{verdict}\n"))?;
        match &result.outcome {
            SearchOutcome::Yes(s) => io.print(&solution_text(&g, s))?,
            SearchOutcome::Exhausted => io.print(&format!("{}\n", stats_line(&result.stats)))?,
            SearchOutcome::No => {}
        }
    }
    Ok(code)
}

fn verify(io: &mut Io, req: Requirements, rep: &Path, graph: &Path, json_out: bool) -> Outcome {
    let rep = load_rep(rep)?;
    let g = load_graph(graph)?;
    let report = verify_representation(&rep, &g, req);
    if json_out {
        io.json(&report_value(&report))?;
    } else {
        io.print(&report_text(&report))?;
    }
    Ok(if report.ok() { EXIT_OK } else { EXIT_NO })
}

fn numbers(name: &str, args: &str, count: usize) -> Result<Vec<u64>, Failure> {
    let values: Result<Vec<u64>, _> = args.split(',').map(|s| s.trim().parse::<u64>()).collect();
    match values {
        Ok(v) if v.len() == count => Ok(v),
        _ => Err(usage(format!(
            "`{name}` expects {count} comma-separated integer(s)"
        ))),
    }
}

enum Generated {
    Graph(Graph),
    Rep(DIntervalRep),
}

fn generate(spec: &str, as_graph: bool) -> Result<Generated, Failure> {
    let (name, args) = spec.split_once(':').ok_or_else(|| {
        usage(format!(
            "generator `{spec}` needs parameters, e.g. counterexample:0"
        ))
    })?;
    let gen_err = |e: dinterval_core::generators::GenError| usage(e.to_string());
    let g = match name {
        "counterexample" => {
            counterexample_graph(numbers(name, args, 1)?[0] as usize).map_err(gen_err)?
        }
        "counterexample-d" => {
            counterexample_d(numbers(name, args, 1)?[0] as usize).map_err(gen_err)?
        }
        "balanced-gadget" => {
            balanced_gadget(numbers(name, args, 1)?[0] as usize).map_err(gen_err)?
        }
        "kbip" => {
            let v = numbers(name, args, 2)?;
            if v[0] + v[1] == 0 {
                return Err(usage("kbip needs at least one vertex"));
            }
            complete_bipartite(v[0] as usize, v[1] as usize)
        }
        "random" => {
            let v = numbers(name, args, 3)?;
            if v[0] == 0 || v[1] == 0 {
                return Err(usage("random needs n >= 1 and max_m >= 1"));
            }
            let rep = random_interval_rep(v[0] as usize, v[1] as usize, v[2]);
            return Ok(if as_graph {
                Generated::Graph(d_intersection_graph(&rep))
            } else {
                Generated::Rep(rep)
            });
        }
        other => return Err(usage(format!("unknown generator `{other}`"))),
    };
    Ok(Generated::Graph(g))
}

fn gen(io: &mut Io, spec: &str, as_graph: bool, out: Option<&Path>) -> Outcome {
    let text = match generate(spec, as_graph)? {
        Generated::Graph(g) => {
            let text = write_graph(&g);
            if parse_graph(&text).ok().as_ref() != Some(&g) {
                writeln!(io.err, "internal error: edge list does not round-trip").ok();
                return Ok(EXIT_NO);
            }
            text
        }
        Generated::Rep(rep) => {
            let text = write_rep(&rep);
            if parse_rep(&text).ok().as_ref() != Some(&rep) {
                writeln!(io.err, "internal error: representation does not round-trip").ok();
                return Ok(EXIT_NO);
            }
            text
        }
    };
    match out {
        Some(path) => write_file(path, &text)?,
        None => io.print(&text)?,
    }
    Ok(EXIT_OK)
}

fn render(io: &mut Io, rep: &Path, out: Option<&Path>) -> Outcome {
    let svg = render_svg(&load_rep(rep)?);
    match out {
        Some(path) => write_file(path, &svg)?,
        None => io.print(&svg)?,
    }
    Ok(EXIT_OK)
}

fn bench_cmd(
    io: &mut Io,
    sizes: &[usize],
    max_m: usize,
    seed: u64,
    repeats: usize,
    json_out: bool,
) -> Outcome {
    if max_m == 0 || sizes.is_empty() || sizes.contains(&0) {
        return Err(usage("bench needs positive sizes and --max-m"));
    }
    let rows = bench::scaling(sizes, max_m, seed, repeats).map_err(|e| usage(e.to_string()))?;
    if json_out {
        let rows: Vec<Value> = rows
            .iter()
            .map(|r| {
                json!({
                    "n": r.n,
                    "pieces": r.pieces,
                    "ms": r.time.as_secs_f64() * 1e3,
                    "ratio": r.ratio,
                })
            })
            .collect();
        io.json(&json!({ "max_m": max_m, "seed": seed, "rows": rows }))?;
    } else {
        io.print(&bench::table(&rows))?;
    }
    Ok(EXIT_OK)
}

/// Runs one invocation and returns its exit code. `args` includes the
/// program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code() as u8;
            if code == 0 {
                let _ = out.write_all(text.as_bytes());
            } else {
                let _ = err.write_all(text.as_bytes());
            }
            return code;
        }
    };
    let log = match LogLevel::from_env() {
        Ok(l) => l,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let mut io = Io { out, err };
    let result = match cli.command {
        Command::RecognizeInterval { graph, output } => recognize(&mut io, &graph, &output),
        Command::ClawCheck {
            t,
            e_claw,
            graph,
            json,
        } => claw_check(&mut io, t, e_claw, &graph, json),
        Command::BuildUnit(args) => build(&mut io, &args, false),
        Command::BuildDisjointUnit(args) => build(&mut io, &args, true),
        Command::CheckSplit {
            mode,
            graph,
            node_budget,
            time_budget,
            threads,
            json,
        } => check_split(
            &mut io,
            mode,
            &graph,
            node_budget,
            time_budget,
            threads,
            json,
            log,
        ),
        Command::Verify {
            unit,
            disjoint,
            balanced,
            rep,
            graph,
            json,
        } => verify(
            &mut io,
            Requirements {
                unit,
                disjoint,
                balanced,
            },
            &rep,
            &graph,
            json,
        ),
        Command::Gen { name, graph, out } => gen(&mut io, &name, graph, out.as_deref()),
        Command::Render { rep, out } => render(&mut io, &rep, out.as_deref()),
        Command::Bench {
            sizes,
            max_m,
            seed,
            repeats,
            json,
        } => bench_cmd(&mut io, &sizes, max_m, seed, repeats, json),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(io.err, "error: {}", f.message);
            f.code
        }
    }
}

/// A representation embedded in a JSON summary, as printed with `--json`.
pub fn representation_in(summary: &Value) -> Option<DIntervalRep> {
    rep_from_value(summary.get("representation")?).ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (u8, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("dinterval").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(call(&[]).0, EXIT_USAGE);
        assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(call(&["gen", "nothing:1"]).0, EXIT_USAGE);
        assert_eq!(call(&["gen", "counterexample:9"]).0, EXIT_USAGE);
        assert_eq!(call(&["gen", "kbip:3"]).0, EXIT_USAGE);
        assert_eq!(
            call(&["check-split", "--mode", "sideways", "x.el"]).0,
            EXIT_USAGE
        );
        let (code, _, err) = call(&["verify", "/nonexistent.json", "/nonexistent.el"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("cannot read"));
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = call(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("check-split"));
    }

    #[test]
    fn gen_writes_formats() {
        let (code, out, _) = call(&["gen", "kbip:2,1"]);
        assert_eq!(code, 0);
        assert_eq!(out, "p 3\ne 1 3\ne 2 3\n");
        let (code, out, _) = call(&["gen", "random:5,2,7"]);
        assert_eq!(code, 0);
        assert_eq!(parse_rep(&out).unwrap(), random_interval_rep(5, 2, 7));
        let (_, out, _) = call(&["gen", "random:5,2,7", "--graph"]);
        assert_eq!(
            parse_graph(&out).unwrap(),
            d_intersection_graph(&random_interval_rep(5, 2, 7))
        );
    }
}
