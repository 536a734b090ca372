//! `ecdel`: solve, inspect and generate edge-colored deletion instances.
//!
//! Exit codes: 0 for yes/optimum, 1 for no, 2 for any error.

// a closed pipe (`ecdel detect g.ecg | head`) is not an error
macro_rules! out {
    ($($t:tt)*) => {{
        use std::io::Write as _;
        let _ = write!(std::io::stdout(), $($t)*);
    }};
}

macro_rules! outln {
    ($($t:tt)*) => {{
        use std::io::Write as _;
        let _ = writeln!(std::io::stdout(), $($t)*);
    }};
}

mod gen;

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use ecdel::bench::{load_corpus, run_bench, sidecar_path};
use ecdel::classify::{
    cascade_status, colored_classes, is_color_diverse, recognize_t, ClassKind, ComponentClass,
};
use ecdel::graph::{parse_graph, structural_stats};
use ecdel::pattern::enumerate_capped;
use ecdel::solve::{solve, Algorithm, Limits, SolveRequest, Status};
use ecdel::{ColoredGraph, DeletionSet, Error, Mode, PatternSpec};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "ecdel",
    version,
    about = "Edge deletion against colored paths and cycles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide (with -k) or optimize the deletion problem on an ECG file.
    Solve(SolveArgs),
    /// List the occurrences of the pattern, one per line.
    Detect(DetectArgs),
    /// Report neighborhood classes, class-T structure and cascade status.
    Classify(ClassifyArgs),
    /// Build an instance from one of the reductions.
    Generate(gen::GenerateArgs),
    /// Run several algorithms over a directory of instances and compare.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Path,
    Cycle,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Induced,
    Subgraph,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Structured,
}

/// Pattern flags. When all of them are left out the spec is read from the
/// `<file>.meta.json` sidecar.
#[derive(Args)]
struct SpecArgs {
    #[arg(long, value_enum)]
    pattern: Option<KindArg>,
    /// Number of vertices of the pattern.
    #[arg(long)]
    len: Option<usize>,
    /// Exact number of distinct colors on the pattern.
    #[arg(long)]
    colors: Option<u32>,
    #[arg(long, value_enum)]
    mode: Option<ModeArg>,
}

impl SpecArgs {
    fn given(&self) -> bool {
        self.pattern.is_some() || self.len.is_some() || self.colors.is_some() || self.mode.is_some()
    }

    fn flag_spec(&self) -> Result<PatternSpec> {
        let (Some(kind), Some(len), Some(colors)) = (self.pattern, self.len, self.colors) else {
            bail!("--pattern, --len and --colors must be given together");
        };
        let spec = match kind {
            KindArg::Path => PatternSpec::path(len, colors),
            KindArg::Cycle => PatternSpec::cycle(len, colors),
        };
        let mode = match self.mode.unwrap_or(ModeArg::Induced) {
            ModeArg::Induced => Mode::Induced,
            ModeArg::Subgraph => Mode::Subgraph,
        };
        let spec = spec.with_mode(mode);
        spec.validate()?;
        Ok(spec)
    }

    /// Flags if any are given, else the sidecar of `file`.
    fn resolve(&self, file: &Path) -> Result<(PatternSpec, Option<usize>)> {
        if self.given() {
            return Ok((self.flag_spec()?, None));
        }
        match read_sidecar(file)? {
            Some(found) => Ok(found),
            None => bail!(
                "no pattern flags given and no sidecar {} found",
                sidecar_path(file).display()
            ),
        }
    }
}

#[derive(Args)]
struct LimitArgs {
    /// Cap on stored pattern occurrences.
    #[arg(long, default_value_t = Limits::default().occurrence_cap)]
    max_occurrences: usize,
    /// Largest edge count brute force accepts.
    #[arg(long, default_value_t = Limits::default().brute_edge_bound)]
    max_brute_edges: usize,
    /// Cap on bundles examined by the neighborhood-class solver.
    #[arg(long, default_value_t = Limits::default().bundle_cap)]
    max_bundles: usize,
    /// Cap on search nodes of the branching solver.
    #[arg(long, default_value_t = Limits::default().node_cap)]
    max_nodes: u64,
}

impl LimitArgs {
    fn limits(&self) -> Limits {
        Limits {
            occurrence_cap: self.max_occurrences,
            brute_edge_bound: self.max_brute_edges,
            bundle_cap: self.max_bundles,
            node_cap: self.max_nodes,
            ..Limits::default()
        }
    }
}

#[derive(Args)]
struct SolveArgs {
    /// ECG file, or `-` for standard input.
    file: PathBuf,
    #[command(flatten)]
    spec: SpecArgs,
    /// Deletion budget; omit to compute an optimum.
    #[arg(short = 'k')]
    k: Option<usize>,
    #[arg(long, default_value = "auto", value_parser = parse_algo)]
    algo: Algorithm,
    #[arg(long, value_enum, default_value = "human")]
    format: Format,
    #[command(flatten)]
    limits: LimitArgs,
    /// Include wall-clock time in the output.
    #[arg(long)]
    timings: bool,
}

#[derive(Args)]
struct DetectArgs {
    /// ECG file, or `-` for standard input.
    file: PathBuf,
    #[command(flatten)]
    spec: SpecArgs,
    #[arg(long, value_enum, default_value = "human")]
    format: Format,
    /// Cap on reported occurrences.
    #[arg(long, default_value_t = Limits::default().occurrence_cap)]
    max_occurrences: usize,
}

#[derive(Args)]
struct ClassifyArgs {
    /// ECG file, or `-` for standard input.
    file: PathBuf,
    /// Optional; enables the cascade report.
    #[command(flatten)]
    spec: SpecArgs,
    #[arg(long, value_enum, default_value = "human")]
    format: Format,
}

#[derive(Args)]
struct BenchArgs {
    /// Directory of `*.ecg` files with `.meta.json` sidecars.
    dir: PathBuf,
    /// Comma-separated algorithms.
    #[arg(long, value_delimiter = ',', default_value = "brute,branch", value_parser = parse_algo)]
    algos: Vec<Algorithm>,
    #[arg(long, value_enum, default_value = "human")]
    format: Format,
    #[command(flatten)]
    limits: LimitArgs,
}

fn parse_algo(s: &str) -> std::result::Result<Algorithm, Error> {
    s.parse()
}

pub(crate) fn read_input(file: &Path) -> Result<String> {
    if file == Path::new("-") {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .context("reading standard input")?;
        return Ok(text);
    }
    fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))
}

fn read_graph(file: &Path) -> Result<ColoredGraph> {
    parse_graph(&read_input(file)?).with_context(|| format!("parsing {}", file.display()))
}

fn read_sidecar(file: &Path) -> Result<Option<(PatternSpec, Option<usize>)>> {
    if file == Path::new("-") {
        return Ok(None);
    }
    let path = sidecar_path(file);
    if !path.exists() {
        return Ok(None);
    }
    let text = fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
    let doc: Value =
        serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    let spec: PatternSpec = serde_json::from_value(doc.get("spec").cloned().unwrap_or(Value::Null))
        .with_context(|| format!("{}: missing or bad `spec`", path.display()))?;
    spec.validate()?;
    let k = doc.get("k").and_then(Value::as_u64).map(|k| k as usize);
    Ok(Some((spec, k)))
}

pub(crate) fn print_structured(doc: &Value) {
    outln!(
        "{}",
        serde_json::to_string_pretty(doc).expect("JSON values serialize")
    );
}

fn edge_list(s: &DeletionSet) -> Value {
    json!(s.iter().map(|e| [e.u + 1, e.v + 1]).collect::<Vec<_>>())
}

fn run_solve(a: &SolveArgs) -> Result<ExitCode> {
    let graph = read_graph(&a.file)?;
    let (spec, _) = a.spec.resolve(&a.file)?;
    let req = SolveRequest {
        graph,
        spec,
        budget: a.k,
        algorithm: a.algo,
        limits: a.limits.limits(),
    };
    let r = solve(&req)?;
    let solution = r.status.solution();
    if a.format == Format::Structured {
        let mut stats = json!(r.stats);
        if a.timings {
            stats["elapsed_ms"] = json!(r.stats.elapsed.as_secs_f64() * 1e3);
        }
        print_structured(&json!({
            "status": r.status.name(),
            "solution": solution.map(edge_list),
            "size": solution.map(DeletionSet::len),
            "stats": stats,
            "algorithm": r.algorithm.name(),
            "spec": spec,
            "k": a.k,
        }));
    } else {
        outln!("pattern: {spec}");
        outln!("algorithm: {}", r.algorithm);
        outln!("status: {}", r.status.name());
        if let Some(s) = solution {
            outln!("size: {}", s.len());
            outln!("solution: {s}");
        }
        outln!("nodes explored: {}", r.stats.nodes_explored);
        outln!("patterns enumerated: {}", r.stats.patterns_enumerated);
        outln!("subsets tried: {}", r.stats.subsets_tried);
        if a.timings {
            outln!("time: {:.3} ms", r.stats.elapsed.as_secs_f64() * 1e3);
        }
    }
    Ok(match r.status {
        Status::No => ExitCode::from(1),
        _ => ExitCode::SUCCESS,
    })
}

fn run_detect(a: &DetectArgs) -> Result<ExitCode> {
    let graph = read_graph(&a.file)?;
    let (spec, _) = a.spec.resolve(&a.file)?;
    let occ = enumerate_capped(&graph, &spec, a.max_occurrences)?;
    if a.format == Format::Structured {
        let list: Vec<Vec<usize>> = occ
            .iter()
            .map(|o| o.vertices.iter().map(|v| v + 1).collect())
            .collect();
        print_structured(&json!({ "spec": spec, "count": occ.len(), "occurrences": list }));
    } else {
        let mut out = io::BufWriter::new(io::stdout().lock());
        let written = occ
            .iter()
            .try_for_each(|o| writeln!(out, "{o}"))
            .and_then(|()| out.flush());
        match written {
            Err(e) if e.kind() != io::ErrorKind::BrokenPipe => return Err(e.into()),
            _ => {}
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn one_based(vs: &[usize]) -> String {
    vs.iter()
        .map(|v| (v + 1).to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn component_line(i: usize, class: &ComponentClass) -> String {
    match class {
        ComponentClass::RbFence { k1, k2, matching } => {
            let m: Vec<String> = matching.iter().map(|e| e.to_string()).collect();
            format!(
                "component {i}: rb-fence (K1 = {}; K2 = {}; matching {})",
                one_based(k1),
                one_based(k2),
                m.join(" ")
            )
        }
        ComponentClass::RbCliqueStar {
            red_clique,
            blue_cliques,
        } => {
            let b: Vec<String> = blue_cliques
                .iter()
                .map(|(_, q)| format!("[{}]", one_based(q)))
                .collect();
            format!(
                "component {i}: rb-clique-star (red clique {}; blue cliques {})",
                one_based(red_clique),
                b.join(" ")
            )
        }
        ComponentClass::Rejected { witness } => {
            format!("component {i}: rejected, forbidden {witness}")
        }
    }
}

fn run_classify(a: &ClassifyArgs) -> Result<ExitCode> {
    let graph = read_graph(&a.file)?;
    let spec = if a.spec.given() {
        Some(a.spec.flag_spec()?)
    } else {
        read_sidecar(&a.file)?.map(|(s, _)| s)
    };
    let stats = structural_stats(&graph);
    let classes = colored_classes(&graph);
    let diverse = is_color_diverse(&graph);
    let t = match recognize_t(&graph) {
        Ok(d) => Some(d),
        Err(Error::NotBicolored(_)) => None,
        Err(e) => return Err(e.into()),
    };
    let cascade = spec.map(|s| cascade_status(&graph, &s)).transpose()?;

    if a.format == Format::Structured {
        let class_list: Vec<Value> = classes
            .classes
            .iter()
            .zip(&classes.kinds)
            .map(|(members, kind)| {
                let kind = match kind {
                    ClassKind::IndependentSet => json!("independent"),
                    ClassKind::Clique(c) => json!({ "clique": c }),
                };
                json!({ "vertices": members.iter().map(|v| v + 1).collect::<Vec<_>>(), "kind": kind })
            })
            .collect();
        let t_doc = t.as_ref().map(|d| {
            json!({
                "accepted": d.accepted(),
                "components": d.components.iter().enumerate()
                    .map(|(i, c)| component_line(i + 1, &c.class)).collect::<Vec<_>>(),
            })
        });
        print_structured(&json!({
            "n": graph.n(),
            "m": graph.edge_count(),
            "colors": graph.colors(),
            "max_degree": stats.max_degree,
            "girth": stats.girth,
            "components": stats.component_count,
            "gamma": classes.gamma(),
            "classes": class_list,
            "color_diverse": diverse,
            "class_t": t_doc,
            "spec": spec,
            "cascade": cascade.as_ref().map(|c| json!({
                "status": c.status,
                "witness": c.witness.as_ref().map(|o| o.to_string()),
            })),
        }));
        return Ok(ExitCode::SUCCESS);
    }

    outln!(
        "vertices: {}  edges: {}  colors: {}",
        graph.n(),
        graph.edge_count(),
        graph.colors()
    );
    let girth = stats.girth.map_or("none".to_string(), |g| g.to_string());
    outln!(
        "max degree: {}  girth: {girth}  components: {}",
        stats.max_degree,
        stats.component_count
    );
    outln!("gamma: {}", classes.gamma());
    for (i, (members, kind)) in classes.classes.iter().zip(&classes.kinds).enumerate() {
        let kind = match kind {
            ClassKind::IndependentSet => "independent".to_string(),
            ClassKind::Clique(c) => format!("clique of color {c}"),
        };
        outln!("  class {}: {} ({kind})", i + 1, one_based(members));
    }
    outln!("color diverse: {}", if diverse { "yes" } else { "no" });
    match &t {
        None => outln!("class T: not applicable (more than two colors in use)"),
        Some(d) => {
            outln!("class T: {}", if d.accepted() { "yes" } else { "no" });
            for (i, c) in d.components.iter().enumerate() {
                outln!("{}", component_line(i + 1, &c.class));
            }
        }
    }
    if let (Some(spec), Some(c)) = (spec, &cascade) {
        let name = match c.status {
            ecdel::classify::CascadeKind::StrictlyNonCascading => "strictly non-cascading",
            ecdel::classify::CascadeKind::NonCascading => "non-cascading",
            ecdel::classify::CascadeKind::Cascading => "cascading",
        };
        out!("cascade status for {spec}: {name}");
        match &c.witness {
            Some(o) => outln!(" (witness {o})"),
            None => outln!(),
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_bench_cmd(a: &BenchArgs) -> Result<ExitCode> {
    if a.algos.is_empty() {
        bail!("--algos needs at least one algorithm");
    }
    let corpus = load_corpus(&a.dir)?;
    let report = run_bench(&corpus, &a.algos, &a.limits.limits())?;
    if a.format == Format::Structured {
        print_structured(&json!(report));
    } else {
        outln!(
            "{:<24} {:<8} {:<8} {:>6} {:>10} {:>10}",
            "instance",
            "algo",
            "status",
            "size",
            "nodes",
            "time_ms"
        );
        for r in &report.rows {
            let size = r.size.map_or("-".to_string(), |s| s.to_string());
            outln!(
                "{:<24} {:<8} {:<8} {:>6} {:>10} {:>10.3}",
                r.instance,
                r.algorithm,
                r.status,
                size,
                r.nodes,
                r.time.as_secs_f64() * 1e3
            );
        }
    }
    for d in &report.disagreements {
        eprintln!("disagreement: {d}");
    }
    Ok(if report.agrees() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    })
}

fn run(cli: &Cli) -> Result<ExitCode> {
    match &cli.command {
        Command::Solve(a) => run_solve(a),
        Command::Detect(a) => run_detect(a),
        Command::Classify(a) => run_classify(a),
        Command::Generate(a) => gen::run(a),
        Command::Bench(a) => run_bench_cmd(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
