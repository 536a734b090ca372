//! Runs several algorithms over a corpus of instances and checks that they
//! agree.
//!
//! A corpus is a directory of `*.ecg` files, each with a sidecar
//! `<stem>.meta.json` holding at least `spec` and optionally `k` (the files
//! written by `ecdel generate` qualify). Instances are processed in file
//! name order.

use std::fs;
use std::path::Path;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{parse_graph, ColoredGraph};
use crate::pattern::PatternSpec;
use crate::solve::{solve, Algorithm, Limits, SolveRequest};

#[derive(Clone, Debug)]
pub struct BenchInstance {
    pub name: String,
    pub graph: ColoredGraph,
    pub spec: PatternSpec,
    /// `None` asks every algorithm for an optimum.
    pub k: Option<usize>,
}

#[derive(Deserialize)]
struct Sidecar {
    spec: PatternSpec,
    #[serde(default)]
    k: Option<usize>,
}

/// Sidecar path for an ECG file: `dir/name.ecg` gives `dir/name.meta.json`.
pub fn sidecar_path(ecg: &Path) -> std::path::PathBuf {
    ecg.with_extension("meta.json")
}

/// Loads every `*.ecg` file of `dir` with its sidecar.
pub fn load_corpus(dir: &Path) -> Result<Vec<BenchInstance>> {
    let io =
        |p: &Path, e: std::io::Error| Error::MalformedInstance(format!("{}: {e}", p.display()));
    let mut files: Vec<_> = fs::read_dir(dir)
        .map_err(|e| io(dir, e))?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "ecg"))
        .collect();
    files.sort();
    files
        .into_iter()
        .map(|path| {
            let graph = parse_graph(&fs::read_to_string(&path).map_err(|e| io(&path, e))?)?;
            let meta_path = sidecar_path(&path);
            let meta_text = fs::read_to_string(&meta_path).map_err(|e| io(&meta_path, e))?;
            let meta: Sidecar = serde_json::from_str(&meta_text)
                .map_err(|e| Error::MalformedInstance(format!("{}: {e}", meta_path.display())))?;
            meta.spec.validate()?;
            let name = path
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_default();
            Ok(BenchInstance {
                name,
                graph,
                spec: meta.spec,
                k: meta.k,
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BenchRow {
    pub instance: String,
    pub algorithm: String,
    /// `yes`, `no`, `optimum`, `n/a` (algorithm does not apply) or `limit`
    /// (a resource cap was hit).
    pub status: String,
    pub size: Option<usize>,
    pub nodes: u64,
    #[serde(skip)]
    pub time: Duration,
    pub note: Option<String>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
    pub disagreements: Vec<String>,
}

impl BenchReport {
    pub fn agrees(&self) -> bool {
        self.disagreements.is_empty()
    }
}

/// Errors meaning the algorithm does not handle this instance. Specs are
/// validated on load, so an `InvalidSpec` here is a mode restriction.
fn not_applicable(e: &Error) -> bool {
    matches!(
        e,
        Error::SpecNotColorDiverse(_)
            | Error::NotInClassT(_)
            | Error::NotBicolored(_)
            | Error::InvalidParams(_)
            | Error::InvalidSpec(_)
    )
}

/// Runs each algorithm on each instance. Algorithms that do not apply to an
/// instance yield `n/a` rows and capped runs yield `limit` rows; neither
/// takes part in the agreement check. Any other error aborts the run.
pub fn run_bench(
    corpus: &[BenchInstance],
    algorithms: &[Algorithm],
    limits: &Limits,
) -> Result<BenchReport> {
    let mut report = BenchReport::default();
    for inst in corpus {
        let mut answers: Vec<(Algorithm, Option<usize>)> = Vec::new();
        for &algorithm in algorithms {
            let req = SolveRequest {
                graph: inst.graph.clone(),
                spec: inst.spec,
                budget: inst.k,
                algorithm,
                limits: limits.clone(),
            };
            let row = |status: &str, size, nodes, time, note| BenchRow {
                instance: inst.name.clone(),
                algorithm: algorithm.name().into(),
                status: status.into(),
                size,
                nodes,
                time,
                note,
            };
            match solve(&req) {
                Ok(r) => {
                    let size = r.status.solution().map(|s| s.len());
                    answers.push((algorithm, size));
                    report.rows.push(row(
                        r.status.name(),
                        size,
                        r.stats.nodes_explored,
                        r.stats.elapsed,
                        None,
                    ));
                }
                Err(e) if not_applicable(&e) => {
                    report
                        .rows
                        .push(row("n/a", None, 0, Duration::ZERO, Some(e.to_string())))
                }
                Err(Error::ResourceLimit(msg)) => {
                    report
                        .rows
                        .push(row("limit", None, 0, Duration::ZERO, Some(msg)))
                }
                Err(e) => return Err(e),
            }
        }
        let optimizing = inst.k.is_none();
        if let Some(&(first, want)) = answers.first() {
            for &(other, got) in &answers[1..] {
                let differs = if optimizing {
                    got != want
                } else {
                    got.is_some() != want.is_some()
                };
                if differs {
                    let show = |x: Option<usize>| match (x, optimizing) {
                        (Some(s), true) => format!("optimum {s}"),
                        (Some(_), false) => "yes".to_string(),
                        (None, _) => "no".to_string(),
                    };
                    report.disagreements.push(format!(
                        "{}: {first} says {}, {other} says {}",
                        inst.name,
                        show(want),
                        show(got)
                    ));
                }
            }
        }
    }
    Ok(report)
}
