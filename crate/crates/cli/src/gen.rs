//! `ecdel generate <reduction>`.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Subcommand};
use ecdel::bench::sidecar_path;
use ecdel::generate::{
    chain_solution, gen_2p4d_b2sat, gen_ccd_hs, gen_ccld_vc, gen_cpd_hs, gen_cpld_b2sat,
    gen_lift_2p3d, gen_path_chain, hs_brute, parse_dimacs, parse_hs, parse_sets, parse_vc,
    two_subdivision, CnfB2Formula, GeneratedInstance, HittingSetInstance, VertexCoverInstance,
};
use ecdel::graph::{parse_graph, write_graph};
use ecdel::{ColoredGraph, PatternSpec};
use serde_json::{json, Value};

use crate::read_input;

#[derive(Args)]
pub struct GenerateArgs {
    #[command(subcommand)]
    reduction: Reduction,
    /// Write the ECG file here and its metadata to `<stem>.meta.json`;
    /// without it the instance goes to standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Reduction {
    /// Periodically colored path with `d` disjoint windows.
    PathChain {
        #[arg(long)]
        colors: usize,
        #[arg(long)]
        len: usize,
        #[arg(long, default_value_t = 1)]
        d: usize,
    },
    /// (3,B2)-SAT to c-colored P_len deletion, max degree 3, large girth.
    CpldB2sat {
        /// DIMACS CNF file with every clause of size 3 and each literal
        /// occurring exactly twice.
        #[arg(long)]
        formula: PathBuf,
        #[arg(long, default_value_t = 4)]
        len: usize,
        #[arg(long, default_value_t = 2)]
        colors: usize,
        #[arg(long, default_value_t = 1)]
        d: usize,
    },
    /// Bicolored P3 deletion to (len−1)-colored P_len deletion.
    Lift2p3d {
        /// Bicolored ECG file.
        #[arg(long)]
        input: PathBuf,
        #[arg(short = 'k')]
        k: usize,
        #[arg(long)]
        len: usize,
    },
    /// Replaces each edge of a single-colored graph by a path of length 3;
    /// writes a vertex cover instance with its tripartition.
    Subdivide {
        /// Single-colored ECG file.
        #[arg(long)]
        input: PathBuf,
        /// Budget of the written instance.
        #[arg(short = 'k')]
        k: usize,
    },
    /// Vertex cover on tripartite triangle-free graphs to c-colored C_len
    /// deletion.
    CcldVc {
        /// Vertex cover file (`p vc n m k`, `e u v`, `t v part`).
        #[arg(long)]
        instance: PathBuf,
        #[arg(long, default_value_t = 3)]
        len: usize,
        #[arg(long, default_value_t = 3)]
        colors: usize,
    },
    /// Hitting set to 3-colored P_{1+3η} deletion.
    CpdHs(HsArgs),
    /// Hitting set to 4-colored C_{2+3η} deletion.
    CcdHs(HsArgs),
    /// (3,B2)-SAT to bicolored P4 deletion on double cluster graphs.
    #[command(name = "2p4d-b2sat")]
    TwoP4dB2sat {
        #[arg(long)]
        formula: PathBuf,
    },
}

#[derive(Args)]
struct HsArgs {
    /// Inline family such as `1;1 2;3`.
    #[arg(
        long,
        conflicts_with = "instance",
        required_unless_present = "instance"
    )]
    sets: Option<String>,
    /// Hitting set file (`p hs η μ k` then one set per line).
    #[arg(long)]
    instance: Option<PathBuf>,
    /// Budget; defaults to the minimum hitting set size for `--sets` and
    /// to the file's budget for `--instance`.
    #[arg(short = 'k')]
    k: Option<usize>,
}

impl HsArgs {
    fn load(&self) -> Result<HittingSetInstance> {
        let mut inst = match (&self.sets, &self.instance) {
            (Some(text), _) => parse_sets(text, 0)?,
            (None, Some(path)) => parse_hs(&read_input(path)?)?,
            (None, None) => bail!("give --sets or --instance"),
        };
        match self.k {
            Some(k) => inst.k = k,
            None if self.sets.is_some() => inst.k = hs_brute(&inst)?,
            None => {}
        }
        Ok(inst)
    }
}

fn formula(path: &Path) -> Result<CnfB2Formula> {
    parse_dimacs(&read_input(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn graph(path: &Path) -> Result<ColoredGraph> {
    parse_graph(&read_input(path)?).with_context(|| format!("parsing {}", path.display()))
}

/// An instance ready to write: graph, header comments and sidecar.
struct Output {
    graph: ColoredGraph,
    spec: PatternSpec,
    k: usize,
    meta: Value,
}

impl From<GeneratedInstance> for Output {
    fn from(inst: GeneratedInstance) -> Output {
        let meta = inst.metadata();
        Output {
            graph: inst.graph,
            spec: inst.spec,
            k: inst.k,
            meta,
        }
    }
}

fn write_text(out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            out!("{text}");
            Ok(())
        }
    }
}

fn emit(o: Output, out: &Option<PathBuf>) -> Result<()> {
    let spec_json = serde_json::to_string(&o.spec)?;
    match out {
        Some(path) => {
            write_text(out, &write_graph(&o.graph))?;
            let side = sidecar_path(path);
            let doc = serde_json::to_string_pretty(&o.meta)? + "\n";
            fs::write(&side, doc).with_context(|| format!("writing {}", side.display()))?;
            outln!("spec: {}", o.spec);
            outln!("spec-json: {spec_json}");
            outln!("k: {}", o.k);
        }
        None => {
            out!("c spec {}\nc spec-json {spec_json}\nc k {}\n", o.spec, o.k);
            out!("{}", write_graph(&o.graph));
        }
    }
    Ok(())
}

pub fn run(a: &GenerateArgs) -> Result<ExitCode> {
    let out = &a.out;
    let o: Output = match &a.reduction {
        Reduction::PathChain { colors, len, d } => {
            let graph = gen_path_chain(*colors, *len, *d)?;
            let spec = PatternSpec::path(*len, *colors as u32);
            let solution = chain_solution(*colors, *len, *d)?;
            let sol: Vec<[usize; 2]> = solution.iter().map(|e| [e.u + 1, e.v + 1]).collect();
            let meta = json!({
                "spec": spec,
                "k": d - 1,
                "provenance": { "reduction": "path-chain", "params": { "c": colors, "len": len, "d": d } },
                "solution": sol,
            });
            Output {
                graph,
                spec,
                k: d - 1,
                meta,
            }
        }
        Reduction::CpldB2sat {
            formula: f,
            len,
            colors,
            d,
        } => gen_cpld_b2sat(&formula(f)?, *len, *colors, *d)?.into(),
        Reduction::Lift2p3d { input, k, len } => gen_lift_2p3d(&graph(input)?, *k, *len)?.into(),
        Reduction::Subdivide { input, k } => {
            let h = graph(input)?;
            if h.colors() != 1 {
                bail!(
                    "subdivide expects a single-colored graph, got {} colors",
                    h.colors()
                );
            }
            let (g, parts) = two_subdivision(&h);
            let vc = VertexCoverInstance::new(g, *k, Some(parts))?;
            write_text(out, &vc.to_text())?;
            return Ok(ExitCode::SUCCESS);
        }
        Reduction::CcldVc {
            instance,
            len,
            colors,
        } => gen_ccld_vc(&parse_vc(&read_input(instance)?)?, *len, *colors)?.into(),
        Reduction::CpdHs(h) => gen_cpd_hs(&h.load()?)?.into(),
        Reduction::CcdHs(h) => gen_ccd_hs(&h.load()?)?.into(),
        Reduction::TwoP4dB2sat { formula: f } => gen_2p4d_b2sat(&formula(f)?)?.into(),
    };
    emit(o, out)?;
    Ok(ExitCode::SUCCESS)
}
