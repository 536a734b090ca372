//! Solvers: brute force, bounded search tree, class-bundle search and the
//! class 𝒯 solver, plus restriction of solutions to conflict edges.

mod branch;
mod brute;
mod cnd;
mod restrict;
mod tclass;

use std::fmt;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

pub use branch::{branch_solve, branch_solve_with, BranchConfig, DEFAULT_NODE_CAP};
pub use brute::{
    brute_force, brute_force_bounded, minimum_solutions, solutions_of_size,
    DEFAULT_BRUTE_EDGE_BOUND,
};
pub use cnd::{bundles, cnd_optimum, cnd_solve, cnd_solve_with, is_consistent, DEFAULT_BUNDLE_CAP};
pub use restrict::restrict_solution;
pub use tclass::solve_2p4d_on_t;

use crate::classify::{colored_classes, recognize_t, spec_is_color_diverse};
use crate::error::{Error, Result};
use crate::graph::{ColoredGraph, DeletionSet, BLUE, RED};
use crate::pattern::{find_one_masked, Mode, PatternSpec, DEFAULT_OCCURRENCE_CAP};

/// Answer of a decision solver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision {
    Yes(DeletionSet),
    No,
}

impl Decision {
    pub fn is_yes(&self) -> bool {
        matches!(self, Decision::Yes(_))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Algorithm {
    Brute,
    Branch,
    Cnd,
    TClass,
    Auto,
}

impl Algorithm {
    pub fn name(&self) -> &'static str {
        match self {
            Algorithm::Brute => "brute",
            Algorithm::Branch => "branch",
            Algorithm::Cnd => "cnd",
            Algorithm::TClass => "t-class",
            Algorithm::Auto => "auto",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Algorithm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "brute" => Algorithm::Brute,
            "branch" => Algorithm::Branch,
            "cnd" => Algorithm::Cnd,
            "t-class" => Algorithm::TClass,
            "auto" => Algorithm::Auto,
            _ => return Err(Error::InvalidParams(format!("unknown algorithm `{s}`"))),
        })
    }
}

/// Resource caps shared by all solvers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Limits {
    pub occurrence_cap: usize,
    pub brute_edge_bound: usize,
    pub bundle_cap: usize,
    pub node_cap: u64,
    /// `Auto` picks bundle search only when γ² + γ is at most this.
    pub cnd_gamma_threshold: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            occurrence_cap: DEFAULT_OCCURRENCE_CAP,
            brute_edge_bound: DEFAULT_BRUTE_EDGE_BOUND,
            bundle_cap: DEFAULT_BUNDLE_CAP,
            node_cap: DEFAULT_NODE_CAP,
            cnd_gamma_threshold: 42,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Stats {
    pub nodes_explored: u64,
    pub patterns_enumerated: u64,
    pub subsets_tried: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl Stats {
    pub(crate) fn absorb(&mut self, other: &Stats) {
        self.nodes_explored += other.nodes_explored;
        self.patterns_enumerated += other.patterns_enumerated;
        self.subsets_tried += other.subsets_tried;
    }
}

#[derive(Clone, Debug)]
pub struct SolveRequest {
    pub graph: ColoredGraph,
    pub spec: PatternSpec,
    /// `None` asks for an optimum.
    pub budget: Option<usize>,
    pub algorithm: Algorithm,
    pub limits: Limits,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Yes(DeletionSet),
    No,
    Optimum(DeletionSet),
}

impl Status {
    pub fn solution(&self) -> Option<&DeletionSet> {
        match self {
            Status::Yes(s) | Status::Optimum(s) => Some(s),
            Status::No => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Status::Yes(_) => "yes",
            Status::No => "no",
            Status::Optimum(_) => "optimum",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub status: Status,
    /// The algorithm that actually ran.
    pub algorithm: Algorithm,
    pub stats: Stats,
}

fn is_t_spec(spec: &PatternSpec) -> bool {
    *spec == PatternSpec::path(4, 2)
}

fn t_applicable(g: &ColoredGraph, spec: &PatternSpec) -> bool {
    is_t_spec(spec)
        && g.edges().iter().all(|e| e.color == BLUE || e.color == RED)
        && recognize_t(g).is_ok_and(|d| d.accepted())
}

/// Resolves `Auto` to a concrete algorithm.
pub fn select_algorithm(
    g: &ColoredGraph,
    spec: &PatternSpec,
    limits: &Limits,
) -> Result<Algorithm> {
    if t_applicable(g, spec) {
        return Ok(Algorithm::TClass);
    }
    if spec.mode == Mode::Induced && spec_is_color_diverse(spec)? {
        let gamma = colored_classes(g).gamma();
        if gamma * gamma + gamma <= limits.cnd_gamma_threshold {
            return Ok(Algorithm::Cnd);
        }
    }
    Ok(Algorithm::Branch)
}

fn within(s: DeletionSet, budget: Option<usize>) -> Status {
    match budget {
        None => Status::Optimum(s),
        Some(k) if s.len() <= k => Status::Yes(s),
        Some(_) => Status::No,
    }
}

/// Runs one request and re-verifies any returned solution.
pub fn solve(req: &SolveRequest) -> Result<SolveResult> {
    let started = Instant::now();
    let (g, spec, limits) = (&req.graph, &req.spec, &req.limits);
    spec.validate()?;
    let algorithm = match req.algorithm {
        Algorithm::Auto => select_algorithm(g, spec, limits)?,
        a => a,
    };
    let branch_cfg = BranchConfig {
        node_cap: limits.node_cap,
        occurrence_cap: limits.occurrence_cap,
        conflict_edges_only: true,
    };
    let (status, mut stats) = match algorithm {
        Algorithm::Brute => {
            let (s, stats) = brute::brute_force_stats(g, spec, limits.brute_edge_bound)?;
            (within(s, req.budget), stats)
        }
        Algorithm::TClass => {
            if !is_t_spec(spec) {
                return Err(Error::InvalidParams(format!(
                    "the class-T solver handles only {}",
                    PatternSpec::path(4, 2)
                )));
            }
            (within(solve_2p4d_on_t(g)?, req.budget), Stats::default())
        }
        Algorithm::Cnd => {
            let (found, stats) = cnd::cnd_search(g, spec, req.budget, limits.bundle_cap)?;
            let status = match (found, req.budget) {
                (Some(s), None) => Status::Optimum(s),
                (Some(s), Some(_)) => Status::Yes(s),
                (None, _) => Status::No,
            };
            (status, stats)
        }
        Algorithm::Branch => match req.budget {
            Some(k) => {
                let (d, stats) = branch::branch_stats(g, spec, k, &branch_cfg)?;
                let status = match d {
                    Decision::Yes(s) => Status::Yes(s),
                    Decision::No => Status::No,
                };
                (status, stats)
            }
            None => {
                let (s, stats) = branch::branch_optimum(g, spec, &branch_cfg)?;
                (Status::Optimum(s), stats)
            }
        },
        Algorithm::Auto => unreachable!("resolved above"),
    };
    if let Some(s) = status.solution() {
        let mask = s.mask(g)?;
        if let Some(occ) = find_one_masked(g, Some(&mask), *spec) {
            return Err(Error::VerificationFailed(format!(
                "{algorithm} left the occurrence {occ}"
            )));
        }
    }
    stats.elapsed = started.elapsed();
    Ok(SolveResult {
        status,
        algorithm,
        stats,
    })
}
