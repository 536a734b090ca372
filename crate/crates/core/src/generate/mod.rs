//! Gadget constructions that turn source instances (formulas, vertex cover,
//! hitting set) into deletion instances, plus brute-force oracles for the
//! source problems.
//!
//! Every generator runs its structural checks before returning; a failed
//! enforced check is reported as [`Error::ValidationFailed`].

mod chain;
mod cover;
mod cpld;
mod cycles;
mod double_cluster;
mod formula;
mod hitting;
mod hs_reductions;
mod lift;

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{json, Value};

pub use chain::{chain_solution, gen_path_chain};
pub use cover::{parse_vc, vc_brute, VertexCoverInstance};
pub use cpld::gen_cpld_b2sat;
pub use cycles::{gen_ccld_vc, recolor_to_c, two_subdivision};
pub use double_cluster::gen_2p4d_b2sat;
pub use formula::{b2_catalog, parse_dimacs, sat_b2_brute, CnfB2Formula, Lit};
pub use hitting::{hs_brute, parse_hs, parse_sets, HittingSetInstance};
pub use hs_reductions::{gen_ccd_hs, gen_cpd_hs};
pub use lift::{gen_lift_2p3d, lift_solution_back};

use crate::error::{Error, Result};
use crate::graph::{Color, ColoredGraph};
use crate::pattern::PatternSpec;

/// Which construction produced an instance, with its parameters.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Provenance {
    pub reduction: String,
    pub params: BTreeMap<String, Value>,
}

/// Outcome of one structural check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub observed: String,
    pub passed: bool,
    /// Enforced checks abort generation when they fail; the others are
    /// only reported.
    pub enforced: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GeneratedInstance {
    pub graph: ColoredGraph,
    pub spec: PatternSpec,
    pub k: usize,
    pub provenance: Provenance,
    /// Gadget role name to vertex. Identified vertices carry several roles.
    pub labels: BTreeMap<String, usize>,
    pub checks: Vec<Check>,
}

impl GeneratedInstance {
    /// Vertex playing `role`. Panics on an unknown role.
    pub fn vertex(&self, role: &str) -> usize {
        match self.labels.get(role) {
            Some(&v) => v,
            None => panic!("no vertex with role `{role}`"),
        }
    }

    /// Roles of vertex `v`, sorted.
    pub fn roles_of(&self, v: usize) -> Vec<&str> {
        self.labels
            .iter()
            .filter(|(_, &x)| x == v)
            .map(|(r, _)| r.as_str())
            .collect()
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Sidecar document: spec, budget, provenance, checks and 1-indexed
    /// labels.
    pub fn metadata(&self) -> Value {
        let labels: BTreeMap<&str, usize> = self
            .labels
            .iter()
            .map(|(r, &v)| (r.as_str(), v + 1))
            .collect();
        json!({
            "spec": self.spec,
            "k": self.k,
            "provenance": self.provenance,
            "checks": self.checks,
            "labels": labels,
        })
    }
}

/// Incremental gadget builder with role names.
#[derive(Default)]
pub(crate) struct Builder {
    n: usize,
    labels: BTreeMap<String, usize>,
    edges: BTreeMap<(usize, usize), Color>,
}

impl Builder {
    pub(crate) fn new() -> Builder {
        Builder::default()
    }

    pub(crate) fn vertex(&mut self, role: impl Into<String>) -> usize {
        let v = self.n;
        self.n += 1;
        self.alias(role, v);
        v
    }

    pub(crate) fn alias(&mut self, role: impl Into<String>, v: usize) {
        let role = role.into();
        let old = self.labels.insert(role.clone(), v);
        assert!(old.is_none(), "role `{role}` assigned twice");
    }

    pub(crate) fn id(&self, role: &str) -> usize {
        match self.labels.get(role) {
            Some(&v) => v,
            None => panic!("no vertex with role `{role}`"),
        }
    }

    /// Adds an edge; re-adding the same edge with the same color is a no-op.
    pub(crate) fn edge(&mut self, a: usize, b: usize, color: Color) {
        let key = (a.min(b), a.max(b));
        assert_ne!(a, b, "gadget loop at {a}");
        if let Some(&old) = self.edges.get(&key) {
            assert_eq!(old, color, "edge {key:?} added with two colors");
        }
        self.edges.insert(key, color);
    }

    pub(crate) fn edge_roles(&mut self, a: &str, b: &str, color: Color) {
        let (a, b) = (self.id(a), self.id(b));
        self.edge(a, b, color);
    }

    pub(crate) fn graph(&self, c: Color) -> Result<ColoredGraph> {
        ColoredGraph::from_edges(
            self.n,
            c,
            self.edges.iter().map(|(&(a, b), &col)| (a, b, col)),
        )
    }

    pub(crate) fn into_labels(self) -> BTreeMap<String, usize> {
        self.labels
    }
}

pub(crate) fn check(
    name: &str,
    expected: impl ToString,
    observed: impl ToString,
    passed: bool,
) -> Check {
    Check {
        name: name.into(),
        expected: expected.to_string(),
        observed: observed.to_string(),
        passed,
        enforced: true,
    }
}

pub(crate) fn report(
    name: &str,
    expected: impl ToString,
    observed: impl ToString,
    passed: bool,
) -> Check {
    Check {
        enforced: false,
        ..check(name, expected, observed, passed)
    }
}

pub(crate) fn enforce(checks: &[Check]) -> Result<()> {
    match checks.iter().find(|c| c.enforced && !c.passed) {
        Some(c) => Err(Error::ValidationFailed {
            check: c.name.clone(),
            detail: format!("expected {}, observed {}", c.expected, c.observed),
        }),
        None => Ok(()),
    }
}

pub(crate) fn girth_text(g: Option<usize>) -> String {
    g.map_or_else(|| "infinite".to_string(), |x| x.to_string())
}

pub(crate) fn provenance(reduction: &str, params: Vec<(&str, Value)>) -> Provenance {
    Provenance {
        reduction: reduction.into(),
        params: params
            .into_iter()
            .map(|(k, v)| (k.to_string(), v))
            .collect(),
    }
}
