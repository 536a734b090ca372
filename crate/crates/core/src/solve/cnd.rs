//! Exhaustive search over unions of class bundles.
//!
//! When every forbidden graph is color diverse, some optimum treats the
//! edges between two colored neighborhood classes as a unit. Each such edge
//! set, and the edge set inside each clique class, is a bundle; trying all
//! bundle unions finds an optimum.

use crate::classify::{colored_classes, spec_is_color_diverse, ClassKind, ClassPartition};
use crate::error::{Error, Result};
use crate::graph::{ColoredGraph, DeletionSet, Edge};
use crate::pattern::{find_one_masked, Mode, PatternSpec};

use super::{Decision, Stats};

/// Largest number of bundles tried by default (2^20 unions).
pub const DEFAULT_BUNDLE_CAP: usize = 20;

/// Edge-index bundles: nonempty `E(K_a, K_b)` for class pairs in canonical
/// order, then `E(K)` for each clique class.
pub fn bundles(g: &ColoredGraph, p: &ClassPartition) -> Vec<Vec<usize>> {
    let gamma = p.gamma();
    let mut between = vec![Vec::new(); gamma * gamma];
    let mut inside = vec![Vec::new(); gamma];
    for (i, e) in g.edges().iter().enumerate() {
        let (a, b) = (p.class_of[e.u], p.class_of[e.v]);
        if a == b {
            inside[a].push(i);
        } else {
            between[a.min(b) * gamma + a.max(b)].push(i);
        }
    }
    let mut out: Vec<Vec<usize>> = between.into_iter().filter(|b| !b.is_empty()).collect();
    for (a, kind) in p.kinds.iter().enumerate() {
        if matches!(kind, ClassKind::Clique(_)) {
            out.push(std::mem::take(&mut inside[a]));
        }
    }
    out
}

/// For every class `K` and every vertex `v` outside `K`, `S` holds either
/// all or none of the edges from `v` into `K`.
pub fn is_consistent(g: &ColoredGraph, p: &ClassPartition, s: &DeletionSet) -> bool {
    p.classes.iter().enumerate().all(|(a, class)| {
        (0..g.n()).filter(|&v| p.class_of[v] != a).all(|v| {
            let mut into = class
                .iter()
                .filter(|&&u| g.has_edge(u, v))
                .map(|&u| s.contains(&Edge::new(u, v)));
            match into.next() {
                None => true,
                Some(first) => into.all(|x| x == first),
            }
        })
    })
}

fn check_spec(spec: &PatternSpec) -> Result<()> {
    if spec.mode != Mode::Induced {
        return Err(Error::InvalidSpec(format!(
            "{spec}: bundle search needs induced mode"
        )));
    }
    if !spec_is_color_diverse(spec)? {
        return Err(Error::SpecNotColorDiverse(spec.to_string()));
    }
    Ok(())
}

/// Smallest feasible bundle union, canonically smallest among ties, with
/// size at most `limit`.
pub(crate) fn cnd_search(
    g: &ColoredGraph,
    spec: &PatternSpec,
    limit: Option<usize>,
    bundle_cap: usize,
) -> Result<(Option<DeletionSet>, Stats)> {
    check_spec(spec)?;
    let p = colored_classes(g);
    let bundles = bundles(g, &p);
    if bundles.len() > bundle_cap.min(62) {
        return Err(Error::ResourceLimit(format!(
            "{} bundles exceed the cap of {bundle_cap}",
            bundles.len()
        )));
    }
    let mut stats = Stats::default();
    let mut best: Option<Vec<usize>> = None;
    let mut mask = vec![false; g.edge_count()];
    for subset in 0u64..(1u64 << bundles.len()) {
        let size: usize = (0..bundles.len())
            .filter(|b| subset >> b & 1 == 1)
            .map(|b| bundles[b].len())
            .sum();
        let bound = match (&best, limit) {
            (Some(b), _) => b.len(),
            (None, Some(k)) => k,
            (None, None) => usize::MAX,
        };
        if size > bound {
            continue;
        }
        let mut idx: Vec<usize> = (0..bundles.len())
            .filter(|b| subset >> b & 1 == 1)
            .flat_map(|b| bundles[b].iter().copied())
            .collect();
        idx.sort_unstable();
        if best
            .as_ref()
            .is_some_and(|b| (b.len(), b) <= (idx.len(), &idx))
        {
            continue;
        }
        stats.subsets_tried += 1;
        mask.iter_mut().for_each(|m| *m = false);
        idx.iter().for_each(|&i| mask[i] = true);
        if find_one_masked(g, Some(&mask), *spec).is_none() {
            best = Some(idx);
        }
    }
    Ok((best.map(|idx| DeletionSet::from_indices(g, &idx)), stats))
}

/// Decides whether some bundle union of at most `k` edges is a solution.
pub fn cnd_solve(g: &ColoredGraph, spec: &PatternSpec, k: usize) -> Result<Decision> {
    cnd_solve_with(g, spec, k, DEFAULT_BUNDLE_CAP)
}

pub fn cnd_solve_with(
    g: &ColoredGraph,
    spec: &PatternSpec,
    k: usize,
    bundle_cap: usize,
) -> Result<Decision> {
    Ok(match cnd_search(g, spec, Some(k), bundle_cap)?.0 {
        Some(s) => Decision::Yes(s),
        None => Decision::No,
    })
}

/// Minimum bundle union.
pub fn cnd_optimum(g: &ColoredGraph, spec: &PatternSpec, bundle_cap: usize) -> Result<DeletionSet> {
    Ok(cnd_search(g, spec, None, bundle_cap)?
        .0
        .expect("deleting every bundle removes every edge"))
}
