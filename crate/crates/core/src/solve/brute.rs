use crate::error::{Error, Result};
use crate::graph::{ColoredGraph, DeletionSet};
use crate::pattern::{find_one_masked, PatternSpec};

use super::Stats;

pub const DEFAULT_BRUTE_EDGE_BOUND: usize = 24;

/// Advances `idx` to the next `k`-combination of `0..m` in lexicographic
/// order; returns false after the last one.
fn next_combination(idx: &mut [usize], m: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < m - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Calls `f` on every `k`-subset of the edges in canonical order until it
/// returns true.
fn for_each_subset(m: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) {
    if k > m {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if f(&idx) {
            return;
        }
        if k == 0 || !next_combination(&mut idx, m) {
            return;
        }
    }
}

fn check_bound(g: &ColoredGraph, bound: usize) -> Result<()> {
    if g.edge_count() > bound {
        return Err(Error::ResourceLimit(format!(
            "brute force refuses {} edges (bound {bound})",
            g.edge_count()
        )));
    }
    Ok(())
}

fn feasible(g: &ColoredGraph, spec: &PatternSpec, idx: &[usize], mask: &mut [bool]) -> bool {
    mask.iter_mut().for_each(|m| *m = false);
    for &i in idx {
        mask[i] = true;
    }
    find_one_masked(g, Some(mask), *spec).is_none()
}

pub(crate) fn brute_force_stats(
    g: &ColoredGraph,
    spec: &PatternSpec,
    bound: usize,
) -> Result<(DeletionSet, Stats)> {
    spec.validate()?;
    check_bound(g, bound)?;
    let m = g.edge_count();
    let mut mask = vec![false; m];
    let mut stats = Stats::default();
    for k in 0..=m {
        let mut found = None;
        for_each_subset(m, k, |idx| {
            stats.subsets_tried += 1;
            if feasible(g, spec, idx, &mut mask) {
                found = Some(DeletionSet::from_indices(g, idx));
                true
            } else {
                false
            }
        });
        if let Some(s) = found {
            return Ok((s, stats));
        }
    }
    unreachable!("deleting every edge leaves no pattern")
}

/// The canonically smallest minimum solution, by trying edge subsets in
/// order of size. Refuses graphs with more than
/// [`DEFAULT_BRUTE_EDGE_BOUND`] edges.
pub fn brute_force(g: &ColoredGraph, spec: &PatternSpec) -> Result<DeletionSet> {
    brute_force_bounded(g, spec, DEFAULT_BRUTE_EDGE_BOUND)
}

pub fn brute_force_bounded(
    g: &ColoredGraph,
    spec: &PatternSpec,
    bound: usize,
) -> Result<DeletionSet> {
    Ok(brute_force_stats(g, spec, bound)?.0)
}

/// Every minimum solution, in canonical order.
pub fn minimum_solutions(g: &ColoredGraph, spec: &PatternSpec) -> Result<Vec<DeletionSet>> {
    let best = brute_force(g, spec)?;
    Ok(solutions_of_size(g, spec, best.len()))
}

/// Every solution with exactly `k` edges, in canonical order.
pub fn solutions_of_size(g: &ColoredGraph, spec: &PatternSpec, k: usize) -> Vec<DeletionSet> {
    let m = g.edge_count();
    let mut mask = vec![false; m];
    let mut out = Vec::new();
    for_each_subset(m, k, |idx| {
        if feasible(g, spec, idx, &mut mask) {
            out.push(DeletionSet::from_indices(g, idx));
        }
        false
    });
    out
}
