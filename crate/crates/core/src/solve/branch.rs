//! Bounded search tree: find an occurrence, branch on deleting each of its
//! edges.
//!
//! Edges already tried in an earlier sibling branch are frozen for the later
//! ones, so every deletion set is explored at most once. The occurrence with
//! the fewest deletable edges is branched on (ties: the one whose edges lie
//! on the most occurrences), its most shared edges first. An edge-disjoint
//! packing of occurrences, improved by 1-for-2 exchanges, gives a lower
//! bound.

use std::ops::ControlFlow;

use crate::classify::{cascade_status, CascadeKind};
use crate::error::{Error, Result};
use crate::graph::{Color, ColoredGraph, DeletionSet};
use crate::pattern::{
    find_one_masked, mark_conflicts, Mode, PatternKind, PatternSpec, Search, DEFAULT_OCCURRENCE_CAP,
};

use super::{Decision, Stats};

pub const DEFAULT_NODE_CAP: u64 = 50_000_000;

#[derive(Clone, Debug)]
pub struct BranchConfig {
    /// Search nodes allowed before giving up with `ResourceLimit`.
    pub node_cap: u64,
    /// Occurrences allowed per node.
    pub occurrence_cap: usize,
    /// On non-cascading graphs, never delete an edge outside the conflict
    /// edges of the input. Does not change the answer.
    pub conflict_edges_only: bool,
}

impl Default for BranchConfig {
    fn default() -> Self {
        BranchConfig {
            node_cap: DEFAULT_NODE_CAP,
            occurrence_cap: DEFAULT_OCCURRENCE_CAP,
            conflict_edges_only: true,
        }
    }
}

struct Brancher<'a> {
    g: &'a ColoredGraph,
    spec: PatternSpec,
    cfg: &'a BranchConfig,
    removed: Vec<bool>,
    frozen: Vec<bool>,
    chosen: Vec<usize>,
    stats: Stats,
}

/// Occurrences of the current graph as lists of deletable edge indices.
struct Hits {
    flat: Vec<usize>,
    ends: Vec<usize>,
    blocked: bool,
}

impl Hits {
    fn get(&self, i: usize) -> &[usize] {
        let start = if i == 0 { 0 } else { self.ends[i - 1] };
        &self.flat[start..self.ends[i]]
    }

    fn len(&self) -> usize {
        self.ends.len()
    }
}

impl<'a> Brancher<'a> {
    fn collect(&mut self) -> Result<Hits> {
        let g = self.g;
        let cycle = self.spec.kind == PatternKind::Cycle;
        let cap = self.cfg.occurrence_cap;
        let frozen = &self.frozen;
        let mut hits = Hits {
            flat: Vec::new(),
            ends: Vec::new(),
            blocked: false,
        };
        let flow =
            Search::new(g, Some(&self.removed), self.spec).run(&mut |p: &[usize], _: &[Color]| {
                if hits.ends.len() >= cap {
                    return ControlFlow::Break(());
                }
                let k = p.len();
                let start = hits.flat.len();
                for i in 0..if cycle { k } else { k - 1 } {
                    let e = g.edge_index(p[i], p[(i + 1) % k]).expect("occurrence edge");
                    if !frozen[e] {
                        hits.flat.push(e);
                    }
                }
                hits.flat[start..].sort_unstable();
                hits.ends.push(hits.flat.len());
                if hits.flat.len() == start {
                    hits.blocked = true;
                    return ControlFlow::Break(());
                }
                ControlFlow::Continue(())
            });
        if flow.is_break() && !hits.blocked {
            return Err(Error::ResourceLimit(format!(
                "more than {cap} occurrences of {} at one node",
                self.spec
            )));
        }
        self.stats.patterns_enumerated += hits.len() as u64;
        Ok(hits)
    }

    fn search(&mut self, k: usize) -> Result<bool> {
        self.stats.nodes_explored += 1;
        if self.stats.nodes_explored > self.cfg.node_cap {
            return Err(Error::ResourceLimit(format!(
                "branching exceeded {} search nodes",
                self.cfg.node_cap
            )));
        }
        let hits = self.collect()?;
        if hits.len() == 0 {
            return Ok(true);
        }
        if k == 0 || hits.blocked {
            return Ok(false);
        }
        // small occurrences whose edges are rarely shared go first
        let mut freq = vec![0usize; self.g.edge_count()];
        hits.flat.iter().for_each(|&e| freq[e] += 1);
        let mut order: Vec<usize> = (0..hits.len()).collect();
        order.sort_by_key(|&i| {
            let edges = hits.get(i);
            (edges.len(), edges.iter().map(|&e| freq[e]).sum::<usize>())
        });
        if improve_packing(&hits, self.g.edge_count(), &order) > k {
            return Ok(false);
        }
        let smallest = hits.get(order[0]).len();
        let pick = order
            .iter()
            .copied()
            .take_while(|&i| hits.get(i).len() == smallest)
            .max_by_key(|&i| {
                (
                    hits.get(i).iter().map(|&e| freq[e]).sum::<usize>(),
                    std::cmp::Reverse(i),
                )
            })
            .expect("non-empty");
        let mut branch: Vec<usize> = hits.get(pick).to_vec();
        branch.sort_by_key(|&e| std::cmp::Reverse(freq[e]));
        drop(hits);
        let mut newly_frozen = Vec::new();
        let mut found = false;
        for e in branch {
            self.removed[e] = true;
            self.chosen.push(e);
            let ok = self.search(k - 1);
            if matches!(ok, Ok(true)) {
                found = true;
                break;
            }
            self.removed[e] = false;
            self.chosen.pop();
            if ok.is_err() {
                newly_frozen
                    .iter()
                    .for_each(|&f: &usize| self.frozen[f] = false);
                return ok;
            }
            self.frozen[e] = true;
            newly_frozen.push(e);
        }
        for f in newly_frozen {
            self.frozen[f] = false;
        }
        Ok(found)
    }
}

/// Greedy packing followed by 1-for-2 exchanges until none applies.
fn improve_packing(hits: &Hits, m: usize, order: &[usize]) -> usize {
    const FREE: usize = usize::MAX;
    let mut owner = vec![FREE; m];
    let mut packed = vec![false; hits.len()];
    for &i in order {
        if hits.get(i).iter().all(|&e| owner[e] == FREE) {
            hits.get(i).iter().for_each(|&e| owner[e] = i);
            packed[i] = true;
        }
    }
    let mut count = packed.iter().filter(|&&p| p).count();
    let mut improved = true;
    while improved {
        improved = false;
        'outer: for p in 0..hits.len() {
            if !packed[p] {
                continue;
            }
            let cands: Vec<usize> = (0..hits.len())
                .filter(|&q| {
                    !packed[q]
                        && hits
                            .get(q)
                            .iter()
                            .all(|&e| owner[e] == FREE || owner[e] == p)
                })
                .collect();
            for (a, &x) in cands.iter().enumerate() {
                for &y in &cands[a + 1..] {
                    let (ex, ey) = (hits.get(x), hits.get(y));
                    if ex.iter().all(|e| ey.binary_search(e).is_err()) {
                        hits.get(p).iter().for_each(|&e| owner[e] = FREE);
                        ex.iter().chain(ey).for_each(|&e| owner[e] = x);
                        ey.iter().for_each(|&e| owner[e] = y);
                        packed[p] = false;
                        packed[x] = true;
                        packed[y] = true;
                        count += 1;
                        improved = true;
                        break 'outer;
                    }
                }
            }
        }
    }
    count
}

fn initial_frozen(g: &ColoredGraph, spec: &PatternSpec, cfg: &BranchConfig) -> Result<Vec<bool>> {
    let mut frozen = vec![false; g.edge_count()];
    if cfg.conflict_edges_only && spec.mode == Mode::Induced {
        let status = cascade_status(g, spec)?;
        if status.status != CascadeKind::Cascading {
            let mut conflict = vec![false; g.edge_count()];
            mark_conflicts(g, None, *spec, &mut conflict);
            for (f, c) in frozen.iter_mut().zip(conflict) {
                *f = !c;
            }
        }
    }
    Ok(frozen)
}

pub(crate) fn branch_stats(
    g: &ColoredGraph,
    spec: &PatternSpec,
    k: usize,
    cfg: &BranchConfig,
) -> Result<(Decision, Stats)> {
    spec.validate()?;
    let mut b = Brancher {
        g,
        spec: *spec,
        cfg,
        removed: vec![false; g.edge_count()],
        frozen: initial_frozen(g, spec, cfg)?,
        chosen: Vec::new(),
        stats: Stats::default(),
    };
    let decision = if b.search(k)? {
        let s = DeletionSet::from_indices(g, &b.chosen);
        if find_one_masked(g, Some(&b.removed), *spec).is_some() {
            return Err(Error::VerificationFailed(format!(
                "branching returned {s}, which leaves a pattern"
            )));
        }
        Decision::Yes(s)
    } else {
        Decision::No
    };
    Ok((decision, b.stats))
}

/// Least `k` with a solution, found by trying budgets upward.
pub(crate) fn branch_optimum(
    g: &ColoredGraph,
    spec: &PatternSpec,
    cfg: &BranchConfig,
) -> Result<(DeletionSet, Stats)> {
    let mut total = Stats::default();
    for k in 0..=g.edge_count() {
        let (d, stats) = branch_stats(g, spec, k, cfg)?;
        total.absorb(&stats);
        if let Decision::Yes(s) = d {
            return Ok((s, total));
        }
    }
    unreachable!("deleting every edge leaves no pattern")
}

/// Decides whether at most `k` deletions suffice.
pub fn branch_solve(g: &ColoredGraph, spec: &PatternSpec, k: usize) -> Result<Decision> {
    Ok(branch_stats(g, spec, k, &BranchConfig::default())?.0)
}

pub fn branch_solve_with(
    g: &ColoredGraph,
    spec: &PatternSpec,
    k: usize,
    cfg: &BranchConfig,
) -> Result<(Decision, Stats)> {
    branch_stats(g, spec, k, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph;

    #[test]
    fn alternating_c4_budgets() {
        let g = parse_graph("p ecg 4 4 2\ne 1 3 1\ne 2 3 1\ne 1 4 2\ne 2 4 2").unwrap();
        let spec = PatternSpec::cycle(4, 2);
        assert_eq!(branch_solve(&g, &spec, 0).unwrap(), Decision::No);
        match branch_solve(&g, &spec, 1).unwrap() {
            Decision::Yes(s) => assert_eq!(s.len(), 1),
            Decision::No => panic!("one deletion suffices"),
        }
    }

    #[test]
    fn node_cap_is_reported() {
        let g = ColoredGraph::from_edges(8, 1, (0..7).map(|i| (i, i + 1, 1))).unwrap();
        let cfg = BranchConfig {
            node_cap: 1,
            ..BranchConfig::default()
        };
        let err = branch_solve_with(&g, &PatternSpec::path(3, 1), 3, &cfg).unwrap_err();
        assert!(matches!(err, Error::ResourceLimit(_)));
    }
}
