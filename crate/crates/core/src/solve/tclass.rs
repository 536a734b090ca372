//! Polynomial solver for induced bicolored `P_4` on class 𝒯.

use crate::classify::{recognize_t, ComponentClass};
use crate::error::{Error, Result};
use crate::graph::{ColoredGraph, DeletionSet, Edge};
use crate::pattern::{find_one_masked, PatternSpec};

fn spec() -> PatternSpec {
    PatternSpec::path(4, 2)
}

/// Edges of `g` inside `comp` whose ends lie in different parts.
fn cut(g: &ColoredGraph, comp: &[usize], part: &[usize]) -> Vec<Edge> {
    let mut out = Vec::new();
    for &u in comp {
        for nb in g.neighbors(u) {
            if u < nb.vertex && part[u] != part[nb.vertex] {
                out.push(Edge::new(u, nb.vertex));
            }
        }
    }
    out.sort_unstable();
    out
}

fn free_after(g: &ColoredGraph, comp: &[usize], del: &[Edge]) -> Result<bool> {
    let (sub, map) = g.induced_subgraph(comp)?;
    let mut inv = vec![usize::MAX; g.n()];
    for (i, &v) in map.iter().enumerate() {
        inv[v] = i;
    }
    let mut mask = vec![false; sub.edge_count()];
    for e in del {
        mask[sub.edge_index(inv[e.u], inv[e.v]).expect("component edge")] = true;
    }
    Ok(find_one_masked(&sub, Some(&mask), spec()).is_none())
}

/// Sweeps `p` over the blue cliques sorted by decreasing size: the first
/// clique keeps the red clique minus the centers of cliques `2..=p`; those
/// cliques are cut off whole; the remaining cliques lose their center.
fn solve_star(g: &ColoredGraph, comp: &[usize], blue: &[(usize, Vec<usize>)]) -> Result<Vec<Edge>> {
    let mut sorted: Vec<&(usize, Vec<usize>)> = blue.iter().collect();
    sorted.sort_by_key(|(c, k)| (std::cmp::Reverse(k.len()), *c));
    let mut part = vec![usize::MAX; g.n()];
    let mut best: Option<Vec<Edge>> = None;
    for p in 1..=sorted.len() {
        for &v in comp {
            part[v] = 0;
        }
        for (q, (center, clique)) in sorted.iter().enumerate().skip(1) {
            for &v in clique {
                if q < p || v != *center {
                    part[v] = q;
                }
            }
        }
        let del = cut(g, comp, &part);
        if !free_after(g, comp, &del)? {
            return Err(Error::VerificationFailed(format!(
                "clique-star candidate p={p} leaves a pattern"
            )));
        }
        if best.as_ref().is_none_or(|b| del.len() < b.len()) {
            best = Some(del);
        }
    }
    Ok(best.unwrap_or_default())
}

/// Optimum for the induced 2-colored `P_4` on a graph of class 𝒯.
///
/// Fences lose their red matching unless they are an alternating `C_4`;
/// clique-stars take the cheapest candidate of the sweep.
pub fn solve_2p4d_on_t(g: &ColoredGraph) -> Result<DeletionSet> {
    let d = recognize_t(g)?;
    if let Some(w) = d.witness() {
        return Err(Error::NotInClassT(w.to_string()));
    }
    let mut s = DeletionSet::new();
    for comp in &d.components {
        let edges = match &comp.class {
            ComponentClass::RbFence { k1, k2, matching } => {
                if k1.len() == 2 && k2.len() == 2 && matching.len() == 2 {
                    Vec::new()
                } else {
                    matching.clone()
                }
            }
            ComponentClass::RbCliqueStar { blue_cliques, .. } => {
                solve_star(g, &comp.vertices, blue_cliques)?
            }
            ComponentClass::Rejected { .. } => unreachable!("accepted decomposition"),
        };
        s.extend(edges);
    }
    let mask = s.mask(g)?;
    if find_one_masked(g, Some(&mask), spec()).is_some() {
        return Err(Error::VerificationFailed(format!(
            "class-T solution {s} leaves a pattern"
        )));
    }
    Ok(s)
}
