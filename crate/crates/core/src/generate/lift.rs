//! Bicolored P3 deletion lifted to (len−1)-colored P_len deletion.

use serde_json::json;

use super::{check, enforce, provenance, Builder, GeneratedInstance};
use crate::error::{Error, Result};
use crate::graph::{Color, ColoredGraph, DeletionSet, Edge, YELLOW};
use crate::pattern::{find_one_masked, PatternSpec};

/// Hangs `deg(v)` pendant arms of `len−3` new vertices on every vertex `v`
/// of the bicolored `g2`. Each arm starts with a yellow edge and continues
/// with colors 4, 5, …, len−1. The budget `k` is kept.
///
/// Original vertices keep their ids and have role `v_x`; arm vertices are
/// `v_x^{i,j}` (arm `i`, position `j`), all 1-based.
pub fn gen_lift_2p3d(g2: &ColoredGraph, k: usize, len: usize) -> Result<GeneratedInstance> {
    if len < 4 {
        return Err(Error::InvalidParams(format!(
            "lift needs len ≥ 4, got {len}"
        )));
    }
    if g2.colors() != 2 {
        return Err(Error::InvalidParams(format!(
            "lift needs a bicolored graph, got {} colors",
            g2.colors()
        )));
    }
    let mut b = Builder::new();
    for v in 0..g2.n() {
        b.vertex(format!("v_{}", v + 1));
    }
    for e in g2.edges() {
        b.edge(e.u, e.v, e.color);
    }
    for v in 0..g2.n() {
        for i in 1..=g2.degree(v) {
            let mut prev = v;
            for j in 1..=len - 3 {
                let x = b.vertex(format!("v_{}^{{{i},{j}}}", v + 1));
                b.edge(prev, x, j as Color + 2);
                prev = x;
            }
        }
    }
    let graph = b.graph(len as Color - 1)?;
    let doubled = (0..g2.n()).all(|v| graph.degree(v) == 2 * g2.degree(v));
    let max_in = g2.stats().max_degree;
    let max_out = graph.stats().max_degree;
    let checks = vec![
        check(
            "degree-doubling",
            "deg_H(v) = 2 deg_G(v)",
            if doubled { "holds" } else { "violated" },
            doubled,
        ),
        check("max-degree", 2 * max_in, max_out, max_out == 2 * max_in),
    ];
    enforce(&checks)?;
    Ok(GeneratedInstance {
        graph,
        spec: PatternSpec::path(len, len as Color - 1),
        k,
        provenance: provenance(
            "lift-2p3d",
            vec![("len", json!(len)), ("source_n", json!(g2.n()))],
        ),
        labels: b.into_labels(),
        checks,
    })
}

/// Maps a solution `s` of the lifted graph `h` back to a bicolored P3
/// deletion set of `g2` that is no larger.
///
/// Arm edges beyond the first are traded for their arm's yellow edge. If
/// every yellow edge at `v` is then deleted, they are traded for the edges
/// of `g2` at `v`; otherwise they are dropped. Finally the set is restricted
/// to the edges of `g2`.
pub fn lift_solution_back(
    g2: &ColoredGraph,
    h: &ColoredGraph,
    s: &DeletionSet,
) -> Result<DeletionSet> {
    let n = g2.n();
    let spec = PatternSpec::path(h.colors() as usize + 1, h.colors());
    let mask = s.mask(h)?;
    if let Some(occ) = find_one_masked(h, Some(&mask), spec) {
        return Err(Error::PreconditionViolated(format!(
            "the set leaves {occ} in the lifted graph"
        )));
    }
    // yellow edge of the arm each arm vertex belongs to
    let mut arm_of = vec![None; h.n()];
    for e in h.edges().iter().filter(|e| e.color == YELLOW) {
        let (root, first) = if e.u < n { (e.u, e.v) } else { (e.v, e.u) };
        let (mut prev, mut cur) = (root, first);
        loop {
            arm_of[cur] = Some(Edge::new(root, first));
            match h.neighbors(cur).iter().find(|nb| nb.vertex != prev) {
                Some(nb) => (prev, cur) = (cur, nb.vertex),
                None => break,
            }
        }
    }
    let mut out = DeletionSet::new();
    let mut yellow = DeletionSet::new();
    for e in s.iter() {
        match h.color_of(e.u, e.v) {
            Some(c) if c > YELLOW => {
                yellow.insert(arm_of[e.u].expect("arm edge"));
            }
            Some(YELLOW) => {
                yellow.insert(*e);
            }
            _ => {
                out.insert(*e);
            }
        }
    }
    for v in 0..n {
        let arms = h.neighbors_in(v, YELLOW).count();
        let cut = yellow.iter().filter(|e| e.u == v || e.v == v).count();
        if arms > 0 && cut == arms {
            out.extend(g2.neighbors(v).iter().map(|nb| Edge::new(v, nb.vertex)));
        }
    }
    let back = g2.remove_edges(&out)?;
    if let Some(occ) = find_one_masked(&back, None, PatternSpec::path(3, 2)) {
        return Err(Error::VerificationFailed(format!(
            "mapped set leaves {occ}"
        )));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> ColoredGraph {
        ColoredGraph::from_edges(3, 2, [(0, 1, 1), (1, 2, 2)]).unwrap()
    }

    #[test]
    fn arm_shape() {
        let inst = gen_lift_2p3d(&p3(), 1, 5).unwrap();
        // 3 originals, 4 arms of 2 vertices
        assert_eq!(inst.graph.n(), 11);
        assert_eq!(inst.graph.colors(), 4);
        assert_eq!(inst.spec, PatternSpec::path(5, 4));
        let (a, b) = (inst.vertex("v_2^{1,1}"), inst.vertex("v_2^{1,2}"));
        assert_eq!(inst.graph.color_of(1, a), Some(YELLOW));
        assert_eq!(inst.graph.color_of(a, b), Some(4));
        assert_eq!(inst.graph.degree(1), 4);
    }

    #[test]
    fn maps_arm_deletions_back() {
        let inst = gen_lift_2p3d(&p3(), 1, 5).unwrap();
        let h = &inst.graph;
        let inner = |r: &str, r2: &str| Edge::new(inst.vertex(r), inst.vertex(r2));
        // shortening the arms at both ends of the path
        let s: DeletionSet = [
            inner("v_1^{1,1}", "v_1^{1,2}"),
            inner("v_3^{1,1}", "v_3^{1,2}"),
        ]
        .into_iter()
        .collect();
        let back = lift_solution_back(&p3(), h, &s).unwrap();
        assert_eq!(
            back,
            [Edge::new(0, 1), Edge::new(1, 2)].into_iter().collect()
        );
        let direct: DeletionSet = [Edge::new(0, 1)].into_iter().collect();
        assert_eq!(lift_solution_back(&p3(), h, &direct).unwrap(), direct);
        assert!(matches!(
            lift_solution_back(&p3(), h, &DeletionSet::new()),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn rejects_bad_input() {
        let mono = ColoredGraph::from_edges(2, 1, [(0, 1, 1)]).unwrap();
        assert!(matches!(
            gen_lift_2p3d(&mono, 0, 4),
            Err(Error::InvalidParams(_))
        ));
        assert!(matches!(
            gen_lift_2p3d(&p3(), 0, 3),
            Err(Error::InvalidParams(_))
        ));
    }
}
