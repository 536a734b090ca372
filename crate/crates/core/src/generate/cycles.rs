//! Vertex cover to induced c-colored cycle deletion.

use serde_json::json;

use super::{
    check, enforce, girth_text, provenance, Builder, GeneratedInstance, VertexCoverInstance,
};
use crate::error::{Error, Result};
use crate::graph::{structural_stats, Color, ColoredGraph};
use crate::pattern::{enumerate, Mode, PatternSpec};

/// Replaces every edge `{u, v}` by a path `u–x–y–v`. Returns the
/// single-colored result and its tripartition: original vertices in part 1,
/// the `x` next to `u` (the smaller endpoint) in part 2, `y` in part 3.
pub fn two_subdivision(g: &ColoredGraph) -> (ColoredGraph, Vec<u8>) {
    let n = g.n();
    let m = g.edge_count();
    let mut parts = vec![1u8; n];
    let mut edges = Vec::with_capacity(3 * m);
    for (i, e) in g.edges().iter().enumerate() {
        let (x, y) = (n + 2 * i, n + 2 * i + 1);
        parts.extend([2, 3]);
        edges.extend([(e.u, x, 1), (x, y, 1), (y, e.v, 1)]);
    }
    let out = ColoredGraph::from_edges(n + 2 * m, 1, edges).expect("subdivision is simple");
    (out, parts)
}

/// Merges every color `≥ c` into `c`.
pub fn recolor_to_c(g: &ColoredGraph, c: Color) -> Result<ColoredGraph> {
    if c == 0 || c > g.colors() {
        return Err(Error::InvalidParams(format!(
            "cannot recolor {} colors down to {c}",
            g.colors()
        )));
    }
    ColoredGraph::from_edges(
        g.n(),
        c,
        g.edges().iter().map(|e| (e.u, e.v, e.color.min(c))),
    )
}

fn find_triangle(g: &ColoredGraph) -> Option<[usize; 3]> {
    for e in g.edges() {
        for nb in g.neighbors(e.u) {
            if nb.vertex > e.v && g.has_edge(e.v, nb.vertex) {
                return Some([e.u, e.v, nb.vertex]);
            }
        }
    }
    None
}

/// Builds the cycle instance from a triangle-free vertex cover instance with
/// a tripartition φ. Each edge `{u, v}` with `φ(u) < φ(v)` becomes a path
/// from `u` to `v` whose colors are `6 − φ(u) − φ(v)`, then 4, 5, …, and
/// finally `len`; an apex joins every original vertex `v` with color `φ(v)`.
/// Colors `≥ c` are then merged into `c`. The budget is kept.
///
/// Roles: `h_v` for original vertices, `w_{u,v}^i` for path vertices,
/// `alpha` for the apex.
pub fn gen_ccld_vc(h: &VertexCoverInstance, len: usize, c: usize) -> Result<GeneratedInstance> {
    if len < 3 || c < 1 || c > len {
        return Err(Error::InvalidParams(format!(
            "need len ≥ 3 and 1 ≤ c ≤ len, got len={len}, c={c}"
        )));
    }
    let Some(phi) = &h.tripartition else {
        return Err(Error::NotTripartite(
            "the instance has no tripartition".into(),
        ));
    };
    let hg = &h.graph;
    if let Some(e) = hg.edges().iter().find(|e| phi[e.u] == phi[e.v]) {
        return Err(Error::NotTripartite(format!(
            "edge {} lies inside part {}",
            e.edge(),
            phi[e.u]
        )));
    }
    if let Some(t) = find_triangle(hg) {
        return Err(Error::TriangleFound(t.map(|v| v + 1)));
    }

    let mut b = Builder::new();
    for v in 0..hg.n() {
        b.vertex(format!("h_{}", v + 1));
    }
    for e in hg.edges() {
        let (a, z) = if phi[e.u] < phi[e.v] {
            (e.u, e.v)
        } else {
            (e.v, e.u)
        };
        let psi = (6 - phi[a] - phi[z]) as Color;
        let mut path = vec![a];
        for i in 1..=len - 3 {
            path.push(b.vertex(format!("w_{{{},{}}}^{i}", e.u + 1, e.v + 1)));
        }
        path.push(z);
        for (i, pair) in path.windows(2).enumerate() {
            let color = match i {
                0 => psi,
                i if i == len - 3 => len as Color,
                i => i as Color + 3,
            };
            b.edge(pair[0], pair[1], color);
        }
    }
    let alpha = b.vertex("alpha");
    for (v, &part) in phi.iter().enumerate() {
        b.edge(v, alpha, part as Color);
    }
    let graph = recolor_to_c(&b.graph(len.max(3) as Color)?, c as Color)?;

    let stats = structural_stats(&graph);
    let expected_girth = if hg.edge_count() > 0 { Some(len) } else { None };
    let mut wrong_colors = 0;
    for other in (1..=len as Color).filter(|&x| x != c as Color) {
        wrong_colors += enumerate(
            &graph,
            &PatternSpec::cycle(len, other).with_mode(Mode::Subgraph),
        )?
        .len();
    }
    let census = enumerate(
        &graph,
        &PatternSpec::cycle(len, c as Color).with_mode(Mode::Subgraph),
    )?
    .len();
    let checks = vec![
        check(
            "girth",
            girth_text(expected_girth),
            girth_text(stats.girth),
            stats.girth == expected_girth,
        ),
        check("other-colored-cycles", 0, wrong_colors, wrong_colors == 0),
        check(
            "cycle-census",
            hg.edge_count(),
            census,
            census == hg.edge_count(),
        ),
    ];
    enforce(&checks)?;
    Ok(GeneratedInstance {
        graph,
        spec: PatternSpec::cycle(len, c as Color),
        k: h.k,
        provenance: provenance(
            "ccld-vc",
            vec![
                ("len", json!(len)),
                ("c", json!(c)),
                ("source_n", json!(hg.n())),
                ("source_m", json!(hg.edge_count())),
            ],
        ),
        labels: b.into_labels(),
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    // u v w x y z as 1..6
    fn small_instance() -> VertexCoverInstance {
        let g = ColoredGraph::from_edges(
            6,
            1,
            [
                (1, 0, 1),
                (1, 2, 1),
                (3, 5, 1),
                (3, 2, 1),
                (1, 4, 1),
                (5, 0, 1),
            ],
        )
        .unwrap();
        VertexCoverInstance::new(g, 3, Some(vec![2, 1, 2, 3, 3, 1])).unwrap()
    }

    #[test]
    fn triangle_case_shape() {
        let inst = gen_ccld_vc(&small_instance(), 3, 3).unwrap();
        let g = &inst.graph;
        assert_eq!(g.n(), 7);
        let expect = [
            ((1, 0), 3),
            ((1, 2), 3),
            ((3, 5), 2),
            ((0, 5), 3),
            ((3, 2), 1),
            ((1, 4), 2),
        ];
        for ((u, v), col) in expect {
            assert_eq!(g.color_of(u, v), Some(col), "{u} {v}");
        }
        let alpha = inst.vertex("alpha");
        let apex: Vec<Color> = (0..6).map(|v| g.color_of(v, alpha).unwrap()).collect();
        assert_eq!(apex, [2, 1, 2, 3, 3, 1]);
    }

    #[test]
    fn four_cycle_case_subdivides_once() {
        let inst = gen_ccld_vc(&small_instance(), 4, 4).unwrap();
        let g = &inst.graph;
        assert_eq!((g.n(), g.edge_count()), (13, 18));
        // v–u: yellow at v, the fourth color at u
        let w = inst.vertex("w_{1,2}^1");
        assert_eq!(g.color_of(1, w), Some(3));
        assert_eq!(g.color_of(w, 0), Some(4));
    }

    #[test]
    fn subdivision_shapes() {
        let tri = ColoredGraph::from_edges(3, 1, [(0, 1, 1), (1, 2, 1), (0, 2, 1)]).unwrap();
        let (g, parts) = two_subdivision(&tri);
        assert_eq!(
            (g.n(), g.edge_count(), structural_stats(&g).girth),
            (9, 9, Some(9))
        );
        assert_eq!(parts, [1, 1, 1, 2, 3, 2, 3, 2, 3]);
        let k4 = ColoredGraph::from_edges(
            4,
            1,
            (0..4).flat_map(|a| (a + 1..4).map(move |b| (a, b, 1))),
        )
        .unwrap();
        let (g, _) = two_subdivision(&k4);
        assert_eq!(
            (g.n(), g.edge_count(), structural_stats(&g).girth),
            (16, 18, Some(9))
        );
    }

    #[test]
    fn rejects_bad_inputs() {
        let tri = ColoredGraph::from_edges(3, 1, [(0, 1, 1), (1, 2, 1), (0, 2, 1)]).unwrap();
        let h = VertexCoverInstance::new(tri, 2, Some(vec![1, 2, 3])).unwrap();
        assert!(matches!(
            gen_ccld_vc(&h, 3, 3),
            Err(Error::TriangleFound([1, 2, 3]))
        ));
        let mut no_parts = small_instance();
        no_parts.tripartition = None;
        assert!(matches!(
            gen_ccld_vc(&no_parts, 3, 3),
            Err(Error::NotTripartite(_))
        ));
        assert!(matches!(
            gen_ccld_vc(&small_instance(), 3, 4),
            Err(Error::InvalidParams(_))
        ));
    }
}
