//! Recognition of class 𝒯: bicolored graphs in which blue and red each form
//! a disjoint union of cliques and no induced red-blue-red `P_4` exists.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{components, Color, ColoredGraph, Edge, BLUE, RED};

/// The five forbidden induced subgraphs of class 𝒯.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ForbiddenKind {
    /// (a) induced blue `P_3`
    BlueP3,
    /// (b) induced red `P_3`
    RedP3,
    /// (c) triangle with two blue edges and one red
    TwoBlueTriangle,
    /// (d) triangle with two red edges and one blue
    TwoRedTriangle,
    /// (e) induced `P_4` colored red, blue, red
    RedBlueRedP4,
}

impl ForbiddenKind {
    pub fn label(&self) -> char {
        match self {
            ForbiddenKind::BlueP3 => 'a',
            ForbiddenKind::RedP3 => 'b',
            ForbiddenKind::TwoBlueTriangle => 'c',
            ForbiddenKind::TwoRedTriangle => 'd',
            ForbiddenKind::RedBlueRedP4 => 'e',
        }
    }
}

/// A forbidden induced subgraph. For the paths the vertices are listed along
/// the path; for triangles the apex joined by two equal colors comes first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ForbiddenWitness {
    pub kind: ForbiddenKind,
    pub vertices: Vec<usize>,
}

impl fmt::Display for ForbiddenWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) on vertices", self.kind.label())?;
        for v in &self.vertices {
            write!(f, " {}", v + 1)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum ComponentClass {
    /// Two blue cliques of size at least two joined by a red matching.
    RbFence {
        k1: Vec<usize>,
        k2: Vec<usize>,
        matching: Vec<Edge>,
    },
    /// A red clique with one blue clique hanging off each of its vertices.
    /// Each entry is `(center, blue clique containing the center)`; centers
    /// without blue edges get the singleton clique.
    RbCliqueStar {
        red_clique: Vec<usize>,
        blue_cliques: Vec<(usize, Vec<usize>)>,
    },
    Rejected {
        witness: ForbiddenWitness,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TComponent {
    pub vertices: Vec<usize>,
    pub class: ComponentClass,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TDecomposition {
    pub components: Vec<TComponent>,
}

impl TDecomposition {
    pub fn accepted(&self) -> bool {
        self.witness().is_none()
    }

    /// The witness of the first rejected component.
    pub fn witness(&self) -> Option<&ForbiddenWitness> {
        self.components.iter().find_map(|c| match &c.class {
            ComponentClass::Rejected { witness } => Some(witness),
            _ => None,
        })
    }
}

fn check_bicolored(g: &ColoredGraph) -> Result<()> {
    match g.edges().iter().find(|e| e.color != BLUE && e.color != RED) {
        Some(e) => Err(Error::NotBicolored(e.color)),
        None => Ok(()),
    }
}

/// Searches for any of the five forbidden induced subgraphs directly.
pub fn scan_forbidden(g: &ColoredGraph) -> Result<Option<ForbiddenWitness>> {
    check_bicolored(g)?;
    let found = |kind, vertices: Vec<usize>| Ok(Some(ForbiddenWitness { kind, vertices }));
    for m in 0..g.n() {
        let nbs = g.neighbors(m);
        for (i, a) in nbs.iter().enumerate() {
            for b in &nbs[i + 1..] {
                if a.color != b.color {
                    continue;
                }
                let ab = g.color_of(a.vertex, b.vertex);
                let kind = match (a.color, ab) {
                    (BLUE, None) => ForbiddenKind::BlueP3,
                    (RED, None) => ForbiddenKind::RedP3,
                    (BLUE, Some(RED)) => ForbiddenKind::TwoBlueTriangle,
                    (RED, Some(BLUE)) => ForbiddenKind::TwoRedTriangle,
                    _ => continue,
                };
                let vertices = match ab {
                    None => vec![a.vertex, m, b.vertex],
                    Some(_) => vec![m, a.vertex, b.vertex],
                };
                return found(kind, vertices);
            }
        }
    }
    for e in g.edges().iter().filter(|e| e.color == BLUE) {
        for (b, c) in [(e.u, e.v), (e.v, e.u)] {
            for a in g.neighbors_in(b, RED).filter(|&a| a != c) {
                for d in g.neighbors_in(c, RED).filter(|&d| d != b && d != a) {
                    if !g.has_edge(a, c) && !g.has_edge(b, d) && !g.has_edge(a, d) {
                        return found(ForbiddenKind::RedBlueRedP4, vec![a, b, c, d]);
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Partition of `comp` into the connected pieces of one color, or `None` if
/// some piece is not a clique of that color.
fn color_cliques(g: &ColoredGraph, comp: &[usize], color: Color) -> Option<Vec<Vec<usize>>> {
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    for &s in comp {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut piece = vec![s];
        let mut i = 0;
        while i < piece.len() {
            let x = piece[i];
            i += 1;
            for y in g.neighbors_in(x, color) {
                if !seen[y] {
                    seen[y] = true;
                    piece.push(y);
                }
            }
        }
        piece.sort_unstable();
        let k = piece.len();
        let inner = piece
            .iter()
            .map(|&x| g.neighbors_in(x, color).count())
            .sum::<usize>()
            / 2;
        if inner != k * (k - 1) / 2 {
            return None;
        }
        out.push(piece);
    }
    Some(out)
}

fn classify_component(g: &ColoredGraph, comp: &[usize]) -> Option<ComponentClass> {
    let blue = color_cliques(g, comp, BLUE)?;
    let red = color_cliques(g, comp, RED)?;
    if blue.len() == 2 && blue.iter().all(|k| k.len() >= 2) && red.iter().all(|k| k.len() <= 2) {
        let matching = red
            .iter()
            .filter(|k| k.len() == 2)
            .map(|k| Edge::new(k[0], k[1]))
            .collect();
        return Some(ComponentClass::RbFence {
            k1: blue[0].clone(),
            k2: blue[1].clone(),
            matching,
        });
    }
    let big_red: Vec<&Vec<usize>> = red.iter().filter(|k| k.len() >= 2).collect();
    let center = match big_red.as_slice() {
        [] => vec![comp[0]],
        [c] => (*c).clone(),
        _ => return None,
    };
    let mut blue_cliques = Vec::new();
    for &c in &center {
        let k = blue
            .iter()
            .find(|k| k.contains(&c))
            .expect("blue pieces cover the component");
        if k.iter().filter(|x| center.contains(x)).count() != 1 {
            return None;
        }
        blue_cliques.push((c, k.clone()));
    }
    let covered: usize = blue_cliques.iter().map(|(_, k)| k.len()).sum();
    if covered != comp.len() {
        return None;
    }
    Some(ComponentClass::RbCliqueStar {
        red_clique: center,
        blue_cliques,
    })
}

/// Decomposes every connected component into an rb-fence or an
/// rb-clique-star, or rejects it with a forbidden induced subgraph.
///
/// A component that is both a fence and a clique-star is reported as a fence.
pub fn recognize_t(g: &ColoredGraph) -> Result<TDecomposition> {
    check_bicolored(g)?;
    let mut out = Vec::new();
    for comp in components(g) {
        let class = match classify_component(g, &comp) {
            Some(class) => class,
            None => {
                let (sub, map) = g.induced_subgraph(&comp)?;
                let w = scan_forbidden(&sub)?
                    .expect("a rejected component contains a forbidden subgraph");
                let vertices = w.vertices.iter().map(|&v| map[v]).collect();
                ComponentClass::Rejected {
                    witness: ForbiddenWitness {
                        kind: w.kind,
                        vertices,
                    },
                }
            }
        };
        out.push(TComponent {
            vertices: comp,
            class,
        });
    }
    Ok(TDecomposition { components: out })
}

/// Blue and red both induce disjoint unions of cliques.
pub fn is_double_cluster(g: &ColoredGraph) -> bool {
    let s = g.stats();
    g.colors() <= 2 && s.per_color_is_cluster.values().all(|&b| b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize, Color)]) -> ColoredGraph {
        ColoredGraph::from_edges(n, 2, edges.iter().copied()).unwrap()
    }

    #[test]
    fn small_fence() {
        // blue K3 {0,1,2}, blue K4 {3,4,5,6}, red 0-3 and 1-4
        let mut e = vec![(0, 1, 1), (0, 2, 1), (1, 2, 1)];
        for u in 3..7 {
            for v in u + 1..7 {
                e.push((u, v, 1));
            }
        }
        e.extend([(0, 3, 2), (1, 4, 2)]);
        let d = recognize_t(&graph(7, &e)).unwrap();
        assert_eq!(d.components.len(), 1);
        assert_eq!(
            d.components[0].class,
            ComponentClass::RbFence {
                k1: vec![0, 1, 2],
                k2: vec![3, 4, 5, 6],
                matching: vec![Edge::new(0, 3), Edge::new(1, 4)]
            }
        );
    }

    #[test]
    fn red_blue_red_p4_rejected() {
        let g = graph(4, &[(0, 1, 2), (1, 2, 1), (2, 3, 2)]);
        let d = recognize_t(&g).unwrap();
        let w = d.witness().unwrap();
        assert_eq!(w.kind, ForbiddenKind::RedBlueRedP4);
        assert_eq!(w.vertices, vec![0, 1, 2, 3]);
    }

    #[test]
    fn blue_triangle_is_degenerate_star() {
        let g = graph(3, &[(0, 1, 1), (1, 2, 1), (0, 2, 1)]);
        let d = recognize_t(&g).unwrap();
        assert_eq!(
            d.components[0].class,
            ComponentClass::RbCliqueStar {
                red_clique: vec![0],
                blue_cliques: vec![(0, vec![0, 1, 2])]
            }
        );
    }

    #[test]
    fn single_red_edge_between_blue_edges_is_fence() {
        let g = graph(4, &[(0, 1, 1), (2, 3, 1), (1, 2, 2)]);
        let d = recognize_t(&g).unwrap();
        assert!(matches!(
            d.components[0].class,
            ComponentClass::RbFence { .. }
        ));
    }

    #[test]
    fn third_color_is_rejected() {
        let g = ColoredGraph::from_edges(2, 3, [(0, 1, 3)]).unwrap();
        assert_eq!(recognize_t(&g), Err(Error::NotBicolored(3)));
    }

    #[test]
    fn isolated_vertices_are_stars() {
        let d = recognize_t(&ColoredGraph::empty(2, 2)).unwrap();
        assert_eq!(d.components.len(), 2);
        assert!(d.accepted());
    }
}
