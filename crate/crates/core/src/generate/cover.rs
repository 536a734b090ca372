//! Vertex cover instances on uncolored graphs.

use crate::error::{Error, Result};
use crate::graph::ColoredGraph;

#[derive(Clone, Debug, PartialEq)]
pub struct VertexCoverInstance {
    /// Single-colored graph.
    pub graph: ColoredGraph,
    pub k: usize,
    /// Part (1, 2 or 3) of every vertex, if known.
    pub tripartition: Option<Vec<u8>>,
}

impl VertexCoverInstance {
    /// Checks that the parts are in 1..=3 and that no edge stays inside a
    /// part.
    pub fn new(
        graph: ColoredGraph,
        k: usize,
        tripartition: Option<Vec<u8>>,
    ) -> Result<VertexCoverInstance> {
        if graph.colors() != 1 {
            return Err(Error::MalformedInstance(format!(
                "vertex cover graph has {} colors",
                graph.colors()
            )));
        }
        if let Some(parts) = &tripartition {
            if parts.len() != graph.n() {
                return Err(Error::NotTripartite(format!(
                    "{} parts for {} vertices",
                    parts.len(),
                    graph.n()
                )));
            }
            if let Some(v) = parts.iter().position(|p| !(1..=3).contains(p)) {
                return Err(Error::NotTripartite(format!(
                    "vertex {} has part {}",
                    v + 1,
                    parts[v]
                )));
            }
            if let Some(e) = graph.edges().iter().find(|e| parts[e.u] == parts[e.v]) {
                return Err(Error::NotTripartite(format!(
                    "edge {} lies inside part {}",
                    e.edge(),
                    parts[e.u]
                )));
            }
        }
        Ok(VertexCoverInstance {
            graph,
            k,
            tripartition,
        })
    }

    /// `p vc n m k`, then `e u v` lines and optional `t v part` lines.
    pub fn to_text(&self) -> String {
        let g = &self.graph;
        let mut out = format!("p vc {} {} {}\n", g.n(), g.edge_count(), self.k);
        for e in g.edges() {
            out.push_str(&format!("e {} {}\n", e.u + 1, e.v + 1));
        }
        if let Some(parts) = &self.tripartition {
            for (v, p) in parts.iter().enumerate() {
                out.push_str(&format!("t {} {}\n", v + 1, p));
            }
        }
        out
    }
}

/// Parses the `p vc` format. Lines starting with `c` are comments; the
/// tripartition must list either no vertex or every vertex.
pub fn parse_vc(text: &str) -> Result<VertexCoverInstance> {
    let bad =
        |line: usize, reason: &str| Error::MalformedInstance(format!("line {line}: {reason}"));
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges = Vec::new();
    let mut parts: Vec<Option<u8>> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let t: Vec<&str> = raw.split_whitespace().collect();
        if t.is_empty() || t[0].starts_with('c') {
            continue;
        }
        if t[0] == "p" {
            let nums: Option<Vec<usize>> = t.iter().skip(2).map(|x| x.parse().ok()).collect();
            match (t.get(1), nums.as_deref(), header) {
                (Some(&"vc"), Some(&[n, m, k]), None) => {
                    header = Some((n, m, k));
                    parts = vec![None; n];
                }
                _ => return Err(bad(line, "header must be a single `p vc n m k` line")),
            }
            continue;
        }
        let nums: Option<Vec<usize>> = t[1..].iter().map(|x| x.parse().ok()).collect();
        let Some(nums) = nums else {
            return Err(bad(line, "expected integers"));
        };
        match (t[0], header) {
            (_, None) => return Err(bad(line, "data before the header")),
            ("e", Some((n, _, _))) => match nums.as_slice() {
                &[u, v] if (1..=n).contains(&u) && (1..=n).contains(&v) => {
                    edges.push((u - 1, v - 1, 1))
                }
                _ => return Err(bad(line, "edge must be `e u v` with vertices in 1..=n")),
            },
            ("t", Some((n, _, _))) => match nums.as_slice() {
                &[v, p] if (1..=n).contains(&v) && (1..=3).contains(&p) => {
                    parts[v - 1] = Some(p as u8)
                }
                _ => return Err(bad(line, "part must be `t v p` with p in 1..=3")),
            },
            _ => return Err(bad(line, "unknown line type")),
        }
    }
    let Some((n, m, k)) = header else {
        return Err(Error::MalformedInstance("missing `p vc` header".into()));
    };
    if edges.len() != m {
        return Err(Error::MalformedInstance(format!(
            "header declares {m} edges, found {}",
            edges.len()
        )));
    }
    let graph = ColoredGraph::from_edges(n, 1, edges)?;
    let tripartition = if parts.iter().all(Option::is_none) {
        None
    } else if parts.iter().all(Option::is_some) {
        Some(parts.into_iter().flatten().collect())
    } else {
        return Err(Error::NotTripartite(
            "tripartition does not cover every vertex".into(),
        ));
    };
    VertexCoverInstance::new(graph, k, tripartition)
}

/// Minimum vertex cover size, by exhaustive search over at most 16
/// vertices.
pub fn vc_brute(h: &VertexCoverInstance) -> Result<usize> {
    let g = &h.graph;
    if g.n() > 16 {
        return Err(Error::ResourceLimit(format!(
            "{} vertices exceed the oracle bound of 16",
            g.n()
        )));
    }
    let best = (0u32..1 << g.n())
        .filter(|mask| {
            g.edges()
                .iter()
                .all(|e| mask >> e.u & 1 == 1 || mask >> e.v & 1 == 1)
        })
        .map(|mask| mask.count_ones() as usize)
        .min();
    Ok(best.expect("the full vertex set is a cover"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_needs_two() {
        let g = ColoredGraph::from_edges(3, 1, [(0, 1, 1), (1, 2, 1), (0, 2, 1)]).unwrap();
        assert_eq!(
            vc_brute(&VertexCoverInstance::new(g, 2, None).unwrap()).unwrap(),
            2
        );
    }

    #[test]
    fn text_round_trip() {
        let text = "c path\np vc 3 2 1\ne 1 2\ne 2 3\nt 1 1\nt 2 2\nt 3 1\n";
        let h = parse_vc(text).unwrap();
        assert_eq!(h.tripartition, Some(vec![1, 2, 1]));
        assert_eq!(parse_vc(&h.to_text()).unwrap(), h);
        assert_eq!(vc_brute(&h).unwrap(), 1);
    }

    #[test]
    fn rejects_bad_parts() {
        assert!(matches!(
            parse_vc("p vc 2 1 1\ne 1 2\nt 1 1\nt 2 1\n"),
            Err(Error::NotTripartite(_))
        ));
        assert!(matches!(
            parse_vc("p vc 2 1 1\ne 1 2\nt 1 1\n"),
            Err(Error::NotTripartite(_))
        ));
        assert!(matches!(
            parse_vc("p vc 2 2 1\ne 1 2\n"),
            Err(Error::MalformedInstance(_))
        ));
    }
}
