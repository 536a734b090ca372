//! Edge-colored simple graphs, deletion sets and the ECG text format.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Colors are numbered from 1.
pub type Color = u32;

/// Blue, the first color of bicolored graphs.
pub const BLUE: Color = 1;
/// Red, the second color of bicolored graphs.
pub const RED: Color = 2;
/// Yellow, used by several gadgets as the third color.
pub const YELLOW: Color = 3;

/// An unordered vertex pair stored as `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Builds the canonical pair. Panics on a loop.
    pub fn new(a: usize, b: usize) -> Edge {
        assert_ne!(a, b, "loop edge at vertex {a}");
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }
}

/// Prints 1-based vertex numbers, as in the file format.
impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}}}", self.u + 1, self.v + 1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ColoredEdge {
    pub u: usize,
    pub v: usize,
    pub color: Color,
}

impl ColoredEdge {
    pub fn edge(&self) -> Edge {
        Edge {
            u: self.u,
            v: self.v,
        }
    }
}

/// Adjacency entry: the neighbor, the edge color and the edge's index in
/// [`ColoredGraph::edges`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Neighbor {
    pub vertex: usize,
    pub color: Color,
    pub edge: usize,
}

/// A simple undirected graph whose edges each carry one color in `[1, c]`.
///
/// Immutable once built. Edges are kept in canonical order (`u < v`, then
/// lexicographic) and each adjacency list is sorted by neighbor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredGraph {
    n: usize,
    c: Color,
    edges: Vec<ColoredEdge>,
    adj: Vec<Vec<Neighbor>>,
}

impl ColoredGraph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize, c: Color) -> ColoredGraph {
        ColoredGraph {
            n,
            c,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from `(u, v, color)` triples with 0-indexed vertices.
    ///
    /// Errors report the 1-based position of the offending triple in `line`.
    pub fn from_edges<I>(n: usize, c: Color, edges: I) -> Result<ColoredGraph>
    where
        I: IntoIterator<Item = (usize, usize, Color)>,
    {
        let mut list = Vec::new();
        let mut seen = HashSet::new();
        for (i, (a, b, color)) in edges.into_iter().enumerate() {
            let line = i + 1;
            for x in [a, b] {
                if x >= n {
                    return Err(Error::VertexOutOfRange {
                        line,
                        vertex: x as u64 + 1,
                        n,
                    });
                }
            }
            if a == b {
                return Err(Error::LoopEdge { line, v: a + 1 });
            }
            if color == 0 || color > c {
                return Err(Error::ColorOutOfRange {
                    line,
                    color: color as u64,
                    max: c,
                });
            }
            let e = Edge::new(a, b);
            if !seen.insert(e) {
                return Err(Error::DuplicateEdge {
                    line,
                    u: e.u + 1,
                    v: e.v + 1,
                });
            }
            list.push(ColoredEdge {
                u: e.u,
                v: e.v,
                color,
            });
        }
        Ok(Self::from_checked(n, c, list))
    }

    fn from_checked(n: usize, c: Color, mut edges: Vec<ColoredEdge>) -> ColoredGraph {
        edges.sort_unstable();
        let mut adj = vec![Vec::new(); n];
        for (i, e) in edges.iter().enumerate() {
            adj[e.u].push(Neighbor {
                vertex: e.v,
                color: e.color,
                edge: i,
            });
            adj[e.v].push(Neighbor {
                vertex: e.u,
                color: e.color,
                edge: i,
            });
        }
        for list in &mut adj {
            list.sort_unstable_by_key(|nb| nb.vertex);
        }
        ColoredGraph { n, c, edges, adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The declared number of colors.
    pub fn colors(&self) -> Color {
        self.c
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// All edges in canonical order.
    pub fn edges(&self) -> &[ColoredEdge] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[Neighbor] {
        &self.adj[v]
    }

    /// `N^i(v)`, the neighbors joined to `v` by an edge of color `i`.
    pub fn neighbors_in(&self, v: usize, color: Color) -> impl Iterator<Item = usize> + '_ {
        self.adj[v]
            .iter()
            .filter(move |nb| nb.color == color)
            .map(|nb| nb.vertex)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    fn lookup(&self, u: usize, v: usize) -> Option<&Neighbor> {
        let list = self.adj.get(u)?;
        list.binary_search_by_key(&v, |nb| nb.vertex)
            .ok()
            .map(|i| &list[i])
    }

    pub fn color_of(&self, u: usize, v: usize) -> Option<Color> {
        self.lookup(u, v).map(|nb| nb.color)
    }

    /// Index of `{u, v}` in [`ColoredGraph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.lookup(u, v).map(|nb| nb.edge)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.lookup(u, v).is_some()
    }

    /// Number of edges of each color; index 0 is unused.
    pub fn color_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.c as usize + 1];
        for e in &self.edges {
            counts[e.color as usize] += 1;
        }
        counts
    }

    /// `G - S`.
    pub fn remove_edges(&self, s: &DeletionSet) -> Result<ColoredGraph> {
        let mask = s.mask(self)?;
        Ok(self.without_mask(&mask))
    }

    /// The graph keeping only edges whose mask entry is false.
    pub(crate) fn without_mask(&self, removed: &[bool]) -> ColoredGraph {
        let kept = self
            .edges
            .iter()
            .zip(removed)
            .filter(|(_, &r)| !r)
            .map(|(e, _)| *e)
            .collect();
        Self::from_checked(self.n, self.c, kept)
    }

    /// Returns a copy with extra edges inserted.
    pub fn with_edges(&self, extra: &[ColoredEdge]) -> Result<ColoredGraph> {
        let all = self.edges.iter().chain(extra).map(|e| (e.u, e.v, e.color));
        ColoredGraph::from_edges(self.n, self.c, all.collect::<Vec<_>>())
    }

    /// `G[V']` together with the map from new to original vertex ids.
    ///
    /// The new ids follow the ascending order of the original ids.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<(ColoredGraph, Vec<usize>)> {
        let mut keep: Vec<usize> = vertices.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if let Some(&bad) = keep.iter().find(|&&v| v >= self.n) {
            return Err(Error::VertexOutOfRange {
                line: 0,
                vertex: bad as u64 + 1,
                n: self.n,
            });
        }
        let mut new_id = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            new_id[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| new_id[e.u] != usize::MAX && new_id[e.v] != usize::MAX)
            .map(|e| ColoredEdge {
                u: new_id[e.u],
                v: new_id[e.v],
                color: e.color,
            })
            .collect();
        Ok((Self::from_checked(keep.len(), self.c, edges), keep))
    }

    /// Same graph with a different declared color count.
    pub fn with_color_count(&self, c: Color) -> Result<ColoredGraph> {
        if let Some(e) = self.edges.iter().find(|e| e.color > c) {
            return Err(Error::ColorOutOfRange {
                line: 0,
                color: e.color as u64,
                max: c,
            });
        }
        Ok(ColoredGraph { c, ..self.clone() })
    }

    pub fn stats(&self) -> StructuralStats {
        structural_stats(self)
    }
}

/// A set of edges of some reference graph.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct DeletionSet(BTreeSet<Edge>);

impl DeletionSet {
    pub fn new() -> DeletionSet {
        DeletionSet(BTreeSet::new())
    }

    pub fn insert(&mut self, e: Edge) -> bool {
        self.0.insert(e)
    }

    pub fn remove(&mut self, e: &Edge) -> bool {
        self.0.remove(e)
    }

    pub fn contains(&self, e: &Edge) -> bool {
        self.0.contains(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Edges in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = &Edge> + '_ {
        self.0.iter()
    }

    pub fn edges(&self) -> &BTreeSet<Edge> {
        &self.0
    }

    /// Per-edge membership flags indexed like `g.edges()`.
    pub fn mask(&self, g: &ColoredGraph) -> Result<Vec<bool>> {
        let mut mask = vec![false; g.edge_count()];
        for e in &self.0 {
            match g.edge_index(e.u, e.v) {
                Some(i) => mask[i] = true,
                None => {
                    return Err(Error::EdgeNotPresent {
                        u: e.u + 1,
                        v: e.v + 1,
                    })
                }
            }
        }
        Ok(mask)
    }

    pub(crate) fn from_mask(g: &ColoredGraph, mask: &[bool]) -> DeletionSet {
        g.edges()
            .iter()
            .zip(mask)
            .filter(|(_, &m)| m)
            .map(|(e, _)| e.edge())
            .collect()
    }

    pub(crate) fn from_indices(g: &ColoredGraph, idx: &[usize]) -> DeletionSet {
        idx.iter().map(|&i| g.edges()[i].edge()).collect()
    }
}

impl FromIterator<Edge> for DeletionSet {
    fn from_iter<T: IntoIterator<Item = Edge>>(iter: T) -> Self {
        DeletionSet(iter.into_iter().collect())
    }
}

impl Extend<Edge> for DeletionSet {
    fn extend<T: IntoIterator<Item = Edge>>(&mut self, iter: T) {
        self.0.extend(iter)
    }
}

impl<'a> IntoIterator for &'a DeletionSet {
    type Item = &'a Edge;
    type IntoIter = std::collections::btree_set::Iter<'a, Edge>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for DeletionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructuralStats {
    pub max_degree: usize,
    /// `None` for acyclic graphs.
    pub girth: Option<usize>,
    pub component_count: usize,
    pub per_color_is_cluster: BTreeMap<Color, bool>,
}

pub fn structural_stats(g: &ColoredGraph) -> StructuralStats {
    let max_degree = (0..g.n()).map(|v| g.degree(v)).max().unwrap_or(0);
    let per_color_is_cluster = (1..=g.colors())
        .map(|i| (i, color_is_cluster(g, i)))
        .collect();
    StructuralStats {
        max_degree,
        girth: girth(g),
        component_count: components(g).len(),
        per_color_is_cluster,
    }
}

/// Length of a shortest cycle, by breadth-first search from every vertex.
pub fn girth(g: &ColoredGraph) -> Option<usize> {
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; g.n()];
    let mut parent = vec![usize::MAX; g.n()];
    for root in 0..g.n() {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        parent[root] = usize::MAX;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            if best.is_some_and(|b| 2 * dist[x] >= b) {
                break;
            }
            for nb in g.neighbors(x) {
                let y = nb.vertex;
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if parent[x] != y {
                    let len = dist[x] + dist[y] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// Vertex sets of the connected components, each sorted, ordered by
/// smallest member.
pub fn components(g: &ColoredGraph) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            let x = comp[i];
            i += 1;
            for nb in g.neighbors(x) {
                if !seen[nb.vertex] {
                    seen[nb.vertex] = true;
                    comp.push(nb.vertex);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

fn color_is_cluster(g: &ColoredGraph, color: Color) -> bool {
    (0..g.n()).all(|v| {
        let nbs: Vec<usize> = g.neighbors_in(v, color).collect();
        nbs.iter().enumerate().all(|(i, &a)| {
            nbs[i + 1..]
                .iter()
                .all(|&b| g.color_of(a, b) == Some(color))
        })
    })
}

/// Parses the ECG text format.
///
/// ```text
/// c optional comment
/// p ecg <n> <m> <c>
/// e <u> <v> <color>      (m times, 1-indexed vertices)
/// ```
pub fn parse_graph(text: &str) -> Result<ColoredGraph> {
    let mut header: Option<(usize, usize, Color)> = None;
    let mut edges: Vec<ColoredEdge> = Vec::new();
    let mut seen = HashSet::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        match tokens[0] {
            "p" => {
                if header.is_some() {
                    return Err(header_err(line, "second header line"));
                }
                header = Some(parse_header(line, &tokens)?);
            }
            "e" => {
                let Some((n, _, c)) = header else {
                    return Err(header_err(line, "edge line before header"));
                };
                if tokens.len() != 4 {
                    return Err(Error::MalformedLine {
                        line,
                        reason: "expected `e <u> <v> <color>`".into(),
                    });
                }
                let nums = tokens[1..]
                    .iter()
                    .map(|t| t.parse::<u64>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|e| Error::MalformedLine {
                        line,
                        reason: e.to_string(),
                    })?;
                let (a, b, color) = (nums[0], nums[1], nums[2]);
                for x in [a, b] {
                    if x == 0 || x > n as u64 {
                        return Err(Error::VertexOutOfRange { line, vertex: x, n });
                    }
                }
                if a == b {
                    return Err(Error::LoopEdge {
                        line,
                        v: a as usize,
                    });
                }
                if color == 0 || color > c as u64 {
                    return Err(Error::ColorOutOfRange {
                        line,
                        color,
                        max: c,
                    });
                }
                let e = Edge::new(a as usize - 1, b as usize - 1);
                if !seen.insert(e) {
                    return Err(Error::DuplicateEdge {
                        line,
                        u: e.u + 1,
                        v: e.v + 1,
                    });
                }
                edges.push(ColoredEdge {
                    u: e.u,
                    v: e.v,
                    color: color as Color,
                });
            }
            other => {
                return Err(Error::MalformedLine {
                    line,
                    reason: format!("unknown line type `{other}`"),
                })
            }
        }
    }
    let Some((n, m, c)) = header else {
        return Err(header_err(last_line.max(1), "missing `p ecg` header"));
    };
    if edges.len() != m {
        return Err(Error::EdgeCountMismatch {
            declared: m,
            found: edges.len(),
        });
    }
    Ok(ColoredGraph::from_checked(n, c, edges))
}

fn header_err(line: usize, reason: &str) -> Error {
    Error::MalformedHeader {
        line,
        reason: reason.into(),
    }
}

fn parse_header(line: usize, tokens: &[&str]) -> Result<(usize, usize, Color)> {
    if tokens.len() != 5 || tokens[1] != "ecg" {
        return Err(header_err(line, "expected `p ecg <n> <m> <c>`"));
    }
    let num = |t: &str| {
        t.parse::<u64>()
            .map_err(|e| header_err(line, &e.to_string()))
    };
    let (n, m, c) = (num(tokens[2])?, num(tokens[3])?, num(tokens[4])?);
    let c = Color::try_from(c).map_err(|_| header_err(line, "color count too large"))?;
    Ok((n as usize, m as usize, c))
}

/// Serializes in ECG format, edges in canonical order.
pub fn write_graph(g: &ColoredGraph) -> String {
    let mut out = format!("p ecg {} {} {}\n", g.n(), g.edge_count(), g.colors());
    for e in g.edges() {
        out.push_str(&format!("e {} {} {}\n", e.u + 1, e.v + 1, e.color));
    }
    out
}

impl std::str::FromStr for ColoredGraph {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_graph(s)
    }
}
