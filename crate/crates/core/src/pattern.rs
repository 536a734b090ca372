//! Detection and enumeration of c-colored paths and cycles.
//!
//! An occurrence of `Path(ℓ, c)` is a sequence of ℓ distinct vertices with
//! consecutive vertices adjacent and exactly `c` distinct colors on its
//! ℓ−1 edges. Cycles add the closing edge. In induced mode no other edge may
//! join two vertices of the occurrence.

use std::fmt;
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Color, ColoredGraph, DeletionSet, Edge};

pub const DEFAULT_OCCURRENCE_CAP: usize = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PatternKind {
    Path,
    Cycle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// No chords allowed.
    Induced,
    /// Any subgraph counts, chords or not.
    Subgraph,
}

/// The forbidden family: c-colored paths or cycles on `len` vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PatternSpec {
    pub kind: PatternKind,
    pub len: usize,
    pub colors: Color,
    pub mode: Mode,
}

impl PatternSpec {
    /// Induced c-colored `P_len`.
    pub fn path(len: usize, colors: Color) -> PatternSpec {
        PatternSpec {
            kind: PatternKind::Path,
            len,
            colors,
            mode: Mode::Induced,
        }
    }

    /// Induced c-colored `C_len`.
    pub fn cycle(len: usize, colors: Color) -> PatternSpec {
        PatternSpec {
            kind: PatternKind::Cycle,
            len,
            colors,
            mode: Mode::Induced,
        }
    }

    pub fn with_mode(self, mode: Mode) -> PatternSpec {
        PatternSpec { mode, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        if self.colors == 0 {
            return Err(Error::InvalidSpec(format!(
                "{self}: needs at least one color"
            )));
        }
        match self.kind {
            PatternKind::Path if self.len == 0 => Err(Error::InvalidSpec(format!(
                "{self}: a path needs at least one vertex"
            ))),
            PatternKind::Cycle if self.len < 3 => Err(Error::InvalidSpec(format!(
                "{self}: a cycle needs at least three vertices"
            ))),
            PatternKind::Cycle if self.colors as usize > self.len => Err(Error::InvalidSpec(
                format!("{self}: more colors than cycle edges"),
            )),
            _ => Ok(()),
        }
    }

    /// Edges of one occurrence.
    pub fn edge_count(&self) -> usize {
        match self.kind {
            PatternKind::Path => self.len - 1,
            PatternKind::Cycle => self.len,
        }
    }

    /// True when no graph can contain an occurrence.
    pub fn is_vacuous(&self) -> bool {
        self.colors as usize > self.edge_count()
    }
}

impl fmt::Display for PatternSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            PatternKind::Path => "P",
            PatternKind::Cycle => "C",
        };
        let mode = match self.mode {
            Mode::Induced => "induced",
            Mode::Subgraph => "subgraph",
        };
        write!(f, "{mode} {}-colored {kind}{}", self.colors, self.len)
    }
}

/// One occurrence in canonical orientation: for paths the first vertex is
/// smaller than the last; cycles start at their minimum vertex and the
/// second vertex is smaller than the last.
///
/// `colors[i]` is the color of the edge from `vertices[i]` to the next
/// vertex (wrapping around for cycles).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Occurrence {
    pub vertices: Vec<usize>,
    pub colors: Vec<Color>,
}

impl Occurrence {
    pub fn is_cycle(&self) -> bool {
        self.colors.len() == self.vertices.len()
    }

    /// The edges traversed, in traversal order.
    pub fn edges(&self) -> Vec<Edge> {
        let k = self.vertices.len();
        (0..self.colors.len())
            .map(|i| Edge::new(self.vertices[i], self.vertices[(i + 1) % k]))
            .collect()
    }

    /// Pairs of occurrence vertices that are adjacent in `g` but not
    /// consecutive in the occurrence.
    pub fn chords(&self, g: &ColoredGraph) -> Vec<Edge> {
        let own: Vec<Edge> = self.edges();
        let mut out = Vec::new();
        for (i, &a) in self.vertices.iter().enumerate() {
            for &b in &self.vertices[i + 1..] {
                let e = Edge::new(a, b);
                if g.has_edge(a, b) && !own.contains(&e) {
                    out.push(e);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Re-checks the occurrence against `g` by direct adjacency lookups.
    pub fn verify(&self, g: &ColoredGraph, spec: &PatternSpec) -> bool {
        let v = &self.vertices;
        if v.len() != spec.len || self.colors.len() != spec.edge_count() {
            return false;
        }
        let mut sorted = v.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != v.len() || v.iter().any(|&x| x >= g.n()) {
            return false;
        }
        let edges_ok = self
            .edges()
            .iter()
            .zip(&self.colors)
            .all(|(e, &c)| g.color_of(e.u, e.v) == Some(c));
        let mut distinct = self.colors.clone();
        distinct.sort_unstable();
        distinct.dedup();
        let canonical = match spec.kind {
            PatternKind::Path => v.len() < 2 || v[0] < v[v.len() - 1],
            PatternKind::Cycle => v[1..].iter().all(|&x| x > v[0]) && v[1] < v[v.len() - 1],
        };
        let induced_ok = spec.mode == Mode::Subgraph || self.chords(g).is_empty();
        edges_ok && canonical && induced_ok && distinct.len() == spec.colors as usize
    }
}

impl fmt::Display for Occurrence {
    /// 1-indexed, whitespace separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", v + 1)?;
        }
        Ok(())
    }
}

/// Depth-first search over partial paths of a graph with an optional mask of
/// removed edges.
pub(crate) struct Search<'a> {
    g: &'a ColoredGraph,
    removed: Option<&'a [bool]>,
    spec: PatternSpec,
    chords: Option<&'a [bool]>,
    path: Vec<usize>,
    cols: Vec<Color>,
    pos: Vec<usize>,
    count: Vec<u32>,
    distinct: usize,
}

const ABSENT: usize = usize::MAX;

impl<'a> Search<'a> {
    pub(crate) fn new(
        g: &'a ColoredGraph,
        removed: Option<&'a [bool]>,
        spec: PatternSpec,
    ) -> Search<'a> {
        let max_color = g
            .edges()
            .iter()
            .map(|e| e.color)
            .max()
            .unwrap_or(0)
            .max(g.colors());
        Search {
            g,
            removed,
            spec,
            chords: None,
            path: Vec::with_capacity(spec.len),
            cols: Vec::with_capacity(spec.len),
            pos: vec![ABSENT; g.n()],
            count: vec![0; max_color as usize + 1],
            distinct: 0,
        }
    }

    /// Subgraph mode only: a chord through an edge not marked here cuts
    /// the branch.
    pub(crate) fn allow_chords(mut self, allowed: &'a [bool]) -> Search<'a> {
        self.chords = Some(allowed);
        self
    }

    fn live(&self, edge: usize) -> bool {
        self.removed.is_none_or(|r| !r[edge])
    }

    fn live_color(&self, u: usize, v: usize) -> Option<Color> {
        let nb = self.g.neighbors(u);
        let i = nb.binary_search_by_key(&v, |x| x.vertex).ok()?;
        self.live(nb[i].edge).then_some(nb[i].color)
    }

    fn push_color(&mut self, c: Color) {
        let slot = &mut self.count[c as usize];
        if *slot == 0 {
            self.distinct += 1;
        }
        *slot += 1;
    }

    fn pop_color(&mut self, c: Color) {
        let slot = &mut self.count[c as usize];
        *slot -= 1;
        if *slot == 0 {
            self.distinct -= 1;
        }
    }

    /// Visits every occurrence in lexicographic order of the canonical
    /// vertex sequence.
    pub(crate) fn run<F>(&mut self, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize], &[Color]) -> ControlFlow<()>,
    {
        if self.spec.is_vacuous() || self.spec.len > self.g.n() {
            return ControlFlow::Continue(());
        }
        for s in 0..self.g.n() {
            self.path.push(s);
            self.pos[s] = 0;
            let flow = self.extend(visit);
            self.pos[s] = ABSENT;
            self.path.pop();
            flow?;
        }
        ControlFlow::Continue(())
    }

    fn extend<F>(&mut self, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize], &[Color]) -> ControlFlow<()>,
    {
        let len = self.path.len();
        let want = self.spec.colors as usize;
        let cycle = self.spec.kind == PatternKind::Cycle;
        if len == self.spec.len {
            let first = self.path[0];
            let last = self.path[len - 1];
            if !cycle {
                if (len == 1 || first < last) && self.distinct == want {
                    return visit(&self.path, &self.cols);
                }
                return ControlFlow::Continue(());
            }
            if self.path[1] > last {
                return ControlFlow::Continue(());
            }
            let Some(close) = self.live_color(last, first) else {
                return ControlFlow::Continue(());
            };
            self.push_color(close);
            let flow = if self.distinct == want {
                self.cols.push(close);
                let f = visit(&self.path, &self.cols);
                self.cols.pop();
                f
            } else {
                ControlFlow::Continue(())
            };
            self.pop_color(close);
            return flow;
        }
        let x = self.path[len - 1];
        let start = self.path[0];
        let total = self.spec.edge_count();
        let g = self.g;
        for nb in g.neighbors(x) {
            let y = nb.vertex;
            if self.pos[y] != ABSENT || !self.live(nb.edge) || (cycle && y < start) {
                continue;
            }
            let is_last = len + 1 == self.spec.len;
            if cycle && is_last && self.live_color(y, start).is_none() {
                continue;
            }
            self.push_color(nb.color);
            let remaining = total - len;
            let prune = self.distinct > want || self.distinct + remaining < want;
            let fits = match (self.spec.mode, self.chords) {
                (Mode::Induced, _) => self.chord_free(y, x, is_last, None),
                (Mode::Subgraph, None) => true,
                (Mode::Subgraph, Some(ok)) => self.chord_free(y, x, is_last, Some(ok)),
            };
            if !prune && fits {
                self.pos[y] = len;
                self.path.push(y);
                self.cols.push(nb.color);
                let flow = self.extend(visit);
                self.cols.pop();
                self.path.pop();
                self.pos[y] = ABSENT;
                if flow.is_break() {
                    self.pop_color(nb.color);
                    return flow;
                }
            }
            self.pop_color(nb.color);
        }
        ControlFlow::Continue(())
    }

    /// `y` may touch the current path only at `x`, at the start vertex
    /// when it closes a cycle, and through edges marked in `allowed`.
    fn chord_free(&self, y: usize, x: usize, is_last: bool, allowed: Option<&[bool]>) -> bool {
        let start = self.path[0];
        let cycle = self.spec.kind == PatternKind::Cycle;
        self.g.neighbors(y).iter().all(|nb| {
            let w = nb.vertex;
            self.pos[w] == ABSENT
                || w == x
                || !self.live(nb.edge)
                || (cycle && is_last && w == start)
                || allowed.is_some_and(|ok| ok[nb.edge])
        })
    }
}

fn occurrence(path: &[usize], cols: &[Color]) -> Occurrence {
    Occurrence {
        vertices: path.to_vec(),
        colors: cols.to_vec(),
    }
}

pub(crate) fn find_one_masked(
    g: &ColoredGraph,
    removed: Option<&[bool]>,
    spec: PatternSpec,
) -> Option<Occurrence> {
    let mut found = None;
    let _ = Search::new(g, removed, spec).run(&mut |p: &[usize], c: &[Color]| {
        found = Some(occurrence(p, c));
        ControlFlow::Break(())
    });
    found
}

pub(crate) fn enumerate_masked(
    g: &ColoredGraph,
    removed: Option<&[bool]>,
    spec: PatternSpec,
    cap: usize,
) -> Result<Vec<Occurrence>> {
    let mut out = Vec::new();
    let flow = Search::new(g, removed, spec).run(&mut |p: &[usize], c: &[Color]| {
        if out.len() >= cap {
            return ControlFlow::Break(());
        }
        out.push(occurrence(p, c));
        ControlFlow::Continue(())
    });
    if flow.is_break() {
        return Err(Error::ResourceLimit(format!(
            "more than {cap} occurrences of {spec}"
        )));
    }
    out.sort_unstable();
    Ok(out)
}

/// The canonically smallest occurrence, if any.
pub fn find_one(g: &ColoredGraph, spec: &PatternSpec) -> Result<Option<Occurrence>> {
    spec.validate()?;
    Ok(find_one_masked(g, None, *spec))
}

/// True iff `g` contains no occurrence.
pub fn is_free(g: &ColoredGraph, spec: &PatternSpec) -> Result<bool> {
    Ok(find_one(g, spec)?.is_none())
}

/// All occurrences in canonical order, capped at [`DEFAULT_OCCURRENCE_CAP`].
pub fn enumerate(g: &ColoredGraph, spec: &PatternSpec) -> Result<Vec<Occurrence>> {
    enumerate_capped(g, spec, DEFAULT_OCCURRENCE_CAP)
}

pub fn enumerate_capped(
    g: &ColoredGraph,
    spec: &PatternSpec,
    cap: usize,
) -> Result<Vec<Occurrence>> {
    spec.validate()?;
    enumerate_masked(g, None, *spec, cap)
}

/// Edges lying on at least one induced occurrence.
pub fn conflict_edges(g: &ColoredGraph, spec: &PatternSpec) -> Result<DeletionSet> {
    let spec = spec.with_mode(Mode::Induced);
    spec.validate()?;
    let mut mask = vec![false; g.edge_count()];
    mark_conflicts(g, None, spec, &mut mask);
    Ok(DeletionSet::from_mask(g, &mask))
}

pub(crate) fn mark_conflicts(
    g: &ColoredGraph,
    removed: Option<&[bool]>,
    spec: PatternSpec,
    mask: &mut [bool],
) {
    let _ = Search::new(g, removed, spec).run(&mut |p: &[usize], _: &[Color]| {
        let k = p.len();
        let closing = if spec.kind == PatternKind::Cycle {
            k
        } else {
            k - 1
        };
        for i in 0..closing {
            let e = g.edge_index(p[i], p[(i + 1) % k]).expect("occurrence edge");
            mask[e] = true;
        }
        ControlFlow::Continue(())
    });
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph;

    fn alt_c4() -> ColoredGraph {
        parse_graph("p ecg 4 4 2\ne 1 3 1\ne 2 3 1\ne 1 4 2\ne 2 4 2").unwrap()
    }

    /// Red triangle x, y, w with blue edges w–u and w–v; ids u=0 v=1 w=2 x=3 y=4.
    fn red_triangle_with_blue_pendants() -> ColoredGraph {
        ColoredGraph::from_edges(
            5,
            2,
            [(3, 4, 2), (2, 3, 2), (2, 4, 2), (0, 2, 1), (1, 2, 1)],
        )
        .unwrap()
    }

    #[test]
    fn alternating_c4_cycle() {
        let occ = find_one(&alt_c4(), &PatternSpec::cycle(4, 2))
            .unwrap()
            .unwrap();
        assert_eq!(occ.vertices, vec![0, 2, 1, 3]);
        assert_eq!(occ.colors, vec![1, 1, 2, 2]);
        let x = conflict_edges(&alt_c4(), &PatternSpec::cycle(4, 2)).unwrap();
        assert_eq!(x.len(), 4);
    }

    #[test]
    fn red_triangle_with_blue_pendants_bicolored_p3() {
        let g = red_triangle_with_blue_pendants();
        let spec = PatternSpec::path(3, 2);
        let occ = find_one(&g, &spec).unwrap().unwrap();
        assert!(occ.verify(&g, &spec));
        assert_eq!(occ.vertices, vec![0, 2, 3]);
        let all = enumerate(&g, &spec).unwrap();
        // u and v each see x and y through w
        assert_eq!(all.len(), 4);
    }

    #[test]
    fn monochromatic_p5_has_three_p3() {
        let g = ColoredGraph::from_edges(5, 1, (0..4).map(|i| (i, i + 1, 1))).unwrap();
        assert_eq!(enumerate(&g, &PatternSpec::path(3, 1)).unwrap().len(), 3);
        assert_eq!(enumerate(&g, &PatternSpec::path(3, 2)).unwrap().len(), 0);
    }

    #[test]
    fn edgeless_is_free() {
        let g = ColoredGraph::empty(6, 3);
        for spec in [
            PatternSpec::path(2, 1),
            PatternSpec::cycle(3, 3),
            PatternSpec::path(1, 1),
        ] {
            assert_eq!(find_one(&g, &spec).unwrap(), None);
        }
    }

    #[test]
    fn invalid_specs() {
        let g = ColoredGraph::empty(3, 1);
        for spec in [
            PatternSpec::path(0, 1),
            PatternSpec::cycle(2, 1),
            PatternSpec::cycle(3, 4),
            PatternSpec::path(3, 0),
        ] {
            assert!(matches!(find_one(&g, &spec), Err(Error::InvalidSpec(_))));
        }
    }

    #[test]
    fn triangle_subgraph_versus_induced() {
        let g = ColoredGraph::from_edges(3, 2, [(0, 1, 1), (1, 2, 2), (0, 2, 2)]).unwrap();
        let induced = PatternSpec::path(3, 2);
        assert!(enumerate(&g, &induced).unwrap().is_empty());
        let sub = enumerate(&g, &induced.with_mode(Mode::Subgraph)).unwrap();
        assert_eq!(sub.len(), 2);
        let c3 = enumerate(&g, &PatternSpec::cycle(3, 2)).unwrap();
        assert_eq!(
            c3,
            vec![Occurrence {
                vertices: vec![0, 1, 2],
                colors: vec![1, 2, 2]
            }]
        );
    }

    #[test]
    fn cap_is_enforced() {
        let g = ColoredGraph::from_edges(5, 1, (0..4).map(|i| (i, i + 1, 1))).unwrap();
        let err = enumerate_capped(&g, &PatternSpec::path(3, 1), 2).unwrap_err();
        assert!(matches!(err, Error::ResourceLimit(_)));
    }

    #[test]
    fn display_is_one_indexed() {
        let occ = Occurrence {
            vertices: vec![0, 4, 2],
            colors: vec![1, 1],
        };
        assert_eq!(occ.to_string(), "1 5 3");
    }
}
