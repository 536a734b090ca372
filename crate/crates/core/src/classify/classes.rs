use serde::Serialize;

use crate::error::Result;
use crate::graph::{Color, ColoredGraph, Neighbor};
use crate::pattern::{PatternKind, PatternSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ClassKind {
    IndependentSet,
    /// All edges inside the class share this color.
    Clique(Color),
}

/// Colored neighborhood classes, ordered by smallest member.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassPartition {
    pub classes: Vec<Vec<usize>>,
    pub kinds: Vec<ClassKind>,
    /// Index into `classes` for each vertex.
    pub class_of: Vec<usize>,
}

impl ClassPartition {
    /// γ, the number of classes.
    pub fn gamma(&self) -> usize {
        self.classes.len()
    }
}

/// Adjacency of `u` with `other` left out.
fn rest(g: &ColoredGraph, u: usize, other: usize) -> impl Iterator<Item = (usize, Color)> + '_ {
    g.neighbors(u)
        .iter()
        .filter(move |nb| nb.vertex != other)
        .map(|nb: &Neighbor| (nb.vertex, nb.color))
}

/// `u ~ v`: either all colored open neighborhoods agree, or `u` and `v` are
/// joined by an edge of color `i`, agree on their closed `i`-neighborhoods
/// and on all other open neighborhoods.
///
/// Both cases reduce to equal colored adjacency once `u` and `v` are removed
/// from each other's lists: adjacency makes the open case impossible, and
/// non-adjacency makes the closed case impossible.
pub fn equivalent(g: &ColoredGraph, u: usize, v: usize) -> bool {
    u == v || rest(g, u, v).eq(rest(g, v, u))
}

pub fn colored_classes(g: &ColoredGraph) -> ClassPartition {
    let n = g.n();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut y = x;
        while parent[y] != r {
            let next = parent[y];
            parent[y] = r;
            y = next;
        }
        r
    }
    for u in 0..n {
        for v in u + 1..n {
            if g.degree(u) == g.degree(v) && equivalent(g, u, v) {
                let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        let r = find(&mut parent, v);
        if class_of[r] == usize::MAX {
            class_of[r] = classes.len();
            classes.push(Vec::new());
        }
        class_of[v] = class_of[r];
        classes[class_of[v]].push(v);
    }
    let kinds = classes
        .iter()
        .map(|k| match k.len() {
            1 => ClassKind::IndependentSet,
            _ => match g.color_of(k[0], k[1]) {
                Some(c) => ClassKind::Clique(c),
                None => ClassKind::IndependentSet,
            },
        })
        .collect();
    ClassPartition {
        classes,
        kinds,
        class_of,
    }
}

/// True iff every colored neighborhood class is a single vertex.
pub fn is_color_diverse(g: &ColoredGraph) -> bool {
    colored_classes(g).gamma() == g.n()
}

/// True iff every graph of the pattern family is color diverse.
///
/// Families that contain no graph at all count as color diverse.
pub fn spec_is_color_diverse(spec: &PatternSpec) -> Result<bool> {
    spec.validate()?;
    if spec.is_vacuous() {
        return Ok(true);
    }
    let (l, c) = (spec.len, spec.colors);
    Ok(match spec.kind {
        PatternKind::Path => l >= 4 || (l == 3 && c == 2),
        PatternKind::Cycle => l >= 5 || (l == 4 && c >= 3) || (l == 3 && c == 3),
    })
}
