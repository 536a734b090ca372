use std::ops::ControlFlow;

use serde::Serialize;

use crate::error::Result;
use crate::graph::{Color, ColoredGraph};
use crate::pattern::{mark_conflicts, Mode, Occurrence, PatternSpec, Search};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CascadeKind {
    /// Every occurrence is induced.
    StrictlyNonCascading,
    /// Deleting conflict edges never turns a non-induced occurrence into an
    /// induced one.
    NonCascading,
    Cascading,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CascadeStatus {
    pub status: CascadeKind,
    /// For `NonCascading`, the first non-induced occurrence; for
    /// `Cascading`, the first one whose chords are all conflict edges.
    pub witness: Option<Occurrence>,
}

impl CascadeStatus {
    pub fn is_cascading(&self) -> bool {
        self.status == CascadeKind::Cascading
    }
}

/// Classifies `g` by checking every non-induced occurrence for a chord
/// outside the conflict edges.
pub fn cascade_status(g: &ColoredGraph, spec: &PatternSpec) -> Result<CascadeStatus> {
    let induced = spec.with_mode(Mode::Induced);
    induced.validate()?;
    let mut conflict = vec![false; g.edge_count()];
    mark_conflicts(g, None, induced, &mut conflict);

    let has_chord = |p: &[usize], c: &[Color]| {
        let occ = Occurrence {
            vertices: p.to_vec(),
            colors: c.to_vec(),
        };
        (!occ.chords(g).is_empty()).then_some(occ)
    };
    // only conflict chords survive the pruning, so any chord makes a witness
    let mut cascading: Option<Occurrence> = None;
    let _ = Search::new(g, None, spec.with_mode(Mode::Subgraph))
        .allow_chords(&conflict)
        .run(&mut |p: &[usize], c: &[Color]| match has_chord(p, c) {
            Some(occ) => {
                cascading = Some(occ);
                ControlFlow::Break(())
            }
            None => ControlFlow::Continue(()),
        });
    let mut first_non_induced: Option<Occurrence> = None;
    if cascading.is_none() {
        let _ = Search::new(g, None, spec.with_mode(Mode::Subgraph)).run(
            &mut |p: &[usize], c: &[Color]| match has_chord(p, c) {
                Some(occ) => {
                    first_non_induced = Some(occ);
                    ControlFlow::Break(())
                }
                None => ControlFlow::Continue(()),
            },
        );
    }
    Ok(match (cascading, first_non_induced) {
        (Some(w), _) => CascadeStatus {
            status: CascadeKind::Cascading,
            witness: Some(w),
        },
        (None, Some(w)) => CascadeStatus {
            status: CascadeKind::NonCascading,
            witness: Some(w),
        },
        (None, None) => CascadeStatus {
            status: CascadeKind::StrictlyNonCascading,
            witness: None,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn paw_is_cascading() {
        // triangle 0-1-2 plus pendant 3 on 0
        let g =
            ColoredGraph::from_edges(4, 1, [(0, 1, 1), (1, 2, 1), (0, 2, 1), (0, 3, 1)]).unwrap();
        let s = cascade_status(&g, &PatternSpec::path(3, 1)).unwrap();
        assert_eq!(s.status, CascadeKind::Cascading);
        assert_eq!(s.witness.unwrap().vertices, vec![0, 1, 2]);
    }

    #[test]
    fn complete_graph_has_no_conflicts() {
        let mut edges = Vec::new();
        for u in 0..4 {
            for v in u + 1..4 {
                edges.push((u, v, 1));
            }
        }
        let g = ColoredGraph::from_edges(4, 1, edges).unwrap();
        // no induced P3 at all, so every chord is conflict-free
        let s = cascade_status(&g, &PatternSpec::path(3, 1)).unwrap();
        assert_eq!(s.status, CascadeKind::NonCascading);
    }

    #[test]
    fn tree_is_strict() {
        let g = ColoredGraph::from_edges(4, 2, [(0, 1, 1), (1, 2, 2), (2, 3, 1)]).unwrap();
        let s = cascade_status(&g, &PatternSpec::path(3, 2)).unwrap();
        assert_eq!(s.status, CascadeKind::StrictlyNonCascading);
        assert!(s.witness.is_none());
    }
}
