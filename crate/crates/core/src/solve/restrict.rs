use crate::classify::{cascade_status, CascadeKind};
use crate::error::{Error, Result};
use crate::graph::{ColoredGraph, DeletionSet};
use crate::pattern::{
    enumerate_masked, find_one_masked, mark_conflicts, Mode, PatternSpec, DEFAULT_OCCURRENCE_CAP,
};

/// Drops every conflict-free edge from `s`.
///
/// On a non-cascading graph, any set that breaks all induced occurrences of
/// `g` still does so once restricted to the conflict edges, and the result is
/// a solution.
pub fn restrict_solution(
    g: &ColoredGraph,
    spec: &PatternSpec,
    s: &DeletionSet,
) -> Result<DeletionSet> {
    let spec = spec.with_mode(Mode::Induced);
    spec.validate()?;
    let mask = s.mask(g)?;
    let status = cascade_status(g, &spec)?;
    if status.status == CascadeKind::Cascading {
        let w = status.witness.expect("cascading witness");
        return Err(Error::PreconditionViolated(format!(
            "graph is cascading, witness {w}"
        )));
    }
    for occ in enumerate_masked(g, None, spec, DEFAULT_OCCURRENCE_CAP)? {
        let hit = occ.edges().iter().any(|e| s.contains(e));
        if !hit {
            return Err(Error::PreconditionViolated(format!(
                "occurrence {occ} is not broken"
            )));
        }
    }
    let mut conflict = vec![false; g.edge_count()];
    mark_conflicts(g, None, spec, &mut conflict);
    let kept: Vec<bool> = mask.iter().zip(&conflict).map(|(&m, &c)| m && c).collect();
    if find_one_masked(g, Some(&kept), spec).is_some() {
        return Err(Error::VerificationFailed(
            "restricted set leaves a pattern".into(),
        ));
    }
    Ok(DeletionSet::from_mask(g, &kept))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Edge;

    #[test]
    fn drops_conflict_free_edges() {
        // blue-red path 0-1-2 plus a pendant blue edge 3-4 far away
        let g = ColoredGraph::from_edges(5, 2, [(0, 1, 1), (1, 2, 2), (3, 4, 1)]).unwrap();
        let spec = PatternSpec::path(3, 2);
        let s: DeletionSet = [Edge::new(0, 1), Edge::new(3, 4)].into_iter().collect();
        let r = restrict_solution(&g, &spec, &s).unwrap();
        assert_eq!(r, [Edge::new(0, 1)].into_iter().collect());
        let all: DeletionSet = g.edges().iter().map(|e| e.edge()).collect();
        assert_eq!(restrict_solution(&g, &spec, &all).unwrap().len(), 2);
    }

    #[test]
    fn rejects_unbroken_occurrence() {
        let g = ColoredGraph::from_edges(3, 2, [(0, 1, 1), (1, 2, 2)]).unwrap();
        let err = restrict_solution(&g, &PatternSpec::path(3, 2), &DeletionSet::new()).unwrap_err();
        assert!(matches!(err, Error::PreconditionViolated(_)));
    }
}
