//! Periodically colored paths.

use crate::error::{Error, Result};
use crate::graph::{Color, ColoredGraph, DeletionSet, Edge};
use crate::pattern::{enumerate, PatternSpec};

/// Color of the `s`-th edge (1-based) of a chain.
pub(crate) fn chain_color(s: usize, c: usize, len: usize) -> Color {
    let r = s % (len - 1);
    if 0 < r && r < c {
        r as Color
    } else {
        c as Color
    }
}

fn check_params(c: usize, len: usize, d: usize) -> Result<()> {
    if len < 3 || c < 1 || c > len - 1 || d < 1 {
        return Err(Error::InvalidParams(format!(
            "path chain needs len ≥ 3, 1 ≤ c ≤ len−1 and d ≥ 1, got c={c}, len={len}, d={d}"
        )));
    }
    Ok(())
}

/// Path on `d·(len−1)` vertices whose `s`-th edge has color `s mod (len−1)`
/// when that lies in `1..c`, and color `c` otherwise. Every `len`
/// consecutive vertices induce a c-colored path; this is checked before
/// returning.
pub fn gen_path_chain(c: usize, len: usize, d: usize) -> Result<ColoredGraph> {
    check_params(c, len, d)?;
    let n = d * (len - 1);
    let g = ColoredGraph::from_edges(
        n,
        c as Color,
        (1..n).map(|s| (s - 1, s, chain_color(s, c, len))),
    )?;
    let spec = PatternSpec::path(len, c as u32);
    let found = enumerate(&g, &spec)?;
    let windows = (n + 1).saturating_sub(len);
    let all_windows = found.len() == windows
        && found
            .iter()
            .enumerate()
            .all(|(i, occ)| occ.vertices.iter().copied().eq(i..i + len));
    if !all_windows {
        return Err(Error::ValidationFailed {
            check: "windows".into(),
            detail: format!(
                "expected {windows} consecutive occurrences, found {}",
                found.len()
            ),
        });
    }
    Ok(g)
}

/// The edges at positions divisible by `len−1`: `d−1` deletions that break
/// every window of [`gen_path_chain`].
pub fn chain_solution(c: usize, len: usize, d: usize) -> Result<DeletionSet> {
    check_params(c, len, d)?;
    let n = d * (len - 1);
    Ok((1..n)
        .filter(|s| s % (len - 1) == 0)
        .map(|s| Edge::new(s - 1, s))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn colors_of_small_chains() {
        let g = gen_path_chain(2, 4, 2).unwrap();
        let colors: Vec<Color> = g.edges().iter().map(|e| e.color).collect();
        assert_eq!(colors, [1, 2, 2, 1, 2]);
        let g = gen_path_chain(3, 5, 2).unwrap();
        let colors: Vec<Color> = g.edges().iter().map(|e| e.color).collect();
        assert_eq!(colors, [1, 2, 3, 3, 1, 2, 3]);
    }

    #[test]
    fn single_period_has_no_window() {
        let g = gen_path_chain(2, 4, 1).unwrap();
        assert_eq!((g.n(), g.edge_count()), (3, 2));
        assert!(chain_solution(2, 4, 1).unwrap().is_empty());
    }

    #[test]
    fn rejects_bad_params() {
        for (c, len, d) in [(0, 4, 2), (4, 4, 2), (2, 2, 2), (2, 4, 0)] {
            assert!(matches!(
                gen_path_chain(c, len, d),
                Err(Error::InvalidParams(_))
            ));
        }
    }
}
