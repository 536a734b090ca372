//! Shared generators and naive oracles for the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use ecdel::graph::{Color, ColoredGraph, DeletionSet, Edge, BLUE, RED};
use ecdel::pattern::{Mode, PatternKind, PatternSpec};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform simple graph on `n` vertices with at most `max_m` edges, colors
/// drawn from `1..=c`.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, max_m: usize, c: Color) -> ColoredGraph {
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    pairs.shuffle(rng);
    let m = rng.gen_range(0..=max_m.min(pairs.len()));
    let edges = pairs[..m]
        .iter()
        .map(|&(a, b)| (a, b, rng.gen_range(1..=c)));
    ColoredGraph::from_edges(n, c, edges).unwrap()
}

/// Adjacency matrix view, `None` for non-edges.
pub fn matrix(g: &ColoredGraph, deleted: &BTreeSet<Edge>) -> Vec<Vec<Option<Color>>> {
    let mut a = vec![vec![None; g.n()]; g.n()];
    for e in g.edges() {
        if !deleted.contains(&e.edge()) {
            a[e.u][e.v] = Some(e.color);
            a[e.v][e.u] = Some(e.color);
        }
    }
    a
}

fn extend(
    a: &[Vec<Option<Color>>],
    spec: &PatternSpec,
    seq: &mut Vec<usize>,
    used: &mut Vec<bool>,
    out: &mut BTreeSet<Vec<Edge>>,
) {
    let n = a.len();
    if seq.len() == spec.len {
        let cycle = spec.kind == PatternKind::Cycle;
        let mut pairs: Vec<(usize, usize)> = seq.windows(2).map(|w| (w[0], w[1])).collect();
        if cycle {
            pairs.push((seq[spec.len - 1], seq[0]));
        }
        if pairs.iter().any(|&(x, y)| a[x][y].is_none()) {
            return;
        }
        let colors: BTreeSet<Color> = pairs.iter().map(|&(x, y)| a[x][y].unwrap()).collect();
        if colors.len() != spec.colors as usize {
            return;
        }
        let edges: BTreeSet<Edge> = pairs.iter().map(|&(x, y)| Edge::new(x, y)).collect();
        if spec.mode == Mode::Induced {
            for (i, &x) in seq.iter().enumerate() {
                for &y in &seq[i + 1..] {
                    if a[x][y].is_some() && !edges.contains(&Edge::new(x, y)) {
                        return;
                    }
                }
            }
        }
        out.insert(edges.into_iter().collect());
        return;
    }
    for v in 0..n {
        if !used[v] {
            used[v] = true;
            seq.push(v);
            extend(a, spec, seq, used, out);
            seq.pop();
            used[v] = false;
        }
    }
}

/// Occurrences as sorted edge lists, found by trying every vertex sequence.
pub fn naive_occurrences(
    g: &ColoredGraph,
    spec: &PatternSpec,
    deleted: &BTreeSet<Edge>,
) -> BTreeSet<Vec<Edge>> {
    let a = matrix(g, deleted);
    let mut out = BTreeSet::new();
    if spec.len <= g.n() && spec.len >= 2 {
        extend(&a, spec, &mut Vec::new(), &mut vec![false; g.n()], &mut out);
    }
    out
}

/// Smallest deletion set size, over all edge subsets by the naive oracle.
pub fn naive_min_deletion(g: &ColoredGraph, spec: &PatternSpec) -> usize {
    let edges: Vec<Edge> = g.edges().iter().map(|e| e.edge()).collect();
    let m = edges.len();
    (0u32..1 << m)
        .filter(|mask| {
            let del: BTreeSet<Edge> = (0..m)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| edges[i])
                .collect();
            naive_occurrences(g, spec, &del).is_empty()
        })
        .map(|mask| mask.count_ones() as usize)
        .min()
        .unwrap()
}

pub fn deletion_set(edges: &[Edge]) -> DeletionSet {
    edges.iter().copied().collect()
}

/// `u ~ v` straight from the definition: same colored adjacency to every
/// third vertex.
pub fn naive_equivalent(g: &ColoredGraph, u: usize, v: usize) -> bool {
    (0..g.n())
        .filter(|&w| w != u && w != v)
        .all(|w| g.color_of(u, w) == g.color_of(v, w))
}

/// A random member of class 𝒯 with at most `max_n` vertices and at most
/// `max_m` edges: a disjoint union of rb-fences and rb-clique-stars with
/// shuffled vertex ids.
pub fn random_t_graph(rng: &mut ChaCha8Rng, max_n: usize, max_m: usize) -> ColoredGraph {
    loop {
        let mut edges: Vec<(usize, usize, Color)> = Vec::new();
        let mut n = 0;
        while n < max_n {
            let room = max_n - n;
            let start = n;
            if room >= 4 && rng.gen_bool(0.4) {
                let a = rng.gen_range(2..=room - 2).min(4);
                let b = rng.gen_range(2..=(room - a).min(4));
                let k1: Vec<usize> = (start..start + a).collect();
                let k2: Vec<usize> = (start + a..start + a + b).collect();
                clique(&k1, BLUE, &mut edges);
                clique(&k2, BLUE, &mut edges);
                let t = rng.gen_range(1..=a.min(b));
                let mut right = k2.clone();
                right.shuffle(rng);
                for i in 0..t {
                    edges.push((k1[i], right[i], RED));
                }
                n += a + b;
            } else {
                let r = rng.gen_range(1..=room.min(3));
                let centers: Vec<usize> = (start..start + r).collect();
                clique(&centers, RED, &mut edges);
                n += r;
                for &x in &centers {
                    let extra = rng.gen_range(0..=(max_n - n).min(2));
                    let mut blue = vec![x];
                    blue.extend(n..n + extra);
                    clique(&blue, BLUE, &mut edges);
                    n += extra;
                }
            }
        }
        if edges.len() > max_m {
            continue;
        }
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(rng);
        let edges = edges.into_iter().map(|(a, b, c)| (perm[a], perm[b], c));
        return ColoredGraph::from_edges(n, 2, edges).unwrap();
    }
}

fn clique(vs: &[usize], color: Color, edges: &mut Vec<(usize, usize, Color)>) {
    for (i, &a) in vs.iter().enumerate() {
        for &b in &vs[i + 1..] {
            edges.push((a, b, color));
        }
    }
}

/// The bicolored graph on `n` vertices encoded by `code` in base 3 over
/// the vertex pairs (0 = no edge, 1 = blue, 2 = red).
pub fn bicolored_from_code(n: usize, mut code: u64) -> ColoredGraph {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let d = (code % 3) as Color;
            code /= 3;
            if d > 0 {
                edges.push((a, b, d));
            }
        }
    }
    ColoredGraph::from_edges(n, 2, edges).unwrap()
}

pub fn alt_c4() -> ColoredGraph {
    ecdel::graph::parse_graph("p ecg 4 4 2\ne 1 3 1\ne 2 3 1\ne 1 4 2\ne 2 4 2").unwrap()
}
