//! Formula to bicolored P4 deletion on double cluster graphs.

use serde_json::json;

use super::{check, enforce, provenance, report, Builder, CnfB2Formula, GeneratedInstance};
use crate::classify::recognize_t;
use crate::error::Result;
use crate::graph::{structural_stats, BLUE, RED};
use crate::pattern::PatternSpec;

/// Builds the instance for `phi` with budget `9η + 2μ`.
///
/// Roles: `d_i^z` and `c_i^z` for clause `i`; `r_j^s`, `p_j^s`, `q_j^s`,
/// `t_j^y`, `f_j^y` for variable `j`. Each `c_i^z` is the `t` or `f` vertex
/// of the literal occurrence at position `z`.
pub fn gen_2p4d_b2sat(phi: &CnfB2Formula) -> Result<GeneratedInstance> {
    let (eta, mu) = (phi.num_vars(), phi.num_clauses());
    let mut b = Builder::new();
    for i in 1..=mu {
        for z in 1..=3 {
            b.vertex(format!("d_{i}^{z}"));
        }
    }
    let occ_index = phi.occurrence_index();
    let mut owner = std::collections::BTreeMap::new();
    for (i, clause) in phi.clauses().iter().enumerate() {
        for (z, &lit) in clause.iter().enumerate() {
            owner.insert((lit, occ_index[i][z] + 1), (i + 1, z + 1));
        }
    }
    for j in 1..=eta {
        for s in 1..=4 {
            b.vertex(format!("r_{j}^{s}"));
        }
        for name in ["p", "q"] {
            for s in 1..=10 {
                b.vertex(format!("{name}_{j}^{s}"));
            }
        }
        for (name, lit) in [("t", j as i32), ("f", -(j as i32))] {
            for y in 1..=2 {
                let v = b.vertex(format!("{name}_{j}^{y}"));
                let (i, z) = owner[&(lit, y)];
                b.alias(format!("c_{i}^{z}"), v);
            }
        }
    }

    for i in 1..=mu {
        for (a, c) in [(1, 2), (1, 3), (2, 3)] {
            b.edge_roles(&format!("d_{i}^{a}"), &format!("d_{i}^{c}"), BLUE);
        }
        for z in 1..=3 {
            b.edge_roles(&format!("d_{i}^{z}"), &format!("c_{i}^{z}"), RED);
        }
    }
    for j in 1..=eta {
        let r = |s: usize| format!("r_{j}^{s}");
        let p = |s: usize| format!("p_{j}^{s}");
        let q = |s: usize| format!("q_{j}^{s}");
        for a in 1..=4 {
            for c in a + 1..=4 {
                b.edge_roles(&r(a), &r(c), RED);
            }
        }
        let triangles = [
            [r(1), p(1), p(2)],
            [r(2), q(1), q(2)],
            [p(3), p(5), p(7)],
            [q(3), q(5), q(7)],
            [p(4), p(6), p(8)],
            [q(4), q(6), q(8)],
        ];
        for [x, y, z] in &triangles {
            b.edge_roles(x, y, BLUE);
            b.edge_roles(x, z, BLUE);
            b.edge_roles(y, z, BLUE);
        }
        b.edge_roles(&p(9), &format!("t_{j}^1"), BLUE);
        b.edge_roles(&p(10), &format!("t_{j}^2"), BLUE);
        b.edge_roles(&q(9), &format!("f_{j}^1"), BLUE);
        b.edge_roles(&q(10), &format!("f_{j}^2"), BLUE);
        for (x, y) in [(1, 3), (2, 4), (5, 9), (6, 10)] {
            b.edge_roles(&p(x), &p(y), RED);
            b.edge_roles(&q(x), &q(y), RED);
        }
    }

    let graph = b.graph(2)?;
    let stats = structural_stats(&graph);
    let clusters = stats.per_color_is_cluster.values().all(|&x| x);
    let in_t = recognize_t(&graph)?.accepted();
    let checks = vec![
        check("max-degree", 5, stats.max_degree, stats.max_degree == 5),
        check("double-cluster", true, clusters, clusters),
        report("outside-class-t", false, in_t, !in_t),
    ];
    enforce(&checks)?;
    Ok(GeneratedInstance {
        graph,
        spec: PatternSpec::path(4, 2),
        k: 9 * eta + 2 * mu,
        provenance: provenance(
            "2p4d-b2sat",
            vec![
                ("eta", json!(eta)),
                ("mu", json!(mu)),
                ("formula", json!(phi.clauses())),
            ],
        ),
        labels: b.into_labels(),
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_budget() {
        let phi =
            CnfB2Formula::new(3, vec![[1, -2, 3], [1, 2, -3], [-1, 2, 3], [-1, -2, -3]]).unwrap();
        let inst = gen_2p4d_b2sat(&phi).unwrap();
        assert_eq!((inst.graph.n(), inst.graph.edge_count()), (96, 132));
        assert_eq!(inst.k, 35);
        // x2 occurs first in clause 2 and then in clause 3, both at position 2
        assert_eq!(inst.vertex("c_2^2"), inst.vertex("t_2^1"));
        assert_eq!(inst.vertex("c_3^2"), inst.vertex("t_2^2"));
        assert_eq!(
            inst.graph
                .color_of(inst.vertex("d_3^2"), inst.vertex("t_2^2")),
            Some(RED)
        );
        assert!(inst.check("outside-class-t").unwrap().passed);
    }
}
