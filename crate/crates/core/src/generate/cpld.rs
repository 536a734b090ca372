//! Formula to induced c-colored path deletion, with max degree three.

use serde_json::json;

use super::chain::chain_color;
use super::{
    check, enforce, girth_text, provenance, report, Builder, CnfB2Formula, GeneratedInstance,
};
use crate::error::{Error, Result};
use crate::graph::{structural_stats, Color};
use crate::pattern::PatternSpec;

/// Color of the `e`-th edge (1-based) of the `t_i`–`W_i`–`f_i` connector:
/// 2, 3, …, c, then c repeated.
fn connector_color(e: usize, c: usize) -> Color {
    (e + 1).min(c) as Color
}

/// Builds the instance for `phi` with pattern length `len`, `c` colors and
/// `d` disjoint patterns per variable chain. The budget is `4dη + 2μ`.
///
/// Roles: `u_j` and `u_j^{p,s}` in clause gadgets, `t_i`, `f_i`,
/// `t_i^{q,s}`, `f_i^{q,s}` and `w_i^e` in variable gadgets; all 1-based.
pub fn gen_cpld_b2sat(
    phi: &CnfB2Formula,
    len: usize,
    c: usize,
    d: usize,
) -> Result<GeneratedInstance> {
    if len < 4 || c < 2 || c > len - 2 || d < 1 {
        return Err(Error::InvalidParams(format!(
            "need len ≥ 4, 2 ≤ c ≤ len−2 and d ≥ 1, got len={len}, c={c}, d={d}"
        )));
    }
    let (eta, mu) = (phi.num_vars(), phi.num_clauses());
    let z = d * (len - 1) + 1;
    let mut b = Builder::new();

    for j in 1..=mu {
        let center = b.vertex(format!("u_{j}"));
        for p in 1..=3 {
            b.alias(format!("u_{j}^{{{p},1}}"), center);
            for s in 3..len {
                b.vertex(format!("u_{j}^{{{p},{s}}}"));
            }
        }
    }

    // clause position of each literal occurrence
    let occ_index = phi.occurrence_index();
    let mut owner = std::collections::BTreeMap::new();
    for (j, clause) in phi.clauses().iter().enumerate() {
        for (p, &lit) in clause.iter().enumerate() {
            owner.insert((lit, occ_index[j][p] + 1), (j + 1, p + 1));
        }
    }

    for i in 1..=eta {
        let t = b.vertex(format!("t_{i}"));
        let f = b.vertex(format!("f_{i}"));
        for (name, root, lit) in [("t", t, i as i32), ("f", f, -(i as i32))] {
            for q in 1..=2 {
                b.alias(format!("{name}_{i}^{{{q},1}}"), root);
                for s in 2..=z {
                    let v = b.vertex(format!("{name}_{i}^{{{q},{s}}}"));
                    if s == z {
                        let (j, p) = owner[&(lit, q)];
                        b.alias(format!("u_{j}^{{{p},2}}"), v);
                    }
                }
            }
        }
        for e in 1..=len - 4 {
            b.vertex(format!("w_{i}^{e}"));
        }
    }

    for j in 1..=mu {
        for p in 1..=3 {
            for s in 1..len - 1 {
                let color = if s < c { s } else { c } as Color;
                b.edge_roles(
                    &format!("u_{j}^{{{p},{s}}}"),
                    &format!("u_{j}^{{{p},{}}}", s + 1),
                    color,
                );
            }
        }
    }
    for i in 1..=eta {
        for name in ["t", "f"] {
            for q in 1..=2 {
                for s in 1..z {
                    let color = chain_color(s, c, len);
                    b.edge_roles(
                        &format!("{name}_{i}^{{{q},{s}}}"),
                        &format!("{name}_{i}^{{{q},{}}}", s + 1),
                        color,
                    );
                }
            }
        }
        let mut connector = vec![format!("t_{i}")];
        connector.extend((1..=len - 4).map(|e| format!("w_{i}^{e}")));
        connector.push(format!("f_{i}"));
        for (e, pair) in connector.windows(2).enumerate() {
            b.edge_roles(&pair[0], &pair[1], connector_color(e + 1, c));
        }
    }

    let graph = b.graph(c as Color)?;
    let stats = structural_stats(&graph);
    let cycle_bound = 2 * d * (len - 1) + 2;
    let girth_ok = |bound: usize| stats.girth.is_none_or(|g| g >= bound);
    let checks = vec![
        check("max-degree", 3, stats.max_degree, stats.max_degree == 3),
        check(
            "girth",
            format!(">= {cycle_bound}"),
            girth_text(stats.girth),
            girth_ok(cycle_bound),
        ),
        report(
            "girth-2dl",
            format!(">= {}", 2 * d * len),
            girth_text(stats.girth),
            girth_ok(2 * d * len),
        ),
    ];
    enforce(&checks)?;
    let connector: Vec<Color> = (1..=len - 3).map(|e| connector_color(e, c)).collect();
    Ok(GeneratedInstance {
        graph,
        spec: PatternSpec::path(len, c as u32),
        k: 4 * d * eta + 2 * mu,
        provenance: provenance(
            "cpld-b2sat",
            vec![
                ("eta", json!(eta)),
                ("mu", json!(mu)),
                ("len", json!(len)),
                ("c", json!(c)),
                ("d", json!(d)),
                ("connector_colors", json!(connector)),
                ("formula", json!(phi.clauses())),
            ],
        ),
        labels: b.into_labels(),
        checks,
    })
}
