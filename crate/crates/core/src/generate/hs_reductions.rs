//! Hitting set to induced 3-colored path deletion and 4-colored cycle
//! deletion.

use serde_json::json;

use super::{check, enforce, provenance, Builder, GeneratedInstance, HittingSetInstance};
use crate::classify::{cascade_status, CascadeKind};
use crate::error::{Error, Result};
use crate::graph::{BLUE, RED, YELLOW};
use crate::pattern::{enumerate, PatternSpec};

fn build_paths(inst: &HittingSetInstance) -> Result<Builder> {
    let eta = inst.universe;
    if eta == 0 {
        return Err(Error::MalformedInstance("the universe is empty".into()));
    }
    let sets = &inst.sets;
    let mut b = Builder::new();
    for (j, set) in sets.iter().enumerate() {
        let j = j + 1;
        b.vertex(format!("v^{j}"));
        for i in 1..=eta {
            b.vertex(format!("u_{i}^{j}"));
        }
        for i in (1..=eta).filter(|i| !set.contains(i)) {
            b.vertex(format!("w_{i}^{j}"));
            b.vertex(format!("w~_{i}^{j}"));
        }
    }
    for i in 1..=eta {
        b.vertex(format!("w_{i}"));
        b.vertex(format!("w~_{i}"));
        b.edge_roles(&format!("w_{i}"), &format!("w~_{i}"), BLUE);
    }
    for (j, set) in sets.iter().enumerate() {
        let j = j + 1;
        b.edge_roles(&format!("v^{j}"), &format!("u_1^{j}"), YELLOW);
        for i in 1..=eta {
            let (w, wt) = if set.contains(&i) {
                (format!("w_{i}"), format!("w~_{i}"))
            } else {
                let pair = (format!("w_{i}^{j}"), format!("w~_{i}^{j}"));
                b.edge_roles(&pair.0, &pair.1, RED);
                pair
            };
            b.edge_roles(&format!("u_{i}^{j}"), &w, RED);
            if i < eta {
                b.edge_roles(&wt, &format!("u_{}^{j}", i + 1), RED);
            }
        }
    }
    // the head v^p, u_1^p of each subset gadget sees every vertex of every
    // other subset gadget, so no pattern leaves its own gadget
    let members: Vec<Vec<String>> = sets
        .iter()
        .enumerate()
        .map(|(j, set)| {
            let j = j + 1;
            let mut m = vec![format!("v^{j}")];
            for i in 1..=eta {
                m.push(format!("u_{i}^{j}"));
                if !set.contains(&i) {
                    m.push(format!("w_{i}^{j}"));
                    m.push(format!("w~_{i}^{j}"));
                }
            }
            m
        })
        .collect();
    for p in 1..=sets.len() {
        for q in (1..=sets.len()).filter(|&q| q != p) {
            for head in [format!("v^{p}"), format!("u_1^{p}")] {
                for x in &members[q - 1] {
                    b.edge_roles(&head, x, RED);
                }
            }
        }
    }
    // fixed edges between subset gadgets sharing an element
    for p in 1..=sets.len() {
        for q in p + 1..=sets.len() {
            for &i in sets[p - 1].intersection(&sets[q - 1]) {
                for x in [i, i + 1].into_iter().filter(|&x| x <= eta) {
                    b.edge_roles(&format!("u_{x}^{p}"), &format!("u_{x}^{q}"), RED);
                    b.edge_roles(&format!("v^{p}"), &format!("u_{x}^{q}"), RED);
                    b.edge_roles(&format!("v^{q}"), &format!("u_{x}^{p}"), RED);
                    b.edge_roles(&format!("u_1^{p}"), &format!("u_{x}^{q}"), RED);
                    b.edge_roles(&format!("u_1^{q}"), &format!("u_{x}^{p}"), RED);
                }
            }
        }
    }
    Ok(b)
}

fn family_json(inst: &HittingSetInstance) -> serde_json::Value {
    json!(inst.sets)
}

/// Builds the path instance: pattern length `1 + 3η`, three colors, budget
/// `k`. Each set `F_j` yields exactly one induced pattern, running from
/// `v^j` through the blue edge `w_i–w~_i` of every `i ∈ F_j`.
///
/// Roles: `v^j`, `u_i^j`, `w_i^j`, `w~_i^j` in subset gadgets; `w_i`,
/// `w~_i` in element gadgets.
pub fn gen_cpd_hs(inst: &HittingSetInstance) -> Result<GeneratedInstance> {
    let b = build_paths(inst)?;
    let spec = PatternSpec::path(1 + 3 * inst.universe, 3);
    let graph = b.graph(3)?;
    let census = enumerate(&graph, &spec)?.len();
    let status = cascade_status(&graph, &spec)?.status;
    let mu = inst.num_sets();
    let checks = vec![
        check("census", mu, census, census == mu),
        check(
            "non-cascading",
            "not cascading",
            format!("{status:?}"),
            status != CascadeKind::Cascading,
        ),
    ];
    enforce(&checks)?;
    Ok(GeneratedInstance {
        graph,
        spec,
        k: inst.k,
        provenance: provenance(
            "cpd-hs",
            vec![
                ("eta", json!(inst.universe)),
                ("mu", json!(mu)),
                ("sets", family_json(inst)),
            ],
        ),
        labels: b.into_labels(),
        checks,
    })
}

/// Builds the cycle instance: the path instance plus `k + 1` vertices `q_r`
/// joined with color 4 to every `v^j` and to every last path vertex
/// (`w~_η` and the `w~_η^j`). Pattern: cycle of length `2 + 3η` with four
/// colors, budget `k`.
pub fn gen_ccd_hs(inst: &HittingSetInstance) -> Result<GeneratedInstance> {
    let mut b = build_paths(inst)?;
    let eta = inst.universe;
    let mu = inst.num_sets();
    let mut ends: Vec<usize> = (1..=mu).map(|j| b.id(&format!("v^{j}"))).collect();
    ends.push(b.id(&format!("w~_{eta}")));
    for (j, set) in inst.sets.iter().enumerate() {
        if !set.contains(&eta) {
            ends.push(b.id(&format!("w~_{eta}^{}", j + 1)));
        }
    }
    for r in 1..=inst.k + 1 {
        let q = b.vertex(format!("q_{r}"));
        for &x in &ends {
            b.edge(q, x, 4);
        }
    }
    let spec = PatternSpec::cycle(2 + 3 * eta, 4);
    let graph = b.graph(4)?;
    let census = enumerate(&graph, &spec)?.len();
    let status = cascade_status(&graph, &spec)?.status;
    let expected = mu * (inst.k + 1);
    let checks = vec![
        check("census", expected, census, census == expected),
        check(
            "non-cascading",
            "not cascading",
            format!("{status:?}"),
            status != CascadeKind::Cascading,
        ),
    ];
    enforce(&checks)?;
    Ok(GeneratedInstance {
        graph,
        spec,
        k: inst.k,
        provenance: provenance(
            "ccd-hs",
            vec![
                ("eta", json!(eta)),
                ("mu", json!(mu)),
                ("sets", family_json(inst)),
                ("q", json!(inst.k + 1)),
            ],
        ),
        labels: b.into_labels(),
        checks,
    })
}
