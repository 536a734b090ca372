//! Acceptance suite. Runs without the libtest harness so every criterion
//! prints its PASS/FAIL line; the process fails if any criterion fails.

mod common;

use std::time::Instant;

use ecdel::classify::{
    cascade_status, colored_classes, recognize_t, scan_forbidden, spec_is_color_diverse,
    CascadeKind,
};
use ecdel::generate::{
    b2_catalog, gen_2p4d_b2sat, gen_ccd_hs, gen_ccld_vc, gen_cpd_hs, gen_cpld_b2sat,
    gen_path_chain, hs_brute, sat_b2_brute, two_subdivision, GeneratedInstance, HittingSetInstance,
    VertexCoverInstance,
};
use ecdel::graph::{ColoredGraph, DeletionSet, Edge};
use ecdel::pattern::{conflict_edges, find_one, PatternSpec};
use ecdel::solve::{
    branch_solve, branch_solve_with, brute_force, brute_force_bounded, cnd_solve, is_consistent,
    minimum_solutions, restrict_solution, solutions_of_size, solve, solve_2p4d_on_t, Algorithm,
    BranchConfig, Limits, SolveRequest,
};
use ecdel::Error;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(failures: &[String], summary: String) -> Outcome {
    let mut detail = summary;
    for f in failures.iter().take(5) {
        detail.push_str(&format!("\n    {f}"));
    }
    if failures.len() > 5 {
        detail.push_str(&format!("\n    … {} more", failures.len() - 5));
    }
    Outcome {
        pass: failures.is_empty(),
        detail,
    }
}

fn optimum(g: &ColoredGraph, spec: PatternSpec) -> usize {
    let req = SolveRequest {
        graph: g.clone(),
        spec,
        budget: None,
        algorithm: Algorithm::Branch,
        limits: Limits::default(),
    };
    solve(&req).unwrap().status.solution().unwrap().len()
}

fn oracle_equivalence() -> Outcome {
    let mut rng = common::rng(1);
    let shapes = [
        (false, 3),
        (false, 4),
        (false, 5),
        (true, 5),
        (true, 6),
        (true, 3),
        (true, 4),
    ];
    let mut failures = Vec::new();
    let (mut runs, mut cnd_runs) = (0, 0);
    for round in 0..500 {
        use rand::Rng;
        let n = rng.gen_range(3..=7);
        let c = rng.gen_range(1..=3);
        let g = common::random_graph(&mut rng, n, 12, c);
        for &(cycle, len) in &shapes {
            for colors in 1..=c {
                let spec = if cycle {
                    PatternSpec::cycle(len, colors)
                } else {
                    PatternSpec::path(len, colors)
                };
                if spec.validate().is_err() {
                    continue;
                }
                runs += 1;
                let opt = brute_force(&g, &spec).unwrap().len();
                for k in 0..=opt {
                    if branch_solve(&g, &spec, k).unwrap().is_yes() != (k == opt) {
                        failures.push(format!(
                            "graph {round}, {spec}: branch disagrees at k={k}, optimum {opt}"
                        ));
                    }
                }
                if spec_is_color_diverse(&spec).unwrap() {
                    cnd_runs += 1;
                    for k in 0..=opt {
                        if cnd_solve(&g, &spec, k).unwrap().is_yes() != (k == opt) {
                            failures.push(format!(
                                "graph {round}, {spec}: cnd disagrees at k={k}, optimum {opt}"
                            ));
                        }
                    }
                }
            }
        }
    }
    let summary =
        format!("500 graphs, {runs} (graph, spec) pairs, {cnd_runs} also run through cnd");
    outcome(&failures, summary)
}

fn path_chain_uniqueness() -> Outcome {
    let mut failures = Vec::new();
    for (c, len, d) in [(2, 4, 2), (2, 4, 3), (3, 5, 2)] {
        let g = gen_path_chain(c, len, d).unwrap();
        let n = d * (len - 1);
        let is_path = g.n() == n && g.edge_count() == n - 1 && (1..n).all(|i| g.has_edge(i - 1, i));
        // {v_i, v_{i+1}} with i ≡ 0 mod (len−1), vertices numbered from 1
        let expected: DeletionSet = (1..n)
            .filter(|i| i % (len - 1) == 0)
            .map(|i| Edge::new(i - 1, i))
            .collect();
        let spec = PatternSpec::path(len, c as u32);
        let minima = minimum_solutions(&g, &spec).unwrap();
        if !is_path || minima.len() != 1 || minima[0] != expected || expected.len() != d - 1 {
            failures.push(format!(
                "c={c} len={len} d={d}: minima {:?}, expected {expected}",
                minima.iter().map(|s| s.to_string()).collect::<Vec<_>>()
            ));
        }
    }
    outcome(&failures, "3 chains checked by exhaustive search".into())
}

fn cpld_pipeline() -> Outcome {
    let catalog = b2_catalog(3);
    let cfg = BranchConfig {
        node_cap: 5_000_000,
        ..BranchConfig::default()
    };
    let mut failures = Vec::new();
    let (mut sat, mut caps) = (0, 0);
    let mut min_girth = usize::MAX;
    for (idx, phi) in catalog.iter().enumerate() {
        let inst = gen_cpld_b2sat(phi, 4, 2, 1).unwrap();
        let stats = inst.graph.stats();
        let girth = stats.girth.unwrap_or(usize::MAX);
        min_girth = min_girth.min(girth);
        if stats.max_degree != 3 || girth < 8 || inst.k != 20 {
            failures.push(format!(
                "formula {idx}: max degree {}, girth {girth}, k {}",
                stats.max_degree, inst.k
            ));
        }
        let want = sat_b2_brute(phi).unwrap();
        sat += usize::from(want);
        match branch_solve_with(&inst.graph, &inst.spec, inst.k, &cfg) {
            Ok((d, _)) if d.is_yes() == want => {}
            Ok(_) => failures.push(format!(
                "formula {idx} ({phi}): satisfiable={want} but solver disagrees"
            )),
            Err(Error::ResourceLimit(msg)) => {
                caps += 1;
                failures.push(format!("formula {idx}: cap hit: {msg}"));
            }
            Err(e) => failures.push(format!("formula {idx}: {e}")),
        }
    }
    let summary = format!(
        "{} formulas ({sat} satisfiable), k = 20, smallest girth {min_girth}, cap hits {caps}",
        catalog.len()
    );
    outcome(&failures, summary)
}

/// Every family of at most three distinct nonempty subsets of `1..=eta`
/// whose union is the universe.
fn hs_families(eta: usize) -> Vec<HittingSetInstance> {
    let subsets: Vec<Vec<usize>> = (1u32..1 << eta)
        .map(|m| (1..=eta).filter(|i| m >> (i - 1) & 1 == 1).collect())
        .collect();
    let s = subsets.len();
    let mut out = Vec::new();
    let mut push = |pick: &[usize]| {
        let sets: Vec<_> = pick
            .iter()
            .map(|&i| subsets[i].iter().copied().collect())
            .collect();
        if let Ok(inst) = HittingSetInstance::new(eta, sets, 0) {
            out.push(inst);
        }
    };
    for a in 0..s {
        push(&[a]);
        for b in a + 1..s {
            push(&[a, b]);
            for c in b + 1..s {
                push(&[a, b, c]);
            }
        }
    }
    out
}

fn hs_instances() -> Vec<(HittingSetInstance, usize)> {
    (1..=3)
        .flat_map(hs_families)
        .map(|mut inst| {
            let opt = hs_brute(&inst).unwrap();
            inst.k = opt;
            (inst, opt)
        })
        .collect()
}

fn hs_pipelines() -> Outcome {
    let mut failures = Vec::new();
    let (mut count, mut strict) = (0, 0);
    for (inst, opt) in hs_instances() {
        count += 1;
        let name = format!("{:?}", inst.sets);
        let mu = inst.num_sets();
        let paths = gen_cpd_hs(&inst).unwrap();
        let p_opt = optimum(&paths.graph, paths.spec);
        let census = ecdel::pattern::enumerate(&paths.graph, &paths.spec)
            .unwrap()
            .len();
        let status = cascade_status(&paths.graph, &paths.spec).unwrap().status;
        strict += usize::from(status == CascadeKind::StrictlyNonCascading);
        if p_opt != opt || census != mu || status == CascadeKind::Cascading {
            failures.push(format!(
                "{name}: paths optimum {p_opt} vs {opt}, census {census}, {status:?}"
            ));
        }
        // the cycle instance depends on k, so try every budget up to the optimum
        for k in 0..=opt {
            let mut at_k = inst.clone();
            at_k.k = k;
            let cycles = gen_ccd_hs(&at_k).unwrap();
            let feasible = branch_solve(&cycles.graph, &cycles.spec, k)
                .unwrap()
                .is_yes();
            let census = ecdel::pattern::enumerate(&cycles.graph, &cycles.spec)
                .unwrap()
                .len();
            let status = cascade_status(&cycles.graph, &cycles.spec).unwrap().status;
            if feasible != (k == opt) || census != mu * (k + 1) || status == CascadeKind::Cascading
            {
                failures.push(format!(
                    "{name}: cycles at k={k}: feasible {feasible}, census {census}, {status:?}"
                ));
            }
        }
    }
    let summary = format!(
        "{count} families with η ≤ 3 and at most 3 sets; {strict} path instances strictly non-cascading, the rest non-cascading"
    );
    outcome(&failures, summary)
}

fn class_t_suite() -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for n in 1..=5usize {
        let pairs = n * (n - 1) / 2;
        for code in 0..3u64.pow(pairs as u32) {
            let g = common::bicolored_from_code(n, code);
            checked += 1;
            let a = recognize_t(&g).unwrap().accepted();
            let b = scan_forbidden(&g).unwrap().is_none();
            if a != b {
                failures.push(format!("n={n} code={code}: structural {a}, scan {b}"));
            }
        }
    }
    let mut rng = common::rng(5);
    for _ in 0..10_000 {
        use rand::Rng;
        let g = common::bicolored_from_code(6, rng.gen_range(0..3u64.pow(15)));
        checked += 1;
        if recognize_t(&g).unwrap().accepted() != scan_forbidden(&g).unwrap().is_none() {
            failures.push(format!(
                "sampled n=6 graph disagrees:\n{}",
                ecdel::graph::write_graph(&g)
            ));
        }
    }
    let p4 = PatternSpec::path(4, 2);
    for i in 0..200 {
        let g = common::random_t_graph(&mut rng, 12, 24);
        if scan_forbidden(&g).unwrap().is_some() {
            failures.push(format!("sample {i} is not in class T"));
            continue;
        }
        let fast = solve_2p4d_on_t(&g).unwrap();
        let slow = brute_force_bounded(&g, &p4, 24).unwrap();
        let rest = g.remove_edges(&fast).unwrap();
        if fast.len() != slow.len() || find_one(&rest, &p4).unwrap().is_some() {
            failures.push(format!(
                "sample {i}: class-T solver {} vs brute force {}",
                fast.len(),
                slow.len()
            ));
        }
    }
    let summary = format!(
        "{checked} bicolored graphs (all with n ≤ 5, 10000 sampled with n = 6); 200 random class-T graphs with n ≤ 12"
    );
    outcome(&failures, summary)
}

fn consistent_optimum_exists(g: &ColoredGraph, spec: &PatternSpec, size: usize) -> bool {
    let p = colored_classes(g);
    solutions_of_size(g, spec, size)
        .iter()
        .any(|s| is_consistent(g, &p, s))
}

fn consistency_suite() -> Outcome {
    let mut failures = Vec::new();
    let g = common::alt_c4();
    let c4 = PatternSpec::cycle(4, 2);
    let best = brute_force(&g, &c4).unwrap().len();
    if best != 1 {
        failures.push(format!("alternating C4 optimum {best}, expected 1"));
    }
    if consistent_optimum_exists(&g, &c4, 1) {
        failures.push("alternating C4 has a consistent solution of size 1".into());
    }
    if !matches!(cnd_solve(&g, &c4, 1), Err(Error::SpecNotColorDiverse(_))) {
        failures.push("bundle search accepted the 2-colored C4".into());
    }
    let p4 = PatternSpec::path(4, 2);
    let mut rng = common::rng(6);
    for i in 0..100 {
        use rand::Rng;
        let h = if i < 50 {
            common::random_t_graph(&mut rng, 8, 14)
        } else {
            let n = rng.gen_range(3..=7);
            common::random_graph(&mut rng, n, 12, 2)
        };
        let opt = brute_force(&h, &p4).unwrap().len();
        if !consistent_optimum_exists(&h, &p4, opt) {
            failures.push(format!("sample {i}: no consistent optimum of size {opt}"));
        }
    }
    outcome(
        &failures,
        "alternating C4: optimum 1, no consistent size-1 solution, bundle search refuses; 50 class-T and 50 random graphs".into(),
    )
}

fn double_cluster_suite() -> Outcome {
    let catalog = b2_catalog(3);
    let mut failures = Vec::new();
    for (idx, phi) in catalog.iter().enumerate() {
        let inst = gen_2p4d_b2sat(phi).unwrap();
        let s = inst.graph.stats();
        if s.max_degree != 5 || !s.per_color_is_cluster.values().all(|&b| b) {
            failures.push(format!(
                "formula {idx}: max degree {}, clusters {:?}",
                s.max_degree, s.per_color_is_cluster
            ));
        }
    }
    let sat = catalog.iter().find(|f| sat_b2_brute(f).unwrap()).unwrap();
    let unsat = catalog.iter().find(|f| !sat_b2_brute(f).unwrap()).unwrap();
    let cfg = BranchConfig {
        node_cap: 20_000_000,
        ..BranchConfig::default()
    };
    let mut detail = Vec::new();
    for (phi, want) in [(sat, true), (unsat, false)] {
        let inst = gen_2p4d_b2sat(phi).unwrap();
        let started = Instant::now();
        match branch_solve_with(&inst.graph, &inst.spec, inst.k, &cfg) {
            Ok((d, stats)) => {
                detail.push(format!(
                    "{} at k={}: {} nodes, {:.1}s",
                    if want { "satisfiable" } else { "unsatisfiable" },
                    inst.k,
                    stats.nodes_explored,
                    started.elapsed().as_secs_f64()
                ));
                if d.is_yes() != want {
                    failures.push(format!(
                        "{phi}: satisfiable={want}, solver says {}",
                        d.is_yes()
                    ));
                }
            }
            Err(e) => failures.push(format!("{phi}: {e}")),
        }
    }
    let summary = format!(
        "{} outputs checked for degree and clusters; {}",
        catalog.len(),
        detail.join("; ")
    );
    outcome(&failures, summary)
}

/// Generated instances used for the restriction check.
fn generated_suite() -> Vec<GeneratedInstance> {
    let mut out: Vec<GeneratedInstance> = hs_instances()
        .into_iter()
        .flat_map(|(inst, _)| {
            let small = inst.universe <= 2;
            let mut v = vec![gen_cpd_hs(&inst).unwrap()];
            if small {
                v.push(gen_ccd_hs(&inst).unwrap());
            }
            v
        })
        .collect();
    for text in [
        "p ecg 3 2 1\ne 1 2 1\ne 2 3 1\n",
        "p ecg 4 3 1\ne 1 2 1\ne 1 3 1\ne 1 4 1\n",
    ] {
        let g: ColoredGraph = text.parse().unwrap();
        let (sub, parts) = two_subdivision(&g);
        let h = VertexCoverInstance::new(sub, 0, Some(parts)).unwrap();
        for (len, c) in [(3, 3), (4, 3), (5, 4)] {
            out.push(gen_ccld_vc(&h, len, c).unwrap());
        }
    }
    out
}

fn restriction_suite() -> Outcome {
    let mut failures = Vec::new();
    let (mut instances, mut injections) = (0, 0);
    for inst in generated_suite() {
        let (g, spec) = (&inst.graph, inst.spec);
        if cascade_status(g, &spec).unwrap().is_cascading() {
            continue;
        }
        instances += 1;
        let req = SolveRequest {
            graph: g.clone(),
            spec,
            budget: None,
            algorithm: Algorithm::Branch,
            limits: Limits::default(),
        };
        let base = solve(&req).unwrap().status.solution().unwrap().clone();
        let conflict = conflict_edges(g, &spec).unwrap();
        for e in g
            .edges()
            .iter()
            .map(|e| e.edge())
            .filter(|e| !conflict.contains(e))
            .take(5)
        {
            injections += 1;
            let mut s = base.clone();
            s.insert(e);
            match restrict_solution(g, &spec, &s) {
                Ok(r) => {
                    let rest = g.remove_edges(&r).unwrap();
                    if r.contains(&e) || find_one(&rest, &spec).unwrap().is_some() {
                        failures.push(format!(
                            "{}: injecting {e} breaks restriction",
                            inst.provenance.reduction
                        ));
                    }
                }
                Err(err) => failures.push(format!("{}: {err}", inst.provenance.reduction)),
            }
        }
    }
    outcome(
        &failures,
        format!("{instances} non-cascading generated instances, {injections} conflict-free edges injected"),
    )
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("1 oracle equivalence", oracle_equivalence),
        ("2 periodic path chains", path_chain_uniqueness),
        ("3 formula to degree-3 path instances", cpld_pipeline),
        ("4 hitting set to paths and cycles", hs_pipelines),
        ("5 class T recognition and solving", class_t_suite),
        ("6 consistent solutions", consistency_suite),
        (
            "7 formula to double cluster instances",
            double_cluster_suite,
        ),
        ("8 restriction to conflict edges", restriction_suite),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let started = Instant::now();
        let o = run();
        let verdict = if o.pass { "PASS" } else { "FAIL" };
        println!(
            "{verdict} criterion {name} ({:.1}s): {}",
            started.elapsed().as_secs_f64(),
            o.detail
        );
        failed += usize::from(!o.pass);
    }
    println!("acceptance: {} of 8 criteria passed", 8 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
