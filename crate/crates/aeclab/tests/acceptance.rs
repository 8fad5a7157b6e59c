//! Acceptance run: one line per criterion, non-zero exit if any fails.

use std::fs;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use aeclab::dsl::{parse_spec, print_spec};
use aeclab_core::constructions::{
    build_scenario, enumerate_graphs_upto, gen_edgeless, gen_example_n, graphs_up_to_order,
    independence_number, random_graph, ScenarioBody, ScenarioParams,
};
use aeclab_core::graph::{amalgam_disjoint_over, clique_number, disjoint_union, enumerate_induced_embeddings};
use aeclab_core::lab::{
    axiom_suite, check_joinability, jep_check, limit_standin_smoothness, minimal_strong_submodels,
    remark_suite, run_scenario, verify_amalgam_certificate, JepStrategy,
};
use aeclab_core::relations::{
    rel_component, rel_forbcon_clique, rel_forbcon_edge, rel_noadd, rel_type_bounded,
};
use aeclab_core::{CertificateKind, ClassSpec, Graph, SubmodelRelation, VertexSet};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took <= limit, || format!("took {:.1?}, limit {:?}", took, limit))
}

/// Both component-avoiding relations, every forbidden graph up to four
/// vertices, every host up to five, chains up to four.
fn forbcon_axioms() -> Outcome {
    let start = Instant::now();
    let hosts = graphs_up_to_order(5).unwrap();
    let forbidden: Vec<Graph> = graphs_up_to_order(4).unwrap().into_iter().filter(|g| g.order() > 0).collect();
    let mut instances = 0u64;
    for g in &forbidden {
        for rel in [
            SubmodelRelation::ForbConClique { forbidden: g.clone() },
            SubmodelRelation::ForbConComponent { forbidden: g.clone() },
        ] {
            let tally = axiom_suite(&rel, &rel.natural_class(), &hosts, 4).map_err(|e| e.to_string())?;
            ensure(tally.violations() == 0, || format!("{:?}: {:?}", rel, tally.first_violation))?;
            for (name, t) in tally.checks() {
                ensure(t.instances > 0, || format!("{} never exercised", name))?;
            }
            instances += tally.instances();
        }
    }
    within(start, Duration::from_secs(60))?;
    Ok(format!(
        "{} forbidden graphs x 2 relations, {} hosts, {} instances, 0 violations in {:.2?}",
        forbidden.len(),
        hosts.len(),
        instances,
        start.elapsed()
    ))
}

fn ap_failures() -> Outcome {
    let start = Instant::now();
    let cases = [
        ("compmax", CertificateKind::CompleteRefutation, None),
        ("compcond", CertificateKind::BoundedRefutation, Some(9)),
        ("notboth", CertificateKind::BoundedRefutation, Some(8)),
        ("notallembed", CertificateKind::BoundedRefutation, Some(15)),
    ];
    let mut parts = Vec::new();
    for (name, kind, bound) in cases {
        let s = build_scenario(name, &ScenarioParams::default()).map_err(|e| e.to_string())?;
        let ScenarioBody::Amalgam(p) = &s.body else {
            return Err(format!("{} is not an amalgamation scenario", name));
        };
        let c = run_scenario(&s).map_err(|e| e.to_string())?;
        ensure(c.kind == kind, || format!("{}: got {}", name, c.kind.as_str()))?;
        if let Some(b) = bound {
            ensure(p.bound == b, || format!("{}: bound {}", name, p.bound))?;
        }
        ensure(verify_amalgam_certificate(p, &c), || format!("{}: certificate does not re-verify", name))?;
        if name == "compmax" {
            ensure(p.class == ClassSpec::CompMax { n: 3 }, || "compmax class".into())?;
        }
        if name == "compcond" {
            ensure(p.class == ClassSpec::CompCond { k: 2, n: 2 }, || "compcond class".into())?;
        }
        parts.push(format!("{} {} at bound {}", name, c.kind.as_str(), p.bound));
    }
    within(start, Duration::from_secs(300))?;
    Ok(format!("{} in {:.2?}", parts.join(", "), start.elapsed()))
}

/// Disjoint amalgam over `base1 -> m1` and `e2`, checked under the
/// component relation.
fn disjoint_component_amalgam(m1: &Graph, base1: &[usize], m2: &Graph, base2: &[usize]) -> Result<(), String> {
    let am = amalgam_disjoint_over(m1, base1, m2, base2).map_err(|e| e.to_string())?;
    let ok = am.f1.is_induced(m1, &am.graph)
        && am.f2.is_induced(m2, &am.graph)
        && (0..base1.len()).all(|i| am.f1.apply(base1[i]) == am.f2.apply(base2[i]))
        && rel_component(am.f1.image(), &am.graph, false)
        && rel_component(am.f2.image(), &am.graph, false);
    ensure(ok, || format!("failed over m1 = {:?}, m2 = {:?}", m1, m2))
}

fn universal_class_amalgams() -> Outcome {
    let mut count = 0usize;
    // Seeded random triples: m1 and m2 extend m0 by whole components.
    for i in 0..200u64 {
        let m0 = random_graph(1 + (i % 4) as usize, 0.5, 3 * i).unwrap();
        let x1 = random_graph(1 + (i % 3) as usize, 0.4, 3 * i + 1).unwrap();
        let x2 = random_graph(1 + (i % 5) as usize, 0.6, 3 * i + 2).unwrap();
        let m1 = disjoint_union(&m0, &x1).unwrap();
        let m2 = disjoint_union(&x2, &m0).unwrap();
        let b1: Vec<usize> = m1.f1.as_slice().to_vec();
        let b2: Vec<usize> = m2.f2.as_slice().to_vec();
        ensure(rel_component(m1.f1.image(), &m1.graph, false), || "random base not related".into())?;
        ensure(rel_component(m2.f2.image(), &m2.graph, false), || "random base not related".into())?;
        disjoint_component_amalgam(&m1.graph, &b1, &m2.graph, &b2)?;
        count += 1;
    }
    // Exhaustive: every related base of every small m1, every related
    // embedding of it into every small m2 (the empty base gives joint
    // embeddings).
    let small = graphs_up_to_order(4).unwrap();
    for m1 in &small {
        for s in m1.vertices().subsets() {
            if !rel_component(s, m1, false) {
                continue;
            }
            let (m0, b1) = m1.induced_subgraph(s).unwrap();
            for m2 in &small {
                for e2 in enumerate_induced_embeddings(&m0, m2, None) {
                    if rel_component(e2.image(), m2, false) {
                        disjoint_component_amalgam(m1, &b1, m2, e2.as_slice())?;
                        count += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{} amalgamation instances (200 seeded), 0 failures", count))
}

fn closure_growth() -> Outcome {
    let g = gen_edgeless(5).unwrap();
    let rel = SubmodelRelation::NoAdd { forbidden: g.clone(), size: 2 };
    let class = ClassSpec::Forb { family: vec![g] };
    let mut sizes = Vec::new();
    for mu in 5..=10 {
        let host = gen_example_n(mu, 2).unwrap();
        let found = minimal_strong_submodels(&host, VertexSet::full(2), &rel, &class).map_err(|e| e.to_string())?;
        ensure(found.sets == vec![host.vertices()], || format!("mu = {}: {:?}", mu, found.sets))?;
        sizes.push(found.sets[0].len());
    }
    Ok(format!("minimal closure of {{0,1}} is the whole graph, sizes {:?}", sizes))
}

fn example_structure() -> Outcome {
    let mut instances = 0;
    for n in 1..=3 {
        for mu in n..=12 {
            let g = gen_example_n(mu, n).unwrap();
            let want = n + n.min(mu - n);
            ensure(independence_number(&g) == want, || format!("alpha mu = {} n = {}", mu, n))?;
            // Exhaustive: largest independent set by subsets.
            let brute = g
                .vertices()
                .subsets()
                .filter(|&s| s.iter().all(|u| s.iter().all(|v| !g.has_edge(u, v))))
                .map(|s| s.len())
                .max()
                .unwrap_or(0);
            ensure(brute == want, || format!("brute alpha mu = {} n = {}", mu, n))?;
            if mu > 2 * n {
                for s in g.vertices().subsets_of_size(2 * n + 1) {
                    let has_edge = s.iter().any(|u| s.iter().any(|v| g.has_edge(u, v)));
                    ensure(has_edge, || format!("independent {:?} in mu = {} n = {}", s, mu, n))?;
                }
            }
            instances += 1;
        }
    }
    Ok(format!("{} (mu, n) pairs match n + min(n, mu - n)", instances))
}

fn limit_standin() -> Outcome {
    for kappa in 1..=4 {
        let g = gen_edgeless(kappa + 2).unwrap();
        let m = gen_edgeless(kappa).unwrap();
        let n = gen_edgeless(kappa + 1).unwrap();
        for s in m.vertices().subsets().filter(|&s| s != m.vertices()) {
            ensure(rel_noadd(s, &n, &g, kappa), || format!("kappa = {}: proper {:?} fails", kappa, s))?;
        }
        ensure(!rel_noadd(m.vertices(), &n, &g, kappa), || format!("kappa = {}: M relates", kappa))?;
        let c = limit_standin_smoothness(&g, kappa).map_err(|e| e.to_string())?;
        ensure(c.kind == CertificateKind::Witness, || format!("kappa = {}: {}", kappa, c.kind.as_str()))?;
    }
    Ok("kappa 1..=4: every proper part relates, the whole does not".into())
}

fn homogeneity_remark() -> Outcome {
    let graphs = graphs_up_to_order(6).unwrap();
    let six = graphs.iter().filter(|g| g.order() == 6).count();
    ensure(six == 156, || format!("{} classes at order 6", six))?;
    let c = remark_suite(&graphs);
    ensure(c.kind == CertificateKind::Pass, || format!("counterexample {:?}", c.witness))?;
    ensure(c.notes.iter().any(|n| n.contains("no vertices")), || "wording note missing".into())?;
    Ok(c.notes.last().cloned().unwrap_or_default())
}

fn jep_constructions() -> Outcome {
    let small = graphs_up_to_order(4).unwrap();
    let mut count = 0usize;
    for g in small.iter().filter(|g| g.order() > 0) {
        for rel in [
            SubmodelRelation::ForbConClique { forbidden: g.clone() },
            SubmodelRelation::ForbConComponent { forbidden: g.clone() },
        ] {
            let class = rel.natural_class();
            let members: Vec<&Graph> = small.iter().filter(|m| class.member(m)).collect();
            for m in &members {
                for n in &members {
                    let c = jep_check(&class, &rel, m, n, JepStrategy::Disjoint).map_err(|e| e.to_string())?;
                    ensure(c.kind == CertificateKind::Witness, || format!("{:?} on {:?}, {:?}", rel, m, n))?;
                    count += 1;
                }
            }
        }
    }
    for k in 2..=4 {
        for size in 1..k {
            let rel = SubmodelRelation::NoAdd { forbidden: gen_edgeless(k).unwrap(), size };
            let class = rel.natural_class();
            let members: Vec<&Graph> = small.iter().filter(|m| class.member(m)).collect();
            for m in &members {
                for n in &members {
                    let c = jep_check(&class, &rel, m, n, JepStrategy::Join).map_err(|e| e.to_string())?;
                    ensure(c.kind == CertificateKind::Witness, || format!("{:?} on {:?}, {:?}", rel, m, n))?;
                    count += 1;
                }
            }
        }
    }
    let mut joins = 0;
    for n in 1..=3 {
        for m in 2 * n + 1..=2 * n + 3 {
            let c = check_joinability(&gen_edgeless(m).unwrap(), n).map_err(|e| e.to_string())?;
            ensure(c.kind == CertificateKind::Pass, || format!("joinability m = {} n = {}", m, n))?;
            joins += 1;
        }
    }
    Ok(format!("{} joint embeddings, {} joinability checks, 0 failures", count, joins))
}

fn equivalences() -> Outcome {
    let small = graphs_up_to_order(5).unwrap();
    let mut pairs = 0u64;
    for n in &small {
        for m in n.vertices().subsets() {
            let edge = rel_forbcon_edge(m, n);
            for g in &small {
                for size in 0..=3 {
                    ensure(rel_noadd(m, n, g, size) == rel_type_bounded(m, n, g, size), || {
                        format!("noadd/typeb differ: {:?} {:?} {:?} {}", m, n, g, size)
                    })?;
                    pairs += 1;
                }
                if clique_number(g) >= 2 {
                    ensure(rel_forbcon_clique(m, n, g) == edge, || {
                        format!("clique/edge differ: {:?} {:?} {:?}", m, n, g)
                    })?;
                }
            }
        }
    }
    let counts: Vec<usize> = (1..=6).map(|m| enumerate_graphs_upto(m).unwrap().len()).collect();
    ensure(counts == [1, 2, 4, 11, 34, 156], || format!("counts {:?}", counts))?;
    Ok(format!("{} relation comparisons agree, counts {:?}", pairs, counts))
}

fn determinism_and_round_trip() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_aeclab");
    let run = |args: &[&str], threads: Option<&str>| {
        let mut cmd = Command::new(bin);
        cmd.args(args).env_remove("AECLAB_THREADS");
        if let Some(t) = threads {
            cmd.env("AECLAB_THREADS", t);
        }
        cmd.output().expect("binary runs")
    };
    let seeded: [&[&str]; 3] = [
        &["axioms", "--rel", "fc_comp(G)", "--random", "--max-size", "5", "--seed", "42"],
        &["enumerate", "--random", "--seed", "42"],
        &["scenario", "notboth", "--seed", "42"],
    ];
    for args in seeded {
        let a = run(args, None);
        let b = run(args, Some("2"));
        ensure(a.status.code() == Some(0), || format!("{:?} exit {:?}", args, a.status.code()))?;
        ensure(a.stdout == b.stdout, || format!("{:?}: reports differ", args))?;
    }
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data");
    let mut files: Vec<_> = fs::read_dir(&dir).unwrap().map(|e| e.unwrap().path()).collect();
    files.sort();
    ensure(files.len() == 20, || format!("{} corpus files", files.len()))?;
    for f in &files {
        let src = fs::read_to_string(f).unwrap();
        let first = parse_spec(&src).map_err(|e| format!("{}: {}", f.display(), e))?;
        let printed = print_spec(&first);
        let second = parse_spec(&printed).map_err(|e| format!("{}: reparse: {}", f.display(), e))?;
        ensure(first.without_positions() == second.without_positions(), || format!("{} changes", f.display()))?;
        ensure(print_spec(&second) == printed, || format!("{} printing not stable", f.display()))?;
    }
    let tmp = std::env::temp_dir().join(format!("aeclab-acceptance-{}.spec", std::process::id()));
    fs::write(&tmp, "graph A { vertices: 3;\n# edges\nedges: (0,1) (1,2);\n}\n").unwrap();
    let bad = run(&["validate", tmp.to_str().unwrap()], None);
    let _ = fs::remove_file(&tmp);
    let err = String::from_utf8_lossy(&bad.stderr).into_owned();
    ensure(bad.status.code() == Some(2), || format!("malformed exit {:?}", bad.status.code()))?;
    ensure(err.contains("line 3, column 14: expected ','"), || format!("message {:?}", err))?;
    Ok(format!("{} seeded commands byte-identical, {} files round-trip, malformed input exits 2", seeded.len(), files.len()))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("forb-con relations satisfy the axioms", forbcon_axioms),
        ("amalgamation failure certificates", ap_failures),
        ("disjoint-union amalgams in the universal class", universal_class_amalgams),
        ("closure grows with the host", closure_growth),
        ("independence structure of the example graph", example_structure),
        ("finite limit stand-in", limit_standin),
        ("homogeneity remark", homogeneity_remark),
        ("joint embedding constructions", jep_constructions),
        ("equivalence oracles and class counts", equivalences),
        ("determinism and round trip", determinism_and_round_trip),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {}: {}", i + 1, name, detail),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {}: {}", i + 1, name, why);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
