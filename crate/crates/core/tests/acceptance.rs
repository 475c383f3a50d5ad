//! Acceptance criteria AC1 to AC9. Prints one PASS/FAIL line per criterion
//! and exits nonzero if any fails.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{corpus, k5, k5_pendant, relabel, straight_line_cert, union};
use crit_core::critical::{
    assemble, crit_set, eliminate_thick, extract_critical, lift_drawing, Copies, CrossingOracle, DeletionOrder,
    GadgetStyle,
};
use crit_core::drawing::validate;
use crit_core::family::{
    build_family, canonical_drawing, deleted_edge_drawing, verify_structure, witness_paths, FamilyInstance,
};
use crit_core::graph::{is_induced_nonseparating_cycle, EdgeId, SpecialGraph, VertexId};
use crit_core::solver::{solve_exact, SolveLimits, SolveOutcome};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;
type Criterion = (&'static str, &'static str, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn timed<T>(limit: Duration, what: &str, f: impl FnOnce() -> Result<T, String>) -> Result<T, String> {
    let start = Instant::now();
    let out = f()?;
    let took = start.elapsed();
    ensure!(took <= limit, "{what} took {took:?}, limit {limit:?}");
    Ok(out)
}

fn pair_set(xs: &[EdgeId], ys: &[EdgeId]) -> BTreeSet<(EdgeId, EdgeId)> {
    xs.iter()
        .flat_map(|&x| ys.iter().filter(move |&&y| y != x).map(move |&y| (x.min(y), x.max(y))))
        .collect()
}

fn family(d: i64) -> Result<FamilyInstance, String> {
    build_family(d).map_err(|e| e.to_string())
}

fn ac1() -> Check {
    for d in [1i64, 2, 5, 10] {
        timed(Duration::from_secs(1), &format!("d={d}"), || {
            let inst = family(d)?;
            let g = inst.special.graph();
            let r = &inst.roles;
            let du = d as usize;
            ensure!(g.vertex_count() == 45 + 12 * du, "d={d}: |V| = {}", g.vertex_count());
            ensure!(g.edge_count() == 67 + 20 * du, "d={d}: |E| = {}", g.edge_count());
            ensure!(g.degree(r.v) == 3 * du + 2, "d={d}: deg(v) = {}", g.degree(r.v));
            ensure!(g.vertices().filter(|&x| x != r.v).all(|x| g.degree(x) <= 4), "d={d}: degree above 4");
            let c: Vec<usize> = r.cycles_c.iter().map(|c| c.len()).collect();
            ensure!(c[0] == 28 && c[du] == 24 && c[1..du].iter().all(|&l| l == 7), "d={d}: C lengths {c:?}");
            ensure!(r.cycles_k.iter().all(|k| k.len() == 7), "d={d}: K lengths");
            for cyc in r.cycles_c.iter().chain(&r.cycles_k) {
                ensure!(
                    is_induced_nonseparating_cycle(g, cyc).map_err(|e| e.to_string())?,
                    "d={d}: cycle at {:?} not induced nonseparating",
                    cyc.vertices.first()
                );
            }
            let rep = verify_structure(&inst);
            ensure!(rep.valid, "d={d}: {:?}", rep.violations);
            Ok(())
        })?;
    }
    Ok("d in {1,2,5,10}".into())
}

fn ac2() -> Check {
    for d in 1..=10 {
        timed(Duration::from_secs(1), &format!("d={d}"), || {
            let inst = family(d)?;
            let cert = canonical_drawing(&inst).map_err(|e| e.to_string())?;
            let rep = validate(&cert);
            ensure!(rep.valid, "d={d}: {:?}", rep.violations);
            ensure!(rep.crossing_count == 171, "d={d}: {} crossings", rep.crossing_count);
            ensure!(
                cert.crossing_pairs() == pair_set(&inst.roles.m_a, &inst.roles.m_a),
                "d={d}: crossing pairs differ from the a-edge pairs"
            );
            Ok(())
        })?;
    }
    Ok("171 crossings, d = 1..10".into())
}

fn ac3() -> Check {
    let inst = family(5)?;
    let r = &inst.roles;
    let m = r.m_edges();
    for k in 1..=5usize {
        timed(Duration::from_secs(2), &format!("k={k}"), || {
            let cert = deleted_edge_drawing(&inst, k as i64).map_err(|e| e.to_string())?;
            let rep = validate(&cert);
            ensure!(rep.valid, "k={k}: {:?}", rep.violations);
            let got = cert.crossing_pairs();
            let ab = pair_set(&r.m_a, &r.m_b);
            let bb = pair_set(&r.m_b, &r.m_b);
            let ladder = pair_set(&r.matching[k - 1], &m);
            let parts = (
                got.intersection(&ab).count(),
                got.intersection(&bb).count(),
                got.intersection(&ladder).count(),
            );
            ensure!(parts == (57, 3, 110), "k={k}: decomposition {parts:?}");
            ensure!(rep.crossing_count == 170 && got.len() == 170, "k={k}: {} crossings", rep.crossing_count);
            Ok(())
        })?;
    }
    Ok("d=5, k=1..5: 57+3+110".into())
}

fn ac4() -> Check {
    for d in [1i64, 2, 5, 10] {
        timed(Duration::from_secs(1), &format!("d={d}"), || {
            let inst = family(d)?;
            let g = inst.special.graph();
            let matching: BTreeSet<EdgeId> = inst.roles.matching.iter().flatten().copied().collect();
            let mut sets = Vec::new();
            for p in witness_paths(&inst) {
                let es: BTreeSet<EdgeId> = p.edges_in(g).map_err(|e| e.to_string())?.into_iter().collect();
                let thin: Vec<&EdgeId> = es.iter().filter(|e| !inst.special.is_thick(**e)).collect();
                ensure!(thin.len() == d as usize, "d={d}: path with {} thin edges", thin.len());
                ensure!(thin.iter().all(|e| matching.contains(e)), "d={d}: thin edge outside the matching");
                sets.push(es);
            }
            ensure!(sets.len() == 5, "d={d}: {} paths", sets.len());
            for i in 0..5 {
                for j in i + 1..5 {
                    ensure!(
                        sets[i].intersection(&sets[j]).all(|e| inst.special.is_thick(*e)),
                        "d={d}: P{} and P{} share a thin edge",
                        i + 1,
                        j + 1
                    );
                }
            }
            Ok(())
        })?;
    }
    Ok("five paths, d thin edges each".into())
}

fn ac5() -> Check {
    let wanted = ["K5", "K3,3", "K6", "K2,3", "Petersen", "K5 all thick"];
    let cases: Vec<_> = corpus().into_iter().filter(|c| wanted.contains(&c.name)).collect();
    ensure!(cases.len() == wanted.len(), "corpus is missing graphs");
    timed(Duration::from_secs(300), "solver ground truth", || {
        let mut seen = Vec::new();
        for case in &cases {
            let out = solve_exact(&case.sg, &SolveLimits::default());
            match case.cr {
                None => ensure!(out == SolveOutcome::Infinite, "{}: {:?}", case.name, out.value()),
                Some(n) => {
                    ensure!(out.exact() == Some(n), "{}: {:?}, expected {n}", case.name, out.value());
                    let rep = validate(out.witness().unwrap());
                    ensure!(rep.valid && rep.crossing_count == n, "{}: witness does not validate", case.name);
                }
            }
            seen.push(format!("{}={}", case.name, out.value()));
        }
        Ok(seen.join(", "))
    })
}

fn ac6() -> Check {
    timed(Duration::from_secs(600), "extraction suite", || {
        let o = CrossingOracle::exact(SolveLimits::default());
        let err = |e: crit_core::critical::CriticalError| e.to_string();
        let h = extract_critical(&SpecialGraph::plain(k5_pendant()), 1, &o, DeletionOrder::Ascending).map_err(err)?;
        ensure!(h == SpecialGraph::plain(k5()), "K5+pendant did not reduce to K5");
        let two = SpecialGraph::plain(union(&k5(), &k5()));
        ensure!(
            extract_critical(&two, 2, &o, DeletionOrder::Ascending).map_err(err)? == two,
            "K5+K5 is not a fixed point"
        );
        let mut runs = 0;
        for case in corpus() {
            for k in 1..=2 {
                if !case.cr.is_some_and(|c| c >= k) {
                    continue;
                }
                let crit = crit_set(&case.sg, k, &o).map_err(err)?;
                for seed in 0..10 {
                    let h = extract_critical(&case.sg, k, &o, DeletionOrder::Shuffled(seed)).map_err(err)?;
                    let kept: BTreeSet<EdgeId> = h.graph().edge_ids().collect();
                    ensure!(crit.is_subset(&kept), "{} k={k} seed={seed}: lost a critical edge", case.name);
                    runs += 1;
                }
            }
        }
        Ok(format!("{runs} shuffled extractions"))
    })
}

fn ac7() -> Check {
    timed(Duration::from_secs(600), "elimination suite", || {
        let mut checked = Vec::new();
        for case in corpus() {
            let Some(c) = case.cr else { continue };
            if case.sg.thick().is_empty() {
                continue;
            }
            for style in [GadgetStyle::Parallel, GadgetStyle::K2t] {
                let g = eliminate_thick(&case.sg, c + 1, style).map_err(|e| e.to_string())?;
                let out = solve_exact(&SpecialGraph::plain(g), &SolveLimits::default());
                ensure!(out.exact() == Some(c), "{} {style}: {:?}, expected {c}", case.name, out.value());
            }
            checked.push(format!("{}={c}", case.name));
        }
        ensure!(!checked.is_empty(), "no thick corpus graphs");
        Ok(checked.join(", "))
    })
}

fn ac8() -> Check {
    let inst = family(2)?;
    let cert = canonical_drawing(&inst).map_err(|e| e.to_string())?;
    timed(Duration::from_secs(10), "lift", || {
        let lifted = lift_drawing(&cert, 172, GadgetStyle::K2t).map_err(|e| e.to_string())?;
        let rep = validate(&lifted);
        ensure!(rep.valid, "lifted cert: {:?}", rep.violations.first());
        ensure!(rep.crossing_count == 171, "lifted cert has {}", rep.crossing_count);
        Ok(())
    })?;
    let b = assemble(173, 2, Copies::Auto).map_err(|e| e.to_string())?;
    let mut total = 0;
    for c in &b.components {
        let rep = validate(&c.cert);
        ensure!(rep.valid, "{} does not validate", c.name);
        total += rep.crossing_count;
    }
    ensure!(total == 173, "components sum to {total}");
    ensure!(b.copies == 1 && b.k5_copies() == 2, "t={}, K5 copies {}", b.copies, b.k5_copies());
    Ok("lift 171, bundle 173".into())
}

fn ac9() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut compared = 0;
    for case in corpus() {
        let base = solve_exact(&case.sg, &SolveLimits::default()).value();
        let n = case.sg.graph().vertex_count();
        for _ in 0..5 {
            let mut perm: Vec<u32> = (0..n as u32).collect();
            perm.shuffle(&mut rng);
            let moved = solve_exact(&relabel(&case.sg, &perm), &SolveLimits::default()).value();
            ensure!(moved == base, "{}: {moved} after relabeling, {base} before", case.name);
        }
        let Some(exact) = solve_exact(&case.sg, &SolveLimits::default()).exact() else { continue };
        let mut certs = Vec::new();
        for _ in 0..40 {
            let pos: BTreeMap<VertexId, (i64, i64)> = case
                .sg
                .graph()
                .vertices()
                .map(|v| (v, (rng.gen_range(0..500), rng.gen_range(0..500))))
                .collect();
            certs.extend(straight_line_cert(&case.sg, &pos));
        }
        for cert in certs {
            let rep = validate(&cert);
            if !rep.valid {
                continue;
            }
            ensure!(exact <= rep.crossing_count, "{}: Exact({exact}) above a valid {}", case.name, rep.crossing_count);
            compared += 1;
        }
    }
    ensure!(compared > 0, "no valid certificates sampled");
    Ok(format!("{compared} certificates compared, relabeling stable"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("AC1", "family structure", ac1),
        ("AC2", "canonical certificate", ac2),
        ("AC3", "criticality witnesses", ac3),
        ("AC4", "witness paths", ac4),
        ("AC5", "solver ground truth", ac5),
        ("AC6", "extraction suite", ac6),
        ("AC7", "elimination suite", ac7),
        ("AC8", "lift and assemble", ac8),
        ("AC9", "solver soundness", ac9),
    ];
    let mut failed = 0;
    for (id, name, f) in criteria {
        let start = Instant::now();
        let result = f();
        let took = start.elapsed();
        match result {
            Ok(detail) => println!("{id} PASS {name}: {detail} ({took:.2?})"),
            Err(why) => {
                failed += 1;
                println!("{id} FAIL {name}: {why} ({took:.2?})");
            }
        }
    }
    println!("{} of 9 criteria passed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
