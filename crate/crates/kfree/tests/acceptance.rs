//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
//! Runs as a plain binary (`harness = false`) so the lines always reach the terminal.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::Instant;

use kfree::report::Report;
use kfree::Parallel;
use kfree_core::constructions::{family_forms, g_star, named, Family, FamilySpec};
use kfree_core::formulas::{count_cliques, multipartite_clique_count, turan_edges};
use kfree_core::graph::{complete_multipartite, PartSizes};
use kfree_core::verify::{
    condition_soundness, extremal_number, family_characterization_check, verify_clique_bounds, verify_degree_theorem,
    witness_check, Exceptional, ExtremalReport, Metric, Sequential, Verdict,
};
use kfree_core::{canonical_form, CanonicalForm, Graph, PropertyKind};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn form_set(graphs: &[Graph]) -> BTreeSet<CanonicalForm> {
    graphs.iter().map(canonical_form).collect()
}

fn computed_set(rep: &ExtremalReport) -> BTreeSet<CanonicalForm> {
    rep.computed_extremal.iter().cloned().collect()
}

fn kp(parts: &[usize]) -> Graph {
    named::multipartite(parts).unwrap()
}

fn family(f: Family, n: usize, r: usize, ell: i64) -> Vec<Graph> {
    family_forms(FamilySpec::new(f, n, r, ell))
        .unwrap()
        .into_iter()
        .map(|(_, g)| g)
        .collect()
}

fn edges_run(p: PropertyKind, n: usize, r: usize) -> Result<ExtremalReport, String> {
    extremal_number(&Sequential, p, n, r, Metric::Edges, false).map_err(|e| format!("{p} n={n} r={r}: {e}"))
}

fn formulas() -> Outcome {
    let mut count = 0;
    for r in 1..=10u64 {
        for n in 0..=40u64 {
            let sizes = PartSizes::balanced(n as usize, r as usize);
            let direct = complete_multipartite(&sizes).unwrap().edge_count() as u64;
            let s = sizes.sizes();
            let pairwise: u64 = (0..s.len())
                .flat_map(|i| (i + 1..s.len()).map(move |j| (i, j)))
                .map(|(i, j)| (s[i] * s[j]) as u64)
                .sum();
            ensure(turan_edges(n, r) == direct && direct == pairwise, || {
                format!("T_{r}({n})")
            })?;
            count += 1;
        }
    }
    for (n, r, want) in [(10, 4, 37), (6, 5, 14), (8, 5, 25), (8, 8, 28), (16, 8, 112)] {
        ensure(turan_edges(n, r) == want, || {
            format!("e(T_{r}({n})) = {} != {want}", turan_edges(n, r))
        })?;
    }
    Ok(format!("{count} (n, r) pairs and 5 stated values"))
}

fn degree_conditions() -> Outcome {
    let mut total = 0;
    for n in 1..=8 {
        let rep = condition_soundness(&Sequential, n, n <= 7).map_err(|e| e.to_string())?;
        ensure(rep.passed(), || format!("n={n}: {}", rep.failures.join("; ")))?;
        if n == 8 {
            ensure(rep.graphs == 12_346, || format!("n=8 covered {} classes", rep.graphs))?;
        }
        total += rep.graphs;
    }
    Ok(format!("{total} graphs on n <= 8, no condition-free failures"))
}

fn hamiltonicity() -> Outcome {
    for (n, extra) in [(7, kp(&[4, 1, 1, 1])), (9, kp(&[5, 1, 1, 1, 1]))] {
        let rep = edges_run(PropertyKind::Hamiltonian, n, 5)?;
        let want_max = turan_edges(n as u64 - 1, 5) + 1;
        ensure(rep.computed_max == Some(want_max), || {
            format!("n={n}: max {:?}", rep.computed_max)
        })?;
        let mut want = form_set(&family(Family::G, n, 5, 0));
        want.insert(canonical_form(&extra));
        ensure(computed_set(&rep) == want, || {
            format!("n={n}: extremal set {:?}", rep.computed_extremal)
        })?;
        ensure(rep.verdict == Verdict::Match, || format!("n={n}: {}", rep.verdict))?;
    }
    let k311 = canonical_form(&kp(&[3, 1, 1]));
    for r in 5..=8 {
        let rep = edges_run(PropertyKind::Hamiltonian, 5, r)?;
        ensure(computed_set(&rep).contains(&k311), || {
            format!("r={r}: K_{{3,1,1}} missing")
        })?;
        ensure(rep.verdict == Verdict::Match, || format!("n=5 r={r}: {}", rep.verdict))?;
    }
    Ok("max 15 and 26 with the stated sets; K_{3,1,1} extremal at n=5 for r=5..8".into())
}

fn traceability() -> Outcome {
    let rep = edges_run(PropertyKind::Traceable, 6, 4)?;
    ensure(rep.computed_max == Some(9), || format!("max {:?}", rep.computed_max))?;
    let t45_plus_k1 = kp(&[2, 1, 1, 1]).disjoint_union(&Graph::empty(1).unwrap()).unwrap();
    let want = form_set(&[t45_plus_k1, kp(&[4, 1, 1])]);
    ensure(computed_set(&rep) == want, || {
        format!("extremal set {:?}", rep.computed_extremal)
    })?;
    let k31 = canonical_form(&kp(&[3, 1]));
    for r in 5..=8 {
        let rep = edges_run(PropertyKind::Traceable, 4, r)?;
        ensure(computed_set(&rep).contains(&k31), || {
            format!("r={r}: K_{{3,1}} missing")
        })?;
        ensure(rep.verdict == Verdict::Match, || format!("n=4 r={r}: {}", rep.verdict))?;
    }
    Ok("max 9 with {T_4(5)+K_1, K_{4,1,1}}; K_{3,1} extremal at n=4 for r=5..8".into())
}

fn triangle_free() -> Outcome {
    for n in 6..=9usize {
        let (lo, hi) = (n / 2, n.div_ceil(2));
        let trace = edges_run(PropertyKind::Traceable, n, 2)?;
        let want = ((lo - 1) * (hi + 1)) as u64;
        ensure(trace.computed_max == Some(want), || {
            format!("trace n={n}: {:?} != {want}", trace.computed_max)
        })?;
        if n >= 8 {
            let unique = form_set(&[kp(&[hi + 1, lo - 1])]);
            ensure(computed_set(&trace) == unique, || format!("trace n={n}: not unique"))?;
        }
        let ham = edges_run(PropertyKind::Hamiltonian, n, 2)?;
        let want = ((hi - 1) * (lo + 1)) as u64;
        ensure(ham.computed_max == Some(want), || {
            format!("ham n={n}: {:?} != {want}", ham.computed_max)
        })?;
        let hc = edges_run(PropertyKind::HamiltonianConnected, n, 2)?;
        let want = (lo * hi) as u64;
        ensure(hc.computed_max == Some(want), || {
            format!("hamconn n={n}: {:?} != {want}", hc.computed_max)
        })?;
        for rep in [&trace, &ham, &hc] {
            ensure(rep.verdict == Verdict::Match, || {
                format!("{} n={n}: {}", rep.theorem, rep.verdict)
            })?;
        }
    }
    Ok("n = 6..9: trace, ham and hamconn maxima as stated; trace extremal unique for n >= 8".into())
}

fn witnesses() -> Outcome {
    let w = witness_check(Exceptional::K6221).map_err(|e| e.to_string())?;
    ensure(w.passed() && w.edges == 38 && w.bound == turan_edges(10, 4) + 1, || {
        format!("{w:?}")
    })?;
    ensure(w.claims.iter().any(|(c, ok)| c == "not kham(0)" && *ok), || {
        "0-Hamiltonicity not checked".into()
    })?;
    let w = witness_check(Exceptional::K72221111).map_err(|e| e.to_string())?;
    ensure(w.passed() && w.edges == 112 && w.bound == 117, || format!("{w:?}"))?;
    for e in Exceptional::ALL {
        let w = witness_check(e).map_err(|e| e.to_string())?;
        ensure(w.passed(), || format!("{w:?}"))?;
    }
    Ok("K_{6,2,2,1}: K_5-free, non-Hamiltonian, non-0-Hamiltonian, 38 edges; K_{7,2,2,2,1,1,1,1}: 112 < 117".into())
}

fn cliques() -> Outcome {
    for t in [3, 4] {
        let kk = verify_clique_bounds(&Sequential, t, 12, None, 8).map_err(|e| e.to_string())?;
        ensure(kk.passed() && kk.graphs > 0, || {
            format!("colex t={t}: {:?}", kk.failures)
        })?;
        let fr = verify_clique_bounds(&Sequential, t, 12, Some(3), 8).map_err(|e| e.to_string())?;
        ensure(fr.passed() && fr.graphs > 0, || {
            format!("colex Turán t={t}: {:?}", fr.failures)
        })?;
    }
    let star = g_star(7, 5, 0).unwrap();
    let oracle_star = multipartite_clique_count(&[2, 1, 1, 1, 1], 3);
    let oracle_k4111 = multipartite_clique_count(&[4, 1, 1, 1], 3);
    ensure(oracle_star == 16 && oracle_k4111 == 13, || {
        format!("oracle gave {oracle_star}, {oracle_k4111}")
    })?;
    ensure(count_cliques(&star, 3) == oracle_star, || {
        "k_3(G*) disagrees with the product-sum oracle".into()
    })?;
    ensure(count_cliques(&kp(&[4, 1, 1, 1]), 3) == oracle_k4111, || {
        "k_3(K_{4,1,1,1}) disagrees".into()
    })?;
    let rep = extremal_number(&Sequential, PropertyKind::Hamiltonian, 7, 5, Metric::Cliques(3), false)
        .map_err(|e| e.to_string())?;
    ensure(rep.computed_max == Some(16) && rep.verdict == Verdict::Match, || {
        format!("{rep:?}")
    })?;
    ensure(computed_set(&rep).contains(&canonical_form(&star)), || {
        "G* not among maximizers".into()
    })?;
    Ok("k_3, k_4 within colex bounds for m <= 12 on n <= 8; k_3 max 16 = k_3(G*) > 13".into())
}

fn families() -> Outcome {
    let (mut runs, mut graphs) = (0, 0);
    for r in [3, 4, 5] {
        for ell in -1..=3i64 {
            for n in 4..=16usize {
                if r > n - 1 || ell > n as i64 - 3 {
                    continue;
                }
                let rep = family_characterization_check(n, r, ell).map_err(|e| e.to_string())?;
                ensure(rep.passed(), || {
                    format!("n={n} r={r} l={ell}: {}", rep.failures.join("; "))
                })?;
                runs += 1;
                graphs += rep.graphs;
            }
        }
    }
    Ok(format!("{runs} parameter sets, {graphs} family members"))
}

fn degree_theorem() -> Outcome {
    let mut cases: Vec<(usize, i64, usize)> = Vec::new();
    for ell in [-1, 0] {
        for n in 7..=9 {
            if n as i64 >= 2 * ell + 9 {
                cases.push((8, ell, n));
            }
        }
    }
    for r in 4..=7 {
        for n in 6..=9 {
            if kfree_core::verify::degree_theorem_in_hypothesis(r, -1, n) {
                cases.push((r, -1, n));
            }
        }
    }
    for &(r, ell, n) in &cases {
        let rep = verify_degree_theorem(&Sequential, r, ell, n).map_err(|e| e.to_string())?;
        ensure(rep.verdict == Verdict::Match, || {
            format!("r={r} l={ell} n={n}: {:?}", rep.problems)
        })?;
    }
    // The equality cases include H-family graphs where the theorem allows them.
    let rep = verify_degree_theorem(&Sequential, 4, -1, 6).map_err(|e| e.to_string())?;
    ensure(computed_set(&rep).contains(&canonical_form(&kp(&[4, 1, 1]))), || {
        "K_{4,1,1} missing at r=4 n=6".into()
    })?;
    Ok(format!("{} in-hypothesis cases match", cases.len()))
}

fn determinism() -> Outcome {
    let one = Parallel::new(1).unwrap();
    let eight = Parallel::new(8).unwrap();
    type Run = Box<dyn Fn(&Parallel) -> Report>;
    let runs: Vec<(&str, Run)> = vec![
        (
            "ham 9 5",
            Box::new(|e| {
                Report::Extremal(extremal_number(e, PropertyKind::Hamiltonian, 9, 5, Metric::Edges, false).unwrap())
            }),
        ),
        (
            "trace 8 2",
            Box::new(|e| {
                Report::Extremal(extremal_number(e, PropertyKind::Traceable, 8, 2, Metric::Edges, false).unwrap())
            }),
        ),
        (
            "ham 7 5 k3",
            Box::new(|e| {
                Report::Extremal(
                    extremal_number(e, PropertyKind::Hamiltonian, 7, 5, Metric::Cliques(3), false).unwrap(),
                )
            }),
        ),
        (
            "degree 4 -1 8",
            Box::new(|e| Report::Extremal(verify_degree_theorem(e, 4, -1, 8).unwrap())),
        ),
        (
            "colex 3 12",
            Box::new(|e| Report::Check(verify_clique_bounds(e, 3, 12, None, 8).unwrap())),
        ),
        (
            "conditions 7",
            Box::new(|e| Report::Check(condition_soundness(e, 7, true).unwrap())),
        ),
    ];
    for (name, run) in &runs {
        let (a, b) = (run(&one).to_json(), run(&eight).to_json());
        ensure(a == b, || format!("{name}: JSON differs between 1 and 8 jobs"))?;
    }
    let cli = |jobs: &str| {
        Command::new(env!("CARGO_BIN_EXE_kfree"))
            .args(["verify", "--theorem", "ham", "--n", "8", "--r", "5", "--jobs", jobs])
            .output()
            .map_err(|e| e.to_string())
    };
    let (a, b) = (cli("1")?, cli("8")?);
    ensure(a.status.success() && !a.stdout.is_empty(), || {
        String::from_utf8_lossy(&a.stderr).into_owned()
    })?;
    ensure(a.stdout == b.stdout, || {
        "CLI output differs between --jobs 1 and --jobs 8".into()
    })?;
    Ok(format!("{} library runs and one CLI run byte-identical", runs.len()))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("turan edge formula", formulas),
        ("degree-condition soundness", degree_conditions),
        ("hamiltonicity extremal sets", hamiltonicity),
        ("traceability extremal sets", traceability),
        ("triangle-free suite", triangle_free),
        ("exceptional witnesses", witnesses),
        ("clique suites", cliques),
        ("family properties", families),
        ("degree-sequence edge theorem", degree_theorem),
        ("determinism across job counts", determinism),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name} ({secs:.1}s): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name} ({secs:.1}s): {why}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
