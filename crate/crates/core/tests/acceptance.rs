//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use edgepowers::classify::{classify_cycle, classify_path, cross_validate};
use edgepowers::exchange::{enumerate_polymatroid_base, SubmodularFunction};
use edgepowers::fixtures::{self, FixtureKind};
use edgepowers::graph::generate::{trees_up_to, unicyclic_up_to};
use edgepowers::sample::{random_instance, InstanceShape};
use edgepowers::toric::conjecture_scan;
use edgepowers::{
    brute_force_oracle, check_exchange, check_strong_exchange, check_symmetric_exchange, detect_veronese,
    enumerate_generators, search_sep_counterexample, Execution, Graph, Limits,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn fixture_suite() -> Outcome {
    let limits = Limits::default();
    let mut refute = 0;
    for f in fixtures::registry() {
        let o = fixtures::run(f, &limits, Execution::default()).map_err(|e| format!("{}: {e}", f.name))?;
        if !o.passed() {
            let bad: Vec<_> = o.checks.iter().filter(|c| !c.passed).map(|c| c.label.as_str()).collect();
            return Err(format!("{} failed: {}", f.name, bad.join(", ")));
        }
        refute += usize::from(f.kind == FixtureKind::Refute);
    }
    if refute < 20 {
        return Err(format!("only {refute} refuting fixtures"));
    }
    Ok(format!("{} fixtures, {refute} refuting", fixtures::registry().len()))
}

fn family_against_search(name: &str, sizes: std::ops::RangeInclusive<usize>, cap_max: u32) -> Outcome {
    let mut summary = Vec::new();
    for n in sizes {
        let (verdict, g) = match name {
            "cycle" => (classify_cycle(n), Graph::parse(&format!("cycle:{n}"))),
            _ => (classify_path(n), Graph::parse(&format!("path:{n}"))),
        };
        let (sep, g) = (verdict.map_err(|e| e.to_string())?.sep, g.map_err(|e| e.to_string())?);
        let hit = search_sep_counterexample(&g, cap_max, &Limits::default(), Execution::default())
            .map_err(|e| e.to_string())?;
        if sep == hit.is_some() {
            return Err(format!("{name}:{n} verdict {sep} but search found {:?}", hit.map(|c| c.caps.to_string())));
        }
        summary.push(format!("{n}{}", if sep { "+" } else { "-" }));
    }
    Ok(summary.join(" "))
}

fn corpus_consistent(corpus: Vec<Graph>, cap_max: u32) -> Outcome {
    let mut by_fixture = 0;
    for g in &corpus {
        let r = cross_validate(g, cap_max, &Limits::default(), Execution::default()).map_err(|e| e.to_string())?;
        if !r.consistent {
            return Err(format!("{g:?}: {}", r.to_json()));
        }
        by_fixture += usize::from(matches!(r.evidence, edgepowers::classify::Evidence::Fixture(_)));
    }
    Ok(format!("{} graphs consistent, {by_fixture} via lifted fixtures", corpus.len()))
}

fn random_exchange_properties(veronese: bool) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let shape = InstanceShape::default();
    let mut sep = 0;
    for k in 0..500 {
        let (g, caps) = random_instance(&mut rng, &shape);
        let w = enumerate_generators(&g, &caps).map_err(|e| e.to_string())?;
        if veronese {
            let strong = check_strong_exchange(w.members()).passed();
            sep += usize::from(strong);
            if detect_veronese(w.members()).is_some() != strong {
                return Err(format!("instance {k}: {g:?} caps {caps}"));
            }
        } else if !check_exchange(w.members()).passed() || !check_symmetric_exchange(w.members()).passed() {
            return Err(format!("instance {k}: {g:?} caps {caps}"));
        }
    }
    Ok(if veronese { format!("500 instances, {sep} with strong exchange") } else { "500 instances".into() })
}

fn oracle_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let shape = InstanceShape { max_cap: 5, cap_sum: Some(24), ..InstanceShape::default() };
    for k in 0..200 {
        let (g, caps) = random_instance(&mut rng, &shape);
        let fast = enumerate_generators(&g, &caps).map_err(|e| e.to_string())?;
        let (d, slow) = brute_force_oracle(&g, &caps).map_err(|e| e.to_string())?;
        if fast.delta() != d || fast.members() != slow.members() {
            return Err(format!("instance {k}: {g:?} caps {caps}"));
        }
    }
    Ok("200 instances".into())
}

fn three_element_polymatroids() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut sizes = 0;
    for k in 0..200 {
        let f = SubmodularFunction::random(3, 4, &mut rng).map_err(|e| e.to_string())?;
        let base = enumerate_polymatroid_base(&f);
        sizes += base.len();
        if !check_strong_exchange(&base).passed() {
            return Err(format!("polymatroid {k}: {f:?}"));
        }
    }
    Ok(format!("200 polymatroids, {sizes} bases in total"))
}

fn final_example() -> Outcome {
    let f = fixtures::find("final-example").map_err(|e| e.to_string())?;
    let o = fixtures::run(f, &Limits::default(), Execution::default()).map_err(|e| e.to_string())?;
    let lines: Vec<String> = o.checks.iter().map(|c| format!("{}={}", c.label, c.passed)).collect();
    if o.passed() {
        Ok(lines.join(", "))
    } else {
        Err(lines.join(", "))
    }
}

fn conjecture() -> Outcome {
    let corpus = unicyclic_up_to(7);
    let r = conjecture_scan(&corpus, 2, 3, &Limits::default(), Execution::default()).map_err(|e| e.to_string())?;
    let summary = format!("{} graphs, {} instances, {} clean", r.graphs, r.instances.len(), r.clean());
    if r.is_clean() {
        Ok(summary)
    } else {
        Err(format!("{summary}: {}", r.to_json()["findings"]))
    }
}

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        ("1 fixture suite", fixture_suite),
        ("2 cycles n=3..9, caps <= 3", || family_against_search("cycle", 3..=9, 3)),
        ("3 paths n=2..8, caps <= 2", || family_against_search("path", 2..=8, 2)),
        ("4 trees on <= 8 vertices", || corpus_consistent(trees_up_to(8), 2)),
        ("5 unicyclic graphs on <= 8 vertices", || corpus_consistent(unicyclic_up_to(8), 2)),
        ("6 Veronese type iff strong exchange", || random_exchange_properties(true)),
        ("7 exchange and symmetric exchange", || random_exchange_properties(false)),
        ("8 oracle equivalence", oracle_equivalence),
        ("9 three-element polymatroids", three_element_polymatroids),
        ("10 final example", final_example),
        ("11 conjecture scan", conjecture),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS  {name} ({secs:.1}s): {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {name} ({secs:.1}s): {detail}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
