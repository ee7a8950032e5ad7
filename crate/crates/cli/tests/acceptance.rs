//! Acceptance sweep: one test per top-level requirement of the
//! workbench, each ending in a single printed pass line. The tests lean
//! on the law registry for the heavy sweeps and on the `plait` binary
//! for the user-facing guarantees.

mod common;

use std::process::Command;
use std::time::Instant;

use plait_cli::parse::parse;
use plait_core::laws::{
    run_law, run_law_with, Impls, LawParams, Verdict, ALL_FAULTS, DEFAULT_SEED,
};
use plait_core::BraidWord;
use rand::Rng;

/// Runs one law and returns its case count, panicking on failure.
fn pass_cases(name: &str, params: &LawParams) -> usize {
    let case = run_law(name, params).expect("the law is registered");
    match case.verdict {
        Verdict::Pass { cases } => cases,
        Verdict::Fail { counterexample } => {
            panic!("law {name} failed on: {counterexample}")
        }
    }
}

const OPERAD_LAWS: [&str; 20] = [
    "sigma.operad.vertical_assoc",
    "sigma.operad.horizontal_assoc",
    "sigma.operad.unit",
    "sigma.operad.equivariance",
    "braid.operad.vertical_assoc",
    "braid.operad.horizontal_assoc",
    "braid.operad.unit",
    "braid.equivariance",
    "words.operad.vertical_assoc",
    "words.operad.horizontal_assoc",
    "words.operad.unit",
    "words.operad.equivariance",
    "omegabr.operad.vertical_assoc",
    "omegabr.operad.horizontal_assoc",
    "omegabr.operad.unit",
    "omegabr.operad.equivariance",
    "wcob.operad.vertical_assoc",
    "wcob.operad.horizontal_assoc",
    "wcob.operad.unit",
    "wcob.operad.equivariance",
];

#[test]
fn criterion_1_operad_law_suites() {
    let params = LawParams::default();
    let start = Instant::now();
    let mut total = 0usize;
    for name in OPERAD_LAWS {
        let cases = pass_cases(name, &params);
        // More cases than random samples means the exhaustive tier ran.
        assert!(
            cases > params.samples,
            "{name} ran a vacuous exhaustive tier ({cases} cases)"
        );
        total += cases;
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 120, "operad suites took {elapsed:?}");
    println!("criterion 1: pass - 20 operad laws, {total} cases in {elapsed:.2?}");
}

#[test]
fn criterion_2_index_identities() {
    let params = LawParams::default();
    let mut total = 0usize;
    for name in [
        "words.index.vertical1",
        "words.index.horizontal1a",
        "words.index.horizontal1b",
        "words.index.horizontal2a",
        "words.index.horizontal2b",
    ] {
        let cases = pass_cases(name, &params);
        // The exhaustive tier sweeps every word of up to six leaves, so
        // each identity must see well over a hundred thousand instances.
        assert!(cases >= 100_000, "{name} covered only {cases} instances");
        total += cases;
    }
    println!("criterion 2: pass - 5 index identities, {total} instances");
}

#[test]
fn criterion_3_operad_morphisms() {
    let params = LawParams::default();
    let mut total = 0usize;
    for name in [
        "tau.morphism",
        "pi.morphism",
        "forget.morphism",
        "braid.operad.projection",
    ] {
        let cases = pass_cases(name, &params);
        assert!(cases >= 300, "{name} covered only {cases} instances");
        total += cases;
    }
    println!("criterion 3: pass - 4 morphism laws, {total} instances");
}

#[test]
fn criterion_4_word_problem_oracle() {
    // The oracle law at enlarged parameters: 1000 random pairs on up to
    // five strands and twenty letters, a third of them built equal by
    // relation rewriting, on top of the exhaustive short-word tier.
    let params = LawParams {
        max_arity: 5,
        max_len: 20,
        samples: 1000,
        seed: DEFAULT_SEED,
    };
    let cases = pass_cases("braid.wordproblem.oracle", &params);
    assert!(cases >= 1600, "oracle agreement saw only {cases} pairs");

    // Independently: pairs that are equal by construction — free
    // insertions, the defining relation, and far commutation — must be
    // judged equal by handle reduction and by the free-group action.
    let mut rng = common::seeded(0xC4);
    for k in 0..250 {
        let n = rng.gen_range(2..=5usize);
        let len = rng.gen_range(0..=20);
        let base: Vec<(usize, i8)> = (0..len)
            .map(|_| (rng.gen_range(1..n), if rng.gen() { 1 } else { -1 }))
            .collect();
        let mut rewritten = base.clone();
        for _ in 0..rng.gen_range(1..=6) {
            let p = rng.gen_range(1..n);
            let s: i8 = if rng.gen() { 1 } else { -1 };
            let at = rng.gen_range(0..=rewritten.len());
            rewritten.insert(at, (p, -s));
            rewritten.insert(at, (p, s));
        }
        let mut left = base;
        if n >= 3 {
            let i = rng.gen_range(1..n - 1);
            left.extend([(i, 1), (i + 1, 1), (i, 1)]);
            rewritten.extend([(i + 1, 1), (i, 1), (i + 1, 1)]);
        }
        if n >= 4 {
            left.extend([(1, 1), (3, 1)]);
            rewritten.extend([(3, 1), (1, 1)]);
        }
        let a = BraidWord::from_pairs(n, &left).expect("positions are in range");
        let b = BraidWord::from_pairs(n, &rewritten).expect("positions are in range");
        assert!(
            a.equals(&b).expect("same strand count"),
            "pair {k}: handle reduction misjudged `{a}` vs `{b}`"
        );
        assert_eq!(
            a.artin_action(),
            b.artin_action(),
            "pair {k}: free-group action misjudged `{a}` vs `{b}`"
        );
    }
    println!("criterion 4: pass - oracle agreement on {cases} pairs, 250 rewritten pairs equal");
}

#[test]
fn criterion_5_hom_sets() {
    let params = LawParams::default();
    for name in [
        "wcob.morphism.hom",
        "wpab.morphism.hom",
        "wcob.morphism.welldef",
    ] {
        let cases = pass_cases(name, &params);
        assert!(cases >= 300, "{name} covered only {cases} instances");
    }
    let squares = pass_cases("wcob.morphism.functoriality", &params);
    assert!(squares >= 100, "functoriality saw only {squares} squares");
    println!("criterion 5: pass - hom uniqueness, witness identities, {squares} composition squares");
}

#[test]
fn criterion_6_graded_bookkeeping() {
    let params = LawParams::default();
    // Both braid relations are swept over every grade tuple, for each of
    // the cyclic groups of order 2..=5 and the symmetric group on three
    // letters: |G|^3 tuples in three strands plus three relation
    // instances on each of the |G|^4 tuples in four strands.
    let relation_floor: usize = [2usize, 3, 4, 5, 6]
        .iter()
        .map(|g| g.pow(3) + 3 * g.pow(4))
        .sum();
    for name in ["gcrossed.hurwitz.welldef", "gcrossed.twist.welldef"] {
        let cases = pass_cases(name, &params);
        assert!(
            cases >= relation_floor + 200,
            "{name} covered {cases} instances, needed {}",
            relation_floor + 200
        );
    }
    let grade = pass_cases("gcrossed.grade.conservation", &params);
    assert!(grade >= 300, "grade conservation saw only {grade} instances");
    println!(
        "criterion 6: pass - Hurwitz action and twists well defined over {relation_floor} relation instances, total grade conserved"
    );
}

#[test]
fn criterion_7_fault_injection() {
    let params = LawParams {
        max_arity: 3,
        max_len: 4,
        samples: 20,
        seed: DEFAULT_SEED,
    };
    for fault in ALL_FAULTS {
        let law = fault.caught_by();
        let broken = run_law_with(law, &params, &fault.impls()).expect("the law is registered");
        assert!(
            !broken.passed(),
            "law {law} missed injected fault {}",
            fault.name()
        );
        let healthy = run_law_with(law, &params, &Impls::default()).expect("the law is registered");
        assert!(
            healthy.passed(),
            "law {law} fails even without fault {}",
            fault.name()
        );
    }
    println!("criterion 7: pass - all 5 injected faults caught by the law suite");
}

#[test]
fn criterion_8_cli_round_trips_and_stability() {
    let mut rng = common::seeded(0x88);
    for k in 0..500 {
        let expr = common::rand_expr(&mut rng, 2);
        let printed = expr.to_string();
        let reparsed = parse(&printed)
            .unwrap_or_else(|e| panic!("case {k}: `{printed}` fails to re-parse: {e}"));
        assert_eq!(reparsed, expr, "case {k}: `{printed}` changed under round-trip");
    }

    let invocations: &[&[&str]] = &[
        &["render", "B4: s1 s3 s2^-1 s1"],
        &["render", "B2: e"],
        &["eq", "B3: s1 s2 s1", "B3: s2 s1 s2"],
        &["eq", "B3: s1", "B3: s2"],
        &["hom", "id2 | B2: e", "[2,1] | B2: e"],
        &["hurwitz", "B3: s1 s2", "2,3,4", "--group", "sym3"],
        &["twists", "B3: s1 s2", "2,3,4", "--group", "sym3"],
        &["laws", "sigma.operad.unit", "--samples", "25", "--max-arity", "3", "--max-len", "4"],
        &["--format", "machine", "laws", "words.index.vertical1", "--samples", "10", "--max-len", "4"],
    ];
    for args in invocations {
        let run = || {
            Command::new(env!("CARGO_BIN_EXE_plait"))
                .args(*args)
                .output()
                .expect("the plait binary runs")
        };
        let first = run();
        let second = run();
        assert_eq!(
            first.status.code(),
            second.status.code(),
            "exit code drifted for {args:?}"
        );
        assert_eq!(first.stdout, second.stdout, "stdout drifted for {args:?}");
        assert_eq!(first.stderr, second.stderr, "stderr drifted for {args:?}");
    }
    println!(
        "criterion 8: pass - 500 print/parse round-trips, {} invocations byte-stable",
        invocations.len()
    );
}
