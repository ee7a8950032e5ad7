//! End-to-end tests of the `plait` binary: print/parse round-trips,
//! frozen renderings and graded outputs, exit-code conventions, and
//! byte-for-byte stability of repeated runs.

mod common;

use std::process::{Command, Output};

use plait_cli::parse::parse;

fn plait(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_plait"))
        .args(args)
        .output()
        .expect("the plait binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is UTF-8")
}

#[test]
fn printing_and_reparsing_is_the_identity() {
    let mut rng = common::seeded(20_260_825);
    for k in 0..600 {
        let expr = common::rand_expr(&mut rng, 2);
        let printed = expr.to_string();
        let reparsed = parse(&printed)
            .unwrap_or_else(|e| panic!("case {k}: `{printed}` fails to re-parse: {e}"));
        assert_eq!(
            reparsed, expr,
            "case {k}: `{printed}` round-trips to something else"
        );
    }
}

#[test]
fn rendering_matches_the_frozen_goldens() {
    let out = plait(&["render", "B3: s1 s2^-1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), "| \\x/\n\\X/ |\n1 2 3\n");
    let out = plait(&["render", "B2: e"]);
    assert_eq!(stdout_of(&out), "1 2\n");
}

#[test]
fn graded_outputs_match_the_frozen_goldens() {
    let out = plait(&["hurwitz", "B3: s1 s2", "2,3,4", "--group", "sym3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), "6,5,2\n");
    let out = plait(&["hurwitz", "B2: s1", "1,2", "--group", "cyclic:3"]);
    assert_eq!(stdout_of(&out), "2,1\n");
}

#[test]
fn exit_codes_separate_yes_no_and_error() {
    assert_eq!(
        plait(&["eq", "B3: s1 s2 s1", "B3: s2 s1 s2"]).status.code(),
        Some(0)
    );
    assert_eq!(plait(&["eq", "B3: s1", "B3: s2"]).status.code(), Some(1));
    assert_eq!(
        plait(&["hom", "id2 | B2: e", "[2,1] | B2: e"]).status.code(),
        Some(1)
    );
    let err = plait(&["reduce", "B2: s9"]);
    assert_eq!(err.status.code(), Some(2));
    assert!(stdout_of(&err).is_empty());
    let stderr = String::from_utf8(err.stderr).expect("stderr is UTF-8");
    assert!(stderr.starts_with("error: "), "stderr was `{stderr}`");
}

#[test]
fn repeated_runs_are_byte_identical() {
    let invocations: &[&[&str]] = &[
        &["render", "B4: s1 s3 s2^-1 s1"],
        &["eq", "B3: s1 s2 s1", "B3: s2 s1 s2"],
        &["eq", "(x1 (x0 x2)) | B3: s1", "(x1 (x0 x2)) | B3: s2"],
        &["reduce", "B3: s1 s2 s2^-1 s1^-1 s1"],
        &["compose", "B3: s1 s2", "@2", "B2: s1"],
        &["compose", "[2,1] | B2: s1", "@1", "[2,1] | B2: s1^-1"],
        &["pi", "(x1 (x0 x2)) | B3: s1"],
        &["tau", "(x2 (x0 x1))"],
        &["hom", "id2 | B2: e", "id2 | B2: s1 s1"],
        &["hom", "id2 | B2: e", "[2,1] | B2: e"],
        &["hurwitz", "B3: s1 s2", "2,3,4", "--group", "sym3"],
        &["twists", "B3: s1 s2", "2,3,4", "--group", "sym3"],
        &[
            "laws",
            "sigma.operad.unit",
            "braid.operad.unit",
            "--samples",
            "25",
            "--max-arity",
            "3",
            "--max-len",
            "4",
        ],
        &["--format", "machine", "laws", "words.operad.unit", "--samples", "10"],
        &["--format", "machine", "twists", "B2: s1", "1,2", "--group", "cyclic:4"],
        &["--format", "machine", "hom", "id2 | B2: e", "id2 | B2: s1 s1"],
    ];
    for args in invocations {
        let first = plait(args);
        let second = plait(args);
        assert_eq!(
            first.status.code(),
            second.status.code(),
            "exit code drifted for {args:?}"
        );
        assert_eq!(first.stdout, second.stdout, "stdout drifted for {args:?}");
        assert_eq!(first.stderr, second.stderr, "stderr drifted for {args:?}");
    }
}

#[test]
fn machine_format_emits_single_line_json() {
    let invocations: &[&[&str]] = &[
        &["--format", "machine", "eq", "B2: s1", "B2: s1"],
        &["--format", "machine", "reduce", "B2: s1 s1^-1"],
        &["--format", "machine", "render", "B3: s1 s2^-1"],
        &["--format", "machine", "hurwitz", "B3: s1 s2", "2,3,4", "--group", "sym3"],
        &["--format", "machine", "laws", "sigma.operad.unit", "--samples", "5"],
        &["--format", "machine", "hom", "id2 | B2: e", "[2,1] | B2: e"],
    ];
    for args in invocations {
        let out = plait(args);
        let text = stdout_of(&out);
        let line = text
            .strip_suffix('\n')
            .unwrap_or_else(|| panic!("{args:?} output does not end with a newline"));
        assert!(!line.contains('\n'), "{args:?} printed more than one line");
        let parsed: serde_json::Value =
            serde_json::from_str(line).unwrap_or_else(|e| panic!("{args:?} stdout not JSON: {e}"));
        assert!(parsed.get("command").is_some(), "{args:?} lacks a command tag");
    }
}
