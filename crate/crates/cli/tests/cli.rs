//! End-to-end behaviour of the command-line interface.

use std::io::Write;
use std::process::{Command, Stdio};

use socodes::codefile;
use socodes_cli::{run, EXIT_OK, EXIT_USAGE, EXIT_VERIFY};

fn cli(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("socodes").chain(args.iter().copied());
    let code = run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn ok(args: &[&str], stdin: &str) -> String {
    let (code, out, err) = cli(args, stdin);
    assert_eq!(code, EXIT_OK, "{args:?}: {err}");
    out
}

fn temp_file(name: &str, contents: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("socodes-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn rm_code_piped_into_check_through_the_binary() {
    let bin = env!("CARGO_BIN_EXE_socodes");
    let code = Command::new(bin)
        .args(["code", "rm", "--r", "1", "--m", "3"])
        .output()
        .unwrap();
    assert!(code.status.success());
    let mut check = Command::new(bin)
        .args(["check", "--expect-so"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    check.stdin.take().unwrap().write_all(&code.stdout).unwrap();
    let result = check.wait_with_output().unwrap();
    assert_eq!(result.status.code(), Some(0));
    let text = String::from_utf8(result.stdout).unwrap();
    assert!(
        text.starts_with("[8,4] self-orthogonal: yes, self-dual: yes\n"),
        "{text}"
    );
}

#[test]
fn check_reports_verification_failure() {
    let file = "2 4 2\n1 1 0 0\n1 0 0 0\n";
    let (code, out, err) = cli(&["check", "--expect-so"], file);
    assert_eq!(code, EXIT_VERIFY);
    assert!(out.starts_with("[4,2] self-orthogonal: no, self-dual: no"));
    assert!(err.contains("not self-orthogonal"));
    // without the expectation the same file is only reported
    assert_eq!(cli(&["check"], file).0, EXIT_OK);
}

#[test]
fn malformed_input_names_the_line() {
    let (code, _, err) = cli(&["check"], "2 3 1\n1 1\n");
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("line 2"), "{err}");
    let (code, _, err) = cli(&["check", "/nonexistent/file.code"], "");
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("/nonexistent/file.code"), "{err}");
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(cli(&["bogus"], "").0, EXIT_USAGE);
    assert_eq!(cli(&["tables", "--which", "3"], "").0, EXIT_USAGE);
    // randomness needs an explicit seed
    assert_eq!(
        cli(
            &["code", "so-outer", "--q", "16", "--n", "6", "--k", "2"],
            ""
        )
        .0,
        EXIT_USAGE
    );
    assert_eq!(cli(&["count", "--n", "5"], "").0, EXIT_USAGE);
    assert_eq!(cli(&["count", "--n", "12", "--oracle"], "").0, EXIT_USAGE);
    let (code, out, _) = cli(&["--help"], "");
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("hex symbols"));
}

#[test]
fn mindist_limits_are_reported() {
    let rm = ok(&["code", "rm", "--r", "3", "--m", "6"], "");
    let (code, _, err) = cli(&["mindist"], &rm);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("limits"), "{err}");
}

#[test]
fn emitted_code_files_parse_back_identically() {
    for args in [
        vec!["code", "rm", "--r", "2", "--m", "5"],
        vec!["code", "rs", "--q", "64", "--n", "20", "--k", "5"],
        vec![
            "code", "so-outer", "--q", "256", "--n", "30", "--k", "9", "--seed", "4",
        ],
    ] {
        let text = ok(&args, "");
        let code = codefile::parse(&text).unwrap();
        let comments: Vec<String> = text
            .lines()
            .filter_map(|l| l.strip_prefix("# "))
            .filter(|l| !l.starts_with("claimed_d"))
            .map(str::to_string)
            .collect();
        assert_eq!(codefile::emit(&code, &comments), text);
        assert_eq!(codefile::parse(&codefile::emit(&code, &[])).unwrap(), code);
    }
}

#[test]
fn mindist_is_independent_of_jobs() {
    let rm = ok(&["code", "rm", "--r", "2", "--m", "6"], "");
    let outer = ok(
        &[
            "code", "so-outer", "--q", "16", "--n", "6", "--k", "3", "--seed", "1",
        ],
        "",
    );
    for text in [rm, outer] {
        let reference = ok(&["mindist", "--jobs", "1"], &text);
        for jobs in ["2", "3", "7", "16"] {
            assert_eq!(ok(&["mindist", "--jobs", jobs], &text), reference);
        }
    }
}

#[test]
fn concat_and_expand_produce_self_orthogonal_codes() {
    let outer = temp_file(
        "outer.code",
        &ok(
            &[
                "code", "so-outer", "--q", "16", "--n", "5", "--k", "2", "--seed", "3",
            ],
            "",
        ),
    );
    let inner = temp_file(
        "inner.code",
        &ok(&["code", "rm", "--r", "1", "--m", "3"], ""),
    );
    let (o, i) = (outer.to_str().unwrap(), inner.to_str().unwrap());
    for basis in ["self-dual", "polynomial"] {
        let c = ok(
            &["concat", "--outer", o, "--inner", i, "--basis", basis],
            "",
        );
        assert!(ok(&["check", "--expect-so"], &c).starts_with("[40,8] self-orthogonal: yes"));
        assert_eq!(
            ok(&["mindist", "--jobs", "4"], &c),
            "[40,8,16]\nclaimed distance 16: met\n"
        );
    }
    let e = ok(&["expand", o], "");
    assert!(ok(&["check", "--expect-so"], &e).starts_with("[20,8] self-orthogonal: yes"));
    // the inner dimension must match the outer field degree
    let small = temp_file(
        "small.code",
        &ok(&["code", "rm", "--r", "1", "--m", "2"], ""),
    );
    let (code, _, err) = cli(
        &["concat", "--outer", o, "--inner", small.to_str().unwrap()],
        "",
    );
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("dimension"), "{err}");
}

#[test]
fn table_and_count_outputs() {
    let t2 = ok(&["tables", "--which", "2"], "");
    assert_eq!(t2.lines().count(), 5);
    assert!(t2.contains("\n3,6,6,7,5,84\n"));
    let counts = ok(&["count", "--n", "4", "--k", "1", "--oracle"], "");
    assert!(counts.starts_with("quantity,n,k,s,paper_value,oracle_value,agrees\n"));
    assert!(counts.contains("\nEq9,4,1,,15,7,false\n"), "{counts}");
    let plain = ok(&["count", "--n", "20", "--k", "3"], "");
    assert!(plain.lines().skip(1).all(|l| l.ends_with(",,")), "{plain}");
}

#[test]
fn field_and_gv_reports() {
    let f = ok(&["field", "--m", "2", "--modulus", "7"], "");
    assert!(f.contains("self-dual basis: 2 3\n"), "{f}");
    assert!(f.contains("self-dual basis is self-dual: yes"));
    let g = ok(&["gv", "--n", "8", "--delta", "0.5", "--seed", "0"], "");
    assert!(
        g.contains("r: 2\nk: 3\n")
            && g.contains("condition holds: true")
            && g.contains("witness: found"),
        "{g}"
    );
    let g = ok(&["gv", "--n", "100", "--delta", "0.1", "--seed", "0"], "");
    assert!(
        g.contains("k: 62\n") && g.contains("witness: skipped"),
        "{g}"
    );
}

#[test]
fn csv_outputs_are_byte_stable() {
    let out = temp_file("bounds.csv", "");
    let path = out.to_str().unwrap();
    for args in [
        vec!["tables", "--which", "1"],
        vec!["tables", "--which", "2"],
        vec!["count", "--n", "6", "--oracle"],
        vec!["bounds", "--samples", "21"],
    ] {
        assert_eq!(ok(&args, ""), ok(&args, ""), "{args:?}");
    }
    ok(&["bounds", "--samples", "21", "--out", path], "");
    let first = std::fs::read(&out).unwrap();
    ok(&["bounds", "--samples", "21", "--out", path], "");
    assert_eq!(std::fs::read(&out).unwrap(), first);
    assert_eq!(first, ok(&["bounds", "--samples", "21"], "").into_bytes());
    let text = String::from_utf8(first).unwrap();
    assert!(text.starts_with("label,delta,rate\ngv,"));
    for label in ["gv-so", "eq6-m7", "eq7-t8", "envelope"] {
        assert!(
            text.lines().any(|l| l.starts_with(&format!("{label},"))),
            "{label}"
        );
    }
}
