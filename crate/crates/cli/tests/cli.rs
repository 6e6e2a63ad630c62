use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use zpr_core::doc::{self, GbDocument, LrrDocument, PBasisDocument};
use zpr_core::text;
use zpr_core::RingParams;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn zpr(args: &[&str]) -> Output {
    zpr_env(args, &[])
}

fn zpr_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_zpr"));
    cmd.args(args)
        .env_remove("ZPR_MAX_REDUCTIONS")
        .env_remove("ZPR_ENUM_CAP");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().unwrap()
}

fn zpr_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_zpr"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn z9() -> RingParams {
    RingParams::new(3, 2).unwrap()
}

fn matrix_rows(out: &str, ring: RingParams) -> usize {
    text::parse_matrix(ring, out).unwrap().len()
}

#[test]
fn gb_top_lists_four_rows() {
    let o = zpr(&["--ring", "9", "gb", &fixture("z9_generators.txt")]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("betas=(1,1,1,1)"), "{out}");
    assert_eq!(matrix_rows(&out, z9()), 4);
    for lm in ["x^5*e2", "x^4*e2", "x^2*e1", "x*e1"] {
        assert!(out.contains(lm), "{lm} missing in {out}");
    }
    assert_eq!(
        out,
        std::fs::read_to_string(fixture("z9_top_basis.txt")).unwrap()
    );
}

#[test]
fn gb_pot_lists_two_rows() {
    let o = zpr(&[
        "--ring",
        "9",
        "--order",
        "pot",
        "gb",
        &fixture("z9_generators.txt"),
    ]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("betas=(2,2)"), "{out}");
    assert_eq!(matrix_rows(&out, z9()), 2);
}

#[test]
fn gb_output_is_a_fixed_point() {
    let basis = fixture("z9_top_basis.txt");
    let o = zpr(&["--ring", "9", "gb", &basis]);
    assert_eq!(stdout(&o), std::fs::read_to_string(&basis).unwrap());
}

#[test]
fn empty_input_is_a_parse_error() {
    let o = zpr_stdin(&["--ring", "9", "gb", "-"], "");
    assert_eq!(code(&o), 2);
    let o = zpr_stdin(&["--ring", "9", "gb", "-"], "# only a comment\n\n");
    assert_eq!(code(&o), 2);
    let o = zpr_stdin(&["--ring", "9", "gb", "-"], "[1, x\n");
    assert_eq!(code(&o), 2);
    let o = zpr(&["--ring", "9", "gb", "/nonexistent/matrix.txt"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn stdin_input_matches_file_input() {
    let text = std::fs::read_to_string(fixture("z9_generators.txt")).unwrap();
    let a = zpr_stdin(&["--ring", "9", "gb", "-"], &text);
    let b = zpr(&["--ring", "9", "gb", &fixture("z9_generators.txt")]);
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn pbasis_pot_and_top() {
    let o = zpr(&[
        "--ring",
        "9",
        "--order",
        "pot",
        "pbasis",
        &fixture("z9_generators.txt"),
    ]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.starts_with("# betas=(2,2) N=4 order=POT"), "{out}");
    let provenance: Vec<&str> = out
        .lines()
        .filter(|l| l.starts_with('['))
        .map(|l| l.rsplit("# ").next().unwrap())
        .collect();
    assert_eq!(provenance, ["g1", "3*g1", "g2", "3*g2"]);

    let o = zpr(&["--ring", "9", "pbasis", &fixture("z9_generators.txt")]);
    let out = stdout(&o);
    assert!(out.starts_with("# betas=(1,1,1,1) N=4 order=TOP"), "{out}");
    assert_eq!(matrix_rows(&out, z9()), 4);
}

#[test]
fn pbasis_over_a_field_is_the_basis() {
    let z5 = RingParams::new(5, 1).unwrap();
    let gb = stdout(&zpr(&["--ring", "5", "gb", &fixture("z5_generators.txt")]));
    let pb = stdout(&zpr(&[
        "--ring",
        "5",
        "pbasis",
        &fixture("z5_generators.txt"),
    ]));
    assert_eq!(
        text::parse_matrix(z5, &gb).unwrap(),
        text::parse_matrix(z5, &pb).unwrap()
    );
}

#[test]
fn lrr_examples() {
    let o = zpr(&["--ring", "9", "lrr", "--seq", "1,4,4,7,7"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("length: 2"), "{out}");
    assert!(out.contains("monic solutions (3):"), "{out}");
    for f in ["x^2+3x+2", "x^2+6x+8", "x^2+5"] {
        assert!(out.lines().any(|l| l.trim() == f), "{f} missing in {out}");
    }
    assert!(out.contains("parametrization: t0*("), "{out}");

    let out = stdout(&zpr(&["--ring", "5", "lrr", "--seq", "1,4,3,3,2"]));
    assert!(out.contains("shortest: x^2+2x+4"), "{out}");
    assert!(out.contains("monic solutions (1):"), "{out}");

    let out = stdout(&zpr(&["--ring", "9", "lrr", "--seq", "6,3,1,5,6"]));
    assert!(out.contains("shortest: x^3+4x^2+7x+4"), "{out}");
    assert!(out.lines().any(|l| l.trim() == "x^3+4x^2+7x+1"), "{out}");
}

#[test]
fn lrr_all_lists_unit_multiples() {
    let o = zpr(&[
        "--ring",
        "9",
        "--format",
        "json",
        "lrr",
        "--seq",
        "1,4,4,7,7",
        "--all",
    ]);
    let d: LrrDocument = doc::from_json(&stdout(&o)).unwrap();
    assert!(!d.monic_only);
    assert_eq!(d.solutions.unwrap().len(), 18);
}

#[test]
fn lrr_negative_values_and_bad_sequences() {
    let a = stdout(&zpr(&["--ring", "9", "lrr", "--seq", "-8,4,4,-2,7"]));
    let b = stdout(&zpr(&["--ring", "9", "lrr", "--seq", "1,4,4,7,7"]));
    assert_eq!(a, b);
    assert_eq!(code(&zpr(&["--ring", "9", "lrr", "--seq", "1,,2"])), 2);
    assert_eq!(code(&zpr(&["--ring", "9", "lrr", "--seq", ""])), 2);
}

#[test]
fn enumeration_cap_keeps_template() {
    let o = zpr_env(
        &["--ring", "9", "lrr", "--seq", "6,3,1,5,6"],
        &[("ZPR_ENUM_CAP", "2")],
    );
    assert_eq!(code(&o), 4);
    let out = stdout(&o);
    assert!(out.contains("parametrization: t0*(x^3+4x^2+7x+4)"), "{out}");
    assert!(!out.contains("monic solutions"), "{out}");
    let o = zpr(&[
        "--ring",
        "9",
        "--enum-cap",
        "2",
        "--format",
        "json",
        "lrr",
        "--seq",
        "6,3,1,5,6",
    ]);
    assert_eq!(code(&o), 4);
    let d: LrrDocument = doc::from_json(&stdout(&o)).unwrap();
    assert!(d.solutions.is_none() && d.enumeration_error.is_some());
}

#[test]
fn completion_cap_exit_code() {
    let o = zpr_env(
        &["--ring", "9", "gb", &fixture("z9_generators.txt")],
        &[("ZPR_MAX_REDUCTIONS", "1")],
    );
    assert_eq!(code(&o), 3);
    let o = zpr(&[
        "--ring",
        "9",
        "--max-reductions",
        "1",
        "gb",
        &fixture("z9_generators.txt"),
    ]);
    assert_eq!(code(&o), 3);
}

#[test]
fn check_passes_on_bases() {
    let o = zpr(&["--ring", "9", "check", &fixture("z9_top_basis.txt")]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("p-PLM: pass"));
    let o = zpr(&["--ring", "5", "check", &fixture("z5_top_basis.txt")]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("PLM: pass"));
    let o = zpr(&[
        "--ring",
        "9",
        "--order",
        "pot",
        "check",
        &fixture("z9_generators.txt"),
    ]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
}

#[test]
fn check_fails_on_corrupted_rows() {
    let o = zpr(&["--ring", "9", "check", &fixture("z9_corrupted.txt")]);
    assert_eq!(code(&o), 5);
    let out = stdout(&o);
    assert!(out.contains("groebner: no (witness: S("), "{out}");
    assert!(out.contains("result: fail"), "{out}");

    let o = zpr(&["--ring", "5", "check", &fixture("z5_corrupted.txt")]);
    assert_eq!(code(&o), 5);
    let out = stdout(&o);
    assert!(out.contains("PLM: fail"), "{out}");
    assert!(out.contains("predicted lm: "), "{out}");
}

#[test]
fn check_is_reproducible_with_seed() {
    let args = [
        "--ring",
        "5",
        "--format",
        "json",
        "check",
        &fixture("z5_corrupted.txt"),
        "--seed",
        "7",
    ];
    let a = stdout(&zpr(&args));
    let b = stdout(&zpr(&args));
    assert_eq!(a, b);
    assert!(a.contains("\"seed\": 7"));
}

#[test]
fn ring_arguments() {
    let file = fixture("z9_generators.txt");
    let a = stdout(&zpr(&["--ring", "9", "gb", &file]));
    assert_eq!(stdout(&zpr(&["--p", "3", "--r", "2", "gb", &file])), a);
    assert_eq!(stdout(&zpr(&["--ring", "3^2", "gb", &file])), a);
    assert_eq!(code(&zpr(&["--ring", "8", "lrr", "--seq", "1,2,3"])), 0);
    assert_eq!(code(&zpr(&["--ring", "6", "gb", &file])), 2);
    assert_eq!(code(&zpr(&["--ring", "1", "gb", &file])), 2);
    assert_eq!(code(&zpr(&["--ring", "nine", "gb", &file])), 2);
    assert_eq!(code(&zpr(&["gb", &file])), 2);
    assert_eq!(
        code(&zpr(&["--ring", "9", "--p", "3", "--r", "2", "gb", &file])),
        2
    );
    assert_eq!(
        code(&zpr(&["--ring", "9", "--order", "lex", "gb", &file])),
        2
    );
}

#[test]
fn json_documents_round_trip() {
    let file = fixture("z9_generators.txt");
    for order in ["top", "pot"] {
        let out = stdout(&zpr(&[
            "--ring", "9", "--order", order, "--format", "json", "gb", &file,
        ]));
        let d: GbDocument = doc::from_json(&out).unwrap();
        assert_eq!(doc::to_json(&d), out);
        assert_eq!(d.to_basis().unwrap().len(), d.elements.len());

        let out = stdout(&zpr(&[
            "--ring", "9", "--order", order, "--format", "json", "pbasis", &file,
        ]));
        let d: PBasisDocument = doc::from_json(&out).unwrap();
        assert_eq!(doc::to_json(&d), out);
        assert_eq!(d.n, 4);
    }
    let out = stdout(&zpr(&[
        "--ring",
        "9",
        "--format",
        "json",
        "lrr",
        "--seq",
        "1,4,4,7,7",
    ]));
    let d: LrrDocument = doc::from_json(&out).unwrap();
    assert_eq!(doc::to_json(&d), out);
}
