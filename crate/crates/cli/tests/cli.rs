//! End-to-end tests of the command-line surface: verbs, output formats and
//! exit codes.

use std::fs;
use std::path::PathBuf;

use clap::Parser;

use slnweb_cli::{run, Cli};

struct Invocation {
    code: i32,
    out: String,
    err: String,
}

fn slnweb(args: &[&str]) -> Invocation {
    let mut argv = vec!["slnweb"];
    argv.extend_from_slice(args);
    let cli = Cli::try_parse_from(argv).expect("argument parsing");
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(cli, &mut out, &mut err);
    Invocation {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn write_file(dir: &tempfile::TempDir, name: &str, content: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, content).unwrap();
    path
}

const TWO_CIRCLES: &str = "header n=2 m=4 l=2\nF 2 2\nF 1 1\nF 1 1\nF 3 1\nF 3 1\n";
const CUP: &str = "header n=2 m=2 l=1\nF 1 1\n";
const CIRCLE: &str = "header n=2 m=2 l=1\nF 1 1\nF 1 1\n";
const UNKNOT: &str =
    "header n=2 m=5 l=2\nF 2 2\nF 3 1\nF 4 1\nF 1 1\nT- 2\nF 1 1\nF 2 1\nF 4 1\n";

#[test]
fn eval_two_circles() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_file(&dir, "w.web", TWO_CIRCLES);
    let r = slnweb(&["eval", f.to_str().unwrap()]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert_eq!(r.out, "q^2 + 2 + q^-2\n");
}

#[test]
fn shapes_and_flows_of_cup() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_file(&dir, "cup.web", CUP);
    let shapes = slnweb(&["shapes", f.to_str().unwrap()]);
    assert_eq!(shapes.code, 0);
    assert_eq!(shapes.out, "[1][0] : q\n[0][1] : 1\n");

    let flows = slnweb(&["flows", f.to_str().unwrap()]);
    assert_eq!(flows.code, 0);
    assert_eq!(flows.out, "({1},{2}) : -q\n({2},{1}) : 1\n");
}

#[test]
fn canonical_of_circle() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_file(&dir, "circle.web", CIRCLE);
    let r = slnweb(&["canonical", f.to_str().unwrap()]);
    assert_eq!(r.code, 0);
    assert_eq!(r.out, "[2][1]\ndegree: -1\n");
}

#[test]
fn dual_canonical_verdicts() {
    let dir = tempfile::tempdir().unwrap();
    let cup = write_file(&dir, "cup.web", CUP);
    let yes = slnweb(&["dual-canonical", cup.to_str().unwrap()]);
    assert_eq!(yes.code, 0);
    assert_eq!(yes.out, "dual-canonical\n");

    let circle = write_file(&dir, "circle.web", CIRCLE);
    let no = slnweb(&["dual-canonical", circle.to_str().unwrap()]);
    assert_eq!(no.code, 1);
    assert!(no.out.starts_with("not dual-canonical"), "{}", no.out);
}

#[test]
fn pair_of_cups() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_file(&dir, "cup.web", CUP);
    let r = slnweb(&["pair", f.to_str().unwrap(), f.to_str().unwrap()]);
    assert_eq!(r.code, 0);
    assert_eq!(r.out, "q^2 + 1\n");
}

#[test]
fn link_and_rt_of_unknot() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_file(&dir, "unknot.link", UNKNOT);
    let link = slnweb(&["link", f.to_str().unwrap()]);
    assert_eq!(link.code, 0);
    assert_eq!(link.out, "q^3 + q\n");
    let rt = slnweb(&["rt", f.to_str().unwrap()]);
    assert_eq!(rt.code, 0);
    assert_eq!(rt.out, "q + q^-1\n");
}

#[test]
fn parallel_output_is_identical() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_file(&dir, "unknot.link", UNKNOT);
    let seq = slnweb(&["link", f.to_str().unwrap()]);
    let par = slnweb(&["--jobs", "4", "link", f.to_str().unwrap()]);
    assert_eq!(seq.code, 0);
    assert_eq!(par.code, 0);
    assert_eq!(seq.out, par.out);
}

#[test]
fn compile_braid_round_trips_into_link_and_rt() {
    let dir = tempfile::tempdir().unwrap();
    let compiled = slnweb(&[
        "compile-braid",
        "--n",
        "3",
        "--colors",
        "1,2",
        "1+",
        "1+",
    ]);
    assert_eq!(compiled.code, 0, "{}", compiled.err);
    assert!(compiled.out.starts_with("header n=3"));
    let f = write_file(&dir, "hopf.link", &compiled.out);
    let link = slnweb(&["link", f.to_str().unwrap()]);
    assert_eq!(link.code, 0, "{}", link.err);
    // the compiled closure evaluates to the Hopf polynomial
    let two: slnweb::LaurentPoly = "q + q^-1".parse().unwrap();
    let three: slnweb::LaurentPoly = "q^2 + 1 + q^-2".parse().unwrap();
    let expected = two
        .checked_mul(&two)
        .unwrap()
        .checked_mul(&three)
        .unwrap()
        .scale(slnweb::Sign::Plus, -2)
        .unwrap()
        .checked_add(
            &two.checked_mul(&three)
                .unwrap()
                .checked_mul(&slnweb::LaurentPoly::constant(2))
                .unwrap()
                .scale(slnweb::Sign::Minus, -1)
                .unwrap(),
        )
        .unwrap()
        .checked_add(&three.checked_mul(&three).unwrap())
        .unwrap();
    assert_eq!(link.out.trim(), expected.to_string());
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    // parse error: malformed directive
    let bad = write_file(&dir, "bad.web", "header n=2 m=2 l=1\nF one 1\n");
    let r = slnweb(&["eval", bad.to_str().unwrap()]);
    assert_eq!(r.code, 2);
    assert!(r.err.contains("error"));
    assert!(r.out.is_empty());

    // semantic error: a killed program
    let killed = write_file(&dir, "killed.web", "header n=2 m=2 l=1\nF 1 3\n");
    let r = slnweb(&["eval", killed.to_str().unwrap()]);
    assert_eq!(r.code, 3);

    // resource guard
    let wide = write_file(
        &dir,
        "wide.web",
        "header n=4 m=6 l=2\nF 2 1\nF 1 1\nF 3 1\nF 2 1\n",
    );
    let r = slnweb(&["--max-states", "1", "eval", wide.to_str().unwrap()]);
    assert_eq!(r.code, 4);
}
