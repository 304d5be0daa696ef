use std::io::Write;
use std::process::Command;

use bscone::facets::upper_facet_equation;
use bscone::json;
use bscone::pure::hk_pure_table;
use bscone::supernatural::supernatural_table;
use bscone::{Betti, Cohomology, DegreeSequence, Functional, Rational, RootSequence, Scalar};
use bscone_cli::{render, run, RenderMode, Renderable};
use serde_json::Value;

struct Outcome {
    code: i32,
    stdout: String,
    stderr: String,
}

fn call(args: &[&str], stdin: &str) -> Outcome {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("bscone").chain(args.iter().copied());
    let code = run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
    Outcome { code, stdout: String::from_utf8(out).unwrap(), stderr: String::from_utf8(err).unwrap() }
}

fn b_x(x: i64) -> Betti {
    Betti::from_display_rows(7, 0, &[&[1], &[0, 10, 16, x, 0, 0], &[0, 0, x, 16, 10, 0], &[0, 0, 0, 0, 0, 1]])
}

fn write_temp(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    std::fs::File::create(&path).unwrap().write_all(text.as_bytes()).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn decompose_b11_succeeds() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_temp(&dir, "b11.json", &json::betti_to_json(&b_x(11)));
    let o = call(&["--output", "json", "decompose", "betti", &path], "");
    assert_eq!(o.code, 0, "{}", o.stderr);
    let v: Value = serde_json::from_str(&o.stdout).unwrap();
    let coeffs: Vec<&str> = v["parts"].as_array().unwrap().iter().map(|p| p["coeff"].as_str().unwrap()).collect();
    assert_eq!(coeffs, ["11/90", "1/45", "11/90"]);
    assert_eq!(v["parts"][1]["skeleton"], serde_json::json!([0, 2, 3, 5, 6, 8]));
}

#[test]
fn decompose_b12_is_not_in_cone() {
    let o = call(&["decompose", "betti", "-"], &json::betti_to_json(&b_x(12)));
    assert_eq!(o.code, 2);
    let report: Value = serde_json::from_str(o.stderr.trim()).unwrap();
    assert_eq!(report["error"], "NotInCone");
    assert!(o.stdout.is_empty());
}

#[test]
fn facet_both_prints_u() {
    let o = call(&["--output", "text", "facet", "--degrees", "-1,0,2,3", "--tau", "1", "--rows", "-5,2", "--method", "both"], "");
    assert_eq!(o.code, 0, "{}", o.stderr);
    let rows: Vec<Vec<&str>> = o.stdout.lines().skip(1).map(|l| l.split_whitespace().skip(1).collect()).collect();
    assert_eq!(rows[0], ["32", "-21", "12", "-5"]);
    assert_eq!(rows[3], ["5", ".", "-3", "4"]);
    assert_eq!(rows[4], [".", "3", "-4", "3"]);
    assert!(rows[5..].iter().all(|r| r.iter().all(|c| *c == ".")));
}

#[test]
fn facet_json_matches_library() {
    let o = call(&["--output", "json", "facet", "--degrees", "-1,0,2,3", "--tau", "1", "--rows", "-5,2"], "");
    let f = DegreeSequence::new(vec![-1, 0, 2, 3]).unwrap();
    let u: Functional = upper_facet_equation(&f, 1, (-5, 2)).unwrap();
    assert_eq!(o.stdout.trim(), json::functional_to_json(&u));
    let parsed: Functional = json::functional_from_json(&o.stdout).unwrap();
    assert_eq!(parsed, u);
}

#[test]
fn pure_output_is_the_library_table() {
    let o = call(&["--output", "json", "pure", "--degrees", "0,2,3,4,6,8", "--n", "5"], "");
    let d = DegreeSequence::new(vec![0, 2, 3, 4, 6, 8]).unwrap();
    let b: Betti = hk_pure_table(&d, 5).unwrap();
    assert_eq!(o.stdout.trim(), json::betti_to_json(&b));
    let o = call(&["--output", "json", "pure", "--degrees", "0,2,3,4,6,8", "--generators"], "");
    let v: Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["generators"], "35");
}

#[test]
fn b0_grid() {
    let b: Betti = hk_pure_table(&DegreeSequence::new(vec![0, 2, 3, 5, 6, 8]).unwrap(), 7).unwrap();
    let text = render(Renderable::Betti(&b), RenderMode::Display);
    let body: Vec<Vec<&str>> = text.lines().skip(1).map(|l| l.split_whitespace().skip(1).filter(|c| *c != ".").collect()).collect();
    assert_eq!(body, vec![vec!["1"], vec!["10", "16"], vec!["16", "10"], vec!["1"]]);
}

#[test]
fn supernatural_grid_layout() {
    let o = call(&["--output", "text", "supernatural", "--roots", "3,-1,-4", "--rank", "3", "--window", "-7,5"], "");
    assert_eq!(o.code, 0);
    let expected = [
        "90 45 16  . . .  . .  .  . | 3",
        " .  .  .  6 5 .  . .  .  . | 2",
        " .  .  .  . . 6 10 9  .  . | 1",
        " .  .  .  . . .  . . 20 54 | 0",
        "-4 -3 -2 -1 0 1  2 3  4  5 | d\\i",
    ];
    assert_eq!(o.stdout.lines().collect::<Vec<_>>(), expected);
}

#[test]
fn json_render_round_trips() {
    let z = RootSequence::new(vec![3, -1, -4]).unwrap();
    let c: Cohomology = supernatural_table(&z, &Rational::from_int(3), (-7, 5)).unwrap();
    let once = render(Renderable::Cohomology(&c), RenderMode::Json);
    let back: Cohomology = json::cohomology_from_json(&once).unwrap();
    assert_eq!(render(Renderable::Cohomology(&back), RenderMode::Json), once);
    let b = b_x(11);
    let once = render(Renderable::Betti(&b), RenderMode::Json);
    let back: Betti = json::betti_from_json(&once).unwrap();
    assert_eq!(render(Renderable::Betti(&back), RenderMode::Json), once);
}

#[test]
fn exit_codes() {
    assert_eq!(call(&["frobnicate"], "").code, 1);
    assert_eq!(call(&["pure", "--degrees", "0,a"], "").code, 1);
    assert_eq!(call(&["decompose", "betti", "-"], "not json").code, 1);
    let narrow = call(&["supernatural", "--roots", "3,-1,-4", "--window", "0,1"], "");
    assert_eq!(narrow.code, 3, "{}", narrow.stderr);
    assert_eq!(call(&["facet", "--degrees", "0,1,2", "--tau", "0", "--rows", "0,1"], "").code, 1);
    assert_eq!(call(&["--help"], "").code, 0);
}

#[test]
fn pair_and_bounds() {
    let dir = tempfile::tempdir().unwrap();
    let b = write_temp(&dir, "b9.json", &json::betti_to_json(&b_x(9)));
    let o = call(&["--output", "json", "bounds", "multiplicity", &b, "--codim", "5", "--normalized"], "");
    let v: Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!((v["lower"].as_str(), v["upper"].as_str(), v["multiplicity"].as_str()), (Some("48/5"), Some("16"), Some("12")));
    assert_eq!(v["brackets"], true);

    let z = RootSequence::new(vec![3, -1, -4]).unwrap();
    let c: Cohomology = supernatural_table(&z, &Rational::from_int(3), (-7, 5)).unwrap();
    let cpath = write_temp(&dir, "s.json", &json::cohomology_to_json(&c));
    let o = call(&["--output", "json", "bounds", "slope", &cpath], "");
    let v: Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!([&v["lower"], &v["mu"], &v["upper"]], ["-4/3", "-4/3", "-4/3"]);

    let k1 = Betti::from_entries(2, [(1, 0, Rational::from_int(2)), (2, 1, Rational::from_int(1))]);
    let k1 = write_temp(&dir, "k1.json", &json::betti_to_json(&k1));
    let mut point = Cohomology::new(2, (-3, 3), true).unwrap();
    point.set(0, 0, Rational::from_int(1)).unwrap();
    let ppath = write_temp(&dir, "p.json", &json::cohomology_to_json(&point));
    let o = call(&["--output", "json", "pair", &k1, &ppath], "");
    assert_eq!(o.code, 0, "{}", o.stderr);
    let v: Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["value"], "-2");
    let koszul = Betti::from_entries(2, [(0, 0, Rational::from_int(1)), (1, 1, Rational::from_int(2)), (2, 2, Rational::from_int(1))]);
    let koszul = write_temp(&dir, "k.json", &json::betti_to_json(&koszul));
    let o = call(&["bounds", "strand", &koszul, "--p", "1", "--c", "2"], "");
    assert_eq!(o.code, 1);
}

#[test]
fn validate_reports() {
    let o = call(&["--output", "json", "validate", "-"], &json::betti_to_json(&b_x(11)));
    assert_eq!(o.code, 0);
    let bad = Betti::from_entries(3, [(0, 0, Rational::from_int(-1))]);
    let o = call(&["validate", "-"], &json::betti_to_json(&bad));
    assert_eq!(o.code, 1);
    assert!(o.stderr.contains("negative entry"));
}

#[test]
fn binary_runs() {
    let o = Command::new(env!("CARGO_BIN_EXE_bscone"))
        .args(["--output", "text", "rank-bounds", "--roots", "4,3,0,-6,-7,-9"])
        .output()
        .unwrap();
    assert!(o.status.success());
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.contains("gcd bound: 15") && text.contains("schur: 1216215"));
    let o = Command::new(env!("CARGO_BIN_EXE_bscone")).args(["facet", "--degrees", "0,1,2", "--tau", "0", "--rows", "0,1"]).output().unwrap();
    assert_eq!(o.status.code(), Some(1));
}
