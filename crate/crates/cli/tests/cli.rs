use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use omega_lie::catalog::get;
use omega_lie::derive::tailed_derivations;
use omega_lie::{OmegaAlgebra, Scalar, TailedDerivation};
use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_omega-lie"));
    c.env_remove("OMEGA_LIE_BUDGET");
    c
}

fn run(args: &[&str], stdin: Option<&[u8]>) -> Output {
    let mut cmd = bin();
    cmd.args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped());
    let mut child = cmd.spawn().unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or_default()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn write(dir: &Path, name: &str, body: &[u8]) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

fn catalog(name: &str, params: &[&str]) -> Vec<u8> {
    let mut args = vec!["catalog", "get", name];
    for p in params {
        args.extend(["--param", p]);
    }
    let o = run(&args, None);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    o.stdout
}

fn s(n: i64) -> Scalar {
    Scalar::from_int(n)
}

const FAMILY1: &str = r#"{"algebra": "l1.json", "dim": 2,
  "rho": [[["3","1"],["0","2"]], [["1","1"],["0","1"]], [["0","0"],["0","0"]]]}"#;
const FAMILY2: &str = r#"{"algebra": "l1.json", "dim": 2,
  "rho": [[["2","1"],["0","2"]], [["1","0"],["0","1"]], [["0","0"],["0","0"]]]}"#;

#[test]
fn catalog_pipes_into_validate() {
    let l1 = catalog("L1", &[]);
    let o = run(&["validate"], Some(&l1));
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["valid"], true);
    assert_eq!(v["is_lie"], false);
}

#[test]
fn tder_of_sl2_has_three_untailed_elements() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "sl2.json", &catalog("sl2", &[]));
    let o = run(&["tder", "--algebra", path.to_str().unwrap()], None);
    assert_eq!(code(&o), 0);
    let v: Vec<TailedDerivation> = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v.len(), 3);
    assert!(v.iter().all(|t| t.tail.is_zero()));
    let raw: Value = serde_json::from_slice(&o.stdout).unwrap();
    for t in raw.as_array().unwrap() {
        assert!(t["d"].as_array().unwrap().iter().all(|x| x == "0"));
    }
}

#[test]
fn mutated_constant_exits_one_with_triple() {
    let dir = tempfile::tempdir().unwrap();
    let mut v: Value = serde_json::from_slice(&catalog("L1", &[])).unwrap();
    v["c"][0][1][1] = "2".into();
    v["c"][1][0][1] = "-2".into();
    let path = write(dir.path(), "broken.json", v.to_string().as_bytes());
    let o = run(&["validate", path.to_str().unwrap()], None);
    assert_eq!(code(&o), 1);
    let r: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(r["violations"][0]["triple"], serde_json::json!([0, 1, 2]));
    assert_eq!(r["violations"][0]["labels"], serde_json::json!(["x", "y", "z"]));
}

#[test]
fn emitted_json_round_trips() {
    let a: OmegaAlgebra = serde_json::from_slice(&catalog("C", &["2"])).unwrap();
    assert_eq!(a, get("C", &[s(2)]).unwrap());
    let a: OmegaAlgebra = serde_json::from_slice(&catalog("heisenberg", &["2"])).unwrap();
    assert_eq!(a, get("heisenberg", &[s(2)]).unwrap());

    let gl2 = catalog("gl", &["2"]);
    let o = run(&["tder"], Some(&gl2));
    let t: Vec<TailedDerivation> = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(t, tailed_derivations(&get("gl", &[s(2)]).unwrap()));

    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "l1.json", &catalog("L1", &[]));
    let f1 = write(dir.path(), "f1.json", FAMILY1.as_bytes());
    let o = run(&["module", "exterior", f1.to_str().unwrap(), "--k", "2", "--lambda", "0,1,0"], None);
    assert_eq!(code(&o), 0);
    let wedge = write(dir.path(), "wedge.json", &o.stdout);
    let o = run(&["module", "validate", wedge.to_str().unwrap()], None);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let r: omega_lie::Representation = serde_json::from_slice(&std::fs::read(&wedge).unwrap()).unwrap();
    assert_eq!(serde_json::to_vec(&r).unwrap(), std::fs::read(&wedge).unwrap().trim_ascii_end());
}

#[test]
fn output_is_byte_identical_across_runs() {
    let b = catalog("Btilde", &[]);
    for args in [&["degree"][..], &["tder"], &["ideals", "--dim", "2"], &["multiplicative"], &["omega-kernel"]] {
        let first = run(args, Some(&b));
        let second = run(args, Some(&b));
        assert_eq!(first.stdout, second.stdout, "{args:?}");
        assert!(!first.stdout.is_empty());
    }
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "l1.json", &catalog("L1", &[]));
    let f1 = write(dir.path(), "f1.json", FAMILY1.as_bytes());
    let args = ["module", "submodule", f1.to_str().unwrap()];
    assert_eq!(run(&args, None).stdout, run(&args, None).stdout);
}

#[test]
fn extend_then_restrict() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "n2.json", &catalog("nonabelian2", &[]));
    let t = write(dir.path(), "t.json", br#"{"D": [["1","0"],["0","0"]], "d": ["1","0"]}"#);
    let o = run(&["extend", g.to_str().unwrap(), "--tder", t.to_str().unwrap()], None);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let l: OmegaAlgebra = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(l.permute(&[2, 0, 1]).unwrap(), get("L1", &[]).unwrap());
    let o = run(&["restrict", "--span", "y,z", "--x", "x"], Some(&o.stdout));
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let r: Value = serde_json::from_slice(&o.stdout).unwrap();
    let back: TailedDerivation = serde_json::from_value(r["derivation"].clone()).unwrap();
    let orig: TailedDerivation = serde_json::from_slice(&std::fs::read(&t).unwrap()).unwrap();
    assert_eq!(back, orig);
}

#[test]
fn module_commands() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "l1.json", &catalog("L1", &[]));
    let f1 = write(dir.path(), "f1.json", FAMILY1.as_bytes());
    let f2 = write(dir.path(), "f2.json", FAMILY2.as_bytes());
    let (f1, f2) = (f1.to_str().unwrap(), f2.to_str().unwrap());

    let o = run(&["module", "submodule", f1], None);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["result"], "proper_submodule");
    assert_eq!(v["subspace"]["basis"], serde_json::json!([["1", "0"]]));

    assert_eq!(code(&run(&["module", "iso", f1, f2], None)), 1);
    assert_eq!(code(&run(&["module", "iso", f1, f1], None)), 0);
    // Two weights for x, so no single (lambda, partition).
    assert_eq!(code(&run(&["module", "classify", f1, "--h", "x"], None)), 1);

    let cochain = write(dir.path(), "f.json", br#"[["1","0","2"],["0","1","-1"]]"#);
    let o = run(
        &["module", "defect", f1, "--cochain", cochain.to_str().unwrap(), "--x", "x", "--y", "y", "--z", "z"],
        None,
    );
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["defect"], serde_json::json!(["-2", "1"]));
}

#[test]
fn impossible_z_action_has_unit_groebner_basis() {
    let dir = tempfile::tempdir().unwrap();
    let l1 = write(dir.path(), "l1.json", &catalog("L1", &[]));
    let fixed = write(dir.path(), "fixed.json", br#"{"matrices": {"z": [["0","1"],["0","0"]]}}"#);
    let o = run(
        &["module", "system", l1.to_str().unwrap(), "--dim", "2", "--fixed", fixed.to_str().unwrap(), "--solve"],
        None,
    );
    assert_eq!(code(&o), 1);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["polys"].as_array().unwrap().len(), 1);

    let sys = run(&["module", "system", l1.to_str().unwrap(), "--dim", "1"], None);
    assert_eq!(code(&sys), 0);
    let o = run(&["groebner"], Some(&sys.stdout));
    assert_eq!(code(&o), 0);
}

#[test]
fn exit_codes_for_errors() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.json", b"{\"dim\": 2,");
    let o = run(&["validate", bad.to_str().unwrap()], None);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("bad.json"));
    assert_eq!(code(&run(&["no-such-command"], None)), 2);
    assert_eq!(code(&run(&["catalog", "get", "C", "--param", "0"], None)), 2);
    assert_eq!(code(&run(&["validate", "/nonexistent/x.json"], None)), 2);

    let l1 = write(dir.path(), "l1.json", &catalog("L1", &[]));
    let mut cmd = bin();
    let o = cmd
        .env("OMEGA_LIE_BUDGET", "1")
        .args(["module", "system", l1.to_str().unwrap(), "--dim", "2", "--solve"])
        .output()
        .unwrap();
    assert_eq!(code(&o), 3);
    let o = bin().env("OMEGA_LIE_BUDGET", "many").args(["degree", l1.to_str().unwrap()]).output().unwrap();
    assert_eq!(code(&o), 2);
}

#[test]
fn checked_negatives_exit_one() {
    let a1 = catalog("A", &["1"]);
    assert_eq!(code(&run(&["degree"], Some(&a1))), 1);
    assert_eq!(code(&run(&["soluble"], Some(&a1))), 1);
    let l1 = catalog("L1", &[]);
    assert_eq!(code(&run(&["soluble"], Some(&l1))), 0);
    assert_eq!(code(&run(&["multiplicative", "--form", "0,1,1"], Some(&l1))), 1);
    assert_eq!(code(&run(&["multiplicative", "--form", "5,1,0"], Some(&l1))), 0);
}

#[test]
fn text_output() {
    let o = run(&["omega-kernel", "--output", "text"], Some(&catalog("L1", &[])));
    let t = String::from_utf8(o.stdout).unwrap();
    assert!(t.contains("kernel span{(0, 0, 1)}"), "{t}");
    let o = run(&["catalog", "list", "--output", "text"], None);
    assert!(String::from_utf8(o.stdout).unwrap().lines().any(|l| l.starts_with("Btilde")));
}
