use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_ramsey-lab");
// C_10, built by hand: vertex i adjacent to i+1 mod 10.
const C10: &str = "IhCGGC@_G";
const CLAW: &str = "Cs";

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).env_remove("RAMSEY_LAB_THREADS").output().unwrap()
}

fn run_stdin(args: &[&str], input: &[u8]) -> Output {
    let mut child = Command::new(BIN)
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input).unwrap();
    child.wait_with_output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stdout)))
}

fn verify(doc: &[u8]) -> (i32, String) {
    let o = run_stdin(&["verify"], doc);
    (code(&o), String::from_utf8_lossy(&o.stdout).into_owned())
}

#[test]
fn c10_is_oriented_by_a_suspended_path() {
    let o = run(&["trichotomy", "-g", C10, "--q", "5", "--ell", "2"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["kind"], "trichotomy");
    assert_eq!(v["certificate"]["variant"], "suspended_path");
    assert!(v["certificate"]["path"].as_array().unwrap().len() >= 5);
    assert_eq!(v["manifest"]["subcommand"], "trichotomy");
    assert_eq!(v["manifest"]["input_digests"]["graph"].as_str().unwrap().len(), 64);
    assert_eq!(verify(&o.stdout).0, 0);
}

#[test]
fn claw_against_two_edges() {
    let o = run(&["ramsey", "-g", CLAW, "--t", "2", "--m", "2"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["result"]["value"], 5);
    assert_eq!(verify(&o.stdout).0, 0);
}

#[test]
fn extremal_output_verifies_through_a_pipe() {
    let o = run(&["extremal", "--n", "4", "--m", "3", "--t", "2"]);
    assert_eq!(code(&o), 0);
    let (c, text) = verify(&o.stdout);
    assert_eq!(c, 0, "{text}");
    assert!(text.starts_with("PASS extremal"));
}

#[test]
fn arrows_exit_codes() {
    // All-red K_3 has no claw and no blue edge.
    let no = run(&["arrows", "-g", CLAW, "--t", "1", "--m", "2", "--N", "3"]);
    assert_eq!(code(&no), 1);
    assert_eq!(json(&no)["result"]["verdict"], "not_arrows");
    assert_eq!(verify(&no.stdout).0, 0);

    let yes = run(&["arrows", "-g", CLAW, "--t", "2", "--m", "2", "--N", "5"]);
    assert_eq!(code(&yes), 0);
    assert_eq!(verify(&yes.stdout).0, 0);

    let unknown = run(&["arrows", "-g", CLAW, "--t", "2", "--m", "3", "--N", "9", "--budget-nodes", "3"]);
    assert_eq!(code(&unknown), 3);
    assert_eq!(json(&unknown)["result"]["verdict"], "unknown");
    assert_eq!(verify(&unknown.stdout).0, 3);
}

#[test]
fn every_engine_agrees() {
    let mut verdicts = Vec::new();
    for sym in ["none", "first-vertex", "canonical"] {
        for order in ["lex", "colex"] {
            let o = run(&[
                "arrows", "-g", "Ch", "--t", "1", "--m", "3", "--N", "6", "--symmetry", sym, "--edge-order", order,
            ]);
            verdicts.push(code(&o));
        }
    }
    assert!(verdicts.windows(2).all(|w| w[0] == w[1]), "{verdicts:?}");
}

#[test]
fn reruns_give_identical_verdicts() {
    let args = ["arrows", "-g", "Ch", "--t", "1", "--m", "3", "--N", "7"];
    let a = json(&run(&args));
    let b = json(&run(&args));
    assert_eq!(a["result"]["verdict"], b["result"]["verdict"]);
    assert_eq!(a["manifest"]["parameters"], b["manifest"]["parameters"]);
}

#[test]
fn bounds_with_and_without_epsilon() {
    let plain = run(&["bounds", "-g", C10, "--m", "3", "--t", "2"]);
    assert_eq!(code(&plain), 0);
    assert!(json(&plain)["epsilon"].is_null());
    assert_eq!(verify(&plain.stdout).0, 0);

    let eps = run(&["bounds", "-g", C10, "--m", "3", "--t", "2", "--epsilon", "1/10"]);
    assert_eq!(code(&eps), 0);
    let v = json(&eps);
    assert_eq!(v["epsilon"], "1/10");
    assert!(v["epsilon_note"].is_string());
    assert_eq!(verify(&eps.stdout).0, 0);

    assert_eq!(code(&run(&["bounds", "-g", C10, "--m", "3", "--t", "2", "--epsilon", "0"])), 2);
}

#[test]
fn tampered_certificates_fail() {
    let mut ext = json(&run(&["extremal", "--n", "4", "--m", "3", "--t", "2"]));
    // All blue: K_7 then holds 2K_3.
    ext["coloring"]["red"] = serde_json::json!([]);
    assert_eq!(verify(ext.to_string().as_bytes()).0, 1);

    let mut tri = json(&run(&["trichotomy", "-g", C10, "--q", "5", "--ell", "2"]));
    tri["certificate"]["path"] = serde_json::json!([0, 2, 4, 6, 8]);
    assert_eq!(verify(tri.to_string().as_bytes()).0, 1);

    let mut ram = json(&run(&["ramsey", "-g", CLAW, "--t", "2", "--m", "2"]));
    ram["result"]["value"] = serde_json::json!(4);
    ram["result"]["upper"] = serde_json::json!(4);
    assert_eq!(verify(ram.to_string().as_bytes()).0, 1);

    let mut bnd = json(&run(&["bounds", "-g", C10, "--m", "3", "--t", "2"]));
    bnd["rows"][0]["value"] = serde_json::json!("999");
    assert_ne!(verify(bnd.to_string().as_bytes()).0, 0);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&run(&["trichotomy", "-g", "!!", "--q", "3", "--ell", "2"])), 2);
    // Two isolated vertices: not connected.
    assert_eq!(code(&run(&["trichotomy", "-g", "A?", "--q", "3", "--ell", "2"])), 2);
    // A single edge has k = 1 and ell = 2, so alpha is not positive.
    assert_eq!(code(&run(&["trichotomy", "-g", "A_", "--q", "2", "--ell", "2"])), 2);
    assert_eq!(code(&run(&["arrows", "-g", CLAW, "--t", "0", "--m", "2", "--N", "3"])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
    assert_eq!(code(&run(&["extremal", "--n", "0", "--m", "2", "--t", "1"])), 2);
    assert_eq!(verify(b"{\"kind\": \"nope\"}").0, 2);
    let o = Command::new(BIN)
        .args(["gen", "--n", "3"])
        .env("RAMSEY_LAB_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(code(&o), 2);
}

#[test]
fn graph_from_file_and_out_flag() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("g.g6");
    std::fs::write(&input, format!("# a cycle\n\n{C10}\n")).unwrap();
    let out = dir.path().join("cert.json");
    let o = run(&[
        "trichotomy",
        "-g",
        &format!("@{}", input.display()),
        "--q",
        "5",
        "--ell",
        "2",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    let v = verify_file(out.to_str().unwrap());
    assert_eq!(v["status"], "pass");
}

fn verify_file(path: &str) -> Value {
    let o = run(&["verify", "--json", path]);
    assert_eq!(code(&o), 0);
    json(&o)
}

#[test]
fn gen_counts() {
    let lines = |args: &[&str]| String::from_utf8(run(args).stdout).unwrap().lines().count();
    assert_eq!(lines(&["gen", "--n", "5"]), 21);
    assert_eq!(lines(&["gen", "--n", "4", "--family", "all"]), 11);
    assert_eq!(lines(&["gen", "--n", "7", "--family", "trees"]), 11);
    assert_eq!(lines(&["gen", "--n", "5", "--k-max", "1"]), 3);
}

#[test]
fn corpus_is_deterministic_and_passes() {
    for suite in ["two-edge", "burr", "trees", "replay"] {
        let a = run(&["corpus", suite, "--n", "5"]);
        let b = run(&["corpus", suite, "--n", "5"]);
        assert_eq!(code(&a), 0, "{suite}: {}", String::from_utf8_lossy(&a.stderr));
        assert_eq!(a.stdout, b.stdout, "{suite}");
    }
    let o = run(&["corpus", "trichotomy", "--n", "6", "--json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["failures"], 0);
    assert!(v["rows"].as_array().unwrap().len() > 100);
}
