use std::process::{Command, Output};

fn hsalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hsalg")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("valid json")
}

#[test]
fn hs_dim_degree_four() {
    let out = hsalg(&["weyl", "hs-dim", "--n", "3", "--deg", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["schema"], "hsalg-report/1");
    assert_eq!(v["status"], "pass");
    assert_eq!(v["payload"]["dims"]["deg2"], 10);
    assert_eq!(v["payload"]["dims"]["deg4"], 35);
}

#[test]
fn odd_n_spin_one_singleton_is_invalid() {
    let out = hsalg(&["young", "singleton", "--n", "3", "--s", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}

#[test]
fn scalar_singleton_null_vector() {
    let out = hsalg(&["verma", "null", "--n", "3", "--level", "2", "--e0", "1/2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["payload"]["count"], 1);
}

#[test]
fn injected_fault_exits_one_with_counterexample() {
    let out = hsalg(&["algebra", "check", "--name", "conformal", "--n", "4", "--inject-fault"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["status"], "fail");
    assert!(v["counterexample"].as_str().unwrap().contains("Jacobi"));
}

#[test]
fn float_arguments_are_rejected() {
    let out = hsalg(&["verma", "gram", "--n", "3", "--level", "1", "--e0", "0.5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_subcommand_is_usage_error() {
    assert_eq!(hsalg(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn output_is_byte_stable() {
    let args = ["young", "hs", "--n", "4", "--s", "1/2", "--max-boxes", "6"];
    assert_eq!(hsalg(&args).stdout, hsalg(&args).stdout);
    let args = ["--seed", "7", "conformal", "orbit", "--n", "4", "--map", "lorentz", "--point", "1,0,2,1/3"];
    let a = hsalg(&args);
    assert_eq!(a.status.code(), Some(0), "{}", String::from_utf8_lossy(&a.stderr));
    assert_eq!(a.stdout, hsalg(&args).stdout);
}

#[test]
fn csv_and_text_formats() {
    let out = hsalg(&["--format", "csv", "young", "dim", "--group", "gl", "--N", "3", "--diagram", "[2,1]"]);
    let s = String::from_utf8(out.stdout).unwrap();
    assert_eq!(s, "group,N,diagram,dim\nGL,3,\"[2,1]\",8\n");
    let out = hsalg(&["--format", "text", "super", "check", "--n", "3", "--s", "1", "--which", "osp"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().ends_with("status: pass\n"));
}

#[test]
fn worker_count_is_validated() {
    let out = Command::new(env!("CARGO_BIN_EXE_hsalg"))
        .env("HSALG_WORKERS", "zero")
        .args(["young", "dim", "--group", "o", "--N", "5", "--diagram", "[1]"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn quick_verify_passes() {
    let out = Command::new(env!("CARGO_BIN_EXE_hsalg"))
        .env("HSALG_WORKERS", "2")
        .args(["verify-all", "--profile", "quick"])
        .output()
        .unwrap();
    let v = json(&out);
    assert_eq!(out.status.code(), Some(0), "{v}");
    assert_eq!(v["payload"]["criteria"].as_array().unwrap().len(), 13);
    assert!(v["payload"]["criteria"][0].get("seconds").is_none());
}
