use std::process::{Command, Output};

fn orbiseif(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orbiseif"))
        .args(args)
        .env("ORBISEIF_WORKERS", "2")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn compute_icosahedral_json() {
    let o = orbiseif(&["compute", "--family", "9", "-m", "1", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["euler"]["num"], -1);
    assert_eq!(v["euler"]["den"], 30);
    assert_eq!(v["base"]["kind"], "S2");
    assert_eq!(v["base"]["cones"], serde_json::json!([2, 3, 5]));
    for key in [
        "family",
        "params",
        "base",
        "euler",
        "invariants",
        "underlying",
        "singularComponents",
        "provenance",
    ] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    let inv = &v["invariants"][0];
    for key in ["num", "den", "normalizedNum", "index", "location"] {
        assert!(inv.get(key).is_some(), "missing invariants.{key}");
    }
}

#[test]
fn compute_projective_space() {
    let o = orbiseif(&[
        "compute", "--family", "1", "-m", "1", "-n", "1", "-r", "1", "-s", "1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("L(2,1)"));
}

#[test]
fn invalid_parameters_exit_one() {
    let o = orbiseif(&[
        "compute", "--family", "1p", "-m", "2", "-n", "1", "-r", "2", "-s", "1",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("m must be odd"));
    assert_eq!(
        orbiseif(&["compute", "--family", "99"]).status.code(),
        Some(1)
    );
    assert_eq!(orbiseif(&["frobnicate"]).status.code(), Some(1));
}

#[test]
fn non_fibered_family_exits_three() {
    assert_eq!(
        orbiseif(&["compute", "--family", "26pp"]).status.code(),
        Some(3)
    );
}

#[test]
fn mirror_negates_euler() {
    let plain = orbiseif(&["compute", "--family", "2", "-m", "2", "-n", "3", "--json"]);
    let mirror = orbiseif(&[
        "compute", "--family", "2", "-m", "2", "-n", "3", "--json", "--mirror",
    ]);
    let a: serde_json::Value = serde_json::from_str(&stdout(&plain)).unwrap();
    let b: serde_json::Value = serde_json::from_str(&stdout(&mirror)).unwrap();
    assert_eq!(a["euler"]["num"], -b["euler"]["num"].as_i64().unwrap());
}

#[test]
fn output_is_deterministic() {
    let args = [
        "compute", "--family", "11p", "-m", "3", "-n", "5", "-r", "4", "-s", "1", "--json",
    ];
    assert_eq!(orbiseif(&args).stdout, orbiseif(&args).stdout);
}

#[test]
fn enumerate_lists_orders_and_fibrations() {
    let o = orbiseif(&["enumerate", "--max-order", "24", "--families", "9"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("0 groups"));

    let o = orbiseif(&["enumerate", "--max-order", "8", "--families", "1", "--json"]);
    let rows: Vec<serde_json::Value> = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(!rows.is_empty());
    assert!(rows.iter().all(|r| r["phiOrder"].as_u64().unwrap() <= 8));

    let o = orbiseif(&[
        "enumerate",
        "--max-order",
        "120",
        "--families",
        "30,31",
        "--json",
    ]);
    let rows: Vec<serde_json::Value> = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(rows
        .iter()
        .any(|r| r["family"] == "31" && r["fibered"] == false));
    assert!(rows.iter().all(|r| r["family"] != "30"));
}

#[test]
fn verify_small_range() {
    let o = orbiseif(&[
        "verify",
        "--max-order",
        "48",
        "--families",
        "1,1p,11,11p,table4",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("0 failed"));
}

#[test]
fn verify_rejects_bad_bounds() {
    assert_eq!(
        orbiseif(&["verify", "--max-order", "0"]).status.code(),
        Some(1)
    );
    let o = Command::new(env!("CARGO_BIN_EXE_orbiseif"))
        .args(["verify", "--max-order", "8"])
        .env("ORBISEIF_WORKERS", "zero")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
}
