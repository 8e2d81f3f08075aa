use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/data").join(name)
}

fn toupie(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_toupie"))
        .args(args)
        .env_remove("TOUPIE_FORMAT")
        .env_remove("TOUPIE_DEGREE")
        .env_remove("TOUPIE_ARITY")
        .env_remove("TOUPIE_SEED")
        .env_remove("TOUPIE_GOLDEN")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json report")
}

fn e1() -> String {
    data("e1.json").display().to_string()
}

#[test]
fn every_command_succeeds_on_e1() {
    for cmd in [
        "validate", "branches", "tips", "chains", "betti", "resolution-check", "sdr-check", "tor-coalgebra",
        "ext-products", "stasheff", "yoneda", "gr", "double-dual", "oracle-diff",
    ] {
        let out = toupie(&[cmd, &e1(), "--format", "json"]);
        assert_eq!(out.status.code(), Some(0), "{cmd}: {}", String::from_utf8_lossy(&out.stderr));
        let r = json(&out);
        assert_eq!(r["command"], cmd);
        assert_eq!(r["status"], "ok");
        assert_eq!(r["version"], env!("CARGO_PKG_VERSION"));
        assert_eq!(r["input_digest"].as_str().unwrap().len(), 64);
    }
}

#[test]
fn ext_products_of_e1() {
    let r = json(&toupie(&["ext-products", &e1(), "--format", "json"]));
    type Row = (Vec<String>, Vec<(String, String)>);
    let rows: Vec<Row> = r["result"]["arities"]
        .as_object()
        .unwrap()
        .values()
        .flat_map(|v| v.as_array().unwrap().clone())
        .map(|e| {
            let input = e["input"].as_array().unwrap().iter().map(|s| s.as_str().unwrap().to_string()).collect();
            let output = e["output"]
                .as_array()
                .unwrap()
                .iter()
                .map(|t| (t["coeff"].as_str().unwrap().to_string(), t["value"][0].as_str().unwrap().to_string()))
                .collect();
            (input, output)
        })
        .collect();
    let s = |x: &[&str]| x.iter().map(|v| v.to_string()).collect::<Vec<_>>();
    let t = |c: &str, v: &str| (c.to_string(), v.to_string());
    assert!(rows.contains(&(s(&["[b1]", "[b2]"]), vec![t("-1", "[b1|b2]")])));
    assert!(rows.contains(&(s(&["[c1]", "[c2]"]), vec![t("1", "[a1|a2.a3]"), t("1", "[b1|b2]")])));
    assert!(rows.contains(&(s(&["[a1]", "[a2]", "[a3]"]), vec![t("1", "[a1|a2.a3]")])));
}

#[test]
fn betti_of_e1() {
    let r = json(&toupie(&["betti", &e1(), "--degree", "3", "--format", "json"]));
    assert_eq!(r["result"]["betti"], serde_json::json!([6, 7, 2, 0]));
}

#[test]
fn not_toupie_is_rejected() {
    let out = toupie(&["validate", &data("not_toupie.json").display().to_string()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("out-degree 2"));
}

#[test]
fn input_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"vertices\": [\"0\",\n  \"w\"], \"arrows\": [}").unwrap();
    let out = toupie(&["tips", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"), "{}", String::from_utf8_lossy(&out.stderr));

    let out = toupie(&["chains", &e1(), "--degree", "99"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("bound exceeded"));
    assert_eq!(toupie(&["chains"]).status.code(), Some(2));
}

#[test]
fn hypothesis_violations_are_refused() {
    for file in ["cubic_only.json", "cubic_monomial.json", "two_cubic.json"] {
        let out = toupie(&["double-dual", &data(file).display().to_string(), "--format", "json"]);
        assert_eq!(out.status.code(), Some(1));
        let r = json(&out);
        assert_eq!(r["status"], "refused");
        assert!(!r["result"]["hypotheses"]["reasons"].as_array().unwrap().is_empty());
    }
}

#[test]
fn yoneda_output_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let shriek = dir.path().join("shriek.json");
    let out = toupie(&["yoneda", &e1(), "--emit", shriek.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let out = toupie(&["validate", shriek.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let back = dir.path().join("back.json");
    assert_eq!(toupie(&["yoneda", shriek.to_str().unwrap(), "--emit", back.to_str().unwrap()]).status.code(), Some(0));
    let text = std::fs::read_to_string(back).unwrap();
    assert!(text.contains("\"b1\"") && !text.contains('∨'));
}

#[test]
fn golden_files() {
    let dir = tempfile::tempdir().unwrap();
    let golden = dir.path().join("golden.json");
    let out = toupie(&["tor-coalgebra", &e1(), "--format", "json"]);
    std::fs::write(&golden, &out.stdout).unwrap();
    let g = golden.to_str().unwrap();
    assert_eq!(toupie(&["tor-coalgebra", &e1(), "--golden", g]).status.code(), Some(0));

    let tampered = String::from_utf8(out.stdout).unwrap().replacen("\"-1\"", "\"1\"", 1);
    std::fs::write(&golden, tampered).unwrap();
    let out = toupie(&["tor-coalgebra", &e1(), "--golden", g, "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let r = json(&out);
    assert!(r["result"]["golden_diff"][0].as_str().unwrap().ends_with("/coeff"));
}

#[test]
fn environment_overrides_flags() {
    let out = Command::new(env!("CARGO_BIN_EXE_toupie"))
        .args(["betti", &e1()])
        .env("TOUPIE_FORMAT", "json")
        .env("TOUPIE_DEGREE", "2")
        .output()
        .unwrap();
    assert_eq!(json(&out)["result"]["betti"], serde_json::json!([6, 7, 2]));
}

#[test]
fn seeded_runs_are_byte_stable() {
    let a = toupie(&["oracle-diff", "--seed", "17", "--format", "json"]);
    let b = toupie(&["oracle-diff", "--seed", "17", "--format", "json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["input_digest"], "seed:17");
}
