use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

const MORSE_A2: [&str; 8] = ["--v1", "1", "--v2", "5", "--alpha-star", "1", "--mass", "0.5"];
const COULOMB: [&str; 14] =
    ["--lambda", "1", "--v0", "-0.75", "--b", "1", "--a", "2", "--alpha", "0", "--beta", "-1", "--eta", "0.5"];

fn nuvarov(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nuvarov")).args(args).output().expect("binary runs")
}

fn with(cmd: &str, model: &[&str], extra: &[&str]) -> Output {
    let mut args = vec![cmd];
    args.extend_from_slice(model);
    args.extend_from_slice(extra);
    nuvarov(&args)
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

/// Same keys everywhere, numbers equal to 1e-12 relative.
fn assert_matches_golden(actual: &Value, expected: &Value, path: &str) {
    match (actual, expected) {
        (Value::Object(a), Value::Object(e)) => {
            let ak: Vec<_> = a.keys().collect();
            let ek: Vec<_> = e.keys().collect();
            assert_eq!(ak, ek, "keys differ at {path}");
            for (k, v) in e {
                assert_matches_golden(&a[k], v, &format!("{path}.{k}"));
            }
        }
        (Value::Array(a), Value::Array(e)) => {
            assert_eq!(a.len(), e.len(), "length differs at {path}");
            for (i, (x, y)) in a.iter().zip(e).enumerate() {
                assert_matches_golden(x, y, &format!("{path}[{i}]"));
            }
        }
        (Value::Number(a), Value::Number(e)) => {
            let (a, e) = (a.as_f64().unwrap(), e.as_f64().unwrap());
            assert!((a - e).abs() <= 1e-12 * e.abs().max(1.0), "{path}: {a} vs {e}");
        }
        (a, e) => assert_eq!(a, e, "value differs at {path}"),
    }
}

fn golden(name: &str) -> Value {
    let p = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap()
}

#[test]
fn morse_spectrum_matches_golden() {
    let out = with("morse-spectrum", &MORSE_A2, &["--levels", "5", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_matches_golden(&v, &golden("morse_spectrum.json"), "$");
    let energies: Vec<f64> = v["levels"].as_array().unwrap().iter().map(|l| l["energy"].as_f64().unwrap()).collect();
    assert_eq!(energies, [-4.0, -1.0]);
}

#[test]
fn pdm_spectrum_matches_golden() {
    let out = with("pdm-spectrum", &COULOMB, &["--levels", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_matches_golden(&json(&out), &golden("pdm_spectrum.json"), "$");
}

#[test]
fn map_matches_golden() {
    let out = with("map", &MORSE_A2, &[]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_matches_golden(&v, &golden("map.json"), "$");
    assert_eq!(v["correspondence"]["a"], 2.0);
    assert_eq!(v["verification"]["pass"], true);
}

#[test]
fn top_level_keys_are_stable() {
    let cases: [(&str, &[&str], &str); 4] = [
        ("morse-spectrum", &MORSE_A2, "levels"),
        ("pdm-spectrum", &COULOMB, "levels"),
        ("nu-solve", &COULOMB, "levels"),
        ("pdm-wavefunction", &COULOMB, "samples"),
    ];
    for (cmd, model, body) in cases {
        let v = json(&with(cmd, model, &[]));
        let mut keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
        let mut expected = vec!["model", "method", body];
        keys.sort();
        expected.sort();
        assert_eq!(keys, expected, "{cmd}");
    }
    let v = json(&with("morse-wavefunction", &MORSE_A2, &["--level", "1"]));
    assert!(v["samples"].as_array().unwrap().len() == 200);
}

#[test]
fn level_rows_carry_the_documented_fields() {
    let v = json(&with("pdm-spectrum", &COULOMB, &["--case", "II"]));
    for level in v["levels"].as_array().unwrap() {
        let mut keys: Vec<_> = level.as_object().unwrap().keys().cloned().collect();
        keys.sort();
        assert_eq!(keys, ["branch", "energy", "laguerre_param", "n", "normalizable"]);
        assert_eq!(level["branch"], "CaseII");
    }
}

#[test]
fn nu_solve_agrees_with_closed_forms() {
    let model = ["--lambda", "0.8", "--v0", "2", "--b", "1.2", "--a", "1.5", "--alpha", "0.3", "--beta", "-0.4"];
    let closed = json(&with("pdm-spectrum", &model, &["--levels", "6"]));
    let solved = json(&with("nu-solve", &model, &["--levels", "6"]));
    let (c, s) = (closed["levels"].as_array().unwrap(), solved["levels"].as_array().unwrap());
    assert!(!c.is_empty());
    assert_eq!(c.len(), s.len());
    for (a, b) in c.iter().zip(s) {
        assert_eq!(a["n"], b["n"]);
        assert_eq!(a["branch"], b["branch"]);
        let (x, y) = (a["energy"].as_f64().unwrap(), b["energy"].as_f64().unwrap());
        assert!((x - y).abs() <= 1e-12 * x.abs());
    }
}

#[test]
fn verify_morse_passes_with_tolerance_report() {
    let out = with(
        "verify-morse",
        &MORSE_A2,
        &["--xlo", "-4", "--xhi", "16", "--n", "4000", "--tol", "1e-3", "--format", "json"],
    );
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    let ver = &v["verification"];
    for key in ["closed_form", "oracle", "richardson", "max_rel_err", "pass"] {
        assert!(ver.get(key).is_some(), "missing {key}");
    }
    assert_eq!(ver["pass"], true);
    let closed = ver["closed_form"].as_array().unwrap();
    let extrapolated = ver["richardson"].as_array().unwrap();
    for (c, r) in closed.iter().zip(extrapolated) {
        let (c, r) = (c.as_f64().unwrap(), r.as_f64().unwrap());
        assert!((c - r).abs() <= 1e-3 * c.abs());
    }
}

#[test]
fn verify_failure_exits_three_with_report() {
    let out = with("verify-morse", &MORSE_A2, &["--n", "255", "--tol", "1e-9"]);
    assert_eq!(out.status.code(), Some(3));
    let v = json(&out);
    assert_eq!(v["verification"]["pass"], false);
    assert!(v["verification"]["max_rel_err"].as_f64().unwrap() > 1e-9);
}

#[test]
fn verify_pdm_passes_on_coulomb_model() {
    let out = with("verify-pdm", &COULOMB, &["--format", "csv"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,closed_form,oracle,richardson,rel_err,convergence_order,pass"));
    assert_eq!(lines.filter(|l| l.ends_with(",true")).count(), 3);
}

#[test]
fn pdm_wavefunction_csv_contract() {
    let out = with(
        "pdm-wavefunction",
        &COULOMB,
        &["--level", "0", "--case", "II", "--samples", "200", "--format", "csv"],
    );
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("x,s,psi,phi"));
    let rows: Vec<Vec<f64>> = lines.map(|l| l.split(',').map(|f| f.parse().unwrap()).collect()).collect();
    assert_eq!(rows.len(), 200);
    for r in &rows {
        let (x, s, psi, phi) = (r[0], r[1], r[2], r[3]);
        assert!((s - (-x).exp()).abs() <= 1e-12 * s);
        // m^eta with m = e^{-2x}, eta = 1/2
        assert!((phi - (-x).exp() * psi).abs() <= 1e-12 * phi.abs().max(1e-300));
        // ground state s^{1/2} e^{-5s/2}
        assert!((psi - s.sqrt() * (-2.5 * s).exp()).abs() <= 1e-12 * psi.abs().max(1e-300));
    }
}

#[test]
fn csv_numbers_round_trip() {
    let out = with("morse-spectrum", &MORSE_A2, &["--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, "n,energy,branch,normalizable,laguerre_param\n0,-4.0,CaseII,true,4.0\n1,-1.0,CaseII,true,2.0\n");
}

#[test]
fn output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("levels.json");
    let out = with("morse-spectrum", &MORSE_A2, &["--output", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["levels"][0]["energy"], -4.0);
}

#[test]
fn validation_errors_exit_two() {
    let bad: [&[&str]; 6] = [
        &["pdm-spectrum", "--lambda", "nan", "--v0", "1", "--b", "1", "--a", "2"],
        &["pdm-spectrum", "--lambda", "0", "--v0", "1", "--b", "1", "--a", "2"],
        &["morse-spectrum", "--v1", "1", "--v2", "inf", "--alpha-star", "1", "--mass", "0.5"],
        &["morse-spectrum", "--v1", "1", "--v2", "5", "--alpha-star", "1", "--mass", "0.5", "--bogus", "1"],
        &["morse-wavefunction", "--v1", "1", "--v2", "5", "--alpha-star", "1", "--mass", "0.5", "--level", "7"],
        &["morse-spectrum", "--v1", "1", "--v2", "5", "--alpha-star", "1", "--mass", "0.5", "--output", "/nonexistent/dir/out.json"],
    ];
    for args in bad {
        let out = nuvarov(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn map_rejects_other_conventions() {
    let out = nuvarov(&["map", "--v1", "1", "--v2", "5", "--alpha-star", "1", "--mass", "2"]);
    assert_eq!(out.status.code(), Some(2));
}
