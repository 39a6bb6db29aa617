//! Process-level CLI tests beyond the acceptance contract: flag handling,
//! pretty output, report shapes.

use std::path::PathBuf;
use std::process::Output;

fn run(args: &[&str]) -> Output {
    std::process::Command::new(env!("CARGO_BIN_EXE_octeig"))
        .args(args)
        .output()
        .expect("spawn octeig")
}

fn write_matrix(name: &str, contents: &[u8]) -> PathBuf {
    let dir = std::env::temp_dir().join("octeig-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn worked_instance_path() -> PathBuf {
    write_matrix(
        "worked.json",
        br#"{"dim": 3, "diag": [0, 0, 0],
             "a": [0,1,0,0,0,0,0,0],
             "b": [0,0,1,0,0,0,0,0],
             "c": [0,0,0,0,1,0,0,0]}"#,
    )
}

#[test]
fn family_selection_flag() {
    let path = worked_instance_path();
    let p = path.to_str().unwrap();
    let out = run(&["eigen", p, "--family", "r+"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let families = report["families"].as_array().unwrap();
    assert_eq!(families.len(), 1);
    assert_eq!(families[0]["r"], 2.0);

    let out = run(&["eigen", p, "--family", "r-"]);
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["families"][0]["r"], -2.0);
}

#[test]
fn eigen_report_shape() {
    let path = worked_instance_path();
    let out = run(&["eigen", path.to_str().unwrap()]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["r_values"][0], 2.0);
    assert_eq!(report["r_values"][1], -2.0);
    assert_eq!(report["degenerate_doubled"], false);
    let fam = &report["families"][0];
    assert_eq!(fam["eigenvalues"].as_array().unwrap().len(), 3);
    // eigenvectors: 3 vectors x 3 components x 8 coefficients
    assert_eq!(fam["eigenvectors"][0][0].as_array().unwrap().len(), 8);
    assert!(report["pass"].as_bool().unwrap());
}

#[test]
fn pretty_mode() {
    let path = worked_instance_path();
    let out = run(&["eigen", path.to_str().unwrap(), "--pretty"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("family r ="));
    assert!(text.contains("pass: true"));

    let out = run(&["verify", path.to_str().unwrap(), "--pretty"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("characteristic_equation"));
    assert!(text.contains("PASS"));

    let out = run(&["oracle", path.to_str().unwrap(), "--pretty"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("embedding spectrum"));
}

#[test]
fn oracle_report_shape() {
    let path = worked_instance_path();
    let out = run(&["oracle", path.to_str().unwrap()]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let clusters = report["oracle"].as_array().unwrap();
    let counts: Vec<u64> = clusters
        .iter()
        .map(|c| c["count"].as_u64().unwrap())
        .collect();
    assert_eq!(counts, vec![4, 8, 8, 4]);
    assert!(report["pass"].as_bool().unwrap());
}

#[test]
fn random_class_slots_via_process() {
    let out = run(&["random", "--seed", "5", "--class", "complex"]);
    assert!(out.status.success());
    let file: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    for key in ["a", "b", "c"] {
        let coeffs = file[key].as_array().unwrap();
        for x in &coeffs[2..] {
            assert_eq!(x.as_f64().unwrap(), 0.0, "{key} slot should be complex");
        }
    }
    // quaternionic files report r = 0 as one family
    let out = run(&["random", "--seed", "5", "--class", "quaternionic"]);
    let path = write_matrix("quat.json", &out.stdout);
    let out = run(&["eigen", path.to_str().unwrap()]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let rs: Vec<f64> = report["r_values"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_f64().unwrap())
        .collect();
    assert!(rs.iter().any(|r| r.abs() <= 1e-12));
}

#[test]
fn rejects_extra_offdiagonals_in_2x2() {
    let path = write_matrix(
        "bad2.json",
        br#"{"dim": 2, "diag": [1, 2],
             "a": [0,1,0,0,0,0,0,0],
             "b": [0,0,1,0,0,0,0,0]}"#,
    );
    assert_eq!(run(&["eigen", path.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn scale_flag_controls_magnitude() {
    let out = run(&[
        "random", "--seed", "3", "--class", "octonionic", "--scale", "100",
    ]);
    let file: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let max = file["a"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_f64().unwrap().abs())
        .fold(0.0f64, f64::max);
    assert!(max > 10.0, "scale 100 should produce large entries");
    assert_eq!(
        run(&["random", "--seed", "3", "--class", "octonionic", "--scale", "-1"])
            .status
            .code(),
        Some(2)
    );
}
