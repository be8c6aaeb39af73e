use std::process::{Command, Output};

use serde_json::Value;
use sergeev::json::{element_from_json, matrix_from_json, scalar_from_json, tableau_from_json};
use sergeev_core::idempotents::idempotent_in;
use sergeev_core::repmodules::spin_module;
use sergeev_core::{Scalar, Sergeev, StrictPartition};

fn sergeev(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sergeev"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

#[test]
fn enumerate_three() {
    let o = sergeev(&["enumerate", "--n", "3", "--barred"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("3\t1\t4\n"), "{}", text);
    assert!(text.contains("2,1\t1\t2\n"), "{}", text);
    assert!(text.contains("total 6\n"));
}

#[test]
fn enumerate_json_counts() {
    let v = json(&sergeev(&["enumerate", "--n", "1", "--json", "--list"]));
    assert_eq!(v["partitions"].as_array().unwrap().len(), 1);
    assert_eq!(v["partitions"][0]["tableaux"][0], "1");
    let v = json(&sergeev(&["enumerate", "--n", "6", "--barred", "--json"]));
    let counted: u64 = v["partitions"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| p["count"].as_u64().unwrap())
        .sum();
    let formula: u64 = v["partitions"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| p["g"].as_u64().unwrap() << (6 - p["lambda"].as_array().unwrap().len()))
        .sum();
    assert_eq!(counted, formula);
    assert_eq!(v["consistent"], true);
}

#[test]
fn verify_suites_pass() {
    for (suite, n) in [("idempotents", "3"), ("fusion", "3"), ("spin", "4")] {
        let o = sergeev(&["verify", "--suite", suite, "--max-n", n]);
        assert!(o.status.success(), "{}", stdout(&o));
        assert!(stdout(&o).contains("PASS"));
    }
    let text = stdout(&sergeev(&["verify", "--suite", "fusion", "--max-n", "3"]));
    assert!(text.contains("(1 + t12 c2)(1 + c2(t13 - t23)) = 6 e_U"));
    let text = stdout(&sergeev(&["verify", "--suite", "spin", "--max-n", "4"]));
    assert!(text.contains("ok   example (3,1): t3 (1 + i c2 c3) theta_T"));
}

#[test]
fn verify_all_at_four() {
    let o = sergeev(&["verify", "--suite", "all", "--max-n", "4", "--json"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["passed"], true);
    assert_eq!(v["reports"].as_array().unwrap().len(), 8);
}

#[test]
fn safety_bound_is_enforced() {
    let o = sergeev(&["verify", "--suite", "zeta", "--max-n", "5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--unsafe-max-n"));
    let o = sergeev(&["verify", "--suite", "unknown"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn idempotent_json_matches_library() {
    let o = sergeev(&["idempotent", "--n", "3", "--tableau", "1,2/3"]);
    assert!(o.status.success());
    let e = element_from_json(&json(&o)).unwrap();
    let g = Sergeev::new(3).unwrap();
    let want = idempotent_in(&g, &"1,2/3".parse().unwrap()).unwrap();
    assert_eq!(e, want);
    let x2 = g.jm_x(2).unwrap();
    let x3 = g.jm_x(3).unwrap();
    let r2 = Scalar::sqrt_int(2);
    let first =
        (&g.scalar(r2.clone()) + &x2).scale(&(&Scalar::from_int(2) * &r2).inverse().unwrap());
    let second =
        (&g.scalar(Scalar::from_int(6)) - &(&x3 * &x3)).scale(&Scalar::ratio(1, 6).unwrap());
    assert_eq!(e, &first * &second);
    assert_eq!(
        sergeev(&["idempotent", "--n", "4", "--tableau", "1,2/3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        sergeev(&["idempotent", "--tableau", "1,3/2"]).status.code(),
        Some(2)
    );
}

#[test]
fn rep_json_for_three_one() {
    let v = json(&sergeev(&[
        "rep", "--lambda", "3,1", "--flavor", "spin", "--format", "json",
    ]));
    assert_eq!(v["dim"], 4);
    let rep = spin_module(&StrictPartition::new(vec![3, 1]).unwrap()).unwrap();
    for g in &rep.generators {
        assert_eq!(
            matrix_from_json(&v["generators"][&g.label]).unwrap(),
            g.matrix
        );
    }
    let text = stdout(&sergeev(&[
        "rep",
        "--lambda",
        "2,1",
        "--flavor",
        "seminormal",
    ]));
    assert!(text.starts_with("seminormal module for lambda = (2,1), dim 4"));
}

#[test]
fn fusion_with_check() {
    let o = sergeev(&["fusion", "--tableau", "1,2/3", "--check-against-jm"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["matches_jm"], true);
    assert_eq!(
        scalar_from_json(&v["constant"]).unwrap(),
        Scalar::from_int(6)
    );
    let t = tableau_from_json(&serde_json::json!({"rows": [[{"e": 1, "bar": false}, {"e": 2, "bar": false}], [{"e": 3, "bar": false}]]}))
        .unwrap();
    assert_eq!(v["tableau"], t.to_string());
}

#[test]
fn exports_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let cases: [&[&str]; 3] = [
        &["idempotent", "--tableau", "1,2/3"],
        &["rep", "--lambda", "3,1", "--flavor", "spin"],
        &["fusion", "--tableau", "1,2b/3"],
    ];
    for (k, args) in cases.iter().enumerate() {
        let mut bytes = Vec::new();
        for run in 0..2 {
            let path = dir.path().join(format!("{}-{}.json", k, run));
            let mut full = vec!["export", "--out", path.to_str().unwrap()];
            full.extend_from_slice(args);
            let o = sergeev(&full);
            assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
            bytes.push(std::fs::read(&path).unwrap());
        }
        assert_eq!(bytes[0], bytes[1]);
    }
    let rep: Value =
        serde_json::from_slice(&std::fs::read(dir.path().join("1-0.json")).unwrap()).unwrap();
    assert_eq!(rep["dim"], 4);
    assert_eq!(rep["generators"]["t3"].as_array().unwrap().len(), 4);
}

#[test]
fn export_reports_bad_path() {
    let o = sergeev(&[
        "export",
        "--out",
        "/nonexistent/dir/x.json",
        "idempotent",
        "--tableau",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("/nonexistent/dir/x.json"));
}

#[test]
fn verify_output_is_deterministic() {
    let a = sergeev(&["verify", "--suite", "modules", "--max-n", "3", "--json"]);
    let b = sergeev(&["verify", "--suite", "modules", "--max-n", "3", "--json"]);
    assert_eq!(a.stdout, b.stdout);
}
