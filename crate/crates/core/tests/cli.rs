mod common;

use common::{fixture_path, run_cli};

fn fx(name: &str) -> String {
    fixture_path(name)
}

#[test]
fn algebra_check_summarizes() {
    let (code, out, _) = run_cli(&["algebra", "check", &fx("cycle4_rad2.alg")]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["dim"], 8);
    assert_eq!(v["vertices"].as_array().unwrap().len(), 4);
}

#[test]
fn certify_exit_codes() {
    let (code, out, _) = run_cli(&["tilted", "certify", &fx("b_a3.alg")]);
    assert_eq!(code, 0);
    assert!(out.contains("\"CERTIFIED_TILTED\""));
    let (code, out, _) = run_cli(&["tilted", "certify", &fx("cycle3_rad2.alg")]);
    assert_eq!(code, 1);
    assert!(out.contains("\"REFUTED_BY_ENUMERATION\""));
    let (code, _, _) = run_cli(&["tilted", "certify", &fx("cycle3_rad2.alg"), "--cap", "2"]);
    assert_eq!(code, 3);
}

#[test]
fn cut_check_report() {
    let (code, out, err) = run_cli(&["cut", "check", &fx("cycle4_rad2.alg"), "--modules", "P_b,S_b,P_d"]);
    assert_eq!(code, 0, "{err}");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let a = &v["analysis"];
    assert_eq!(a["cut"]["is_cut"], true);
    assert_eq!(a["hom_tau"]["all_zero"], true);
    assert_eq!(a["faithful"], false);
    assert_eq!(a["annihilator_dim"], 3);

    let (code, _, _) = run_cli(&["cut", "check", &fx("cycle4_rad2.alg"), "--modules", "S_a,S_b"]);
    assert_eq!(code, 1);
    let (code, _, err) = run_cli(&["cut", "check", &fx("cycle4_rad2.alg"), "--modules", "S_z"]);
    assert_eq!(code, 2);
    assert!(err.contains("S_z"));
}

#[test]
fn enumerate_and_abstract_mode() {
    let (code, out, _) = run_cli(&["cut", "enumerate", &fx("cycle4_rad2.alg")]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["count"], 6);

    let tube = fx("tube3.tq");
    let (code, _, _) = run_cli(&["cut", "check", &tube, "--modules", "E1_1,E1_2,E1_3,E1_4,E1_5"]);
    assert_eq!(code, 0);
    let (code, _, _) = run_cli(&["cut", "check", &tube, "--modules", "E0_1,E1_1,E2_1"]);
    assert_eq!(code, 1);
    let (code, _, err) = run_cli(&["tilted", "certify", &tube]);
    assert_eq!(code, 2);
    assert!(err.contains("translation quiver"));
}

#[test]
fn files_written_with_out() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("ar.json");
    let dot = dir.path().join("ar.dot");
    let alg = dir.path().join("b.alg");
    let (code, out, _) = run_cli(&["ar", "build", &fx("cycle4_rad2.alg"), "--out", report.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v["ar_quiver"]["vertices"].as_array().unwrap().len(), 8);

    let args = ["ar", "dot", &fx("cycle4_rad2.alg"), "--out", dot.to_str().unwrap(), "--highlight", "P_b,S_b,P_d"];
    assert_eq!(run_cli(&args).0, 0);
    let first = std::fs::read_to_string(&dot).unwrap();
    assert_eq!(first.matches("style=dashed").count(), 4);
    assert!(first.contains("cluster_highlight"));
    assert_eq!(run_cli(&args).0, 0);
    assert_eq!(std::fs::read_to_string(&dot).unwrap(), first);

    let (code, _, err) = run_cli(&[
        "quotient",
        &fx("cycle4_rad2.alg"),
        "--modules",
        "P_b,S_b,P_d",
        "--emit-algebra",
        alg.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "{err}");
    let emitted = std::fs::read_to_string(&alg).unwrap();
    assert!(emitted.contains("relation beta*delta"));
    assert_eq!(run_cli(&["tilted", "certify", alg.to_str().unwrap()]).0, 0);
}

#[test]
fn limits_and_input_errors() {
    let (code, out, err) = run_cli(&["ar", "build", &fx("cycle4_rad2.alg"), "--max-vertices", "3"]);
    assert_eq!(code, 3);
    assert!(!err.is_empty());
    // the partial quiver is still reported
    assert!(out.contains("\"error\""));
    assert_eq!(run_cli(&["algebra", "check", "/nonexistent.alg"]).0, 2);
    assert_eq!(run_cli(&["bogus"]).0, 2);

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.alg");
    std::fs::write(&bad, "vertex a\narrow x: a -> q\n").unwrap();
    let (code, _, err) = run_cli(&["algebra", "check", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("2:"), "{err}");

    let loop_ = dir.path().join("loop.alg");
    std::fs::write(&loop_, "vertex a\narrow x: a -> a\n").unwrap();
    assert_eq!(run_cli(&["algebra", "check", loop_.to_str().unwrap()]).0, 3);

    let (code, _, _) = run_cli(&["quotient", &fx("cycle4_rad2.alg"), "--modules", "S_a,S_b"]);
    assert_eq!(code, 2);
}

#[test]
fn prime_field_dispatch() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("b7.alg");
    let text = std::fs::read_to_string(fx("b_a3.alg")).unwrap().replace("field Q", "field F 7");
    let text = if text.contains("field F 7") { text } else { format!("field F 7\n{text}") };
    std::fs::write(&p, text).unwrap();
    let (code, out, err) = run_cli(&["tilted", "certify", p.to_str().unwrap()]);
    assert_eq!(code, 0, "{err}");
    assert!(out.contains("\"field\": \"F 7\""));
    std::fs::write(&p, "field F 12\nvertex a\n").unwrap();
    assert_eq!(run_cli(&["algebra", "check", p.to_str().unwrap()]).0, 2);
}
