//! The installed binary against the exit-code contract.

use std::process::Command;

fn rickart(args: &[&str]) -> (i32, String, String) {
    rickart_env(args, &[])
}

fn rickart_env(args: &[&str], env: &[(&str, &str)]) -> (i32, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_rickart"));
    cmd.args(args).env_remove("RICKART_MAX_ELEMENTS");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn verify_theorem1_emits_passing_json() {
    let (code, out, _) = rickart(&["verify", "--claim", "theorem1", "--kind", "A", "--p", "3", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["verdict"], true);
    assert!(v["steps"].as_array().unwrap().iter().all(|s| s["status"] != "fail"));
}

#[test]
fn confirmed_refutation_exits_zero() {
    let (code, out, _) = rickart(&["check", "--ring", "GR(A(3),C2)", "--property", "gen-right-pp", "--expect", "fails"]);
    assert_eq!(code, 0, "{out}");
    let (code, _, _) = rickart(&["check", "--ring", "GR(A(3),C2)", "--property", "gen-right-pp"]);
    assert_eq!(code, 1);
    let (code, _, _) = rickart(&["check", "--ring", "Z(4)", "--property", "gen-right-pp", "--expect", "holds"]);
    assert_eq!(code, 0);
}

#[test]
fn hypothesis_violation_exits_one() {
    let (code, _, err) = rickart(&["verify", "--claim", "theorem1", "--kind", "A", "--p", "2"]);
    assert_eq!(code, 1);
    assert!(err.contains("p != 2"), "{err}");
    let (code, _, _) = rickart(&["verify", "--claim", "prop_triangular", "--ring", "T(Z(2), 2)"]);
    assert_eq!(code, 1);
}

#[test]
fn usage_and_parse_errors_exit_two() {
    assert_eq!(rickart(&["frobnicate"]).0, 2);
    assert_eq!(rickart(&["check", "--ring", "GR(A(3),"]).0, 2);
    assert_eq!(rickart(&["check", "--ring", "GR(A(3),C2", "--property", "baer"]).0, 2);
    assert_eq!(rickart(&["annihilator", "--ring", "GR(A(3),C2)", "--element", "e+g"]).0, 2);
    assert_eq!(rickart(&["annihilator", "--ring", "Z(4)", "--element", "q"]).0, 2);
    assert_eq!(rickart(&["verify", "--claim", "theorem9"]).0, 2);
    assert_eq!(rickart(&["verify", "--claim", "theorem1", "--p", "3"]).0, 2);
    assert_eq!(rickart(&["build", "--ring-file", "/nonexistent/ring.json"]).0, 2);
}

#[test]
fn cap_exceeded_exits_three() {
    let (code, _, err) = rickart_env(
        &["check", "--ring", "GR(A(3),C3)", "--property", "gen-right-pp"],
        &[("RICKART_MAX_ELEMENTS", "100")],
    );
    assert_eq!(code, 3, "{err}");
    let (code, _, _) = rickart(&["elements", "--ring", "T(GR(A(5),C3),2)", "--limit", "1"]);
    assert_eq!(code, 0);
    let (code, _, _) = rickart(&["idempotents", "--ring", "T(GR(A(5),C3),2)"]);
    assert_eq!(code, 3);
}

#[test]
fn help_and_version_exit_zero() {
    let (code, out, _) = rickart(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("verify"));
    assert_eq!(rickart(&["--version"]).0, 0);
}

#[test]
fn witness_mode_in_extension() {
    let (code, out, _) = rickart(&[
        "check", "--ring", "XGR(A(3),C2)", "--property", "gen-right-pp", "--witness", "e+g", "--expect", "fails",
    ]);
    assert_eq!(code, 0, "{out}");
    let (code, out, _) = rickart(&[
        "check", "--ring", "XGR(B(5),C3)", "--property", "gen-rickart-star", "--involution", "star", "--witness",
        "e+g+g^2", "--expect", "fails",
    ]);
    assert_eq!(code, 0, "{out}");
}

#[test]
fn other_subcommands_run() {
    for args in [
        vec!["catalog"],
        vec!["catalog", "--json"],
        vec!["build", "--ring", "XGR(A(3),C2)"],
        vec!["axioms", "--ring", "GR(A(3),C3)", "--involution", "star"],
        vec!["elements", "--ring", "A(3)"],
        vec!["annihilator", "--ring", "XGR(A(3),C2)", "--element", "e+g", "--within-ideal", "--chain"],
        vec!["annihilator", "--ring", "T(Z(4),2)", "--element", "2*1[1,1]", "--side", "left"],
        vec!["idempotents", "--ring", "T(Z(2),2)"],
        vec!["projections", "--ring", "T(A(3),2)", "--involution", "anti-transpose"],
        vec!["iso", "--ring", "A(3)", "--n", "2"],
    ] {
        let (code, out, err) = rickart(&args);
        assert_eq!(code, 0, "{args:?}: {err}");
        assert!(!out.is_empty());
    }
}

#[test]
fn ring_files_and_group_files() {
    let dir = tempfile::tempdir().unwrap();
    let ring_path = dir.path().join("s.json");
    let (code, doc, _) = rickart(&["build", "--ring", "GR(Z(3),C2)", "--json"]);
    assert_eq!(code, 0);
    std::fs::write(&ring_path, &doc).unwrap();
    let (code, again, _) = rickart(&["build", "--ring-file", ring_path.to_str().unwrap(), "--json"]);
    assert_eq!(code, 0);
    assert_eq!(again, doc);

    let group_path = dir.path().join("c2.json");
    std::fs::write(&group_path, r#"{"schema": "rickart.group/v1", "cayley": [[0,1],[1,0]], "labels": ["e","t"]}"#)
        .unwrap();
    let expr = format!("GR(A(3), @{})", group_path.display());
    let (code, out, err) = rickart(&["check", "--ring", &expr, "--property", "gen-right-pp", "--expect", "fails"]);
    assert_eq!(code, 0, "{out}{err}");
    assert!(out.contains("a*t"), "{out}");
}

#[test]
fn certificates_reproduce_modulo_timings() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cert.json");
    let p = path.to_str().unwrap();
    let (code, _, _) = rickart(&["verify", "--claim", "theorem2", "--kind", "C", "--p", "2", "--json", "--out", p]);
    assert_eq!(code, 0);
    let (code, out, _) = rickart(&["verify", "--replay", p]);
    assert_eq!(code, 0, "{out}");
    let first = rickart(&["verify", "--claim", "theorem2", "--kind", "C", "--p", "2", "--json"]).1;
    let second = rickart(&["verify", "--claim", "theorem2", "--kind", "C", "--p", "2", "--json"]).1;
    let strip = |s: &str| rickart_core::harness::Certificate::from_json(s).unwrap().content_bytes();
    assert_eq!(strip(&first), strip(&second));
    let mut tampered: serde_json::Value = serde_json::from_str(&first).unwrap();
    tampered["steps"][0]["description"] = "edited".into();
    std::fs::write(&path, tampered.to_string()).unwrap();
    assert_eq!(rickart(&["verify", "--replay", p]).0, 1);
    let text = rickart(&["verify", "--claim", "theorem1", "--kind", "A", "--p", "3", "--strict"]).1;
    assert!(text.contains("chain sizes by power"), "{text}");
    assert!(text.trim_end().lines().last().unwrap().starts_with("timings:"));
}
