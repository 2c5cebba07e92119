//! End-to-end runs of the binary against the bundled data.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use manin_forge::examples::{expected_gb, expected_gtilde};
use manin_forge::schema::Document;
use manin_forge::workspace::Workspace;
use manin_forge_core::LieAlgebra;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn run(args: &[&str]) -> Output {
    let resolved: Vec<String> =
        args.iter().map(|a| if a.ends_with(".json") && !a.starts_with('/') { data(a).display().to_string() } else { a.to_string() }).collect();
    Command::new(env!("CARGO_BIN_EXE_manin-forge")).args(&resolved).output().expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit code")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("manin-forge-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn same_brackets(a: &LieAlgebra, b: &LieAlgebra) -> bool {
    a.dim() == b.dim() && (0..a.dim()).all(|i| (0..a.dim()).all(|j| a.basis_bracket(i, j) == b.basis_bracket(i, j)))
}

#[test]
fn exit_codes() {
    let cases: &[(&[&str], i32)] = &[
        (&["verify", "sl2_manin.json"], 0),
        (&["verify", "sl2_broken_jacobi.json"], 1),
        (&["verify", "bad_rational.json"], 2),
        (&["verify", "missing.json"], 2),
        (&["verify", "sl2_manin.json", "sl2_manin.json"], 2),
        (&["forward", "sl2_manin.json", "--r", "sl2_r.json"], 0),
        (&["forward", "sl2_manin.json", "--metric", "sl2_metric.json", "--twist", "sl2_twist.json"], 0),
        (&["forward", "sl2_manin.json", "--r", "sl2_r_perturbed.json"], 1),
        (&["forward", "abelian_manin.json", "--r", "abelian_r.json"], 0),
        (&["forward", "sl2_manin.json"], 2),
        (&["reverse", "sl2_pair.json", "--theta", "sl2_theta.json"], 0),
        (&["reverse", "sl2_pair.json", "--theta", "sl2_theta_doubled.json"], 1),
        (&["reverse", "abelian_pair.json", "--theta", "abelian_theta_zero.json"], 0),
        (&["reverse", "sl2_pair.json", "--theta", "sl2_r.json"], 2),
        (&["example", "sl2-forward"], 0),
        (&["example", "sl2-reverse"], 0),
        (&["example", "sl2-crosscheck"], 0),
        (&["example", "sl3"], 2),
    ];
    for (args, want) in cases {
        assert_eq!(code(args), *want, "{args:?}");
    }
}

#[test]
fn broken_jacobi_reports_its_witness() {
    let out = run(&["verify", "sl2_broken_jacobi.json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["status"], "fail");
    let jac = v["checks"].as_array().unwrap().iter().find(|c| c["name"] == "sl2.jacobi").unwrap();
    assert_eq!(jac["passed"], false);
    assert_eq!(jac["failures"][0]["witness"], serde_json::json!([0, 1, 2, 0]));
}

#[test]
fn report_status_matches_exit_code() {
    for args in [&["forward", "sl2_manin.json", "--r", "sl2_r.json"][..], &["reverse", "sl2_pair.json", "--theta", "sl2_theta_doubled.json"][..]] {
        let out = run(args);
        let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        let all_pass = v["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true);
        assert_eq!(v["exit_code"], out.status.code().unwrap());
        assert_eq!(all_pass, out.status.success());
    }
}

#[test]
fn quiet_and_human_modes() {
    let q = run(&["--quiet", "verify", "sl2_broken_jacobi.json"]);
    assert!(q.stdout.is_empty() && q.stderr.is_empty());
    let h = run(&["--human", "verify", "sl2_broken_jacobi.json"]);
    let text = String::from_utf8(h.stdout).unwrap();
    assert!(text.contains("FAIL sl2.jacobi"), "{text}");
}

#[test]
fn scaled_r_still_passes_and_single_coefficient_perturbation_fails() {
    assert_eq!(code(&["forward", "sl2_manin.json", "--r", "sl2_r_scaled.json"]), 0);
    let out = run(&["forward", "sl2_manin.json", "--r", "sl2_r_perturbed.json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let failed: Vec<&str> = v["checks"].as_array().unwrap().iter().filter(|c| c["passed"] == false).map(|c| c["name"].as_str().unwrap()).collect();
    assert!(failed.contains(&"r_matrix.cybe"), "{failed:?}");
}

#[test]
fn outputs_match_bundled_goldens_byte_for_byte() {
    let cases: &[(&[&str], &str)] = &[
        (&["forward", "sl2_manin.json", "--r", "sl2_r.json"], "sl2_forward.json"),
        (&["reverse", "sl2_pair.json", "--theta", "sl2_theta.json"], "sl2_reverse.json"),
        (&["forward", "abelian_manin.json", "--r", "abelian_r.json"], "abelian_forward.json"),
        (&["reverse", "abelian_pair.json", "--theta", "abelian_theta_zero.json"], "abelian_reverse.json"),
    ];
    for (args, golden) in cases {
        let golden_text = fs::read_to_string(data(&format!("golden/{golden}"))).unwrap();
        for round in 0..2 {
            let out = scratch(&format!("{round}-{golden}"));
            let mut full = args.to_vec();
            let o = out.display().to_string();
            full.extend(["--out", &o]);
            assert_eq!(code(&full), 0);
            assert_eq!(fs::read_to_string(&out).unwrap(), golden_text, "{golden} round {round}");
        }
    }
}

#[test]
fn golden_outputs_verify_and_carry_the_expected_tables() {
    for g in ["sl2_forward.json", "sl2_reverse.json", "abelian_forward.json", "abelian_reverse.json"] {
        assert_eq!(code(&["verify", &data(&format!("golden/{g}")).display().to_string()]), 0, "{g}");
    }
    let fwd = Workspace::load(&[&data("golden/sl2_forward.json")]).unwrap();
    assert!(same_brackets(&fwd.algebra("gtilde").unwrap().algebra, &expected_gtilde()));
    let rev = Workspace::load(&[&data("golden/sl2_reverse.json")]).unwrap();
    assert!(same_brackets(&rev.algebra("gb").unwrap().algebra, &expected_gb()));
    let ab = Workspace::load(&[&data("golden/abelian_reverse.json")]).unwrap();
    assert!(ab.algebra("gb").unwrap().algebra.is_abelian());
}

#[test]
fn bundled_documents_are_canonical() {
    for entry in fs::read_dir(data("")).unwrap().chain(fs::read_dir(data("golden")).unwrap()) {
        let path = entry.unwrap().path();
        if path.extension().and_then(|e| e.to_str()) != Some("json") || path.ends_with("bad_rational.json") {
            continue;
        }
        let text = fs::read_to_string(&path).unwrap();
        let doc = Document::parse(&text).unwrap();
        assert_eq!(doc.to_canonical(), text, "{}", path.display());
    }
}

#[test]
fn canonical_form_reduces_rationals_and_sorts_keys() {
    let text = r#"{"objects": {"f": {"gram": [["2/4", 3], ["3", "-6/4"]], "type": "bilinear_form"}}, "format": "manin-forge/1"}"#;
    let once = Document::parse(text).unwrap().to_canonical();
    assert!(once.contains("\"1/2\"") && once.contains("\"-3/2\""));
    assert_eq!(Document::parse(&once).unwrap().to_canonical(), once);
}
