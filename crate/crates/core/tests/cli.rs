use std::path::Path;
use std::process::{Command, Output};

use su2_dortho::afamily::FamilyDumpA;
use su2_dortho::bfamily::FamilyDumpB;
use su2_dortho::cli::VerifyReport;
use su2_dortho::limits::ContractionReport;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_su2-dortho"));
    c.env_remove("SU2_DORTHO_OUT_DIR");
    c
}

fn run_in(dir: &Path, args: &[&str]) -> Output {
    bin().current_dir(dir).args(args).output().expect("binary runs")
}

#[test]
fn verify_small_grid_passes() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(dir.path(), &["verify", "--N-max", "8"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let report: VerifyReport = serde_json::from_slice(&std::fs::read(dir.path().join("verify.json")).unwrap()).unwrap();
    assert_eq!(report.failed, 0);
    assert_eq!(report.passed, report.total);
    assert!(report.total > 100);
}

#[test]
fn verify_quick_tier_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(dir.path(), &["verify", "--quick", "--format", "csv", "--out", "-"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("key,passed,detail\n"));
    assert!(!text.contains(",false,"));
    assert!(!text.contains("N=07"));
}

#[test]
fn gen_a_example() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(dir.path(), &["gen-a", "--q", "0", "--c", "1/2", "--N", "6", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let bytes = std::fs::read(dir.path().join("gen-a.json")).unwrap();
    let dump: FamilyDumpA = serde_json::from_slice(&bytes).unwrap();
    assert_eq!(dump.polys[0].coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(), ["1"]);
    assert!(dump.polys.iter().all(|p| p.coeffs.last().unwrap().is_one()));
    // round trip
    let again = serde_json::to_vec_pretty(&dump).unwrap();
    assert_eq!(serde_json::from_slice::<FamilyDumpA>(&again).unwrap(), dump);
}

#[test]
fn gen_b_csv_and_negative_rational() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(dir.path(), &["gen-b", "--M", "2", "--f", "-2/5", "--N", "3", "--format", "csv", "--out", "b.csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(dir.path().join("b.csv")).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,power,coeff"));
    assert_eq!(lines.next(), Some("0,0,1"));
    let json = run_in(dir.path(), &["gen-b", "--M", "2", "--f", "-2/5", "--N", "3", "--out", "-"]);
    let dump: FamilyDumpB = serde_json::from_slice(&json.stdout).unwrap();
    assert_eq!(dump.m, 2);
    assert_eq!(dump.polys.len(), 4);
}

#[test]
fn contract_a_example() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(dir.path(), &["contract-a", "--q", "0", "--c", "1", "--j", "2", "--N", "16,32,64,128", "--out", "-"]);
    assert_eq!(out.status.code(), Some(0));
    let r: ContractionReport = serde_json::from_slice(&out.stdout).unwrap();
    let order = r.order.unwrap();
    assert!((0.7..=1.3).contains(&order), "{order}");
    assert_eq!(r.winner.as_deref(), Some("4c/(4c-1)"));
    assert_eq!(r.target, "meixner");
    assert_eq!(r.n, vec![16, 32, 64, 128]);
}

#[test]
fn contract_b_and_gf_reports() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(
        dir.path(),
        &["contract-b", "--M", "2", "--a", "7/10", "--b", "2/5", "--j", "1", "--q", "0", "--k", "2", "--N", "32,64,128,256", "--out", "-"],
    );
    assert_eq!(out.status.code(), Some(0));
    let r: ContractionReport = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r.target, "charlier");
    let out = run_in(dir.path(), &["gf-check", "--q", "0", "--c", "1/4", "--eta", "1/2", "--N", "16,32,64", "--out", "-"]);
    assert_eq!(out.status.code(), Some(0));
    let r: ContractionReport = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r.target, "gf");
    let d: Vec<f64> = r.dev_candidate1.iter().map(|x| x.unwrap()).collect();
    assert!(d[2] < d[0]);
}

#[test]
fn invalid_config_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        &["gen-a", "--q", "2", "--c", "1", "--N", "4"][..],
        &["gen-a", "--q", "0", "--c", "0", "--N", "4"],
        &["gen-a", "--q", "0", "--c", "1/0", "--N", "4"],
        &["gen-a", "--q", "0", "--c", "1", "--N", "65"],
        &["contract-a", "--q", "0", "--c", "1", "--j", "1", "--N", "64,32"],
        &["gf-check", "--q", "0", "--c", "1", "--eta", "1", "--N", "300"],
        &["verify", "--N-max", "100"],
        &["no-such-command"],
    ] {
        let out = run_in(dir.path(), args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn byte_identical_runs_and_env_dir() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("reports");
    let mut outputs = Vec::new();
    for _ in 0..2 {
        let out = bin()
            .current_dir(dir.path())
            .env("SU2_DORTHO_OUT_DIR", &target)
            .args(["verify", "--quick", "--seed", "42"])
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0));
        outputs.push(std::fs::read(target.join("verify.json")).unwrap());
    }
    assert_eq!(outputs[0], outputs[1]);
    let a = run_in(dir.path(), &["contract-a", "--q", "1", "--c", "-3/7", "--j", "3", "--N", "32,64", "--out", "-"]);
    let b = run_in(dir.path(), &["contract-a", "--q", "1", "--c", "-3/7", "--j", "3", "--N", "32,64", "--out", "-"]);
    assert_eq!(a.stdout, b.stdout);
}
