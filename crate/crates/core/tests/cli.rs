mod common;

use std::path::Path;
use std::process::{Command, Output};

use common::check_golden;
use usc_polariton::oracle::commutator_matrix;
use usc_polariton::sweep::{render_csv, run_sweep, OutputFormat, SweepConfig, SweepResult};
use usc_polariton::{mbc_dielectric_rate, mbc_metallic_rate, oracle_diagonalize};

fn sweep_cmd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_usc-sweep"))
        .args(args)
        .output()
        .expect("run usc-sweep")
}

fn run_to(dir: &Path, name: &str, extra: &[&str]) -> Vec<u8> {
    let out = dir.join(name);
    let mut args = vec!["--out", out.to_str().unwrap()];
    args.extend_from_slice(extra);
    let o = sweep_cmd(&args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    std::fs::read(out).unwrap()
}

#[test]
fn default_csv_is_deterministic_and_matches_golden() {
    let dir = tempfile::tempdir().unwrap();
    let first = run_to(dir.path(), "a.csv", &[]);
    let second = run_to(dir.path(), "b.csv", &[]);
    assert_eq!(first, second);
    check_golden("default_sweep.csv", std::str::from_utf8(&first).unwrap());
}

#[test]
fn default_summary_matches_golden() {
    let result = run_sweep(&SweepConfig::default()).unwrap();
    let text = serde_json::to_string_pretty(&result.summary).unwrap() + "\n";
    check_golden("default_summary.json", &text);
}

#[test]
fn json_round_trips_rows_exactly() {
    let dir = tempfile::tempdir().unwrap();
    let bytes = run_to(dir.path(), "r.json", &["--format", "json"]);
    let parsed: SweepResult = serde_json::from_slice(&bytes).unwrap();
    let direct = run_sweep(&SweepConfig {
        output_format: OutputFormat::Json,
        ..SweepConfig::default()
    })
    .unwrap();
    assert_eq!(parsed.rows, direct.rows);
    assert_eq!(parsed.summary, direct.summary);
    assert_eq!(parsed.skipped, direct.skipped);
    assert_eq!(parsed.metadata.config, direct.metadata.config);
}

#[test]
fn csv_without_out_goes_to_stdout() {
    let o = sweep_cmd(&["--g-min", "0.1", "--g-max", "0.2", "--steps", "3"]);
    assert!(o.status.success());
    let cfg = SweepConfig {
        g_min: 0.1,
        g_max: 0.2,
        steps: 3,
        ..SweepConfig::default()
    };
    assert_eq!(
        String::from_utf8(o.stdout).unwrap(),
        render_csv(&run_sweep(&cfg).unwrap())
    );
}

#[test]
fn golden_rows_agree_with_oracle_rates() {
    let text = std::fs::read_to_string(common::golden_path("default_sweep.csv")).unwrap();
    let base = SweepConfig::default().params_base;
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "g,omega_L,omega_U,kappa_naive_L,kappa_naive_U,kappa_norm_L,kappa_norm_U,\
         kappa_mbc_diel_L,kappa_mbc_diel_U,kappa_mbc_metal_L,kappa_mbc_metal_U,ratio_naive_over_norm"
    );
    let mut rows = 0;
    for line in lines {
        let v: Vec<f64> = line.split(',').map(|f| f.parse().unwrap()).collect();
        let sol = oracle_diagonalize(&commutator_matrix(&base.with_g(v[0]))).unwrap();
        let (wl, wu) = (
            sol.coefficients[0][0].norm_sqr(),
            sol.coefficients[1][0].norm_sqr(),
        );
        let total = wl + wu;
        let (ol, ou) = (sol.frequencies[0], sol.frequencies[1]);
        // rates in units of κ₀, photon-weighted mirror profiles
        let expected = [
            v[0],
            ol,
            ou,
            wl,
            wu,
            wl / total,
            wu / total,
            wl / total * mbc_dielectric_rate(ol, 1.0, 1.0),
            wu / total * mbc_dielectric_rate(ou, 1.0, 1.0),
            wl / total * mbc_metallic_rate(ol, 1.0, 1.0).unwrap(),
            wu / total * mbc_metallic_rate(ou, 1.0, 1.0).unwrap(),
            total,
        ];
        for (got, want) in v.iter().zip(expected) {
            assert!((got - want).abs() < 1e-9, "g = {}: {got} vs {want}", v[0]);
        }
        rows += 1;
    }
    // g = 0 is degenerate at resonance and skipped
    assert_eq!(rows, 200);
}

#[test]
fn usage_errors_exit_with_two() {
    let o = sweep_cmd(&["--steps", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--steps"));

    let o = sweep_cmd(&["--mirror", "silver"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--mirror"));
}

#[test]
fn io_errors_exit_with_one() {
    let o = sweep_cmd(&["--out", "/nonexistent-dir/rates.csv"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("/nonexistent-dir/rates.csv"));

    let o = sweep_cmd(&["--config", "/nonexistent-dir/sweep.conf"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn fully_unstable_sweep_exits_with_one() {
    let o = sweep_cmd(&["--variant", "no-a2", "--g-min", "0.6", "--g-max", "0.9"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("no stable grid point"));
}

#[test]
fn config_file_is_overridden_by_flags() {
    let dir = tempfile::tempdir().unwrap();
    let conf = dir.path().join("sweep.conf");
    std::fs::write(&conf, "# sweep\nvariant=no-a2\nsteps=5\ng-max=0.3\n").unwrap();
    let conf = conf.to_str().unwrap();
    let from_file = run_to(
        dir.path(),
        "a.json",
        &["--config", conf, "--format", "json"],
    );
    let overridden = run_to(
        dir.path(),
        "b.json",
        &[
            "--config",
            conf,
            "--format",
            "json",
            "--variant",
            "full-hopfield",
        ],
    );
    let a: SweepResult = serde_json::from_slice(&from_file).unwrap();
    let b: SweepResult = serde_json::from_slice(&overridden).unwrap();
    assert_eq!(a.metadata.variant.as_str(), "no-a2");
    assert_eq!(b.metadata.variant.as_str(), "full-hopfield");
    assert_eq!(a.rows.len() + a.skipped.len(), 5);
    assert_eq!(b.metadata.config.g_max, 0.3);
}

#[test]
fn skipped_points_warn_on_stderr() {
    let o = sweep_cmd(&["--steps", "3"]);
    assert!(o.status.success());
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("warning: skipped g = 0"), "{err}");
}
