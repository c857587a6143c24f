use std::fs;
use std::path::Path;

use dirac_scatter::error::Error;
use dirac_scatter::potentials::PotentialSpec;
use rls_cli::config::{load_config, parse_config, write_config, LambdaSpec};
use rls_cli::error::CliError;
use rls_cli::run_command;
use serde_json::Value;

const SMALL_GRID: &str = "[grid]\nn_r = 10\nsphere_order = 8\nr_max = 6.0\n";

fn yukawa_config(extra_solver: &str) -> String {
    format!("[potential]\nfamily = \"yukawa\"\nstrength = 0.25\nrange = 1.0\n\n{SMALL_GRID}\n[solver]\nm = 1.0\nlambda = 1.5\n{extra_solver}")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn run(args: &[&str]) -> i32 {
    let mut v = vec!["rls"];
    v.extend_from_slice(args);
    run_command(v)
}

fn manifest(dir: &Path) -> Value {
    serde_json::from_str(&fs::read_to_string(dir.join("manifest.json")).unwrap()).unwrap()
}

fn csv_rows(path: &Path) -> (Vec<String>, Vec<Vec<String>>) {
    let text = fs::read_to_string(path).unwrap();
    let mut lines = text.lines();
    let header = lines.next().unwrap().split(',').map(String::from).collect();
    (header, lines.map(|l| l.split(',').map(String::from).collect()).collect())
}

#[test]
fn minimal_config_gets_defaults() {
    let cfg = parse_config("[potential]\nfamily = \"yukawa\"\nstrength = 0.2\nrange = 0.5\n[solver]\nm = 1.0\nlambda = 1.5\n").unwrap();
    assert_eq!(cfg.grid.n_r, 32);
    assert_eq!(cfg.grid.sphere_order, 26);
    assert_eq!(cfg.grid.volume_order, 11);
    assert_eq!(cfg.grid.r_max, Some(6.0));
    assert_eq!(cfg.lambdas(), vec![1.5]);
}

#[test]
fn below_threshold_energy_is_rejected() {
    let e = parse_config("[potential]\nfamily = \"zero\"\n[solver]\nm = 1.0\nlambda = 0.5\n").unwrap_err();
    assert!(e.to_string().contains("requires |lambda| > m"), "{e}");
    assert_eq!(e.exit_code(), 1);
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "c.toml", "[potential]\nfamily = \"zero\"\n[solver]\nm = 1.0\nlambda = 0.5\n");
    assert_eq!(run(&["solve", "--config", &cfg, "--out", dir.path().join("o").to_str().unwrap()]), 1);
}

#[test]
fn unknown_keys_are_rejected() {
    for text in [
        "[potential]\nfamily = \"zero\"\n[solver]\nm = 1.0\nlambda = 1.5\nlamda = 2.0\n",
        "[potential]\nfamily = \"yukawa\"\nstrength = 0.1\nrange = 1.0\nrnage = 2.0\n[solver]\nm = 1.0\nlambda = 1.5\n",
        "[potential]\nfamily = \"zero\"\n[grid]\nnr = 3\n[solver]\nm = 1.0\nlambda = 1.5\n",
        "[potential]\nfamily = \"zero\"\n[solver]\nm = 1.0\nlambda = 1.5\n[extra]\nx = 1\n",
    ] {
        assert!(matches!(parse_config(text), Err(CliError::Validation(_))), "{text}");
    }
}

#[test]
fn config_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let text = "[potential]\nfamily = \"gaussian\"\nstrength = 4.5\nrange = 1.5\n[grid]\nn_r = 12\n[solver]\nm = 1.0\nlambda = { start = 1.001, stop = 1.3, count = 5, spacing = \"log-offset\" }\nrank = 10\n";
    let cfg = parse_config(text).unwrap();
    let p = dir.path().join("rt.toml");
    write_config(&p, &cfg).unwrap();
    assert_eq!(load_config(&p).unwrap(), cfg);
    let ls = cfg.lambdas();
    assert_eq!(ls.len(), 5);
    assert!((ls[0] - 1.001).abs() < 1e-12 && (ls[4] - 1.3).abs() < 1e-12);
    assert!(ls.windows(2).all(|w| w[1] > w[0]));
    if let PotentialSpec::Gaussian { strength, .. } = cfg.potential {
        assert_eq!(strength, 4.5);
    } else {
        panic!("family lost");
    }
}

#[test]
fn error_kinds_map_to_exit_codes() {
    assert_eq!(CliError::from(Error::NearExceptional { lambda: 1.2, condition: 1e13 }).exit_code(), 2);
    assert_eq!(CliError::from(Error::Numerical("x".into())).exit_code(), 2);
    assert_eq!(CliError::from(Error::Invalid("x".into())).exit_code(), 1);
    assert_eq!(run(&["solve", "--config", "/nonexistent/c.toml"]), 3);
    assert_eq!(run(&["no-such-command"]), 1);
    assert_eq!(run(&["--help"]), 0);
    assert_eq!(run(&["solve"]), 1);
}

#[test]
fn smatrix_of_zero_potential_is_identity() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "c.toml", &format!("[potential]\nfamily = \"zero\"\n{SMALL_GRID}[solver]\nm = 1.0\nlambda = 1.5\n"));
    let out = dir.path().join("o");
    assert_eq!(run(&["smatrix", "--config", &cfg, "--out", out.to_str().unwrap()]), 0);
    let m = manifest(&out);
    assert_eq!(m["diagnostics"]["unitarity_defect"].as_f64(), Some(0.0));
    assert_eq!(m["diagnostics"]["max_abs_mu_minus_one"].as_f64(), Some(0.0));
    let (header, rows) = csv_rows(&out.join("spectrum.csv"));
    assert_eq!(header, ["j", "re_mu", "im_mu", "abs_mu", "arg_mu", "eigen_residual"]);
    assert!(rows.iter().all(|r| r[1] == "1.0" && r[2] == "0.0"));
}

#[test]
fn scan_emits_one_row_per_energy() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(
        dir.path(),
        "c.toml",
        &format!("[potential]\nfamily = \"gaussian\"\nstrength = 1.0\nrange = 1.0\n[grid]\nn_r = 8\nr_max = 4.0\n[solver]\nm = 1.0\nlambda = {{ start = 1.05, stop = 2.0, count = 20 }}\nrefine = 4\n"),
    );
    let out = dir.path().join("o");
    assert_eq!(run(&["exceptional-scan", "--config", &cfg, "--out", out.to_str().unwrap()]), 0);
    let (header, rows) = csv_rows(&out.join("scan.csv"));
    assert_eq!(header, ["lambda", "sigma_min", "flagged"]);
    assert_eq!(rows.len(), 20);
}

#[test]
fn reconstruct_meets_its_tolerance() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "c.toml", &yukawa_config("samples = 12\n"));
    let out = dir.path().join("o");
    assert_eq!(run(&["reconstruct", "--config", &cfg, "--out", out.to_str().unwrap()]), 0);
    let m = manifest(&out);
    assert!(m["diagnostics"]["max_relative_error"].as_f64().unwrap() <= 0.05);
    assert!(m["diagnostics"]["max_relative_error_amplitude"].as_f64().unwrap() <= 0.05);
    let (_, rows) = csv_rows(&out.join("reconstruct.csv"));
    assert_eq!(rows.len(), 12 * 4);
}

#[test]
fn manifest_references_existing_files() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "c.toml", &yukawa_config("l_max = 3\ncompare_spectrum = false\n"));
    for cmd in ["solve", "partial-wave", "kernel-check"] {
        let out = dir.path().join(cmd);
        assert_eq!(run(&[cmd, "--config", &cfg, "--out", out.to_str().unwrap()]), 0, "{cmd}");
        let m = manifest(&out);
        assert_eq!(m["schema_version"].as_u64(), Some(1));
        assert_eq!(m["command"].as_str(), Some(cmd));
        assert_eq!(m["config"]["solver"]["m"].as_f64(), Some(1.0));
        for entry in m["outputs"].as_array().unwrap() {
            for f in entry["files"].as_array().unwrap() {
                assert!(out.join(f.as_str().unwrap()).is_file(), "{cmd}: {f}");
            }
        }
    }
    let (header, rows) = csv_rows(&dir.path().join("partial-wave/channels.csv"));
    assert_eq!(header, ["l", "nu", "kappa_d", "delta", "re_s", "im_s", "mu_s_difference", "matching_drift"]);
    assert_eq!(rows.len(), 7);
}

#[test]
fn multiple_energies_need_sweep() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "c.toml", &yukawa_config("").replace("lambda = 1.5", "lambda = [1.5, 1.8]"));
    let out = dir.path().join("o");
    assert_eq!(run(&["solve", "--config", &cfg, "--out", out.to_str().unwrap()]), 1);
    assert_eq!(run(&["solve", "--config", &cfg, "--lambda", "1.8", "--out", out.to_str().unwrap()]), 0);
    assert_eq!(manifest(&out)["outputs"][0]["lambda"].as_f64(), Some(1.8));
    assert_eq!(run(&["solve", "--config", &cfg, "--lambda", "0.9", "--out", out.to_str().unwrap()]), 1);
}

#[test]
fn sweep_rows_are_sorted_and_reruns_identical() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "c.toml", &yukawa_config("l_max = 3\n").replace("lambda = 1.5", "lambda = [1.8, 1.2, 1.6]"));
    let a = dir.path().join("a");
    let b = dir.path().join("b");
    assert_eq!(run(&["sweep", "partial-wave", "--config", &cfg, "--threads", "2", "--out", a.to_str().unwrap()]), 0);
    assert_eq!(run(&["sweep", "partial-wave", "--config", &cfg, "--threads", "1", "--out", b.to_str().unwrap()]), 0);
    let (_, rows) = csv_rows(&a.join("sweep.csv"));
    let ls: Vec<f64> = rows.iter().map(|r| r[0].parse().unwrap()).collect();
    assert_eq!(ls, vec![1.2, 1.6, 1.8]);
    for f in ["sweep.csv", "channels_000.csv", "channels_002.csv", "partial_wave_amplitudes_001.csv"] {
        assert_eq!(fs::read(a.join(f)).unwrap(), fs::read(b.join(f)).unwrap(), "{f}");
    }
}

#[test]
fn lambda_forms_parse() {
    let base = "[potential]\nfamily = \"zero\"\n[solver]\nm = 1.0\n";
    let one = parse_config(&format!("{base}lambda = -1.5\n")).unwrap();
    assert_eq!(one.solver.lambda, LambdaSpec::One(-1.5));
    let many = parse_config(&format!("{base}lambda = [1.5, 2.5]\n")).unwrap();
    assert_eq!(many.lambdas(), vec![1.5, 2.5]);
    assert!(parse_config(&format!("{base}lambda = {{ start = 1.5, stop = 2.0, count = 0 }}\n")).is_err());
    assert!(parse_config(&format!("{base}lambda = []\n")).is_err());
}
