use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_asym-plane"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn read_csv(path: &Path) -> (Vec<String>, Vec<Vec<f64>>) {
    let mut rdr = csv::Reader::from_path(path).unwrap();
    let header = rdr.headers().unwrap().iter().map(String::from).collect();
    let rows = rdr
        .records()
        .map(|r| r.unwrap().iter().map(|f| f.parse().unwrap()).collect())
        .collect();
    (header, rows)
}

fn col(header: &[String], name: &str) -> usize {
    header.iter().position(|h| h == name).unwrap()
}

const BASE: [&str; 14] = [
    "--p", "1", "--radius", "1", "--lambda", "1", "--mu", "1", "--rmax", "5", "--nr", "50",
    "--ntheta", "36",
];

fn kirsch_csv(dir: &Path, name: &str, extra: &[&str]) -> (Vec<String>, Vec<Vec<f64>>) {
    let out = dir.join(name);
    let mut args = vec!["kirsch"];
    args.extend(BASE);
    args.extend(extra);
    args.extend(["--output", out.to_str().unwrap()]);
    let o = run(&args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    read_csv(&out)
}

#[test]
fn kirsch_csv_has_fixed_header_and_hoop_stress() {
    let dir = tempfile::tempdir().unwrap();
    let (header, rows) = kirsch_csv(dir.path(), "k.csv", &["--mu0", "0"]);
    assert_eq!(
        header.join(","),
        "x,y,r,theta,srr,stt,srt,s11,s12,s22,ur,utheta,u,v,U,Q"
    );
    assert_eq!(rows.len(), 50 * 36);
    let (r, t, stt) = (
        col(&header, "r"),
        col(&header, "theta"),
        col(&header, "stt"),
    );
    let row = rows
        .iter()
        .find(|row| row[r] == 1.0 && (row[t] - std::f64::consts::FRAC_PI_2).abs() < 1e-12)
        .unwrap();
    assert!((row[stt] - 3.0).abs() < 1e-12);
    // r-major: radius is nondecreasing down the file
    assert!(rows.windows(2).all(|w| w[0][r] <= w[1][r]));
}

#[test]
fn zero_load_gives_zero_fields() {
    let dir = tempfile::tempdir().unwrap();
    let (_, rows) = kirsch_csv(dir.path(), "z.csv", &["--p", "0", "--mu0", "1"]);
    for row in rows {
        assert!(row[4..].iter().all(|v| *v == 0.0));
    }
}

#[test]
fn mu0_changes_displacements_but_not_stresses() {
    let dir = tempfile::tempdir().unwrap();
    let (h, a) = kirsch_csv(dir.path(), "a.csv", &["--mu0", "0"]);
    let (_, b) = kirsch_csv(dir.path(), "b.csv", &["--mu0", "1"]);
    let stress = ["srr", "stt", "srt", "s11", "s12", "s22", "U", "Q"].map(|n| col(&h, n));
    let disp = ["ur", "utheta", "u", "v"].map(|n| col(&h, n));
    for (ra, rb) in a.iter().zip(&b) {
        for &c in &stress {
            assert_eq!(ra[c], rb[c]);
        }
    }
    assert!(a
        .iter()
        .zip(&b)
        .any(|(ra, rb)| disp.iter().any(|&c| ra[c] != rb[c])));
}

#[test]
fn output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    kirsch_csv(dir.path(), "1.csv", &["--mu0", "0.3"]);
    kirsch_csv(dir.path(), "2.csv", &["--mu0", "0.3"]);
    let one = std::fs::read(dir.path().join("1.csv")).unwrap();
    let two = std::fs::read(dir.path().join("2.csv")).unwrap();
    assert_eq!(one, two);
}

#[test]
fn degrees_flag_converts_angle_inputs() {
    let dir = tempfile::tempdir().unwrap();
    let (h, rows) = kirsch_csv(
        dir.path(),
        "d.csv",
        &[
            "--degrees",
            "--theta-start",
            "90",
            "--theta-end",
            "180",
            "--ntheta",
            "2",
            "--nr",
            "1",
        ],
    );
    let t = col(&h, "theta");
    assert_eq!(rows.len(), 2);
    assert!((rows[0][t] - std::f64::consts::FRAC_PI_2).abs() < 1e-15);
    assert!((rows[1][t] - 3.0 * std::f64::consts::FRAC_PI_4).abs() < 1e-15);
}

#[test]
fn exit_codes() {
    // bad input
    assert_eq!(run(&["kirsch", "--mu", "1"]).status.code(), Some(2));
    assert_eq!(run(&["kirsch", "--lambda", "1"]).status.code(), Some(2));
    assert_eq!(
        run(&["kirsch", "--lambda", "1", "--lambda0", "2", "--mu", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["kirsch", "--lambda", "1", "--mu", "-1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["kirsch", "--lambda", "1", "--mu", "1", "--nr", "0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["kirsch", "--lambda", "1", "--mu", "1", "--format", "xml"])
            .status
            .code(),
        Some(2)
    );
    // domain violation
    assert_eq!(
        run(&["kirsch", "--lambda", "1", "--mu", "1", "--rmin", "0.5"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        run(&["verify", "--lambda", "1", "--mu", "1", "--h", "0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["verify", "--lambda", "1", "--mu", "1", "--radius", "-1"])
            .status
            .code(),
        Some(2)
    );
}

fn verify_report(extra: &[&str]) -> (Option<i32>, Value) {
    let mut args = vec!["verify", "--lambda", "1", "--mu", "1", "--mu0", "0.5"];
    args.extend(extra);
    let o = run(&args);
    let v = serde_json::from_slice(&o.stdout).unwrap_or(Value::Null);
    (o.status.code(), v)
}

#[test]
fn verify_defaults_pass_and_echo_both_lambdas() {
    let (code, v) = verify_report(&[]);
    assert_eq!(code, Some(0));
    assert_eq!(v["passed"], Value::Bool(true));
    assert_eq!(v["scenario"]["moduli"]["lambda"], 1.0);
    assert_eq!(v["scenario"]["moduli"]["lambda0"], 2.0);
    let checks = v["checks"].as_array().unwrap();
    for name in [
        "equilibrium",
        "compatibility",
        "laplace_trace",
        "biharmonic",
        "cauchy_riemann",
        "displacement_consistency",
    ] {
        let c = checks.iter().find(|c| c["check"] == name).unwrap();
        let o = c["order"].as_f64().unwrap();
        assert!((1.8..=2.2).contains(&o), "{name}: {o}");
    }
}

#[test]
fn coarse_step_still_converges_at_second_order() {
    let (code, v) = verify_report(&["--h", "0.1"]);
    assert_eq!(code, Some(0));
    for c in v["checks"].as_array().unwrap() {
        let o = c["order"].as_f64().unwrap();
        assert!((o - 2.0).abs() < 0.05, "{}: {o}", c["check"]);
    }
}

#[test]
fn planted_defects_fail_verification() {
    for defect in ["s12", "trace", "airy", "e11", "harmonic", "displacement"] {
        let (code, v) = verify_report(&["--corrupt", defect]);
        assert_eq!(code, Some(1), "{defect}");
        assert_eq!(v["passed"], Value::Bool(false));
        assert_eq!(v["scenario"]["corruption"], defect);
    }
    assert_eq!(verify_report(&["--corrupt", "nope"]).0, Some(2));
}

#[test]
fn verify_writes_report_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let o = run(&[
        "verify",
        "--lambda0",
        "3",
        "--mu",
        "1",
        "--output",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(v["scenario"]["moduli"]["lambda"], 2.0);
}

#[test]
fn raw_potentials_can_be_sampled_and_verified() {
    let dir = tempfile::tempdir().unwrap();
    let pot = dir.path().join("pot.json");
    std::fs::write(
        &pot,
        r#"{"phi": {"n_min": -1, "coeffs": [[0.5, 0.0], [0.0, 0.0], [0.25, 0.1]]},
            "psi": {"n_min": -3, "coeffs": [[0.2, 0.0], [0.0, 0.0], [-0.5, 0.0], [0.0, 0.0], [0.3, -0.2]]}}"#,
    )
    .unwrap();
    let p = pot.to_str().unwrap();
    let out = dir.path().join("f.csv");
    let o = run(&[
        "kirsch",
        "--lambda",
        "1",
        "--mu",
        "1",
        "--mu0",
        "2",
        "--potentials",
        p,
        "--rmin",
        "1.5",
        "--nr",
        "3",
        "--ntheta",
        "4",
        "--output",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(read_csv(&out).1.len(), 12);
    let o = run(&["verify", "--lambda", "1", "--mu", "1", "--potentials", p]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stdout)
    );
    // singular pair: grid through the excluded disc is a domain error
    let o = run(&[
        "kirsch",
        "--lambda",
        "1",
        "--mu",
        "1",
        "--potentials",
        p,
        "--rmin",
        "0.5",
    ]);
    assert_eq!(o.status.code(), Some(3));
    std::fs::write(&pot, "{\"phi\": 1}").unwrap();
    assert_eq!(
        run(&["kirsch", "--lambda", "1", "--mu", "1", "--potentials", p])
            .status
            .code(),
        Some(2)
    );
}

fn limits(extra: &[&str]) -> (Option<i32>, Vec<csv::StringRecord>, csv::StringRecord) {
    let mut args = vec!["limits", "--p", "1", "--radius", "1", "--lambda", "1"];
    args.extend(extra);
    let o = run(&args);
    let mut rdr = csv::Reader::from_reader(o.stdout.as_slice());
    let header = rdr.headers().cloned().unwrap_or_default();
    (
        o.status.code(),
        rdr.records().map(Result::unwrap).collect(),
        header,
    )
}

#[test]
fn limits_mu_sweep_approaches_the_degenerate_amplitude() {
    let (code, rows, h) = limits(&[
        "--mu0",
        "1",
        "--sweep",
        "mu",
        "--values",
        "1,0.1,0.01,0.001",
    ]);
    assert_eq!(code, Some(0));
    let idx = |n: &str| h.iter().position(|c| c == n).unwrap();
    let get = |r: &csv::StringRecord, n: &str| r[idx(n)].parse::<f64>().unwrap();
    let last = rows.last().unwrap();
    assert!((get(last, "coefficient") - 0.25).abs() < 1e-6);
    // classical amplitude blows up like 1/mu
    let c: Vec<f64> = rows
        .iter()
        .map(|r| get(r, "classical_coefficient"))
        .collect();
    assert!(c.windows(2).all(|w| w[1] > w[0]));
    assert!((c[3] / c[2] - 10.0).abs() < 0.1);
}

#[test]
fn limits_mu0_sweep_starts_at_the_classical_values() {
    let (code, rows, h) = limits(&["--mu", "0.7", "--sweep", "mu0", "--values", "0,0.5,2"]);
    assert_eq!(code, Some(0));
    let idx = |n: &str| h.iter().position(|c| c == n).unwrap();
    let a: f64 = rows[0][idx("coefficient")].parse().unwrap();
    let b: f64 = rows[0][idx("classical_coefficient")].parse().unwrap();
    assert!((a - b).abs() <= 1e-15 * b);
    let later: f64 = rows[2][idx("coefficient")].parse().unwrap();
    assert!((later - b).abs() > 1e-3);
}

#[test]
fn limits_log_sweep_and_validation() {
    let (code, rows, _) = limits(&[
        "--mu", "1", "--mu0", "1", "--sweep", "mu", "--from", "1", "--to", "1e-4", "--count", "5",
    ]);
    assert_eq!(code, Some(0));
    assert_eq!(rows.len(), 5);
    assert_eq!(&rows[4][1], "0.0001");
    assert_eq!(limits(&["--mu", "1", "--sweep", "mu"]).0, Some(2));
    assert_eq!(
        limits(&["--mu", "1", "--sweep", "mu", "--from", "1", "--to", "0.1", "--count", "0"]).0,
        Some(2)
    );
    assert_eq!(
        limits(&["--mu", "1", "--sweep", "mu", "--values", ""]).0,
        Some(2)
    );
    // mu = mu0 = 0 is not a valid material
    assert_eq!(
        limits(&["--mu", "0", "--sweep", "mu0", "--values", "0"]).0,
        Some(2)
    );
}

#[test]
fn constitutive_prints_both_directions() {
    let o = run(&[
        "constitutive",
        "--lambda0",
        "2",
        "--mu",
        "1",
        "--mu0",
        "1",
        "--strain",
        "1,0.5,-0.25",
    ]);
    assert!(o.status.success());
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["determinant"], 32.0);
    assert_eq!(v["stress_trace"], 2.0 * 2.0 * 0.75);
    let s = [
        &v["stress"]["s11"],
        &v["stress"]["s12"],
        &v["stress"]["s22"],
    ]
    .map(|x| x.as_f64().unwrap().to_string());
    let back = run(&[
        "constitutive",
        "--lambda0",
        "2",
        "--mu",
        "1",
        "--mu0",
        "1",
        "--stress",
        &s.join(","),
    ]);
    let w: Value = serde_json::from_slice(&back.stdout).unwrap();
    for (k, e) in [("e11", 1.0), ("e12", 0.5), ("e22", -0.25)] {
        assert!((w["strain"][k].as_f64().unwrap() - e).abs() < 1e-14);
    }
    assert_eq!(
        run(&["constitutive", "--lambda", "1", "--mu", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&[
            "constitutive",
            "--lambda",
            "1",
            "--mu",
            "1",
            "--strain",
            "1,2"
        ])
        .status
        .code(),
        Some(2)
    );
}
