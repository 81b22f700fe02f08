//! The `urbansg` binary end to end.

use std::process::{Command, Output};

fn urbansg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_urbansg"))
        .args(args)
        .env_remove("URBANSG_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    assert!(o.status.success(), "stderr: {}", String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn calc_prints_nine_significant_digits() {
    let cases: [(&[&str], &str); 6] = [
        (
            &["calc", "ppp", "--dim", "3", "--rho", "7.56e-4", "--d", "2"],
            "0.62206669",
        ),
        (&["calc", "rd"], "484.274649"),
        (&["calc", "rv", "--rio", "50"], "280.465084"),
        (&["calc", "rho-csma", "--dim", "3", "--rho", "3.5e-8"], "1.44525445e-08"),
        (
            &["calc", "mmp", "--dim", "3", "--rho", "7.56e-4", "--rio", "50"],
            "0.949376518",
        ),
        (
            &["calc", "mmp", "--dim", "2", "--lambda", "1.51e-2", "--rio", "50"],
            "0.926962069",
        ),
    ];
    for (args, want) in cases {
        assert_eq!(stdout(&urbansg(args)).trim(), want, "{args:?}");
    }
}

#[test]
fn calc_accepts_threshold_in_dbm() {
    let a = stdout(&urbansg(&["calc", "rd", "--td-dbm", "-76"]));
    assert_eq!(a.trim(), "484.274649");
    let b = stdout(&urbansg(&["calc", "rd", "--pt-mw", "1", "--td-dbm", "-60"]));
    assert!((b.trim().parse::<f64>().unwrap() - 484.274649 / 10f64.powf(0.9)).abs() < 1e-5);
    assert!(!urbansg(&["calc", "rd", "--td-dbm", "-60", "--td-mw", "1e-6"])
        .status
        .success());
}

#[test]
fn calc_rejects_bad_input() {
    assert!(!urbansg(&["calc", "ppp", "--dim", "4", "--rho", "1", "--d", "1"])
        .status
        .success());
    let o = urbansg(&["calc", "ppp", "--dim", "3", "--rho", "1e-3", "--d", "1", "--alpha", "3"]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("error"));
}

#[test]
fn figure_list() {
    let names: Vec<String> = stdout(&urbansg(&["figure", "--list"]))
        .lines()
        .map(String::from)
        .collect();
    assert_eq!(
        names,
        [
            "ppp-compare",
            "ppp-sim",
            "mmp-compare",
            "mmp-intensity",
            "mmp-sim-2000",
            "mmp-sim-200-20",
            "mmp-sim-lowpower"
        ]
    );
}

#[test]
fn unknown_figure_fails() {
    let o = urbansg(&["figure", "nope"]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("nope"));
}

#[test]
fn analytic_figure_csv_shape() {
    let csv = stdout(&urbansg(&["figure", "ppp-compare"]));
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("d_m,series,value,ci_low,ci_high"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 2 * 101);
    assert!(rows.iter().all(|r| r.split(',').count() == 5 && r.ends_with(",,")));
}

#[test]
fn simulated_figure_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for p in [&a, &b] {
        let o = urbansg(&[
            "figure",
            "ppp-sim",
            "--trials",
            "100",
            "--seed",
            "3",
            "--out",
            p.to_str().unwrap(),
        ]);
        assert!(o.status.success());
        assert!(o.stdout.is_empty());
    }
    let (a, b) = (std::fs::read(a).unwrap(), std::fs::read(b).unwrap());
    assert_eq!(a, b);
    assert!(String::from_utf8(a)
        .unwrap()
        .lines()
        .any(|l| l.contains("ppp_sim/3D/Z=10")));
}

#[test]
fn seed_from_environment_and_flag_precedence() {
    let run = |env: Option<&str>, flag: Option<&str>| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_urbansg"));
        cmd.args(["figure", "ppp-sim", "--trials", "50"])
            .env_remove("URBANSG_SEED");
        if let Some(e) = env {
            cmd.env("URBANSG_SEED", e);
        }
        if let Some(f) = flag {
            cmd.args(["--seed", f]);
        }
        stdout(&cmd.output().unwrap())
    };
    let env5 = run(Some("5"), None);
    assert_eq!(env5, run(None, Some("5")));
    assert_eq!(run(Some("5"), Some("6")), run(None, Some("6")));
    assert_ne!(env5, run(None, Some("6")));
}

#[test]
fn run_custom_config() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("exp.toml");
    std::fs::write(
        &cfg,
        r#"
[channel]
alpha = 4
mu = 1

[radio]
beta = 10

[grid]
values = [1, 2]

[[scenario]]
model = "ppp_analytic"
dimension = 3
rho = 7.56e-4
label = "dense"
"#,
    )
    .unwrap();
    let csv = stdout(&urbansg(&["run", cfg.to_str().unwrap()]));
    let rows: Vec<&str> = csv.lines().collect();
    assert_eq!(rows.len(), 3);
    assert!(rows[2].starts_with("2.0,dense/3D,0.6220666"), "{}", rows[2]);
}

#[test]
fn empty_grid_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("empty.toml");
    std::fs::write(
        &cfg,
        "[grid]\nvalues = []\n\n[[scenario]]\nmodel = \"ppp_analytic\"\ndimension = 2\nlambda2d = 0.01\n",
    )
    .unwrap();
    let o = urbansg(&["run", cfg.to_str().unwrap()]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("grid"));
}

#[test]
fn unknown_config_key_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("typo.toml");
    std::fs::write(&cfg, "[grid]\nvalues = [1]\nstpe = 2\n").unwrap();
    assert!(!urbansg(&["run", cfg.to_str().unwrap()]).status.success());
}

#[test]
fn selftest_passes() {
    let out = stdout(&urbansg(&["selftest"]));
    assert!(out.lines().filter(|l| l.starts_with("PASS")).count() >= 10);
    assert!(!out.contains("FAIL"));
}
