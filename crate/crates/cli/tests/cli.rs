use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_plr-atop"));
    cmd.env_remove("PLR_SEED");
    cmd
}

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn compute_eq1_order_two() {
    let out = bin()
        .args(["compute", "--method", "plr-expanded:square"])
        .arg(data("eq1.plr"))
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("order 2\n"), "{text}");
    assert!(
        text.contains("(1 6)(3 4) | (1 5)(3 8)(4 6)(7 9) | (1 2)(4 5)(6 7)"),
        "{text}"
    );
}

#[test]
fn invariant_flag_overrides_method_suffix() {
    let run = |args: &[&str]| {
        let out = bin().args(args).arg(data("eq1.plr")).output().unwrap();
        assert!(out.status.success());
        stdout(&out)
    };
    let a = run(&[
        "compute",
        "--method",
        "alpha-beta:sei",
        "--invariant",
        "none",
    ]);
    let b = run(&["compute", "--method", "rook-flat"]);
    assert_eq!(a, b);
}

#[test]
fn square_classes_of_eq2() {
    let out = bin()
        .args(["invariants", "--kind", "square"])
        .arg(data("eq2.plr"))
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "# square classes: 3\n1 2 1 1 2\n2 1 1 1 2\n1 1 1 2 2\n1 1 2 1 2\n2 2 2 2 3\n"
    );
}

#[test]
fn generate_zero_attempts_is_empty() {
    let out = bin()
        .args([
            "generate", "--suite", "a", "--r", "5", "--s", "5", "--n", "5", "--x", "0", "--seed",
            "7",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        format!("PLR 5 5 5\n{}", ". . . . .\n".repeat(5))
    );
}

#[test]
fn seed_from_environment_and_flag_precedence() {
    let args = [
        "generate", "--suite", "b", "--r", "3", "--s", "4", "--n", "4", "--x", "6",
    ];
    let env = bin().args(args).env("PLR_SEED", "11").output().unwrap();
    let flag = bin().args(args).args(["--seed", "11"]).output().unwrap();
    let both = bin()
        .args(args)
        .args(["--seed", "11"])
        .env("PLR_SEED", "12")
        .output()
        .unwrap();
    assert_eq!(stdout(&env), stdout(&flag));
    assert_eq!(stdout(&both), stdout(&flag));
    assert_eq!(
        stdout(&flag)
            .lines()
            .skip(1)
            .flat_map(|l| l.split(' '))
            .filter(|t| *t != ".")
            .count(),
        6
    );
}

#[test]
fn generate_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.plr");
    let out = bin()
        .args([
            "generate", "--suite", "a", "--r", "3", "--s", "3", "--n", "3", "--x", "9", "--seed",
            "1", "--out",
        ])
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    let again = bin().args(["compute"]).arg(&path).output().unwrap();
    assert!(again.status.success());
    assert!(stdout(&again).starts_with("order "));
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        vec!["compute", "--method", "nauty"],
        vec!["invariants", "--kind", "bogus"],
        vec![
            "generate", "--suite", "c", "--r", "1", "--s", "1", "--n", "1", "--x", "0",
        ],
        vec!["frobnicate"],
    ] {
        let out = bin().args(&args).arg(data("eq1.plr")).output().unwrap();
        assert_eq!(out.status.code(), Some(1), "{args:?}");
    }
}

#[test]
fn malformed_input_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.plr");
    std::fs::write(&path, "PLR 2 2 2\n1 x\n. .\n").unwrap();
    let out = bin().arg("compute").arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(!out.stderr.is_empty());
}

#[test]
fn help_and_version_exit_zero() {
    for flag in ["--help", "--version"] {
        let out = bin().arg(flag).output().unwrap();
        assert_eq!(out.status.code(), Some(0), "{flag}");
    }
}

#[test]
fn agree_on_small_rectangles() {
    let out = bin()
        .args([
            "agree",
            "--methods",
            "alpha-beta,entrywise:square,mmm,rook-expanded:sei",
        ])
        .args([
            "--samples",
            "40",
            "--seed",
            "5",
            "--r",
            "3",
            "--s",
            "3",
            "--n",
            "3",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "agreement: 40 samples, 4 methods\n");
}

#[test]
fn bench_writes_both_csvs() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("bench.cfg");
    std::fs::write(
        &cfg,
        "suite = b\nr = 3\ns = 3\nn = 3\nx = 0..=9\nsamples = 4\nmethods = alpha-beta, plr-expanded:square\nseed = 2\nwarmup = 1\nworkers = 2\n",
    )
    .unwrap();
    let records = dir.path().join("records.csv");
    let summary = dir.path().join("summary.csv");
    let out = bin()
        .args(["bench", "--config"])
        .arg(&cfg)
        .arg("--out")
        .arg(&records)
        .arg("--summary")
        .arg(&summary)
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let records = std::fs::read_to_string(records).unwrap();
    assert!(records.starts_with(plr_atop::bench::CSV_HEADER));
    assert_eq!(records.lines().count(), 1 + 10 * 4 * 2);
    let summary = std::fs::read_to_string(summary).unwrap();
    assert!(summary.starts_with(plr_atop::bench::SUMMARY_HEADER));
    assert_eq!(summary.lines().count(), 1 + 10 * 2);
}

#[test]
fn bench_rejects_unknown_key() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("bench.cfg");
    std::fs::write(
        &cfg,
        "suite = a\nr = 2\ns = 2\nn = 2\nx = 0\nmethods = mmm\ncolour = red\n",
    )
    .unwrap();
    let out = bin()
        .args(["bench", "--config"])
        .arg(&cfg)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}
