use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn pgalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pgalg")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("pgalg-cli-{}-{name}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn normal_forms() {
    let out = pgalg(&["nf", "--algebra", "qplane", "--q", "2", "y*x"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "1/2*x*y");

    // printed normal forms parse back to themselves
    let again = pgalg(&["nf", "--algebra", "qplane", "--q", "2", stdout(&out).trim()]);
    assert_eq!(stdout(&again), stdout(&out));

    let prod = pgalg(&["mul", "--algebra", "qplane", "--q", "2", "y", "x"]);
    assert_eq!(stdout(&prod), stdout(&out));
}

#[test]
fn growth_of_a_jordan_block() {
    let dir = scratch("growth");
    let path = dir.join("jordan.txt");
    fs::write(&path, "3\n0 1 0\n0 0 1\n0 0 0\n").unwrap();
    let out = pgalg(&["growth", "--matrix", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "degree = 2");

    fs::write(&path, "2\n1 2\n3 4\n").unwrap();
    assert_eq!(pgalg(&["growth", "--matrix", path.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn verify_suites() {
    let out = pgalg(&["verify", "--suite", "manyQk", "--m", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "PASS (sign = (-1)^(beta1+1) per factor)");

    let out = pgalg(&["verify", "--suite", "qudi", "--samples", "10", "--seed", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("PASS"));
}

#[test]
fn envelopes_and_separation() {
    let out = pgalg(&["env-mul", "--algebra", "free2", "--truncation", "2", "e2", "e1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("free2\nN=2\n"));

    let out = pgalg(&["separate", "--algebra", "sl2", "--q", "3", "--degree", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "sl2 q=3 d=1: dimension = 5, rank = 5, injective = true");
}

#[test]
fn config_file_supplies_defaults() {
    let dir = scratch("config");
    fs::write(dir.join("e2.txt"), "1 2 3 1\n1 3 2 -1\n").unwrap();
    let cfg = dir.join("pgalg.conf");
    fs::write(&cfg, "algebra = uea\nstructure_constants = e2.txt\n").unwrap();
    let out = pgalg(&["nf", "--config", cfg.to_str().unwrap(), "x2*x1"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));

    fs::write(&cfg, "algebra = qplane\nq = 2\n").unwrap();
    let from_file = pgalg(&["nf", "--config", cfg.to_str().unwrap(), "y*x"]);
    assert_eq!(stdout(&from_file).trim(), "1/2*x*y");
    // flags override the file
    let flagged = pgalg(&["nf", "--config", cfg.to_str().unwrap(), "--q", "3", "y*x"]);
    assert_eq!(stdout(&flagged).trim(), "1/3*x*y");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["nf", "--algebra", "qplane", "--q", "2", "z*x"][..],
        &["nf", "--algebra", "qplane", "y*x"],
        &["nf", "--algebra", "qplane", "--q", "0", "x"],
        &["nf", "--algebra", "octonions", "--q", "2", "x"],
        &["verify", "--suite", "nosuch"],
        &["verify"],
        &["separate", "--algebra", "qplane", "--q", "2"],
        &["frobnicate"],
        &["nf", "--config", "/nonexistent/pgalg.conf", "x"],
    ] {
        let out = pgalg(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}
