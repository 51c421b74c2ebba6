#![allow(dead_code)]

use std::io::Write;
use std::process::{Command, Output, Stdio};

pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn collect(out: Output) -> Outcome {
    Outcome {
        code: out.status.code().expect("terminated by signal"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn command(args: &[&str]) -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_grover-kit"));
    cmd.args(args).env_remove("GROVER_KIT_SEED");
    cmd
}

fn words(line: &str) -> Vec<&str> {
    line.split_whitespace().collect()
}

/// Runs `grover-kit` with a whitespace-separated argument line.
pub fn grover(line: &str) -> Outcome {
    grover_argv(&words(line))
}

pub fn grover_argv(args: &[&str]) -> Outcome {
    collect(command(args).output().unwrap())
}

pub fn grover_env(line: &str, key: &str, value: &str) -> Outcome {
    collect(command(&words(line)).env(key, value).output().unwrap())
}

pub fn grover_stdin(line: &str, input: &str) -> Outcome {
    let mut child = command(&words(line))
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    collect(child.wait_with_output().unwrap())
}

/// Runs a command that must succeed and parses its JSON report.
pub fn json(line: &str) -> serde_json::Value {
    json_argv(&words(line))
}

pub fn json_argv(args: &[&str]) -> serde_json::Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = grover_argv(&full);
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    assert!(out.stderr.is_empty(), "{}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

/// Parses CSV output into its header and rows.
pub fn csv(line: &str) -> (Vec<String>, Vec<Vec<String>>) {
    let out = grover(&format!("{line} --format csv"));
    assert_eq!(out.code, 0, "{line}: {}", out.stderr);
    let mut lines = out.stdout.lines();
    let header = lines.next().unwrap().split(',').map(String::from).collect();
    let rows = lines
        .map(|l| l.split(',').map(String::from).collect())
        .collect();
    (header, rows)
}

pub fn f(v: &serde_json::Value) -> f64 {
    v.as_f64().unwrap()
}
