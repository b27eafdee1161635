//! Helpers for driving the built binary.

// Compiled once per test target; not every target uses every fixture.
#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

pub const P4: &str = "graph 4 3 undirected\n0 1\n1 2\n2 3\n";
pub const K4: &str = "graph 4 6 undirected\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";
pub const K3: &str = "graph 3 3 undirected\n0 1\n1 2\n0 2\n";
pub const DIRECTED_C3: &str = "graph 3 3 directed\n0 1\n1 2\n2 0\n";
pub const SINGLE_ARC: &str = "graph 2 1 directed\n0 1\n";

pub struct Run {
    pub status: Option<i32>,
    pub stdout: String,
    pub stderr: String,
}

pub fn write_graph(dir: &tempfile::TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

pub fn run(args: &[&str]) -> Run {
    let Output { status, stdout, stderr } = Command::new(env!("CARGO_BIN_EXE_critcone"))
        .args(args)
        .output()
        .expect("binary runs");
    Run {
        status: status.code(),
        stdout: String::from_utf8(stdout).expect("stdout is utf-8"),
        stderr: String::from_utf8(stderr).expect("stderr is utf-8"),
    }
}
