//! Command-line surface for critical groups of Eulerian digraphs and their
//! cones.
//!
//! Exit codes: 0 success, 2 file or flag parse error, 3 invalid graph
//! (unbalanced, disconnected, bad sink), 4 verification failure.

mod graphfile;
mod report;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use critcone::{
    cone1_group, critical_group, full_report, verify_cone, ConeCheck, ConeError, Digraph,
    GraphError,
};
use report::{
    big, group_with_order, outln, yes_no, Cone1Doc, ConeDoc, CritgroupDoc, GroupDoc, ScanDoc,
    ScanRowDoc,
};

#[derive(Parser)]
#[command(
    name = "critcone",
    version,
    about = "Critical groups of Eulerian digraphs and their iterated cones"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invariant factors and order of the critical group
    Critgroup {
        file: PathBuf,
        /// Sink vertex to delete (default: last vertex)
        #[arg(long)]
        sink: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Full cone analysis for a single n
    Cone {
        file: PathBuf,
        /// Number of cone vertices to join (n = 1 reports the group only)
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Cone analysis for every n in a range, with a split summary
    Scan {
        file: PathBuf,
        #[arg(long = "n-from")]
        n_from: usize,
        #[arg(long = "n-to")]
        n_to: usize,
        #[arg(long)]
        json: bool,
    },
    /// Re-check every identity for each n in a range
    Verify {
        file: PathBuf,
        #[arg(long = "n-from")]
        n_from: usize,
        #[arg(long = "n-to")]
        n_to: usize,
        #[arg(long, hide = true)]
        inject_fault: Option<String>,
    },
}

enum CliError {
    Parse(String),
    Graph(String),
    Verify(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Graph(_) => 3,
            CliError::Verify(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Parse(m) | CliError::Graph(m) | CliError::Verify(m) => m,
        }
    }
}

impl From<graphfile::ParseError> for CliError {
    fn from(e: graphfile::ParseError) -> Self {
        CliError::Parse(e.to_string())
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        CliError::Graph(e.to_string())
    }
}

impl From<ConeError> for CliError {
    fn from(e: ConeError) -> Self {
        match e {
            ConeError::Graph(g) => CliError::Graph(g.to_string()),
            ConeError::CheckFailed { check, detail } => {
                CliError::Verify(format!("verification failed: {check}: {detail}"))
            }
            other => CliError::Verify(other.to_string()),
        }
    }
}

fn load(file: &Path) -> Result<Digraph, CliError> {
    Ok(graphfile::parse_file(file)?)
}

fn emit_json<T: serde::Serialize>(doc: &T) {
    outln(&serde_json::to_string_pretty(doc).expect("report serializes"));
}

fn cmd_critgroup(file: &Path, sink: Option<usize>, json: bool) -> Result<(), CliError> {
    let g = load(file)?;
    let k = g.vertex_count();
    let sink = sink.unwrap_or(k - 1);
    let group = critical_group(&g, sink)?;
    if json {
        emit_json(&CritgroupDoc {
            command: "critgroup",
            k,
            sink,
            group: GroupDoc::from_group(&group),
        });
    } else {
        outln(&format!("critical group (k = {k}, sink = {sink}): {}", group_with_order(&group)));
    }
    Ok(())
}

fn cmd_cone(file: &Path, n: usize, json: bool) -> Result<(), CliError> {
    if n < 1 {
        return Err(CliError::Parse("--n must be at least 1".to_string()));
    }
    let g = load(file)?;
    let k = g.vertex_count();
    if n == 1 {
        let group = cone1_group(&g)?;
        if json {
            emit_json(&Cone1Doc {
                command: "cone",
                k,
                n: 1,
                group: GroupDoc::from_group(&group),
            });
        } else {
            outln(&format!("cone n = 1 over k = {k} vertices (n+k = {})", k + 1));
            outln(&format!("critical group: {}", group_with_order(&group)));
        }
        return Ok(());
    }
    let r = full_report(&g, n)?;
    if json {
        emit_json(&ConeDoc::from_report(&r));
    } else {
        report::print_cone_report(&r);
    }
    Ok(())
}

fn cmd_scan(file: &Path, n_from: usize, n_to: usize, json: bool) -> Result<(), CliError> {
    if n_from < 2 || n_from > n_to {
        return Err(CliError::Parse("need 2 <= n-from <= n-to".to_string()));
    }
    let g = load(file)?;
    let k = g.vertex_count();
    let mut rows = Vec::with_capacity(n_to - n_from + 1);
    for n in n_from..=n_to {
        rows.push(full_report(&g, n)?);
    }
    let split_count = rows.iter().filter(|r| r.split.splits).count();
    if json {
        emit_json(&ScanDoc {
            command: "scan",
            k,
            n_from,
            n_to,
            rows: rows
                .iter()
                .map(|r| ScanRowDoc {
                    n: r.n,
                    n_plus_k: r.n + r.k,
                    group: GroupDoc::from_group(&r.group_direct),
                    all_ones_order: big(&r.all_ones_order),
                    h_n_order: r.h_n.order().as_ref().map(big).unwrap_or_default(),
                    splits: r.split.splits,
                })
                .collect(),
            split_count,
        });
    } else {
        outln(&format!("scan n = {n_from}..{n_to} over k = {k} vertices"));
        for r in &rows {
            outln(&format!(
                "n = {:<3} {}, splits: {}",
                r.n,
                group_with_order(&r.group_direct),
                yes_no(r.split.splits)
            ));
        }
        outln(&format!("splits for {split_count} of {} values of n", rows.len()));
    }
    Ok(())
}

fn cmd_verify(
    file: &Path,
    n_from: usize,
    n_to: usize,
    inject_fault: Option<&str>,
) -> Result<(), CliError> {
    if n_from < 2 || n_from > n_to {
        return Err(CliError::Parse("need 2 <= n-from <= n-to".to_string()));
    }
    let fault = match inject_fault {
        None => None,
        Some(name) => Some(ConeCheck::from_name(name).ok_or_else(|| {
            let valid: Vec<&str> = ConeCheck::ALL.iter().map(|c| c.name()).collect();
            CliError::Parse(format!(
                "unknown check '{name}'; valid checks: {}",
                valid.join(", ")
            ))
        })?),
    };
    let g = load(file)?;
    let mut failed: Vec<String> = Vec::new();
    for n in n_from..=n_to {
        let results = verify_cone(&g, n, fault)?;
        let row: Vec<String> = results
            .iter()
            .map(|(check, ok)| format!("{} {}", check.name(), if *ok { "PASS" } else { "FAIL" }))
            .collect();
        outln(&format!("n = {:<3} {}", n, row.join("  ")));
        for (check, ok) in results {
            let name = check.name().to_string();
            if !ok && !failed.contains(&name) {
                failed.push(name);
            }
        }
    }
    if failed.is_empty() {
        outln(&format!("all checks passed for n in [{n_from}, {n_to}]"));
        Ok(())
    } else {
        Err(CliError::Verify(format!("verification failed: {}", failed.join(", "))))
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Critgroup { file, sink, json } => cmd_critgroup(&file, sink, json),
        Command::Cone { file, n, json } => cmd_cone(&file, n, json),
        Command::Scan { file, n_from, n_to, json } => cmd_scan(&file, n_from, n_to, json),
        Command::Verify { file, n_from, n_to, inject_fault } => {
            cmd_verify(&file, n_from, n_to, inject_fault.as_deref())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            // Best effort: a closed stderr must not mask the exit code.
            let _ = writeln!(std::io::stderr(), "{}", e.message());
            ExitCode::from(e.code())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn human_group_wording() {
        use crate::report::human_group;
        use critcone::AbelianGroup;
        use num_bigint::BigInt;
        assert_eq!(human_group(&AbelianGroup::trivial()), "trivial group");
        let g = AbelianGroup::from_cyclic_orders(vec![BigInt::from(4), BigInt::from(4)], 0);
        assert_eq!(human_group(&g), "ℤ/4 ⊕ ℤ/4");
        assert_eq!(group_with_order(&g), "ℤ/4 ⊕ ℤ/4, order 16");
    }

    #[test]
    fn cli_parses_all_subcommands() {
        for args in [
            vec!["critcone", "critgroup", "g.graph", "--sink", "0", "--json"],
            vec!["critcone", "cone", "g.graph", "--n", "3"],
            vec!["critcone", "scan", "g.graph", "--n-from", "2", "--n-to", "6", "--json"],
            vec!["critcone", "verify", "g.graph", "--n-from", "2", "--n-to", "4"],
        ] {
            Cli::try_parse_from(&args).unwrap();
        }
    }
}
