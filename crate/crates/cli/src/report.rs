//! Output documents: human-readable lines and JSON with big integers as
//! decimal strings.

use std::io::{self, Write};
use std::process;

use critcone::{AbelianGroup, ConeReport, SplitReport};
use num_bigint::BigInt;
use serde::Serialize;

/// Writes one line to stdout, flushed immediately so ranges stream. A
/// consumer that closes the pipe early (`critcone ... | head`) is not an
/// error: the process exits 0 instead of panicking on the broken pipe.
pub fn outln(line: &str) {
    let mut out = io::stdout().lock();
    let result = out
        .write_all(line.as_bytes())
        .and_then(|()| out.write_all(b"\n"))
        .and_then(|()| out.flush());
    match result {
        Ok(()) => {}
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => process::exit(0),
        Err(e) => {
            let _ = writeln!(io::stderr(), "cannot write output: {e}");
            process::exit(1);
        }
    }
}

pub fn big(x: &BigInt) -> String {
    x.to_string()
}

/// "trivial group" or the invariant-factor form, e.g. "ℤ/4 ⊕ ℤ/4".
pub fn human_group(g: &AbelianGroup) -> String {
    if g.is_trivial() {
        "trivial group".to_string()
    } else {
        g.to_string()
    }
}

pub fn group_with_order(g: &AbelianGroup) -> String {
    match g.order() {
        Some(order) => format!("{}, order {order}", human_group(g)),
        None => human_group(g),
    }
}

#[derive(Serialize)]
pub struct GroupDoc {
    pub invariant_factors: Vec<String>,
    pub free_rank: usize,
    pub order: Option<String>,
    pub display: String,
}

impl GroupDoc {
    pub fn from_group(g: &AbelianGroup) -> Self {
        GroupDoc {
            invariant_factors: g.torsion().iter().map(big).collect(),
            free_rank: g.free_rank(),
            order: g.order().as_ref().map(big),
            display: human_group(g),
        }
    }
}

#[derive(Serialize)]
pub struct CritgroupDoc {
    pub command: &'static str,
    pub k: usize,
    pub sink: usize,
    pub group: GroupDoc,
}

#[derive(Serialize)]
pub struct PrimeDoc {
    pub prime: u64,
    pub exponent: u32,
    pub valuations: Vec<u32>,
    pub witness: bool,
}

#[derive(Serialize)]
pub struct SplitDoc {
    pub n_plus_k: u64,
    pub splits: bool,
    pub evidence: Vec<PrimeDoc>,
}

impl SplitDoc {
    pub fn from_report(s: &SplitReport) -> Self {
        let evidence = s
            .factorization
            .iter()
            .zip(&s.cok_valuations)
            .zip(&s.witness)
            .map(|((&(prime, exponent), (_, valuations)), &(_, witness))| PrimeDoc {
                prime,
                exponent,
                valuations: valuations.clone(),
                witness,
            })
            .collect();
        SplitDoc { n_plus_k: s.n_plus_k, splits: s.splits, evidence }
    }
}

#[derive(Serialize)]
pub struct ConeDoc {
    pub command: &'static str,
    pub k: usize,
    pub n: usize,
    pub n_plus_k: usize,
    pub group: GroupDoc,
    pub theorem_group: GroupDoc,
    pub order: String,
    pub order_formula: String,
    pub all_ones_order: String,
    pub h_n: GroupDoc,
    pub split: SplitDoc,
}

impl ConeDoc {
    pub fn from_report(r: &ConeReport) -> Self {
        ConeDoc {
            command: "cone",
            k: r.k,
            n: r.n,
            n_plus_k: r.k + r.n,
            group: GroupDoc::from_group(&r.group_direct),
            theorem_group: GroupDoc::from_group(&r.group_theorem),
            order: big(&r.order_direct),
            order_formula: big(&r.order_formula),
            all_ones_order: big(&r.all_ones_order),
            h_n: GroupDoc::from_group(&r.h_n),
            split: SplitDoc::from_report(&r.split),
        }
    }
}

#[derive(Serialize)]
pub struct Cone1Doc {
    pub command: &'static str,
    pub k: usize,
    pub n: usize,
    pub group: GroupDoc,
}

#[derive(Serialize)]
pub struct ScanRowDoc {
    pub n: usize,
    pub n_plus_k: usize,
    pub group: GroupDoc,
    pub all_ones_order: String,
    pub h_n_order: String,
    pub splits: bool,
}

#[derive(Serialize)]
pub struct ScanDoc {
    pub command: &'static str,
    pub k: usize,
    pub n_from: usize,
    pub n_to: usize,
    pub rows: Vec<ScanRowDoc>,
    pub split_count: usize,
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn print_cone_report(r: &ConeReport) {
    outln(&format!("cone n = {} over k = {} vertices (n+k = {})", r.n, r.k, r.n + r.k));
    outln(&format!("critical group: {}", group_with_order(&r.group_direct)));
    outln(&format!("theorem form:   {} (agrees)", human_group(&r.group_theorem)));
    outln(&format!("order formula:  {}", r.order_formula));
    outln(&format!("all-ones class order: {}", r.all_ones_order));
    outln(&format!("H_n: {}", group_with_order(&r.h_n)));
    outln(&format!("splits: {}", yes_no(r.split.splits)));
}
