//! Command-line surface: classification, equivalence, the reference-table
//! recomputation, and inspection of the polynomial permutation groups.
//!
//! Exit codes: 0 success (for `equiv`: equivalent; for `table2`: all cells
//! match), 1 negative outcome (not equivalent / table mismatches), 2 bad
//! input, 3 unsupported length or a cap was exceeded.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::json;

use cyclaut::arithmetic::PrimePowerLength;
use cyclaut::autgroup::{classify_code_with, classify_graph, AutClassification};
use cyclaut::brand::QGroup;
use cyclaut::codes::{CodeDescriptor, CyclicCode};
use cyclaut::equivalence::{equivalent, EquivConfig, EquivalenceWitness};
use cyclaut::error::Error;
use cyclaut::graphs::{CirculantGraph, GraphDescriptor};
use cyclaut::table::run_table2;

#[derive(Parser)]
#[command(name = "cyclaut", version, about = "Automorphism groups and equivalence of cyclic objects")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Candidate cap for enumerative searches.
    #[arg(long, global = true, default_value_t = 10_000_000)]
    cap: u128,
    /// Worker threads for the equivalence search.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Seed for the sampled property checks.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Classify the automorphism group of a code or graph descriptor.
    Classify { descriptor: PathBuf },
    /// Decide equivalence of two descriptors of the same category.
    Equiv { a: PathBuf, b: PathBuf },
    /// Recompute the bundled reference table of BCH permutation groups.
    Table2,
    /// Inspect the polynomial permutation groups Q^n / Q_1^n on Z_{p^m}.
    Brand {
        p: u64,
        m: u32,
        n: u32,
        #[arg(value_enum)]
        action: BrandAction,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum BrandAction {
    Count,
    List,
    Check,
}

/// A descriptor file holds either a code or a graph.
#[derive(Deserialize)]
#[serde(untagged)]
enum Descriptor {
    Code(CodeDescriptor),
    Graph(GraphDescriptor),
}

enum Object {
    Code(CyclicCode),
    Graph(CirculantGraph),
}

fn load_object(path: &PathBuf) -> Result<Object, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let desc: Descriptor = serde_json::from_str(&text)
        .map_err(|e| format!("cannot parse {}: {e}", path.display()))?;
    match desc {
        Descriptor::Code(d) => CyclicCode::from_descriptor(&d)
            .map(Object::Code)
            .map_err(|e| format!("bad code descriptor {}: {e}", path.display())),
        Descriptor::Graph(d) => CirculantGraph::from_descriptor(&d)
            .map(Object::Graph)
            .map_err(|e| format!("bad graph descriptor {}: {e}", path.display())),
    }
}

fn exit_for(err: &Error) -> ExitCode {
    match err {
        Error::UnsupportedLength(_)
        | Error::EvenPrime
        | Error::EnumerationCap { .. }
        | Error::DistanceCap { .. }
        | Error::LengthCap { .. }
        | Error::FieldCap { .. } => ExitCode::from(3),
        _ => ExitCode::from(2),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match &cli.cmd {
        Cmd::Classify { descriptor } => cmd_classify(&cli, descriptor),
        Cmd::Equiv { a, b } => cmd_equiv(&cli, a, b),
        Cmd::Table2 => cmd_table2(&cli),
        Cmd::Brand { p, m, n, action } => cmd_brand(&cli, *p, *m, *n, *action),
    }
}

fn print_classification(cli: &Cli, c: &AutClassification) {
    match cli.format {
        Format::Text => println!("{c}"),
        Format::Json => println!("{}", serde_json::to_string_pretty(c).expect("serializable")),
    }
}

fn cmd_classify(cli: &Cli, path: &PathBuf) -> ExitCode {
    let obj = match load_object(path) {
        Ok(o) => o,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let out = match obj {
        Object::Code(c) => classify_code_with(&c, cli.cap),
        Object::Graph(g) => classify_graph(&g),
    };
    match out {
        Ok(c) => {
            print_classification(cli, &c);
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_for(&e)
        }
    }
}

fn print_verdict(cli: &Cli, v: &EquivalenceWitness) {
    match cli.format {
        Format::Text => println!("{v}"),
        Format::Json => println!("{}", serde_json::to_string_pretty(v).expect("serializable")),
    }
}

fn cmd_equiv(cli: &Cli, a: &PathBuf, b: &PathBuf) -> ExitCode {
    let (oa, ob) = match (load_object(a), load_object(b)) {
        (Ok(x), Ok(y)) => (x, y),
        (Err(msg), _) | (_, Err(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let cfg = EquivConfig { enumeration_cap: cli.cap, jobs: cli.jobs };
    let verdict = match (&oa, &ob) {
        (Object::Code(x), Object::Code(y)) => {
            if x.field_spec() != y.field_spec() {
                eprintln!("error: codes live over different fields");
                return ExitCode::from(2);
            }
            equivalent(x, y, &cfg)
        }
        (Object::Graph(x), Object::Graph(y)) => {
            if x.directed() != y.directed() {
                eprintln!("error: directedness differs");
                return ExitCode::from(2);
            }
            equivalent(x, y, &cfg)
        }
        _ => {
            eprintln!("error: descriptors are from different categories");
            return ExitCode::from(2);
        }
    };
    match verdict {
        Ok(v) => {
            print_verdict(cli, &v);
            if v.equivalent {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_for(&e)
        }
    }
}

fn cmd_table2(cli: &Cli) -> ExitCode {
    let cells = match run_table2() {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_for(&e);
        }
    };
    let matched = cells.iter().filter(|c| c.matches).count();
    match cli.format {
        Format::Text => {
            for c in &cells {
                let mark = if c.matches { "ok       " } else { "MISMATCH " };
                println!(
                    "{mark} q={:<2} p={:<2} delta={} b={}: computed {} (order {}) | reference {} (order {})",
                    c.q, c.p, c.delta, c.b, c.computed_name, c.computed.order, c.expected_name,
                    c.expected_order
                );
            }
            println!("{matched}/{} cells match the reference table", cells.len());
            if matched != cells.len() {
                println!(
                    "note: the flagged cells are known discrepancies; the computed values are \
                     the verified ones (see README)"
                );
            }
        }
        Format::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "cells": cells,
                    "matched": matched,
                    "total": cells.len(),
                }))
                .expect("serializable")
            );
        }
    }
    if matched == cells.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_brand(cli: &Cli, p: u64, m: u32, n: u32, action: BrandAction) -> ExitCode {
    let len = match PrimePowerLength::new(p, m) {
        Ok(l) => l,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let groups = match (QGroup::full(&len, n), QGroup::restricted(&len, n)) {
        (Ok(f), Ok(r)) => (f, r),
        (Err(e), _) | (_, Err(e)) => {
            eprintln!("error: {e}");
            return exit_for(&e);
        }
    };
    let (full, restricted) = groups;
    match action {
        BrandAction::Count => {
            let run = |g: &QGroup| -> Result<(u128, usize, u64), Error> {
                let (els, collisions) = g.elements(cli.cap)?;
                Ok((g.order(), els.len(), collisions))
            };
            match (run(&full), run(&restricted)) {
                (Ok((of, ef, cf)), Ok((or, er, cr))) => {
                    let payload = json!({
                        "full": {"formula": of.to_string(), "enumerated": ef, "collisions": cf},
                        "restricted": {"formula": or.to_string(), "enumerated": er, "collisions": cr},
                    });
                    match cli.format {
                        Format::Text => {
                            println!("Q^{n} on Z_{}: formula {of}, enumerated {ef}, collisions {cf}", len.n());
                            println!("Q_1^{n} on Z_{}: formula {or}, enumerated {er}, collisions {cr}", len.n());
                        }
                        Format::Json => println!("{}", serde_json::to_string_pretty(&payload).unwrap()),
                    }
                    ExitCode::SUCCESS
                }
                (Err(e), _) | (_, Err(e)) => {
                    eprintln!("error: {e}");
                    exit_for(&e)
                }
            }
        }
        BrandAction::List => {
            if full.order() > cli.cap {
                let e = Error::EnumerationCap { required: full.order(), cap: cli.cap };
                eprintln!("error: {e}");
                return exit_for(&e);
            }
            for f in full.iter() {
                println!("{f}");
            }
            ExitCode::SUCCESS
        }
        BrandAction::Check => {
            // sampled group-axiom check, deterministic in --seed
            let mut state = cli.seed.wrapping_mul(0x9e3779b97f4a7c15).wrapping_add(1);
            let mut next = |hi: u128| {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                (state as u128).wrapping_mul(hi) >> 64 // not uniform; good enough for sampling
            };
            let samples = 200usize;
            let mut failures = 0usize;
            for _ in 0..samples {
                let a = full.element_at(next(full.order()) % full.order());
                let b = full.element_at(next(full.order()) % full.order());
                let ab = match a.compose(&b) {
                    Ok(x) => x,
                    Err(_) => {
                        failures += 1;
                        continue;
                    }
                };
                let ok = full.contains(&ab)
                    && full.contains(&a.invert().unwrap_or_else(|_| a.clone()))
                    && a.compose(&a.invert().unwrap()).map(|x| x.is_identity()).unwrap_or(false);
                if !ok {
                    failures += 1;
                }
            }
            match cli.format {
                Format::Text => println!(
                    "checked {samples} sampled pairs in Q^{n} on Z_{}: {failures} failures",
                    len.n()
                ),
                Format::Json => println!(
                    "{}",
                    json!({"samples": samples, "failures": failures})
                ),
            }
            if failures == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    }
}
