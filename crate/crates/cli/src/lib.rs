//! Command-line front end for the `partition-graph` crate.

pub mod args;
pub mod commands;
pub mod table;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use anyhow::{Context, Result};
use partition_graph::BuildOptions;

use crate::args::{Cli, Command};
use crate::table::Table;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

fn emit(table: &Table, cli: &Cli) -> Result<()> {
    match &cli.common.out {
        Some(path) => {
            let f = File::create(path).with_context(|| format!("creating {}", path.display()))?;
            let mut w = BufWriter::new(f);
            table.render(cli.common.format, &mut w)?;
            w.flush()?;
        }
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            table.render(cli.common.format, &mut lock)?;
            lock.flush()?;
        }
    }
    Ok(())
}

/// Runs one command and returns the process exit status.
pub fn run(cli: &Cli) -> Result<i32> {
    let c = &cli.common;
    let ns = &c.n.0;
    let opts = BuildOptions {
        max_n: c.max_n,
        force: c.force,
    };
    let expected = match &c.expect {
        Some(path) => commands::read_expectations(path)?,
        None => Vec::new(),
    };
    match &cli.command {
        Command::Ears => emit(&commands::ears(ns, &opts)?, cli)?,
        Command::Corridors { pairs } => {
            let pairs = commands::parse_pairs(pairs)?;
            let out = commands::corridors(ns, pairs.as_deref(), &expected, &opts, c.geodesic_cap)?;
            emit(&out.table, cli)?;
            if out.expectation_failed {
                eprintln!("expected corridor data did not match");
                return Ok(EXIT_VERIFY_FAILED);
            }
        }
        Command::Zone => emit(&commands::zone(ns, &opts)?, cli)?,
        Command::Divisors { all } => emit(&commands::divisors(ns, *all)?, cli)?,
        Command::Verify => {
            let report = commands::verify(ns, &opts, c.geodesic_cap)?;
            emit(&report.table, cli)?;
            for (claim, passed, failed) in report.summary() {
                let status = if failed == 0 { "pass" } else { "FAIL" };
                eprintln!("{claim}: {status} ({passed}/{})", passed + failed);
            }
            if !report.all_passed() {
                return Ok(EXIT_VERIFY_FAILED);
            }
        }
        Command::Export => {
            let dir = c.out.clone().unwrap_or_else(|| PathBuf::from("."));
            let table = commands::export(ns, &dir, &opts)?;
            let stdout = io::stdout();
            table.render(c.format, stdout.lock())?;
        }
    }
    Ok(EXIT_OK)
}
