use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use partition_graph::graph::DEFAULT_FULL_GRAPH_BOUND;
use partition_graph::search::DEFAULT_GEODESIC_CAP;

use crate::table::Format;

#[derive(Debug, Parser)]
#[command(
    name = "atlas",
    version,
    about = "Rectangular ears and support corridors in the unit-transfer partition graph"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Values of n: `12`, `8,9,10,12`, `2..15` (inclusive), or a mix.
    #[arg(long = "n", global = true, value_parser = parse_n_list, default_value = "12")]
    pub n: NList,
    #[arg(long, global = true, default_value_t = Format::Csv)]
    pub format: Format,
    /// Output file (a directory for `export`).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Largest n for which the full graph is built.
    #[arg(long = "max-n", global = true, default_value_t = DEFAULT_FULL_GRAPH_BOUND, value_parser = clap::value_parser!(u32).range(1..))]
    pub max_n: u32,
    /// Build the full graph even above --max-n.
    #[arg(long, global = true)]
    pub force: bool,
    /// Cap on enumerated shortest paths per query.
    #[arg(long = "geodesic-cap", global = true, default_value_t = DEFAULT_GEODESIC_CAP, value_parser = parse_positive)]
    pub geodesic_cap: usize,
    /// CSV of expected corridor rows to check against.
    #[arg(long, global = true)]
    pub expect: Option<PathBuf>,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Ears of every nontrivial rectangular root.
    Ears,
    /// Support distances and corridors between pairs of ears.
    Corridors {
        /// `all`, or pairs like `4^3/3^4;6,6/2^6`.
        #[arg(long, default_value = "all")]
        pairs: String,
    },
    /// Size and components of the support zone.
    Zone,
    /// Rectangular roots by divisor; no graph is built.
    Divisors {
        /// List every divisor instead of one per conjugate pair.
        #[arg(long)]
        all: bool,
    },
    /// Check the structural claims; exits 1 on any failure.
    Verify,
    /// Write the graph and corridor records to files.
    Export,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NList(pub Vec<u32>);

fn parse_positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

pub fn parse_n_list(s: &str) -> Result<NList, String> {
    let mut out = Vec::new();
    for item in s.split(',').map(str::trim) {
        if let Some((lo, hi)) = item.split_once("..") {
            let lo: u32 = lo
                .trim()
                .parse()
                .map_err(|_| format!("bad range start in `{item}`"))?;
            let hi: u32 = hi
                .trim()
                .parse()
                .map_err(|_| format!("bad range end in `{item}`"))?;
            if lo > hi {
                return Err(format!("empty range `{item}`"));
            }
            out.extend(lo..=hi);
        } else {
            out.push(item.parse().map_err(|_| format!("bad value `{item}`"))?);
        }
    }
    if out.contains(&0) {
        return Err("n must be positive".into());
    }
    out.sort_unstable();
    out.dedup();
    Ok(NList(out))
}
