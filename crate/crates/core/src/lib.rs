//! The unit-transfer partition graph `G_n`: vertices are the partitions of
//! `n`, edges join partitions related by moving one unit between parts.
//!
//! The crate builds `G_n`, computes its boundary framework, rectangular ears
//! and their support corridors, and lists rectangular roots by divisor for
//! values of `n` far beyond what the full graph allows.

pub mod claims;
pub mod clique;
pub mod divisor;
pub mod ears;
pub mod error;
pub mod export;
pub mod framework;
pub mod graph;
pub mod partition;
pub mod search;
pub mod support;

pub use claims::ClaimResult;
pub use error::{Error, Result};
pub use graph::{build_graph, BuildOptions, PartitionGraph, VertexId};
pub use partition::{format_partition, parse_partition, Partition, Style};
pub use search::ExtendedDistance;
