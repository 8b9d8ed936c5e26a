//! Serializations of a built graph.

use std::io::{self, Write};

use serde::Serialize;

use crate::graph::PartitionGraph;

#[derive(Debug, Serialize)]
struct GraphJson {
    n: u32,
    vertices: Vec<String>,
    edges: Vec<[usize; 2]>,
}

/// `{"n": .., "vertices": ["3,1", ..], "edges": [[i, j], ..]}` with vertices
/// in canonical order and `i < j`.
pub fn write_json<W: Write>(g: &PartitionGraph, w: W) -> io::Result<()> {
    let doc = GraphJson {
        n: g.n(),
        vertices: g.vertices().iter().map(|p| p.to_string()).collect(),
        edges: g.edges().map(|(i, j)| [i, j]).collect(),
    };
    serde_json::to_writer_pretty(w, &doc).map_err(io::Error::from)
}

/// Header `p n |V| |E|`, then one `i j` line per edge.
pub fn write_edge_list<W: Write>(g: &PartitionGraph, mut w: W) -> io::Result<()> {
    writeln!(w, "p {} {} {}", g.n(), g.vertex_count(), g.edge_count())?;
    for (i, j) in g.edges() {
        writeln!(w, "{i} {j}")?;
    }
    Ok(())
}
