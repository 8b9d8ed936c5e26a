//! Exact clique queries: local simplex dimension, edge clique numbers, and the
//! degree / simplex layers `D_d(n)` and `L_r(n)`.
//!
//! Neighborhoods in `G_n` stay small at the sizes where full graphs are built,
//! so every query is an exact search restricted to a closed neighborhood.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{PartitionGraph, VertexId};

/// Size of the largest clique inside `candidates` (which must be sorted).
pub fn max_clique_within(g: &PartitionGraph, candidates: &[VertexId]) -> usize {
    let mut best = 0;
    grow(g, 0, candidates, &mut best);
    best
}

fn grow(g: &PartitionGraph, size: usize, candidates: &[VertexId], best: &mut usize) {
    if candidates.is_empty() {
        *best = (*best).max(size);
        return;
    }
    for (i, &v) in candidates.iter().enumerate() {
        if size + (candidates.len() - i) <= *best {
            return;
        }
        let next: Vec<VertexId> = candidates[i + 1..]
            .iter()
            .copied()
            .filter(|&w| g.are_adjacent(v, w))
            .collect();
        grow(g, size + 1, &next, best);
    }
}

/// Size of the largest clique of `g` containing `v`.
pub fn max_clique_size_at_vertex(g: &PartitionGraph, v: VertexId) -> usize {
    1 + max_clique_within(g, g.neighbors(v))
}

/// Local simplex dimension: largest clique through `v`, minus one.
pub fn local_simplex_dimension(g: &PartitionGraph, v: VertexId) -> usize {
    max_clique_size_at_vertex(g, v) - 1
}

fn common_neighbors(g: &PartitionGraph, u: VertexId, v: VertexId) -> Vec<VertexId> {
    let (a, b) = (g.neighbors(u), g.neighbors(v));
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Size of the largest clique containing the edge `uv`.
pub fn edge_clique_number(g: &PartitionGraph, u: VertexId, v: VertexId) -> Result<usize> {
    if !g.are_adjacent(u, v) {
        return Err(Error::NotAdjacent(
            g.vertex(u).to_string(),
            g.vertex(v).to_string(),
        ));
    }
    Ok(2 + max_clique_within(g, &common_neighbors(g, u, v)))
}

/// All maximal cliques containing `v`, each sorted, listed in lexicographic order.
pub fn maximal_cliques_containing(g: &PartitionGraph, v: VertexId) -> Vec<Vec<VertexId>> {
    let mut cliques = Vec::new();
    let mut current = vec![v];
    bron_kerbosch(
        g,
        &mut current,
        g.neighbors(v).to_vec(),
        Vec::new(),
        &mut cliques,
    );
    for c in &mut cliques {
        c.sort_unstable();
    }
    cliques.sort();
    cliques
}

/// Bron-Kerbosch with Tomita pivoting.
fn bron_kerbosch(
    g: &PartitionGraph,
    current: &mut Vec<VertexId>,
    mut candidates: Vec<VertexId>,
    mut excluded: Vec<VertexId>,
    out: &mut Vec<Vec<VertexId>>,
) {
    if candidates.is_empty() {
        if excluded.is_empty() {
            out.push(current.clone());
        }
        return;
    }
    let pivot = candidates
        .iter()
        .chain(&excluded)
        .copied()
        .max_by_key(|&u| candidates.iter().filter(|&&w| g.are_adjacent(u, w)).count())
        .expect("nonempty");
    let branch: Vec<VertexId> = candidates
        .iter()
        .copied()
        .filter(|&w| !g.are_adjacent(pivot, w))
        .collect();
    for w in branch {
        let keep = |x: &VertexId| g.are_adjacent(w, *x);
        current.push(w);
        bron_kerbosch(
            g,
            current,
            candidates.iter().copied().filter(keep).collect(),
            excluded.iter().copied().filter(keep).collect(),
            out,
        );
        current.pop();
        candidates.retain(|&x| x != w);
        excluded.push(w);
    }
}

/// Degree layer `D_d(n)` and simplex layer `L_r(n)` of every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayerAssignment {
    degree: Vec<usize>,
    simplex: Vec<usize>,
}

impl LayerAssignment {
    pub fn degree_layer(&self, v: VertexId) -> usize {
        self.degree[v]
    }

    pub fn simplex_layer(&self, v: VertexId) -> usize {
        self.simplex[v]
    }

    /// Vertices of `D_d(n)`.
    pub fn degree_members(&self, d: usize) -> Vec<VertexId> {
        (0..self.degree.len())
            .filter(|&v| self.degree[v] == d)
            .collect()
    }

    /// Vertices of `L_r(n)`.
    pub fn simplex_members(&self, r: usize) -> Vec<VertexId> {
        (0..self.simplex.len())
            .filter(|&v| self.simplex[v] == r)
            .collect()
    }
}

pub fn compute_layers(g: &PartitionGraph) -> LayerAssignment {
    let simplex = (0..g.vertex_count())
        .into_par_iter()
        .map(|v| local_simplex_dimension(g, v))
        .collect();
    LayerAssignment {
        degree: (0..g.vertex_count()).map(|v| g.degree(v)).collect(),
        simplex,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_graph, BuildOptions};
    use crate::partition::parse_partition;

    fn graph(n: u32) -> PartitionGraph {
        build_graph(n, &BuildOptions::default()).unwrap()
    }

    fn id(g: &PartitionGraph, s: &str) -> VertexId {
        g.require_id(&parse_partition(s).unwrap()).unwrap()
    }

    #[test]
    fn vertex_clique_sizes() {
        let g9 = graph(9);
        assert_eq!(max_clique_size_at_vertex(&g9, id(&g9, "3^3")), 3);
        assert_eq!(max_clique_size_at_vertex(&g9, id(&g9, "4,3,2")), 4);
        let g8 = graph(8);
        assert_eq!(max_clique_size_at_vertex(&g8, id(&g8, "5,3")), 3);
    }

    #[test]
    fn edge_clique_numbers() {
        let g12 = graph(12);
        assert_eq!(
            edge_clique_number(&g12, id(&g12, "4,4,3,1"), id(&g12, "4,3,3,2")).unwrap(),
            4
        );
        assert_eq!(
            edge_clique_number(&g12, id(&g12, "12"), id(&g12, "11,1")).unwrap(),
            2
        );
        let g8 = graph(8);
        assert_eq!(
            edge_clique_number(&g8, id(&g8, "5,3"), id(&g8, "4,3,1")).unwrap(),
            3
        );
        assert!(matches!(
            edge_clique_number(&g8, id(&g8, "8"), id(&g8, "1^8")),
            Err(Error::NotAdjacent(..))
        ));
    }

    #[test]
    fn layers() {
        let g9 = graph(9);
        let l9 = compute_layers(&g9);
        let root = id(&g9, "3^3");
        assert_eq!((l9.degree_layer(root), l9.simplex_layer(root)), (2, 2));
        let g12 = graph(12);
        assert_eq!(compute_layers(&g12).simplex_layer(id(&g12, "4,4,3,1")), 3);
        let g2 = graph(2);
        let l2 = compute_layers(&g2);
        assert_eq!(l2.degree_members(1), vec![0, 1]);
        assert_eq!(l2.simplex_members(1), vec![0, 1]);
    }

    #[test]
    fn maximal_cliques() {
        let g9 = graph(9);
        let root = id(&g9, "3^3");
        let mut tri = vec![root, id(&g9, "4,3,2"), id(&g9, "3,3,2,1")];
        tri.sort();
        assert_eq!(maximal_cliques_containing(&g9, root), vec![tri]);

        let antenna = id(&g9, "9");
        assert_eq!(maximal_cliques_containing(&g9, antenna), vec![vec![0, 1]]);

        let mut tetra = vec![
            id(&g9, "4,3,2"),
            id(&g9, "3,3,2,1"),
            id(&g9, "4,2,2,1"),
            id(&g9, "4,3,1,1"),
        ];
        tetra.sort();
        assert!(maximal_cliques_containing(&g9, id(&g9, "4,3,2")).contains(&tetra));
    }

    #[test]
    fn cliques_are_cliques_and_maximal() {
        let g = graph(11);
        for v in 0..g.vertex_count() {
            let cliques = maximal_cliques_containing(&g, v);
            let best = cliques.iter().map(Vec::len).max().unwrap();
            assert_eq!(best, max_clique_size_at_vertex(&g, v));
            for c in &cliques {
                for (i, &a) in c.iter().enumerate() {
                    for &b in &c[i + 1..] {
                        assert!(g.are_adjacent(a, b));
                    }
                }
                let extendable = (0..g.vertex_count())
                    .filter(|w| !c.contains(w))
                    .any(|w| c.iter().all(|&x| g.are_adjacent(w, x)));
                assert!(!extendable);
            }
        }
    }
}
