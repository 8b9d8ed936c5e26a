//! The partition graph `G_n` under elementary unit transfer.

use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Partition};

/// Vertex ids are indices into the canonical vertex list.
pub type VertexId = usize;

pub const DEFAULT_FULL_GRAPH_BOUND: u32 = 40;

#[derive(Debug, Clone, Copy)]
pub struct BuildOptions {
    pub max_n: u32,
    /// Build even when `n > max_n`.
    pub force: bool,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            max_n: DEFAULT_FULL_GRAPH_BOUND,
            force: false,
        }
    }
}

impl BuildOptions {
    pub fn check(&self, n: u32) -> Result<()> {
        if n > self.max_n && !self.force {
            return Err(Error::BoundExceeded {
                n,
                bound: self.max_n,
            });
        }
        Ok(())
    }
}

/// All partitions one unit transfer away from `p`.
///
/// A transfer takes one unit from a donor part (which disappears if it
/// reaches zero) and gives it either to another existing part or to a new
/// part of size 1. Transfers that reproduce `p` are discarded.
pub fn unit_transfer_neighbors(p: &Partition) -> Result<BTreeSet<Partition>> {
    if p.n() < 2 {
        return Err(Error::TooSmall { n: p.n(), min: 2 });
    }
    let runs = p.runs();
    let mut out = BTreeSet::new();
    for (i, &(x, mx)) in runs.iter().enumerate() {
        // recipient 0 stands for a freshly created part
        let recipients = runs
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i || mx >= 2)
            .map(|(_, &(y, _))| y)
            .chain(std::iter::once(0));
        for y in recipients {
            if y + 1 == x {
                continue;
            }
            let mut next = runs.to_vec();
            remove_one(&mut next, x);
            if y > 0 {
                remove_one(&mut next, y);
            }
            if x > 1 {
                insert_one(&mut next, x - 1);
            }
            insert_one(&mut next, y + 1);
            out.insert(Partition::from_runs(next));
        }
    }
    Ok(out)
}

/// True when `q` is one unit transfer away from `p`.
pub fn is_unit_transfer(p: &Partition, q: &Partition) -> bool {
    p.n() == q.n() && p != q && unit_transfer_neighbors(p).is_ok_and(|nbrs| nbrs.contains(q))
}

fn remove_one(runs: &mut Vec<(u32, u32)>, value: u32) {
    let idx = runs
        .binary_search_by(|&(v, _)| value.cmp(&v))
        .expect("value present in runs");
    if runs[idx].1 == 1 {
        runs.remove(idx);
    } else {
        runs[idx].1 -= 1;
    }
}

fn insert_one(runs: &mut Vec<(u32, u32)>, value: u32) {
    match runs.binary_search_by(|&(v, _)| value.cmp(&v)) {
        Ok(idx) => runs[idx].1 += 1,
        Err(idx) => runs.insert(idx, (value, 1)),
    }
}

/// Immutable adjacency structure for `G_n`.
#[derive(Debug, Clone)]
pub struct PartitionGraph {
    n: u32,
    vertices: Vec<Partition>,
    index: HashMap<Partition, VertexId>,
    adjacency: Vec<Vec<VertexId>>,
}

pub fn build_graph(n: u32, opts: &BuildOptions) -> Result<PartitionGraph> {
    if n < 2 {
        return Err(Error::TooSmall { n, min: 2 });
    }
    opts.check(n)?;
    let vertices = enumerate_partitions(n)?;
    let index: HashMap<Partition, VertexId> = vertices
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i))
        .collect();
    let adjacency = vertices
        .par_iter()
        .map(|p| {
            let mut ids: Vec<VertexId> = unit_transfer_neighbors(p)
                .expect("n >= 2")
                .iter()
                .map(|q| index[q])
                .collect();
            ids.sort_unstable();
            ids
        })
        .collect();
    Ok(PartitionGraph {
        n,
        vertices,
        index,
        adjacency,
    })
}

impl PartitionGraph {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> &[Partition] {
        &self.vertices
    }

    pub fn vertex(&self, id: VertexId) -> &Partition {
        &self.vertices[id]
    }

    pub fn id_of(&self, p: &Partition) -> Option<VertexId> {
        self.index.get(p).copied()
    }

    pub fn require_id(&self, p: &Partition) -> Result<VertexId> {
        self.id_of(p)
            .ok_or_else(|| Error::UnknownVertex(p.to_string(), self.n))
    }

    /// Ids of `ps`, sorted and deduplicated.
    pub fn ids_of<'a, I>(&self, ps: I) -> Result<Vec<VertexId>>
    where
        I: IntoIterator<Item = &'a Partition>,
    {
        let mut ids = ps
            .into_iter()
            .map(|p| self.require_id(p))
            .collect::<Result<Vec<_>>>()?;
        ids.sort_unstable();
        ids.dedup();
        Ok(ids)
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    pub fn are_adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Id of the conjugate vertex.
    pub fn conjugate_id(&self, v: VertexId) -> VertexId {
        self.index[&self.vertices[v].conjugate()]
    }

    pub fn induced(&self, subset: &[VertexId]) -> InducedSubgraph<'_> {
        induced_subgraph(self, subset)
    }
}

/// Read-only view of `G_n[subset]`; vertex ids are those of the parent graph.
#[derive(Debug, Clone)]
pub struct InducedSubgraph<'g> {
    graph: &'g PartitionGraph,
    members: Vec<bool>,
    vertices: Vec<VertexId>,
}

pub fn induced_subgraph<'g>(g: &'g PartitionGraph, subset: &[VertexId]) -> InducedSubgraph<'g> {
    let mut members = vec![false; g.vertex_count()];
    for &v in subset {
        members[v] = true;
    }
    let vertices = (0..g.vertex_count()).filter(|&v| members[v]).collect();
    InducedSubgraph {
        graph: g,
        members,
        vertices,
    }
}

impl<'g> InducedSubgraph<'g> {
    pub fn graph(&self) -> &'g PartitionGraph {
        self.graph
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.members.get(v).copied().unwrap_or(false)
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        let nbrs: &[VertexId] = if self.contains(v) {
            self.graph.neighbors(v)
        } else {
            &[]
        };
        nbrs.iter().copied().filter(move |&u| self.members[u])
    }

    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        self.vertices
            .iter()
            .flat_map(|&u| {
                self.neighbors(u)
                    .filter(move |&v| v > u)
                    .map(move |v| (u, v))
            })
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    pub fn partitions(&self) -> Vec<&'g Partition> {
        self.vertices
            .iter()
            .map(|&v| self.graph.vertex(v))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::parse_partition;

    fn p(s: &str) -> Partition {
        parse_partition(s).unwrap()
    }

    fn set(items: &[&str]) -> BTreeSet<Partition> {
        items.iter().map(|s| p(s)).collect()
    }

    #[test]
    fn rectangle_neighbors() {
        assert_eq!(
            unit_transfer_neighbors(&p("4,4")).unwrap(),
            set(&["5,3", "4,3,1"])
        );
        assert_eq!(
            unit_transfer_neighbors(&p("2,2")).unwrap(),
            set(&["3,1", "2,1,1"])
        );
        assert_eq!(unit_transfer_neighbors(&p("4")).unwrap(), set(&["3,1"]));
    }

    #[test]
    fn ones_only_merge_or_move() {
        // 2 -> 1 and 1 -> new part both reproduce (2,1,1)
        assert_eq!(
            unit_transfer_neighbors(&p("2,1,1")).unwrap(),
            set(&["3,1", "2,2", "1^4"])
        );
    }

    #[test]
    fn too_small() {
        assert_eq!(
            unit_transfer_neighbors(&p("1")),
            Err(Error::TooSmall { n: 1, min: 2 })
        );
        assert!(matches!(
            build_graph(1, &BuildOptions::default()),
            Err(Error::TooSmall { .. })
        ));
    }

    #[test]
    fn build_small_graphs() {
        let g2 = build_graph(2, &BuildOptions::default()).unwrap();
        assert_eq!(g2.vertices(), &[p("2"), p("1,1")]);
        assert_eq!(g2.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        let g8 = build_graph(8, &BuildOptions::default()).unwrap();
        assert_eq!(g8.vertex_count(), 22);
    }

    #[test]
    fn bound_enforced() {
        let opts = BuildOptions {
            max_n: 10,
            force: false,
        };
        assert_eq!(
            build_graph(11, &opts).unwrap_err(),
            Error::BoundExceeded { n: 11, bound: 10 }
        );
        let forced = BuildOptions {
            max_n: 10,
            force: true,
        };
        assert_eq!(build_graph(11, &forced).unwrap().vertex_count(), 56);
    }

    #[test]
    fn induced_views() {
        let g = build_graph(9, &BuildOptions::default()).unwrap();
        let ids = g.ids_of(&[p("3^3"), p("4,3,2"), p("3,3,2,1")]).unwrap();
        let tri = g.induced(&ids);
        assert_eq!(tri.vertex_count(), 3);
        assert_eq!(tri.edge_count(), 3);

        let (u, v) = g.edges().next().unwrap();
        assert_eq!(g.induced(&[u, v]).edges(), vec![(u, v)]);
    }
}
