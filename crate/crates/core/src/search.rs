//! Shortest paths and connectivity over `G_n` with removed vertices.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{PartitionGraph, VertexId};

pub const DEFAULT_GEODESIC_CAP: usize = 10_000;

/// A path length, or `Infinite` when no path exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtendedDistance {
    Finite(usize),
    Infinite,
}

impl ExtendedDistance {
    pub fn finite(self) -> Option<usize> {
        match self {
            ExtendedDistance::Finite(d) => Some(d),
            ExtendedDistance::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == ExtendedDistance::Infinite
    }
}

impl fmt::Display for ExtendedDistance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedDistance::Finite(d) => write!(f, "{d}"),
            ExtendedDistance::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for ExtendedDistance {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ExtendedDistance::Finite(d) => s.serialize_u64(*d as u64),
            ExtendedDistance::Infinite => s.serialize_str("inf"),
        }
    }
}

/// Result of a set-to-set shortest path query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Geodesics {
    pub distance: ExtendedDistance,
    /// Shortest source-to-target paths in lexicographic order of vertex ids.
    pub paths: Vec<Vec<VertexId>>,
    /// More paths exist beyond the cap.
    pub truncated: bool,
}

const UNREACHED: usize = usize::MAX;

/// Mask of removed vertices.
fn blocked_mask(g: &PartitionGraph, forbidden: &[VertexId]) -> Vec<bool> {
    let mut blocked = vec![false; g.vertex_count()];
    for &v in forbidden {
        blocked[v] = true;
    }
    blocked
}

/// Multi-source BFS levels in `g` minus `blocked`; `UNREACHED` where unreachable.
fn levels(g: &PartitionGraph, sources: &[VertexId], blocked: &[bool]) -> Vec<usize> {
    let mut dist = vec![UNREACHED; g.vertex_count()];
    let mut queue = VecDeque::new();
    for &s in sources {
        if !blocked[s] && dist[s] == UNREACHED {
            dist[s] = 0;
            queue.push_back(s);
        }
    }
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if !blocked[w] && dist[w] == UNREACHED {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Distances from the source set to every vertex of `g` minus `forbidden`.
pub fn distances_from(
    g: &PartitionGraph,
    sources: &[VertexId],
    forbidden: &[VertexId],
) -> Vec<ExtendedDistance> {
    levels(g, sources, &blocked_mask(g, forbidden))
        .into_iter()
        .map(|d| {
            if d == UNREACHED {
                ExtendedDistance::Infinite
            } else {
                ExtendedDistance::Finite(d)
            }
        })
        .collect()
}

fn validate(sources: &[VertexId], targets: &[VertexId], blocked: &[bool]) -> Result<()> {
    if sources.is_empty() {
        return Err(Error::EmptySet("source"));
    }
    if targets.is_empty() {
        return Err(Error::EmptySet("target"));
    }
    if sources.iter().any(|&s| blocked[s]) {
        return Err(Error::Forbidden("source"));
    }
    if targets.iter().any(|&t| blocked[t]) {
        return Err(Error::Forbidden("target"));
    }
    Ok(())
}

/// Shortest distance from any source to any target in `g` minus `forbidden`,
/// with up to `cap` realizing paths.
pub fn multi_bfs(
    g: &PartitionGraph,
    sources: &[VertexId],
    targets: &[VertexId],
    forbidden: &[VertexId],
    cap: usize,
) -> Result<Geodesics> {
    let blocked = blocked_mask(g, forbidden);
    validate(sources, targets, &blocked)?;
    let from_source = levels(g, sources, &blocked);
    let Some(d) = targets
        .iter()
        .map(|&t| from_source[t])
        .min()
        .filter(|&d| d != UNREACHED)
    else {
        return Ok(Geodesics {
            distance: ExtendedDistance::Infinite,
            paths: Vec::new(),
            truncated: false,
        });
    };
    let to_target = levels(g, targets, &blocked);

    let mut starts: Vec<VertexId> = sources
        .iter()
        .copied()
        .filter(|&s| to_target[s] == d)
        .collect();
    starts.sort_unstable();
    starts.dedup();

    let mut walker = PathWalker {
        g,
        blocked: &blocked,
        from_source: &from_source,
        to_target: &to_target,
        d,
        cap,
        paths: Vec::new(),
        truncated: false,
    };
    let mut path = Vec::with_capacity(d + 1);
    for s in starts {
        path.push(s);
        walker.extend(&mut path);
        path.pop();
        if walker.truncated {
            break;
        }
    }
    Ok(Geodesics {
        distance: ExtendedDistance::Finite(d),
        paths: walker.paths,
        truncated: walker.truncated,
    })
}

struct PathWalker<'a> {
    g: &'a PartitionGraph,
    blocked: &'a [bool],
    from_source: &'a [usize],
    to_target: &'a [usize],
    d: usize,
    cap: usize,
    paths: Vec<Vec<VertexId>>,
    truncated: bool,
}

impl PathWalker<'_> {
    fn extend(&mut self, path: &mut Vec<VertexId>) {
        if self.truncated {
            return;
        }
        let k = path.len() - 1;
        if k == self.d {
            if self.paths.len() == self.cap {
                self.truncated = true;
            } else {
                self.paths.push(path.clone());
            }
            return;
        }
        let last = *path.last().expect("nonempty path");
        for &w in self.g.neighbors(last) {
            if !self.blocked[w]
                && self.from_source[w] == k + 1
                && self.to_target[w] == self.d - k - 1
            {
                path.push(w);
                self.extend(path);
                path.pop();
            }
        }
    }
}

/// Union of every shortest source-to-target path, computed from the two BFS
/// level maps without enumerating paths.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GeodesicUnion {
    pub distance: Option<usize>,
    pub vertices: BTreeSet<VertexId>,
    /// `(u, v)` with `u < v`.
    pub edges: BTreeSet<(VertexId, VertexId)>,
}

pub fn geodesic_union(
    g: &PartitionGraph,
    sources: &[VertexId],
    targets: &[VertexId],
    forbidden: &[VertexId],
) -> Result<GeodesicUnion> {
    let blocked = blocked_mask(g, forbidden);
    validate(sources, targets, &blocked)?;
    let from_source = levels(g, sources, &blocked);
    let Some(d) = targets
        .iter()
        .map(|&t| from_source[t])
        .min()
        .filter(|&d| d != UNREACHED)
    else {
        return Ok(GeodesicUnion::default());
    };
    let to_target = levels(g, targets, &blocked);
    let on_geodesic = |v: VertexId| {
        from_source[v] != UNREACHED
            && to_target[v] != UNREACHED
            && from_source[v] + to_target[v] == d
    };

    let mut union = GeodesicUnion {
        distance: Some(d),
        ..Default::default()
    };
    for v in (0..g.vertex_count()).filter(|&v| !blocked[v] && on_geodesic(v)) {
        union.vertices.insert(v);
        for &w in g.neighbors(v) {
            if !blocked[w] && on_geodesic(w) && from_source[w] == from_source[v] + 1 {
                union.edges.insert((v.min(w), v.max(w)));
            }
        }
    }
    Ok(union)
}

/// Connected components of `g[subset]`, largest first, ties broken by
/// smallest vertex id. Each component is sorted.
pub fn connected_components(g: &PartitionGraph, subset: &[VertexId]) -> Vec<Vec<VertexId>> {
    let mut member = vec![false; g.vertex_count()];
    for &v in subset {
        member[v] = true;
    }
    let mut seen = vec![false; g.vertex_count()];
    let mut components = Vec::new();
    let mut ordered: Vec<VertexId> = subset.to_vec();
    ordered.sort_unstable();
    ordered.dedup();
    for start in ordered {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut component = vec![start];
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if member[w] && !seen[w] {
                    seen[w] = true;
                    component.push(w);
                    stack.push(w);
                }
            }
        }
        component.sort_unstable();
        components.push(component);
    }
    components.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
    components
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
    fn main_chain_length() {
        let g = graph(6);
        let r = multi_bfs(
            &g,
            &[id(&g, "6")],
            &[id(&g, "1^6")],
            &[],
            DEFAULT_GEODESIC_CAP,
        )
        .unwrap();
        assert_eq!(r.distance, ExtendedDistance::Finite(5));
        assert!(r.paths.iter().all(|p| p.len() == 6));
        assert!(!r.truncated);
    }

    #[test]
    fn cut_vertex_gives_infinite() {
        // G_3 is the path (3) - (2,1) - (1^3)
        let g = graph(3);
        let r = multi_bfs(&g, &[0], &[2], &[1], 10).unwrap();
        assert_eq!(r.distance, ExtendedDistance::Infinite);
        assert!(r.paths.is_empty());
        let u = geodesic_union(&g, &[0], &[2], &[1]).unwrap();
        assert_eq!(u, GeodesicUnion::default());
    }

    #[test]
    fn invalid_queries() {
        let g = graph(5);
        assert_eq!(
            multi_bfs(&g, &[], &[1], &[], 1),
            Err(Error::EmptySet("source"))
        );
        assert_eq!(
            multi_bfs(&g, &[0], &[], &[], 1),
            Err(Error::EmptySet("target"))
        );
        assert_eq!(
            multi_bfs(&g, &[0], &[1], &[0], 1),
            Err(Error::Forbidden("source"))
        );
        assert_eq!(
            multi_bfs(&g, &[0], &[1], &[1], 1),
            Err(Error::Forbidden("target"))
        );
    }

    #[test]
    fn cap_truncates() {
        // (4,4) to (2^4) has several shortest paths
        let g = graph(8);
        let (s, t) = (id(&g, "4,4"), id(&g, "2^4"));
        let all = multi_bfs(&g, &[s], &[t], &[], usize::MAX).unwrap();
        assert!(all.paths.len() > 2);
        let capped = multi_bfs(&g, &[s], &[t], &[], 2).unwrap();
        assert!(capped.truncated);
        assert_eq!(capped.paths, all.paths[..2]);
    }

    #[test]
    fn paths_are_lexicographic() {
        let g = graph(9);
        let r = multi_bfs(&g, &[0, 3], &[20, 25], &[], usize::MAX).unwrap();
        let mut sorted = r.paths.clone();
        sorted.sort();
        assert_eq!(r.paths, sorted);
    }

    #[test]
    fn union_matches_enumeration() {
        let g = graph(10);
        let forbidden = [id(&g, "5,5"), id(&g, "2^5")];
        let sources = [id(&g, "6,4"), id(&g, "5,4,1")];
        let targets = [id(&g, "3,2^3,1"), id(&g, "2^4,1,1")];
        let paths = multi_bfs(&g, &sources, &targets, &forbidden, usize::MAX).unwrap();
        let union = geodesic_union(&g, &sources, &targets, &forbidden).unwrap();
        let mut vs = BTreeSet::new();
        let mut es = BTreeSet::new();
        for p in &paths.paths {
            vs.extend(p.iter().copied());
            for w in p.windows(2) {
                es.insert((w[0].min(w[1]), w[0].max(w[1])));
            }
        }
        assert_eq!(union.distance, paths.distance.finite());
        assert_eq!(union.vertices, vs);
        assert_eq!(union.edges, es);
    }

    #[test]
    fn components_order() {
        let g = graph(12);
        assert!(connected_components(&g, &[]).is_empty());
        let all: Vec<_> = (0..g.vertex_count()).collect();
        assert_eq!(connected_components(&g, &all).len(), 1);
        // two isolated vertices plus an edge
        let (u, v) = g
            .edges()
            .find(|&(u, v)| u > 10 && v + 2 < g.vertex_count())
            .unwrap();
        let far = g.vertex_count() - 1;
        let comps = connected_components(&g, &[far, 0, u, v]);
        assert_eq!(comps[0], vec![u, v]);
        assert_eq!(comps[1], vec![0]);
        assert_eq!(comps[2], vec![far]);
    }

    #[test]
    fn infinite_sorts_last() {
        assert!(ExtendedDistance::Finite(usize::MAX) < ExtendedDistance::Infinite);
        assert_eq!(ExtendedDistance::Infinite.to_string(), "inf");
        assert_eq!(
            serde_json::to_string(&ExtendedDistance::Infinite).unwrap(),
            "\"inf\""
        );
        assert_eq!(
            serde_json::to_string(&ExtendedDistance::Finite(4)).unwrap(),
            "4"
        );
    }
}
