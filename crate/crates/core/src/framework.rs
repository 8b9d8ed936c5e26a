//! Front-and-side structures of `G_n`: the main chain, the two side edges,
//! the boundary framework, the self-conjugate axis, and attachment loci of
//! complement components.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{PartitionGraph, VertexId};
use crate::partition::{enumerate_partitions, Partition};
use crate::search::connected_components;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrameworkSets {
    pub n: u32,
    /// `(n-k, 1^k)` for `k = 0..n-1`, in path order.
    pub main_chain: Vec<Partition>,
    /// `(n-k, k)` for `1 <= k <= n/2`.
    pub left_edge: BTreeSet<Partition>,
    pub right_edge: BTreeSet<Partition>,
    /// Union of the three families above, used as an induced vertex set.
    pub framework: BTreeSet<Partition>,
    pub axis: BTreeSet<Partition>,
}

/// Hook `(n-k, 1^k)`.
pub fn hook(n: u32, k: u32) -> Partition {
    let mut parts = vec![n - k];
    parts.extend(std::iter::repeat_n(1, k as usize));
    Partition::from_parts(parts).expect("positive parts")
}

/// The axis is found by scanning all `p(n)` partitions.
pub fn framework_sets(n: u32) -> Result<FrameworkSets> {
    if n < 2 {
        return Err(Error::TooSmall { n, min: 2 });
    }
    let main_chain: Vec<Partition> = (0..n).map(|k| hook(n, k)).collect();
    let left_edge: BTreeSet<Partition> = (1..=n / 2)
        .map(|k| Partition::from_parts([n - k, k]).expect("positive parts"))
        .collect();
    let right_edge: BTreeSet<Partition> = left_edge.iter().map(Partition::conjugate).collect();
    let framework = main_chain
        .iter()
        .chain(&left_edge)
        .chain(&right_edge)
        .cloned()
        .collect();
    let axis = enumerate_partitions(n)?
        .into_iter()
        .filter(Partition::is_self_conjugate)
        .collect();
    Ok(FrameworkSets {
        n,
        main_chain,
        left_edge,
        right_edge,
        framework,
        axis,
    })
}

impl FrameworkSets {
    /// Consecutive main-chain entries are adjacent in `g`.
    pub fn main_chain_is_path(&self, g: &PartitionGraph) -> bool {
        self.main_chain
            .windows(2)
            .all(|w| match (g.id_of(&w[0]), g.id_of(&w[1])) {
                (Some(a), Some(b)) => g.are_adjacent(a, b),
                _ => false,
            })
    }
}

/// A component of `G_n` minus a contour together with the contour vertices
/// it touches.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AttachmentLocus {
    pub component: Vec<VertexId>,
    /// `N(E) ∩ C`: contour vertices adjacent to the component.
    pub locus: Vec<VertexId>,
    /// Vertices of the component adjacent to the contour.
    pub boundary: Vec<VertexId>,
}

pub fn attachment_locus(g: &PartitionGraph, contour: &[VertexId]) -> Result<Vec<AttachmentLocus>> {
    let mut in_contour = vec![false; g.vertex_count()];
    for &v in contour {
        in_contour[v] = true;
    }
    let contour_size = in_contour.iter().filter(|&&c| c).count();
    if contour_size == 0 || contour_size == g.vertex_count() {
        return Err(Error::BadContour);
    }
    let rest: Vec<VertexId> = (0..g.vertex_count()).filter(|&v| !in_contour[v]).collect();
    Ok(connected_components(g, &rest)
        .into_iter()
        .map(|component| {
            let locus: BTreeSet<VertexId> = component
                .iter()
                .flat_map(|&v| g.neighbors(v))
                .copied()
                .filter(|&w| in_contour[w])
                .collect();
            let boundary = component
                .iter()
                .copied()
                .filter(|&v| g.neighbors(v).iter().any(|&w| in_contour[w]))
                .collect();
            AttachmentLocus {
                component,
                locus: locus.into_iter().collect(),
                boundary,
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_graph, BuildOptions};
    use crate::partition::parse_partition;

    fn p(s: &str) -> Partition {
        parse_partition(s).unwrap()
    }

    #[test]
    fn closed_forms() {
        let f4 = framework_sets(4).unwrap();
        assert_eq!(f4.main_chain, vec![p("4"), p("3,1"), p("2,1,1"), p("1^4")]);
        let f8 = framework_sets(8).unwrap();
        let l8: BTreeSet<_> = ["7,1", "6,2", "5,3", "4,4"].map(p).into_iter().collect();
        assert_eq!(f8.left_edge, l8);
        let f9 = framework_sets(9).unwrap();
        let ax9: BTreeSet<_> = ["5,1^4", "3^3"].map(p).into_iter().collect();
        assert_eq!(f9.axis, ax9);
        assert!(matches!(framework_sets(1), Err(Error::TooSmall { .. })));
    }

    #[test]
    fn main_chain_sanity() {
        for n in 2..=10 {
            let g = build_graph(n, &BuildOptions::default()).unwrap();
            assert!(framework_sets(n).unwrap().main_chain_is_path(&g));
        }
    }

    #[test]
    fn antenna_locus() {
        let g = build_graph(7, &BuildOptions::default()).unwrap();
        let loci = attachment_locus(&g, &[0]).unwrap();
        assert_eq!(loci.len(), 1);
        assert_eq!(loci[0].locus, vec![0]);
        assert_eq!(loci[0].boundary, vec![g.require_id(&p("6,1")).unwrap()]);
        assert_eq!(loci[0].component.len(), g.vertex_count() - 1);
        assert_eq!(attachment_locus(&g, &[]), Err(Error::BadContour));
        let all: Vec<_> = (0..g.vertex_count()).collect();
        assert_eq!(attachment_locus(&g, &all), Err(Error::BadContour));
    }

    #[test]
    fn framework_contour_n8() {
        let g = build_graph(8, &BuildOptions::default()).unwrap();
        let f = framework_sets(8).unwrap();
        let contour = g.ids_of(&f.framework).unwrap();
        let loci = attachment_locus(&g, &contour).unwrap();
        let covered: usize = loci.iter().map(|l| l.component.len()).sum();
        assert_eq!(covered + contour.len(), g.vertex_count());
        assert!(loci.iter().all(|l| !l.locus.is_empty()));
    }
}
