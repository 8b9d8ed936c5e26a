//! Rectangular ears.
//!
//! A nontrivial rectangle `ρ = (a^b)` (`a, b >= 2`) has exactly two neighbors,
//! `α = (a+1, a^(b-2), a-1)` and `β = (a^(b-1), a-1, 1)`, which are adjacent to
//! each other. The pair `{α, β}` is the attachment pair, the edge `αβ` the
//! support edge, and `{ρ, α, β}` the triangular closure. When `a, b >= 3` the
//! support edge extends to a 4-clique through
//! `γ1 = (a+1, a^(b-3), (a-1)^2, 1)` and `γ2 = (a+1, a^(b-2), a-2, 1)`.
//!
//! Everything here is computed from closed forms and verified with local
//! unit-transfer checks; no graph is needed.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::claims::ClaimResult;
use crate::clique::{compute_layers, maximal_cliques_containing};
use crate::divisor::divisors;
use crate::error::{Error, Result};
use crate::framework::framework_sets;
use crate::graph::{is_unit_transfer, unit_transfer_neighbors, PartitionGraph};
use crate::partition::{Partition, Style};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EarType {
    /// Root on the boundary framework: `(n/2, n/2)` or `(2^(n/2))`.
    Side,
    GenuineRear,
}

impl EarType {
    pub fn label(self) -> &'static str {
        match self {
            EarType::Side => "side ear",
            EarType::GenuineRear => "genuine rear ear",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TetraWitness {
    pub gamma1: Partition,
    pub gamma2: Partition,
    /// Adjacency checks for αβ, αγ1, αγ2, βγ1, βγ2, γ1γ2.
    pub adjacencies: [bool; 6],
    /// α, β, γ1, γ2 are pairwise distinct.
    pub distinct: bool,
}

impl TetraWitness {
    pub fn verified(&self) -> bool {
        self.distinct && self.adjacencies.iter().all(|&a| a)
    }
}

/// Results of the local checks made while building an ear.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LocalChecks {
    /// The transfer neighbors of the root are exactly `{α, β}`.
    pub root_neighbors_exact: bool,
    pub alpha_beta_adjacent: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RectEar {
    pub root: Partition,
    pub a: u32,
    pub b: u32,
    pub alpha: Partition,
    pub beta: Partition,
    pub ear_type: EarType,
    pub self_conjugate: bool,
    pub tetra: Option<TetraWitness>,
    pub checks: LocalChecks,
}

impl RectEar {
    /// `A(ρ) = {α, β}`.
    pub fn attachment_pair(&self) -> [&Partition; 2] {
        [&self.alpha, &self.beta]
    }

    /// `s(ρ) = αβ`.
    pub fn support_edge(&self) -> (&Partition, &Partition) {
        (&self.alpha, &self.beta)
    }

    /// `T(ρ) = {ρ, α, β}`.
    pub fn triangle(&self) -> [&Partition; 3] {
        [&self.root, &self.alpha, &self.beta]
    }

    pub fn is_genuine_rear(&self) -> bool {
        self.ear_type == EarType::GenuineRear
    }

    pub fn local_checks_pass(&self) -> bool {
        self.checks.root_neighbors_exact
            && self.checks.alpha_beta_adjacent
            && self.tetra.as_ref().is_none_or(TetraWitness::verified)
    }
}

/// `Rect*(n)` in canonical order (widest rectangle first).
pub fn rect_star(n: u32) -> Vec<Partition> {
    if n < 4 {
        return Vec::new();
    }
    divisors(n)
        .into_iter()
        .filter(|&b| b >= 2 && n / b >= 2)
        .map(|b| Partition::rectangle(n / b, b))
        .collect()
}

fn nontrivial_dims(rho: &Partition) -> Result<(u32, u32)> {
    match rho.rect_dimensions() {
        Some((a, b)) if a >= 2 && b >= 2 => Ok((a, b)),
        _ => Err(Error::NotRectangular(rho.to_string())),
    }
}

pub fn alpha_of(a: u32, b: u32) -> Partition {
    Partition::from_multiset([(a + 1, 1), (a, b - 2), (a - 1, 1)]).expect("a >= 2")
}

pub fn beta_of(a: u32, b: u32) -> Partition {
    Partition::from_multiset([(a, b - 1), (a - 1, 1), (1, 1)]).expect("a >= 2")
}

pub fn build_ear(rho: &Partition) -> Result<RectEar> {
    let (a, b) = nontrivial_dims(rho)?;
    let alpha = alpha_of(a, b);
    let beta = beta_of(a, b);
    let expected: BTreeSet<Partition> = [alpha.clone(), beta.clone()].into();
    let checks = LocalChecks {
        root_neighbors_exact: unit_transfer_neighbors(rho)? == expected,
        alpha_beta_adjacent: is_unit_transfer(&alpha, &beta),
    };
    let ear_type = if a == 2 || b == 2 {
        EarType::Side
    } else {
        EarType::GenuineRear
    };
    let tetra = if a >= 3 && b >= 3 {
        Some(tetra_witness(rho)?)
    } else {
        None
    };
    Ok(RectEar {
        root: rho.clone(),
        a,
        b,
        alpha,
        beta,
        ear_type,
        self_conjugate: a == b,
        tetra,
        checks,
    })
}

/// The two vertices completing the support edge of `(a^b)`, `a, b >= 3`, to a
/// 4-clique, with all six adjacencies checked.
pub fn tetra_witness(rho: &Partition) -> Result<TetraWitness> {
    let (a, b) = nontrivial_dims(rho)?;
    if a < 3 || b < 3 {
        return Err(Error::DegenerateTetra(rho.format(Style::Exponent)));
    }
    let alpha = alpha_of(a, b);
    let beta = beta_of(a, b);
    let gamma1 =
        Partition::from_multiset([(a + 1, 1), (a, b - 3), (a - 1, 2), (1, 1)]).expect("a >= 3");
    let gamma2 =
        Partition::from_multiset([(a + 1, 1), (a, b - 2), (a - 2, 1), (1, 1)]).expect("a >= 3");
    let four = [&alpha, &beta, &gamma1, &gamma2];
    let mut adjacencies = [false; 6];
    let mut k = 0;
    for i in 0..4 {
        for j in i + 1..4 {
            adjacencies[k] = is_unit_transfer(four[i], four[j]);
            k += 1;
        }
    }
    let distinct = four.iter().collect::<BTreeSet<_>>().len() == 4;
    Ok(TetraWitness {
        gamma1,
        gamma2,
        adjacencies,
        distinct,
    })
}

pub(crate) fn root_label(rho: &Partition) -> String {
    format!("({})", rho.format(Style::Exponent))
}

/// Checks the structural claims about `Rect*(n)` on a built graph: degree-2
/// roots with neighbors `{α, β}`, the unique maximal clique, independence,
/// framework and axis intersections, layer membership, tetrahedral support,
/// and the clique layer of the attachment vertices of rear ears.
pub fn check_rect_propositions(g: &PartitionGraph) -> Result<Vec<ClaimResult>> {
    let n = g.n();
    let roots = rect_star(n);
    let frame = framework_sets(n)?;
    let layers = compute_layers(g);
    let mut out = Vec::new();

    for rho in &roots {
        let ear = build_ear(rho)?;
        let label = Some(root_label(rho));
        let r = g.require_id(rho)?;
        let alpha = g.require_id(&ear.alpha)?;
        let beta = g.require_id(&ear.beta)?;

        let mut pair = vec![alpha, beta];
        pair.sort_unstable();
        out.push(
            ClaimResult::new(
                n,
                "degree-2 neighbors",
                label.clone(),
                g.neighbors(r) == pair,
            )
            .with_detail(format!("degree {}", g.degree(r))),
        );

        let mut tri = vec![r, alpha, beta];
        tri.sort_unstable();
        let cliques = maximal_cliques_containing(g, r);
        out.push(
            ClaimResult::new(n, "unique triangle", label.clone(), cliques == vec![tri])
                .with_detail(format!("{} maximal cliques", cliques.len())),
        );

        out.push(ClaimResult::new(
            n,
            "layer D2/L2",
            label.clone(),
            layers.degree_layer(r) == 2 && layers.simplex_layer(r) == 2,
        ));

        let on_frame = frame.framework.contains(rho);
        out.push(ClaimResult::new(
            n,
            "ear type",
            label.clone(),
            on_frame == (ear.ear_type == EarType::Side),
        ));

        if let Some(t) = &ear.tetra {
            let ids = [
                alpha,
                beta,
                g.require_id(&t.gamma1)?,
                g.require_id(&t.gamma2)?,
            ];
            let clique =
                t.distinct && (0..4).all(|i| (i + 1..4).all(|j| g.are_adjacent(ids[i], ids[j])));
            out.push(ClaimResult::new(
                n,
                "tetra",
                label.clone(),
                clique && t.verified(),
            ));
            let (la, lb) = (layers.simplex_layer(alpha), layers.simplex_layer(beta));
            out.push(
                ClaimResult::new(
                    n,
                    "attachment layer >= 3",
                    label.clone(),
                    la >= 3 && lb >= 3,
                )
                .with_detail(format!("dim_loc(alpha)={la}, dim_loc(beta)={lb}")),
            );
        }
    }

    let root_ids = g.ids_of(&roots)?;
    let independent = root_ids
        .iter()
        .all(|&u| root_ids.iter().all(|&v| !g.are_adjacent(u, v)));
    out.push(ClaimResult::new(n, "independence", None, independent));

    let on_chain = roots
        .iter()
        .filter(|r| frame.main_chain.contains(r))
        .count();
    out.push(ClaimResult::new(
        n,
        "main chain disjoint",
        None,
        on_chain == 0,
    ));

    let meet = |set: &BTreeSet<Partition>| -> BTreeSet<Partition> {
        roots.iter().filter(|r| set.contains(r)).cloned().collect()
    };
    let (expected_left, expected_right): (BTreeSet<_>, BTreeSet<_>) =
        if n.is_multiple_of(2) && n >= 4 {
            (
                [Partition::rectangle(n / 2, 2)].into(),
                [Partition::rectangle(2, n / 2)].into(),
            )
        } else {
            Default::default()
        };
    let left = meet(&frame.left_edge);
    let right = meet(&frame.right_edge);
    out.push(
        ClaimResult::new(n, "left edge intersection", None, left == expected_left)
            .with_detail(set_label(&left)),
    );
    out.push(
        ClaimResult::new(n, "right edge intersection", None, right == expected_right)
            .with_detail(set_label(&right)),
    );

    let root_of_n = (1..=n)
        .find(|&a| a * a >= n)
        .filter(|&a| a * a == n && a >= 2);
    let expected_axis: BTreeSet<Partition> = root_of_n
        .map(|a| Partition::rectangle(a, a))
        .into_iter()
        .collect();
    let axis = meet(&frame.axis);
    out.push(
        ClaimResult::new(n, "axis intersection", None, axis == expected_axis)
            .with_detail(set_label(&axis)),
    );
    Ok(out)
}

pub(crate) fn set_label<'a, I: IntoIterator<Item = &'a Partition>>(set: I) -> String {
    let items: Vec<String> = set.into_iter().map(root_label).collect();
    format!("{{{}}}", items.join(" "))
}
