//! Divisor-indexed rectangular roots for arbitrary `n`.
//!
//! Row `d` carries the rectangle `((n/d)^d)`. The trivial divisors give the two
//! antennas `(n)` and `(1^n)`; every other divisor gives a nontrivial root whose
//! ear data come from closed forms and local unit-transfer checks only, so no
//! graph is built here.

use serde::Serialize;

use crate::ears::{build_ear, EarType, RectEar};
use crate::error::Result;
use crate::graph::{is_unit_transfer, unit_transfer_neighbors};
use crate::partition::{Partition, Style};

/// Divisors of `n` in increasing order.
pub fn divisors(n: u32) -> Vec<u32> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RowType {
    Antenna,
    Side,
    GenuineRear,
}

impl RowType {
    pub fn label(self, self_conjugate: bool) -> &'static str {
        match (self, self_conjugate) {
            (RowType::Antenna, _) => "antenna",
            (RowType::Side, _) => "side ear",
            (RowType::GenuineRear, true) => "self-conjugate rear ear",
            (RowType::GenuineRear, false) => "genuine rear ear",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DivisorRow {
    pub n: u32,
    pub d: u32,
    pub codivisor: u32,
    /// `((n/d)^d)`
    pub root: Partition,
    pub row_type: RowType,
    pub self_conjugate: bool,
    /// Index of the conjugate row.
    pub conjugate_divisor: u32,
    pub tetra_verified: bool,
    #[serde(skip)]
    pub ear: Option<RectEar>,
}

impl DivisorRow {
    pub fn is_nontrivial(&self) -> bool {
        self.row_type != RowType::Antenna
    }

    pub fn type_label(&self) -> &'static str {
        self.row_type.label(self.self_conjugate)
    }

    pub fn remarks(&self) -> String {
        let conjugate = Partition::rectangle(self.d, self.codivisor);
        match self.row_type {
            RowType::Antenna if self.d == 1 => "antenna (n)".to_string(),
            RowType::Antenna => "antenna (1^n)".to_string(),
            RowType::Side => "framework intersection".to_string(),
            RowType::GenuineRear if self.self_conjugate => "square root".to_string(),
            RowType::GenuineRear => {
                format!("conjugate to ({})", conjugate.format(Style::Exponent))
            }
        }
    }
}

fn row(n: u32, d: u32) -> DivisorRow {
    let codivisor = n / d;
    let root = Partition::rectangle(codivisor, d);
    let self_conjugate = d == codivisor;
    let trivial = d == 1 || d == n;
    let ear = if trivial {
        None
    } else {
        Some(build_ear(&root).expect("nontrivial rectangle"))
    };
    let row_type = match &ear {
        None => RowType::Antenna,
        Some(e) if e.ear_type == EarType::Side => RowType::Side,
        Some(_) => RowType::GenuineRear,
    };
    let tetra_verified = ear
        .as_ref()
        .and_then(|e| e.tetra.as_ref())
        .is_some_and(|t| t.verified());
    DivisorRow {
        n,
        d,
        codivisor,
        root,
        row_type,
        self_conjugate,
        conjugate_divisor: codivisor,
        tetra_verified,
        ear,
    }
}

/// One row per divisor of `n`, or per conjugate pair (`d <= n/d`) when
/// `up_to_conjugation` is set. Rows are ordered by `d`.
pub fn divisor_rows(n: u32, up_to_conjugation: bool) -> Result<Vec<DivisorRow>> {
    if n < 2 {
        return Err(crate::error::Error::TooSmall { n, min: 2 });
    }
    Ok(divisors(n)
        .into_iter()
        .filter(|&d| !up_to_conjugation || d as u64 * d as u64 <= n as u64)
        .map(|d| row(n, d))
        .collect())
}

/// Ear data for a single rectangle, checked from its neighborhood only.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocalEarReport {
    pub ear: RectEar,
    pub root_neighbors: Vec<Partition>,
    pub degree_two: bool,
    pub triangle_verified: bool,
    /// `None` when `min(a, b) = 2`.
    pub tetra_verified: Option<bool>,
}

pub fn local_ear_report(rho: &Partition) -> Result<LocalEarReport> {
    let ear = build_ear(rho)?;
    let root_neighbors: Vec<Partition> = unit_transfer_neighbors(rho)?.into_iter().collect();
    let degree_two = root_neighbors.len() == 2;
    let triangle_verified = degree_two
        && root_neighbors.contains(&ear.alpha)
        && root_neighbors.contains(&ear.beta)
        && is_unit_transfer(&ear.alpha, &ear.beta);
    let tetra_verified = ear.tetra.as_ref().map(|t| t.verified());
    Ok(LocalEarReport {
        ear,
        root_neighbors,
        degree_two,
        triangle_verified,
        tetra_verified,
    })
}
