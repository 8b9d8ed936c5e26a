//! Integer partitions in canonical form.
//!
//! A [`Partition`] is stored as a run-length encoding of its weakly decreasing
//! part sequence, so rectangles such as `(8^8)` or `(1^5000)` cost a single run
//! regardless of `n`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A partition of `n` into positive parts, in canonical (weakly decreasing) form.
///
/// Ordering follows the canonical vertex order of `G_n`: reverse-lexicographic
/// on part sequences, so `(n)` sorts first and `(1^n)` sorts last.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    /// `(part value, multiplicity)`, values strictly decreasing, multiplicities >= 1.
    runs: Vec<(u32, u32)>,
    n: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Style {
    /// `4,3,3,2`
    #[default]
    Plain,
    /// `4,3^2,2`
    Exponent,
}

impl Partition {
    /// Builds a partition from parts in any order. Fails on zero parts or an
    /// empty part list.
    pub fn from_parts<I: IntoIterator<Item = u32>>(parts: I) -> Result<Self> {
        let mut parts: Vec<u32> = parts.into_iter().collect();
        if parts.is_empty() {
            return Err(Error::Syntax {
                text: String::new(),
                reason: "empty partition".into(),
            });
        }
        if parts.contains(&0) {
            return Err(Error::NonPositivePart(0));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self::from_sorted(&parts))
    }

    /// `parts` must be weakly decreasing and positive.
    pub(crate) fn from_sorted(parts: &[u32]) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        let mut runs: Vec<(u32, u32)> = Vec::new();
        let mut n = 0u32;
        for &p in parts {
            n += p;
            match runs.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => runs.push((p, 1)),
            }
        }
        Partition { runs, n }
    }

    /// `runs` must have strictly decreasing positive values and positive multiplicities.
    pub(crate) fn from_runs(runs: Vec<(u32, u32)>) -> Self {
        debug_assert!(runs.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(runs.iter().all(|&(v, m)| v > 0 && m > 0));
        let n = runs.iter().map(|&(v, m)| v * m).sum();
        Partition { runs, n }
    }

    /// Builds a partition from `(value, multiplicity)` pairs in any order;
    /// zero multiplicities are ignored and repeated values merge.
    pub fn from_multiset<I: IntoIterator<Item = (u32, u32)>>(runs: I) -> Result<Self> {
        let mut merged = std::collections::BTreeMap::new();
        for (v, m) in runs.into_iter().filter(|&(_, m)| m > 0) {
            if v == 0 {
                return Err(Error::NonPositivePart(0));
            }
            *merged.entry(v).or_insert(0u32) += m;
        }
        if merged.is_empty() {
            return Err(Error::Syntax {
                text: String::new(),
                reason: "empty partition".into(),
            });
        }
        Ok(Self::from_runs(merged.into_iter().rev().collect()))
    }

    /// The rectangle `(a^b)`: `b` parts all equal to `a`.
    pub fn rectangle(a: u32, b: u32) -> Self {
        assert!(a > 0 && b > 0, "rectangle sides must be positive");
        Self::from_runs(vec![(a, b)])
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.runs.iter().map(|&(_, m)| m as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    pub fn runs(&self) -> &[(u32, u32)] {
        &self.runs
    }

    pub fn parts(&self) -> impl Iterator<Item = u32> + '_ {
        self.runs
            .iter()
            .flat_map(|&(v, m)| std::iter::repeat_n(v, m as usize))
    }

    pub fn to_vec(&self) -> Vec<u32> {
        self.parts().collect()
    }

    pub fn largest_part(&self) -> u32 {
        self.runs.first().map_or(0, |&(v, _)| v)
    }

    /// Transpose of the Ferrers diagram.
    pub fn conjugate(&self) -> Partition {
        let mut counts = Vec::with_capacity(self.runs.len());
        let mut total = 0;
        for &(_, m) in &self.runs {
            total += m;
            counts.push(total);
        }
        let mut runs = Vec::with_capacity(self.runs.len());
        for i in (0..self.runs.len()).rev() {
            let below = self.runs.get(i + 1).map_or(0, |&(v, _)| v);
            runs.push((counts[i], self.runs[i].0 - below));
        }
        Partition { runs, n: self.n }
    }

    pub fn is_self_conjugate(&self) -> bool {
        self.conjugate() == *self
    }

    /// `Some((a, b))` when the partition is the rectangle `(a^b)`.
    pub fn rect_dimensions(&self) -> Option<(u32, u32)> {
        match self.runs.as_slice() {
            [(a, b)] => Some((*a, *b)),
            _ => None,
        }
    }

    pub fn format(&self, style: Style) -> String {
        let mut out = String::new();
        for &(v, m) in &self.runs {
            match style {
                Style::Plain => {
                    for _ in 0..m {
                        if !out.is_empty() {
                            out.push(',');
                        }
                        out.push_str(&v.to_string());
                    }
                }
                Style::Exponent => {
                    if !out.is_empty() {
                        out.push(',');
                    }
                    out.push_str(&v.to_string());
                    if m > 1 {
                        out.push('^');
                        out.push_str(&m.to_string());
                    }
                }
            }
        }
        out
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        for (&(va, ma), &(vb, mb)) in self.runs.iter().zip(&other.runs) {
            if va != vb {
                return vb.cmp(&va);
            }
            if ma != mb {
                // The shorter run is followed by a smaller part (or nothing).
                return mb.cmp(&ma);
            }
        }
        other.runs.len().cmp(&self.runs.len())
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format(Style::Plain))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.format(Style::Exponent))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.format(Style::Plain))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_partition(s)
    }
}

/// Parses `"4,3^2,1"`-style text. Terms may appear in any order; the result
/// is canonicalized.
pub fn parse_partition(text: &str) -> Result<Partition> {
    let syntax = |reason: &str| Error::Syntax {
        text: text.to_string(),
        reason: reason.to_string(),
    };
    if text.trim().is_empty() {
        return Err(syntax("empty partition"));
    }
    let mut runs: Vec<(u32, u32)> = Vec::new();
    let mut total: u64 = 0;
    for term in text.split(',') {
        let term = term.trim();
        let (base, exp) = match term.split_once('^') {
            Some((b, e)) => (b.trim(), Some(e.trim())),
            None => (term, None),
        };
        let base = parse_int(base).ok_or_else(|| syntax(&format!("bad term {term:?}")))?;
        if base <= 0 {
            return Err(Error::NonPositivePart(base));
        }
        let count = match exp {
            None => 1,
            Some(e) => match parse_int(e) {
                Some(0) => return Err(Error::ZeroExponent(term.to_string())),
                Some(c) if c > 0 => c,
                _ => return Err(syntax(&format!("bad exponent in {term:?}"))),
            },
        };
        total += base as u64 * count as u64;
        if total > u32::MAX as u64 {
            return Err(syntax("partition sum overflows"));
        }
        runs.push((base as u32, count as u32));
    }
    runs.sort_unstable_by_key(|r| std::cmp::Reverse(r.0));
    let mut merged: Vec<(u32, u32)> = Vec::with_capacity(runs.len());
    for (v, m) in runs {
        match merged.last_mut() {
            Some((lv, lm)) if *lv == v => *lm += m,
            _ => merged.push((v, m)),
        }
    }
    Ok(Partition::from_runs(merged))
}

fn parse_int(s: &str) -> Option<i64> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || digits.len() > 12 || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

pub fn format_partition(p: &Partition, style: Style) -> String {
    p.format(style)
}

/// All partitions of `n` in canonical order (reverse-lexicographic).
pub fn enumerate_partitions(n: u32) -> Result<Vec<Partition>> {
    if n == 0 {
        return Err(Error::TooSmall { n, min: 1 });
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n as usize);
    fill(n, n, &mut current, &mut out);
    Ok(out)
}

fn fill(remaining: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::from_sorted(current));
        return;
    }
    for first in (1..=max.min(remaining)).rev() {
        current.push(first);
        fill(remaining - first, first, current, out);
        current.pop();
    }
}
