//! Partitions, skew diagrams and the Weyl dimension formula.

use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of non-negative integers.
///
/// Stored without trailing zeros, so `(3,1,0)` and `(3,1)` compare equal.
/// Use [`Partition::pad`] when a fixed length is needed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct Partition {
    parts: Vec<i64>,
}

impl Partition {
    pub fn new(parts: impl Into<Vec<i64>>) -> Result<Self> {
        let mut parts = parts.into();
        let decreasing = parts.windows(2).all(|w| w[0] >= w[1]);
        if !decreasing || parts.iter().any(|&p| p < 0) {
            return Err(Error::NotPartition { parts });
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The non-zero parts.
    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    /// Number of non-zero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn size(&self) -> i64 {
        self.parts.iter().sum()
    }

    /// Part `k` (1-based), zero beyond the length.
    pub fn part(&self, k: usize) -> i64 {
        if k == 0 {
            return 0;
        }
        self.parts.get(k - 1).copied().unwrap_or(0)
    }

    /// Zero-extends the parts to exactly `n` entries.
    pub fn pad(&self, n: usize) -> Result<Vec<i64>> {
        if self.len() > n {
            return Err(Error::Length { len: self.len(), n });
        }
        let mut out = self.parts.clone();
        out.resize(n, 0);
        Ok(out)
    }

    /// Whether the Young diagram of `self` fits inside that of `outer`.
    pub fn is_contained_in(&self, outer: &Partition) -> bool {
        self.len() <= outer.len() && self.parts.iter().zip(&outer.parts).all(|(a, b)| a <= b)
    }

    /// Compact comma-separated form, e.g. `3,1`.
    pub fn to_compact(&self) -> String {
        join(&self.parts)
    }
}

impl TryFrom<Vec<i64>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<i64>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<i64> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_compact())
    }
}

pub(crate) fn join(values: &[i64]) -> String {
    values
        .iter()
        .map(i64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// Zero-padding free function form of [`Partition::pad`].
pub fn pad(p: &Partition, n: usize) -> Result<Vec<i64>> {
    p.pad(n)
}

/// The cells of a skew diagram `outer / inner`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewCells {
    pub outer: Partition,
    pub inner: Partition,
    /// `(row, column)` pairs, 1-based, row-major.
    pub cells: Vec<(usize, usize)>,
}

impl SkewCells {
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }
}

/// Cells `(r, c)` with `inner_r < c <= outer_r`, in row-major order.
pub fn skew_cells(outer: &Partition, inner: &Partition) -> Result<SkewCells> {
    if !inner.is_contained_in(outer) {
        return Err(Error::Shape(format!("{inner} is not contained in {outer}")));
    }
    let cells = (1..=outer.len())
        .flat_map(|r| {
            let lo = inner.part(r) as usize;
            let hi = outer.part(r) as usize;
            (lo + 1..=hi).map(move |c| (r, c))
        })
        .collect();
    Ok(SkewCells {
        outer: outer.clone(),
        inner: inner.clone(),
        cells,
    })
}

/// Dimension of the irreducible `gl_n` module with highest weight `lambda`.
///
/// Evaluates `prod_{i<j} (l_i - l_j + j - i) / (j - i)` as one exact quotient
/// of two big-integer products.
pub fn weyl_dimension(n: usize, lambda: &Partition) -> Result<BigUint> {
    let l = lambda.pad(n)?;
    let mut num = BigUint::from(1u32);
    let mut den = BigUint::from(1u32);
    for i in 0..n {
        for j in i + 1..n {
            let gap = (j - i) as i64;
            // weakly decreasing parts keep every factor positive
            num *= BigUint::from((l[i] - l[j] + gap) as u64);
            den *= BigUint::from(gap as u64);
        }
    }
    debug_assert_eq!(&num % &den, BigUint::from(0u32));
    Ok(num / den)
}

/// All partitions of `total` with at most `max_len` parts, in reverse
/// lexicographic order (largest first part first).
pub fn partitions_of(total: i64, max_len: usize) -> Vec<Partition> {
    fn go(rest: i64, cap: i64, slots: usize, cur: &mut Vec<i64>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=cap.min(rest)).rev() {
            cur.push(p);
            go(rest - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(total, total, max_len, &mut Vec::new(), &mut out);
    out
}

/// All partitions with `|lambda| <= max_size` and at most `max_len` parts,
/// ordered by size and then as in [`partitions_of`].
pub fn partitions_up_to(max_size: i64, max_len: usize) -> Vec<Partition> {
    (0..=max_size)
        .flat_map(|s| partitions_of(s, max_len))
        .collect()
}
