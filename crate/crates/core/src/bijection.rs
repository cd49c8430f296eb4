//! The natural bijection between patterns and tableaux.
//!
//! Row `i` of a pattern is the shape of the subtableau holding the letters
//! `1..=i`, so letter `i` fills the skew diagram `row(i) / row(i-1)`.

use crate::error::{check_index, Error, Result};
use crate::gtpattern::{validate_pattern, GtPattern};
use crate::partition::{skew_cells, Partition};
use crate::ssyt::{validate_tableau, Tableau};

/// Fills `row(i) / row(i-1)` with the letter `i`, for `i = 1..=n`.
pub fn pattern_to_tableau(p: &GtPattern) -> Result<Tableau> {
    let n = p.n();
    let shape = p.shape();
    let mut rows: Vec<Vec<i64>> = (1..=shape.len())
        .map(|r| vec![0; shape.part(r) as usize])
        .collect();
    for i in 1..=n {
        let layer = skew_cells(&p.row_partition(i), &p.row_partition(i - 1))?;
        for (r, c) in layer.cells {
            rows[r - 1][c - 1] = i as i64;
        }
    }
    validate_tableau(n, &shape, rows)
        .map_err(|e| Error::Internal(format!("pattern {p} does not give a tableau: {e}")))
}

/// Records the shape left after deleting the letters `n, n-1, ..., 2`.
pub fn tableau_to_pattern(t: &Tableau) -> Result<GtPattern> {
    let n = t.n();
    let mut rows_top_down = Vec::with_capacity(n);
    for i in (1..=n).rev() {
        let parts: Vec<i64> = t
            .rows()
            .iter()
            .map(|r| r.iter().filter(|&&v| v <= i).count() as i64)
            .collect();
        let part = Partition::new(parts)?;
        rows_top_down.push(part.pad(i)?);
    }
    validate_pattern(n, rows_top_down)
        .map_err(|e| Error::Internal(format!("tableau {t} does not give a pattern: {e}")))
}

/// `l(i, k) - l(i-1, k)`: the number of letters `i` in row `k`.
pub fn letter_count_in_row(p: &GtPattern, letter: usize, row: usize) -> Result<i64> {
    check_index("letter", letter, 1, p.n())?;
    check_index("row", row, 1, p.n())?;
    Ok(p.entry(letter, row) - p.entry(letter - 1, row))
}

/// One failed instance of the counting identities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountingViolation {
    /// `"a"` through `"e"`.
    pub part: &'static str,
    pub pattern: String,
    pub i: usize,
    pub j: usize,
    pub from_pattern: i64,
    pub from_tableau: i64,
}

/// Checks every counting identity relating the diamond numbers of `p` to
/// letter counts in its tableau. The right-hand sides are counted directly
/// from the tableau cells.
pub fn check_counting_lemma(p: &GtPattern) -> Result<Vec<CountingViolation>> {
    use crate::gtpattern::{diamond_a, diamond_b, sum_a, sum_b};

    let t = pattern_to_tableau(p)?;
    let n = p.n();
    let count = |letter: usize, row: usize| t.count_in_row(letter, row) as i64;
    let count_rows = |letter: usize, rows: std::ops::RangeInclusive<usize>| -> i64 {
        rows.map(|r| count(letter, r)).sum()
    };
    let mut out = Vec::new();
    let mut check = |part, i, j, lhs: i64, rhs: i64| {
        if lhs != rhs {
            out.push(CountingViolation {
                part,
                pattern: p.to_compact(),
                i,
                j,
                from_pattern: lhs,
                from_tableau: rhs,
            });
        }
    };
    for i in 1..=n {
        for k in 1..=n {
            check("a", i, k, letter_count_in_row(p, i, k)?, count(i, k));
        }
    }
    for i in 1..n {
        for j in 0..=i {
            let rhs = count(i, j) - count(i + 1, j + 1);
            check("b", i, j, diamond_a(p, i, j)?, rhs);
            let rhs = count_rows(i, j.max(1)..=n) - count_rows(i + 1, (j + 1)..=n);
            check("d", i, j, sum_a(p, i, j)?, rhs);
        }
        for j in 1..=i + 1 {
            let rhs = count(i + 1, j) - count(i, j - 1);
            check("c", i, j, diamond_b(p, i, j)?, rhs);
            let rhs = count_rows(i + 1, 1..=j) - count_rows(i, 1..=j - 1);
            check("e", i, j, sum_b(p, i, j)?, rhs);
        }
    }
    Ok(out)
}
