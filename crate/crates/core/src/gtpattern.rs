//! Gelfand-Tsetlin patterns and their crystal structure.
//!
//! A pattern with `n` rows is addressed as `entry(i, j)` for `1 <= j <= i <= n`,
//! where row `i` has `i` entries and row `n` is the top row `lambda`. Any index
//! pair outside that triangle reads as zero, and every formula below is
//! written against that total accessor.
//!
//! The crystal data are built from the *diamond numbers*
//!
//! ```text
//! a(i, j) =  l(i, j) - l(i-1, j)   + l(i, j+1)   - l(i+1, j+1)     0 <= j <= i
//! b(i, j) = -l(i, j) + l(i-1, j-1) - l(i, j-1)   + l(i+1, j)       1 <= j <= i+1
//! ```
//!
//! and their partial sums `A(i, j) = a(i, j) + ... + a(i, i)` and
//! `B(i, j) = b(i, 1) + ... + b(i, j)`. Then `phi_i` is the maximum of
//! `A(i, 1..=i)`, `epsilon_i` the maximum of `B(i, 1..=i)`, `f_i` decrements
//! `l(i, j)` at the largest maximizing `j` and `e_i` increments it at the
//! smallest maximizing `j`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{check_index, Error, Result};
use crate::partition::{join, Partition};
use crate::weight::Weight;

/// A validated Gelfand-Tsetlin pattern.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PatternJson", into = "PatternJson")]
pub struct GtPattern {
    // rows[i - 1] is row i; stored bottom-up
    rows: Vec<Vec<i64>>,
}

/// Wire form: rows listed top-down, row `n` first.
#[derive(Serialize, Deserialize)]
struct PatternJson {
    n: usize,
    rows: Vec<Vec<i64>>,
}

impl TryFrom<PatternJson> for GtPattern {
    type Error = Error;

    fn try_from(j: PatternJson) -> Result<Self> {
        validate_pattern(j.n, j.rows)
    }
}

impl From<GtPattern> for PatternJson {
    fn from(p: GtPattern) -> Self {
        PatternJson {
            n: p.n(),
            rows: p.rows_top_down(),
        }
    }
}

/// Which maximizing index an operator picks. The crystal operators use
/// `Largest` for lowering and `Smallest` for raising; the other choices
/// exist so tests can check that a wrong tie-break is detected.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pick {
    Largest,
    Smallest,
}

/// Builds a pattern from rows listed top-down and checks every condition.
///
/// Non-negativity is checked over the whole array before interleaving, so a
/// negative entry is always reported as such. Interleaving violations are
/// reported at the lower entry `(i, j)`, scanning `i` and then `j` upwards.
pub fn validate_pattern(n: usize, rows_top_down: Vec<Vec<i64>>) -> Result<GtPattern> {
    if n == 0 {
        return Err(Error::Shape("a pattern needs at least one row".into()));
    }
    if rows_top_down.len() != n {
        return Err(Error::Shape(format!(
            "expected {n} rows, found {}",
            rows_top_down.len()
        )));
    }
    let mut rows = rows_top_down;
    rows.reverse();
    for (idx, row) in rows.iter().enumerate() {
        if row.len() != idx + 1 {
            return Err(Error::Shape(format!(
                "row {} must have {} entries, found {}",
                idx + 1,
                idx + 1,
                row.len()
            )));
        }
    }
    for (idx, row) in rows.iter().enumerate() {
        if let Some((c, &v)) = row.iter().enumerate().find(|(_, &v)| v < 0) {
            return Err(Error::Negative {
                row: idx + 1,
                col: c + 1,
                value: v,
            });
        }
    }
    let pattern = GtPattern { rows };
    pattern.check_interleaving()?;
    Ok(pattern)
}

impl GtPattern {
    /// Number of rows.
    pub fn n(&self) -> usize {
        self.rows.len()
    }

    /// `l(i, j)`, zero outside `1 <= j <= i <= n`.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        if j == 0 || j > i || i > self.n() {
            return 0;
        }
        self.rows[i - 1][j - 1]
    }

    /// Row `i` (1-based), `i` entries.
    pub fn row(&self, i: usize) -> &[i64] {
        &self.rows[i - 1]
    }

    pub fn rows_top_down(&self) -> Vec<Vec<i64>> {
        self.rows.iter().rev().cloned().collect()
    }

    /// The top row as a partition.
    pub fn shape(&self) -> Partition {
        Partition::new(self.rows[self.n() - 1].clone()).expect("top row of a valid pattern")
    }

    /// Row `i` as a partition (row 0 is empty).
    pub fn row_partition(&self, i: usize) -> Partition {
        if i == 0 {
            return Partition::empty();
        }
        Partition::new(self.rows[i - 1].clone()).expect("rows of a valid pattern")
    }

    fn row_sum(&self, i: usize) -> i64 {
        if i == 0 || i > self.n() {
            return 0;
        }
        self.rows[i - 1].iter().sum()
    }

    fn check_interleaving(&self) -> Result<()> {
        for i in 1..self.n() {
            for j in 1..=i {
                let (up_left, here, up_right) = (
                    self.entry(i + 1, j),
                    self.entry(i, j),
                    self.entry(i + 1, j + 1),
                );
                if here > up_left {
                    return Err(Error::Interleave {
                        row: i,
                        col: j,
                        detail: format!("l({i},{j}) = {here} > l({},{j}) = {up_left}", i + 1),
                    });
                }
                if here < up_right {
                    return Err(Error::Interleave {
                        row: i,
                        col: j,
                        detail: format!(
                            "l({i},{j}) = {here} < l({},{}) = {up_right}",
                            i + 1,
                            j + 1
                        ),
                    });
                }
            }
        }
        Ok(())
    }

    fn check_label(&self, i: usize) -> Result<()> {
        check_index("i", i, 1, self.n().saturating_sub(1))
    }

    // Unchecked diamond numbers. `i` may be `n`, in which case row n+1 reads
    // as zero; only the weight expressions use that.
    fn a_raw(&self, i: usize, j: usize) -> i64 {
        if j > i {
            return 0;
        }
        self.entry(i, j) - self.entry(i - 1, j) + self.entry(i, j + 1) - self.entry(i + 1, j + 1)
    }

    fn b_raw(&self, i: usize, j: usize) -> i64 {
        if j == 0 || j > i + 1 {
            return 0;
        }
        -self.entry(i, j) + self.entry(i - 1, j - 1) - self.entry(i, j - 1) + self.entry(i + 1, j)
    }

    /// `A(i, j)` for `j = 0..=i`.
    fn sums_a(&self, i: usize) -> Vec<i64> {
        let mut out = vec![0; i + 1];
        let mut acc = 0;
        for j in (0..=i).rev() {
            acc += self.a_raw(i, j);
            out[j] = acc;
        }
        out
    }

    /// `B(i, j)` for `j = 0..=i+1`; slot 0 is the empty sum.
    fn sums_b(&self, i: usize) -> Vec<i64> {
        let mut out = vec![0; i + 2];
        for j in 1..=i + 1 {
            out[j] = out[j - 1] + self.b_raw(i, j);
        }
        out
    }

    /// Copy with `l(i, j)` shifted by `delta`, revalidated.
    fn shifted(&self, i: usize, j: usize, delta: i64) -> Result<GtPattern> {
        let mut rows = self.rows.clone();
        rows[i - 1][j - 1] += delta;
        rows.reverse();
        validate_pattern(self.n(), rows).map_err(|e| {
            Error::Internal(format!(
                "shifting l({i},{j}) by {delta} in {} leaves the pattern space: {e}",
                self.to_compact()
            ))
        })
    }

    /// Single-line form `3,1,0/3,1/2`, rows top-down.
    pub fn to_compact(&self) -> String {
        self.rows
            .iter()
            .rev()
            .map(|r| join(r))
            .collect::<Vec<_>>()
            .join("/")
    }

    /// Multi-line centred triangle with the top row first.
    pub fn to_triangle(&self) -> String {
        let width = self
            .rows
            .iter()
            .flatten()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1);
        let half = width + 1;
        let n = self.n();
        let mut lines = Vec::with_capacity(n);
        for (k, row) in self.rows.iter().rev().enumerate() {
            let mut line = " ".repeat(k * half);
            for (m, v) in row.iter().enumerate() {
                if m > 0 {
                    line.push_str(&" ".repeat(2 * half - width));
                }
                line.push_str(&format!("{v:>width$}"));
            }
            lines.push(line);
        }
        lines.join("\n")
    }
}

impl fmt::Display for GtPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_compact())
    }
}

/// Diamond number `a(i, j)`; zero for `j > i`.
pub fn diamond_a(p: &GtPattern, i: usize, j: usize) -> Result<i64> {
    p.check_label(i)?;
    Ok(p.a_raw(i, j))
}

/// Diamond number `b(i, j)` for `j >= 1`; zero for `j > i + 1`.
pub fn diamond_b(p: &GtPattern, i: usize, j: usize) -> Result<i64> {
    p.check_label(i)?;
    check_index("j", j, 1, usize::MAX)?;
    Ok(p.b_raw(i, j))
}

/// Diamond sum `A(i, j) = a(i, j) + ... + a(i, i)` for `0 <= j <= i`.
pub fn sum_a(p: &GtPattern, i: usize, j: usize) -> Result<i64> {
    p.check_label(i)?;
    check_index("j", j, 0, i)?;
    Ok(p.sums_a(i)[j])
}

/// Diamond sum `B(i, j) = b(i, 1) + ... + b(i, j)` for `1 <= j <= i + 1`.
pub fn sum_b(p: &GtPattern, i: usize, j: usize) -> Result<i64> {
    p.check_label(i)?;
    check_index("j", j, 1, i + 1)?;
    Ok(p.sums_b(i)[j])
}

/// Coordinate `j` is `|row j| - |row j-1|`.
pub fn weight_gtp(p: &GtPattern) -> Weight {
    let w = Weight::new(
        (1..=p.n())
            .map(|j| p.row_sum(j) - p.row_sum(j - 1))
            .collect::<Vec<_>>(),
    );
    #[cfg(debug_assertions)]
    {
        let [_, via_a, via_b] = weight_expressions(p);
        debug_assert!(w.congruent(&via_a) && w.congruent(&via_b));
    }
    w
}

/// The three weight expressions: row-sum differences,
/// `sum_i A(i, 0) omega_i` and `-sum_i B(i, i+1) omega_i` (with `i` running
/// up to `n`). The last two live in `gl_n` coordinates where `omega_n` is the
/// all-ones vector, so they agree with the first only up to a constant
/// vector, i.e. in the `A_{n-1}` weight lattice.
pub fn weight_expressions(p: &GtPattern) -> [Weight; 3] {
    let n = p.n();
    let direct = Weight::new(
        (1..=n)
            .map(|j| p.row_sum(j) - p.row_sum(j - 1))
            .collect::<Vec<_>>(),
    );
    let mut via_a = Weight::zero(n);
    let mut via_b = Weight::zero(n);
    for i in 1..=n {
        let omega = Weight::fundamental(n, i).expect("1 <= i <= n");
        via_a = &via_a + &omega.scaled(p.sums_a(i)[0]);
        via_b = &via_b - &omega.scaled(p.sums_b(i)[i + 1]);
    }
    [direct, via_a, via_b]
}

/// `phi_i = max(A(i, 1), ..., A(i, i))`.
pub fn phi_gtp(p: &GtPattern, i: usize) -> Result<i64> {
    p.check_label(i)?;
    let phi = p.sums_a(i)[1..].iter().copied().max().expect("i >= 1");
    if phi < 0 {
        return Err(Error::Internal(format!(
            "phi_{i} of {p} is negative ({phi})"
        )));
    }
    Ok(phi)
}

/// `epsilon_i = max(B(i, 1), ..., B(i, i))`; `B(i, i+1)` is excluded.
pub fn epsilon_gtp(p: &GtPattern, i: usize) -> Result<i64> {
    p.check_label(i)?;
    let eps = p.sums_b(i)[1..=i].iter().copied().max().expect("i >= 1");
    if eps < 0 {
        return Err(Error::Internal(format!(
            "epsilon_{i} of {p} is negative ({eps})"
        )));
    }
    Ok(eps)
}

fn pick_index(values: &[i64], target: i64, pick: Pick) -> usize {
    // values[k] belongs to j = k + 1
    let mut hits = values
        .iter()
        .enumerate()
        .filter(|(_, &v)| v == target)
        .map(|(k, _)| k + 1);
    match pick {
        Pick::Smallest => hits.next(),
        Pick::Largest => hits.next_back(),
    }
    .expect("the maximum is attained")
}

/// Lowering operator with an explicit tie-break.
pub fn lower_with(p: &GtPattern, i: usize, pick: Pick) -> Result<Option<GtPattern>> {
    let phi = phi_gtp(p, i)?;
    if phi == 0 {
        return Ok(None);
    }
    let sums = p.sums_a(i);
    let l = pick_index(&sums[1..], phi, pick);
    p.shifted(i, l, -1).map(Some)
}

/// Raising operator with an explicit tie-break.
pub fn raise_with(p: &GtPattern, i: usize, pick: Pick) -> Result<Option<GtPattern>> {
    let eps = epsilon_gtp(p, i)?;
    if eps == 0 {
        return Ok(None);
    }
    let sums = p.sums_b(i);
    let l = pick_index(&sums[1..=i], eps, pick);
    p.shifted(i, l, 1).map(Some)
}

/// `f_i`: decrement `l(i, l)` at the largest `l` with `A(i, l) = phi_i`.
pub fn lower_gtp(p: &GtPattern, i: usize) -> Result<Option<GtPattern>> {
    lower_with(p, i, Pick::Largest)
}

/// `e_i`: increment `l(i, l)` at the smallest `l` with `B(i, l) = epsilon_i`.
pub fn raise_gtp(p: &GtPattern, i: usize) -> Result<Option<GtPattern>> {
    raise_with(p, i, Pick::Smallest)
}

/// The pattern whose row `i` is `(lambda_1, ..., lambda_i)`.
pub fn highest_weight_pattern(n: usize, lambda: &Partition) -> Result<GtPattern> {
    let top = lambda.pad(n)?;
    if n == 0 {
        return Err(Error::Shape("a pattern needs at least one row".into()));
    }
    let rows = (1..=n).map(|i| top[..i].to_vec()).collect();
    Ok(GtPattern { rows })
}

/// Every pattern with `n` rows and top row `lambda`, ordered
/// lexicographically by the concatenation of rows read top-down.
///
/// Each entry is chosen within its interleaving window
/// `l(i+1, j+1) <= l(i, j) <= l(i+1, j)`, so nothing is filtered afterwards.
pub fn enumerate_patterns(n: usize, lambda: &Partition) -> Result<Vec<GtPattern>> {
    if n == 0 {
        return Err(Error::Shape("a pattern needs at least one row".into()));
    }
    let top = lambda.pad(n)?;

    // rows_td[k] is row n - k while filling
    fn fill(rows_td: &mut Vec<Vec<i64>>, n: usize, out: &mut Vec<GtPattern>) {
        let k = rows_td.len();
        if k == n {
            let mut rows = rows_td.clone();
            rows.reverse();
            out.push(GtPattern { rows });
            return;
        }
        let above = rows_td[k - 1].clone();
        let len = n - k;
        let mut row = Vec::with_capacity(len);
        choose(&above, len, &mut row, rows_td, n, out);
    }

    fn choose(
        above: &[i64],
        len: usize,
        row: &mut Vec<i64>,
        rows_td: &mut Vec<Vec<i64>>,
        n: usize,
        out: &mut Vec<GtPattern>,
    ) {
        let j = row.len();
        if j == len {
            rows_td.push(row.clone());
            fill(rows_td, n, out);
            rows_td.pop();
            return;
        }
        for v in above[j + 1]..=above[j] {
            row.push(v);
            choose(above, len, row, rows_td, n, out);
            row.pop();
        }
    }

    let mut out = Vec::new();
    fill(&mut vec![top], n, &mut out);
    Ok(out)
}

/// Closed-form string datum `d(i, j)` for `1 <= i < j <= n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StringDatum {
    pub n: usize,
    #[serde(with = "datum_entries")]
    pub d: BTreeMap<(usize, usize), i64>,
}

impl StringDatum {
    pub fn get(&self, i: usize, j: usize) -> Option<i64> {
        self.d.get(&(i, j)).copied()
    }
}

mod datum_entries {
    use std::collections::BTreeMap;

    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Entry {
        i: usize,
        j: usize,
        value: i64,
    }

    pub fn serialize<S: Serializer>(
        d: &BTreeMap<(usize, usize), i64>,
        s: S,
    ) -> Result<S::Ok, S::Error> {
        let entries: Vec<Entry> = d
            .iter()
            .map(|(&(i, j), &value)| Entry { i, j, value })
            .collect();
        entries.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> Result<BTreeMap<(usize, usize), i64>, D::Error> {
        let entries = Vec::<Entry>::deserialize(d)?;
        Ok(entries.into_iter().map(|e| ((e.i, e.j), e.value)).collect())
    }
}

/// `d(i, j) = sum_{m=1}^{j-i} (l(j, m) - l(j-1, m))`.
///
/// This is the string datum along the reduced word
/// `(1, 2,1, 3,2,1, ..., n-1,...,1)`: raise greedily along the word and
/// record how many times each letter applies. The exponent recorded at the
/// position holding letter `j - i` inside the block `(j-1, j-2, ..., 1)` equals
/// `d(i, j)`. That alignment was found by exhaustive search over positions,
/// word orientations and operator directions, and is pinned by the
/// `string_datum_alignment` tests.
pub fn string_datum(p: &GtPattern) -> StringDatum {
    let n = p.n();
    let mut d = BTreeMap::new();
    for j in 2..=n {
        for i in 1..j {
            let v = (1..=j - i).map(|m| p.entry(j, m) - p.entry(j - 1, m)).sum();
            d.insert((i, j), v);
        }
    }
    StringDatum { n, d }
}

/// The reduced word `(1, 2,1, 3,2,1, ..., n-1,...,1)`.
pub fn long_word(n: usize) -> Vec<usize> {
    (1..n).flat_map(|k| (1..=k).rev()).collect()
}

/// Position (0-based) in [`long_word`] whose exponent is `d(i, j)`.
pub fn datum_position(i: usize, j: usize) -> usize {
    let block_start = (j - 1) * (j - 2) / 2;
    // block j-1 reads (j-1, j-2, ..., 1); letter j-i sits at offset i-1
    block_start + (i - 1)
}
