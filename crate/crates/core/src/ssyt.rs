//! Semistandard Young tableaux and the bracketing crystal structure.
//!
//! Two independent routes compute the crystal data. The word route reads
//! the tableau column by column from right to left (each column top to
//! bottom), cancels matched `i ... i+1` pairs in the word, and edits the
//! leftmost free `i` (lowering) or the rightmost free `i+1` (raising). The
//! column route scans columns left to right and pairs each `i` with the
//! rightmost free `i+1` in the same column or further left. Both must agree.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{check_index, Error, Result};
use crate::partition::Partition;
use crate::weight::Weight;

/// A semistandard tableau with letters in `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "TableauJson", into = "TableauJson")]
pub struct Tableau {
    n: usize,
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct TableauJson {
    n: usize,
    shape: Partition,
    rows: Vec<Vec<i64>>,
}

impl TryFrom<TableauJson> for Tableau {
    type Error = Error;

    fn try_from(j: TableauJson) -> Result<Self> {
        validate_tableau(j.n, &j.shape, j.rows)
    }
}

impl From<Tableau> for TableauJson {
    fn from(t: Tableau) -> Self {
        TableauJson {
            n: t.n,
            shape: t.shape,
            rows: t
                .rows
                .into_iter()
                .map(|r| r.into_iter().map(|v| v as i64).collect())
                .collect(),
        }
    }
}

/// Checks shape, alphabet, row weakness and column strictness.
///
/// Cells are scanned row by row; for each cell the alphabet is checked
/// first, then the left neighbour, then the cell above.
pub fn validate_tableau(n: usize, shape: &Partition, rows: Vec<Vec<i64>>) -> Result<Tableau> {
    if n == 0 {
        return Err(Error::Shape("the alphabet must be non-empty".into()));
    }
    if shape.len() > n {
        return Err(Error::Length {
            len: shape.len(),
            n,
        });
    }
    let mut rows = rows;
    while rows.last().is_some_and(|r| r.is_empty()) {
        rows.pop();
    }
    if rows.len() != shape.len() {
        return Err(Error::Shape(format!(
            "shape {shape} has {} rows, found {}",
            shape.len(),
            rows.len()
        )));
    }
    for (r, row) in rows.iter().enumerate() {
        if row.len() as i64 != shape.part(r + 1) {
            return Err(Error::Shape(format!(
                "row {} must have {} cells, found {}",
                r + 1,
                shape.part(r + 1),
                row.len()
            )));
        }
    }
    for (r, row) in rows.iter().enumerate() {
        for (c, &v) in row.iter().enumerate() {
            let (row1, col1) = (r + 1, c + 1);
            if v < 1 || v > n as i64 {
                return Err(Error::Alphabet {
                    row: row1,
                    col: col1,
                    value: v,
                    n,
                });
            }
            if c > 0 && row[c - 1] > v {
                return Err(Error::RowNotWeak {
                    row: row1,
                    col: col1,
                });
            }
            if r > 0 && rows[r - 1][c] >= v {
                return Err(Error::ColumnNotStrict {
                    row: row1,
                    col: col1,
                });
            }
        }
    }
    Ok(Tableau {
        n,
        shape: shape.clone(),
        rows: rows
            .into_iter()
            .map(|r| r.into_iter().map(|v| v as usize).collect())
            .collect(),
    })
}

impl Tableau {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Letter at `(row, col)`, 1-based.
    pub fn cell(&self, row: usize, col: usize) -> Option<usize> {
        self.rows
            .get(row.checked_sub(1)?)?
            .get(col.checked_sub(1)?)
            .copied()
    }

    /// Number of cells in row `row` (1-based) holding `letter`.
    pub fn count_in_row(&self, letter: usize, row: usize) -> usize {
        match row.checked_sub(1).and_then(|r| self.rows.get(r)) {
            Some(cells) => cells.iter().filter(|&&v| v == letter).count(),
            None => 0,
        }
    }

    /// Height of column `col` (1-based).
    fn column_height(&self, col: usize) -> usize {
        self.rows.iter().take_while(|r| r.len() >= col).count()
    }

    fn num_columns(&self) -> usize {
        self.shape.part(1) as usize
    }

    fn with_cell(&self, row: usize, col: usize, letter: usize) -> Result<Tableau> {
        let mut rows: Vec<Vec<i64>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|&v| v as i64).collect())
            .collect();
        rows[row - 1][col - 1] = letter as i64;
        validate_tableau(self.n, &self.shape, rows).map_err(|e| {
            Error::Internal(format!(
                "setting cell ({row}, {col}) of {} to {letter} breaks semistandardness: {e}",
                self.to_compact()
            ))
        })
    }

    /// Single-line form `1,1,2/2`, rows top to bottom.
    pub fn to_compact(&self) -> String {
        self.rows
            .iter()
            .map(|r| r.iter().map(usize::to_string).collect::<Vec<_>>().join(","))
            .collect::<Vec<_>>()
            .join("/")
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_compact())
    }
}

/// A reading word together with the cell each letter came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReadingWord {
    pub letters: Vec<usize>,
    /// `(row, col)`, 1-based, parallel to `letters`.
    pub origin: Vec<(usize, usize)>,
}

impl ReadingWord {
    /// A bare word with no cell information (origins are left empty).
    pub fn from_letters(letters: Vec<usize>) -> Self {
        ReadingWord {
            letters,
            origin: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

/// Cells of `shape` in far-eastern order: columns right to left, each top
/// to bottom.
pub fn far_east_cells(shape: &Partition) -> Vec<(usize, usize)> {
    let width = shape.part(1) as usize;
    let mut cells = Vec::with_capacity(shape.size() as usize);
    for col in (1..=width).rev() {
        for row in 1..=shape.len() {
            if shape.part(row) as usize >= col {
                cells.push((row, col));
            }
        }
    }
    cells
}

pub fn far_east_reading(t: &Tableau) -> ReadingWord {
    let origin = far_east_cells(&t.shape);
    let letters = origin.iter().map(|&(r, c)| t.rows[r - 1][c - 1]).collect();
    ReadingWord { letters, origin }
}

/// Rebuilds the tableau of `shape` whose far-eastern word is `letters`.
pub fn far_east_inverse(n: usize, shape: &Partition, letters: &[usize]) -> Result<Tableau> {
    let cells = far_east_cells(shape);
    if cells.len() != letters.len() {
        return Err(Error::Shape(format!(
            "word of length {} does not fill shape {shape}",
            letters.len()
        )));
    }
    let mut rows: Vec<Vec<i64>> = (1..=shape.len())
        .map(|r| vec![0; shape.part(r) as usize])
        .collect();
    for (&(r, c), &v) in cells.iter().zip(letters) {
        rows[r - 1][c - 1] = v as i64;
    }
    validate_tableau(n, shape, rows)
}

/// The `i`-bracketing of a word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bracketing {
    pub word: ReadingWord,
    pub i: usize,
    /// 1-based positions of cancelled letters.
    pub crossed: BTreeSet<usize>,
}

impl Bracketing {
    /// 1-based positions of uncancelled `i`s, left to right.
    pub fn free_lower(&self) -> Vec<usize> {
        self.free_of(self.i)
    }

    /// 1-based positions of uncancelled `i+1`s, left to right.
    pub fn free_upper(&self) -> Vec<usize> {
        self.free_of(self.i + 1)
    }

    fn free_of(&self, letter: usize) -> Vec<usize> {
        self.word
            .letters
            .iter()
            .enumerate()
            .filter(|&(k, &v)| v == letter && !self.crossed.contains(&(k + 1)))
            .map(|(k, _)| k + 1)
            .collect()
    }
}

/// Cancels `i ... i+1` pairs with a single left-to-right pass: each `i+1`
/// cancels against the nearest free `i` before it.
pub fn bracket_word(word: &ReadingWord, i: usize) -> Bracketing {
    let mut open = Vec::new();
    let mut crossed = BTreeSet::new();
    for (k, &v) in word.letters.iter().enumerate() {
        if v == i {
            open.push(k + 1);
        } else if v == i + 1 {
            if let Some(pos) = open.pop() {
                crossed.insert(pos);
                crossed.insert(k + 1);
            }
        }
    }
    Bracketing {
        word: word.clone(),
        i,
        crossed,
    }
}

fn check_label(t: &Tableau, i: usize) -> Result<()> {
    check_index("i", i, 1, t.n.saturating_sub(1))
}

fn word_bracketing(t: &Tableau, i: usize) -> Result<Bracketing> {
    check_label(t, i)?;
    Ok(bracket_word(&far_east_reading(t), i))
}

/// Number of free `i`s in the `i`-bracketed reading word.
pub fn phi_ssyt(t: &Tableau, i: usize) -> Result<i64> {
    Ok(word_bracketing(t, i)?.free_lower().len() as i64)
}

/// Number of free `i+1`s in the `i`-bracketed reading word.
pub fn epsilon_ssyt(t: &Tableau, i: usize) -> Result<i64> {
    Ok(word_bracketing(t, i)?.free_upper().len() as i64)
}

/// Changes the leftmost free `i` of the reading word to `i+1`.
pub fn lower_ssyt(t: &Tableau, i: usize) -> Result<Option<Tableau>> {
    let b = word_bracketing(t, i)?;
    match b.free_lower().first() {
        None => Ok(None),
        Some(&pos) => {
            let (r, c) = b.word.origin[pos - 1];
            t.with_cell(r, c, i + 1).map(Some)
        }
    }
}

/// Changes the rightmost free `i+1` of the reading word to `i`.
pub fn raise_ssyt(t: &Tableau, i: usize) -> Result<Option<Tableau>> {
    let b = word_bracketing(t, i)?;
    match b.free_upper().last() {
        None => Ok(None),
        Some(&pos) => {
            let (r, c) = b.word.origin[pos - 1];
            t.with_cell(r, c, i).map(Some)
        }
    }
}

/// Letter multiplicities `(N_1, ..., N_n)`.
pub fn weight_ssyt(t: &Tableau) -> Weight {
    let mut w = vec![0i64; t.n];
    for &v in t.rows.iter().flatten() {
        w[v - 1] += 1;
    }
    Weight::new(w)
}

/// Result of the column-scan bracketing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnBracketing {
    pub i: usize,
    /// Cancelled cells, `(row, col)`, 1-based.
    pub crossed: BTreeSet<(usize, usize)>,
    /// Free `i` cells ordered by column.
    pub free_lower: Vec<(usize, usize)>,
    /// Free `i+1` cells ordered by column.
    pub free_upper: Vec<(usize, usize)>,
}

/// Scans columns left to right; an `i` is cancelled together with the
/// rightmost still-free `i+1` in its own column or any column to its left.
pub fn bracket_columns(t: &Tableau, i: usize) -> Result<ColumnBracketing> {
    check_label(t, i)?;
    let mut pool: Vec<(usize, usize)> = Vec::new();
    let mut crossed = BTreeSet::new();
    let mut free_lower = Vec::new();
    for col in 1..=t.num_columns() {
        let height = t.column_height(col);
        let find = |letter: usize| (1..=height).find(|&r| t.rows[r - 1][col - 1] == letter);
        if let Some(r) = find(i + 1) {
            pool.push((r, col));
        }
        if let Some(r) = find(i) {
            match pool.pop() {
                Some(partner) => {
                    crossed.insert(partner);
                    crossed.insert((r, col));
                }
                None => free_lower.push((r, col)),
            }
        }
    }
    Ok(ColumnBracketing {
        i,
        crossed,
        free_lower,
        free_upper: pool,
    })
}

/// Column-route counterparts of the word-route crystal data.
pub mod by_columns {
    use super::*;

    pub fn phi(t: &Tableau, i: usize) -> Result<i64> {
        Ok(bracket_columns(t, i)?.free_lower.len() as i64)
    }

    pub fn epsilon(t: &Tableau, i: usize) -> Result<i64> {
        Ok(bracket_columns(t, i)?.free_upper.len() as i64)
    }

    /// Changes the rightmost free `i` to `i+1`.
    pub fn lower(t: &Tableau, i: usize) -> Result<Option<Tableau>> {
        match bracket_columns(t, i)?.free_lower.last() {
            None => Ok(None),
            Some(&(r, c)) => t.with_cell(r, c, i + 1).map(Some),
        }
    }

    /// Changes the leftmost free `i+1` to `i`.
    pub fn raise(t: &Tableau, i: usize) -> Result<Option<Tableau>> {
        match bracket_columns(t, i)?.free_upper.first() {
            None => Ok(None),
            Some(&(r, c)) => t.with_cell(r, c, i).map(Some),
        }
    }
}

/// The tableau with row `r` filled by the letter `r`.
pub fn highest_weight_tableau(n: usize, shape: &Partition) -> Result<Tableau> {
    let rows = (1..=shape.len())
        .map(|r| vec![r as i64; shape.part(r) as usize])
        .collect();
    validate_tableau(n, shape, rows)
}

/// Every tableau of `shape` over `1..=n`, ordered lexicographically by the
/// row-major sequence of letters. Filled cell by cell, each cell bounded
/// below by its left neighbour and the cell above.
pub fn enumerate_tableaux(n: usize, shape: &Partition) -> Result<Vec<Tableau>> {
    if n == 0 {
        return Err(Error::Shape("the alphabet must be non-empty".into()));
    }
    if shape.len() > n {
        return Err(Error::Length {
            len: shape.len(),
            n,
        });
    }
    let cells: Vec<(usize, usize)> = (0..shape.len())
        .flat_map(|r| (0..shape.part(r + 1) as usize).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<usize>> = (1..=shape.len())
        .map(|r| vec![0; shape.part(r) as usize])
        .collect();
    let mut out = Vec::new();

    fn go(
        k: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<usize>>,
        n: usize,
        shape: &Partition,
        out: &mut Vec<Tableau>,
    ) {
        if k == cells.len() {
            out.push(Tableau {
                n,
                shape: shape.clone(),
                rows: grid.clone(),
            });
            return;
        }
        let (r, c) = cells[k];
        let mut lo = 1;
        if c > 0 {
            lo = lo.max(grid[r][c - 1]);
        }
        if r > 0 {
            lo = lo.max(grid[r - 1][c] + 1);
        }
        for v in lo..=n {
            grid[r][c] = v;
            go(k + 1, cells, grid, n, shape, out);
        }
        grid[r][c] = 0;
    }

    go(0, &cells, &mut grid, n, shape, &mut out);
    Ok(out)
}
