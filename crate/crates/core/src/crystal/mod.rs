//! Model-agnostic crystal machinery: graphs, axiom checks, isomorphism
//! checks.
//!
//! A crystal model is anything implementing [`CrystalModel`]. Elements are
//! identified by [`CrystalModel::canonical_key`], the JSON serialization of
//! the element with object keys in sorted order.

mod graph;
mod models;
mod verify;

pub use graph::{build_graph, build_graph_bfs, connectivity, CrystalGraph, Edge, Vertex};
pub use models::{GtpCrystal, SsytColumnCrystal, SsytCrystal};
pub use verify::{
    highest_weight_elements, verify_axioms, verify_axioms_capped, verify_isomorphism,
    verify_isomorphism_capped, AxiomReport, IsoReport, Report, Violation, DEFAULT_VIOLATION_LIMIT,
};

use std::hash::Hash;

use serde::Serialize;

use crate::error::Result;
use crate::weight::Weight;

/// The data of a type `A_{n-1}` crystal over elements of type `Element`.
///
/// Labels `i` run over `1..rank()`. Operators return `Ok(None)` for the
/// zero element and `Err` only when an implementation invariant breaks.
pub trait CrystalModel {
    type Element: Clone + Eq + Hash;

    /// `n`; the crystal has labels `1..=n-1`.
    fn rank(&self) -> usize;

    fn weight(&self, b: &Self::Element) -> Weight;

    fn phi(&self, b: &Self::Element, i: usize) -> Result<i64>;

    fn epsilon(&self, b: &Self::Element, i: usize) -> Result<i64>;

    fn lower(&self, b: &Self::Element, i: usize) -> Result<Option<Self::Element>>;

    fn raise(&self, b: &Self::Element, i: usize) -> Result<Option<Self::Element>>;

    /// JSON form of the element.
    fn to_json(&self, b: &Self::Element) -> serde_json::Value;

    /// Injective identity key; the JSON form with sorted object keys.
    fn canonical_key(&self, b: &Self::Element) -> String {
        self.to_json(b).to_string()
    }

    fn labels(&self) -> std::ops::Range<usize> {
        1..self.rank().max(1)
    }
}

pub(crate) fn json_of<T: Serialize>(value: &T) -> serde_json::Value {
    serde_json::to_value(value).expect("crystal elements serialize to JSON")
}

/// Which operator family a string datum is read with.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// Exponents of `e_i`, measured by `epsilon_i`.
    Raise,
    /// Exponents of `f_i`, measured by `phi_i`.
    Lower,
}

/// Applies the operators along `word` greedily: at each letter `i`, record
/// how many times the operator applies and apply it that many times.
pub fn string_datum_along<M: CrystalModel>(
    model: &M,
    b: &M::Element,
    word: &[usize],
    direction: Direction,
) -> Result<Vec<i64>> {
    let mut current = b.clone();
    let mut out = Vec::with_capacity(word.len());
    for &i in word {
        let mut count = 0;
        loop {
            let next = match direction {
                Direction::Raise => model.raise(&current, i)?,
                Direction::Lower => model.lower(&current, i)?,
            };
            match next {
                Some(c) => {
                    current = c;
                    count += 1;
                }
                None => break,
            }
        }
        out.push(count);
    }
    Ok(out)
}
