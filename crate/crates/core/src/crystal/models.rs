use crate::error::Result;
use crate::gtpattern::{self, GtPattern, Pick};
use crate::ssyt::{self, Tableau};
use crate::weight::Weight;

use super::{json_of, CrystalModel};

/// Patterns with the diamond-sum crystal data.
#[derive(Debug, Clone, Copy)]
pub struct GtpCrystal {
    n: usize,
    lower_pick: Pick,
    raise_pick: Pick,
}

impl GtpCrystal {
    pub fn new(n: usize) -> Self {
        GtpCrystal {
            n,
            lower_pick: Pick::Largest,
            raise_pick: Pick::Smallest,
        }
    }

    /// Same data with the operators' tie-breaks overridden.
    pub fn with_picks(n: usize, lower_pick: Pick, raise_pick: Pick) -> Self {
        GtpCrystal {
            n,
            lower_pick,
            raise_pick,
        }
    }
}

impl CrystalModel for GtpCrystal {
    type Element = GtPattern;

    fn rank(&self) -> usize {
        self.n
    }

    fn weight(&self, b: &GtPattern) -> Weight {
        gtpattern::weight_gtp(b)
    }

    fn phi(&self, b: &GtPattern, i: usize) -> Result<i64> {
        gtpattern::phi_gtp(b, i)
    }

    fn epsilon(&self, b: &GtPattern, i: usize) -> Result<i64> {
        gtpattern::epsilon_gtp(b, i)
    }

    fn lower(&self, b: &GtPattern, i: usize) -> Result<Option<GtPattern>> {
        gtpattern::lower_with(b, i, self.lower_pick)
    }

    fn raise(&self, b: &GtPattern, i: usize) -> Result<Option<GtPattern>> {
        gtpattern::raise_with(b, i, self.raise_pick)
    }

    fn to_json(&self, b: &GtPattern) -> serde_json::Value {
        json_of(b)
    }
}

/// Tableaux with the reading-word bracketing.
#[derive(Debug, Clone, Copy)]
pub struct SsytCrystal {
    n: usize,
}

impl SsytCrystal {
    pub fn new(n: usize) -> Self {
        SsytCrystal { n }
    }
}

impl CrystalModel for SsytCrystal {
    type Element = Tableau;

    fn rank(&self) -> usize {
        self.n
    }

    fn weight(&self, b: &Tableau) -> Weight {
        ssyt::weight_ssyt(b)
    }

    fn phi(&self, b: &Tableau, i: usize) -> Result<i64> {
        ssyt::phi_ssyt(b, i)
    }

    fn epsilon(&self, b: &Tableau, i: usize) -> Result<i64> {
        ssyt::epsilon_ssyt(b, i)
    }

    fn lower(&self, b: &Tableau, i: usize) -> Result<Option<Tableau>> {
        ssyt::lower_ssyt(b, i)
    }

    fn raise(&self, b: &Tableau, i: usize) -> Result<Option<Tableau>> {
        ssyt::raise_ssyt(b, i)
    }

    fn to_json(&self, b: &Tableau) -> serde_json::Value {
        json_of(b)
    }
}

/// Tableaux with the column-scan bracketing.
#[derive(Debug, Clone, Copy)]
pub struct SsytColumnCrystal {
    n: usize,
}

impl SsytColumnCrystal {
    pub fn new(n: usize) -> Self {
        SsytColumnCrystal { n }
    }
}

impl CrystalModel for SsytColumnCrystal {
    type Element = Tableau;

    fn rank(&self) -> usize {
        self.n
    }

    fn weight(&self, b: &Tableau) -> Weight {
        ssyt::weight_ssyt(b)
    }

    fn phi(&self, b: &Tableau, i: usize) -> Result<i64> {
        ssyt::by_columns::phi(b, i)
    }

    fn epsilon(&self, b: &Tableau, i: usize) -> Result<i64> {
        ssyt::by_columns::epsilon(b, i)
    }

    fn lower(&self, b: &Tableau, i: usize) -> Result<Option<Tableau>> {
        ssyt::by_columns::lower(b, i)
    }

    fn raise(&self, b: &Tableau, i: usize) -> Result<Option<Tableau>> {
        ssyt::by_columns::raise(b, i)
    }

    fn to_json(&self, b: &Tableau) -> serde_json::Value {
        json_of(b)
    }
}
