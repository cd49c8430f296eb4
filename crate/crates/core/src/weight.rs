//! Weights in `gl_n` coordinates.
//!
//! A weight is stored as the tuple of letter multiplicities `(N_1, ..., N_n)`.
//! The type `A_{n-1}` weight lattice is the quotient by the all-ones vector;
//! that quotient is only observed through [`Weight::coroot_pairing`], which
//! is constant on cosets.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{check_index, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coords: impl Into<Vec<i64>>) -> Self {
        Weight(coords.into())
    }

    pub fn zero(n: usize) -> Self {
        Weight(vec![0; n])
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// `<wt, alpha_i^vee> = N_i - N_{i+1}` for `1 <= i <= n-1`.
    pub fn coroot_pairing(&self, i: usize) -> Result<i64> {
        check_index("i", i, 1, self.0.len().saturating_sub(1))?;
        Ok(self.0[i - 1] - self.0[i])
    }

    /// The simple root `alpha_i = e_i - e_{i+1}` in rank `n`.
    pub fn simple_root(n: usize, i: usize) -> Result<Self> {
        check_index("i", i, 1, n.saturating_sub(1))?;
        let mut v = vec![0; n];
        v[i - 1] = 1;
        v[i] = -1;
        Ok(Weight(v))
    }

    /// The fundamental weight `omega_i = e_1 + ... + e_i`.
    pub fn fundamental(n: usize, i: usize) -> Result<Self> {
        check_index("i", i, 1, n)?;
        let mut v = vec![0; n];
        v[..i].fill(1);
        Ok(Weight(v))
    }

    /// Equality in the quotient lattice: the difference is a constant vector.
    pub fn congruent(&self, other: &Weight) -> bool {
        if self.rank() != other.rank() {
            return false;
        }
        let mut diffs = self.0.iter().zip(&other.0).map(|(a, b)| a - b);
        match diffs.next() {
            None => true,
            Some(d0) => diffs.all(|d| d == d0),
        }
    }

    pub fn scaled(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|x| x * k).collect())
    }
}

impl std::ops::Add<&Weight> for &Weight {
    type Output = Weight;

    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.rank(), rhs.rank(), "weight rank mismatch");
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl std::ops::Sub<&Weight> for &Weight {
    type Output = Weight;

    fn sub(self, rhs: &Weight) -> Weight {
        assert_eq!(self.rank(), rhs.rank(), "weight rank mismatch");
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", crate::partition::join(&self.0))
    }
}

/// Free function form of [`Weight::coroot_pairing`].
pub fn coroot_pairing(w: &Weight, i: usize) -> Result<i64> {
    w.coroot_pairing(i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn pairing_examples() {
        let w = Weight::new(vec![2, 2, 0]);
        assert_eq!(w.coroot_pairing(1).unwrap(), 0);
        assert_eq!(w.coroot_pairing(2).unwrap(), 2);
        assert!(w.coroot_pairing(0).is_err());
        assert!(w.coroot_pairing(3).is_err());
        let c = Weight::new(vec![4; 5]);
        assert!((1..5).all(|i| c.coroot_pairing(i).unwrap() == 0));
    }

    #[test]
    fn roots_pair_like_the_cartan_matrix() {
        let n = 4;
        for i in 1..n {
            let a = Weight::simple_root(n, i).unwrap();
            for j in 1..n {
                let expected = match i.abs_diff(j) {
                    0 => 2,
                    1 => -1,
                    _ => 0,
                };
                assert_eq!(a.coroot_pairing(j).unwrap(), expected);
            }
        }
        for i in 1..n {
            let w = Weight::fundamental(n, i).unwrap();
            for j in 1..n {
                assert_eq!(w.coroot_pairing(j).unwrap(), i64::from(i == j));
            }
        }
    }

    proptest! {
        #[test]
        fn pairing_ignores_constant_shift(
            coords in proptest::collection::vec(-20i64..20, 2..7),
            shift in -50i64..50,
        ) {
            let w = Weight::new(coords.clone());
            let shifted = Weight::new(coords.iter().map(|c| c + shift).collect::<Vec<_>>());
            prop_assert!(w.congruent(&shifted));
            for i in 1..coords.len() {
                prop_assert_eq!(w.coroot_pairing(i).unwrap(), shifted.coroot_pairing(i).unwrap());
            }
        }
    }
}
