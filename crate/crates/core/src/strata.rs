//! Euler obstruction of a function from stratification data:
//!
//! ```text
//! Eu_f(X, 0) = sum_i [chi(M_l ∩ W_i) - chi(M_f ∩ W_i)] * Eu_X(W_i)
//! ```
//!
//! where `M_l`, `M_f` are Milnor fibres of a generic linear form and of `f`.
//! The Euler characteristics and `Eu_X` values are supplied by the caller.

use std::collections::BTreeSet;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StrataError {
    #[error("stratification table has no strata")]
    Empty,
    #[error("duplicate stratum name {0:?}")]
    DuplicateName(String),
    #[error("regular stratum {0:?} must have Eu_X = 1")]
    RegularEulerObstruction(String),
    #[error("integer overflow while summing strata")]
    Overflow,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratumDatum {
    pub name: String,
    /// Euler characteristic of the generic-form Milnor fibre on this stratum.
    pub chi_l: i64,
    /// Euler characteristic of the Milnor fibre of `f` on this stratum.
    pub chi_f: i64,
    /// Local Euler obstruction of `X` along this stratum.
    pub eu_x: i64,
    /// Marks the top (regular) stratum.
    pub regular: bool,
}

impl StratumDatum {
    pub fn new(name: impl Into<String>, chi_l: i64, chi_f: i64, eu_x: i64) -> Self {
        StratumDatum {
            name: name.into(),
            chi_l,
            chi_f,
            eu_x,
            regular: false,
        }
    }

    pub fn regular(mut self) -> Self {
        self.regular = true;
        self
    }

    fn contribution(&self) -> Option<i64> {
        self.chi_l.checked_sub(self.chi_f)?.checked_mul(self.eu_x)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrataTable {
    strata: Vec<StratumDatum>,
    dim_x: usize,
}

impl StrataTable {
    pub fn new(dim_x: usize, strata: Vec<StratumDatum>) -> Result<Self, StrataError> {
        if strata.is_empty() {
            return Err(StrataError::Empty);
        }
        let mut seen = BTreeSet::new();
        for s in &strata {
            if !seen.insert(s.name.as_str()) {
                return Err(StrataError::DuplicateName(s.name.clone()));
            }
            if s.regular && s.eu_x != 1 {
                return Err(StrataError::RegularEulerObstruction(s.name.clone()));
            }
        }
        Ok(StrataTable { strata, dim_x })
    }

    pub fn strata(&self) -> &[StratumDatum] {
        &self.strata
    }

    pub fn dim_x(&self) -> usize {
        self.dim_x
    }

    /// `sum (chi_l - chi_f) * Eu_X` over all strata.
    pub fn euler_obstruction(&self) -> Result<i64, StrataError> {
        self.strata.iter().try_fold(0i64, |acc, s| {
            s.contribution()
                .and_then(|c| acc.checked_add(c))
                .ok_or(StrataError::Overflow)
        })
    }

    /// True when the table value equals `(-1)^dim X * alpha_q`.
    pub fn matches_morse_count(&self, alpha_q: u64) -> Result<bool, StrataError> {
        let alpha = i64::try_from(alpha_q).map_err(|_| StrataError::Overflow)?;
        let expected = if self.dim_x.is_multiple_of(2) {
            alpha
        } else {
            -alpha
        };
        Ok(self.euler_obstruction()? == expected)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn crossing_planes_table() -> StrataTable {
        StrataTable::new(
            2,
            vec![
                StratumDatum::new("W0", 1, 2, 2),
                StratumDatum::new("W1", 0, -2, 1).regular(),
            ],
        )
        .unwrap()
    }

    #[test]
    fn two_planes_crossing_along_a_line() {
        let t = crossing_planes_table();
        assert_eq!(t.euler_obstruction().unwrap(), 0);
        assert!(t.matches_morse_count(0).unwrap());
        assert!(!t.matches_morse_count(1).unwrap());
    }

    #[test]
    fn small_tables() {
        let t = StrataTable::new(1, vec![StratumDatum::new("X", 4, 4, 1).regular()]).unwrap();
        assert_eq!(t.euler_obstruction().unwrap(), 0);
        let t = StrataTable::new(2, vec![StratumDatum::new("W", 3, 1, 2)]).unwrap();
        assert_eq!(t.euler_obstruction().unwrap(), 4);
    }

    #[test]
    fn sign_bookkeeping_for_curves() {
        let t = StrataTable::new(1, vec![StratumDatum::new("W", 0, 1, 1)]).unwrap();
        assert_eq!(t.euler_obstruction().unwrap(), -1);
        assert!(t.matches_morse_count(1).unwrap());
        assert!(!t.matches_morse_count(2).unwrap());
    }

    #[test]
    fn table_validation() {
        assert_eq!(StrataTable::new(1, vec![]), Err(StrataError::Empty));
        let dup = vec![
            StratumDatum::new("W", 1, 1, 1),
            StratumDatum::new("W", 0, 0, 1),
        ];
        assert_eq!(
            StrataTable::new(1, dup),
            Err(StrataError::DuplicateName("W".into()))
        );
        let bad = vec![StratumDatum::new("top", 1, 0, 2).regular()];
        assert!(matches!(
            StrataTable::new(1, bad),
            Err(StrataError::RegularEulerObstruction(_))
        ));
        let huge = StrataTable::new(1, vec![StratumDatum::new("W", i64::MAX, -1, 1)]).unwrap();
        assert_eq!(huge.euler_obstruction(), Err(StrataError::Overflow));
    }

    proptest! {
        #[test]
        fn splitting_a_row_preserves_the_sum(
            rows in prop::collection::vec((-50i64..50, -50i64..50, -5i64..5), 1..6),
            split in -50i64..50,
        ) {
            let strata: Vec<StratumDatum> = rows
                .iter()
                .enumerate()
                .map(|(i, &(l, f, e))| StratumDatum::new(format!("W{i}"), l, f, e))
                .collect();
            let base = StrataTable::new(2, strata.clone()).unwrap().euler_obstruction().unwrap();
            // Split the first row's (chi_l - chi_f) into two rows with the
            // same Eu_X.
            let first = &strata[0];
            let mut parts = vec![
                StratumDatum::new("A", split, 0, first.eu_x),
                StratumDatum::new("B", first.chi_l - first.chi_f - split, 0, first.eu_x),
            ];
            parts.extend(strata[1..].iter().cloned());
            let after = StrataTable::new(2, parts).unwrap().euler_obstruction().unwrap();
            prop_assert_eq!(base, after);
        }

        #[test]
        fn equal_characteristics_give_zero(
            rows in prop::collection::vec((-50i64..50, -5i64..5), 1..6),
        ) {
            let strata = rows
                .iter()
                .enumerate()
                .map(|(i, &(c, e))| StratumDatum::new(format!("W{i}"), c, c, e))
                .collect();
            prop_assert_eq!(StrataTable::new(3, strata).unwrap().euler_obstruction().unwrap(), 0);
        }
    }
}
