//! Graded Betti numbers of monomial ideals.
//!
//! Two independent routes compute the same [`BettiTable`]:
//!
//! * [`graded_betti_hochster`] takes reduced homology of the upper Koszul
//!   simplicial complexes `K^b(I)` over the squarefree multidegrees `b` of the
//!   lcm lattice.
//! * [`graded_betti_taylor`] takes homology of the Taylor complex tensored
//!   with the residue field, one multidegree at a time.
//!
//! Tables follow the `R/I` convention: `B_{0,0} = 1` and `B_{1,j}` counts the
//! minimal generators of degree `j`.
//!
//! Both routes accept a `max_index` bound. Multigraded Betti numbers
//! `B_{i,b}` can only be nonzero when `b` is the lcm of `i` generators (the
//! Taylor resolution bounds the minimal one), so a table restricted to rows
//! `i <= r` only needs lcms of at most `r` generators and homology in low
//! dimensions. That keeps rows 1 and 2 cheap for ideals whose full
//! resolution is far out of reach.

mod complex;
mod hochster;
mod linalg;
mod render;
mod taylor;

use std::collections::BTreeMap;

use thiserror::Error;

use crate::algebra::{Characteristic, Monomial};

pub use complex::{reduced_homology_ranks, HomologyRanks, SimplicialComplex};
pub use hochster::{
    graded_betti_hochster, lcm_lattice, multigraded_betti_hochster, upper_koszul_complex,
    LcmLattice,
};
pub use linalg::IntMatrix;
pub use render::BettiJson;
pub use taylor::{
    graded_betti_taylor, multigraded_betti_taylor, TAYLOR_FACE_LIMIT, TAYLOR_MAX_GENERATORS,
};

/// Exponent vector used as a multidegree.
pub type Multidegree = Monomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResolutionError {
    #[error("multidegree is not squarefree; use the Taylor route")]
    NonSquarefreeDegree,
    #[error("ideal is not squarefree; use the Taylor route")]
    NonSquarefreeIdeal,
    #[error("{count} generators exceed the Taylor route limit of {limit}")]
    TooManyGenerators { count: usize, limit: usize },
    #[error("{count} generator subsets exceed the Taylor route limit of {limit}")]
    TooManyFaces { count: u128, limit: usize },
    #[error("{count} variables exceed the limit of {limit}")]
    TooManyVariables { count: usize, limit: usize },
    #[error("invalid options: {0}")]
    InvalidOptions(&'static str),
}

/// Which squarefree multidegrees the Hochster route visits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DegreeSupport {
    /// Every lcm of a nonempty subset of generators.
    #[default]
    LcmLattice,
    /// Lcms of at most `max_index` generators; requires `max_index`.
    BoundedLcms,
    /// All `2^n` squarefree multidegrees (an oracle for the pruning).
    AllSquarefree,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct BettiOptions {
    pub characteristic: Characteristic,
    /// Compute only rows `i <= max_index`; `None` for the whole table.
    pub max_index: Option<usize>,
    pub support: DegreeSupport,
}

impl BettiOptions {
    pub fn full(characteristic: Characteristic) -> Self {
        BettiOptions {
            characteristic,
            max_index: None,
            support: DegreeSupport::LcmLattice,
        }
    }

    /// Rows `0..=max_index` only.
    pub fn rows(characteristic: Characteristic, max_index: usize) -> Self {
        BettiOptions {
            characteristic,
            max_index: Some(max_index),
            support: DegreeSupport::LcmLattice,
        }
    }

    pub fn with_support(mut self, support: DegreeSupport) -> Self {
        self.support = support;
        self
    }
}

/// Graded Betti numbers `B_{i,j}` of `R/I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, u64), u64>,
    characteristic: Characteristic,
    max_index: Option<usize>,
}

impl BettiTable {
    pub const CONVENTION: &'static str = "resolution of R/I";

    pub fn new(characteristic: Characteristic, max_index: Option<usize>) -> Self {
        BettiTable {
            entries: BTreeMap::new(),
            characteristic,
            max_index,
        }
    }

    /// Adds `value` to `B_{i,j}`; zero contributions are not stored.
    pub fn add(&mut self, i: usize, j: u64, value: u64) {
        if value > 0 {
            *self.entries.entry((i, j)).or_insert(0) += value;
        }
    }

    pub fn get(&self, i: usize, j: u64) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// `Σ_j B_{i,j}`.
    pub fn total(&self, i: usize) -> u64 {
        self.entries
            .range((i, 0)..=(i, u64::MAX))
            .map(|(_, v)| v)
            .sum()
    }

    /// Nonzero entries of row `i`, keyed by degree.
    pub fn row(&self, i: usize) -> BTreeMap<u64, u64> {
        self.entries
            .range((i, 0)..=(i, u64::MAX))
            .map(|(&(_, j), &v)| (j, v))
            .collect()
    }

    /// Nonzero entries as `(i, j, value)` in increasing `(i, j)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, u64, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &v)| (i, j, v))
    }

    /// Largest `i` with a nonzero entry.
    pub fn projective_dimension(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    pub fn characteristic(&self) -> Characteristic {
        self.characteristic
    }

    /// Rows above this index were not computed.
    pub fn max_index(&self) -> Option<usize> {
        self.max_index
    }

    /// Same table cut to rows `i <= max_index`.
    pub fn truncated(&self, max_index: usize) -> Self {
        BettiTable {
            entries: self
                .entries
                .iter()
                .filter(|(&(i, _), _)| i <= max_index)
                .map(|(&k, &v)| (k, v))
                .collect(),
            characteristic: self.characteristic,
            max_index: Some(self.max_index.map_or(max_index, |m| m.min(max_index))),
        }
    }

    /// Whether the numeric entries agree, ignoring metadata.
    pub fn same_entries(&self, other: &Self) -> bool {
        self.entries == other.entries
    }
}

/// Assembles a graded table from multigraded contributions.
fn collect_table(
    options: &BettiOptions,
    contributions: impl IntoIterator<Item = (usize, Monomial, u64)>,
) -> BettiTable {
    let mut table = BettiTable::new(options.characteristic, options.max_index);
    for (i, b, v) in contributions {
        table.add(i, b.degree(), v);
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_accessors() {
        let mut t = BettiTable::new(Characteristic::Zero, None);
        t.add(0, 0, 1);
        t.add(1, 2, 2);
        t.add(1, 3, 1);
        t.add(2, 3, 1);
        t.add(2, 4, 0);
        t.add(2, 4, 1);
        assert_eq!(t.total(1), 3);
        assert_eq!(t.total(2), 2);
        assert_eq!(t.total(7), 0);
        assert_eq!(t.get(2, 4), 1);
        assert_eq!(t.projective_dimension(), Some(2));
        assert_eq!(
            t.row(1).into_iter().collect::<Vec<_>>(),
            vec![(2, 2), (3, 1)]
        );
        let cut = t.truncated(1);
        assert_eq!(cut.total(2), 0);
        assert_eq!(cut.max_index(), Some(1));
    }
}
