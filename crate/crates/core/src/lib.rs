//! Join-meet ideals of crystal lattices.
//!
//! Builds the lattice, its join-meet binomial ideal, a reduced Gröbner basis
//! under a compatible order, the initial monomial ideal, and its graded Betti
//! numbers by two independent routes.

pub mod algebra;
pub mod ideal;
pub mod lattice;
pub mod report;
pub mod resolution;
pub mod syzygy;
