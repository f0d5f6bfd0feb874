//! Exact enumeration and cross-checking toolkit for space-time cones of
//! random walks on finitely generated groups.

pub mod bratteli;
pub mod cli;
pub mod error;
pub mod free_realization;
pub mod group_core;
pub mod growth;
pub mod heisenberg;
pub mod partitions;
pub mod polytope;
pub mod szekeres;
pub mod tolerances;
pub mod traces;
pub mod verify;

pub use error::{Error, Result};
pub use group_core::{D4Symmetry, GroupDescriptor, GroupElement, HeisTriple, Word};

/// Exact rational scalar used by traces and polytopes.
pub type Rational = num_rational::BigRational;
/// Floating scalar used by the asymptotic code.
pub type Real = f64;
/// Lattice polytope over big rationals.
pub type Polytope = polytope::LatticePolytope<Rational>;
/// Lattice polytope over machine-sized rationals.
pub type SmallPolytope = polytope::LatticePolytope<num_rational::Rational64>;
