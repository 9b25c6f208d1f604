//! Exact multiplier ideals of monomial ideals.
//!
//! The crate computes Newton polyhedra, multiplier ideals `J(a^c)` and mixed
//! ideals `J(a^c·b^e)` through the interior of the scaled Newton polyhedron,
//! log-canonical thresholds, jumping numbers, symbolic powers of squarefree
//! ideals and their asymptotic multiplier ideals. The [`theorems`] module
//! checks the standard containments (Skoda, subadditivity, restriction and
//! friends) on concrete instances and reports a witness on failure.
//!
//! All arithmetic is exact; rationals are arbitrary-precision fractions.

pub mod error;
pub mod howald;
pub mod ideal;
pub mod limits;
pub mod newton;
pub mod random;
pub mod rational;
pub mod resolution;
pub mod symbolic;
pub mod theorems;

pub use error::{Error, Result};

pub use howald::{
    entry_threshold, jumping_numbers, lct, mixed_multiplier_ideal, multiplier_ideal, Jump, JumpingSequence,
};
pub use ideal::{ExponentVector, MonomialIdeal};
pub use limits::Limits;
pub use newton::{newton_polyhedron, scale_combination, Facet, NewtonPolyhedron, Position};
pub use rational::Rational;
pub use resolution::{
    candidate_jumping_numbers, classify, lct_from_resolution, snc_multiplier_coefficients, Classification,
    ResolutionDatum, ResolutionEntry, SncDivisor,
};
pub use symbolic::{analyze, asymptotic_multiplier_ideal, symbolic_polyhedron, symbolic_power, SquarefreeIdeal};
pub use theorems::{CheckReport, Verdict, Witness};
