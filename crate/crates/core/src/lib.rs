//! Exact singularity invariants of monomial ideals.
//!
//! The crate computes Newton polyhedra, monomial multiplier ideals and their
//! jumping coefficients, the lattice invariants `c_σ` and `e_σ` of compact
//! facets, and the spectrum polynomials of the components of the normal cone
//! over the origin. Every closed-form quantity has an independent brute-force
//! counterpart in [`oracle`].

pub mod corpus;
pub mod error;
mod grid;
pub mod homogeneous;
pub mod io;
pub mod lattice;
mod linalg;
pub mod multiplier;
pub mod oracle;
pub mod polyhedron;
pub mod rational;
pub mod spectrum;
pub mod verify;

pub use error::{Error, Result};
pub use polyhedron::{
    minimalize, newton_polyhedron, ExponentVector, FaceRecord, LinearForm, MonomialIdeal,
    NewtonPolyhedron,
};
pub use rational::Rational;
