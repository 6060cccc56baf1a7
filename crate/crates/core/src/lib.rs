//! Exact computations for higher dual varieties of projective toric embeddings.
//!
//! The crate is organised bottom-up:
//!
//! * [`lattice_geom`]: hulls, face lattices, lattice volumes, mixed volumes and
//!   regular subdivisions, all in exact arithmetic.
//! * [`polytope_invariants`]: the numbers `(Vol, F, E, V)`, adjoint data,
//!   smoothness, `k`-regularity and the exceptional families.
//! * [`jet_apparatus`]: the jet matrices `A^(k)`, their rank and kernel, and
//!   minimal-support rowspan vectors.
//! * [`dual_degrees`]: degree and defectivity formulas for higher duals.
//! * [`tropical`]: tropical forms, Euler derivatives, membership certificates
//!   and plane tropical curves.
//! * [`cli`]: the `torjet` command-line front end.

pub mod arith;
pub mod lattice_geom;
pub mod polytope_invariants;
pub mod poly;
pub mod jet_apparatus;
pub mod dual_degrees;
pub mod tropical;
pub mod cli;
