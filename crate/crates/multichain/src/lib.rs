//! Exact chain/cochain calculus for multisimplicial sets.
//!
//! A k-fold multisimplicial set has face and degeneracy operators in each of k
//! directions.  This crate implements, with exact arithmetic over `Z`, `Q`, or
//! `Z/p`:
//!
//! * the signed boundary operator and its normalized quotient complex,
//!   including the explicit normalization homotopies ([`complexes`]);
//! * Eilenberg-Zilber and Alexander-Whitney maps, the multisimplicial cup
//!   product, and the commuting square relating the two cup products
//!   ([`ezaw`]);
//! * the surjection complexes `Sur(k)` and Barratt-Eccles complexes `W(k)`
//!   with their complexity filtrations, counting polynomials, and the
//!   table-reduction comparison map ([`surjection`]);
//! * homology and cohomology with Betti numbers and integer torsion via a
//!   big-integer Smith normal form ([`exactlin`]);
//! * cohomology rings, the induced-ring-isomorphism verifier for the
//!   Eilenberg-Zilber dual, and triple Massey products ([`cohomtools`]).
//!
//! The `examples/` directory has one runnable example per capability; start
//! with `cargo run --example ez_aw_square`.  The `multichain` binary exposes
//! the same operations as subcommands.

pub mod cli;
pub mod cohomtools;
pub mod complexes;
pub mod error;
pub mod exactlin;
pub mod ezaw;
pub mod msets;
pub mod surjection;

pub use error::{Error, Result};
pub use exactlin::{Coefficient, RingSpec};
pub use msets::{MSet, MultiIndex};
