//! Join-meet ideals of finite lattices.
//!
//! The crate is organised bottom-up: [`lattice`] holds finite lattices and
//! their combinatorics, [`poly`] exact polynomial arithmetic, [`groebner`]
//! Buchberger's algorithm and the ideal operations built on it, and
//! [`workflows`] the computations on join-meet ideals (radicality,
//! minimal primes, order scans and the `L_k` suite).

pub mod error;
pub mod groebner;
pub mod lattice;
pub mod poly;
pub mod snf;
pub mod workflows;

pub use error::{Error, Result};
pub use groebner::{Ideal, MonomialIdeal, ReducedGB};
pub use lattice::{build_fixture, build_lattice, AdmissibleSet, Fixture, Lattice};
pub use poly::{Coefficient, Field, Monomial, MonomialOrder, OrderKind, Polynomial, Ring};
