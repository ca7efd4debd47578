//! Coinvariant algebras of finite matrix groups over exact fields.
//!
//! The crate computes Hilbert ideals `F[V]^G_+ F[V]` by Gröbner bases, reads
//! off the dimension, top degree and Hilbert series of the coinvariants
//! `F[V]_G`, polarizes to vector copies `V^m`, computes Davenport constants of
//! finite abelian groups, and runs a suite of numerical law checks tying these
//! quantities together.

pub mod davenport;
pub mod error;
pub mod groebner;
pub mod harness;
pub mod invring;
pub mod linalg;
pub mod polarize;
pub mod polyalg;
pub mod repaction;

pub use error::{Error, Result};
