//! Exact geometry and face-accounting for the four Platonic elements.
//!
//! Everything here is pure and allocation-only (`alloc`, no `std`):
//!
//! - [`exactnum`]: exact arithmetic in ℚ(√2, √3) with decidable sign, plus
//!   certified rational enclosures for values outside the field.
//! - [`proportion`]: single and double geometric means, chain inversion and
//!   cube duplication.
//! - [`tiling`]: basic right triangles, square and equilateral dissections,
//!   dihedral symmetry, and the size-scaling compositions.
//! - [`elements`]: element/polyhedron data and the face-conservation
//!   reaction algebra.
//! - [`simulate`]: seeded multiset dynamics with a conservation ledger.
#![no_std]

extern crate alloc;

pub mod elements;
mod error;
pub mod exactnum;
pub mod proportion;
pub mod simulate;
pub mod tiling;

pub use error::{Error, Result};
pub use exactnum::{Enclosure, FieldValue, Interval, Polynomial, Rational};
