//! Exact model of `Map(D_n, ∂D_n)`, the mapping class group of the disk with
//! `n` holes.
//!
//! `π1(D_n)` is free on loops `x_1, ..., x_n` around the holes, ordered left to
//! right, with basepoint on the outer boundary; the outer boundary reads
//! `δ = x_1 x_2 ... x_n`. A mapping class is stored as its action on `π1`
//! plus the signed count of twists around each hole, which the action cannot
//! see. Curves are convex block curves moved by half-twist braids.

mod automorphism;
mod braid;
mod curve;
mod error;
mod holes;
pub mod lantern;
mod mapping_class;
mod word;

pub use automorphism::FreeAutomorphism;
pub use braid::{Braid, HalfTwist};
pub use curve::Curve;
pub use error::McgError;
pub use holes::{HoleSet, MAX_HOLES};
pub use mapping_class::{product_of, MappingClass};
pub use word::{Letter, Word};
