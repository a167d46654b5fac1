//! Exact computations with positive Dehn twist factorizations in planar
//! mapping class groups.
//!
//! - [`mcg`]: free-group model of `Map(D_n, ∂D_n)`, curves and twists.
//! - [`factorization`]: twist sequences, multiplicities, Hurwitz moves.
//! - [`enumerator`]: all multisets of enclosed hole sets matching a
//!   multiplicity profile.
//! - [`geography`]: Euler characteristic, signature and `H_1` of the
//!   associated Lefschetz fillings.
//! - [`plumbing`]: sphere plumbings and their open books.

pub mod enumerator;
pub mod factorization;
pub mod geography;
pub mod linalg;
pub mod mcg;
pub mod plumbing;
