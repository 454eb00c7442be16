//! Exact computational algebra for deciding whether a polynomial ideal over
//! the rationals can be turned into a binomial (and, if prime, toric) ideal
//! by a linear or affine-linear change of coordinates.
//!
//! The pipeline works entirely in exact arithmetic: arbitrary-precision
//! rationals, extended on demand by algebraic numbers represented modulo
//! squarefree defining polynomials that split lazily whenever a zero divisor
//! shows up. On top of that sit dense exact linear algebra, multivariate
//! polynomials with Gröbner bases, the Lie algebra of the stabilizer group of
//! an ideal, and the toric decision procedure itself.
//!
//! The crate is `no_std` (with `alloc`); all IO, file formats and the command
//! line live in the companion `toric-cli` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod eigen;
pub mod gaussian;
pub mod groebner;
pub mod lie;
pub mod matrix;
pub mod poly;
pub mod rng;
pub mod scalar;
pub mod snf;
pub mod toric;
pub mod tower;
pub mod upoly;

pub use scalar::{Rational, Scalar};
pub use tower::{NumberTower, SplitEvent, TowerElem};
