#![no_std]

//! Exact enumerative machinery for signed permutations, snakes and weighted
//! bicolored Motzkin paths.
//!
//! Everything here is a pure function over immutable values. Polynomials are
//! sparse Laurent polynomials in `y`, `t`, `q` with arbitrary-precision
//! integer coefficients, so every identity is checked by exact equality.
//!
//! * [`algebra`]: polynomial arithmetic, the `q`-derivative operators and
//!   continued-fraction series expansion.
//! * [`permstats`]: permutation families and their statistics.
//! * [`eulerians`]: Euler and Springer numbers, `E_n(q)`, `Q_n(t,q)`, `R_n(t,q)`.
//! * [`motzkin`]: weighting schemes and weighted path generation.
//! * [`bijections`]: the restructuring map and the two sign-reversing involutions.
//! * [`snakes`]: snake statistics and the snake/path bijections.

extern crate alloc;

pub mod algebra;
pub mod bijections;
mod error;
pub mod eulerians;
pub mod motzkin;
pub mod permstats;
pub mod snakes;

pub use algebra::{Monomial, Polynomial, Var};
pub use error::Error;
pub use motzkin::{PathShape, Scheme, Step, WeightedPath};
pub use permstats::{Family, SignScheme, SignedPermutation, StatRecord};
pub use snakes::{Snake, Variant};

pub type Result<T, E = Error> = core::result::Result<T, E>;
