//! Cylindric reverse plane partitions, cylindric complete symmetric functions
//! and the fusion rings 𝒱_k(n) they generate.
//!
//! The crate is layered bottom-up:
//!
//! - [`symcore`]: partitions, monomial-basis symmetric polynomials in `k`
//!   variables and the classical expansion coefficients (`f`, `L`, `χ`).
//! - [`affine`]: the extended affine symmetric group acting on `k`-periodic
//!   loop functions at level `n`, the alcove 𝒜_{k,n} and cylindric shapes.
//! - [`rppgen`]: flat and cylindric reverse plane partitions as chains of
//!   shapes, and the weighted sums they define.
//! - [`fusion`]: fusion coefficients, the Verlinde algebra over Laurent
//!   polynomials in `z`, and its Frobenius trace.
//! - [`modular`]: root-of-unity evaluation, the S/T/C matrices, idempotents
//!   and the Verlinde formula, in floating point.
//! - [`checks`]: the end-to-end verification grid shared by the CLI
//!   `selftest` and the acceptance tests.
//!
//! Exact quantities use [`Int`] and [`Rational`]. The polynomial containers
//! are generic over a [`Coefficient`] ring and the numeric layer over a
//! [`Real`] float type; the aliases below fix the common instantiations.

pub mod affine;
pub mod checks;
mod error;
pub mod fusion;
pub mod linalg;
pub mod modular;
pub mod rppgen;
mod scalar;
pub mod symcore;

pub use error::{Error, Result};
pub use scalar::{Coefficient, Real};

pub use affine::{AffinePermutation, CylindricShape, LoopFunction};
pub use fusion::{FusionAlgebra, FusionElement, Laurent};
pub use modular::{ComplexMatrix, RationalPhase};
pub use rppgen::{CylChain, CylindricRpp, RppChain};
pub use symcore::{IntTuple, MExpansion, Partition};

/// Arbitrary-precision integer used for every combinatorial count.
pub type Int = num_bigint::BigInt;
/// Exact rationals (Gram matrices, `z` specialisations).
pub type Rational = num_rational::BigRational;

/// Symmetric polynomial with integer coefficients in the monomial basis.
pub type MExpansionZ = MExpansion<Int>;
/// Laurent polynomial in `z` with integer coefficients.
pub type LaurentZ = Laurent<Int>;
/// Element of 𝒱_k(n) with integer Laurent coefficients.
pub type FusionElementZ = FusionElement<Int>;
/// Double-precision complex matrix indexed by the alcove.
pub type ComplexMatrix64 = ComplexMatrix<f64>;
/// Single-precision variant, mostly useful for quick sanity runs.
pub type ComplexMatrix32 = ComplexMatrix<f32>;
