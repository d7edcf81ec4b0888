//! The extended affine symmetric group `Ŝ_k` realised as bijections of ℤ,
//! its level-`n` right action on loop functions, the alcove `𝒜_{k,n}` and
//! cylindric shapes.

mod loops;
mod perm;
mod shape;

pub use loops::{alcove, LoopFunction};
pub use perm::AffinePermutation;
pub use shape::{cylindric_contains, CylindricShape};
