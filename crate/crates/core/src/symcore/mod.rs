//! Partitions, integer tuples and symmetric polynomials in the monomial
//! basis, with the classical (non-cylindric) expansion coefficients.

mod coeffs;
mod combinat;
mod expansion;
mod partition;
mod tuple;

pub use coeffs::{chi_of_weight, chi_skew, chi_skew_by_count, f_coefficient, h_expansion};
pub use combinat::{
    binomial, distinct_permutations, distinct_rearrangements, factorial, l_matrix_count, multinomial, stabilizer_order,
};
pub use expansion::MExpansion;
pub use partition::{conjugate, Partition};
pub use tuple::IntTuple;
