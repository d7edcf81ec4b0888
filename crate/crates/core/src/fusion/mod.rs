//! Fusion coefficients and the generalised Verlinde algebra 𝒱_k(n).

mod algebra;
mod coeff;
mod export;
mod laurent;

pub use algebra::{
    epsilon, fusion_product, gram_matrix, h_action_check, FusionAlgebra, FusionElement, StructureConstant,
};
pub use coeff::{
    alpha_bound, degree_shift, n_coefficient, n_coefficient_with_bound, n_reduced, reduce_weight, translated_windows,
    Reduction,
};
pub use export::{FusionEntry, FusionTable};
pub use laurent::Laurent;
