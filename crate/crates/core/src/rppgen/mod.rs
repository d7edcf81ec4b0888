//! Reverse plane partitions as chains of shapes, flat and cylindric, and
//! the weighted sums `h_{λ/μ}` and `h_{λ/d/μ}` they define.

mod cylindric;
mod flat;

pub use cylindric::{
    chi_cyl, chi_cyl_by_count, cyl_h_coefficient, cyl_h_expansion, enumerate_cyl_chains, CylChain, CylindricRpp,
};
pub use flat::{enumerate_rpp, h_skew_expansion, rpp_weight_factor, rpp_weighted_count, RppChain};
