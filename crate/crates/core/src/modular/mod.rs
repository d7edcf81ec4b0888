//! Numeric layer at `z = 1`: root-of-unity evaluation, the S/T/C matrices,
//! idempotents and the residue formula for fusion coefficients.

mod data;
mod matrix;
mod phase;
mod reports;
mod verlinde;

pub use data::{c_matrix, dual_weight, eval_m, eval_m_at, s_entry, s_matrix, stabilizer, t_matrix, t_phase};
pub use matrix::{format_float, ComplexMatrix};
pub use phase::RationalPhase;
pub use reports::{
    evaluate, idempotent, idempotent_check, modular_relations_report, IdempotentReport, ModularReport, RelationReport,
};
pub use verlinde::{verlinde_n, Verlinde, VerlindeReading, VerlindeValue, INTEGRALITY_TOL, SMALL_ENTRY};
