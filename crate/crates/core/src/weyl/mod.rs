//! Weyl algebra symbols, the sp(2) ↔ o(n,2) Howe pair and the higher-spin
//! algebra as a centralizer quotient.

pub mod centralizer;
pub mod howe;
pub mod phase;

pub use centralizer::{centralizer_mod_ideal, l_polynomial_span_check, CentralizerDims, LSpanSummary};
pub use howe::{commutant, constraint_algebra_check, howe_check, quadratic_monomials, u_generators, HoweSummary};
pub use phase::{AmbientSpace, PhaseSpace, PhaseSymbol};
