//! Scalar Verma modules of o(n,2), their Gram forms, the singleton quotient
//! and the spectra read off from it.

pub mod gram;
pub mod module;
pub mod quotient;
pub mod spectra;

pub use gram::{gram_matrix, gram_matrix_at, null_vectors, shapovalov, GramMatrix};
pub use module::{level_basis, monomial_label, ModuleVector, RaisingMonomial, VermaModule};
pub use quotient::{quotient_dim, SingletonQuotient, TruncatedOperator};
pub use spectra::{branching_check, majorana_spectrum, BranchingRow};
