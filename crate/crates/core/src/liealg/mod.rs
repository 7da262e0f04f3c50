//! Lie (super)algebra presentations: o(n,2) in several bases, its
//! contraction, sp(2) and osp(2s|2).

pub mod orthogonal;
pub mod presentation;
pub mod symplectic;

pub use orthogonal::{
    ambient_indices, compact_basis, conformal_basis, contract_inonu_wigner, o_n2, pair_index, poincare,
    BasisPresentation,
    CompactIndex, ConformalBasis,
};
pub use presentation::{AlgebraElement, BasisChange, Combo, JacobiViolation, Presentation};
pub use symplectic::{osp, sp2, SuperIndex};
