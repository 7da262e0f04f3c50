//! Exact arithmetic: Gaussian rationals, polynomials, matrices.

pub mod matrix;
pub mod poly;
pub mod roots;
pub mod scalar;
pub mod sparse;
pub mod unipoly;

pub use matrix::ExactMatrix;
pub use poly::{Monomial, Parity, SuperPolynomial, VariableTable};
pub use roots::rational_roots;
pub use scalar::{fmt_rational, rat, serialize_rational, GaussianRational, Ring, GR};
pub use sparse::{Echelon, SparseVec};
pub use unipoly::UniPoly;
