//! Dense complex matrices, the Cartesian decomposition, a Hermitian
//! eigensolver and the operator norms the enclosure is built from.

mod eigen;
mod matrix;
mod norm;

pub use eigen::{hermitian_eigen, hermitian_eigenvalues, HermitianEigen, MAX_SWEEPS, OFF_DIAGONAL_RTOL};
pub use matrix::{cartesian_split, quadratic_form, vector_norm, CartesianPair, ComplexMatrix, HERMITIAN_RTOL};
pub use norm::{frobenius, norm, NormKind};

/// Complex entry type used throughout.
pub type ComplexScalar = num_complex::Complex64;
