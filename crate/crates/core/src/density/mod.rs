//! Two-qubit density matrices for the Bloch-parametrized family, their
//! spectra, marginals and entropies.
//!
//! Basis order is `|00⟩, |01⟩, |10⟩, |11⟩` with the first factor belonging
//! to party a. Pauli matrices are the standard `σ₁, σ₂, σ₃`.

mod eigen;
mod entropy;
mod matrix;
mod state;

pub use eigen::{hermitian_eigen, jacobi_eigen, Spectrum};
pub use entropy::{entropic_h, entropy_from_eigenvalues, von_neumann_entropy, VonNeumann};
pub use matrix::{kron, pauli, Mat2, Mat4};
pub use state::{build_state, extract_bloch, partial_trace, BlochParams, DensityMatrix4, Qubit2, Side};
