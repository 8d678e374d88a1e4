//! Numerical tolerances shared across modules.

/// Hermiticity gate for density matrices.
pub const HERMITIAN: f64 = 1e-12;

/// Unit-trace gate for density matrices.
pub const TRACE: f64 = 1e-12;

/// Eigenvalues in `[-PSD, 0)` are rounding noise and treated as zero;
/// anything below is unphysical.
pub const PSD: f64 = 1e-9;

/// Log arguments of the entropic function below this are treated as zero.
pub const ENTROPIC_CLAMP: f64 = 1e-12;

/// Off-diagonal correlation components larger than this leave the family.
pub const FAMILY: f64 = 1e-9;

/// Jacobi stopping threshold on the off-diagonal Frobenius norm.
pub const JACOBI_OFF_NORM: f64 = 1e-13;

/// Jacobi sweep budget.
pub const JACOBI_MAX_SWEEPS: usize = 100;

/// Branch probabilities below this drop out of conditional entropies.
pub const BRANCH_PROBABILITY: f64 = 1e-12;

/// Unit-norm gate on SU(2) quaternions.
pub const QUATERNION_NORM: f64 = 1e-9;

/// Objective values closer than this are ties for the optimizer.
pub const OBJECTIVE_TIE: f64 = 1e-14;

/// Equality tolerance used when matching parameters to analytic families.
pub const FAMILY_MATCH: f64 = 1e-12;
