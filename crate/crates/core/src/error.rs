use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("state is not physical: smallest eigenvalue {min_eigenvalue:e}")]
    Physicality { min_eigenvalue: f64 },

    #[error("matrix is not Hermitian (max |a_ij - conj(a_ji)| = {defect:e})")]
    NotHermitian { defect: f64 },

    #[error("trace is {trace}, expected 1")]
    Trace { trace: f64 },

    #[error("correlation tensor component ({i},{j}) = {value:e} is off-diagonal")]
    OutOfFamily { i: usize, j: usize, value: f64 },

    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    Convergence { sweeps: usize, off_norm: f64 },

    #[error("{what}: argument outside domain")]
    Domain { what: &'static str },

    #[error("quaternion norm {norm} deviates from 1")]
    Norm { norm: f64 },

    #[error("measurement branch {branch} has probability {probability:e}")]
    DegenerateBranch { branch: usize, probability: f64 },

    #[error("parameters are outside the {family} family")]
    Family { family: &'static str },

    #[error("decoherence rate {gamma} outside [0, 1]")]
    Range { gamma: f64 },
}
