//! Quantum discord for the two-qubit family
//!
//! ```text
//! ρ = ¼ (I⊗I + r·σ⊗I + I⊗s·σ + Σᵢ cᵢ σᵢ⊗σᵢ)
//! ```
//!
//! The crate computes mutual information, classical correlation and discord
//! two ways: numerically, by maximizing the measurement objective over the
//! unit sphere of von Neumann measurements on the second qubit, and through
//! closed-form expressions valid on sub-families of parameters. It also
//! models the symmetric phase-damping channel at both the matrix level
//! (Kraus operators) and the parameter level.
//!
//! All entropies are in bits. The crate is `no_std` with `alloc` when the
//! default `std` feature is disabled.

#![cfg_attr(not(feature = "std"), no_std)]
#![forbid(unsafe_code)]
// `!(x < y)` is how NaN is rejected throughout
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::needless_range_loop)]

extern crate alloc;

pub mod channels;
pub mod density;
pub mod discord;
mod error;
mod math;
pub mod measurement;
pub mod sphere;
pub mod tol;
mod vector;

pub use error::{Error, Result};
pub use vector::Vec3;

pub use channels::{KrausPair, PhaseDamping};
pub use density::{BlochParams, DensityMatrix4, Qubit2, Side, Spectrum};
pub use discord::{DiscordReport, Method};
pub use measurement::{Ensemble, MeasurementAxis, UnitQuaternion};
pub use sphere::{OptResult, SphereOptConfig};

/// Complex scalar used throughout.
pub type C64 = num_complex::Complex64;
