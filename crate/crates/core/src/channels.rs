//! Symmetric phase damping on both qubits.
//!
//! Each qubit sees the Kraus pair `K₁ = |0⟩⟨0| + √(1−γ)|1⟩⟨1|`,
//! `K₂ = √γ|1⟩⟨1|`. On the Bloch family this scales `r₁, r₂, s₁, s₂` by
//! `√(1−γ)` and `c₁, c₂` by `1−γ`, leaving the third components alone, so
//! the damped state stays in the family.

use alloc::vec::Vec;

use crate::density::{build_state, entropic_h, kron, BlochParams, DensityMatrix4, Mat2, Mat4};
use crate::discord::{mutual_information, theorem3_alpha, theorem3_beta, DiscordReport, Method};
use crate::measurement::damped_g_objective;
use crate::sphere::{maximize_on_sphere, SphereOptConfig};
use crate::{math, Error, Result, Vec3, C64};

/// Phase-damping channel with decoherence rate `γ ∈ [0, 1]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PhaseDamping {
    gamma: f64,
}

impl PhaseDamping {
    pub fn new(gamma: f64) -> Result<Self> {
        if (0.0..=1.0).contains(&gamma) {
            Ok(PhaseDamping { gamma })
        } else {
            Err(Error::Range { gamma })
        }
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct KrausPair {
    pub k1: Mat2,
    pub k2: Mat2,
}

impl KrausPair {
    /// `max |K₁†K₁ + K₂†K₂ − I|`.
    pub fn completeness_defect(&self) -> f64 {
        let sum = self.k1.adjoint() * self.k1 + self.k2.adjoint() * self.k2;
        sum.max_abs_diff(&Mat2::identity())
    }
}

pub fn kraus_pair(ch: &PhaseDamping) -> KrausPair {
    let g = ch.gamma;
    KrausPair {
        k1: Mat2::from_real_diagonal([1.0, math::sqrt(1.0 - g)]),
        k2: Mat2::from_real_diagonal([0.0, math::sqrt(g)]),
    }
}

/// `ρ̃ = Σᵢⱼ (Kᵢ⊗Kⱼ) ρ (Kᵢ⊗Kⱼ)†`.
pub fn apply_kraus(rho: &DensityMatrix4, ch: &PhaseDamping) -> Result<DensityMatrix4> {
    let pair = kraus_pair(ch);
    let ops = [pair.k1, pair.k2];
    let mut out = Mat4::zero();
    for a in &ops {
        for b in &ops {
            let k: Mat4 = kron(a, b);
            out = out + rho.matrix().conjugate_by(&k);
        }
    }
    // the diagonal is untouched by phase damping; drop rounding in imaginary parts
    for i in 0..4 {
        out.0[i][i] = C64::new(out.0[i][i].re, 0.0);
    }
    DensityMatrix4::new(out)
}

/// Parameter-level image of the channel.
pub fn damp_bloch(p: &BlochParams, ch: &PhaseDamping) -> BlochParams {
    let keep = 1.0 - ch.gamma;
    let root = math::sqrt(keep);
    let planar = |v: Vec3, k: f64| Vec3::new(v[0] * k, v[1] * k, v[2]);
    BlochParams { r: planar(p.r, root), s: planar(p.s, root), c: planar(p.c, keep) }
}

/// Discord of the damped state, maximizing the damped objective `G̃` in
/// the undamped parameters: `Q(ρ̃) = 2 − H₀(|s̃|) + Σ λ̃ log₂ λ̃ − max G̃`.
pub fn damped_discord(p: &BlochParams, ch: &PhaseDamping, cfg: &SphereOptConfig) -> Result<DiscordReport> {
    build_state(p)?;
    let damped = damp_bloch(p, ch);
    let rho = build_state(&damped)?;
    let mutual_info = mutual_information(&damped)?;
    let best = maximize_on_sphere(|z| damped_g_objective(p, ch.gamma, z), cfg)?;
    let classical_corr = best.value - entropic_h(0.0, damped.r.norm())?;
    Ok(DiscordReport {
        mutual_info,
        classical_corr,
        discord: mutual_info - classical_corr,
        argmax_axis: best.argmax,
        spectrum: rho.spectrum().values,
        method: Method::Numeric,
    })
}

fn check_werner(c: f64, gamma: f64) -> Result<()> {
    PhaseDamping::new(gamma)?;
    if (-1.0..=1.0 / 3.0).contains(&c) {
        Ok(())
    } else {
        Err(Error::Domain { what: "Werner family" })
    }
}

/// Discord lost by a Werner state (`c₁ = c₂ = c₃ = c`) under damping,
/// `T(c, γ) = Q(ρ) − Q(ρ̃)`:
///
/// ```text
/// T = ¼[(1+c)log₂(1+c) + (1−3c)log₂(1−3c)
///       − (1−3c+2cγ)log₂(1−3c+2cγ) − (1+c−2cγ)log₂(1+c−2cγ)]
/// ```
pub fn werner_damped_gap(c: f64, gamma: f64) -> Result<f64> {
    check_werner(c, gamma)?;
    let f = |x: f64| math::xlog2x(x.max(0.0));
    let cg = 2.0 * c * gamma;
    Ok(0.25 * ((f(1.0 + c) - f(1.0 + c - cg)) + (f(1.0 - 3.0 * c) - f(1.0 - 3.0 * c + cg))))
}

/// `∂T/∂γ = (c/2) log₂((1+c−2cγ)/(1−3c+2cγ))`, nonnegative on the domain.
pub fn werner_gap_slope(c: f64, gamma: f64) -> Result<f64> {
    check_werner(c, gamma)?;
    if c == 0.0 {
        return Ok(0.0);
    }
    let cg = 2.0 * c * gamma;
    Ok(0.5 * c * math::log2((1.0 + c - cg) / (1.0 - 3.0 * c + cg)))
}

/// `Q(ρ) − Q(ρ̃)` for `s = 0`, `c₃ = 0`, `c₁ = c₂ = c`:
///
/// ```text
/// ½{H₀(α₊) + H₀(α₋) − H₀(β₊) − H₀(β₋) − [H₀(μ₊) + H₀(μ₋) − H₀(σ₊) − H₀(σ₋)]}
/// μ± = √(2c²(1−γ)² + (r₁²+r₂²)(1−γ) + r₃² ± 2ς)
/// ς  = √(c⁴(1−γ)⁴ + c²(r₁²+r₂²)(1−γ)³)
/// σ± = √((1−γ)(√(r₁²+r₂²) ± √(1−γ)c)² + r₃²)
/// ```
pub fn theorem3_damped_gap(r: &Vec3, c: f64, gamma: f64) -> Result<f64> {
    let ch = PhaseDamping::new(gamma)?;
    build_state(&BlochParams::new(*r, Vec3::ZERO, [c, c, 0.0]))?;
    let h = |x: f64| entropic_h(0.0, x.min(1.0));

    let [ap, am] = theorem3_alpha(r, c);
    let [bp, bm] = theorem3_beta(r, c);

    let q = 1.0 - ch.gamma;
    let planar_sq = r[0] * r[0] + r[1] * r[1];
    let planar = math::sqrt(planar_sq);
    let varsigma = math::sqrt(c * c * c * c * q * q * q * q + c * c * planar_sq * q * q * q);
    let base = 2.0 * c * c * q * q + planar_sq * q + r[2] * r[2];
    let mu = [math::sqrt(base + 2.0 * varsigma), math::sqrt((base - 2.0 * varsigma).max(0.0))];
    let sigma = |sign: f64| {
        let t = planar + sign * math::sqrt(q) * c;
        math::sqrt(q * t * t + r[2] * r[2])
    };

    let undamped = h(ap)? + h(am)? - h(bp)? - h(bm)?;
    let damped = h(mu[0])? + h(mu[1])? - h(sigma(1.0))? - h(sigma(-1.0))?;
    Ok(0.5 * (undamped - damped))
}

/// One point of a decoherence sweep.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SweepRow {
    pub gamma: f64,
    /// `Q(ρ̃)` at this rate.
    pub discord: f64,
    /// `Q(ρ) − Q(ρ̃)`.
    pub gap: f64,
}

/// Checks a rate grid: nonempty, inside `[0, 1]`, strictly increasing.
pub fn validate_grid(grid: &[f64]) -> Result<()> {
    if grid.is_empty() {
        return Err(Error::Domain { what: "empty decoherence grid" });
    }
    for &g in grid {
        PhaseDamping::new(g)?;
    }
    if grid.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(Error::Domain { what: "decoherence grid must be strictly increasing" });
    }
    Ok(())
}

/// Damped discord and discord gap at each rate of `grid`.
pub fn gamma_sweep(p: &BlochParams, grid: &[f64], cfg: &SphereOptConfig) -> Result<Vec<SweepRow>> {
    validate_grid(grid)?;
    let reference = damped_discord(p, &PhaseDamping::new(0.0)?, cfg)?.discord;
    grid.iter()
        .map(|&gamma| {
            let q = damped_discord(p, &PhaseDamping::new(gamma)?, cfg)?.discord;
            Ok(SweepRow { gamma, discord: q, gap: reference - q })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kraus_pairs() {
        let p = kraus_pair(&PhaseDamping::new(0.0).unwrap());
        assert_eq!(p.k1, Mat2::identity());
        assert_eq!(p.k2, Mat2::zero());
        let p = kraus_pair(&PhaseDamping::new(1.0).unwrap());
        assert_eq!(p.k1, Mat2::from_real_diagonal([1.0, 0.0]));
        assert_eq!(p.k2, Mat2::from_real_diagonal([0.0, 1.0]));
        let p = kraus_pair(&PhaseDamping::new(0.36).unwrap());
        assert_eq!(p.k1, Mat2::from_real_diagonal([1.0, 0.8]));
        assert_eq!(p.k2, Mat2::from_real_diagonal([0.0, 0.6]));
        assert!(p.completeness_defect() < 1e-14);
        assert!(matches!(PhaseDamping::new(-0.1), Err(Error::Range { .. })));
        assert!(matches!(PhaseDamping::new(f64::NAN), Err(Error::Range { .. })));
    }

    #[test]
    fn identity_channel() {
        let p = BlochParams::new([0.1, 0.2, 0.3], [0.0, -0.1, 0.2], [0.2, 0.1, -0.3]);
        let rho = build_state(&p).unwrap();
        let out = apply_kraus(&rho, &PhaseDamping::new(0.0).unwrap()).unwrap();
        assert_eq!(out.matrix(), rho.matrix());
        assert_eq!(damp_bloch(&p, &PhaseDamping::new(0.0).unwrap()), p);
    }

    #[test]
    fn diagonal_states_are_fixed() {
        let p = BlochParams::new([0.0, 0.0, 0.3], [0.0, 0.0, -0.2], [0.0, 0.0, 0.1]);
        let rho = build_state(&p).unwrap();
        for g in [0.2, 0.5, 1.0] {
            let out = apply_kraus(&rho, &PhaseDamping::new(g).unwrap()).unwrap();
            assert!(out.matrix().max_abs_diff(rho.matrix()) < 1e-16);
        }
    }

    #[test]
    fn bloch_damping_examples() {
        let p = BlochParams::new([0.2, 0.4, 0.3], [0.1, -0.2, 0.2], [-0.2, -0.3, -0.4]);
        let full = damp_bloch(&p, &PhaseDamping::new(1.0).unwrap());
        assert_eq!(full, BlochParams::new([0.0, 0.0, 0.3], [0.0, 0.0, 0.2], [0.0, 0.0, -0.4]));
        let half = damp_bloch(&p, &PhaseDamping::new(0.5).unwrap());
        let k = 0.5f64.sqrt();
        let expect = BlochParams::new([0.2 * k, 0.4 * k, 0.3], [0.1 * k, -0.2 * k, 0.2], [-0.1, -0.15, -0.4]);
        assert!(half.max_abs_diff(&expect) < 1e-16);
    }

    #[test]
    fn werner_gap_edges() {
        for c in [-1.0, -0.3, 0.0, 0.2, 1.0 / 3.0] {
            assert_eq!(werner_damped_gap(c, 0.0).unwrap(), 0.0);
        }
        for g in [0.0, 0.4, 1.0] {
            assert_eq!(werner_damped_gap(0.0, g).unwrap(), 0.0);
        }
        assert!(werner_damped_gap(0.4, 0.5).is_err());
        assert!(werner_damped_gap(0.2, 1.5).is_err());
        assert!(werner_gap_slope(0.25, 0.5).unwrap() > 0.0);
        assert!(werner_gap_slope(-0.5, 0.5).unwrap() > 0.0);
    }

    #[test]
    fn theorem3_gap_vanishes_without_damping() {
        let g = theorem3_damped_gap(&Vec3::new(0.1, 0.2, 0.0), 0.3, 0.0).unwrap();
        assert!(g.abs() < 1e-15);
        let g = theorem3_damped_gap(&Vec3::new(0.0, 0.0, 0.4), 0.2, 0.0).unwrap();
        assert!(g.abs() < 1e-15);
    }

    #[test]
    fn grid_validation() {
        assert!(validate_grid(&[0.0, 0.5, 1.0]).is_ok());
        assert!(validate_grid(&[]).is_err());
        assert!(validate_grid(&[0.5, 0.5]).is_err());
        assert!(matches!(validate_grid(&[0.0, 1.2]), Err(Error::Range { .. })));
    }

    #[test]
    fn single_point_sweep() {
        let p = BlochParams::new([0.1, 0.0, 0.0], [0.0; 3], [0.2; 3]);
        let rows = gamma_sweep(&p, &[0.0], &SphereOptConfig::for_discord()).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].gap, 0.0);
    }
}
