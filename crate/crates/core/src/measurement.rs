//! Von Neumann measurements on party b and the measurement objectives.
//!
//! A rank-1 projective measurement `{B₀, B₁}` is fixed by the Bloch vector
//! `z` of `B₀ = V|0⟩⟨0|V†`, with `V = tI + i Σ yᵢσᵢ ∈ SU(2)`. Measuring b
//! leaves party a in
//!
//! ```text
//! p_k = (1 ± s·z)/2,   ρ_k = [(1 ± s·z) I + (r ± c⊙z)·σ] / (2(1 ± s·z))
//! ```
//!
//! where `c⊙z` is the component-wise product. The objective
//! `G(z) = 1 − Σ p_k S(ρ_k)` is what the classical correlation maximizes.

use crate::density::{entropic_h, kron, pauli, BlochParams, DensityMatrix4, Mat2, Mat4, Qubit2, VonNeumann};
use crate::{math, tol, Error, Result, Vec3, C64};

/// Unit quaternion `(t, y₁, y₂, y₃)` standing for `V = tI + i Σ yᵢσᵢ`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct UnitQuaternion {
    t: f64,
    y: [f64; 3],
}

impl UnitQuaternion {
    /// Accepts norms within `1e-9` of one and renormalizes.
    pub fn new(t: f64, y1: f64, y2: f64, y3: f64) -> Result<Self> {
        let norm = math::sqrt(t * t + y1 * y1 + y2 * y2 + y3 * y3);
        if !(math::abs(norm - 1.0) <= tol::QUATERNION_NORM) {
            return Err(Error::Norm { norm });
        }
        Ok(UnitQuaternion { t: t / norm, y: [y1 / norm, y2 / norm, y3 / norm] })
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn y(&self) -> [f64; 3] {
        self.y
    }

    /// The SU(2) matrix `tI + i Σ yᵢσᵢ`.
    pub fn su2(&self) -> Mat2 {
        let mut v = Mat2::identity().scale(self.t);
        for (axis, &y) in self.y.iter().enumerate() {
            let term = pauli(axis).scale(y);
            for i in 0..2 {
                for j in 0..2 {
                    v.0[i][j] += C64::new(0.0, 1.0) * term.0[i][j];
                }
            }
        }
        v
    }
}

/// Unit vector on the measurement sphere.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MeasurementAxis(Vec3);

impl MeasurementAxis {
    pub const E3: MeasurementAxis = MeasurementAxis(Vec3::E3);

    /// Accepts vectors within `1e-9` of unit length and renormalizes.
    pub fn new(v: Vec3) -> Result<Self> {
        let norm = v.norm();
        if !(math::abs(norm - 1.0) <= tol::QUATERNION_NORM) {
            return Err(Error::Norm { norm });
        }
        Ok(MeasurementAxis(v * (1.0 / norm)))
    }

    /// Normalizes any nonzero finite vector.
    pub fn normalize(v: Vec3) -> Option<Self> {
        let norm = v.norm();
        (norm > 0.0 && norm.is_finite()).then(|| MeasurementAxis(v * (1.0 / norm)))
    }

    pub fn vector(&self) -> Vec3 {
        self.0
    }

    pub fn antipode(&self) -> Self {
        MeasurementAxis(-self.0)
    }

    /// Projector `½(I + (−1)ᵏ z·σ)` for outcome `k ∈ {0, 1}`.
    pub fn projector(&self, k: usize) -> Mat2 {
        let sign = if k == 0 { 1.0 } else { -1.0 };
        let mut m = Mat2::identity();
        for axis in 0..3 {
            m = m + pauli(axis).scale(sign * self.0[axis]);
        }
        m.scale(0.5)
    }
}

/// Measurement axis `z = (2(−ty₂+y₁y₃), 2(ty₁+y₂y₃), t²+y₃²−y₁²−y₂²)`, the
/// Bloch vector of `V|0⟩⟨0|V†`.
pub fn axis_from_su2(q: &UnitQuaternion) -> MeasurementAxis {
    let t = q.t;
    let [y1, y2, y3] = q.y;
    let z = Vec3::new(2.0 * (-t * y2 + y1 * y3), 2.0 * (t * y1 + y2 * y3), t * t + y3 * y3 - y1 * y1 - y2 * y2);
    // |z| = (t² + |y|²)² = 1 up to rounding
    MeasurementAxis(z * (1.0 / z.norm()))
}

/// Post-measurement ensemble `{(p_k, ρ_k)}` of party a.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Ensemble {
    pub branches: [(f64, Qubit2); 2],
}

impl Ensemble {
    /// `Σ p_k ρ_k`, which equals the party-a marginal.
    pub fn average(&self) -> Mat2 {
        self.branches.iter().fold(Mat2::zero(), |acc, (p, rho)| acc + rho.matrix().scale(*p))
    }
}

fn branch_probability(p: &BlochParams, z: &MeasurementAxis, k: usize) -> f64 {
    let e = p.s.dot(&z.0);
    if k == 0 {
        0.5 * (1.0 + e)
    } else {
        0.5 * (1.0 - e)
    }
}

fn branch_bloch(p: &BlochParams, z: &MeasurementAxis, k: usize) -> Vec3 {
    let e = p.s.dot(&z.0);
    let cz = p.c.hadamard(&z.0);
    if k == 0 {
        (p.r + cz) * (1.0 / (1.0 + e))
    } else {
        (p.r - cz) * (1.0 / (1.0 - e))
    }
}

/// Ensemble left on party a after measuring b along `z`.
///
/// Fails with [`Error::DegenerateBranch`] when a branch probability falls
/// below `1e-12`, since its conditional state is then undefined.
pub fn post_measurement_ensemble(p: &BlochParams, z: &MeasurementAxis) -> Result<Ensemble> {
    let mut branches = [(0.0, Qubit2::from_bloch(Vec3::ZERO)?); 2];
    for (k, slot) in branches.iter_mut().enumerate() {
        let prob = branch_probability(p, z, k);
        if prob < tol::BRANCH_PROBABILITY {
            return Err(Error::DegenerateBranch { branch: k, probability: prob });
        }
        *slot = (prob, Qubit2::from_bloch(branch_bloch(p, z, k))?);
    }
    Ok(Ensemble { branches })
}

/// Matrix-level measurement: `Tr_b[(I⊗B_k) ρ (I⊗B_k)]` for `k = 0, 1`,
/// unnormalized, so each trace is `p_k`.
pub fn measure_party_b(rho: &DensityMatrix4, z: &MeasurementAxis) -> [Mat2; 2] {
    let id = Mat2::identity();
    let mut out = [Mat2::zero(); 2];
    for (k, slot) in out.iter_mut().enumerate() {
        let proj: Mat4 = kron(&id, &z.projector(k));
        let m = rho.matrix().conjugate_by(&proj).0;
        for i in 0..2 {
            for j in 0..2 {
                slot.0[i][j] = m[2 * i][2 * j] + m[2 * i + 1][2 * j + 1];
            }
        }
    }
    out
}

/// `Σ_k p_k S(ρ_k)` in bits; branches with `p_k < 1e-12` contribute zero.
pub fn conditional_entropy(p: &BlochParams, z: &MeasurementAxis) -> Result<f64> {
    let mut total = 0.0;
    for k in 0..2 {
        let prob = branch_probability(p, z, k);
        if prob < tol::BRANCH_PROBABILITY {
            continue;
        }
        total += prob * Qubit2::from_bloch(branch_bloch(p, z, k))?.von_neumann_entropy()?;
    }
    Ok(total)
}

/// `G(z) = −H₀(s·z) + ½H_{s·z}(|r + c⊙z|) + ½H_{−s·z}(|r − c⊙z|)`.
pub fn g_objective(p: &BlochParams, z: &MeasurementAxis) -> Result<f64> {
    let e = p.s.dot(&z.0);
    let cz = p.c.hadamard(&z.0);
    let plus = (p.r + cz).norm();
    let minus = (p.r - cz).norm();
    Ok(-entropic_h(0.0, e)? + 0.5 * entropic_h(e, plus)? + 0.5 * entropic_h(-e, minus)?)
}

/// The objective for the phase-damped state written in the undamped
/// parameters:
///
/// ```text
/// G̃(z) = −H₀(ε₊) + ½H_{ε₊}(δ₊) + ½H_{ε₋}(δ₋)
/// ε± = ±[√(1−γ)(s₁z₁ + s₂z₂) + s₃z₃]
/// δ± = √((1−γ)[(r₁ ± √(1−γ)c₁z₁)² + (r₂ ± √(1−γ)c₂z₂)²] + (r₃ ± c₃z₃)²)
/// ```
pub fn damped_g_objective(p: &BlochParams, gamma: f64, z: &MeasurementAxis) -> Result<f64> {
    if !(0.0..=1.0).contains(&gamma) {
        return Err(Error::Range { gamma });
    }
    let keep = 1.0 - gamma;
    let root = math::sqrt(keep);
    let [z1, z2, z3] = z.0 .0;
    let eps = root * (p.s[0] * z1 + p.s[1] * z2) + p.s[2] * z3;
    let delta = |sign: f64| {
        let a = p.r[0] + sign * root * p.c[0] * z1;
        let b = p.r[1] + sign * root * p.c[1] * z2;
        let d = p.r[2] + sign * p.c[2] * z3;
        math::sqrt(keep * (a * a + b * b) + d * d)
    };
    Ok(-entropic_h(0.0, eps)? + 0.5 * entropic_h(eps, delta(1.0))? + 0.5 * entropic_h(-eps, delta(-1.0))?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::density::{build_state, partial_trace, Side};

    fn example_one() -> BlochParams {
        BlochParams::new([0.0; 3], [0.1, 0.2, 0.2], [0.3; 3])
    }

    #[test]
    fn axis_from_su2_examples() {
        let z = axis_from_su2(&UnitQuaternion::new(1.0, 0.0, 0.0, 0.0).unwrap());
        assert_eq!(z.vector(), Vec3::new(0.0, 0.0, 1.0));
        let z = axis_from_su2(&UnitQuaternion::new(0.0, 1.0, 0.0, 0.0).unwrap());
        assert_eq!(z.vector(), Vec3::new(0.0, 0.0, -1.0));
        assert!(matches!(UnitQuaternion::new(1.0, 0.1, 0.0, 0.0), Err(Error::Norm { .. })));
    }

    #[test]
    fn axis_is_bloch_vector_of_rotated_projector() {
        let q = UnitQuaternion::new(0.5, 0.5, -0.5, 0.5).unwrap();
        let v = q.su2();
        let mut ket0 = Mat2::zero();
        ket0.0[0][0] = C64::new(1.0, 0.0);
        let b0 = ket0.conjugate_by(&v);
        let z = axis_from_su2(&q);
        assert!(b0.max_abs_diff(&z.projector(0)) < 1e-15);
    }

    #[test]
    fn ensemble_without_local_bias() {
        let p = BlochParams::new([0.0; 3], [0.0; 3], [0.4; 3]);
        let e = post_measurement_ensemble(&p, &MeasurementAxis::E3).unwrap();
        for (k, (prob, rho)) in e.branches.iter().enumerate() {
            assert_eq!(*prob, 0.5);
            let sign = if k == 0 { 1.0 } else { -1.0 };
            assert!(rho.bloch().max_abs_diff(&Vec3::new(0.0, 0.0, sign * 0.4)) < 1e-15);
            let ev = rho.eigenvalues();
            assert!((ev[0] - 0.7).abs() < 1e-15 && (ev[1] - 0.3).abs() < 1e-15);
        }
    }

    #[test]
    fn example_one_branch_eigenvalues_match_closed_form() {
        let p = example_one();
        let z = MeasurementAxis::E3;
        let e = post_measurement_ensemble(&p, &z).unwrap();
        let sz = p.s.dot(&z.vector());
        for (k, (_, rho)) in e.branches.iter().enumerate() {
            let sign = if k == 0 { 1.0 } else { -1.0 };
            let eps = 1.0 + sign * sz;
            let d = (p.r + p.c.hadamard(&z.vector()) * sign).norm();
            let closed = [(eps + d) / (2.0 * eps), (eps - d) / (2.0 * eps)];
            let direct = rho.jacobi_eigenvalues().unwrap();
            assert!((closed[0] - direct[0]).abs() < 1e-12);
            assert!((closed[1] - direct[1]).abs() < 1e-12);
        }
    }

    #[test]
    fn matrix_route_matches_ensemble() {
        let p = BlochParams::new([0.1, -0.2, 0.05], [0.1, 0.2, 0.2], [0.3, -0.2, 0.25]);
        let rho = build_state(&p).unwrap();
        let z = MeasurementAxis::new(Vec3::new(0.48, -0.6, 0.64)).unwrap();
        let ens = post_measurement_ensemble(&p, &z).unwrap();
        let raw = measure_party_b(&rho, &z);
        for k in 0..2 {
            let (prob, q) = ens.branches[k];
            assert!((raw[k].trace().re - prob).abs() < 1e-15);
            assert!(raw[k].scale(1.0 / prob).max_abs_diff(q.matrix()) < 1e-14);
        }
        let marg = partial_trace(&rho, Side::A);
        assert!(ens.average().max_abs_diff(marg.matrix()) < 1e-15);
    }

    #[test]
    fn degenerate_branch() {
        let p = BlochParams::new([0.0; 3], [0.0, 0.0, 1.0], [0.0; 3]);
        let err = post_measurement_ensemble(&p, &MeasurementAxis::E3).unwrap_err();
        assert!(matches!(err, Error::DegenerateBranch { branch: 1, .. }));
        // the branch drops out of the conditional entropy: ρ = I/2 ⊗ |0⟩⟨0|
        assert!((conditional_entropy(&p, &MeasurementAxis::E3).unwrap() - 1.0).abs() < 1e-15);
        assert!((g_objective(&p, &MeasurementAxis::E3).unwrap()).abs() < 1e-15);
    }

    #[test]
    fn conditional_entropy_examples() {
        let z = MeasurementAxis::new(Vec3::new(0.6, 0.0, 0.8)).unwrap();
        assert_eq!(conditional_entropy(&BlochParams::default(), &z).unwrap(), 1.0);
        let singlet = BlochParams::new([0.0; 3], [0.0; 3], [-1.0; 3]);
        assert!(conditional_entropy(&singlet, &z).unwrap() < 1e-12);
        let p = example_one();
        let h = conditional_entropy(&p, &MeasurementAxis::E3).unwrap();
        let g = g_objective(&p, &MeasurementAxis::E3).unwrap();
        assert!((h - (1.0 - g)).abs() < 1e-12);
    }

    #[test]
    fn g_vanishes_on_maximally_mixed() {
        let z = MeasurementAxis::new(Vec3::new(0.0, 0.6, -0.8)).unwrap();
        assert_eq!(g_objective(&BlochParams::default(), &z).unwrap(), 0.0);
    }

    #[test]
    fn g_on_isotropic_family_aligned_with_r() {
        let (rn, c) = (0.3, 0.2);
        let p = BlochParams::new([0.0, rn, 0.0], [0.0; 3], [c; 3]);
        let z = MeasurementAxis::new(Vec3::new(0.0, 1.0, 0.0)).unwrap();
        let expect = 0.5 * entropic_h(0.0, rn + c).unwrap() + 0.5 * entropic_h(0.0, rn - c).unwrap();
        assert!((g_objective(&p, &z).unwrap() - expect).abs() < 1e-15);
    }

    #[test]
    fn damped_objective_limits() {
        let p = BlochParams::new([0.1, 0.2, 0.3], [0.05, -0.1, 0.2], [0.25, -0.2, 0.3]);
        let z = MeasurementAxis::new(Vec3::new(0.48, -0.6, 0.64)).unwrap();
        let g = g_objective(&p, &z).unwrap();
        assert!((damped_g_objective(&p, 0.0, &z).unwrap() - g).abs() < 1e-14);

        // at γ = 1 only the third components matter
        let mut q = p;
        q.r.0[0] = -0.4;
        q.s.0[1] = 0.3;
        q.c.0[0] = 0.1;
        let a = damped_g_objective(&p, 1.0, &z).unwrap();
        let b = damped_g_objective(&q, 1.0, &z).unwrap();
        assert_eq!(a, b);
        assert!(matches!(damped_g_objective(&p, 1.5, &z), Err(Error::Range { .. })));
    }
}
