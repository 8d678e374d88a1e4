use super::eigen::{hermitian_eigen, jacobi_eigen, Spectrum};
use super::matrix::{kron, pauli, Mat2, Mat4};
use crate::{math, tol, Error, Result, Vec3, C64};

/// Parameters `(r, s, c)` of the family
/// `ρ = ¼(I⊗I + r·σ⊗I + I⊗s·σ + Σᵢ cᵢ σᵢ⊗σᵢ)`.
///
/// `r` and `s` are the Bloch vectors of the two marginals, `c` the diagonal
/// of the correlation tensor. Physicality is checked by [`build_state`].
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct BlochParams {
    pub r: Vec3,
    pub s: Vec3,
    pub c: Vec3,
}

impl BlochParams {
    pub fn new(r: impl Into<Vec3>, s: impl Into<Vec3>, c: impl Into<Vec3>) -> Self {
        BlochParams { r: r.into(), s: s.into(), c: c.into() }
    }

    pub fn max_abs_diff(&self, other: &BlochParams) -> f64 {
        self.r.max_abs_diff(&other.r).max(self.s.max_abs_diff(&other.s)).max(self.c.max_abs_diff(&other.c))
    }
}

/// Validated two-qubit density matrix with its spectrum.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DensityMatrix4 {
    matrix: Mat4,
    spectrum: Spectrum,
}

impl DensityMatrix4 {
    /// Checks Hermiticity and unit trace (both `1e-12`) and a smallest
    /// eigenvalue of at least `-1e-9`.
    pub fn new(matrix: Mat4) -> Result<Self> {
        let defect = matrix.hermiticity_defect();
        if !(defect <= tol::HERMITIAN) {
            return Err(Error::NotHermitian { defect });
        }
        let trace = matrix.trace();
        if !(math::abs(trace.re - 1.0) <= tol::TRACE && math::abs(trace.im) <= tol::TRACE) {
            return Err(Error::Trace { trace: trace.re });
        }
        let spectrum = hermitian_eigen(&matrix)?;
        let min_eigenvalue = spectrum.values[3];
        if min_eigenvalue < -tol::PSD {
            return Err(Error::Physicality { min_eigenvalue });
        }
        Ok(DensityMatrix4 { matrix, spectrum })
    }

    pub fn matrix(&self) -> &Mat4 {
        &self.matrix
    }

    pub fn spectrum(&self) -> &Spectrum {
        &self.spectrum
    }

    /// `tr(ρ O)`, real part.
    pub fn expectation(&self, observable: &Mat4) -> f64 {
        let mut acc = C64::new(0.0, 0.0);
        for i in 0..4 {
            for j in 0..4 {
                acc += self.matrix.0[i][j] * observable.0[j][i];
            }
        }
        acc.re
    }
}

/// Validated single-qubit density matrix.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Qubit2 {
    matrix: Mat2,
}

impl Qubit2 {
    pub fn new(matrix: Mat2) -> Result<Self> {
        let defect = matrix.hermiticity_defect();
        if !(defect <= tol::HERMITIAN) {
            return Err(Error::NotHermitian { defect });
        }
        let trace = matrix.trace();
        if !(math::abs(trace.re - 1.0) <= tol::TRACE && math::abs(trace.im) <= tol::TRACE) {
            return Err(Error::Trace { trace: trace.re });
        }
        let q = Qubit2 { matrix };
        let min_eigenvalue = q.eigenvalues()[1];
        if min_eigenvalue < -tol::PSD {
            return Err(Error::Physicality { min_eigenvalue });
        }
        Ok(q)
    }

    /// `½(I + v·σ)`.
    pub fn from_bloch(v: Vec3) -> Result<Self> {
        Qubit2::new(bloch_matrix(v))
    }

    pub fn matrix(&self) -> &Mat2 {
        &self.matrix
    }

    pub fn bloch(&self) -> Vec3 {
        let m = &self.matrix.0;
        Vec3::new(2.0 * m[0][1].re, -2.0 * m[0][1].im, (m[0][0] - m[1][1]).re)
    }

    /// Eigenvalues, descending: `tr/2 ± √(((a−d)/2)² + |b|²)`.
    pub fn eigenvalues(&self) -> [f64; 2] {
        let m = &self.matrix.0;
        let half_sum = 0.5 * (m[0][0].re + m[1][1].re);
        let half_diff = 0.5 * (m[0][0].re - m[1][1].re);
        let radius = math::sqrt(half_diff * half_diff + m[0][1].norm_sqr());
        [half_sum + radius, half_sum - radius]
    }

    /// Eigen-decomposition through the generic Jacobi solver.
    pub fn jacobi_eigenvalues(&self) -> Result<[f64; 2]> {
        Ok(jacobi_eigen(&self.matrix)?.0)
    }
}

pub(crate) fn bloch_matrix(v: Vec3) -> Mat2 {
    let mut m = Mat2::identity();
    for (axis, &k) in v.0.iter().enumerate() {
        m = m + pauli(axis).scale(k);
    }
    m.scale(0.5)
}

/// Which marginal [`partial_trace`] keeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// Keep party a, trace out b: `ρᵃ = Tr_b ρ`.
    A,
    /// Keep party b, trace out a: `ρᵇ = Tr_a ρ`.
    B,
}

/// Assemble `¼(I⊗I + r·σ⊗I + I⊗s·σ + Σᵢ cᵢ σᵢ⊗σᵢ)` and validate it.
pub fn build_state(p: &BlochParams) -> Result<DensityMatrix4> {
    DensityMatrix4::new(family_matrix(p))
}

pub(crate) fn family_matrix(p: &BlochParams) -> Mat4 {
    let id = Mat2::identity();
    let mut m = Mat4::identity();
    for axis in 0..3 {
        let sigma = pauli(axis);
        m = m
            + kron(&sigma, &id).scale(p.r[axis])
            + kron(&id, &sigma).scale(p.s[axis])
            + kron(&sigma, &sigma).scale(p.c[axis]);
    }
    m.scale(0.25)
}

/// Recover `(r, s, c)` from Pauli expectations.
///
/// Fails with [`Error::OutOfFamily`] when an off-diagonal correlation
/// `tr(ρ σᵢ⊗σⱼ)`, `i ≠ j`, exceeds `1e-9` in magnitude.
pub fn extract_bloch(rho: &DensityMatrix4) -> Result<BlochParams> {
    let id = Mat2::identity();
    let mut p = BlochParams::default();
    for i in 0..3 {
        p.r.0[i] = rho.expectation(&kron(&pauli(i), &id));
        p.s.0[i] = rho.expectation(&kron(&id, &pauli(i)));
        for j in 0..3 {
            let t = rho.expectation(&kron(&pauli(i), &pauli(j)));
            if i == j {
                p.c.0[i] = t;
            } else if math::abs(t) > tol::FAMILY {
                return Err(Error::OutOfFamily { i: i + 1, j: j + 1, value: t });
            }
        }
    }
    Ok(p)
}

/// Reduced single-qubit state; `side` names the party that is kept.
pub fn partial_trace(rho: &DensityMatrix4, side: Side) -> Qubit2 {
    let m = &rho.matrix().0;
    let mut out = Mat2::zero();
    for i in 0..2 {
        for j in 0..2 {
            out.0[i][j] = match side {
                Side::A => m[2 * i][2 * j] + m[2 * i + 1][2 * j + 1],
                Side::B => m[i][j] + m[2 + i][2 + j],
            };
        }
    }
    // the trace and positivity of a valid ρ carry over to its marginals
    Qubit2 { matrix: out }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn maximally_mixed() {
        let rho = build_state(&BlochParams::default()).unwrap();
        assert_eq!(*rho.matrix(), Mat4::identity().scale(0.25));
        let marg = partial_trace(&rho, Side::A);
        assert_eq!(*marg.matrix(), Mat2::identity().scale(0.5));
        assert_eq!(extract_bloch(&rho).unwrap(), BlochParams::default());
    }

    #[test]
    fn singlet_is_rank_one() {
        let rho = build_state(&BlochParams::new([0.0; 3], [0.0; 3], [-1.0; 3])).unwrap();
        let v = rho.spectrum().values;
        assert!((v[0] - 1.0).abs() < 1e-14);
        assert!(v[1..].iter().all(|x| x.abs() < 1e-14));
        // (|01⟩ − |10⟩)/√2
        let m = &rho.matrix().0;
        assert!((m[1][1] - c(0.5, 0.0)).norm() < 1e-15);
        assert!((m[1][2] - c(-0.5, 0.0)).norm() < 1e-15);
        for side in [Side::A, Side::B] {
            let q = partial_trace(&rho, side);
            assert!(q.matrix().max_abs_diff(&Mat2::identity().scale(0.5)) < 1e-15);
        }
    }

    #[test]
    fn example_one_matrix_entries() {
        let p = BlochParams::new([0.0; 3], [0.1, 0.2, 0.2], [0.3; 3]);
        let rho = build_state(&p).unwrap();
        let m = &rho.matrix().0;
        assert!((m[0][0] - c(0.375, 0.0)).norm() < 1e-15);
        assert!((m[0][1] - c(0.025, -0.05)).norm() < 1e-15);
        assert!((m[1][2] - c(0.15, 0.0)).norm() < 1e-15);
        assert!((m[2][2] - c(0.225, 0.0)).norm() < 1e-15);
        assert!((m[2][3] - c(0.025, -0.05)).norm() < 1e-15);
        assert!((m[3][3] - c(0.275, 0.0)).norm() < 1e-15);
        assert_eq!(m[0][2], c(0.0, 0.0));

        let b = partial_trace(&rho, Side::B);
        assert!(b.bloch().max_abs_diff(&Vec3::new(0.1, 0.2, 0.2)) < 1e-15);
        assert!(partial_trace(&rho, Side::A).bloch().norm() < 1e-15);
    }

    #[test]
    fn unphysical_state_rejected() {
        let p = BlochParams::new([0.0; 3], [0.0; 3], [1.0; 3]);
        assert!(matches!(build_state(&p), Err(Error::Physicality { .. })));
        assert!(matches!(Qubit2::from_bloch(Vec3::new(0.0, 0.0, 1.1)), Err(Error::Physicality { .. })));
    }

    #[test]
    fn off_diagonal_correlation_leaves_family() {
        let m = (Mat4::identity() + kron(&pauli(0), &pauli(1)).scale(0.1)).scale(0.25);
        let rho = DensityMatrix4::new(m).unwrap();
        let err = extract_bloch(&rho).unwrap_err();
        assert!(matches!(err, Error::OutOfFamily { i: 1, j: 2, .. }));
    }

    #[test]
    fn non_hermitian_and_bad_trace() {
        let mut m = Mat4::identity().scale(0.25);
        m.0[0][1] = c(0.1, 0.0);
        assert!(matches!(DensityMatrix4::new(m), Err(Error::NotHermitian { .. })));
        assert!(matches!(DensityMatrix4::new(Mat4::identity().scale(0.3)), Err(Error::Trace { .. })));
    }

    #[test]
    fn qubit_eigenvalues_closed_form_matches_jacobi() {
        let q = Qubit2::from_bloch(Vec3::new(0.3, -0.4, 0.5)).unwrap();
        let a = q.eigenvalues();
        let b = q.jacobi_eigenvalues().unwrap();
        let n = Vec3::new(0.3, -0.4, 0.5).norm();
        for k in 0..2 {
            assert!((a[k] - b[k]).abs() < 1e-14);
        }
        assert!((a[0] - 0.5 * (1.0 + n)).abs() < 1e-15);
    }
}
