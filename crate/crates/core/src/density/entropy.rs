use super::state::{DensityMatrix4, Qubit2};
use crate::{math, tol, Error, Result};

/// `H_ε(x) = ½(1+ε+x)log₂(1+ε+x) + ½(1+ε−x)log₂(1+ε−x)`.
///
/// Even in `x`, minimal at `x = 0`. Log arguments below `1e-12` contribute
/// zero; `1+ε−|x| < -1e-12` is outside the domain.
pub fn entropic_h(eps: f64, x: f64) -> Result<f64> {
    let ax = math::abs(x);
    let lo = 1.0 + eps - ax;
    if !(lo >= -tol::ENTROPIC_CLAMP) {
        return Err(Error::Domain { what: "entropic function" });
    }
    let hi = 1.0 + eps + ax;
    Ok(0.5 * (half_term(hi) + half_term(lo)))
}

#[inline]
fn half_term(a: f64) -> f64 {
    if a < tol::ENTROPIC_CLAMP {
        0.0
    } else {
        a * math::log2(a)
    }
}

/// `−Σ λ log₂ λ` with `0 log 0 = 0`.
///
/// Eigenvalues in `[-1e-9, 0)` count as zero; anything lower is an error.
pub fn entropy_from_eigenvalues(values: &[f64]) -> Result<f64> {
    let mut s = 0.0;
    for &lambda in values {
        if lambda < -tol::PSD || lambda.is_nan() {
            return Err(Error::Physicality { min_eigenvalue: lambda });
        }
        s -= math::xlog2x(lambda);
    }
    Ok(s.max(0.0))
}

/// States with a von Neumann entropy.
pub trait VonNeumann {
    fn von_neumann_entropy(&self) -> Result<f64>;
}

impl VonNeumann for DensityMatrix4 {
    fn von_neumann_entropy(&self) -> Result<f64> {
        entropy_from_eigenvalues(&self.spectrum().values)
    }
}

impl VonNeumann for Qubit2 {
    fn von_neumann_entropy(&self) -> Result<f64> {
        entropy_from_eigenvalues(&self.eigenvalues())
    }
}

/// `S(ρ) = −Tr ρ log₂ ρ` in bits.
pub fn von_neumann_entropy<S: VonNeumann + ?Sized>(state: &S) -> Result<f64> {
    state.von_neumann_entropy()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::density::{build_state, BlochParams};
    use crate::Vec3;

    #[test]
    fn entropic_h_values() {
        assert_eq!(entropic_h(0.0, 0.0).unwrap(), 0.0);
        assert_eq!(entropic_h(0.0, 1.0).unwrap(), 1.0);
        let eps = 0.37;
        let min = (1.0 + eps) * (1.0f64 + eps).log2();
        assert!((entropic_h(eps, 0.0).unwrap() - min).abs() < 1e-15);
        for k in 1..20 {
            let x = k as f64 * 0.05;
            assert!(entropic_h(eps, x).unwrap() > min);
        }
    }

    #[test]
    fn entropic_h_domain() {
        assert!(entropic_h(-0.5, 0.5).is_ok());
        assert!(entropic_h(-0.5, 0.5 + 1e-13).is_ok());
        assert!(matches!(entropic_h(-0.5, 0.6), Err(Error::Domain { .. })));
        assert!(entropic_h(0.0, f64::NAN).is_err());
    }

    #[test]
    fn entropy_bounds() {
        let mixed = build_state(&BlochParams::default()).unwrap();
        assert_eq!(von_neumann_entropy(&mixed).unwrap(), 2.0);
        let singlet = build_state(&BlochParams::new([0.0; 3], [0.0; 3], [-1.0; 3])).unwrap();
        assert!(von_neumann_entropy(&singlet).unwrap() < 1e-12);
        assert!(matches!(entropy_from_eigenvalues(&[1.1, -0.1]), Err(Error::Physicality { .. })));
        assert_eq!(entropy_from_eigenvalues(&[1.0, -1e-10]).unwrap(), 0.0);
    }

    #[test]
    fn example_one_entropy_from_spectrum() {
        let p = BlochParams::new([0.0; 3], [0.1, 0.2, 0.2], [0.3; 3]);
        let rho = build_state(&p).unwrap();
        let printed: [f64; 4] = [0.4, 0.3427, 0.25, 0.0073];
        let from_printed: f64 = -printed.iter().map(|l| l * l.log2()).sum::<f64>();
        let s = von_neumann_entropy(&rho).unwrap();
        // the printed eigenvalues are rounded to 4 decimals
        assert!((s - from_printed).abs() < 2e-3, "{s} vs {from_printed}");
    }

    #[test]
    fn qubit_entropy_matches_entropic_function() {
        for v in [Vec3::new(0.0, 0.0, 0.0), Vec3::new(0.3, 0.1, -0.2), Vec3::new(0.0, 0.0, 1.0)] {
            let q = Qubit2::from_bloch(v).unwrap();
            let s = von_neumann_entropy(&q).unwrap();
            assert!((s + entropic_h(0.0, v.norm()).unwrap() - 1.0).abs() < 1e-12);
        }
    }
}
