//! Deterministic global maximization over the unit sphere.
//!
//! A coarse Fibonacci lattice locates the basin of the maximum; a sequence
//! of shrinking spherical-cap lattices around the incumbent then polishes
//! it. No randomness, no gradients.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::f64::consts::PI;

use crate::measurement::MeasurementAxis;
use crate::{math, tol, Error, Result, Vec3};

/// `π(3 − √5)`, the golden angle.
const GOLDEN_ANGLE: f64 = 2.399_963_229_728_653;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SphereOptConfig {
    /// Points in the coarse lattice.
    pub grid_points: usize,
    /// Local refinement rounds after the coarse pass.
    pub refine_rounds: usize,
    /// Cap radius multiplier per round, in `(0, 1)`.
    pub shrink_factor: f64,
    /// Points per spherical cap.
    pub local_points: usize,
    /// Lay the coarse lattice on the `z₃ ≥ 0` hemisphere only. Valid for
    /// objectives with `f(z) = f(−z)`.
    pub hemisphere: bool,
}

impl Default for SphereOptConfig {
    fn default() -> Self {
        SphereOptConfig {
            grid_points: 2000,
            refine_rounds: 40,
            shrink_factor: 0.5,
            local_points: 64,
            hemisphere: false,
        }
    }
}

impl SphereOptConfig {
    /// Defaults with the hemisphere restriction on; the measurement
    /// objectives are antipodally symmetric.
    pub fn for_discord() -> Self {
        SphereOptConfig { hemisphere: true, ..Default::default() }
    }

    pub fn validate(&self) -> Result<()> {
        let ok = self.grid_points >= 1
            && self.refine_rounds >= 1
            && self.local_points >= 1
            && self.shrink_factor > 0.0
            && self.shrink_factor < 1.0;
        if ok {
            Ok(())
        } else {
            Err(Error::Domain { what: "sphere optimizer configuration" })
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct OptResult {
    pub argmax: MeasurementAxis,
    pub value: f64,
    pub evaluations: usize,
    /// Incumbent value after the coarse pass and after each refinement round.
    pub trace: Vec<f64>,
}

/// `n` near-uniform unit vectors on the hemisphere `z₃ ≥ 0`.
pub fn fibonacci_grid(n: usize) -> Vec<MeasurementAxis> {
    lattice(n, 1.0)
}

/// `n` near-uniform unit vectors on the whole sphere.
pub fn fibonacci_sphere(n: usize) -> Vec<MeasurementAxis> {
    lattice(n, 2.0)
}

fn lattice(n: usize, height: f64) -> Vec<MeasurementAxis> {
    (0..n)
        .map(|i| {
            let z3 = 1.0 - height * (i as f64 + 0.5) / n as f64;
            let rho = math::sqrt((1.0 - z3 * z3).max(0.0));
            let phi = GOLDEN_ANGLE * i as f64;
            axis(Vec3::new(rho * math::cos(phi), rho * math::sin(phi), z3))
        })
        .collect()
}

fn axis(v: Vec3) -> MeasurementAxis {
    MeasurementAxis::normalize(v).expect("lattice points are nonzero")
}

/// Maximize `f` over the unit sphere.
///
/// Ties within `1e-14` go to the lexicographically smallest axis, and the
/// incumbent never gets worse, so the result does not depend on the order
/// in which candidates are visited.
pub fn maximize_on_sphere<F, E>(f: F, cfg: &SphereOptConfig) -> core::result::Result<OptResult, E>
where
    F: Fn(&MeasurementAxis) -> core::result::Result<f64, E>,
    E: From<Error>,
{
    cfg.validate()?;
    let coarse = if cfg.hemisphere { fibonacci_grid(cfg.grid_points) } else { fibonacci_sphere(cfg.grid_points) };
    let area = if cfg.hemisphere { 2.0 * PI } else { 4.0 * PI };

    let mut evaluations = 0;
    let mut candidates = Vec::with_capacity(coarse.len().max(cfg.local_points + 1));
    for z in coarse {
        candidates.push((f(&z)?, z));
        evaluations += 1;
    }
    let (mut value, mut best) = select(&candidates, f64::NEG_INFINITY)
        .ok_or(Error::Domain { what: "objective is NaN on the whole lattice" })?;

    let mut trace = Vec::with_capacity(cfg.refine_rounds + 1);
    trace.push(value);

    let mut radius = (2.0 * math::sqrt(area / cfg.grid_points as f64)).min(PI / 2.0);
    for _ in 0..cfg.refine_rounds {
        candidates.clear();
        candidates.push((value, best));
        for z in cap(&best, radius, cfg.local_points) {
            candidates.push((f(&z)?, z));
            evaluations += 1;
        }
        (value, best) = select(&candidates, value).expect("incumbent is always a candidate");
        trace.push(value);
        radius *= cfg.shrink_factor;
    }

    Ok(OptResult { argmax: best, value, evaluations, trace })
}

/// Best candidate at or above `floor`, ties broken lexicographically.
fn select(candidates: &[(f64, MeasurementAxis)], floor: f64) -> Option<(f64, MeasurementAxis)> {
    let top = candidates.iter().map(|(v, _)| *v).filter(|v| !v.is_nan()).fold(f64::NEG_INFINITY, f64::max);
    if top == f64::NEG_INFINITY && candidates.iter().all(|(v, _)| v.is_nan()) {
        return None;
    }
    let cutoff = (top - tol::OBJECTIVE_TIE).max(floor);
    candidates.iter().filter(|(v, _)| *v >= cutoff).min_by(|a, b| lexicographic(&a.1, &b.1)).copied()
}

fn lexicographic(a: &MeasurementAxis, b: &MeasurementAxis) -> Ordering {
    let (a, b) = (a.vector(), b.vector());
    (0..3)
        .map(|i| a[i].partial_cmp(&b[i]).unwrap_or(Ordering::Equal))
        .find(|o| *o != Ordering::Equal)
        .unwrap_or(Ordering::Equal)
}

/// Sunflower lattice of `n` points in the geodesic cap of `radius` around `center`.
fn cap(center: &MeasurementAxis, radius: f64, n: usize) -> impl Iterator<Item = MeasurementAxis> {
    let u = center.vector();
    let helper = if math::abs(u[0]) < 0.9 { Vec3::new(1.0, 0.0, 0.0) } else { Vec3::new(0.0, 1.0, 0.0) };
    let e1 = {
        let t = helper - u * helper.dot(&u);
        t * (1.0 / t.norm())
    };
    let e2 = u.cross(&e1);
    (0..n).map(move |k| {
        let rho = radius * math::sqrt((k as f64 + 0.5) / n as f64);
        let phi = GOLDEN_ANGLE * k as f64;
        let dir = e1 * math::cos(phi) + e2 * math::sin(phi);
        axis(u * math::cos(rho) + dir * math::sin(rho))
    })
}
