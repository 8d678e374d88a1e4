//! Mutual information, classical correlation and quantum discord.
//!
//! The numeric path maximizes `G(z)` over all measurement axes and is the
//! reference for every closed form below. The closed forms cover
//!
//! | method            | family                                   |
//! |-------------------|------------------------------------------|
//! | `theorem1`        | `s = 0`, `c₁ = c₂ = c₃ = c`              |
//! | `theorem1-c-eq-r` | same, with `c = |r| > 0`                 |
//! | `werner`          | same, with `r = 0`                       |
//! | `eq214`           | `r = 0`, `c₁ = c₂ = c₃ = c`              |
//! | `theorem2-zero`   | `s = 0`, `c₁ = c₂ = 0`                   |
//! | `theorem3`        | `s = 0`, `c₃ = 0`, `c₁ = c₂ = c`         |
//!
//! [`discord`] picks the first matching family and falls back to the
//! numeric path otherwise.

use core::fmt;

use crate::density::{build_state, entropic_h, partial_trace, BlochParams, Side, VonNeumann};
use crate::measurement::{g_objective, MeasurementAxis};
use crate::sphere::{maximize_on_sphere, SphereOptConfig};
use crate::{math, tol, Error, Result, Vec3};

/// How a [`DiscordReport`] was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Numeric,
    Theorem1,
    Theorem1CEqR,
    Werner,
    R0Isotropic,
    Theorem2Zero,
    Theorem2Formula,
    Theorem3,
}

impl Method {
    pub const ALL: [Method; 8] = [
        Method::Numeric,
        Method::Theorem1,
        Method::Theorem1CEqR,
        Method::Werner,
        Method::R0Isotropic,
        Method::Theorem2Zero,
        Method::Theorem2Formula,
        Method::Theorem3,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Method::Numeric => "numeric",
            Method::Theorem1 => "theorem1",
            Method::Theorem1CEqR => "theorem1-c-eq-r",
            Method::Werner => "werner",
            Method::R0Isotropic => "eq214",
            Method::Theorem2Zero => "theorem2-zero",
            Method::Theorem2Formula => "theorem2-formula",
            Method::Theorem3 => "theorem3",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Method> {
        Method::ALL.into_iter().find(|m| m.tag() == tag)
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DiscordReport {
    pub mutual_info: f64,
    pub classical_corr: f64,
    pub discord: f64,
    pub argmax_axis: MeasurementAxis,
    /// Eigenvalues of ρ, descending.
    pub spectrum: [f64; 4],
    pub method: Method,
}

/// Range of `θ = |r + c z|²` over unit `z`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ThetaInterval {
    pub min: f64,
    pub max: f64,
}

fn h0(x: f64) -> Result<f64> {
    entropic_h(0.0, x)
}

/// `S(ρᵃ) + S(ρᵇ) − S(ρ)`.
pub fn mutual_information(p: &BlochParams) -> Result<f64> {
    let rho = build_state(p)?;
    let sa = partial_trace(&rho, Side::A).von_neumann_entropy()?;
    let sb = partial_trace(&rho, Side::B).von_neumann_entropy()?;
    Ok(sa + sb - rho.von_neumann_entropy()?)
}

/// `2 − H₀(|r|) − H₀(|s|) + Σ λᵢ log₂ λᵢ`, the same quantity written
/// through the marginal Bloch lengths.
pub fn mutual_information_expanded(p: &BlochParams) -> Result<f64> {
    let rho = build_state(p)?;
    let sum: f64 = rho.spectrum().values.iter().map(|&l| math::xlog2x(l)).sum();
    Ok(2.0 - h0(p.r.norm())? - h0(p.s.norm())? + sum)
}

/// `C = −H₀(|r|) + max_z G(z)` and the maximizing axis.
pub fn classical_correlation_numeric(p: &BlochParams, cfg: &SphereOptConfig) -> Result<(f64, MeasurementAxis)> {
    build_state(p)?;
    let best = maximize_on_sphere(|z| g_objective(p, z), cfg)?;
    Ok((best.value - h0(p.r.norm())?, best.argmax))
}

/// Discord by direct optimization over measurement axes.
pub fn discord_numeric(p: &BlochParams, cfg: &SphereOptConfig) -> Result<DiscordReport> {
    let rho = build_state(p)?;
    let mutual_info = mutual_information(p)?;
    let (classical_corr, argmax_axis) = classical_correlation_numeric(p, cfg)?;
    Ok(DiscordReport {
        mutual_info,
        classical_corr,
        discord: mutual_info - classical_corr,
        argmax_axis,
        spectrum: rho.spectrum().values,
        method: Method::Numeric,
    })
}

/// `θ_min = (|r| − |c|)²`, `θ_max = (|r| + |c|)²`.
pub fn theta_range(r_norm: f64, c: f64) -> ThetaInterval {
    let c = math::abs(c);
    ThetaInterval { min: (r_norm - c) * (r_norm - c), max: (r_norm + c) * (r_norm + c) }
}

/// `G(θ) = ½H₀(√θ) + ½H₀(√(2(|r|²+c²) − θ))`, the objective of the
/// `s = 0`, isotropic-`c` family as a function of `θ = |r + c z|²`.
pub fn g_reduced(theta: f64, r_norm: f64, c: f64) -> Result<f64> {
    let total = 2.0 * (r_norm * r_norm + c * c);
    let slack = 1e-12 * total.max(1.0);
    if !(theta >= -slack && theta <= total + slack) {
        return Err(Error::Domain { what: "reduced objective" });
    }
    let a = math::sqrt(theta.max(0.0));
    let b = math::sqrt((total - theta).max(0.0));
    Ok(0.5 * h0(a)? + 0.5 * h0(b)?)
}

/// `g(x) = (1/x) log₂((1+x)/(1−x))` on `(0, 1)`. Since `g` is increasing,
/// `G(θ)` decreases up to `θ = |r|² + c²` and increases after it.
pub fn g_ratio(x: f64) -> Result<f64> {
    if !(x > 0.0 && x < 1.0) {
        return Err(Error::Domain { what: "g ratio" });
    }
    Ok(math::log2((1.0 + x) / (1.0 - x)) / x)
}

fn check_isotropic_domain(norm: f64, c: f64) -> Result<()> {
    // eigenvalues ¼(1 + c ± n) and ¼(1 − c ± √(4c² + n²))
    let slack = tol::FAMILY_MATCH;
    let ok = norm >= 0.0 && 1.0 + c - norm >= -slack && 1.0 - c - math::sqrt(4.0 * c * c + norm * norm) >= -slack;
    if ok {
        Ok(())
    } else {
        Err(Error::Domain { what: "isotropic family" })
    }
}

/// Closed form for `s = 0`, `c₁ = c₂ = c₃ = c`:
///
/// ```text
/// Q = ½H_c(|r|) + ½H_{−c}(√(4c² + |r|²)) − ½[H₀(|r| + |c|) + H₀(||r| − |c||)]
/// ```
pub fn discord_theorem1(r_norm: f64, c: f64) -> Result<f64> {
    check_isotropic_domain(r_norm, c)?;
    let ac = math::abs(c);
    Ok(0.5 * entropic_h(c, r_norm)? + 0.5 * entropic_h(-c, math::sqrt(4.0 * c * c + r_norm * r_norm))?
        - 0.5 * (h0(r_norm + ac)? + h0(math::abs(r_norm - ac))?))
}

/// The `c = |r| > 0` case of [`discord_theorem1`]:
///
/// ```text
/// Q = ¼(1−c+√5c)log₂(1−c+√5c) + ¼(1−c−√5c)log₂(1−c−√5c) − ¼(1−2c)log₂(1−2c)
/// ```
///
/// Positivity confines `c` to `(0, 1/(1+√5)]`.
pub fn discord_theorem1_c_eq_r(c: f64) -> Result<f64> {
    let root5 = math::sqrt(5.0);
    if !(c > 0.0 && c <= 1.0 / (1.0 + root5) + tol::FAMILY_MATCH) {
        return Err(Error::Domain { what: "c = |r| family" });
    }
    let f = |x: f64| math::xlog2x(x.max(0.0));
    Ok(0.25 * (f(1.0 - c + root5 * c) + f(1.0 - c - root5 * c) - f(1.0 - 2.0 * c)))
}

/// Werner states `r = s = 0`, `c₁ = c₂ = c₃ = c ∈ [−1, 1/3]`:
///
/// ```text
/// Q = ¼[(1−3c)log₂(1−3c) − 2(1−c)log₂(1−c) + (1+c)log₂(1+c)]
/// ```
pub fn discord_werner(c: f64) -> Result<f64> {
    if !(-1.0 - tol::FAMILY_MATCH..=1.0 / 3.0 + tol::FAMILY_MATCH).contains(&c) {
        return Err(Error::Domain { what: "Werner family" });
    }
    let f = |x: f64| math::xlog2x(x.max(0.0));
    Ok(0.25 * (f(1.0 - 3.0 * c) - 2.0 * f(1.0 - c) + f(1.0 + c)))
}

/// Closed form for `r = 0`, `c₁ = c₂ = c₃ = c`:
///
/// ```text
/// Q = ½H_{−c}(√(4c² + |s|²)) − ½H_{−c}(|s|)
/// ```
pub fn discord_r0_isotropic(s_norm: f64, c: f64) -> Result<f64> {
    check_isotropic_domain(s_norm, c)?;
    Ok(0.5 * entropic_h(-c, math::sqrt(4.0 * c * c + s_norm * s_norm))? - 0.5 * entropic_h(-c, s_norm)?)
}

/// How [`discord_theorem2`] evaluates the `r = 0` branch.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Theorem2Mode {
    /// Numeric optimization (the default).
    Oracle(SphereOptConfig),
    /// The printed closed form `H₀(|s| / √(s₁² + s₂² + (c₃ + s₃)²))`.
    /// It gives 1 on product states with `c₃ = 0`, whose discord is 0.
    PrintedFormula,
}

impl Default for Theorem2Mode {
    fn default() -> Self {
        Theorem2Mode::Oracle(SphereOptConfig::for_discord())
    }
}

/// Discord for `c₁ = c₂ = 0` with either `s = 0` (always zero: the state
/// is classical on b) or `r = 0` (evaluated according to `mode`).
pub fn discord_theorem2(p: &BlochParams, mode: Theorem2Mode) -> Result<(f64, Method)> {
    let t = tol::FAMILY_MATCH;
    if !(math::abs(p.c[0]) <= t && math::abs(p.c[1]) <= t) {
        return Err(Error::Family { family: "theorem2" });
    }
    build_state(p)?;
    if p.s.norm() <= t {
        return Ok((0.0, Method::Theorem2Zero));
    }
    if p.r.norm() > t {
        return Err(Error::Family { family: "theorem2" });
    }
    match mode {
        Theorem2Mode::Oracle(cfg) => Ok((discord_numeric(p, &cfg)?.discord, Method::Numeric)),
        Theorem2Mode::PrintedFormula => {
            let [s1, s2, s3] = p.s.0;
            let denom = math::sqrt(s1 * s1 + s2 * s2 + (p.c[2] + s3) * (p.c[2] + s3));
            if denom == 0.0 {
                return Err(Error::Domain { what: "theorem2 printed formula" });
            }
            Ok((h0(p.s.norm() / denom)?, Method::Theorem2Formula))
        }
    }
}

/// `α± = √(2c² + |r|² ± 2√(c⁴ + c²(r₁² + r₂²)))`; ρ has eigenvalues ¼(1 ± α±).
pub(crate) fn theorem3_alpha(r: &Vec3, c: f64) -> [f64; 2] {
    let planar = r[0] * r[0] + r[1] * r[1];
    let base = 2.0 * c * c + r.norm_sq();
    let cross = 2.0 * math::sqrt(c * c * c * c + c * c * planar);
    [math::sqrt(base + cross), math::sqrt((base - cross).max(0.0))]
}

/// `β± = √((√(r₁² + r₂²) ± c)² + r₃²)`.
pub(crate) fn theorem3_beta(r: &Vec3, c: f64) -> [f64; 2] {
    let planar = math::sqrt(r[0] * r[0] + r[1] * r[1]);
    let r3sq = r[2] * r[2];
    [math::sqrt((planar + c) * (planar + c) + r3sq), math::sqrt((planar - c) * (planar - c) + r3sq)]
}

/// Closed form for `s = 0`, `c₃ = 0`, `c₁ = c₂ = c`:
/// `Q = ½[H₀(α₊) + H₀(α₋) − H₀(β₊) − H₀(β₋)]`.
pub fn discord_theorem3(r: &Vec3, c: f64) -> Result<f64> {
    let [ap, am] = theorem3_alpha(r, c);
    if !(ap <= 1.0 + tol::FAMILY_MATCH) {
        return Err(Error::Domain { what: "theorem3 family" });
    }
    let [bp, bm] = theorem3_beta(r, c);
    Ok(0.5 * (h0(ap.min(1.0))? + h0(am)? - h0(bp)? - h0(bm)?))
}

fn unit_or(v: Vec3, fallback: MeasurementAxis) -> MeasurementAxis {
    if v.norm() > tol::FAMILY_MATCH {
        MeasurementAxis::normalize(v).unwrap_or(fallback)
    } else {
        fallback
    }
}

/// Which closed form, if any, applies to `p`.
pub fn analytic_family(p: &BlochParams) -> Option<Method> {
    let t = tol::FAMILY_MATCH;
    let close = |a: f64, b: f64| math::abs(a - b) <= t;
    let s_zero = p.s.norm() <= t;
    let r_zero = p.r.norm() <= t;
    let isotropic = close(p.c[0], p.c[1]) && close(p.c[1], p.c[2]);
    let c12_zero = close(p.c[0], 0.0) && close(p.c[1], 0.0);
    if s_zero && isotropic {
        if r_zero {
            Some(Method::Werner)
        } else if p.c[2] > 0.0 && close(p.c[2], p.r.norm()) {
            Some(Method::Theorem1CEqR)
        } else {
            Some(Method::Theorem1)
        }
    } else if r_zero && isotropic {
        Some(Method::R0Isotropic)
    } else if s_zero && c12_zero {
        Some(Method::Theorem2Zero)
    } else if s_zero && close(p.c[2], 0.0) && close(p.c[0], p.c[1]) {
        Some(Method::Theorem3)
    } else {
        None
    }
}

fn analytic(p: &BlochParams, method: Method) -> Result<(f64, MeasurementAxis)> {
    let e1 = MeasurementAxis::new(Vec3::new(1.0, 0.0, 0.0))?;
    let c = p.c[2];
    Ok(match method {
        Method::Werner => (discord_werner(c)?, MeasurementAxis::E3),
        Method::Theorem1CEqR => (discord_theorem1_c_eq_r(c)?, unit_or(p.r, MeasurementAxis::E3)),
        Method::Theorem1 => (discord_theorem1(p.r.norm(), c)?, unit_or(p.r, MeasurementAxis::E3)),
        Method::R0Isotropic => (discord_r0_isotropic(p.s.norm(), c)?, unit_or(p.s, MeasurementAxis::E3)),
        Method::Theorem2Zero => (0.0, MeasurementAxis::E3),
        Method::Theorem3 => {
            let c = 0.5 * (p.c[0] + p.c[1]);
            (discord_theorem3(&p.r, c)?, unit_or(Vec3::new(p.r[0], p.r[1], 0.0), e1))
        }
        Method::Numeric | Method::Theorem2Formula => unreachable!("not an automatic analytic path"),
    })
}

/// Discord with automatic choice of closed form; numeric otherwise.
///
/// A closed form whose own domain check rejects a boundary state (within
/// the physicality tolerance) also falls back to the numeric path.
pub fn discord(p: &BlochParams, cfg: &SphereOptConfig) -> Result<DiscordReport> {
    let rho = build_state(p)?;
    if let Some(method) = analytic_family(p) {
        match analytic(p, method) {
            Ok((q, axis)) => {
                let mutual_info = mutual_information(p)?;
                return Ok(DiscordReport {
                    mutual_info,
                    classical_corr: mutual_info - q,
                    discord: q,
                    argmax_axis: axis,
                    spectrum: rho.spectrum().values,
                    method,
                });
            }
            Err(Error::Domain { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    discord_numeric(p, cfg)
}
