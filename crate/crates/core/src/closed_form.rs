//! Analytic phase and gravimetric sensitivities.
//!
//! All Δg/g expressions share the lever arm κ = g·ω·(H² + LH)/c³
//! ([`GeometryConfig::phase_closed_form`]) and take the signal photon
//! number directly; [`n_sig_mz`] and [`n_sig_su11`] convert from the input
//! photon number N₀.

use std::fmt;

use crate::error::{Error, Result};
use crate::schwarzschild::GeometryConfig;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scheme {
    /// Mach–Zehnder, unsqueezed and lossless.
    Sql,
    /// Mach–Zehnder with squeezed vacuum in the dark port, read out on b₂.
    MzSqueezed,
    /// Mach–Zehnder read out on the summed phase quadratures of both outputs.
    MzJoint,
    /// MZ at T → 1, r = 0, with the given losses.
    EffectiveSql,
    Su11Single,
    Su11Joint,
}

impl Scheme {
    pub const ALL: [Scheme; 6] = [
        Scheme::Sql,
        Scheme::MzSqueezed,
        Scheme::MzJoint,
        Scheme::EffectiveSql,
        Scheme::Su11Single,
        Scheme::Su11Joint,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Scheme::Sql => "sql",
            Scheme::MzSqueezed => "mz_squeezed",
            Scheme::MzJoint => "mz_joint",
            Scheme::EffectiveSql => "effective_sql",
            Scheme::Su11Single => "su11_single",
            Scheme::Su11Joint => "su11_joint",
        }
    }

    pub fn from_name(name: &str) -> Option<Scheme> {
        Scheme::ALL.into_iter().find(|s| s.name() == name)
    }

    pub fn detection(self) -> Detection {
        match self {
            Scheme::MzJoint | Scheme::Su11Joint => Detection::Joint,
            _ => Detection::SingleB,
        }
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Detection {
    /// Phase quadrature of output b₂ only.
    SingleB,
    /// Sum of the phase quadratures of both outputs.
    Joint,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    ClosedForm,
    Simulated,
}

/// Δε in radians.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseSensitivity {
    pub value: f64,
    pub detection: Detection,
}

/// A Δg/g value with its provenance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SensitivityResult {
    pub value: f64,
    pub scheme: Scheme,
    pub detection: Detection,
    pub method: Method,
    /// Photons that traverse the elevated arm.
    pub n_sig: f64,
}

impl SensitivityResult {
    fn closed(scheme: Scheme, value: f64, n_sig: f64) -> Self {
        SensitivityResult {
            value,
            scheme,
            detection: scheme.detection(),
            method: Method::ClosedForm,
            n_sig,
        }
    }
}

/// Losses as amplitude transmittances; η² = 1 − t².
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Losses {
    pub internal: f64,
    pub external: f64,
}

impl Losses {
    pub const NONE: Losses = Losses {
        internal: 1.0,
        external: 1.0,
    };

    pub fn new(internal: f64, external: f64) -> Self {
        Losses { internal, external }
    }

    fn validate(&self) -> Result<()> {
        for (name, t) in [("t1", self.internal), ("t2", self.external)] {
            if !(t > 0.0 && t <= 1.0) {
                return Err(Error::domain(format!("{name} must lie in (0, 1], got {t}")));
            }
        }
        Ok(())
    }

    fn eta1_sq(&self) -> f64 {
        1.0 - self.internal * self.internal
    }

    fn eta2_sq(&self) -> f64 {
        1.0 - self.external * self.external
    }

    fn product(&self) -> f64 {
        self.internal * self.external
    }
}

fn check_n_sig(n_sig: f64) -> Result<()> {
    if !(n_sig.is_finite() && n_sig > 0.0) {
        return Err(Error::domain(format!("signal photon number must be > 0, got {n_sig}")));
    }
    Ok(())
}

fn check_transmittance(t: f64) -> Result<()> {
    if !(t > 0.0 && t <= 1.0) {
        return Err(Error::domain(format!("beamsplitter transmittance must lie in (0, 1], got {t}")));
    }
    Ok(())
}

fn check_squeeze(name: &str, r: f64) -> Result<()> {
    if !(r.is_finite() && r >= 0.0) {
        return Err(Error::domain(format!("{name} must be >= 0, got {r}")));
    }
    Ok(())
}

fn lever_arm(geometry: &GeometryConfig) -> Result<f64> {
    geometry.validate()?;
    let kappa = geometry.phase_closed_form();
    if kappa <= 0.0 {
        return Err(Error::domain("geometry produces no gravitational phase (H = 0 or g = 0)"));
    }
    Ok(kappa)
}

/// N_sig = (1 − T)·N₀.
pub fn n_sig_mz(transmittance: f64, n0: f64) -> f64 {
    (1.0 - transmittance) * n0
}

/// N_sig = sinh²(r₁)·(N₀ + 1).
pub fn n_sig_su11(r1: f64, n0: f64) -> f64 {
    r1.sinh().powi(2) * (n0 + 1.0)
}

/// Single-output phase sensitivity 1/(2√T·√N_sig).
pub fn mz_phase_single(transmittance: f64, n_sig: f64) -> Result<PhaseSensitivity> {
    check_transmittance(transmittance)?;
    check_n_sig(n_sig)?;
    Ok(PhaseSensitivity {
        value: 1.0 / (transmittance.sqrt() * 2.0 * n_sig.sqrt()),
        detection: Detection::SingleB,
    })
}

/// Joint-quadrature phase sensitivity √2/((√T + √(1−T))·2√N_sig).
pub fn mz_phase_joint(transmittance: f64, n_sig: f64) -> Result<PhaseSensitivity> {
    if !(0.0..=1.0).contains(&transmittance) {
        return Err(Error::domain(format!(
            "beamsplitter transmittance must lie in [0, 1], got {transmittance}"
        )));
    }
    check_n_sig(n_sig)?;
    let split = transmittance.sqrt() + (1.0 - transmittance).sqrt();
    Ok(PhaseSensitivity {
        value: std::f64::consts::SQRT_2 / (split * 2.0 * n_sig.sqrt()),
        detection: Detection::Joint,
    })
}

/// Standard quantum limit 1/(2√N_sig·κ).
pub fn sql(n_sig: f64, geometry: &GeometryConfig) -> Result<SensitivityResult> {
    check_n_sig(n_sig)?;
    let kappa = lever_arm(geometry)?;
    Ok(SensitivityResult::closed(Scheme::Sql, 1.0 / (2.0 * n_sig.sqrt() * kappa), n_sig))
}

/// Squeezed-vacuum MZ with internal and external loss, single-output readout.
pub fn mz_squeezed_lossy(
    transmittance: f64,
    n_sig: f64,
    r: f64,
    losses: Losses,
    geometry: &GeometryConfig,
) -> Result<SensitivityResult> {
    check_transmittance(transmittance)?;
    check_n_sig(n_sig)?;
    check_squeeze("r", r)?;
    losses.validate()?;
    let kappa = lever_arm(geometry)?;
    let tt = losses.product();
    let noise = tt * tt * (-2.0 * r).exp() + losses.eta1_sq() * losses.external.powi(2) + losses.eta2_sq();
    let value = noise.sqrt() / (tt * 2.0 * transmittance.sqrt() * n_sig.sqrt() * kappa);
    Ok(SensitivityResult::closed(Scheme::MzSqueezed, value, n_sig))
}

/// Squeezed-vacuum MZ with loss, joint readout of both outputs.
///
/// At the dark fringe the joint quadrature carries the coherent port's vacuum
/// noise plus the squeezed port's, t₁²t₂²(1 + e^{−2r}); each loss stage adds
/// one vacuum unit per output. The signal slope is 2(√T + √(1−T))·√N_sig·t₁t₂.
/// Reduces to [`mz_phase_joint`]·κ⁻¹ when r = 0 and there is no loss.
pub fn mz_joint_squeezed_lossy(
    transmittance: f64,
    n_sig: f64,
    r: f64,
    losses: Losses,
    geometry: &GeometryConfig,
) -> Result<SensitivityResult> {
    check_transmittance(transmittance)?;
    check_n_sig(n_sig)?;
    check_squeeze("r", r)?;
    losses.validate()?;
    let kappa = lever_arm(geometry)?;
    let tt = losses.product();
    let noise = tt * tt * (1.0 + (-2.0 * r).exp())
        + 2.0 * losses.eta1_sq() * losses.external.powi(2)
        + 2.0 * losses.eta2_sq();
    let split = transmittance.sqrt() + (1.0 - transmittance).sqrt();
    let value = noise.sqrt() / (2.0 * tt * split * n_sig.sqrt() * kappa);
    Ok(SensitivityResult::closed(Scheme::MzJoint, value, n_sig))
}

/// Unsqueezed MZ at T → 1 with loss: the baseline a lossy classical setup reaches.
pub fn effective_sql(n_sig: f64, losses: Losses, geometry: &GeometryConfig) -> Result<SensitivityResult> {
    let mut res = mz_squeezed_lossy(1.0, n_sig, 0.0, losses, geometry)?;
    res.scheme = Scheme::EffectiveSql;
    Ok(res)
}

/// Gain combinations G⁻ = G₁G₂ − g₁g₂ and g⁻ = G₂g₁ − g₂G₁.
fn gain_differences(r1: f64, r2: f64) -> (f64, f64) {
    let (big1, small1) = (r1.cosh(), r1.sinh());
    let (big2, small2) = (r2.cosh(), r2.sinh());
    (big1 * big2 - small1 * small2, big2 * small1 - small2 * big1)
}

/// SU(1,1) interferometer, phase quadrature of b₂ only, general gains.
///
/// Uses √(N_sig − g₁²) for the coherent part of the signal photons.
pub fn su11_single(
    n_sig: f64,
    r1: f64,
    r2: f64,
    losses: Losses,
    geometry: &GeometryConfig,
) -> Result<SensitivityResult> {
    check_n_sig(n_sig)?;
    check_squeeze("r1", r1)?;
    check_squeeze("r2", r2)?;
    losses.validate()?;
    let kappa = lever_arm(geometry)?;
    let seeded = n_sig - r1.sinh().powi(2);
    if seeded <= 0.0 {
        return Err(Error::domain(format!(
            "signal photon number {n_sig} does not exceed the spontaneous contribution sinh²(r1)"
        )));
    }
    let (big_minus, small_minus) = gain_differences(r1, r2);
    let big2_sq = r2.cosh().powi(2);
    let small2_sq = r2.sinh().powi(2);
    let tt = losses.product();
    let noise = tt * tt * (small_minus * small_minus + big_minus * big_minus) / big2_sq
        + losses.eta1_sq() * losses.external.powi(2) * (1.0 + small2_sq / big2_sq)
        + losses.eta2_sq() / big2_sq;
    let value = noise.sqrt() / (2.0 * tt * seeded.sqrt() * kappa);
    Ok(SensitivityResult::closed(Scheme::Su11Single, value, n_sig))
}

/// SU(1,1) single-output form specialised to equal gains r₁ = r₂ = `r`.
pub fn su11_single_balanced(n_sig: f64, r: f64, losses: Losses, geometry: &GeometryConfig) -> Result<SensitivityResult> {
    check_n_sig(n_sig)?;
    check_squeeze("r", r)?;
    losses.validate()?;
    let kappa = lever_arm(geometry)?;
    let big_sq = r.cosh().powi(2);
    let small_sq = r.sinh().powi(2);
    let tt = losses.product();
    let noise = tt * tt / big_sq
        + losses.eta1_sq() * losses.external.powi(2) * (1.0 + small_sq / big_sq)
        + losses.eta2_sq() / big_sq;
    let value = noise.sqrt() / (2.0 * tt * n_sig.sqrt() * kappa);
    Ok(SensitivityResult::closed(Scheme::Su11Single, value, n_sig))
}

/// SU(1,1) interferometer with joint readout of both outputs.
pub fn su11_joint(
    n_sig: f64,
    r1: f64,
    r2: f64,
    losses: Losses,
    geometry: &GeometryConfig,
) -> Result<SensitivityResult> {
    check_n_sig(n_sig)?;
    check_squeeze("r1", r1)?;
    check_squeeze("r2", r2)?;
    losses.validate()?;
    let kappa = lever_arm(geometry)?;
    let tt = losses.product();
    let noise = 2.0 * tt * tt * (-2.0 * r1).exp()
        + 2.0 * losses.eta1_sq() * losses.external.powi(2)
        + 2.0 * (-2.0 * r2).exp() * losses.eta2_sq();
    let value = noise.sqrt() / (2.0 * tt * n_sig.sqrt() * kappa);
    Ok(SensitivityResult::closed(Scheme::Su11Joint, value, n_sig))
}
