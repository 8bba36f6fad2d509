//! Light propagation through the exterior Schwarzschild geometry of a
//! non-rotating Earth.
//!
//! Lengths and coordinate times are computed in geometric units (c = 1, all
//! quantities in metres) and converted to seconds only at the public surface.
//! Each travel-time quantity comes in two flavours: an exact form obtained by
//! quadrature of the un-expanded integrand, and the first-order weak-field
//! form. The interferometer phase uses the first-order forms throughout.

use crate::error::{Error, Result};
use crate::quadrature::{self, Tolerance};

/// Schwarzschild radius of the Earth, 2GM/c², in metres.
pub const EARTH_SCHWARZSCHILD_RADIUS: f64 = 8.87e-3;
/// Mean Earth radius in metres.
pub const EARTH_RADIUS: f64 = 6.371e6;
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;
/// Largest r_s / R accepted; beyond this the first-order expansions stop being meaningful.
pub const WEAK_FIELD_LIMIT: f64 = 1e-3;

/// Schwarzschild background plus the apparatus dimensions.
///
/// `omega` is used exactly as given in ψ = ω·Δτ, with no implicit factor of
/// 2π: the conventional value for a 1064 nm source is 2.82e14.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeometryConfig {
    /// r_s in metres.
    pub schwarzschild_radius: f64,
    /// Radial coordinate R₂ of the ground, metres.
    pub ground_radius: f64,
    /// Proper height H of the vertical arms, metres.
    pub height: f64,
    /// Proper length L of the upper horizontal arm, metres.
    pub length: f64,
    pub omega: f64,
    pub c: f64,
}

impl Default for GeometryConfig {
    fn default() -> Self {
        Self::earth()
    }
}

impl GeometryConfig {
    /// Earth constants with a 50 m tower and a 1 km upper arm.
    pub fn earth() -> Self {
        GeometryConfig {
            schwarzschild_radius: EARTH_SCHWARZSCHILD_RADIUS,
            ground_radius: EARTH_RADIUS,
            height: 50.0,
            length: 1000.0,
            omega: 2.82e14,
            c: SPEED_OF_LIGHT,
        }
    }

    /// Builds a geometry whose local acceleration at the ground equals `g`,
    /// by choosing r_s = 2 g R₂² / c².
    pub fn from_surface_gravity(
        g: f64,
        ground_radius: f64,
        height: f64,
        length: f64,
        omega: f64,
        c: f64,
    ) -> Self {
        GeometryConfig {
            schwarzschild_radius: 2.0 * g * ground_radius * ground_radius / (c * c),
            ground_radius,
            height,
            length,
            omega,
            c,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let r_s = self.schwarzschild_radius;
        if !(r_s.is_finite() && r_s >= 0.0) {
            return Err(Error::domain(format!("schwarzschild radius must be >= 0, got {r_s}")));
        }
        check_exterior(r_s, self.ground_radius)?;
        if r_s / self.ground_radius >= WEAK_FIELD_LIMIT {
            return Err(Error::domain(format!(
                "r_s / R2 = {:e} exceeds the weak-field limit {WEAK_FIELD_LIMIT:e}",
                r_s / self.ground_radius
            )));
        }
        if !(self.height.is_finite() && self.height >= 0.0) {
            return Err(Error::domain(format!("height must be >= 0, got {}", self.height)));
        }
        if !(self.length.is_finite() && self.length >= 0.0) {
            return Err(Error::domain(format!("arm length must be >= 0, got {}", self.length)));
        }
        if !(self.omega.is_finite() && self.omega > 0.0) {
            return Err(Error::domain(format!("omega must be > 0, got {}", self.omega)));
        }
        if !(self.c.is_finite() && self.c > 0.0) {
            return Err(Error::domain(format!("c must be > 0, got {}", self.c)));
        }
        Ok(())
    }

    /// Local gravitational acceleration at the ground, m/s².
    pub fn surface_gravity(&self) -> f64 {
        self.schwarzschild_radius * self.c * self.c
            / (2.0 * self.ground_radius * self.ground_radius)
    }

    /// Closed-form gravitational phase ω·g·(HL + H²)/c³.
    ///
    /// This is also dψ/dg·g, the lever arm that converts phase sensitivity
    /// into Δg/g.
    pub fn phase_closed_form(&self) -> f64 {
        let h = self.height;
        self.omega * self.surface_gravity() * (h * self.length + h * h) / self.c.powi(3)
    }
}

fn check_exterior(r_s: f64, r: f64) -> Result<()> {
    if !(r.is_finite() && r > r_s) {
        return Err(Error::domain(format!(
            "radius {r} must lie outside the Schwarzschild radius {r_s}"
        )));
    }
    Ok(())
}

fn check_interval(r_s: f64, top: f64, ground: f64) -> Result<()> {
    check_exterior(r_s, ground)?;
    if !(top.is_finite() && top > ground) {
        return Err(Error::domain(format!(
            "upper radius {top} must exceed ground radius {ground}"
        )));
    }
    Ok(())
}

fn tight() -> Tolerance {
    Tolerance {
        absolute: 1e-300,
        relative: 1e-14,
        max_intervals: 200,
    }
}

/// Exact proper distance ∫ dr / √(1 − r_s/r) between two radii, in metres.
///
/// Only the excess over the flat-space distance goes through quadrature, so
/// the dominant `top - ground` term carries no quadrature error.
pub fn proper_height_exact(r_s: f64, top: f64, ground: f64) -> Result<f64> {
    check_interval(r_s, top, ground)?;
    if r_s == 0.0 {
        return Ok(top - ground);
    }
    // 1/√(1−x) − 1 without cancellation
    let excess = |r: f64| {
        let x = r_s / r;
        let s = (1.0 - x).sqrt();
        x / (s * (1.0 + s))
    };
    let integral = quadrature::integrate(excess, ground, top, tight())?;
    Ok((top - ground) + integral.value)
}

/// First-order proper distance R₁ − R₂ + (r_s/2)·ln(R₁/R₂), in metres.
pub fn proper_height_approx(r_s: f64, top: f64, ground: f64) -> Result<f64> {
    check_interval(r_s, top, ground)?;
    let dr = top - ground;
    Ok(dr + 0.5 * r_s * (dr / ground).ln_1p())
}

/// Coordinate separation R₁ − R₂ that yields proper height `height` under the
/// first-order relation, found by Newton iteration from ΔR = H.
pub fn radial_separation(r_s: f64, ground: f64, height: f64) -> Result<f64> {
    check_exterior(r_s, ground)?;
    if !(height.is_finite() && height >= 0.0) {
        return Err(Error::domain(format!("height must be >= 0, got {height}")));
    }
    let mut dr = height;
    for _ in 0..8 {
        let residual = dr + 0.5 * r_s * (dr / ground).ln_1p() - height;
        let slope = 1.0 + 0.5 * r_s / (ground + dr);
        let step = residual / slope;
        dr -= step;
        if step.abs() <= 1e-16 * height {
            break;
        }
    }
    Ok(dr)
}

/// Coordinate time for one vertical traversal, in seconds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerticalTime {
    /// ∫ dr / (1 − r_s/r) by quadrature.
    pub exact: f64,
    /// R₁ − R₂ + r_s·ln(R₁/R₂).
    pub approx: f64,
}

pub fn coord_time_vertical(r_s: f64, top: f64, ground: f64, c: f64) -> Result<VerticalTime> {
    check_interval(r_s, top, ground)?;
    let dr = top - ground;
    let approx = dr + r_s * (dr / ground).ln_1p();
    let exact = if r_s == 0.0 {
        dr
    } else {
        // 1/(1−r_s/r) − 1 = r_s/(r − r_s)
        let excess = |r: f64| r_s / (r - r_s);
        dr + quadrature::integrate(excess, ground, top, tight())?.value
    };
    Ok(VerticalTime {
        exact: exact / c,
        approx: approx / c,
    })
}

/// Coordinate time L / √(1 − r_s/R₁) along a horizontal arm at radius R₁, seconds.
pub fn coord_time_horizontal(r_s: f64, radius: f64, length: f64, c: f64) -> Result<f64> {
    check_exterior(r_s, radius)?;
    if !(length.is_finite() && length >= 0.0) {
        return Err(Error::domain(format!("arm length must be >= 0, got {length}")));
    }
    Ok(length / (1.0 - r_s / radius).sqrt() / c)
}

/// Converts a coordinate time into the time read by a clock at radius R₂.
pub fn local_time(r_s: f64, ground: f64, t_coord: f64) -> Result<f64> {
    check_exterior(r_s, ground)?;
    Ok((1.0 - r_s / ground).sqrt() * t_coord)
}

/// Local gravitational acceleration r_s c² / (2 R₂²), m/s².
pub fn local_g(r_s: f64, ground: f64, c: f64) -> Result<f64> {
    check_exterior(r_s, ground)?;
    Ok(r_s * c * c / (2.0 * ground * ground))
}

/// Ground-clock travel times of both interferometer paths and the resulting
/// gravitational phase.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PathTimes {
    /// Local time of the elevated signal path, seconds.
    pub tau_signal: f64,
    /// Local time of the ground-level reference path, seconds.
    pub tau_reference: f64,
    /// (r_s/2)(ΔR·L + ΔR²)/R₂², seconds.
    pub delta_tau: f64,
    /// Same difference before R₁R₂ is replaced by R₂² in the L term.
    pub delta_tau_unsubstituted: f64,
    /// ω·Δτ, radians.
    pub psi: f64,
    /// Coordinate separation R₁ − R₂, metres.
    pub radial_separation: f64,
    /// Radius R₁ of the upper arm, metres.
    pub top_radius: f64,
}

/// Evaluates both paths of the fountain for `config`.
///
/// Both paths share proper length 2H + L. `delta_tau` is computed from the
/// first-order closed expression rather than by subtracting the two path
/// times, which agree to roughly one part in 10¹⁵.
pub fn path_times(config: &GeometryConfig) -> Result<PathTimes> {
    config.validate()?;
    let r_s = config.schwarzschild_radius;
    let ground = config.ground_radius;
    let len = config.length;
    let c = config.c;

    let dr = radial_separation(r_s, ground, config.height)?;
    let top = ground + dr;
    let log_ratio = (dr / ground).ln_1p();

    let ground_rate = (1.0 - r_s / ground).sqrt();
    let top_rate = (1.0 - r_s / top).sqrt();
    let vertical = dr + r_s * log_ratio;
    let tau_signal = ground_rate * (len / top_rate + 2.0 * vertical) / c;
    let tau_reference = (len + 2.0 * (dr + 0.5 * r_s * log_ratio)) / c;

    let delta_tau = 0.5 * r_s * (dr * len + dr * dr) / (ground * ground) / c;
    let delta_tau_unsubstituted =
        0.5 * r_s * (dr * len / (top * ground) + dr * dr / (ground * ground)) / c;

    Ok(PathTimes {
        tau_signal,
        tau_reference,
        delta_tau,
        delta_tau_unsubstituted,
        psi: config.omega * delta_tau,
        radial_separation: dr,
        top_radius: top,
    })
}
