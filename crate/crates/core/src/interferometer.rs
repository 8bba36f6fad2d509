//! End-to-end Gaussian simulation of the two fountain interferometers.
//!
//! Mode 0 is the reference arm (`a`), mode 1 the elevated signal arm (`b`).
//!
//! Mach–Zehnder: optional squeezed vacuum into b₀ → BS1 → internal loss on
//! both arms → phase ε₀ + ε_G on b → BS2 → external loss on both outputs.
//!
//! SU(1,1): AP1 → internal loss on both arms → phase ε_G on b → AP2 with pump
//! phase ε₀ → external loss on both outputs. With ε₀ = π the second amplifier
//! undoes the first and the outputs sit on the dark fringe.

use std::f64::consts::PI;

use crate::closed_form::{Detection, Losses, Method, Scheme, SensitivityResult};
use crate::error::{Error, Result};
use crate::gaussian::{Element, GaussianState, HomodyneStats, PHASE_QUADRATURE};
use crate::schwarzschild::{path_times, GeometryConfig};

const REFERENCE: usize = 0;
const SIGNAL: usize = 1;

/// Simulation never uses T above this; at T = 1 no light reaches the signal arm.
pub const MAX_SIMULATED_TRANSMITTANCE: f64 = 1.0 - 1e-6;

/// |ε_G| beyond which the linear-response reading of the output is unreliable.
pub const LINEAR_REGIME: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Topology {
    MachZehnder,
    Su11,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InterferometerConfig {
    pub topology: Topology,
    /// Beamsplitter intensity transmittance (Mach–Zehnder only).
    pub transmittance: f64,
    /// Amplifier squeezing parameters (SU(1,1) only).
    pub r1: f64,
    pub r2: f64,
    /// Mean photon number N₀ of the coherent input.
    pub n0: f64,
    /// Squeezed vacuum in the Mach–Zehnder dark port; 0 means plain vacuum.
    pub squeeze_r: f64,
    pub squeeze_phase: f64,
    pub losses: Losses,
    pub epsilon0: f64,
    pub detection: Detection,
}

impl InterferometerConfig {
    pub fn mach_zehnder(transmittance: f64, n0: f64) -> Self {
        InterferometerConfig {
            topology: Topology::MachZehnder,
            transmittance,
            r1: 0.0,
            r2: 0.0,
            n0,
            squeeze_r: 0.0,
            squeeze_phase: 0.0,
            losses: Losses::NONE,
            epsilon0: PI,
            detection: Detection::SingleB,
        }
    }

    pub fn su11(r1: f64, r2: f64, n0: f64) -> Self {
        InterferometerConfig {
            topology: Topology::Su11,
            r1,
            r2,
            transmittance: 0.5,
            ..Self::mach_zehnder(0.5, n0)
        }
    }

    pub fn with_squeezing(mut self, r: f64, xi: f64) -> Self {
        self.squeeze_r = r;
        self.squeeze_phase = xi;
        self
    }

    pub fn with_losses(mut self, internal: f64, external: f64) -> Self {
        self.losses = Losses::new(internal, external);
        self
    }

    pub fn with_detection(mut self, detection: Detection) -> Self {
        self.detection = detection;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let unit = |name: &str, v: f64| {
            if (0.0..=1.0).contains(&v) {
                Ok(())
            } else {
                Err(Error::Config(format!("{name} must lie in [0, 1], got {v}")))
            }
        };
        let non_negative = |name: &str, v: f64| {
            if v.is_finite() && v >= 0.0 {
                Ok(())
            } else {
                Err(Error::Config(format!("{name} must be finite and >= 0, got {v}")))
            }
        };
        unit("T", self.transmittance)?;
        unit("t1", self.losses.internal)?;
        unit("t2", self.losses.external)?;
        non_negative("r", self.squeeze_r)?;
        non_negative("r1", self.r1)?;
        non_negative("r2", self.r2)?;
        non_negative("N0", self.n0)?;
        if !self.epsilon0.is_finite() || !self.squeeze_phase.is_finite() {
            return Err(Error::Config("phases must be finite".into()));
        }
        Ok(())
    }

    /// Photons that traverse the elevated arm.
    pub fn n_sig(&self) -> f64 {
        match self.topology {
            Topology::MachZehnder => (1.0 - self.transmittance) * self.n0,
            Topology::Su11 => self.r1.sinh().powi(2) * (self.n0 + 1.0),
        }
    }

    pub fn scheme(&self) -> Scheme {
        match (self.topology, self.detection) {
            (Topology::MachZehnder, Detection::SingleB) => Scheme::MzSqueezed,
            (Topology::MachZehnder, Detection::Joint) => Scheme::MzJoint,
            (Topology::Su11, Detection::SingleB) => Scheme::Su11Single,
            (Topology::Su11, Detection::Joint) => Scheme::Su11Joint,
        }
    }

    /// Optical elements between the input state and the detectors.
    pub fn elements(&self, epsilon_g: f64) -> Vec<Element> {
        let Losses { internal, external } = self.losses;
        let mut out = Vec::with_capacity(10);
        match self.topology {
            Topology::MachZehnder => {
                if self.squeeze_r > 0.0 {
                    out.push(Element::Squeeze {
                        mode: SIGNAL,
                        r: self.squeeze_r,
                        xi: self.squeeze_phase,
                    });
                }
                let split = Element::Beamsplitter {
                    a: REFERENCE,
                    b: SIGNAL,
                    transmittance: self.transmittance,
                };
                out.push(split);
                out.push(Element::Loss { mode: REFERENCE, t: internal });
                out.push(Element::Loss { mode: SIGNAL, t: internal });
                out.push(Element::Phase {
                    mode: SIGNAL,
                    theta: self.epsilon0 + epsilon_g,
                });
                out.push(split);
            }
            Topology::Su11 => {
                out.push(Element::TwoModeSqueeze {
                    a: REFERENCE,
                    b: SIGNAL,
                    r: self.r1,
                    pump_phase: 0.0,
                });
                out.push(Element::Loss { mode: REFERENCE, t: internal });
                out.push(Element::Loss { mode: SIGNAL, t: internal });
                out.push(Element::Phase {
                    mode: SIGNAL,
                    theta: epsilon_g,
                });
                out.push(Element::TwoModeSqueeze {
                    a: REFERENCE,
                    b: SIGNAL,
                    r: self.r2,
                    pump_phase: self.epsilon0,
                });
            }
        }
        out.push(Element::Loss { mode: REFERENCE, t: external });
        out.push(Element::Loss { mode: SIGNAL, t: external });
        out
    }

    /// State at the detectors for gravitational phase `epsilon_g`.
    pub fn output_state(&self, epsilon_g: f64) -> Result<GaussianState> {
        self.validate()?;
        let mut state = GaussianState::coherent(2, REFERENCE, self.n0.sqrt(), 0.0)?;
        state.apply_all(&self.elements(epsilon_g))?;
        Ok(state)
    }
}

/// Detected phase-quadrature statistics at total phase offset ε₀ + ε_G.
///
/// Results are meaningful as linear response only for |ε_G| ≲ [`LINEAR_REGIME`].
pub fn run(config: &InterferometerConfig, epsilon_g: f64) -> Result<HomodyneStats> {
    let state = config.output_state(epsilon_g)?;
    match config.detection {
        Detection::SingleB => state.homodyne_stats(SIGNAL, PHASE_QUADRATURE),
        Detection::Joint => state.joint_quadrature_stats(REFERENCE, SIGNAL, PHASE_QUADRATURE),
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimulationOptions {
    /// Operating point ε_G.
    pub epsilon_g: f64,
    /// Central-difference step for d⟨X⟩/dε.
    pub step: f64,
}

impl Default for SimulationOptions {
    fn default() -> Self {
        SimulationOptions {
            epsilon_g: 0.0,
            step: 1e-7,
        }
    }
}

/// Δg/g = √Var(X) / (|d⟨X⟩/dε|·ψ), with the slope from a central difference
/// and ψ from [`path_times`].
///
/// Mach–Zehnder transmittance is capped at [`MAX_SIMULATED_TRANSMITTANCE`].
pub fn simulate_sensitivity(
    config: &InterferometerConfig,
    geometry: &GeometryConfig,
    options: SimulationOptions,
) -> Result<SensitivityResult> {
    let mut config = *config;
    config.transmittance = config.transmittance.min(MAX_SIMULATED_TRANSMITTANCE);
    config.validate()?;
    let psi = path_times(geometry)?.psi;
    if psi <= 0.0 {
        return Err(Error::domain("geometry produces no gravitational phase (H = 0 or g = 0)"));
    }
    let h = options.step;
    let upper = run(&config, options.epsilon_g + h)?;
    let lower = run(&config, options.epsilon_g - h)?;
    let centre = run(&config, options.epsilon_g)?;
    let slope = (upper.mean - lower.mean) / (2.0 * h);
    if slope.is_nan() || slope.abs() < 1e-300 {
        return Err(Error::DerivativeUnderflow { slope });
    }
    Ok(SensitivityResult {
        value: centre.variance.sqrt() / (slope.abs() * psi),
        scheme: config.scheme(),
        detection: config.detection,
        method: Method::Simulated,
        n_sig: config.n_sig(),
    })
}

/// Input photon number giving `n_sig` signal photons in a Mach–Zehnder with
/// transmittance `transmittance` (capped as in simulation).
pub fn n0_for_mz(transmittance: f64, n_sig: f64) -> f64 {
    n_sig / (1.0 - transmittance.min(MAX_SIMULATED_TRANSMITTANCE))
}

/// Input photon number giving `n_sig` signal photons after an amplifier of gain `r1`.
pub fn n0_for_su11(r1: f64, n_sig: f64) -> Result<f64> {
    let g_sq = r1.sinh().powi(2);
    if g_sq <= 0.0 || n_sig < g_sq {
        return Err(Error::domain(format!(
            "an amplifier with r1 = {r1} cannot deliver {n_sig} signal photons"
        )));
    }
    Ok(n_sig / g_sq - 1.0)
}
