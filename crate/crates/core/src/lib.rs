//! Gravimetry with optical interferometers in a weak Schwarzschild field.
//!
//! * [`schwarzschild`]: proper lengths, coordinate and proper times, and the
//!   gravitational phase between an elevated and a ground-level arm.
//! * [`gaussian`]: covariance-matrix simulation of multimode Gaussian states.
//! * [`interferometer`]: Mach–Zehnder and SU(1,1) interferometers built from
//!   Gaussian elements, with simulated Δg/g.
//! * [`closed_form`]: analytic Δg/g for the same set of schemes.
//! * [`sweep`]: parameter sweeps, crossover searches and CSV output.
//!
//! ```
//! use qgrav::closed_form::sql;
//! use qgrav::sweep::{Param, Params};
//!
//! let geo = Params::default().geometry();
//! let dg = sql(1e18, &geo).unwrap().value;
//! assert!((dg - 9.30e-5).abs() < 1e-7);
//! ```

pub mod closed_form;
pub mod error;
pub mod gaussian;
pub mod interferometer;
pub mod quadrature;
pub mod roots;
pub mod schwarzschild;
pub mod sweep;

pub use error::{Error, Result};
