use std::fmt;

use crate::error::{Error, Result};
use crate::schwarzschild::{GeometryConfig, EARTH_RADIUS};

/// Every named input a sweep can fix or vary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Param {
    NSig,
    Transmittance,
    Squeeze,
    SqueezePhase,
    R1,
    R2,
    T1,
    T2,
    Height,
    Length,
    Omega,
    G,
    C,
    GroundRadius,
}

impl Param {
    pub const ALL: [Param; 14] = [
        Param::NSig,
        Param::Transmittance,
        Param::Squeeze,
        Param::SqueezePhase,
        Param::R1,
        Param::R2,
        Param::T1,
        Param::T2,
        Param::Height,
        Param::Length,
        Param::Omega,
        Param::G,
        Param::C,
        Param::GroundRadius,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Param::NSig => "n_sig",
            Param::Transmittance => "T",
            Param::Squeeze => "r",
            Param::SqueezePhase => "xi",
            Param::R1 => "r1",
            Param::R2 => "r2",
            Param::T1 => "t1",
            Param::T2 => "t2",
            Param::Height => "H",
            Param::Length => "L",
            Param::Omega => "omega",
            Param::G => "g",
            Param::C => "c",
            Param::GroundRadius => "ground_radius",
        }
    }

    pub fn from_name(name: &str) -> Option<Param> {
        Param::ALL.into_iter().find(|p| p.name() == name)
    }

    pub fn parse(name: &str) -> Result<Param> {
        Param::from_name(name).ok_or_else(|| {
            let known: Vec<_> = Param::ALL.iter().map(|p| p.name()).collect();
            Error::spec(name, format!("unknown parameter; expected one of {}", known.join(", ")))
        })
    }

    /// Defaults follow the figure captions: g = 9.8 m/s², c = 3e8 m/s,
    /// ω = 2.82e14, H = 50 m, L = 1000 m, N_sig = 1e18.
    pub fn default_value(self) -> f64 {
        match self {
            Param::NSig => 1e18,
            Param::Transmittance => 1.0,
            Param::Squeeze | Param::SqueezePhase => 0.0,
            Param::R1 | Param::R2 => 1.0,
            Param::T1 | Param::T2 => 1.0,
            Param::Height => 50.0,
            Param::Length => 1000.0,
            Param::Omega => 2.82e14,
            Param::G => 9.8,
            Param::C => 3e8,
            Param::GroundRadius => EARTH_RADIUS,
        }
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A full assignment of every [`Param`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Params {
    values: [f64; Param::ALL.len()],
}

impl Default for Params {
    fn default() -> Self {
        Params {
            values: Param::ALL.map(Param::default_value),
        }
    }
}

impl Params {
    pub fn get(&self, p: Param) -> f64 {
        self.values[p as usize]
    }

    pub fn set(&mut self, p: Param, value: f64) {
        self.values[p as usize] = value;
    }

    pub fn with(mut self, p: Param, value: f64) -> Self {
        self.set(p, value);
        self
    }

    /// Parses `key=value`, as accepted on the command line.
    pub fn set_from_str(&mut self, assignment: &str) -> Result<()> {
        let (key, value) = assignment
            .split_once('=')
            .ok_or_else(|| Error::spec(assignment, "expected key=value"))?;
        let param = Param::parse(key.trim())?;
        let value: f64 = value
            .trim()
            .parse()
            .map_err(|_| Error::spec(key.trim(), format!("'{}' is not a number", value.trim())))?;
        self.set(param, value);
        Ok(())
    }

    pub fn geometry(&self) -> GeometryConfig {
        GeometryConfig::from_surface_gravity(
            self.get(Param::G),
            self.get(Param::GroundRadius),
            self.get(Param::Height),
            self.get(Param::Length),
            self.get(Param::Omega),
            self.get(Param::C),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for p in Param::ALL {
            assert_eq!(Param::from_name(p.name()), Some(p));
        }
        assert!(Param::parse("R2").is_err());
    }

    #[test]
    fn assignment_parsing() {
        let mut p = Params::default();
        p.set_from_str("t2 = 0.9").unwrap();
        assert_eq!(p.get(Param::T2), 0.9);
        p.set_from_str("n_sig=7.1e24").unwrap();
        assert_eq!(p.get(Param::NSig), 7.1e24);
        assert!(p.set_from_str("t2").is_err());
        assert!(p.set_from_str("t2=abc").is_err());
        assert!(p.set_from_str("bogus=1").is_err());
    }

    #[test]
    fn geometry_reproduces_g() {
        let geo = Params::default().geometry();
        assert!((geo.surface_gravity() - 9.8).abs() < 1e-13);
    }
}
