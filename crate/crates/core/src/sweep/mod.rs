//! Parameter sweeps and crossover searches over the sensitivity engines.
//!
//! A [`SweepSpec`] fixes every [`Param`], varies one of them over a grid and
//! evaluates a list of [`Column`]s at each grid point. Grid points are
//! evaluated in parallel and gathered by index, so output order never
//! depends on scheduling.

mod config;
mod output;
mod params;
pub mod presets;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::closed_form::{self, Detection, Losses, Method, Scheme, SensitivityResult};
use crate::error::{Error, Result};
use crate::interferometer::{
    n0_for_mz, n0_for_su11, simulate_sensitivity, InterferometerConfig, SimulationOptions,
};
use crate::roots;

pub use config::parse_spec;
pub use output::{emit_csv, format_value, write_csv};
pub use params::{Param, Params};

/// A scheme plus the engine that evaluates it, written `mz_squeezed` or
/// `simulated:mz_squeezed`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Engine {
    pub scheme: Scheme,
    pub method: Method,
}

impl Engine {
    pub fn closed(scheme: Scheme) -> Self {
        Engine {
            scheme,
            method: Method::ClosedForm,
        }
    }

    pub fn simulated(scheme: Scheme) -> Self {
        Engine {
            scheme,
            method: Method::Simulated,
        }
    }

    /// Δg/g for this engine at `params`.
    pub fn evaluate(&self, params: &Params) -> Result<SensitivityResult> {
        match self.method {
            Method::ClosedForm => evaluate_closed(self.scheme, params),
            Method::Simulated => evaluate_simulated(self.scheme, params),
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.method {
            Method::ClosedForm => write!(f, "{}", self.scheme),
            Method::Simulated => write!(f, "simulated:{}", self.scheme),
        }
    }
}

impl FromStr for Engine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (method, name) = match s.strip_prefix("simulated:") {
            Some(rest) => (Method::Simulated, rest),
            None => (Method::ClosedForm, s),
        };
        let scheme = Scheme::from_name(name).ok_or_else(|| {
            let known: Vec<_> = Scheme::ALL.iter().map(|s| s.name()).collect();
            Error::spec(
                "scheme",
                format!("unknown scheme '{s}'; expected one of {} (optionally prefixed simulated:)", known.join(", ")),
            )
        })?;
        Ok(Engine { scheme, method })
    }
}

fn evaluate_closed(scheme: Scheme, p: &Params) -> Result<SensitivityResult> {
    let geo = p.geometry();
    let n_sig = p.get(Param::NSig);
    let losses = Losses::new(p.get(Param::T1), p.get(Param::T2));
    let t = p.get(Param::Transmittance);
    let r = p.get(Param::Squeeze);
    match scheme {
        Scheme::Sql => closed_form::sql(n_sig, &geo),
        Scheme::MzSqueezed => closed_form::mz_squeezed_lossy(t, n_sig, r, losses, &geo),
        Scheme::MzJoint => closed_form::mz_joint_squeezed_lossy(t, n_sig, r, losses, &geo),
        Scheme::EffectiveSql => closed_form::effective_sql(n_sig, losses, &geo),
        Scheme::Su11Single => closed_form::su11_single(n_sig, p.get(Param::R1), p.get(Param::R2), losses, &geo),
        Scheme::Su11Joint => closed_form::su11_joint(n_sig, p.get(Param::R1), p.get(Param::R2), losses, &geo),
    }
}

/// Builds the simulator configuration equivalent to `scheme` at `p`, with N₀
/// chosen so the signal arm carries `n_sig` photons.
pub fn interferometer_config(scheme: Scheme, p: &Params) -> Result<InterferometerConfig> {
    let n_sig = p.get(Param::NSig);
    let t1 = p.get(Param::T1);
    let t2 = p.get(Param::T2);
    let mz = |t: f64, r: f64, losses: (f64, f64), detection| {
        InterferometerConfig::mach_zehnder(t, n0_for_mz(t, n_sig))
            .with_squeezing(r, p.get(Param::SqueezePhase))
            .with_losses(losses.0, losses.1)
            .with_detection(detection)
    };
    let cfg = match scheme {
        Scheme::Sql => mz(1.0, 0.0, (1.0, 1.0), Detection::SingleB),
        Scheme::EffectiveSql => mz(1.0, 0.0, (t1, t2), Detection::SingleB),
        Scheme::MzSqueezed | Scheme::MzJoint => mz(
            p.get(Param::Transmittance),
            p.get(Param::Squeeze),
            (t1, t2),
            scheme.detection(),
        ),
        Scheme::Su11Single | Scheme::Su11Joint => {
            let r1 = p.get(Param::R1);
            InterferometerConfig::su11(r1, p.get(Param::R2), n0_for_su11(r1, n_sig)?)
                .with_losses(t1, t2)
                .with_detection(scheme.detection())
        }
    };
    Ok(cfg)
}

fn evaluate_simulated(scheme: Scheme, p: &Params) -> Result<SensitivityResult> {
    let cfg = interferometer_config(scheme, p)?;
    let mut res = simulate_sensitivity(&cfg, &p.geometry(), SimulationOptions::default())?;
    res.scheme = scheme;
    Ok(res)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Spacing {
    Linear,
    Log,
}

impl FromStr for Spacing {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "linear" => Ok(Spacing::Linear),
            "log" => Ok(Spacing::Log),
            other => Err(Error::spec("sweep.spacing", format!("expected 'linear' or 'log', got '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    pub param: Param,
    pub min: f64,
    pub max: f64,
    pub count: usize,
    pub spacing: Spacing,
}

impl Grid {
    pub fn linear(param: Param, min: f64, max: f64, count: usize) -> Self {
        Grid {
            param,
            min,
            max,
            count,
            spacing: Spacing::Linear,
        }
    }

    pub fn log(param: Param, min: f64, max: f64, count: usize) -> Self {
        Grid {
            spacing: Spacing::Log,
            ..Self::linear(param, min, max, count)
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.count < 2 {
            return Err(Error::spec("sweep.count", format!("need at least 2 grid points, got {}", self.count)));
        }
        if !(self.min.is_finite() && self.max.is_finite()) || self.min >= self.max {
            return Err(Error::spec(
                "sweep.min/max",
                format!("grid range [{}, {}] is empty or not finite", self.min, self.max),
            ));
        }
        if self.spacing == Spacing::Log && self.min <= 0.0 {
            return Err(Error::spec("sweep.min", "log spacing needs a positive lower bound"));
        }
        Ok(())
    }

    /// Grid values, ascending; the endpoints are exact.
    pub fn values(&self) -> Vec<f64> {
        let last = self.count - 1;
        (0..self.count)
            .map(|k| {
                if k == 0 {
                    return self.min;
                }
                if k == last {
                    return self.max;
                }
                let f = k as f64 / last as f64;
                match self.spacing {
                    Spacing::Linear => self.min + f * (self.max - self.min),
                    Spacing::Log => {
                        let (lo, hi) = (self.min.log10(), self.max.log10());
                        10f64.powf(lo + f * (hi - lo))
                    }
                }
            })
            .collect()
    }
}

/// One output column: an engine evaluated with some parameters overridden.
#[derive(Debug, Clone, PartialEq)]
pub struct Column {
    pub label: String,
    pub engine: Engine,
    pub overrides: Vec<(Param, f64)>,
}

impl Column {
    pub fn new(engine: Engine) -> Self {
        Column {
            label: engine.to_string(),
            engine,
            overrides: Vec::new(),
        }
    }

    pub fn set(mut self, param: Param, value: f64) -> Self {
        self.overrides.push((param, value));
        self.label = default_label(&self.engine, &self.overrides);
        self
    }

    pub fn labeled(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }
}

fn default_label(engine: &Engine, overrides: &[(Param, f64)]) -> String {
    let mut label = engine.to_string();
    for (p, v) in overrides {
        label.push_str(&format!("@{p}={v}"));
    }
    label
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub grid: Grid,
    /// Values of all non-swept parameters.
    pub base: Params,
    /// Parameters set explicitly by the caller, checked against the swept one.
    pub fixed: Vec<Param>,
    pub columns: Vec<Column>,
}

impl SweepSpec {
    pub fn new(grid: Grid, base: Params, columns: Vec<Column>) -> Self {
        SweepSpec {
            grid,
            base,
            fixed: Vec::new(),
            columns,
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.grid.validate()?;
        if self.fixed.contains(&self.grid.param) {
            return Err(Error::spec(
                format!("fixed.{}", self.grid.param),
                "the swept parameter cannot also be fixed",
            ));
        }
        if self.columns.is_empty() {
            return Err(Error::spec("column", "at least one column is required"));
        }
        for (i, col) in self.columns.iter().enumerate() {
            if col.overrides.iter().any(|(p, _)| *p == self.grid.param) {
                return Err(Error::spec(
                    format!("column[{i}].{}", self.grid.param),
                    "the swept parameter cannot be overridden per column",
                ));
            }
            if col.label.is_empty() || col.label.contains([',', '"', '\n', '\r']) {
                return Err(Error::spec(format!("column[{i}].label"), "labels must be non-empty plain text"));
            }
            if self.columns[..i].iter().any(|c| c.label == col.label) {
                return Err(Error::spec(format!("column[{i}].label"), format!("duplicate label '{}'", col.label)));
            }
        }
        Ok(())
    }

    pub fn header(&self) -> Vec<String> {
        let mut header = vec![self.grid.param.name().to_string()];
        if self.grid.param != Param::NSig {
            header.push(Param::NSig.name().to_string());
        }
        header.extend(self.columns.iter().map(|c| c.label.clone()));
        header
    }
}

/// One grid point: the swept value, the signal photon number and one Δg/g per column.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub swept: f64,
    pub n_sig: f64,
    pub values: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepTable {
    pub swept: Param,
    pub header: Vec<String>,
    pub methods: Vec<Method>,
    pub rows: Vec<SweepRow>,
}

impl SweepTable {
    /// Fields of one row in header order.
    pub fn record(&self, row: &SweepRow) -> Vec<f64> {
        let mut out = vec![row.swept];
        if self.swept != Param::NSig {
            out.push(row.n_sig);
        }
        out.extend_from_slice(&row.values);
        out
    }

    pub fn column(&self, label: &str) -> Option<Vec<f64>> {
        let offset = self.header.len() - self.methods.len();
        let idx = self.header.iter().skip(offset).position(|h| h == label)?;
        Some(self.rows.iter().map(|r| r.values[idx]).collect())
    }
}

/// Evaluates every column at every grid point.
pub fn run_sweep(spec: &SweepSpec) -> Result<SweepTable> {
    spec.validate()?;
    let grid = spec.grid.values();
    let rows = grid
        .par_iter()
        .map(|&x| {
            let point = spec.base.with(spec.grid.param, x);
            let values = spec
                .columns
                .iter()
                .map(|col| {
                    let mut p = point;
                    for &(param, v) in &col.overrides {
                        p.set(param, v);
                    }
                    col.engine.evaluate(&p).map(|r| r.value).map_err(|e| match e {
                        Error::Domain(msg) => Error::Domain(format!(
                            "column '{}' at {} = {x}: {msg}",
                            col.label, spec.grid.param
                        )),
                        other => other,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(SweepRow {
                swept: x,
                n_sig: point.get(Param::NSig),
                values,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepTable {
        swept: spec.grid.param,
        header: spec.header(),
        methods: spec.columns.iter().map(|c| c.engine.method).collect(),
        rows,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CrossoverOptions {
    /// Points in the uniform pre-scan used to find a bracket.
    pub samples: usize,
    /// Bisection stops once the bracket is narrower than this.
    pub tolerance: f64,
}

impl Default for CrossoverOptions {
    fn default() -> Self {
        CrossoverOptions {
            samples: 1000,
            tolerance: 1e-6,
        }
    }
}

/// Location where two schemes exchange the lead.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Crossover {
    pub param: Param,
    pub value: f64,
    /// Scheme with the smaller Δg/g just below `value`.
    pub better_below: Engine,
    /// Scheme with the smaller Δg/g just above `value`.
    pub better_above: Engine,
}

/// Finds where Δg/g of `a` and `b` coincide as `param` varies over `bracket`.
///
/// The first sign change of the difference found by a uniform pre-scan is
/// refined by bisection.
pub fn find_crossover(
    a: Engine,
    b: Engine,
    param: Param,
    base: &Params,
    bracket: (f64, f64),
    options: CrossoverOptions,
) -> Result<Crossover> {
    let (lo, hi) = bracket;
    if !(lo.is_finite() && hi.is_finite()) || lo >= hi {
        return Err(Error::spec("bracket", format!("[{lo}, {hi}] is not a valid interval")));
    }
    let diff = |x: f64| -> Result<f64> {
        let p = base.with(param, x);
        Ok(a.evaluate(&p)?.value - b.evaluate(&p)?.value)
    };
    let (blo, bhi) = match roots::scan_bracket(diff, lo, hi, options.samples)? {
        Some(br) => br,
        None => {
            return Err(Error::NoSignChange {
                a: lo,
                fa: diff(lo)?,
                b: hi,
                fb: diff(hi)?,
            })
        }
    };
    let value = roots::bisect(diff, blo, bhi, options.tolerance)?;
    let (first, second) = if diff(blo)? < 0.0 { (a, b) } else { (b, a) };
    Ok(Crossover {
        param,
        value,
        better_below: first,
        better_above: second,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn engine_parsing() {
        let e: Engine = "simulated:su11_joint".parse().unwrap();
        assert_eq!(e, Engine::simulated(Scheme::Su11Joint));
        assert_eq!(e.to_string(), "simulated:su11_joint");
        assert_eq!("sql".parse::<Engine>().unwrap(), Engine::closed(Scheme::Sql));
        assert!("simulated:nope".parse::<Engine>().is_err());
    }

    #[test]
    fn grid_values() {
        let g = Grid::log(Param::NSig, 1e12, 1e20, 9);
        let v = g.values();
        assert_eq!(v[0], 1e12);
        assert_eq!(v[8], 1e20);
        assert!((v[4] / 1e16 - 1.0).abs() < 1e-14);
        let g = Grid::linear(Param::T2, 0.5, 1.0, 6);
        assert!((g.values()[3] - 0.8).abs() < 1e-15);
    }

    #[test]
    fn grid_validation() {
        assert!(Grid::linear(Param::T2, 0.5, 0.5, 2).validate().is_err());
        assert!(Grid::linear(Param::T2, 0.5, 1.0, 1).validate().is_err());
        assert!(Grid::log(Param::NSig, 0.0, 1.0, 5).validate().is_err());
        assert!(Grid::linear(Param::T2, 1.0, 0.5, 3).validate().is_err());
    }

    #[test]
    fn spec_validation() {
        let grid = Grid::linear(Param::T2, 0.5, 1.0, 3);
        let mut spec = SweepSpec::new(grid, Params::default(), vec![]);
        assert!(spec.validate().is_err());
        spec.columns = vec![Column::new(Engine::closed(Scheme::Sql)), Column::new(Engine::closed(Scheme::Sql))];
        assert!(spec.validate().is_err());
        spec.columns = vec![Column::new(Engine::closed(Scheme::Sql)).set(Param::T2, 0.9)];
        assert!(spec.validate().is_err());
        spec.columns = vec![Column::new(Engine::closed(Scheme::Sql))];
        spec.fixed = vec![Param::T2];
        assert!(spec.validate().is_err());
        spec.fixed.clear();
        assert!(spec.validate().is_ok());
    }

    #[test]
    fn sweep_rows_follow_grid() {
        let spec = SweepSpec::new(
            Grid::linear(Param::T2, 0.6, 1.0, 5),
            Params::default().with(Param::Squeeze, 1.0),
            vec![
                Column::new(Engine::closed(Scheme::MzSqueezed)),
                Column::new(Engine::closed(Scheme::Su11Joint)),
            ],
        );
        let table = run_sweep(&spec).unwrap();
        assert_eq!(table.header, ["t2", "n_sig", "mz_squeezed", "su11_joint"]);
        assert_eq!(table.rows.len(), 5);
        assert!(table.rows.windows(2).all(|w| w[0].swept < w[1].swept));
        let mz = table.column("mz_squeezed").unwrap();
        assert!(mz.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn sweep_reports_failing_point() {
        let spec = SweepSpec::new(
            Grid::linear(Param::T2, 0.0, 1.0, 3),
            Params::default(),
            vec![Column::new(Engine::closed(Scheme::MzSqueezed))],
        );
        let err = run_sweep(&spec).unwrap_err();
        assert!(err.to_string().contains("t2 = 0"), "{err}");
    }

    #[test]
    fn crossover_without_sign_change() {
        let base = Params::default();
        let err = find_crossover(
            Engine::closed(Scheme::Sql),
            Engine::closed(Scheme::EffectiveSql),
            Param::T2,
            &base,
            (0.5, 0.99),
            CrossoverOptions::default(),
        )
        .unwrap_err();
        assert!(matches!(err, Error::NoSignChange { .. }));
    }

    #[test]
    fn crossover_reports_winners() {
        let base = Params::default().with(Param::Squeeze, 1.0);
        let c = find_crossover(
            Engine::closed(Scheme::Su11Joint),
            Engine::closed(Scheme::MzSqueezed),
            Param::T2,
            &base,
            (0.5, 1.0),
            CrossoverOptions::default(),
        )
        .unwrap();
        assert_eq!(c.better_below, Engine::closed(Scheme::Su11Joint));
        assert_eq!(c.better_above, Engine::closed(Scheme::MzSqueezed));
    }
}
