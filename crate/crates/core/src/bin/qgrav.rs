use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use qgrav::closed_form::Method;
use qgrav::schwarzschild::path_times;
use qgrav::sweep::{self, presets, CrossoverOptions, Engine, Param, Params};
use qgrav::{Error, Result};

/// Gravitational phase and interferometric Δg/g.
#[derive(Parser)]
#[command(name = "qgrav", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the gravitational phase, time difference and local g for a geometry.
    Phase(Common),
    /// Evaluate one scheme at one parameter point.
    Sens {
        /// Scheme name, optionally prefixed with `simulated:`.
        #[arg(long)]
        scheme: String,
        #[command(flatten)]
        common: Common,
    },
    /// Run a sweep from a spec file or a built-in preset and write CSV.
    Sweep {
        /// TOML sweep specification.
        #[arg(required_unless_present = "preset", conflicts_with = "preset")]
        spec: Option<PathBuf>,
        /// One of fig3, fig4, fig5a, fig5b.
        #[arg(long)]
        preset: Option<String>,
        /// Output path; CSV goes to stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Locate where two schemes give equal Δg/g as one parameter varies.
    Crossover {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long)]
        param: String,
        #[arg(long)]
        min: f64,
        #[arg(long)]
        max: f64,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct Common {
    /// Parameter override `key=value`; repeatable.
    #[arg(long = "set", value_name = "KEY=VALUE")]
    set: Vec<String>,
    /// Write the report to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

impl Common {
    fn params(&self) -> Result<Params> {
        let mut p = Params::default();
        for s in &self.set {
            p.set_from_str(s)?;
        }
        Ok(p)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_validation() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Phase(common) => {
            let p = common.params()?;
            let geo = p.geometry();
            let t = path_times(&geo)?;
            let report = format!(
                "g = {:.10e}\nr_s = {:.10e}\ndelta_r = {:.10e}\ndelta_tau = {:.10e}\npsi = {:.10e}\npsi_closed_form = {:.10e}\n",
                geo.surface_gravity(),
                geo.schwarzschild_radius,
                t.radial_separation,
                t.delta_tau,
                t.psi,
                geo.phase_closed_form(),
            );
            emit(&report, common.out.as_deref())
        }
        Command::Sens { scheme, common } => {
            let engine: Engine = scheme.parse()?;
            let p = common.params()?;
            let r = engine.evaluate(&p)?;
            let method = match r.method {
                Method::ClosedForm => "closed_form",
                Method::Simulated => "simulated",
            };
            let report = format!(
                "scheme = {engine}\nmethod = {method}\nn_sig = {:.10e}\ndg_over_g = {:.10e}\n",
                r.n_sig, r.value
            );
            emit(&report, common.out.as_deref())
        }
        Command::Sweep { spec, preset, out } => {
            let spec = match (preset, spec) {
                (Some(name), _) => presets::preset(&name)?,
                (None, Some(path)) => {
                    let text = std::fs::read_to_string(&path).map_err(|source| Error::Io {
                        path: path.clone(),
                        source,
                    })?;
                    sweep::parse_spec(&text).map_err(|e| Error::Parse {
                        path: path.clone(),
                        message: e.to_string(),
                    })?
                }
                (None, None) => unreachable!("clap requires a spec or a preset"),
            };
            let table = sweep::run_sweep(&spec)?;
            match out {
                Some(path) => sweep::write_csv(&table, &path),
                None => sweep::emit_csv(&table, io::stdout().lock()),
            }
        }
        Command::Crossover {
            a,
            b,
            param,
            min,
            max,
            common,
        } => {
            let a: Engine = a.parse()?;
            let b: Engine = b.parse()?;
            let param = Param::parse(&param)?;
            let base = common.params()?;
            let c = sweep::find_crossover(a, b, param, &base, (min, max), CrossoverOptions::default())?;
            let report = format!(
                "{} = {:.10}\nbetter_below = {}\nbetter_above = {}\n",
                c.param, c.value, c.better_below, c.better_above
            );
            emit(&report, common.out.as_deref())
        }
    }
}

fn emit(report: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, report).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        }),
        None => {
            let _ = io::stdout().lock().write_all(report.as_bytes());
            Ok(())
        }
    }
}
