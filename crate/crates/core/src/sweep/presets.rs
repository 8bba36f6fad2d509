//! Built-in sweeps reproducing the standard sensitivity curves.
//!
//! | name    | swept              | columns                                             |
//! |---------|--------------------|-----------------------------------------------------|
//! | `fig3`  | N_sig, 1e12..1e20  | SQL at L = 100, 500, 1000 m                         |
//! | `fig4`  | r, 0..2            | squeezed MZ at (t1, t2) = (1, 1), (0.9, 1), (0.9, 0.9) |
//! | `fig5a` | t1, 0.5..1 (t2 = 1) | effective SQL, SU(1,1) single and joint, squeezed MZ |
//! | `fig5b` | t2, 0.5..1 (t1 = 1) | as `fig5a`                                          |

use super::{Column, Engine, Grid, Param, Params, SweepSpec};
use crate::closed_form::Scheme;
use crate::error::{Error, Result};

pub const NAMES: [&str; 4] = ["fig3", "fig4", "fig5a", "fig5b"];

pub fn preset(name: &str) -> Result<SweepSpec> {
    let spec = match name {
        "fig3" => fig3(),
        "fig4" => fig4(),
        "fig5a" => fig5(Param::T1),
        "fig5b" => fig5(Param::T2),
        other => {
            return Err(Error::spec(
                "preset",
                format!("unknown preset '{other}'; expected one of {}", NAMES.join(", ")),
            ))
        }
    };
    Ok(spec)
}

fn fig3() -> SweepSpec {
    let sql = Column::new(Engine::closed(Scheme::Sql));
    SweepSpec::new(
        Grid::log(Param::NSig, 1e12, 1e20, 81),
        Params::default(),
        [100.0, 500.0, 1000.0]
            .into_iter()
            .map(|l| sql.clone().set(Param::Length, l))
            .collect(),
    )
}

fn fig4() -> SweepSpec {
    let mz = Column::new(Engine::closed(Scheme::MzSqueezed));
    SweepSpec::new(
        Grid::linear(Param::Squeeze, 0.0, 2.0, 41),
        Params::default(),
        [(1.0, 1.0), (0.9, 1.0), (0.9, 0.9)]
            .into_iter()
            .map(|(t1, t2)| mz.clone().set(Param::T1, t1).set(Param::T2, t2))
            .collect(),
    )
}

fn fig5(swept: Param) -> SweepSpec {
    let mut spec = SweepSpec::new(
        Grid::linear(swept, 0.5, 1.0, 51),
        Params::default().with(Param::Squeeze, 1.0),
        [
            Scheme::EffectiveSql,
            Scheme::Su11Single,
            Scheme::Su11Joint,
            Scheme::MzSqueezed,
        ]
        .into_iter()
        .map(|s| Column::new(Engine::closed(s)))
        .collect(),
    );
    spec.fixed = vec![Param::Squeeze];
    spec
}
