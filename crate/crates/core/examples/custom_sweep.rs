//! A sweep defined in TOML, mixing closed-form and simulated columns.

use std::io;

use qgrav::sweep::{emit_csv, parse_spec, run_sweep};

const SPEC: &str = r#"
[sweep]
parameter = "t1"
min = 0.6
max = 1.0
count = 9

[fixed]
t2 = 0.95
r1 = 1.2
r2 = 1.2
n_sig = 1e16

[geometry]
L = 2000

[[column]]
scheme = "su11_joint"

[[column]]
scheme = "simulated:su11_joint"

[[column]]
scheme = "mz_squeezed"
label = "mz_r1.5"
r = 1.5
"#;

fn main() -> qgrav::Result<()> {
    let spec = parse_spec(SPEC)?;
    let table = run_sweep(&spec)?;
    emit_csv(&table, io::stdout().lock())
}
