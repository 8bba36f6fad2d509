//! Writes every built-in preset as CSV into a directory (default: `presets-out`).
//!
//! ```text
//! cargo run --example figure_presets -- /tmp/curves
//! ```

use std::path::PathBuf;

use qgrav::sweep::{presets, run_sweep, write_csv};

fn main() -> qgrav::Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "presets-out".into()));
    std::fs::create_dir_all(&dir).map_err(|source| qgrav::Error::Io { path: dir.clone(), source })?;
    for name in presets::NAMES {
        let table = run_sweep(&presets::preset(name)?)?;
        let path = dir.join(format!("{name}.csv"));
        write_csv(&table, &path)?;
        println!("{} ({} rows): {}", path.display(), table.rows.len(), table.header.join(", "));
    }
    Ok(())
}
