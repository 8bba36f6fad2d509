use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use super::SweepTable;
use crate::error::{Error, Result};

/// Scientific notation with 17 significant digits, enough to round-trip any f64.
pub fn format_value(v: f64) -> String {
    format!("{v:.16e}")
}

/// Writes `table` as CSV: one header line, then one line per row, LF terminated.
pub fn emit_csv<W: Write>(table: &SweepTable, writer: W) -> Result<()> {
    if table.rows.is_empty() {
        return Err(Error::Config("refusing to write a CSV with no rows".into()));
    }
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(writer);
    w.write_record(&table.header)?;
    for row in &table.rows {
        w.write_record(table.record(row).into_iter().map(format_value))?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

pub fn write_csv(table: &SweepTable, path: &Path) -> Result<()> {
    let io = |source| Error::Io {
        path: path.to_path_buf(),
        source,
    };
    let file = File::create(path).map_err(io)?;
    let mut buf = BufWriter::new(file);
    emit_csv(table, &mut buf).map_err(|e| match e {
        Error::Csv(c) if c.is_io_error() => match c.into_kind() {
            csv::ErrorKind::Io(source) => io(source),
            _ => unreachable!(),
        },
        other => other,
    })?;
    buf.flush().map_err(io)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_form::Method;
    use crate::sweep::{Param, SweepRow};

    fn table(rows: usize) -> SweepTable {
        SweepTable {
            swept: Param::T2,
            header: vec!["t2".into(), "n_sig".into(), "a".into(), "b".into()],
            methods: vec![Method::ClosedForm; 2],
            rows: (0..rows)
                .map(|i| SweepRow {
                    swept: 0.5 + 0.1 * i as f64,
                    n_sig: 1e18,
                    values: vec![1.0 / 3.0 * (i + 1) as f64, 9.30451234567e-5],
                })
                .collect(),
        }
    }

    #[test]
    fn three_rows_four_lines() {
        let mut buf = Vec::new();
        emit_csv(&table(3), &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), 4);
        assert!(!text.contains('\r'));
        assert!(text.starts_with("t2,n_sig,a,b\n"));
        assert!(text.ends_with('\n'));
    }

    #[test]
    fn values_round_trip() {
        let t = table(3);
        let mut buf = Vec::new();
        emit_csv(&t, &mut buf).unwrap();
        let mut rdr = csv::Reader::from_reader(buf.as_slice());
        for (rec, row) in rdr.records().zip(&t.rows) {
            let parsed: Vec<f64> = rec.unwrap().iter().map(|f| f.parse().unwrap()).collect();
            assert_eq!(parsed, t.record(row));
        }
    }

    #[test]
    fn empty_table_is_an_error() {
        assert!(emit_csv(&table(0), Vec::new()).is_err());
    }

    #[test]
    fn io_errors_name_the_path() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("missing").join("out.csv");
        let err = write_csv(&table(1), &path).unwrap_err();
        assert!(err.to_string().contains("out.csv"), "{err}");
    }
}
