//! Sweep specification files.
//!
//! ```toml
//! [sweep]
//! parameter = "t2"
//! min = 0.5
//! max = 1.0
//! count = 51
//! spacing = "linear"   # or "log"
//!
//! [fixed]
//! r = 1.0
//!
//! [geometry]
//! L = 1000.0
//!
//! [[column]]
//! scheme = "su11_joint"
//!
//! [[column]]
//! scheme = "simulated:mz_squeezed"
//! label = "mz_sim"
//! t1 = 0.9
//! ```

use std::collections::BTreeMap;
use std::ops::Range;

use serde::Deserialize;
use toml::Spanned;

use super::{Column, Engine, Grid, Param, Params, Spacing, SweepSpec};
use crate::error::{Error, Result};

const GEOMETRY_KEYS: [Param; 6] = [
    Param::Height,
    Param::Length,
    Param::Omega,
    Param::G,
    Param::C,
    Param::GroundRadius,
];

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpec {
    sweep: RawGrid,
    #[serde(default)]
    fixed: BTreeMap<String, Spanned<f64>>,
    #[serde(default)]
    geometry: BTreeMap<String, Spanned<f64>>,
    #[serde(default, rename = "column")]
    columns: Vec<Spanned<toml::Table>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGrid {
    parameter: Spanned<String>,
    min: Spanned<f64>,
    max: Spanned<f64>,
    count: Spanned<i64>,
    #[serde(default)]
    spacing: Option<Spanned<String>>,
}

struct Source<'a> {
    text: &'a str,
}

impl Source<'_> {
    fn line(&self, span: &Range<usize>) -> usize {
        let end = span.start.min(self.text.len());
        self.text[..end].bytes().filter(|&b| b == b'\n').count() + 1
    }

    fn error(&self, span: &Range<usize>, field: impl Into<String>, message: impl Into<String>) -> Error {
        Error::spec(format!("line {}, {}", self.line(span), field.into()), message)
    }
}

/// Parses and validates a sweep specification.
///
/// Errors carry the offending field and, where known, its line.
pub fn parse_spec(text: &str) -> Result<SweepSpec> {
    let src = Source { text };
    let raw: RawSpec = toml::from_str(text).map_err(|e| {
        let field = match e.span() {
            Some(span) => format!("line {}", src.line(&span)),
            None => "toml".to_string(),
        };
        Error::spec(field, e.message().trim().to_string())
    })?;

    let param = Param::from_name(raw.sweep.parameter.get_ref())
        .ok_or_else(|| src.error(&raw.sweep.parameter.span(), "sweep.parameter", unknown_param(raw.sweep.parameter.get_ref())))?;
    let count = *raw.sweep.count.get_ref();
    if count < 2 {
        return Err(src.error(&raw.sweep.count.span(), "sweep.count", format!("need at least 2 grid points, got {count}")));
    }
    let spacing = match &raw.sweep.spacing {
        Some(s) => s.get_ref().parse().map_err(|e: Error| src.error(&s.span(), "sweep.spacing", message_of(e)))?,
        None => Spacing::Linear,
    };
    let grid = Grid {
        param,
        min: *raw.sweep.min.get_ref(),
        max: *raw.sweep.max.get_ref(),
        count: count as usize,
        spacing,
    };
    grid.validate()
        .map_err(|e| src.error(&raw.sweep.min.span(), "sweep.min/max", message_of(e)))?;

    let mut base = Params::default();
    let mut fixed = Vec::new();
    for (section, table) in [("fixed", &raw.fixed), ("geometry", &raw.geometry)] {
        for (key, value) in table {
            let field = format!("{section}.{key}");
            let p = Param::from_name(key).ok_or_else(|| src.error(&value.span(), &field, unknown_param(key)))?;
            if section == "geometry" && !GEOMETRY_KEYS.contains(&p) {
                return Err(src.error(&value.span(), &field, "not a geometry parameter; put it under [fixed]"));
            }
            if p == param {
                return Err(src.error(&value.span(), &field, "the swept parameter cannot also be fixed"));
            }
            if fixed.contains(&p) {
                return Err(src.error(&value.span(), &field, "set in both [fixed] and [geometry]"));
            }
            fixed.push(p);
            base.set(p, *value.get_ref());
        }
    }

    let mut columns = Vec::with_capacity(raw.columns.len());
    for (i, table) in raw.columns.iter().enumerate() {
        columns.push(parse_column(&src, i, table)?);
    }

    let spec = SweepSpec {
        grid,
        base,
        fixed,
        columns,
    };
    spec.validate()?;
    Ok(spec)
}

fn parse_column(src: &Source<'_>, i: usize, table: &Spanned<toml::Table>) -> Result<Column> {
    let span = table.span();
    let field = |key: &str| format!("column[{i}].{key}");
    let scheme = table
        .get_ref()
        .get("scheme")
        .ok_or_else(|| src.error(&span, field("scheme"), "missing"))?
        .as_str()
        .ok_or_else(|| src.error(&span, field("scheme"), "expected a string"))?;
    let engine: Engine = scheme.parse().map_err(|e| src.error(&span, field("scheme"), message_of(e)))?;
    let mut column = Column::new(engine);
    let mut label = None;
    for (key, value) in table.get_ref() {
        match key.as_str() {
            "scheme" => {}
            "label" => {
                let s = value
                    .as_str()
                    .ok_or_else(|| src.error(&span, field(key), "expected a string"))?;
                label = Some(s.to_string());
            }
            other => {
                let p = Param::from_name(other).ok_or_else(|| src.error(&span, field(other), unknown_param(other)))?;
                let v = value
                    .as_float()
                    .or_else(|| value.as_integer().map(|n| n as f64))
                    .ok_or_else(|| src.error(&span, field(other), "expected a number"))?;
                column = column.set(p, v);
            }
        }
    }
    if let Some(label) = label {
        column = column.labeled(label);
    }
    Ok(column)
}

fn unknown_param(name: &str) -> String {
    let known: Vec<_> = Param::ALL.iter().map(|p| p.name()).collect();
    format!("unknown parameter '{name}'; expected one of {}", known.join(", "))
}

fn message_of(e: Error) -> String {
    match e {
        Error::Spec { message, .. } => message,
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_form::Scheme;

    const EXAMPLE: &str = r#"
[sweep]
parameter = "t2"
min = 0.5
max = 1
count = 11

[fixed]
r = 1.0

[geometry]
L = 500

[[column]]
scheme = "su11_joint"

[[column]]
scheme = "simulated:mz_squeezed"
t1 = 0.9
"#;

    #[test]
    fn parses_example() {
        let spec = parse_spec(EXAMPLE).unwrap();
        assert_eq!(spec.grid.param, Param::T2);
        assert_eq!(spec.grid.count, 11);
        assert_eq!(spec.base.get(Param::Squeeze), 1.0);
        assert_eq!(spec.base.get(Param::Length), 500.0);
        assert_eq!(spec.base.get(Param::NSig), 1e18);
        assert_eq!(spec.columns[0].engine, Engine::closed(Scheme::Su11Joint));
        assert_eq!(spec.columns[1].label, "simulated:mz_squeezed@t1=0.9");
        assert_eq!(spec.columns[1].overrides, vec![(Param::T1, 0.9)]);
    }

    fn field_of(text: &str) -> String {
        match parse_spec(text).unwrap_err() {
            Error::Spec { field, .. } => field,
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn reports_line_and_field() {
        let bad = EXAMPLE.replace("r = 1.0", "t2 = 0.9");
        assert_eq!(field_of(&bad), "line 9, fixed.t2");
        let bad = EXAMPLE.replace("L = 500", "r1 = 2");
        assert_eq!(field_of(&bad), "line 12, geometry.r1");
        let bad = EXAMPLE.replace("count = 11", "count = 1");
        assert_eq!(field_of(&bad), "line 6, sweep.count");
    }

    #[test]
    fn rejects_unknown_keys() {
        let bad = EXAMPLE.replace("[fixed]", "[fixed]\nbogus = 3");
        assert!(field_of(&bad).ends_with("fixed.bogus"));
        let bad = EXAMPLE.replace("count = 11", "count = 11\nstep = 2");
        assert!(field_of(&bad).starts_with("line "));
        let bad = EXAMPLE.replace("scheme = \"su11_joint\"", "scheme = \"su11_joint\"\nwidth = 3");
        assert!(field_of(&bad).ends_with("column[0].width"));
    }

    #[test]
    fn rejects_degenerate_grid() {
        let bad = EXAMPLE.replace("min = 0.5", "min = 1").replace("count = 11", "count = 2");
        assert!(field_of(&bad).ends_with("sweep.min/max"));
    }

    #[test]
    fn syntax_errors_have_lines() {
        let bad = EXAMPLE.replace("min = 0.5", "min = ");
        assert!(field_of(&bad).starts_with("line 4"));
    }
}
