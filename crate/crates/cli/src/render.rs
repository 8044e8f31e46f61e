//! Table, JSON and CSV output.

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};
use specladder_core::ModelSpectrum;

use crate::args::Format;
use crate::verify::Verification;

/// Significant digits for energies in tables and CSV.
pub const DIGITS: usize = 12;

/// `x` rounded to [`DIGITS`] significant digits, printed without exponent
/// noise: `0.1 + 0.2` prints as `0.3`.
pub fn sig(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    let rounded: f64 = format!("{:.*e}", DIGITS - 1, x).parse().unwrap_or(x);
    let plain = rounded.to_string();
    let exponent = if rounded == 0.0 { 0 } else { rounded.abs().log10().floor() as i32 };
    if (-6..=15).contains(&exponent) {
        plain
    } else {
        format!("{rounded:e}")
    }
}

/// Short form for error columns.
fn err(x: f64) -> String {
    format!("{x:.2e}")
}

fn number(x: f64) -> Value {
    if x.fract() == 0.0 && x.abs() < 9.007_199_254_740_992e15 {
        Value::from(x as i64)
    } else {
        Value::from(x)
    }
}

/// JSON form of a spectrum: `{model, units, params, levels: [{labels..., energy}]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumDoc {
    pub model: String,
    pub units: String,
    pub params: Map<String, Value>,
    pub levels: Vec<Map<String, Value>>,
}

impl SpectrumDoc {
    pub fn new(spec: &ModelSpectrum, physical: bool) -> Self {
        let factor = if physical { spec.scale } else { 1.0 };
        let units = if physical {
            format!("physical (1 {} = {})", spec.unit, sig(spec.scale))
        } else {
            spec.unit.symbol().to_string()
        };
        let params = spec.params.iter().map(|p| (p.name.clone(), number(p.value))).collect();
        let levels = spec
            .levels
            .iter()
            .map(|level| {
                let mut row: Map<String, Value> =
                    level.labels.iter().map(|l| (l.name.clone(), number(l.value))).collect();
                row.insert("energy".into(), Value::from(level.energy * factor));
                row
            })
            .collect();
        Self {
            model: spec.model.name().to_string(),
            units,
            params,
            levels,
        }
    }

    fn columns(&self, spec: &ModelSpectrum) -> Vec<String> {
        let mut cols: Vec<String> = spec
            .levels
            .first()
            .map(|l| l.labels.iter().map(|x| x.name.clone()).collect())
            .unwrap_or_else(|| vec!["k".to_string()]);
        cols.push("energy".into());
        cols
    }
}

fn cell(value: &Value) -> String {
    match value {
        Value::Number(n) if n.is_i64() => n.to_string(),
        Value::Number(n) => sig(n.as_f64().unwrap_or(f64::NAN)),
        other => other.to_string(),
    }
}

/// Left-aligned columns separated by two spaces.
fn table(header: &[String], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.len());
        }
    }
    let line = |cells: &[String]| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        padded.join("  ").trim_end().to_string()
    };
    let mut out = line(header);
    out.push('\n');
    for row in rows {
        out.push_str(&line(row));
        out.push('\n');
    }
    out
}

fn csv(header: &[String], rows: &[Vec<String>]) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

pub fn spectrum(spec: &ModelSpectrum, format: Format, physical: bool) -> String {
    let doc = SpectrumDoc::new(spec, physical);
    if format == Format::Json {
        return serde_json::to_string_pretty(&doc).expect("spectra serialize") + "\n";
    }
    let header = doc.columns(spec);
    let rows: Vec<Vec<String>> = doc
        .levels
        .iter()
        .map(|row| header.iter().map(|c| row.get(c).map(cell).unwrap_or_default()).collect())
        .collect();
    match format {
        Format::Csv => csv(&header, &rows),
        _ => {
            let params: Vec<String> = doc.params.iter().map(|(k, v)| format!("{k}={}", cell(v))).collect();
            let mut out = format!("model: {}  units: {}", doc.model, doc.units);
            if !params.is_empty() {
                out.push_str(&format!("  {}", params.join(" ")));
            }
            out.push('\n');
            out + &table(&header, &rows)
        }
    }
}

pub fn verification(spec: &ModelSpectrum, v: &Verification, format: Format) -> String {
    if format == Format::Json {
        return serde_json::to_string_pretty(v).expect("reports serialize") + "\n";
    }
    let report = &v.report;
    let mut header: Vec<String> = spec
        .levels
        .first()
        .map(|l| l.labels.iter().map(|x| x.name.clone()).collect())
        .unwrap_or_else(|| vec!["k".to_string()]);
    let label_count = header.len();
    header.extend(["algebraic", "numeric", "abs_err", "rel_err", "status"].map(String::from));
    let rows: Vec<Vec<String>> = spec
        .levels
        .iter()
        .enumerate()
        .map(|(i, level)| {
            let mut row: Vec<String> = level.labels.iter().map(|l| sig(l.value)).collect();
            row.resize(label_count, String::new());
            let ok = report.abs_err[i] <= report.tolerance.abs + report.tolerance.rel * report.algebraic[i].abs();
            row.extend([
                sig(report.algebraic[i]),
                sig(report.numeric[i]),
                err(report.abs_err[i]),
                err(report.rel_err[i]),
                (if ok { "ok" } else { "FAIL" }).to_string(),
            ]);
            row
        })
        .collect();
    if format == Format::Csv {
        let mut out = csv(&header, &rows);
        for c in &v.checks {
            out.push_str(&format!("# check,{},{},{},{}\n", c.name, err(c.value), err(c.limit), c.pass));
        }
        return out;
    }
    let mut out = format!(
        "model: {}  oracle: {}  units: {}\n",
        report.model, report.method, report.unit
    );
    if let Some(g) = &report.grid {
        out.push_str(&format!("grid: [{}, {}] with {} points\n", sig(g.q_min), sig(g.q_max), g.points));
    }
    out.push_str(&format!(
        "tolerance: abs {} + rel {}\n",
        err(report.tolerance.abs),
        err(report.tolerance.rel)
    ));
    out.push_str(&table(&header, &rows));
    for c in &v.checks {
        out.push_str(&format!(
            "check {}: {} (limit {}) {}\n",
            c.name,
            err(c.value),
            err(c.limit),
            if c.pass { "ok" } else { "FAIL" }
        ));
    }
    out.push_str(&format!(
        "result: {} (max abs err {}, max rel err {})\n",
        if v.pass() { "PASS" } else { "FAIL" },
        err(report.max_abs_err()),
        err(report.max_rel_err())
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digits() {
        assert_eq!(sig(0.5), "0.5");
        assert_eq!(sig(0.1 + 0.2), "0.3");
        assert_eq!(sig(-1.0 / 18.0), "-0.0555555555556");
        assert_eq!(sig(2.0), "2");
        assert_eq!(sig(1e-20), "1e-20");
        assert_eq!(sig(0.0), "0");
    }
}
