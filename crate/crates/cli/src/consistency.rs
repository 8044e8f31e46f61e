//! `specladder consistency`: checks user-supplied ladder data.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use specladder_core::ladder::{spectrum_from_coeffs, LadderSpec, SpectrumPair};
use specladder_core::{Condition, Error, Tolerance};

use crate::args::Format;
use crate::error::CliError;

/// Either a spectrum pair or a coefficient list.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(untagged)]
pub enum ConsistencyInput {
    Pair {
        s: Vec<f64>,
        a: Vec<f64>,
        #[serde(default)]
        finite: bool,
    },
    Coefficients {
        coeffs: Vec<Coefficient>,
        #[serde(default)]
        finite: bool,
    },
}

/// A real coefficient or a `[re, im]` pair.
#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(untagged)]
pub enum Coefficient {
    Real(f64),
    Complex([f64; 2]),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub k: usize,
    pub condition: Condition,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConsistencyReport {
    pub consistent: bool,
    pub levels: usize,
    pub finite: bool,
    pub violation: Option<Violation>,
    pub s: Vec<f64>,
    pub a: Vec<f64>,
}

pub fn parse(text: &str) -> Result<ConsistencyInput, CliError> {
    serde_json::from_str(text).map_err(|_| {
        CliError::Input("expected {\"s\": [...], \"a\": [...]} or {\"coeffs\": [...]}, each with optional \"finite\"".into())
    })
}

fn as_violation(err: Error) -> Result<Violation, CliError> {
    match err {
        Error::ConsistencyViolation { k, condition } => Ok(Violation { k, condition }),
        other => Err(CliError::Input(other.to_string())),
    }
}

pub fn check(input: &ConsistencyInput, tol: &Tolerance) -> Result<ConsistencyReport, CliError> {
    let (pair, finite) = match input {
        ConsistencyInput::Pair { s, a, finite } => {
            let pair = SpectrumPair::new(s.clone(), a.clone(), *finite).map_err(|e| CliError::Input(e.to_string()))?;
            (pair, *finite)
        }
        ConsistencyInput::Coefficients { coeffs, finite } => {
            let coeffs: Vec<Complex64> = coeffs
                .iter()
                .map(|c| match *c {
                    Coefficient::Real(x) => Complex64::new(x, 0.0),
                    Coefficient::Complex([re, im]) => Complex64::new(re, im),
                })
                .collect();
            let spec = if *finite {
                LadderSpec::finite(coeffs)
            } else {
                LadderSpec::unbounded(coeffs)
            };
            match spec {
                Ok(spec) => (spectrum_from_coeffs(&spec), *finite),
                Err(e) => {
                    return Ok(ConsistencyReport {
                        consistent: false,
                        levels: 0,
                        finite: *finite,
                        violation: Some(as_violation(e)?),
                        s: Vec::new(),
                        a: Vec::new(),
                    })
                }
            }
        }
    };
    let violation = pair.check(tol).err().map(as_violation).transpose()?;
    Ok(ConsistencyReport {
        consistent: violation.is_none(),
        levels: pair.len(),
        finite,
        violation,
        s: pair.s,
        a: pair.a,
    })
}

pub fn render(report: &ConsistencyReport, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(report).expect("reports serialize") + "\n",
        Format::Csv => {
            let mut out = String::from("k,s,a\n");
            for (k, (s, a)) in report.s.iter().zip(&report.a).enumerate() {
                out.push_str(&format!("{k},{},{}\n", crate::render::sig(*s), crate::render::sig(*a)));
            }
            match &report.violation {
                Some(v) => out.push_str(&format!("# violation,{},{}\n", v.k, v.condition)),
                None => out.push_str("# consistent\n"),
            }
            out
        }
        Format::Table => match &report.violation {
            Some(v) => format!("violation at k={}: {}\n", v.k, v.condition),
            None => {
                let mut out = format!("consistent ({} levels)\n", report.levels);
                if report.finite {
                    out.push_str("top: s_max = -a_max satisfied\n");
                }
                out
            }
        },
    }
}
