//! Plain-text golden records of oracle solutions.
//!
//! One block per parameter set, fields in fixed order, numbers with 15
//! significant digits:
//!
//! ```text
//! [record]
//! variant = full-hopfield
//! antiresonant = on
//! omega_c = 1.00000000000000e0
//! omega_ex = 1.00000000000000e0
//! g = 5.00000000000000e-1
//! status = stable
//! omega_L = ...
//! omega_U = ...
//! neg_omega_L = ...
//! neg_omega_U = ...
//! w_L = <re> <im>
//! ...
//! z_U = <re> <im>
//! [end]
//! ```
//!
//! A parameter set the oracle rejects has `status = rejected` followed by a
//! single `reason = ...` line.

use num_complex::Complex64;
use thiserror::Error;

use super::{commutator_matrix, oracle_diagonalize};
use crate::hopfield::{ModelParams, Variant};

const HEADER: &str = "# oracle golden records: resonant single-mode Hopfield model\n\
# numbers carry 15 significant digits; coefficients are written as \"re im\"\n";

const FREQUENCY_KEYS: [&str; 4] = ["omega_L", "omega_U", "neg_omega_L", "neg_omega_U"];
const COEFFICIENT_KEYS: [&str; 8] = ["w_L", "x_L", "y_L", "z_L", "w_U", "x_U", "y_U", "z_U"];

#[derive(Debug, Clone, PartialEq)]
pub enum GoldenOutcome {
    Stable {
        frequencies: [f64; 4],
        /// Rows `(w, x, y, z)` of the lower and upper polariton.
        coefficients: [[Complex64; 4]; 2],
    },
    Rejected {
        reason: String,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct GoldenRecord {
    pub variant: Variant,
    pub antiresonant: bool,
    pub omega_c: f64,
    pub omega_ex: f64,
    pub g: f64,
    pub outcome: GoldenOutcome,
}

#[derive(Debug, Error, Clone, PartialEq)]
#[error("golden file line {line}: {message}")]
pub struct GoldenParseError {
    pub line: usize,
    pub message: String,
}

/// Resonant cavity, `g/ω_ex ∈ {0.1, 0.25, 0.5, 0.75, 1.0}`, both variants,
/// antiresonant terms on. Returned unvalidated: the no-a2 entries above the
/// stability bound are part of the set.
pub fn canonical_parameter_sets() -> Vec<ModelParams> {
    let mut out = Vec::new();
    for variant in [Variant::FullHopfield, Variant::NoA2] {
        for g in [0.1, 0.25, 0.5, 0.75, 1.0] {
            out.push(ModelParams {
                omega_c: 1.0,
                omega_ex: 1.0,
                g,
                variant,
                include_antiresonant: true,
                kappa0: 1.0,
            });
        }
    }
    out
}

pub fn canonical_records() -> Vec<GoldenRecord> {
    canonical_parameter_sets()
        .iter()
        .map(|p| {
            let outcome = match p.validate() {
                Err(e) => GoldenOutcome::Rejected {
                    reason: e.to_string(),
                },
                Ok(()) => match oracle_diagonalize(&commutator_matrix(p)) {
                    Ok(sol) => GoldenOutcome::Stable {
                        frequencies: sol.frequencies,
                        coefficients: [sol.coefficients[0], sol.coefficients[1]],
                    },
                    Err(e) => GoldenOutcome::Rejected {
                        reason: e.to_string(),
                    },
                },
            };
            GoldenRecord {
                variant: p.variant,
                antiresonant: p.include_antiresonant,
                omega_c: p.omega_c,
                omega_ex: p.omega_ex,
                g: p.g,
                outcome,
            }
        })
        .collect()
}

fn sig15(v: f64) -> String {
    // fold -0.0 into 0.0
    format!("{:.14e}", v + 0.0)
}

pub fn format_records(records: &[GoldenRecord]) -> String {
    let mut out = String::from(HEADER);
    for r in records {
        out.push_str("\n[record]\n");
        out.push_str(&format!("variant = {}\n", r.variant));
        out.push_str(&format!(
            "antiresonant = {}\n",
            if r.antiresonant { "on" } else { "off" }
        ));
        out.push_str(&format!("omega_c = {}\n", sig15(r.omega_c)));
        out.push_str(&format!("omega_ex = {}\n", sig15(r.omega_ex)));
        out.push_str(&format!("g = {}\n", sig15(r.g)));
        match &r.outcome {
            GoldenOutcome::Stable {
                frequencies,
                coefficients,
            } => {
                out.push_str("status = stable\n");
                for (key, v) in FREQUENCY_KEYS.iter().zip(frequencies) {
                    out.push_str(&format!("{key} = {}\n", sig15(*v)));
                }
                for (key, c) in COEFFICIENT_KEYS.iter().zip(coefficients.iter().flatten()) {
                    out.push_str(&format!("{key} = {} {}\n", sig15(c.re), sig15(c.im)));
                }
            }
            GoldenOutcome::Rejected { reason } => {
                out.push_str("status = rejected\n");
                out.push_str(&format!("reason = {reason}\n"));
            }
        }
        out.push_str("[end]\n");
    }
    out
}

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn err(&self, message: impl Into<String>) -> GoldenParseError {
        GoldenParseError {
            line: self.last,
            message: message.into(),
        }
    }

    /// Next line that is neither blank nor a comment.
    fn next_content(&mut self) -> Option<&'a str> {
        for (i, line) in self.inner.by_ref() {
            self.last = i + 1;
            let t = line.trim();
            if !t.is_empty() && !t.starts_with('#') {
                return Some(t);
            }
        }
        None
    }

    fn expect_field(&mut self, key: &str) -> Result<&'a str, GoldenParseError> {
        let line = self
            .next_content()
            .ok_or_else(|| self.err(format!("unexpected end of file, expected '{key}'")))?;
        match line.split_once('=') {
            Some((k, v)) if k.trim() == key => Ok(v.trim()),
            _ => Err(self.err(format!("expected '{key} = ...', found '{line}'"))),
        }
    }

    fn expect_number(&mut self, key: &str) -> Result<f64, GoldenParseError> {
        let v = self.expect_field(key)?;
        v.parse()
            .map_err(|_| self.err(format!("'{key}' is not a number: '{v}'")))
    }

    fn expect_complex(&mut self, key: &str) -> Result<Complex64, GoldenParseError> {
        let v = self.expect_field(key)?;
        let parts: Vec<&str> = v.split_whitespace().collect();
        match parts.as_slice() {
            [re, im] => match (re.parse(), im.parse()) {
                (Ok(re), Ok(im)) => Ok(Complex64::new(re, im)),
                _ => Err(self.err(format!("'{key}' is not a complex number: '{v}'"))),
            },
            _ => Err(self.err(format!("'{key}' must be 're im', found '{v}'"))),
        }
    }
}

pub fn parse_records(text: &str) -> Result<Vec<GoldenRecord>, GoldenParseError> {
    let mut lines = Lines {
        inner: text.lines().enumerate(),
        last: 0,
    };
    let mut records = Vec::new();
    while let Some(line) = lines.next_content() {
        if line != "[record]" {
            return Err(lines.err(format!("expected '[record]', found '{line}'")));
        }
        let variant: Variant = {
            let v = lines.expect_field("variant")?;
            v.parse().map_err(|e: String| lines.err(e))?
        };
        let antiresonant = match lines.expect_field("antiresonant")? {
            "on" => true,
            "off" => false,
            other => return Err(lines.err(format!("antiresonant must be on/off, got '{other}'"))),
        };
        let omega_c = lines.expect_number("omega_c")?;
        let omega_ex = lines.expect_number("omega_ex")?;
        let g = lines.expect_number("g")?;
        let outcome = match lines.expect_field("status")? {
            "stable" => {
                let mut frequencies = [0.0; 4];
                for (slot, key) in frequencies.iter_mut().zip(FREQUENCY_KEYS) {
                    *slot = lines.expect_number(key)?;
                }
                let mut coefficients = [[Complex64::new(0.0, 0.0); 4]; 2];
                for (slot, key) in coefficients.iter_mut().flatten().zip(COEFFICIENT_KEYS) {
                    *slot = lines.expect_complex(key)?;
                }
                GoldenOutcome::Stable {
                    frequencies,
                    coefficients,
                }
            }
            "rejected" => GoldenOutcome::Rejected {
                reason: lines.expect_field("reason")?.to_string(),
            },
            other => return Err(lines.err(format!("unknown status '{other}'"))),
        };
        match lines.next_content() {
            Some("[end]") => {}
            other => {
                return Err(lines.err(format!("expected '[end]', found {other:?}")));
            }
        }
        records.push(GoldenRecord {
            variant,
            antiresonant,
            omega_c,
            omega_ex,
            g,
            outcome,
        });
    }
    Ok(records)
}
