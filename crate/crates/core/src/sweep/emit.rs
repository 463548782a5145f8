use std::io::Write;

use super::{OutputFormat, SweepConfig, SweepError, SweepResult};
use crate::dissipation::RateSet;

/// Header line plus one line per row. Values use the shortest exponent form
/// that round-trips exactly.
pub fn render_csv(result: &SweepResult) -> String {
    let mut out = RateSet::COLUMNS.join(",");
    out.push('\n');
    for row in &result.rows {
        let fields: Vec<String> = row.values().iter().map(|v| format!("{v:e}")).collect();
        out.push_str(&fields.join(","));
        out.push('\n');
    }
    out
}

pub fn render_json(result: &SweepResult) -> String {
    let mut out = serde_json::to_string_pretty(result).expect("sweep result serializes");
    out.push('\n');
    out
}

pub fn render(result: &SweepResult, format: OutputFormat) -> String {
    match format {
        OutputFormat::Csv => render_csv(result),
        OutputFormat::Json => render_json(result),
    }
}

/// Writes the result in the configured format to the configured path, or to
/// stdout when no path is set.
pub fn emit(result: &SweepResult, config: &SweepConfig) -> Result<(), SweepError> {
    let text = render(result, config.output_format);
    match &config.output_path {
        Some(path) => std::fs::write(path, text).map_err(|source| SweepError::Io {
            path: path.clone(),
            source,
        }),
        None => std::io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(SweepError::Stdout),
    }
}
