//! Sweep configuration from command-line flags and `key=value` files.
//!
//! Precedence, lowest to highest: built-in defaults, config file, flags.
//! Config-file keys are the flag names without the leading dashes
//! (`g-max=0.5`); underscores are accepted in place of dashes.

use std::ffi::OsString;
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::Parser;
use serde::{Deserialize, Serialize};

use super::ConfigError;
use crate::dissipation::WeightingMode;
use crate::hopfield::{ModelParams, Variant};

/// Mirror model used for the summary's branch-ordering comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum MirrorChoice {
    #[serde(rename = "dielectric")]
    Dielectric,
    #[serde(rename = "metallic")]
    Metallic,
    /// Both profiles are emitted; the summary compares against the metallic one.
    #[default]
    #[serde(rename = "both")]
    Both,
}

impl FromStr for MirrorChoice {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "dielectric" => Ok(MirrorChoice::Dielectric),
            "metallic" => Ok(MirrorChoice::Metallic),
            "both" => Ok(MirrorChoice::Both),
            other => Err(format!(
                "unknown mirror '{other}' (expected dielectric, metallic or both)"
            )),
        }
    }
}

impl fmt::Display for MirrorChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MirrorChoice::Dielectric => "dielectric",
            MirrorChoice::Metallic => "metallic",
            MirrorChoice::Both => "both",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum OutputFormat {
    #[default]
    #[serde(rename = "csv")]
    Csv,
    #[serde(rename = "json")]
    Json,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(format!("unknown format '{other}' (expected csv or json)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepConfig {
    /// Model parameters; `g` is overwritten at each grid point.
    pub params_base: ModelParams,
    pub g_min: f64,
    pub g_max: f64,
    pub steps: usize,
    pub weighting: WeightingMode,
    pub mirror: MirrorChoice,
    pub output_format: OutputFormat,
    /// `None` writes to stdout. Not echoed into output metadata.
    #[serde(skip)]
    pub output_path: Option<PathBuf>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            params_base: ModelParams {
                omega_c: 1.0,
                omega_ex: 1.0,
                g: 0.0,
                variant: Variant::FullHopfield,
                include_antiresonant: true,
                kappa0: 0.01,
            },
            g_min: 0.0,
            g_max: 1.0,
            steps: 201,
            weighting: WeightingMode::PhotonWeighted,
            mirror: MirrorChoice::Both,
            output_format: OutputFormat::Csv,
            output_path: None,
        }
    }
}

impl SweepConfig {
    /// Evenly spaced couplings from `g_min` to `g_max` inclusive.
    pub fn grid(&self) -> Vec<f64> {
        let last = self.steps - 1;
        let span = self.g_max - self.g_min;
        (0..self.steps)
            .map(|k| {
                if k == last {
                    self.g_max
                } else {
                    self.g_min + span * k as f64 / last as f64
                }
            })
            .collect()
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        let p = &self.params_base;
        let positive = |name: &str, v: f64| {
            if v.is_finite() && v > 0.0 {
                Ok(())
            } else {
                Err(ConfigError::Usage(format!(
                    "--{name} must be a positive number, got {v}"
                )))
            }
        };
        positive("omega-c", p.omega_c)?;
        positive("omega-ex", p.omega_ex)?;
        // rates are reported in units of κ₀
        positive("kappa0", p.kappa0)?;
        if !(self.g_min.is_finite() && self.g_min >= 0.0) {
            return Err(ConfigError::Usage(format!(
                "--g-min must be nonnegative, got {}",
                self.g_min
            )));
        }
        if !(self.g_max.is_finite() && self.g_max > self.g_min) {
            return Err(ConfigError::Usage(format!(
                "--g-max ({}) must exceed --g-min ({})",
                self.g_max, self.g_min
            )));
        }
        if self.steps < 2 {
            return Err(ConfigError::Usage(format!(
                "--steps must be at least 2, got {}",
                self.steps
            )));
        }
        Ok(())
    }
}

fn parse_switch(s: &str) -> Result<bool, String> {
    match s.trim() {
        "on" => Ok(true),
        "off" => Ok(false),
        other => Err(format!("expected on or off, got '{other}'")),
    }
}

/// Sweep polariton dissipation rates over the vacuum Rabi frequency g.
#[derive(Debug, Default, Parser)]
#[command(name = "usc-sweep", version, about)]
struct Flags {
    /// Cavity frequency (units of omega_ex)
    #[arg(long = "omega-c", value_name = "F")]
    omega_c: Option<f64>,
    /// Matter resonance frequency
    #[arg(long = "omega-ex", value_name = "F")]
    omega_ex: Option<f64>,
    #[arg(long = "g-min", value_name = "G")]
    g_min: Option<f64>,
    #[arg(long = "g-max", value_name = "G")]
    g_max: Option<f64>,
    /// Number of grid points, including both ends
    #[arg(long, value_name = "N")]
    steps: Option<usize>,
    /// Bare cavity loss rate
    #[arg(long, value_name = "RATE")]
    kappa0: Option<f64>,
    /// no-a2 | full-hopfield
    #[arg(long, value_name = "VARIANT")]
    variant: Option<Variant>,
    /// on | off
    #[arg(long, value_name = "on|off", value_parser = parse_switch)]
    antiresonant: Option<bool>,
    /// bare | photon-weighted
    #[arg(long, value_name = "MODE")]
    weighting: Option<WeightingMode>,
    /// dielectric | metallic | both
    #[arg(long, value_name = "MIRROR")]
    mirror: Option<MirrorChoice>,
    /// csv | json
    #[arg(long, value_name = "FORMAT")]
    format: Option<OutputFormat>,
    /// Output file; stdout when omitted
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// key=value configuration file
    #[arg(long, value_name = "PATH")]
    config: Option<PathBuf>,
}

impl Flags {
    fn apply_to(self, cfg: &mut SweepConfig) {
        let p = &mut cfg.params_base;
        if let Some(v) = self.omega_c {
            p.omega_c = v;
        }
        if let Some(v) = self.omega_ex {
            p.omega_ex = v;
        }
        if let Some(v) = self.kappa0 {
            p.kappa0 = v;
        }
        if let Some(v) = self.variant {
            p.variant = v;
        }
        if let Some(v) = self.antiresonant {
            p.include_antiresonant = v;
        }
        if let Some(v) = self.g_min {
            cfg.g_min = v;
        }
        if let Some(v) = self.g_max {
            cfg.g_max = v;
        }
        if let Some(v) = self.steps {
            cfg.steps = v;
        }
        if let Some(v) = self.weighting {
            cfg.weighting = v;
        }
        if let Some(v) = self.mirror {
            cfg.mirror = v;
        }
        if let Some(v) = self.format {
            cfg.output_format = v;
        }
        if let Some(v) = self.out {
            cfg.output_path = Some(v);
        }
    }
}

fn parse_value<T: FromStr>(key: &str, value: &str, line: usize) -> Result<T, ConfigError>
where
    T::Err: fmt::Display,
{
    value.parse::<T>().map_err(|e| {
        ConfigError::Usage(format!(
            "config line {line}: invalid value '{value}' for key '{key}': {e}"
        ))
    })
}

/// Applies `key=value` lines on top of `cfg`. Blank lines and lines starting
/// with `#` are skipped; unknown keys are rejected.
pub fn apply_config_text(cfg: &mut SweepConfig, text: &str) -> Result<(), ConfigError> {
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let (key, value) = trimmed.split_once('=').ok_or_else(|| {
            ConfigError::Usage(format!(
                "config line {line}: expected key=value, got '{trimmed}'"
            ))
        })?;
        let key = key.trim().replace('_', "-");
        let value = value.trim();
        let p = &mut cfg.params_base;
        match key.as_str() {
            "omega-c" => p.omega_c = parse_value(&key, value, line)?,
            "omega-ex" => p.omega_ex = parse_value(&key, value, line)?,
            "kappa0" => p.kappa0 = parse_value(&key, value, line)?,
            "variant" => p.variant = parse_value(&key, value, line)?,
            "antiresonant" => {
                p.include_antiresonant = parse_switch(value).map_err(|e| {
                    ConfigError::Usage(format!("config line {line}: key 'antiresonant': {e}"))
                })?
            }
            "g-min" => cfg.g_min = parse_value(&key, value, line)?,
            "g-max" => cfg.g_max = parse_value(&key, value, line)?,
            "steps" => cfg.steps = parse_value(&key, value, line)?,
            "weighting" => cfg.weighting = parse_value(&key, value, line)?,
            "mirror" => cfg.mirror = parse_value(&key, value, line)?,
            "format" => cfg.output_format = parse_value(&key, value, line)?,
            "out" => cfg.output_path = Some(PathBuf::from(value)),
            _ => {
                return Err(ConfigError::Usage(format!(
                    "config line {line}: unknown key '{key}'"
                )))
            }
        }
    }
    Ok(())
}

/// Builds a [`SweepConfig`] from command-line arguments (without the program
/// name). A `--config PATH` file is read and applied before the flags.
pub fn parse_config<I, T>(args: I) -> Result<SweepConfig, ConfigError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    parse_config_with(args, |path| {
        std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
            path: path.to_path_buf(),
            source,
        })
    })
}

/// Like [`parse_config`] with a caller-supplied reader for the config file.
pub fn parse_config_with<I, T, R>(args: I, read_file: R) -> Result<SweepConfig, ConfigError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
    R: FnOnce(&Path) -> Result<String, ConfigError>,
{
    let argv = std::iter::once(OsString::from("usc-sweep")).chain(args.into_iter().map(Into::into));
    let flags = Flags::try_parse_from(argv).map_err(|e| match e.kind() {
        clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
            ConfigError::Help(e.to_string())
        }
        _ => ConfigError::Usage(e.to_string().trim_end().to_string()),
    })?;

    let mut cfg = SweepConfig::default();
    if let Some(path) = flags.config.as_deref() {
        let text = read_file(path)?;
        apply_config_text(&mut cfg, &text)?;
    }
    flags.apply_to(&mut cfg);
    cfg.validate()?;
    Ok(cfg)
}
