use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::{MirrorChoice, SweepConfig, SweepError};
use crate::dissipation::{compute_rateset, RateSet};
use crate::hopfield::{build_hopfield_matrix, diagonalize, Variant};

/// Rate differences (in units of κ₀) at or below this count as ties when
/// comparing branch orderings.
pub const ORDERING_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Metadata {
    pub library_version: String,
    pub variant: Variant,
    pub config: SweepConfig,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub max_ratio_naive_over_norm: f64,
    pub g_at_max: f64,
    /// Largest `|κ_norm - κ_mbc_metal| / κ₀` over grid points and branches.
    pub max_rel_dev_norm_vs_metal: f64,
    /// Fraction of grid points where the normalized-RWA branch ordering
    /// matches the selected mirror model's ordering.
    pub ordering_agreement_fraction: f64,
}

impl Summary {
    /// `None` for an empty row set.
    pub fn from_rows(rows: &[RateSet], mirror: MirrorChoice) -> Option<Summary> {
        let first = rows.first()?;
        let (mut max_ratio, mut g_at_max) = (first.ratio_naive_over_norm, first.g);
        for r in &rows[1..] {
            if r.ratio_naive_over_norm > max_ratio {
                max_ratio = r.ratio_naive_over_norm;
                g_at_max = r.g;
            }
        }
        let max_dev = rows
            .iter()
            .flat_map(|r| {
                [
                    (r.kappa_norm_lower - r.kappa_mbc_metal_lower).abs(),
                    (r.kappa_norm_upper - r.kappa_mbc_metal_upper).abs(),
                ]
            })
            .fold(0.0, f64::max);
        Some(Summary {
            max_ratio_naive_over_norm: max_ratio,
            g_at_max,
            max_rel_dev_norm_vs_metal: max_dev,
            ordering_agreement_fraction: ordering_agreement_fraction(rows, mirror),
        })
    }
}

/// `Less` when the lower branch has the smaller rate.
pub fn branch_ordering(lower: f64, upper: f64) -> Ordering {
    if (lower - upper).abs() <= ORDERING_TOL {
        Ordering::Equal
    } else {
        lower.total_cmp(&upper)
    }
}

/// Fraction of rows whose normalized-RWA branch ordering equals that of the
/// mirror model (`Both` compares against the metallic mirror).
pub fn ordering_agreement_fraction(rows: &[RateSet], mirror: MirrorChoice) -> f64 {
    if rows.is_empty() {
        return 0.0;
    }
    let agreeing = rows
        .iter()
        .filter(|r| {
            let norm = branch_ordering(r.kappa_norm_lower, r.kappa_norm_upper);
            let mbc = match mirror {
                MirrorChoice::Dielectric => {
                    branch_ordering(r.kappa_mbc_diel_lower, r.kappa_mbc_diel_upper)
                }
                MirrorChoice::Metallic | MirrorChoice::Both => {
                    branch_ordering(r.kappa_mbc_metal_lower, r.kappa_mbc_metal_upper)
                }
            };
            norm == mbc
        })
        .count();
    agreeing as f64 / rows.len() as f64
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SkippedPoint {
    pub g: f64,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepResult {
    pub metadata: Metadata,
    pub summary: Summary,
    /// Rates in units of κ₀, ascending in `g`.
    pub rows: Vec<RateSet>,
    /// Grid points that could not be solved (unstable or degenerate).
    pub skipped: Vec<SkippedPoint>,
}

/// Solves every grid point. Points that fail to build, diagonalize or yield
/// rates are recorded in `skipped` instead of aborting the sweep.
pub fn run_sweep(config: &SweepConfig) -> Result<SweepResult, SweepError> {
    let kappa0 = config.params_base.kappa0;
    let mut rows = Vec::with_capacity(config.steps);
    let mut skipped = Vec::new();

    for g in config.grid() {
        let params = config.params_base.with_g(g);
        let outcome = build_hopfield_matrix(&params)
            .and_then(|m| diagonalize(&m, &params))
            .map_err(|e| e.to_string())
            .and_then(|dec| compute_rateset(&dec, config.weighting).map_err(|e| e.to_string()));
        match outcome {
            Ok(rates) => rows.push(rates.in_units_of(kappa0)),
            Err(reason) => skipped.push(SkippedPoint { g, reason }),
        }
    }

    let summary = Summary::from_rows(&rows, config.mirror).ok_or(SweepError::NoStablePoints {
        skipped: skipped.len(),
    })?;
    Ok(SweepResult {
        metadata: Metadata {
            library_version: crate::VERSION.to_string(),
            variant: config.params_base.variant,
            config: config.clone(),
        },
        summary,
        rows,
        skipped,
    })
}
