//! Polariton loss rates under the four dissipation models.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hopfield::{Branch, HopfieldDecomposition};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DissipationError {
    #[error("both photon weights vanish, normalized rate undefined")]
    ZeroPhotonWeight,
    #[error("metallic-mirror rate is singular at omega = {0}")]
    DomainError(f64),
}

/// How the mirror-boundary rates are assigned to a polariton branch.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum WeightingMode {
    /// `κ_MBC(Ω_j)` as is.
    #[serde(rename = "bare")]
    Bare,
    /// `κ_MBC(Ω_j)` times the normalized photon fraction `|w_j|²/Σ|w|²`.
    #[default]
    #[serde(rename = "photon-weighted")]
    PhotonWeighted,
}

impl fmt::Display for WeightingMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WeightingMode::Bare => "bare",
            WeightingMode::PhotonWeighted => "photon-weighted",
        })
    }
}

impl FromStr for WeightingMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "bare" => Ok(WeightingMode::Bare),
            "photon-weighted" => Ok(WeightingMode::PhotonWeighted),
            other => Err(format!(
                "unknown weighting '{other}' (expected bare or photon-weighted)"
            )),
        }
    }
}

/// Rate with the antiresonant weights simply dropped: `|w_j|² κ_m`.
pub fn naive_rwa_rate(w: Complex64, kappa_m: f64) -> f64 {
    w.norm_sqr() * kappa_m
}

/// Rate after renormalizing the photon weights to unit total:
/// `|w_j|² / (|w_L|² + |w_U|²) κ_m`.
pub fn normalized_rwa_rate(
    w_lower: Complex64,
    w_upper: Complex64,
    branch: Branch,
    kappa_m: f64,
) -> Result<f64, DissipationError> {
    let total = w_lower.norm_sqr() + w_upper.norm_sqr();
    if total <= 0.0 {
        return Err(DissipationError::ZeroPhotonWeight);
    }
    let own = match branch {
        Branch::Lower => w_lower.norm_sqr(),
        Branch::Upper => w_upper.norm_sqr(),
    };
    Ok(own / total * kappa_m)
}

/// Mirror with `ω⁻¹` permittivity: `κ₀ / (1 + (Ω/ω_ex)²)`. Strictly
/// decreasing in `Ω`.
pub fn mbc_dielectric_rate(omega: f64, omega_ex: f64, kappa0: f64) -> f64 {
    let r = omega / omega_ex;
    kappa0 / (1.0 + r * r)
}

/// Metallic mirror with `ω⁻²` permittivity: `κ₀ / (1 + (ω_ex/Ω)²)`. Strictly
/// increasing in `Ω`; singular at `Ω = 0`.
pub fn mbc_metallic_rate(omega: f64, omega_ex: f64, kappa0: f64) -> Result<f64, DissipationError> {
    if omega <= 0.0 || !omega.is_finite() {
        return Err(DissipationError::DomainError(omega));
    }
    let r = omega_ex / omega;
    Ok(kappa0 / (1.0 + r * r))
}

/// Loss rates of a single branch.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BranchRates {
    pub omega_pol: f64,
    pub kappa_naive: f64,
    pub kappa_norm: f64,
    pub kappa_mbc_diel: f64,
    pub kappa_mbc_metal: f64,
}

/// All four rates for both branches at one coupling strength.
///
/// Field names in serialized form match the CSV columns.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RateSet {
    pub g: f64,
    #[serde(rename = "omega_L")]
    pub omega_lower: f64,
    #[serde(rename = "omega_U")]
    pub omega_upper: f64,
    #[serde(rename = "kappa_naive_L")]
    pub kappa_naive_lower: f64,
    #[serde(rename = "kappa_naive_U")]
    pub kappa_naive_upper: f64,
    #[serde(rename = "kappa_norm_L")]
    pub kappa_norm_lower: f64,
    #[serde(rename = "kappa_norm_U")]
    pub kappa_norm_upper: f64,
    #[serde(rename = "kappa_mbc_diel_L")]
    pub kappa_mbc_diel_lower: f64,
    #[serde(rename = "kappa_mbc_diel_U")]
    pub kappa_mbc_diel_upper: f64,
    #[serde(rename = "kappa_mbc_metal_L")]
    pub kappa_mbc_metal_lower: f64,
    #[serde(rename = "kappa_mbc_metal_U")]
    pub kappa_mbc_metal_upper: f64,
    /// `Σ_j |w_j|²`, the factor by which naive rates exceed normalized ones.
    pub ratio_naive_over_norm: f64,
}

impl RateSet {
    pub const COLUMNS: [&'static str; 12] = [
        "g",
        "omega_L",
        "omega_U",
        "kappa_naive_L",
        "kappa_naive_U",
        "kappa_norm_L",
        "kappa_norm_U",
        "kappa_mbc_diel_L",
        "kappa_mbc_diel_U",
        "kappa_mbc_metal_L",
        "kappa_mbc_metal_U",
        "ratio_naive_over_norm",
    ];

    /// Values in [`RateSet::COLUMNS`] order.
    pub fn values(&self) -> [f64; 12] {
        [
            self.g,
            self.omega_lower,
            self.omega_upper,
            self.kappa_naive_lower,
            self.kappa_naive_upper,
            self.kappa_norm_lower,
            self.kappa_norm_upper,
            self.kappa_mbc_diel_lower,
            self.kappa_mbc_diel_upper,
            self.kappa_mbc_metal_lower,
            self.kappa_mbc_metal_upper,
            self.ratio_naive_over_norm,
        ]
    }

    pub fn branch(&self, branch: Branch) -> BranchRates {
        match branch {
            Branch::Lower => BranchRates {
                omega_pol: self.omega_lower,
                kappa_naive: self.kappa_naive_lower,
                kappa_norm: self.kappa_norm_lower,
                kappa_mbc_diel: self.kappa_mbc_diel_lower,
                kappa_mbc_metal: self.kappa_mbc_metal_lower,
            },
            Branch::Upper => BranchRates {
                omega_pol: self.omega_upper,
                kappa_naive: self.kappa_naive_upper,
                kappa_norm: self.kappa_norm_upper,
                kappa_mbc_diel: self.kappa_mbc_diel_upper,
                kappa_mbc_metal: self.kappa_mbc_metal_upper,
            },
        }
    }

    /// Rates divided by `kappa0`; frequencies, `g` and the ratio unchanged.
    pub fn in_units_of(&self, kappa0: f64) -> RateSet {
        RateSet {
            kappa_naive_lower: self.kappa_naive_lower / kappa0,
            kappa_naive_upper: self.kappa_naive_upper / kappa0,
            kappa_norm_lower: self.kappa_norm_lower / kappa0,
            kappa_norm_upper: self.kappa_norm_upper / kappa0,
            kappa_mbc_diel_lower: self.kappa_mbc_diel_lower / kappa0,
            kappa_mbc_diel_upper: self.kappa_mbc_diel_upper / kappa0,
            kappa_mbc_metal_lower: self.kappa_mbc_metal_lower / kappa0,
            kappa_mbc_metal_upper: self.kappa_mbc_metal_upper / kappa0,
            ..*self
        }
    }
}

/// Evaluates every model for both branches with `κ_m = κ₀`.
pub fn compute_rateset(
    dec: &HopfieldDecomposition,
    weighting: WeightingMode,
) -> Result<RateSet, DissipationError> {
    let p = &dec.params;
    let kappa0 = p.kappa0;
    let (w_l, w_u) = (dec.lower.w, dec.upper.w);

    let mut rates = [BranchRates {
        omega_pol: 0.0,
        kappa_naive: 0.0,
        kappa_norm: 0.0,
        kappa_mbc_diel: 0.0,
        kappa_mbc_metal: 0.0,
    }; 2];
    for (slot, branch) in rates.iter_mut().zip(Branch::BOTH) {
        let pol = dec.branch(branch);
        let fraction = normalized_rwa_rate(w_l, w_u, branch, 1.0)?;
        let weight = match weighting {
            WeightingMode::Bare => 1.0,
            WeightingMode::PhotonWeighted => fraction,
        };
        *slot = BranchRates {
            omega_pol: pol.omega_pol,
            kappa_naive: naive_rwa_rate(pol.w, kappa0),
            kappa_norm: normalized_rwa_rate(w_l, w_u, branch, kappa0)?,
            kappa_mbc_diel: weight * mbc_dielectric_rate(pol.omega_pol, p.omega_ex, kappa0),
            kappa_mbc_metal: weight * mbc_metallic_rate(pol.omega_pol, p.omega_ex, kappa0)?,
        };
    }
    let [lo, up] = rates;

    Ok(RateSet {
        g: p.g,
        omega_lower: lo.omega_pol,
        omega_upper: up.omega_pol,
        kappa_naive_lower: lo.kappa_naive,
        kappa_naive_upper: up.kappa_naive,
        kappa_norm_lower: lo.kappa_norm,
        kappa_norm_upper: up.kappa_norm,
        kappa_mbc_diel_lower: lo.kappa_mbc_diel,
        kappa_mbc_diel_upper: up.kappa_mbc_diel,
        kappa_mbc_metal_lower: lo.kappa_mbc_metal,
        kappa_mbc_metal_upper: up.kappa_mbc_metal,
        ratio_naive_over_norm: dec.photon_weight_sum(),
    })
}
