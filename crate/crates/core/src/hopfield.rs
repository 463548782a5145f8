//! Single-mode Hopfield model and its Bogoliubov diagonalization.
//!
//! The Hamiltonian couples one cavity mode `a` (frequency `ω_c`) to one
//! bosonic matter mode `b` (frequency `ω_ex`):
//!
//! ```text
//! H = ω_c a†a + ω_ex b†b + g (a†b + b†a) + s g (a†b† + ab) + D (a + a†)²
//! ```
//!
//! with `s = 1` when antiresonant terms are kept and `D = g²/ω_ex` for the
//! full Hopfield variant (`D = 0` without the diamagnetic term). When
//! antiresonant terms are dropped, every pair-creating term goes, including
//! `D (a² + a†²)`; the number-conserving shift `2D a†a` stays.
//!
//! The quadratic form is written as `H = ½ v† H_q v` with the operator vector
//! `v = (a, b, a†, b†)`. Its commutator action is `[v, H] = J H_q v` with
//! `J = diag(1, 1, -1, -1)`; [`BogoliubovMatrix`] stores `J H_q`.
//!
//! Polariton operators are `p_j = w_j a + x_j b + y_j a† + z_j b†`. The
//! inverse expansion of the photon operator is
//! `a = Σ_j (w_j* p_j - y_j p_j†)`.

use std::fmt;
use std::str::FromStr;

use nalgebra::{Cholesky, Matrix2, Matrix4, SymmetricEigen, Vector4};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Tolerance used by the completeness invariants.
pub const COMPLETENESS_TOL: f64 = 1e-10;

/// Minimum splitting between the two branches before the spectrum is
/// reported as degenerate.
pub const DEGENERACY_TOL: f64 = 1e-12;

/// Below this relative size the photon weight `w` is treated as zero and the
/// phase is fixed on the matter weight `x` instead.
pub(crate) const PHASE_REFERENCE_EPS: f64 = 1e-12;

/// Labels of the operator basis the dynamical matrix acts on.
pub const BASIS_LABELS: [&str; 4] = ["a", "b", "a†", "b†"];

#[derive(Debug, Error, Clone, PartialEq)]
pub enum HopfieldError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("unstable system: {0}")]
    UnstableSystem(String),
    #[error("degenerate spectrum: Ω_L = {lower}, Ω_U = {upper}")]
    DegenerateSpectrum { lower: f64, upper: f64 },
}

/// Which Hamiltonian is assembled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variant {
    /// Two coupled oscillators, no diamagnetic term.
    #[serde(rename = "no-a2")]
    NoA2,
    /// Coupled oscillators plus `D (a + a†)²` with `D = g²/ω_ex`.
    #[serde(rename = "full-hopfield")]
    FullHopfield,
}

impl Variant {
    pub fn as_str(self) -> &'static str {
        match self {
            Variant::NoA2 => "no-a2",
            Variant::FullHopfield => "full-hopfield",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "no-a2" => Ok(Variant::NoA2),
            "full-hopfield" => Ok(Variant::FullHopfield),
            other => Err(format!(
                "unknown variant '{other}' (expected no-a2 or full-hopfield)"
            )),
        }
    }
}

/// Physical parameters of the cavity-matter system. Frequencies and rates
/// share one unit, conventionally `ω_ex`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModelParams {
    pub omega_c: f64,
    pub omega_ex: f64,
    /// Vacuum Rabi frequency.
    pub g: f64,
    pub variant: Variant,
    pub include_antiresonant: bool,
    /// Bare loss rate of the cavity mode.
    pub kappa0: f64,
}

impl ModelParams {
    pub fn new(
        omega_c: f64,
        omega_ex: f64,
        g: f64,
        variant: Variant,
        include_antiresonant: bool,
        kappa0: f64,
    ) -> Result<Self, HopfieldError> {
        let params = ModelParams {
            omega_c,
            omega_ex,
            g,
            variant,
            include_antiresonant,
            kappa0,
        };
        params.validate()?;
        Ok(params)
    }

    /// Resonant cavity (`ω_c = ω_ex = 1`), antiresonant terms on, `κ₀ = 1`.
    pub fn resonant(g: f64, variant: Variant) -> Result<Self, HopfieldError> {
        Self::new(1.0, 1.0, g, variant, true, 1.0)
    }

    /// Same parameters with a different coupling. Not validated until used.
    pub fn with_g(mut self, g: f64) -> Self {
        self.g = g;
        self
    }

    pub fn validate(&self) -> Result<(), HopfieldError> {
        let finite = [self.omega_c, self.omega_ex, self.g, self.kappa0]
            .iter()
            .all(|v| v.is_finite());
        if !finite {
            return Err(HopfieldError::InvalidParams(
                "all parameters must be finite".into(),
            ));
        }
        if self.omega_c <= 0.0 {
            return Err(HopfieldError::InvalidParams(format!(
                "omega_c must be positive, got {}",
                self.omega_c
            )));
        }
        if self.omega_ex <= 0.0 {
            return Err(HopfieldError::InvalidParams(format!(
                "omega_ex must be positive, got {}",
                self.omega_ex
            )));
        }
        if self.g < 0.0 {
            return Err(HopfieldError::InvalidParams(format!(
                "g must be nonnegative, got {}",
                self.g
            )));
        }
        if self.kappa0 < 0.0 {
            return Err(HopfieldError::InvalidParams(format!(
                "kappa0 must be nonnegative, got {}",
                self.kappa0
            )));
        }
        if let Some(bound) = self.stability_bound() {
            if self.g >= bound {
                return Err(HopfieldError::InvalidParams(format!(
                    "g = {} exceeds the superradiant stability bound {} of the no-a2 model",
                    self.g, bound
                )));
            }
        }
        Ok(())
    }

    /// Coupling at which the antiresonant two-oscillator model without the
    /// diamagnetic term loses stability, `√(ω_c ω_ex)/2`. `None` for variants
    /// that stay stable at any `g`.
    pub fn stability_bound(&self) -> Option<f64> {
        match (self.variant, self.include_antiresonant) {
            (Variant::NoA2, true) => Some((self.omega_c * self.omega_ex).sqrt() / 2.0),
            _ => None,
        }
    }

    /// Diamagnetic prefactor `D` of `D (a + a†)²`.
    pub fn diamagnetic(&self) -> f64 {
        match self.variant {
            Variant::NoA2 => 0.0,
            Variant::FullHopfield => self.g * self.g / self.omega_ex,
        }
    }
}

/// Dynamical matrix `M = J H_q` acting on `(a, b, a†, b†)`:
/// `[v_i, H] = Σ_k M_ik v_k`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BogoliubovMatrix {
    pub m: Matrix4<f64>,
}

impl BogoliubovMatrix {
    pub const BASIS_LABELS: [&'static str; 4] = BASIS_LABELS;

    /// Symmetric quadratic form `H_q = J M`.
    pub fn quadratic_form(&self) -> Matrix4<f64> {
        metric() * self.m
    }

    /// True when no entry couples the annihilation and creation sectors.
    pub fn conserves_number(&self) -> bool {
        (0..2).all(|i| (2..4).all(|k| self.m[(i, k)] == 0.0 && self.m[(k, i)] == 0.0))
    }
}

fn metric() -> Matrix4<f64> {
    Matrix4::from_diagonal(&Vector4::new(1.0, 1.0, -1.0, -1.0))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Branch {
    Lower,
    Upper,
}

impl Branch {
    pub const BOTH: [Branch; 2] = [Branch::Lower, Branch::Upper];

    pub fn suffix(self) -> &'static str {
        match self {
            Branch::Lower => "L",
            Branch::Upper => "U",
        }
    }
}

/// One polariton `p = w a + x b + y a† + z b†` with frequency `omega_pol`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PolaritonBranch {
    pub branch: Branch,
    pub omega_pol: f64,
    /// Photon annihilation weight.
    pub w: Complex64,
    /// Matter annihilation weight.
    pub x: Complex64,
    /// Photon creation (antiresonant) weight.
    pub y: Complex64,
    /// Matter creation weight.
    pub z: Complex64,
}

impl PolaritonBranch {
    /// `|w|² + |x|² - |y|² - |z|²`, equal to 1 for a bosonic operator.
    pub fn bogoliubov_norm(&self) -> f64 {
        self.w.norm_sqr() + self.x.norm_sqr() - self.y.norm_sqr() - self.z.norm_sqr()
    }

    pub fn coefficients(&self) -> [Complex64; 4] {
        [self.w, self.x, self.y, self.z]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HopfieldDecomposition {
    pub params: ModelParams,
    pub lower: PolaritonBranch,
    pub upper: PolaritonBranch,
}

impl HopfieldDecomposition {
    pub fn branch(&self, branch: Branch) -> &PolaritonBranch {
        match branch {
            Branch::Lower => &self.lower,
            Branch::Upper => &self.upper,
        }
    }

    pub fn branches(&self) -> [&PolaritonBranch; 2] {
        [&self.lower, &self.upper]
    }

    /// `Σ_j |w_j|²`, which exceeds 1 whenever the photon creation weights
    /// are nonzero.
    pub fn photon_weight_sum(&self) -> f64 {
        self.lower.w.norm_sqr() + self.upper.w.norm_sqr()
    }
}

/// Assembles `M = J H_q` for the requested variant.
pub fn build_hopfield_matrix(params: &ModelParams) -> Result<BogoliubovMatrix, HopfieldError> {
    params.validate()?;
    let g = params.g;
    let d = params.diamagnetic();
    let s = if params.include_antiresonant {
        1.0
    } else {
        0.0
    };

    // number-conserving block A and pair block B of H_q = [[A, B], [B, A]]
    let a = Matrix2::new(params.omega_c + 2.0 * d, g, g, params.omega_ex);
    let b = Matrix2::new(2.0 * d * s, g * s, g * s, 0.0);

    let mut h = Matrix4::zeros();
    h.fixed_view_mut::<2, 2>(0, 0).copy_from(&a);
    h.fixed_view_mut::<2, 2>(2, 2).copy_from(&a);
    h.fixed_view_mut::<2, 2>(0, 2).copy_from(&b);
    h.fixed_view_mut::<2, 2>(2, 0).copy_from(&b);

    Ok(BogoliubovMatrix { m: metric() * h })
}

/// Bogoliubov diagonalization of a stable quadratic Hamiltonian.
///
/// Uses the Cholesky construction of Colpa: with `H_q = K†K`, the matrix
/// `K J K†` is symmetric with eigenvalues `±Ω_j`, and the polariton row for
/// `+Ω_j` is `u_j† K / √Ω_j`. A Hamiltonian that is not positive definite is
/// rejected as unstable. Number-conserving Hamiltonians reduce to the
/// symmetric 2×2 block, which keeps `y = z = 0` exact.
pub fn diagonalize(
    matrix: &BogoliubovMatrix,
    params: &ModelParams,
) -> Result<HopfieldDecomposition, HopfieldError> {
    let h = matrix.quadratic_form();
    if !h.iter().all(|v| v.is_finite()) {
        return Err(HopfieldError::InvalidParams(
            "matrix has non-finite entries".into(),
        ));
    }
    let asym = (h - h.transpose()).amax();
    if asym > 1e-12 * h.amax().max(1.0) {
        return Err(HopfieldError::InvalidParams(format!(
            "J·M is not symmetric (max asymmetry {asym:e})"
        )));
    }

    let mut modes = if matrix.conserves_number() {
        number_conserving_modes(&h)?
    } else {
        colpa_modes(&h)?
    };
    modes.sort_by(|p, q| p.0.total_cmp(&q.0));
    let [(omega_l, row_l), (omega_u, row_u)] = modes;

    if omega_u - omega_l < DEGENERACY_TOL {
        return Err(HopfieldError::DegenerateSpectrum {
            lower: omega_l,
            upper: omega_u,
        });
    }

    let make = |branch, omega_pol, row: [f64; 4]| {
        let [w, x, y, z] = fix_phase(row.map(|c| Complex64::new(c, 0.0)));
        PolaritonBranch {
            branch,
            omega_pol,
            w,
            x,
            y,
            z,
        }
    };

    Ok(HopfieldDecomposition {
        params: *params,
        lower: make(Branch::Lower, omega_l, row_l),
        upper: make(Branch::Upper, omega_u, row_u),
    })
}

fn number_conserving_modes(h: &Matrix4<f64>) -> Result<[(f64, [f64; 4]); 2], HopfieldError> {
    let a: Matrix2<f64> = h.fixed_view::<2, 2>(0, 0).into_owned();
    let eig = SymmetricEigen::new(a);
    let mut out = [(0.0, [0.0; 4]); 2];
    for (k, slot) in out.iter_mut().enumerate() {
        let omega = eig.eigenvalues[k];
        if omega <= 0.0 {
            return Err(HopfieldError::UnstableSystem(format!(
                "mode frequency {omega} is not positive"
            )));
        }
        let u = eig.eigenvectors.column(k);
        *slot = (omega, [u[0], u[1], 0.0, 0.0]);
    }
    Ok(out)
}

fn colpa_modes(h: &Matrix4<f64>) -> Result<[(f64, [f64; 4]); 2], HopfieldError> {
    let chol = Cholesky::new(*h).ok_or_else(|| {
        HopfieldError::UnstableSystem("quadratic form is not positive definite".into())
    })?;
    // H_q = L Lᵀ, so K = Lᵀ.
    let l = chol.l();
    let w = l.transpose() * metric() * l;
    let eig = SymmetricEigen::new(w);

    let positive: Vec<usize> = (0..4).filter(|&k| eig.eigenvalues[k] > 0.0).collect();
    if positive.len() != 2 {
        return Err(HopfieldError::UnstableSystem(format!(
            "expected two positive frequencies, got eigenvalues {:?}",
            eig.eigenvalues.as_slice()
        )));
    }

    let mut out = [(0.0, [0.0; 4]); 2];
    for (slot, &k) in out.iter_mut().zip(&positive) {
        let omega = eig.eigenvalues[k];
        let row = l * eig.eigenvectors.column(k) / omega.sqrt();
        *slot = (omega, [row[0], row[1], row[2], row[3]]);
    }
    Ok(out)
}

/// Rotates a polariton row so that `w` is real and nonnegative, or `x` when
/// `w` vanishes.
pub(crate) fn fix_phase(row: [Complex64; 4]) -> [Complex64; 4] {
    let scale = row.iter().map(|c| c.norm()).fold(0.0, f64::max);
    let reference = if row[0].norm() > PHASE_REFERENCE_EPS * scale {
        row[0]
    } else {
        row[1]
    };
    let r = reference.norm();
    if r == 0.0 {
        return row;
    }
    let phase = reference.conj() / r;
    row.map(|c| c * phase)
}

/// `|Σ_j (|w_j|² - |y_j|²) - 1|`.
pub fn photon_completeness(dec: &HopfieldDecomposition) -> f64 {
    let sum: f64 = dec
        .branches()
        .iter()
        .map(|p| p.w.norm_sqr() - p.y.norm_sqr())
        .sum();
    (sum - 1.0).abs()
}

/// `|Σ_j (|x_j|² - |z_j|²) - 1|`.
pub fn matter_completeness(dec: &HopfieldDecomposition) -> f64 {
    let sum: f64 = dec
        .branches()
        .iter()
        .map(|p| p.x.norm_sqr() - p.z.norm_sqr())
        .sum();
    (sum - 1.0).abs()
}
