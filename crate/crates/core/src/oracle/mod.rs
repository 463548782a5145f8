//! Independent verification path for the Hopfield diagonalization.
//!
//! Nothing here touches the main eigensolver. The dynamical matrix is rebuilt
//! by symbolic commutation of the Hamiltonian's quadratic monomials, the
//! frequencies are roots of its characteristic polynomial, and the polariton
//! rows are left null vectors of `M - λI` read off its adjugate. The oracle
//! favors transparency over speed.

mod golden;
mod poly;

pub use golden::{
    canonical_parameter_sets, canonical_records, format_records, parse_records, GoldenOutcome,
    GoldenParseError, GoldenRecord,
};

use nalgebra::Matrix4;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hopfield::{
    BogoliubovMatrix, HopfieldDecomposition, ModelParams, Variant, DEGENERACY_TOL,
};
use poly::Mat4;

/// Largest tolerated imaginary part of a root, relative to its size.
pub const REALITY_TOL: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum OracleError {
    #[error("unstable system: {0}")]
    UnstableSystem(String),
    #[error("root finder did not converge after {iterations} iterations")]
    NoConvergence { iterations: usize },
    #[error("degenerate spectrum: Ω_L = {lower}, Ω_U = {upper}")]
    DegenerateSpectrum { lower: f64, upper: f64 },
}

/// Roots and Bogoliubov rows from the oracle.
///
/// `frequencies` is `(Ω_L, Ω_U, -Ω_L, -Ω_U)` as found by the root finder
/// (the negative pair is not forced to mirror the positive one), and
/// `coefficients[k]` is the row `(w, x, y, z)` of the mode at
/// `frequencies[k]`: rows 0 and 1 are `p_L`, `p_U`; rows 2 and 3 are
/// `p_L†`, `p_U†`.
#[derive(Debug, Clone, PartialEq)]
pub struct OracleSolution {
    pub frequencies: [f64; 4],
    pub coefficients: [[Complex64; 4]; 4],
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OracleReport {
    pub params: ModelParams,
    /// Largest normalized `|det(M - λI)|` at the decomposition's `±Ω_j`.
    pub eig_residual: f64,
    /// Largest `|Ω + Ω'|` over the oracle's matched `±` root pairs.
    pub pairing_residual: f64,
    pub completeness_residual_photon: f64,
    pub completeness_residual_matter: f64,
    /// Largest difference between oracle and decomposition coefficients.
    pub coeff_max_abs_diff: f64,
    /// Largest difference between oracle and decomposition frequencies.
    pub frequency_max_abs_diff: f64,
}

const A: usize = 0;
const B: usize = 1;
const A_DAG: usize = 2;
const B_DAG: usize = 3;

/// `[v_k, v_l]` for `v = (a, b, a†, b†)`.
fn ladder_commutator(k: usize, l: usize) -> f64 {
    match (k, l) {
        (A, A_DAG) | (B, B_DAG) => 1.0,
        (A_DAG, A) | (B_DAG, B) => -1.0,
        _ => 0.0,
    }
}

/// Quadratic monomials `coef · v_i v_j` making up the Hamiltonian.
fn hamiltonian_terms(params: &ModelParams) -> Vec<(f64, usize, usize)> {
    let g = params.g;
    let mut terms = vec![
        (params.omega_c, A_DAG, A),
        (params.omega_ex, B_DAG, B),
        (g, A_DAG, B),
        (g, B_DAG, A),
    ];
    if params.include_antiresonant {
        terms.push((g, A_DAG, B_DAG));
        terms.push((g, A, B));
    }
    let d = match params.variant {
        Variant::FullHopfield => g * g / params.omega_ex,
        Variant::NoA2 => 0.0,
    };
    if d != 0.0 {
        // D (a + a†)² = D (a a + a a† + a† a + a† a†)
        terms.push((d, A, A_DAG));
        terms.push((d, A_DAG, A));
        if params.include_antiresonant {
            terms.push((d, A, A));
            terms.push((d, A_DAG, A_DAG));
        }
    }
    terms
}

/// Dynamical matrix built by commuting each ladder operator with the
/// Hamiltonian term by term: `[v_k, v_i v_j] = [v_k, v_i] v_j + v_i [v_k, v_j]`.
/// Parameters are not validated.
pub fn commutator_matrix(params: &ModelParams) -> BogoliubovMatrix {
    let mut m = [[0.0; 4]; 4];
    for (k, row) in m.iter_mut().enumerate() {
        for &(coef, i, j) in &hamiltonian_terms(params) {
            row[j] += coef * ladder_commutator(k, i);
            row[i] += coef * ladder_commutator(k, j);
        }
    }
    BogoliubovMatrix {
        m: Matrix4::from_fn(|i, j| m[i][j]),
    }
}

fn to_array(matrix: &BogoliubovMatrix) -> Mat4 {
    std::array::from_fn(|i| std::array::from_fn(|j| matrix.m[(i, j)]))
}

fn det3(m: [[f64; 3]; 3]) -> f64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// Cofactor matrix `C_ij = (-1)^(i+j) det(minor_ij)`.
fn cofactors(a: &Mat4) -> Mat4 {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let mut minor = [[0.0; 3]; 3];
            for (r, src_r) in (0..4).filter(|&r| r != i).enumerate() {
                for (c, src_c) in (0..4).filter(|&c| c != j).enumerate() {
                    minor[r][c] = a[src_r][src_c];
                }
            }
            let sign = if (i + j) % 2 == 0 { 1.0 } else { -1.0 };
            sign * det3(minor)
        })
    })
}

/// Left null vector `t` with `t (M - λI) = 0`. The rows of `adj(A) = Cᵀ`
/// satisfy `adj(A) A = det(A) I = 0`, so any column of `C` works; the
/// largest one is the best conditioned.
fn left_null_vector(m: &Mat4, lambda: f64) -> [f64; 4] {
    let mut a = *m;
    for (i, row) in a.iter_mut().enumerate() {
        row[i] -= lambda;
    }
    let c = cofactors(&a);
    let column_norm = |k: usize| (0..4).map(|j| c[j][k] * c[j][k]).sum::<f64>();
    let best = (0..4)
        .max_by(|&p, &q| column_norm(p).total_cmp(&column_norm(q)))
        .unwrap_or(0);
    std::array::from_fn(|j| c[j][best])
}

/// Scales to unit Bogoliubov norm and fixes the sign so that the photon
/// entry (the matter entry if the photon entry vanishes) is nonnegative.
/// Rows with `positive = false` are creation rows laid out as
/// `(y*, z*, w*, x*)`.
fn normalize_row(mut t: [f64; 4], positive: bool) -> Result<[f64; 4], OracleError> {
    let norm = t[0] * t[0] + t[1] * t[1] - t[2] * t[2] - t[3] * t[3];
    if (norm > 0.0) != positive || norm == 0.0 {
        return Err(OracleError::UnstableSystem(format!(
            "mode has Bogoliubov norm {norm:e} of the wrong sign"
        )));
    }
    let scale = norm.abs().sqrt();
    t.iter_mut().for_each(|v| *v /= scale);

    let (photon, matter) = if positive { (0, 1) } else { (2, 3) };
    let largest = t.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let reference = if t[photon].abs() > 1e-12 * largest {
        t[photon]
    } else {
        t[matter]
    };
    if reference < 0.0 {
        t.iter_mut().for_each(|v| *v = -*v);
    }
    Ok(t)
}

/// Diagonalizes the dynamical matrix by characteristic-polynomial roots and
/// adjugate null vectors.
pub fn oracle_diagonalize(matrix: &BogoliubovMatrix) -> Result<OracleSolution, OracleError> {
    let m = to_array(matrix);
    if !m.iter().flatten().all(|v| v.is_finite()) {
        return Err(OracleError::UnstableSystem(
            "non-finite matrix entries".into(),
        ));
    }
    let c = poly::char_poly(&m);
    let roots = poly::quartic_roots(&c)?;

    for z in &roots {
        if z.im.abs() > REALITY_TOL * z.norm().max(1.0) {
            return Err(OracleError::UnstableSystem(format!(
                "complex frequency {} {:+}i",
                z.re, z.im
            )));
        }
    }
    let mut real: Vec<f64> = roots.iter().map(|z| z.re).collect();
    real.sort_by(f64::total_cmp);
    if !(real[1] < 0.0 && real[2] > 0.0) {
        return Err(OracleError::UnstableSystem(format!(
            "roots {real:?} are not two positive and two negative frequencies"
        )));
    }
    // ascending: -Ω_U, -Ω_L, Ω_L, Ω_U
    let frequencies = [real[2], real[3], real[1], real[0]];
    if frequencies[1] - frequencies[0] < DEGENERACY_TOL {
        return Err(OracleError::DegenerateSpectrum {
            lower: frequencies[0],
            upper: frequencies[1],
        });
    }

    let mut coefficients = [[Complex64::new(0.0, 0.0); 4]; 4];
    for (k, &lambda) in frequencies.iter().enumerate() {
        let row = normalize_row(left_null_vector(&m, lambda), k < 2)?;
        coefficients[k] = row.map(|v| Complex64::new(v, 0.0));
    }
    Ok(OracleSolution {
        frequencies,
        coefficients,
    })
}

/// Recomputes every residual of a decomposition from its parameters and
/// coefficients. Failures of the oracle show up as infinite residuals.
pub fn audit(dec: &HopfieldDecomposition) -> OracleReport {
    let matrix = commutator_matrix(&dec.params);
    let c = poly::char_poly(&to_array(&matrix));

    let reported = [dec.lower.omega_pol, dec.upper.omega_pol];
    let eig_residual = reported
        .iter()
        .flat_map(|&o| [o, -o])
        .map(|l| poly::relative_residual(&c, l))
        .fold(0.0, f64::max);

    let pol = [&dec.lower, &dec.upper];
    let photon: f64 = pol.iter().map(|p| p.w.norm_sqr() - p.y.norm_sqr()).sum();
    let matter: f64 = pol.iter().map(|p| p.x.norm_sqr() - p.z.norm_sqr()).sum();

    let (pairing_residual, coeff_max_abs_diff, frequency_max_abs_diff) =
        match oracle_diagonalize(&matrix) {
            Ok(sol) => {
                let f = sol.frequencies;
                let pairing = (f[0] + f[2]).abs().max((f[1] + f[3]).abs());
                let freq = (f[0] - reported[0]).abs().max((f[1] - reported[1]).abs());
                let coeff = (0..2)
                    .flat_map(|j| {
                        let main = [pol[j].w, pol[j].x, pol[j].y, pol[j].z];
                        let oracle = sol.coefficients[j];
                        (0..4).map(move |k| (main[k] - oracle[k]).norm())
                    })
                    .fold(0.0, f64::max);
                (pairing, coeff, freq)
            }
            Err(_) => (f64::INFINITY, f64::INFINITY, f64::INFINITY),
        };

    OracleReport {
        params: dec.params,
        eig_residual,
        pairing_residual,
        completeness_residual_photon: (photon - 1.0).abs(),
        completeness_residual_matter: (matter - 1.0).abs(),
        coeff_max_abs_diff,
        frequency_max_abs_diff,
    }
}
