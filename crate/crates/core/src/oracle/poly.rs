//! Characteristic polynomial and simultaneous root iteration for 4×4 matrices.

use num_complex::Complex64;

use super::OracleError;

pub(crate) type Mat4 = [[f64; 4]; 4];

/// Coefficients `c[0..=4]` of `det(λI - M) = Σ_k c[k] λ^k` by the
/// Faddeev-LeVerrier recursion. `c[4] = 1`.
pub(crate) fn char_poly(m: &Mat4) -> [f64; 5] {
    let n = 4;
    let mut c = [0.0; 5];
    c[n] = 1.0;
    let mut mk = [[0.0; 4]; 4];
    for k in 1..=n {
        // M_k = M M_{k-1} + c_{n-k+1} I
        let mut next = mat_mul(m, &mk);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += c[n - k + 1];
        }
        mk = next;
        let am = mat_mul(m, &mk);
        let trace: f64 = (0..n).map(|i| am[i][i]).sum();
        c[n - k] = -trace / k as f64;
    }
    c
}

fn mat_mul(a: &Mat4, b: &Mat4) -> Mat4 {
    let mut out = [[0.0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = (0..4).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

pub(crate) fn eval(c: &[f64; 5], z: Complex64) -> Complex64 {
    c.iter()
        .rev()
        .fold(Complex64::new(0.0, 0.0), |acc, &ck| acc * z + ck)
}

fn eval_derivative(c: &[f64; 5], z: Complex64) -> Complex64 {
    (1..c.len())
        .rev()
        .fold(Complex64::new(0.0, 0.0), |acc, k| acc * z + c[k] * k as f64)
}

/// `|p(z)|` divided by the magnitude of the largest possible cancellation,
/// `Σ_k |c_k| |z|^k`.
pub(crate) fn relative_residual(c: &[f64; 5], z: f64) -> f64 {
    let scale: f64 = c
        .iter()
        .enumerate()
        .map(|(k, ck)| ck.abs() * z.abs().powi(k as i32))
        .sum();
    eval(c, Complex64::new(z, 0.0)).norm() / scale
}

pub(crate) const ROOT_TOL: f64 = 1e-12;
const MAX_ITERATIONS: usize = 2000;

/// All four roots of a monic quartic by Durand-Kerner (Weierstrass)
/// iteration, polished with a few Newton steps.
pub(crate) fn quartic_roots(c: &[f64; 5]) -> Result<[Complex64; 4], OracleError> {
    let bound = 1.0 + c[..4].iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let seed = Complex64::new(0.4, 0.9);
    let mut z: [Complex64; 4] = std::array::from_fn(|k| seed.powu(k as u32) * bound);

    let mut converged = false;
    for _ in 0..MAX_ITERATIONS {
        let mut max_step = 0.0f64;
        for k in 0..4 {
            let denom = (0..4)
                .filter(|&j| j != k)
                .fold(Complex64::new(1.0, 0.0), |acc, j| acc * (z[k] - z[j]));
            if denom.norm() == 0.0 {
                // coincident iterates; nudge apart
                z[k] += Complex64::new(1e-8, 1e-8) * bound;
                max_step = f64::INFINITY;
                continue;
            }
            let step = eval(c, z[k]) / denom;
            z[k] -= step;
            max_step = max_step.max(step.norm() / z[k].norm().max(1.0));
        }
        if max_step <= ROOT_TOL {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(OracleError::NoConvergence {
            iterations: MAX_ITERATIONS,
        });
    }

    for root in z.iter_mut() {
        for _ in 0..4 {
            let d = eval_derivative(c, *root);
            if d.norm() == 0.0 {
                break;
            }
            let candidate = *root - eval(c, *root) / d;
            if eval(c, candidate).norm() < eval(c, *root).norm() {
                *root = candidate;
            } else {
                break;
            }
        }
    }
    Ok(z)
}
