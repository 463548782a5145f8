#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use usc_polariton::{
    build_hopfield_matrix, diagonalize, HopfieldDecomposition, ModelParams, Variant,
};

pub const GRID_SEED: u64 = 0x5eed_2013;

/// Stable parameter sets with both variants, g/ω_ex ∈ [0, 1] and
/// ω_c/ω_ex ∈ [0.5, 2]. Draws that violate the no-a2 stability bound are
/// redrawn. About one in five has antiresonant terms switched off.
pub fn random_stable_grid(count: usize, seed: u64) -> Vec<ModelParams> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let variant = if rng.random_bool(0.5) {
            Variant::FullHopfield
        } else {
            Variant::NoA2
        };
        let omega_ex = rng.random_range(0.5..2.0);
        let detuning = rng.random_range(0.5..=2.0);
        let g = rng.random_range(0.0..=1.0) * omega_ex;
        let antiresonant = rng.random_bool(0.8);
        if let Ok(p) =
            ModelParams::new(detuning * omega_ex, omega_ex, g, variant, antiresonant, 1.0)
        {
            // RWA without positivity is out of scope for the sampled range
            if !antiresonant && g * g >= p.omega_c * p.omega_ex {
                continue;
            }
            out.push(p);
        }
    }
    out
}

pub fn solve(params: &ModelParams) -> HopfieldDecomposition {
    let m = build_hopfield_matrix(params).expect("valid params");
    diagonalize(&m, params).expect("stable, nondegenerate")
}

pub fn golden_path(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("golden")
        .join(name)
}

/// Compares `actual` with the committed golden file, or rewrites the file
/// when `UPDATE_GOLDEN` is set.
pub fn check_golden(name: &str, actual: &str) {
    let path = golden_path(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, actual).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("missing golden file {}: {e}", path.display()));
    assert!(
        expected == actual,
        "output differs from golden file {}; rerun with UPDATE_GOLDEN=1 after checking the change",
        path.display()
    );
}
