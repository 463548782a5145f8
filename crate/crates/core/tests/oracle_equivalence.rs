mod common;

use common::{check_golden, random_stable_grid, solve, GRID_SEED};
use usc_polariton::oracle::{
    canonical_records, commutator_matrix, format_records, parse_records, GoldenOutcome,
};
use usc_polariton::{audit, build_hopfield_matrix, oracle_diagonalize, ModelParams, Variant};

#[test]
fn random_grid_agrees_with_oracle() {
    let grid = random_stable_grid(1200, GRID_SEED);
    let mut worst_freq = 0.0f64;
    let mut worst_modulus = 0.0f64;
    for p in &grid {
        let dec = solve(p);
        let sol = oracle_diagonalize(&build_hopfield_matrix(p).unwrap())
            .unwrap_or_else(|e| panic!("oracle failed for {p:?}: {e}"));
        worst_freq = worst_freq
            .max((sol.frequencies[0] - dec.lower.omega_pol).abs())
            .max((sol.frequencies[1] - dec.upper.omega_pol).abs());
        for (j, pol) in dec.branches().iter().enumerate() {
            for (main, oracle) in pol.coefficients().iter().zip(&sol.coefficients[j]) {
                worst_modulus = worst_modulus.max((main.norm() - oracle.norm()).abs());
            }
        }
    }
    assert!(worst_freq < 1e-9, "frequency mismatch {worst_freq:e}");
    assert!(
        worst_modulus < 1e-8,
        "coefficient modulus mismatch {worst_modulus:e}"
    );
}

#[test]
fn audit_is_clean_on_random_grid() {
    for p in random_stable_grid(300, GRID_SEED ^ 1) {
        let r = audit(&solve(&p));
        assert!(r.eig_residual < 1e-12, "{r:?}");
        assert!(r.pairing_residual < 1e-10, "{r:?}");
        assert!(r.completeness_residual_photon < 1e-10, "{r:?}");
        assert!(r.completeness_residual_matter < 1e-10, "{r:?}");
        assert!(r.coeff_max_abs_diff < 1e-8, "{r:?}");
        assert!(r.frequency_max_abs_diff < 1e-9, "{r:?}");
    }
}

#[test]
fn full_hopfield_half_coupling_matches_oracle() {
    let p = ModelParams::resonant(0.5, Variant::FullHopfield).unwrap();
    let dec = solve(&p);
    let sol = oracle_diagonalize(&commutator_matrix(&p)).unwrap();
    assert!((dec.lower.omega_pol - sol.frequencies[0]).abs() < 1e-9);
    assert!((dec.upper.omega_pol - sol.frequencies[1]).abs() < 1e-9);
    for (j, pol) in dec.branches().iter().enumerate() {
        for (main, oracle) in pol.coefficients().iter().zip(&sol.coefficients[j]) {
            assert!((main - oracle).norm() < 1e-9, "{main} vs {oracle}");
        }
    }
}

#[test]
fn oracle_confirms_assembled_spectrum() {
    // g = 0.3 full Hopfield: eigenvalues of the assembled matrix
    let p = ModelParams::resonant(0.3, Variant::FullHopfield).unwrap();
    let m = build_hopfield_matrix(&p).unwrap();
    let sol = oracle_diagonalize(&m).unwrap();
    let dec = solve(&p);
    let expected = [
        dec.lower.omega_pol,
        dec.upper.omega_pol,
        -dec.lower.omega_pol,
        -dec.upper.omega_pol,
    ];
    for (got, want) in sol.frequencies.iter().zip(expected) {
        assert!((got - want).abs() < 1e-10);
    }
}

#[test]
fn canonical_oracle_records_match_golden_file() {
    check_golden(
        "oracle_canonical.txt",
        &format_records(&canonical_records()),
    );
}

#[test]
fn main_path_matches_committed_oracle_records() {
    let text = std::fs::read_to_string(common::golden_path("oracle_canonical.txt")).unwrap();
    let records = parse_records(&text).unwrap();
    assert_eq!(records.len(), 10);
    for rec in records {
        let params = ModelParams {
            omega_c: rec.omega_c,
            omega_ex: rec.omega_ex,
            g: rec.g,
            variant: rec.variant,
            include_antiresonant: rec.antiresonant,
            kappa0: 1.0,
        };
        match rec.outcome {
            GoldenOutcome::Stable {
                frequencies,
                coefficients,
            } => {
                let dec = solve(&params);
                assert!((dec.lower.omega_pol - frequencies[0]).abs() < 1e-9);
                assert!((dec.upper.omega_pol - frequencies[1]).abs() < 1e-9);
                for (j, pol) in dec.branches().iter().enumerate() {
                    for (main, gold) in pol.coefficients().iter().zip(&coefficients[j]) {
                        assert!((main - gold).norm() < 1e-9, "{params:?}");
                    }
                }
            }
            GoldenOutcome::Rejected { .. } => {
                assert!(build_hopfield_matrix(&params).is_err(), "{params:?}");
            }
        }
    }
}
