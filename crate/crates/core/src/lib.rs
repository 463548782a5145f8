//! Polariton dissipation rates from weak to ultrastrong light-matter coupling.
//!
//! The crate diagonalizes the single-mode Hopfield Hamiltonian (one cavity
//! mode coupled to one bosonic matter resonance) with a Bogoliubov
//! transformation and evaluates the loss rate of each polariton branch under
//! four models:
//!
//! * naive RWA: `|w_j|² κ₀`, using the bare photon weights;
//! * normalized RWA: `|w_j|² / Σ_j |w_j|² κ₀`;
//! * dielectric mirror boundary conditions: `κ₀ / (1 + (Ω/ω_ex)²)`;
//! * metallic mirror boundary conditions: `κ₀ / (1 + (ω_ex/Ω)²)`.
//!
//! [`oracle`] is an independent verification path (characteristic polynomial
//! roots and adjugate null vectors) used to cross-check [`hopfield`], and
//! [`sweep`] drives g-sweeps for the `usc-sweep` command line tool.

pub mod dissipation;
pub mod hopfield;
pub mod oracle;
pub mod sweep;

pub use dissipation::{
    compute_rateset, mbc_dielectric_rate, mbc_metallic_rate, naive_rwa_rate, normalized_rwa_rate,
    DissipationError, RateSet, WeightingMode,
};
pub use hopfield::{
    build_hopfield_matrix, diagonalize, matter_completeness, photon_completeness, BogoliubovMatrix,
    Branch, HopfieldDecomposition, HopfieldError, ModelParams, PolaritonBranch, Variant,
};
pub use oracle::{audit, oracle_diagonalize, OracleError, OracleReport, OracleSolution};
pub use sweep::{emit, parse_config, run_sweep, SweepConfig, SweepResult};

/// Library version echoed into sweep metadata.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
