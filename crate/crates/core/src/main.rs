use std::process::ExitCode;

use usc_polariton::sweep::{emit, parse_config, run_sweep, ConfigError};

fn main() -> ExitCode {
    let config = match parse_config(std::env::args_os().skip(1)) {
        Ok(config) => config,
        Err(ConfigError::Help(text)) => {
            print!("{text}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprintln!("usc-sweep: {e}");
            return ExitCode::from(e.exit_code());
        }
    };

    let result = match run_sweep(&config) {
        Ok(result) => result,
        Err(e) => {
            eprintln!("usc-sweep: {e}");
            return ExitCode::from(e.exit_code());
        }
    };
    for point in &result.skipped {
        eprintln!(
            "usc-sweep: warning: skipped g = {}: {}",
            point.g, point.reason
        );
    }

    if let Err(e) = emit(&result, &config) {
        eprintln!("usc-sweep: {e}");
        return ExitCode::from(e.exit_code());
    }

    let s = &result.summary;
    eprintln!(
        "usc-sweep: {} rows; max naive/normalized ratio {:.6} at g = {}; \
         max |κ_norm - κ_metal|/κ₀ {:.6}; ordering agreement {:.4}",
        result.rows.len(),
        s.max_ratio_naive_over_norm,
        s.g_at_max,
        s.max_rel_dev_norm_vs_metal,
        s.ordering_agreement_fraction
    );
    ExitCode::SUCCESS
}
