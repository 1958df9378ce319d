//! The `verify` subcommand: run the numerical oracles against the analytic
//! results and report machine-checkable pass/fail lines. Suites:
//!
//! * `norm`: quadrature norms of sampled states sit within 0.1% of one.
//! * `residual`: finite-difference operator residuals stay under 1e-3, and
//!   the oscillator-side residuals agree with the field-side ones.
//! * `oracle`: grid diagonalization with no analytic input recovers the
//!   level ladder and the planar ground level.
//!
//! `--inject-energy-offset` shifts the reference energies of the residual
//! suite; a nonzero value is a negative control that must fail, proving the
//! checks are live.

use serde::Serialize;

use nc_landau_core::landau::{
    cyclotron_frequency, energy_landau, GaugeChoice, QuantumState, SignConvention,
};
use nc_landau_core::ncmap::{theta_from_b, NcParams};
use nc_landau_core::verify::{
    grid_diagonalize, hamiltonian_residual_with_offset, nc_residual_landau, nc_residual_symmetric,
    QuadratureGrid,
};
use nc_landau_core::field::{sample_landau, sample_symmetric};

use crate::config::{FormatArg, ModeArg, RunConfig};
use crate::output::{ensure_dir, sig, write_file, CmdResult, Failure};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SuiteArg {
    Norm,
    Residual,
    Oracle,
    All,
}

impl SuiteArg {
    fn name(self) -> &'static str {
        match self {
            Self::Norm => "norm",
            Self::Residual => "residual",
            Self::Oracle => "oracle",
            Self::All => "all",
        }
    }
}

#[derive(Debug, clap::Args)]
pub struct VerifyArgs {
    /// Which checks to run
    #[arg(long, value_enum, default_value = "all")]
    pub suite: SuiteArg,
    /// Relative shift injected into residual reference energies; nonzero
    /// values must make the residual suite fail (negative control)
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true, value_name = "REL")]
    pub inject_energy_offset: f64,
}

#[derive(Debug, Serialize)]
struct Check {
    name: String,
    value: f64,
    threshold: f64,
    passed: bool,
}

impl Check {
    fn new(name: String, value: f64, threshold: f64) -> Self {
        let passed = value.is_finite() && value <= threshold;
        Self { name, value, threshold, passed }
    }
}

#[derive(Debug, Serialize)]
struct VerifySummary {
    suite: SuiteArg,
    b_tesla: f64,
    mu_kg: f64,
    injected_energy_offset: f64,
    checks: Vec<Check>,
    notes: Vec<String>,
    passed: bool,
}

pub fn run(cfg: &RunConfig, args: &VerifyArgs) -> CmdResult {
    if !args.inject_energy_offset.is_finite() || args.inject_energy_offset <= -1.0 {
        return Err(Failure::validation(format!(
            "energy offset must be finite and > -1, got {}",
            args.inject_energy_offset
        )));
    }
    let mut checks = Vec::new();
    let mut notes = Vec::new();
    let run_norm = matches!(args.suite, SuiteArg::Norm | SuiteArg::All);
    let run_residual = matches!(args.suite, SuiteArg::Residual | SuiteArg::All);
    let run_oracle = matches!(args.suite, SuiteArg::Oracle | SuiteArg::All);

    if run_norm {
        norm_suite(cfg, &mut checks)?;
    }
    if run_residual {
        residual_suite(cfg, args.inject_energy_offset, &mut checks)?;
    }
    if run_oracle {
        oracle_suite(cfg, &mut checks, &mut notes)?;
    }

    let summary = VerifySummary {
        suite: args.suite,
        b_tesla: cfg.b,
        mu_kg: cfg.mu,
        injected_energy_offset: args.inject_energy_offset,
        checks,
        notes,
        passed: false,
    };
    let summary = VerifySummary { passed: summary.checks.iter().all(|c| c.passed), ..summary };

    ensure_dir(&cfg.out)?;
    let json = serde_json::to_string_pretty(&summary)
        .map_err(|e| Failure::validation(e.to_string()))?;
    let summary_path = cfg.out.join("verify_summary.json");
    write_file(&summary_path, json.as_bytes())?;

    match cfg.format {
        FormatArg::Json => println!("{json}"),
        FormatArg::Csv => {
            return Err(Failure::validation(
                "verification reports have no CSV form; use text or json",
            ))
        }
        FormatArg::Text => {
            println!(
                "verify suite {}, B = {} T, mu = {} kg",
                summary.suite.name(),
                sig(summary.b_tesla, cfg.precision),
                sig(summary.mu_kg, cfg.precision)
            );
            if summary.injected_energy_offset != 0.0 {
                println!(
                    "injected energy offset: {} (negative control)",
                    sig(summary.injected_energy_offset, cfg.precision)
                );
            }
            for c in &summary.checks {
                println!(
                    "  [{}] {}: {} (threshold {})",
                    if c.passed { "ok" } else { "FAIL" },
                    c.name,
                    sig(c.value, cfg.precision),
                    sig(c.threshold, cfg.precision)
                );
            }
            for n in &summary.notes {
                println!("  note: {n}");
            }
            let failed = summary.checks.iter().filter(|c| !c.passed).count();
            if failed == 0 {
                println!("all {} checks passed", summary.checks.len());
            } else {
                println!("{failed} of {} checks failed", summary.checks.len());
            }
            println!("summary written to {}", summary_path.display());
        }
    }

    if summary.passed {
        Ok(())
    } else {
        Err(Failure::verification("verification failed"))
    }
}

/// Planar and transverse norms against the quadrature oracle.
fn norm_suite(cfg: &RunConfig, checks: &mut Vec<Check>) -> CmdResult {
    let p = cfg.params();
    let theta = theta_from_b(&p);
    let l_b = p.magnetic_length();
    let polar = QuadratureGrid::polar(cfg.grid_extent * l_b, cfg.grid_radial, cfg.grid_angular)?;
    for n_r in 0..=2u32 {
        for m_l in -2i32..=2 {
            let field = sample_symmetric(n_r, m_l, theta, &polar, cfg.timestamp)?;
            let norm = field.norm()?;
            checks.push(Check::new(
                format!("norm planar ({n_r},{m_l})"),
                (norm - 1.0).abs(),
                1e-3,
            ));
        }
    }
    let line = QuadratureGrid::cartesian_1d(
        -cfg.grid_extent * l_b,
        cfg.grid_extent * l_b,
        cfg.grid_line,
    )?;
    for n_y in 0..=2u32 {
        let field = sample_landau(n_y, &[0.0], theta, &line, ModeArg::Orthonormal.into(), cfg.timestamp)?;
        let norm = field.norm()?;
        checks.push(Check::new(
            format!("norm transverse {n_y}"),
            (norm - 1.0).abs(),
            1e-3,
        ));
    }
    Ok(())
}

/// Operator residuals on both sides of the mapping, plus their agreement.
fn residual_suite(cfg: &RunConfig, offset: f64, checks: &mut Vec<Check>) -> CmdResult {
    let p = cfg.params();
    let nc = NcParams::from_field(&p)?;
    let l_b = p.magnetic_length();
    let polar = QuadratureGrid::polar(cfg.grid_extent * l_b, cfg.grid_radial, cfg.grid_angular)?;
    for (n_r, m_l) in [(0u32, 0i32), (1, 1), (2, -1)] {
        let state = QuantumState::symmetric(SignConvention::Plus, n_r, m_l);
        let field_side = hamiltonian_residual_with_offset(&state, &p, &polar, offset)?;
        checks.push(Check::new(
            format!("residual planar ({n_r},{m_l})"),
            field_side,
            1e-3,
        ));
        let osc_side = nc_residual_symmetric(n_r, m_l, &nc, &polar)?;
        checks.push(Check::new(
            format!("residual sides agree planar ({n_r},{m_l})"),
            (field_side - osc_side).abs() / field_side.max(osc_side).max(1e-12),
            1e-6,
        ));
    }
    let line = QuadratureGrid::cartesian_1d(
        -cfg.grid_extent * l_b,
        cfg.grid_extent * l_b,
        cfg.grid_line,
    )?;
    let k0 = 0.3 / l_b;
    for n_y in 0..=2u32 {
        let state = QuantumState::landau_first(SignConvention::Plus, n_y, k0);
        let field_side = hamiltonian_residual_with_offset(&state, &p, &line, offset)?;
        checks.push(Check::new(
            format!("residual transverse {n_y}"),
            field_side,
            1e-3,
        ));
        let osc_side = nc_residual_landau(n_y, k0, &nc, &line)?;
        checks.push(Check::new(
            format!("residual sides agree transverse {n_y}"),
            (field_side - osc_side).abs() / field_side.max(osc_side).max(1e-12),
            1e-6,
        ));
    }
    Ok(())
}

/// Grid diagonalization with no analytic input.
fn oracle_suite(cfg: &RunConfig, checks: &mut Vec<Check>, notes: &mut Vec<String>) -> CmdResult {
    let p = cfg.params();
    let l_b = p.magnetic_length();

    let line = QuadratureGrid::cartesian_1d(
        -cfg.grid_extent * l_b,
        cfg.grid_extent * l_b,
        2000,
    )?;
    let sol = grid_diagonalize(&p, GaugeChoice::LandauFirst, &line, 6)?;
    notes.extend(sol.warnings.iter().cloned());
    for (n, e) in sol.energies.iter().enumerate() {
        let analytic = energy_landau(n as u32, &p);
        checks.push(Check::new(
            format!("oracle transverse level {n}"),
            ((e - analytic) / analytic).abs(),
            0.01,
        ));
    }

    let plane = QuadratureGrid::cartesian_2d(cfg.grid_extent.max(10.0) * l_b, 64)?;
    let sol = grid_diagonalize(&p, GaugeChoice::Symmetric, &plane, 1)?;
    notes.extend(sol.warnings.iter().cloned());
    let half = 0.5 * p.hbar * cyclotron_frequency(&p);
    checks.push(Check::new(
        "oracle planar ground level".into(),
        ((sol.energies[0] - half) / half).abs(),
        0.01,
    ));
    Ok(())
}
