//! The `isomorphism` subcommand: solve the mapping for the configured field,
//! report every parametrization, the coefficient comparison for the Landau
//! gauges, the unsolvable unscaled system, and the verdict.

use serde::Serialize;

use nc_landau_core::landau::cyclotron_frequency;
use nc_landau_core::ncmap::{isomorphism_check, theta_dependent_params, IsomorphismReport};

use crate::config::{FormatArg, RunConfig};
use crate::output::{render_table, sig, CmdResult, Failure};

/// Numeric coefficients of the planar Hamiltonians in a Landau gauge and in
/// the scaled oscillator form. Both kinetic terms multiply p², the magnetic
/// confinement multiplies the squared transverse coordinate, the cross term
/// multiplies (transverse·longitudinal momentum), and the oscillator splits
/// the same physics into an isotropic r² term plus L_z.
#[derive(Debug, Serialize)]
struct GaugeComparison {
    gauge: String,
    field_kinetic: f64,
    field_confinement: f64,
    field_cross: f64,
    oscillator_kinetic: f64,
    oscillator_potential: f64,
    oscillator_angular: f64,
}

#[derive(Debug, Serialize)]
struct IsomorphismDoc {
    b_tesla: f64,
    mu_kg: f64,
    omega_c: f64,
    /// M, Ω of the θ-parametrized oscillator (before the ζ rescaling).
    theta_parametrized_mass: f64,
    theta_parametrized_frequency: f64,
    report: IsomorphismReport,
    gauge_forms: Vec<GaugeComparison>,
}

pub fn run(cfg: &RunConfig) -> CmdResult {
    let p = cfg.params();
    let report = isomorphism_check(&p, cfg.sign.into());
    let (m_theta, omega_theta) = theta_dependent_params(report.theta);

    let eb = p.e * p.b;
    let kinetic = 1.0 / (2.0 * p.mu);
    let confinement = eb * eb / (2.0 * p.mu);
    let cross = eb / p.mu;
    let gauge_forms = vec![
        GaugeComparison {
            gauge: "first (confines y, cross term +y*p_x)".into(),
            field_kinetic: kinetic,
            field_confinement: confinement,
            field_cross: cross,
            oscillator_kinetic: report.zeta * report.theta * report.theta
                / (4.0 * p.hbar * p.hbar),
            oscillator_potential: report.zeta,
            oscillator_angular: report.zeta * report.theta / p.hbar,
        },
        GaugeComparison {
            gauge: "second (confines x, cross term -x*p_y)".into(),
            field_kinetic: kinetic,
            field_confinement: confinement,
            field_cross: cross,
            oscillator_kinetic: report.zeta * report.theta * report.theta
                / (4.0 * p.hbar * p.hbar),
            oscillator_potential: report.zeta,
            oscillator_angular: report.zeta * report.theta / p.hbar,
        },
    ];

    let doc = IsomorphismDoc {
        b_tesla: cfg.b,
        mu_kg: cfg.mu,
        omega_c: cyclotron_frequency(&p),
        theta_parametrized_mass: m_theta,
        theta_parametrized_frequency: omega_theta,
        report,
        gauge_forms,
    };

    match cfg.format {
        FormatArg::Json => {
            let text = serde_json::to_string_pretty(&doc)
                .map_err(|e| Failure::validation(e.to_string()))?;
            println!("{text}");
        }
        FormatArg::Csv => {
            return Err(Failure::validation(
                "the isomorphism report has no CSV form; use text or json",
            ));
        }
        FormatArg::Text => print_text(cfg, &doc),
    }

    if doc.report.verdict {
        Ok(())
    } else {
        Err(Failure::verification("isomorphism check failed"))
    }
}

fn print_text(cfg: &RunConfig, doc: &IsomorphismDoc) {
    let pr = cfg.precision;
    let r = &doc.report;
    println!(
        "field: B = {} T, mu = {} kg, omega_c = {} rad/s",
        sig(doc.b_tesla, pr),
        sig(doc.mu_kg, pr),
        sig(doc.omega_c, pr)
    );
    println!();
    println!("mapping solved from the coefficient matches:");
    println!("  theta = {} m^2", sig(r.theta, pr));
    println!("  zeta  = {} C^2T^2/kg", sig(r.zeta, pr));
    println!();
    println!("theta-parametrized oscillator (before the zeta rescaling):");
    println!("  M     = {} kg", sig(doc.theta_parametrized_mass, pr));
    println!("  Omega = {} rad/s", sig(doc.theta_parametrized_frequency, pr));
    println!();
    println!("zeta-scaled oscillator (the isomorphic system):");
    println!("  M     = {} kg      (the particle mass)", sig(r.m_eff, pr));
    println!("  Omega = {} rad/s  (half the cyclotron frequency)", sig(r.omega_eff, pr));
    println!();
    println!("unscaled system, shown inconsistent:");
    println!("  theta forced         = {} m^2", sig(r.raw_system.theta, pr));
    println!("  m*omega^2 forced     = {}", sig(r.raw_system.m_omega_sq, pr));
    println!("  effective mass at mu = {} kg", sig(r.raw_system.effective_mass_at_probe, pr));
    println!("  kinetic residual     = {}", sig(r.raw_system.kinetic_residual, pr));
    println!("  {}", r.raw_system.note);
    println!();
    println!("scaled coefficient residuals (kinetic, potential, angular):");
    println!(
        "  {}  {}  {}",
        sig(r.residuals[0], pr),
        sig(r.residuals[1], pr),
        sig(r.residuals[2], pr)
    );
    println!();
    println!("Landau-gauge forms against the oscillator form:");
    let mut table = vec![vec![
        "gauge".to_string(),
        "kin p^2".to_string(),
        "confine c^2".to_string(),
        "cross".to_string(),
        "osc kin p^2".to_string(),
        "osc r^2".to_string(),
        "osc L_z".to_string(),
    ]];
    for g in &doc.gauge_forms {
        table.push(vec![
            g.gauge.clone(),
            sig(g.field_kinetic, pr),
            sig(g.field_confinement, pr),
            sig(g.field_cross, pr),
            sig(g.oscillator_kinetic, pr),
            sig(g.oscillator_potential, pr),
            sig(g.oscillator_angular, pr),
        ]);
    }
    print!("{}", render_table(&table));
    println!();
    match (&r.verdict, &r.sign_note) {
        (true, _) => println!("verdict: PASS"),
        (false, Some(note)) => println!("verdict: FAIL\n  {note}"),
        (false, None) => println!("verdict: FAIL"),
    }
}
