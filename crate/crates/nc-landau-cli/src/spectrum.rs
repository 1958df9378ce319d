//! The `spectrum` subcommand: energy tables over (n_r, m_l) with the
//! field-side and oscillator-side values in joules and electronvolts plus
//! their relative difference.

use serde::Serialize;

use nc_landau_core::constants::ELEMENTARY_CHARGE;
use nc_landau_core::landau::{cyclotron_frequency, energy_symmetric};
use nc_landau_core::ncmap::{nc_energy_symmetric, theta_from_b, zeta_from, NcParams};

use crate::config::{FormatArg, RunConfig};
use crate::output::{csv_line, render_table, sig, CmdResult, Failure};

#[derive(Debug, clap::Args)]
pub struct SpectrumArgs {
    /// Largest radial quantum number
    #[arg(long, default_value_t = 3)]
    pub n_max: u32,
    /// Angular momentum range as lo:hi
    #[arg(long, default_value = "-3:3", value_name = "LO:HI", allow_hyphen_values = true)]
    pub m_range: String,
}

#[derive(Debug, Serialize)]
struct SpectrumRow {
    n_r: u32,
    m_l: i32,
    field_j: f64,
    field_ev: f64,
    oscillator_j: f64,
    oscillator_ev: f64,
    rel_diff: f64,
}

#[derive(Debug, Serialize)]
struct SpectrumDoc {
    b_tesla: f64,
    mu_kg: f64,
    sign: String,
    omega_c: f64,
    theta_m2: f64,
    zeta: f64,
    rows: Vec<SpectrumRow>,
}

pub fn parse_m_range(text: &str) -> Result<(i32, i32), Failure> {
    let parts: Vec<&str> = text.split(':').collect();
    let err = || Failure::validation(format!("bad m range {text:?}, expected lo:hi"));
    if parts.len() != 2 {
        return Err(err());
    }
    let lo: i32 = parts[0].parse().map_err(|_| err())?;
    let hi: i32 = parts[1].parse().map_err(|_| err())?;
    if lo > hi {
        return Err(Failure::validation(format!("empty m range {text:?}")));
    }
    Ok((lo, hi))
}

pub fn run(cfg: &RunConfig, args: &SpectrumArgs) -> CmdResult {
    let (m_lo, m_hi) = parse_m_range(&args.m_range)?;
    let p = cfg.params();
    let nc = NcParams::from_field(&p)?;
    let sign = cfg.sign.into();

    let mut rows = Vec::new();
    for n_r in 0..=args.n_max {
        for m_l in m_lo..=m_hi {
            let field_j = energy_symmetric(n_r, m_l, &p, sign);
            let oscillator_j = nc_energy_symmetric(n_r, m_l, &nc);
            rows.push(SpectrumRow {
                n_r,
                m_l,
                field_j,
                field_ev: field_j / ELEMENTARY_CHARGE,
                oscillator_j,
                oscillator_ev: oscillator_j / ELEMENTARY_CHARGE,
                rel_diff: (field_j - oscillator_j).abs() / field_j.abs(),
            });
        }
    }

    let doc = SpectrumDoc {
        b_tesla: cfg.b,
        mu_kg: cfg.mu,
        sign: if sign == nc_landau_core::landau::SignConvention::Plus {
            "+".into()
        } else {
            "-".into()
        },
        omega_c: cyclotron_frequency(&p),
        theta_m2: theta_from_b(&p),
        zeta: zeta_from(&p),
        rows,
    };

    let pr = cfg.precision;
    match cfg.format {
        FormatArg::Json => {
            let text = serde_json::to_string_pretty(&doc)
                .map_err(|e| Failure::validation(e.to_string()))?;
            println!("{text}");
        }
        FormatArg::Csv => {
            println!("n_r,m_l,field_J,field_eV,oscillator_J,oscillator_eV,rel_diff");
            for r in &doc.rows {
                println!(
                    "{}",
                    csv_line(&[
                        r.n_r.to_string(),
                        r.m_l.to_string(),
                        sig(r.field_j, pr),
                        sig(r.field_ev, pr),
                        sig(r.oscillator_j, pr),
                        sig(r.oscillator_ev, pr),
                        sig(r.rel_diff, pr),
                    ])
                );
            }
        }
        FormatArg::Text => {
            println!(
                "B = {} T, mu = {} kg, sign {}",
                sig(doc.b_tesla, pr),
                sig(doc.mu_kg, pr),
                doc.sign
            );
            println!(
                "omega_c = {} rad/s, theta = {} m^2, zeta = {} C^2T^2/kg",
                sig(doc.omega_c, pr),
                sig(doc.theta_m2, pr),
                sig(doc.zeta, pr)
            );
            println!();
            let mut table = vec![vec![
                "n_r".to_string(),
                "m_l".to_string(),
                "field[J]".to_string(),
                "field[eV]".to_string(),
                "oscillator[J]".to_string(),
                "oscillator[eV]".to_string(),
                "rel_diff".to_string(),
            ]];
            for r in &doc.rows {
                table.push(vec![
                    r.n_r.to_string(),
                    r.m_l.to_string(),
                    sig(r.field_j, pr),
                    sig(r.field_ev, pr),
                    sig(r.oscillator_j, pr),
                    sig(r.oscillator_ev, pr),
                    sig(r.rel_diff, pr),
                ]);
            }
            print!("{}", render_table(&table));
        }
    }
    Ok(())
}
