//! The `sample` subcommand: evaluate states on grids and write them out as
//! CSV + JSON (and a PGM heatmap when the grid is two-dimensional). File
//! names are fully determined by the request, so reruns overwrite with
//! byte-identical content.

use std::path::PathBuf;

use nc_landau_core::field::{sample_landau, sample_symmetric, sweep_field, FieldGrid, SweepState};
use nc_landau_core::ncmap::theta_from_b;
use nc_landau_core::verify::QuadratureGrid;

use crate::config::RunConfig;
use crate::output::{ensure_dir, write_file, CmdResult, Failure};

const HEATMAP_SIZE: usize = 256;

#[derive(Debug, clap::Args)]
pub struct SampleArgs {
    /// Planar state to sample, as n_r,m_l; repeat for several states
    #[arg(long = "state", value_name = "N,M", allow_hyphen_values = true)]
    pub states: Vec<String>,
    /// Sample a transverse profile instead of / in addition to planar states
    #[arg(long)]
    pub landau: bool,
    /// Transverse quantum number for --landau
    #[arg(long, default_value_t = 0)]
    pub n: u32,
    /// Wavenumber parameter for --landau
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub k0: f64,
    /// Wavenumber sweep for --landau, as lo:hi:count; rows become a 2D
    /// (k0, y) grid
    #[arg(long, value_name = "LO:HI:COUNT", allow_hyphen_values = true)]
    pub k0_sweep: Option<String>,
    /// Resample the same state at several field strengths (comma-separated
    /// tesla values), one file set per strength
    #[arg(long, value_name = "B1,B2,..")]
    pub b_sweep: Option<String>,
}

fn parse_state(text: &str) -> Result<(u32, i32), Failure> {
    let err = || Failure::validation(format!("bad state {text:?}, expected n_r,m_l"));
    let (n, m) = text.split_once(',').ok_or_else(err)?;
    Ok((n.trim().parse().map_err(|_| err())?, m.trim().parse().map_err(|_| err())?))
}

fn parse_b_list(text: &str) -> Result<Vec<f64>, Failure> {
    let values: Result<Vec<f64>, _> = text.split(',').map(|t| t.trim().parse::<f64>()).collect();
    let values = values
        .map_err(|_| Failure::validation(format!("bad field list {text:?}")))?;
    if values.is_empty() || values.iter().any(|b| *b <= 0.0 || !b.is_finite()) {
        return Err(Failure::validation(format!(
            "field sweep values must be positive, got {text:?}"
        )));
    }
    Ok(values)
}

fn parse_k0_sweep(text: &str) -> Result<Vec<f64>, Failure> {
    let err = || Failure::validation(format!("bad sweep {text:?}, expected lo:hi:count"));
    let parts: Vec<&str> = text.split(':').collect();
    if parts.len() != 3 {
        return Err(err());
    }
    let lo: f64 = parts[0].parse().map_err(|_| err())?;
    let hi: f64 = parts[1].parse().map_err(|_| err())?;
    let count: usize = parts[2].parse().map_err(|_| err())?;
    if !lo.is_finite() || !hi.is_finite() || hi <= lo || count < 2 {
        return Err(Failure::validation(format!(
            "sweep needs finite lo < hi and count >= 2, got {text:?}"
        )));
    }
    let step = (hi - lo) / (count - 1) as f64;
    Ok((0..count).map(|i| lo + i as f64 * step).collect())
}

/// Tesla value as a compact filename tag: integral values lose the ".0".
fn b_tag(b: f64) -> String {
    if b.fract() == 0.0 && b.abs() < 1e6 {
        format!("{}", b as i64)
    } else {
        format!("{b}")
    }
}

pub fn run(cfg: &RunConfig, args: &SampleArgs) -> CmdResult {
    if args.states.is_empty() && !args.landau {
        return Err(Failure::validation(
            "nothing to sample: pass --state n,m and/or --landau",
        ));
    }
    if args.k0_sweep.is_some() && !args.landau {
        return Err(Failure::validation("--k0-sweep only applies with --landau"));
    }

    let p = cfg.params();
    let theta = theta_from_b(&p);
    let l_b = p.magnetic_length();
    let polar = QuadratureGrid::polar(cfg.grid_extent * l_b, cfg.grid_radial, cfg.grid_angular)?;
    let line = QuadratureGrid::cartesian_1d(
        -cfg.grid_extent * l_b,
        cfg.grid_extent * l_b,
        cfg.grid_line,
    )?;
    let b_sweep = args.b_sweep.as_deref().map(parse_b_list).transpose()?;

    ensure_dir(&cfg.out)?;
    let mut written: Vec<PathBuf> = Vec::new();

    for text in &args.states {
        let (n_r, m_l) = parse_state(text)?;
        let stem = format!("planar_n{n_r}_m{m_l}");
        match &b_sweep {
            Some(bs) => {
                let state = SweepState::Symmetric { n_r, m_l };
                let fields = sweep_field(bs, &state, &p, &polar, cfg.timestamp)?;
                for (b, field) in bs.iter().zip(&fields) {
                    export(field, &format!("{stem}_B{}", b_tag(*b)), cfg, &mut written)?;
                }
            }
            None => {
                let field = sample_symmetric(n_r, m_l, theta, &polar, cfg.timestamp)?;
                export(&field, &stem, cfg, &mut written)?;
            }
        }
    }

    if args.landau {
        let mode = cfg.mode.into();
        match &args.k0_sweep {
            Some(sweep_text) => {
                let k0s = parse_k0_sweep(sweep_text)?;
                let stem = format!("transverse_n{}_ksweep", args.n);
                if let Some(bs) = &b_sweep {
                    return Err(Failure::validation(format!(
                        "--b-sweep and --k0-sweep cannot combine (got {} field values); \
                         sweep one parameter at a time",
                        bs.len()
                    )));
                }
                let field = sample_landau(args.n, &k0s, theta, &line, mode, cfg.timestamp)?;
                export(&field, &stem, cfg, &mut written)?;
            }
            None => {
                let stem = format!("transverse_n{}_k{:e}", args.n, args.k0);
                match &b_sweep {
                    Some(bs) => {
                        let state = SweepState::Landau { n_y: args.n, k0: args.k0, mode };
                        let fields = sweep_field(bs, &state, &p, &line, cfg.timestamp)?;
                        for (b, field) in bs.iter().zip(&fields) {
                            export(field, &format!("{stem}_B{}", b_tag(*b)), cfg, &mut written)?;
                        }
                    }
                    None => {
                        let field =
                            sample_landau(args.n, &[args.k0], theta, &line, mode, cfg.timestamp)?;
                        export(&field, &stem, cfg, &mut written)?;
                    }
                }
            }
        }
    }

    for path in &written {
        println!("{}", path.display());
    }
    Ok(())
}

/// CSV and JSON always; PGM when the grid is 2D.
fn export(
    field: &FieldGrid,
    stem: &str,
    cfg: &RunConfig,
    written: &mut Vec<PathBuf>,
) -> CmdResult {
    let csv_path = cfg.out.join(format!("{stem}.csv"));
    field.write_csv(&csv_path)?;
    written.push(csv_path);

    let json_path = cfg.out.join(format!("{stem}.json"));
    field.write_json(&json_path)?;
    written.push(json_path);

    if field.axes.len() == 2 {
        let (bytes, warnings) = field.heatmap_pgm(HEATMAP_SIZE)?;
        for w in warnings {
            eprintln!("warning: {stem}: {w}");
        }
        let pgm_path = cfg.out.join(format!("{stem}.pgm"));
        write_file(&pgm_path, &bytes)?;
        written.push(pgm_path);
    }
    Ok(())
}
