//! Sampling eigenstate fields onto grids and exporting them.
//!
//! A [`FieldGrid`] is a self-describing array: named, strictly increasing
//! axes; re/im/abs2 data in outer-axis-major order; and metadata recording
//! which state and parameters produced it. The samplers are parametrized by
//! the noncommutativity scale θ; under θ = 4ħ/eB they evaluate exactly the
//! magnetic eigenfunctions, so one family of samplers serves both readings.
//! Exports are deterministic byte for byte: a repeated run with the same
//! configuration produces identical files (the metadata timestamp is
//! caller-supplied and defaults to 0 rather than reading a clock).

use serde::{Deserialize, Serialize};

use crate::landau::{NormalizationMode, PhysicalParams};
use crate::ncmap::{nc_eigenfunction_landau, nc_eigenfunction_symmetric, NcParams};
use crate::verify::QuadratureGrid;
use crate::CoreError;

/// Hard ceiling on sampling extents, in units of the state's characteristic
/// length √θ/2 (the magnetic length, under the parameter mapping). Fields
/// this far out are ~e^{−2048} of their peak; asking for more is a sign of
/// a unit mistake, not a bigger plot.
const MAX_EXTENT_SCALES: f64 = 64.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FieldKind {
    /// (r, φ) grid of one planar state.
    Polar,
    /// Transverse profile of one Landau-type state at a single wavenumber.
    Line,
    /// Rows of transverse profiles, one per wavenumber.
    KSweep,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Axis {
    pub name: String,
    pub unit: String,
    pub values: Vec<f64>,
}

impl Axis {
    fn new(name: &str, unit: &str, values: Vec<f64>) -> Self {
        Self { name: name.into(), unit: unit.into(), values }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FieldMeta {
    /// Human-readable state label, e.g. "planar n_r=1 m_l=-2".
    pub state: String,
    /// "orthonormal" or "paper" (the CLI vocabulary).
    pub mode: String,
    pub theta_m2: f64,
    /// Filled by [`sweep_field`], which derives θ from a field strength.
    pub b_tesla: Option<f64>,
    pub mu_kg: Option<f64>,
    pub zeta_j_per_m2: Option<f64>,
    /// Unix seconds recorded by the caller; 0 when unset, which keeps
    /// repeated exports byte-identical.
    pub timestamp: u64,
}

impl FieldMeta {
    fn bare(state: String, mode: NormalizationMode, theta: f64, timestamp: u64) -> Self {
        Self {
            state,
            mode: mode_label(mode).into(),
            theta_m2: theta,
            b_tesla: None,
            mu_kg: None,
            zeta_j_per_m2: None,
            timestamp,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FieldGrid {
    pub kind: FieldKind,
    pub axes: Vec<Axis>,
    /// Outer-axis-major: index = i₀·len(axis₁) + i₁ for two axes.
    pub re: Vec<f64>,
    pub im: Vec<f64>,
    pub abs2: Vec<f64>,
    pub meta: FieldMeta,
}

fn mode_label(mode: NormalizationMode) -> &'static str {
    match mode {
        NormalizationMode::Orthonormal => "orthonormal",
        NormalizationMode::PaperLiteral => "paper",
    }
}

fn check_theta(theta: f64) -> Result<(), CoreError> {
    if theta <= 0.0 || !theta.is_finite() {
        return Err(CoreError::Validation(format!(
            "noncommutativity parameter must be positive and finite, got {theta}"
        )));
    }
    Ok(())
}

fn check_extent(extent: f64, theta: f64) -> Result<(), CoreError> {
    let scale = theta.sqrt() / 2.0;
    if extent > MAX_EXTENT_SCALES * scale {
        return Err(CoreError::Validation(format!(
            "extent {extent:.3e} m exceeds {MAX_EXTENT_SCALES} characteristic \
             lengths ({:.3e} m)",
            MAX_EXTENT_SCALES * scale
        )));
    }
    Ok(())
}

/// Sample a planar eigenstate Ψ_{n_r, m_l} on a polar grid.
pub fn sample_symmetric(
    n_r: u32,
    m_l: i32,
    theta: f64,
    grid: &QuadratureGrid,
    timestamp: u64,
) -> Result<FieldGrid, CoreError> {
    check_theta(theta)?;
    let QuadratureGrid::Polar { r_max, n_r: n_rad, n_phi } = *grid else {
        return Err(CoreError::GridMismatch("expected a polar grid".into()));
    };
    check_extent(r_max, theta)?;
    let hr = r_max / n_rad as f64;
    let dphi = std::f64::consts::TAU / n_phi as f64;
    let r_vals: Vec<f64> = (0..=n_rad).map(|i| i as f64 * hr).collect();
    let phi_vals: Vec<f64> = (0..n_phi).map(|j| j as f64 * dphi).collect();
    let samples = grid.sample_polar(|r, phi| {
        nc_eigenfunction_symmetric(n_r, m_l, theta, r, phi).expect("validated grid")
    })?;
    Ok(FieldGrid {
        kind: FieldKind::Polar,
        axes: vec![Axis::new("r", "m", r_vals), Axis::new("phi", "rad", phi_vals)],
        re: samples.iter().map(|v| v.re).collect(),
        im: samples.iter().map(|v| v.im).collect(),
        abs2: samples.iter().map(|v| v.norm_sqr()).collect(),
        meta: FieldMeta::bare(
            format!("planar n_r={n_r} m_l={m_l}"),
            NormalizationMode::Orthonormal,
            theta,
            timestamp,
        ),
    })
}

/// Sample transverse Landau-type profiles Ψ_{n_y}(y; k₀) on a 1D grid.
///
/// One wavenumber gives a single profile; several give a sweep grid with a
/// k₀ axis in front (rows ordered by k₀, which must then be strictly
/// increasing). The peak of each row sits at y = −θk₀/4, so the sweep
/// renders the drift of the oscillator center with k₀.
pub fn sample_landau(
    n_y: u32,
    k0s: &[f64],
    theta: f64,
    grid: &QuadratureGrid,
    mode: NormalizationMode,
    timestamp: u64,
) -> Result<FieldGrid, CoreError> {
    check_theta(theta)?;
    let QuadratureGrid::Cartesian1D { min, max, n } = *grid else {
        return Err(CoreError::GridMismatch("expected a 1D grid".into()));
    };
    check_extent(min.abs().max(max.abs()), theta)?;
    if k0s.is_empty() {
        return Err(CoreError::Validation("need at least one wavenumber".into()));
    }
    if k0s.iter().any(|k| !k.is_finite()) {
        return Err(CoreError::Validation("wavenumbers must be finite".into()));
    }
    if k0s.len() > 1 && k0s.windows(2).any(|w| w[1] <= w[0]) {
        return Err(CoreError::Validation(
            "sweep wavenumbers must be strictly increasing".into(),
        ));
    }
    let h = (max - min) / n as f64;
    let y_vals: Vec<f64> = (0..=n).map(|i| min + i as f64 * h).collect();
    let mut re = Vec::with_capacity(k0s.len() * y_vals.len());
    for &k0 in k0s {
        for &y in &y_vals {
            re.push(nc_eigenfunction_landau(n_y, k0, theta, y, mode)?);
        }
    }
    let im = vec![0.0; re.len()];
    let abs2: Vec<f64> = re.iter().map(|v| v * v).collect();
    let (kind, axes, state) = if k0s.len() == 1 {
        (
            FieldKind::Line,
            vec![Axis::new("y", "m", y_vals)],
            format!("transverse n_y={n_y} k0={:e}", k0s[0]),
        )
    } else {
        (
            FieldKind::KSweep,
            vec![
                Axis::new("k0", "1/m", k0s.to_vec()),
                Axis::new("y", "m", y_vals),
            ],
            format!("transverse n_y={n_y}"),
        )
    };
    Ok(FieldGrid {
        kind,
        axes,
        re,
        im,
        abs2,
        meta: FieldMeta::bare(state, mode, theta, timestamp),
    })
}

/// Which state a field-strength sweep samples.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SweepState {
    Symmetric { n_r: u32, m_l: i32 },
    Landau { n_y: u32, k0: f64, mode: NormalizationMode },
}

/// Sample one state at several field strengths: grid i uses
/// θ = 4ħ/eBᵢ, ζ = e²Bᵢ²/8μ. Stronger fields shrink the states, so for the
/// planar ground state the half-maximum radius decreases (and the peak
/// grows to keep the norm), while a Landau profile's center −θk₀/4 drifts
/// toward 0 at fixed k₀.
pub fn sweep_field(
    b_values: &[f64],
    state: &SweepState,
    base: &PhysicalParams,
    grid: &QuadratureGrid,
    timestamp: u64,
) -> Result<Vec<FieldGrid>, CoreError> {
    if b_values.is_empty() {
        return Err(CoreError::Validation("need at least one field strength".into()));
    }
    b_values
        .iter()
        .map(|&b| {
            let p = PhysicalParams::new(b, base.mu)?;
            let nc = NcParams::from_field(&p)?;
            let mut f = match *state {
                SweepState::Symmetric { n_r, m_l } => {
                    sample_symmetric(n_r, m_l, nc.theta, grid, timestamp)?
                }
                SweepState::Landau { n_y, k0, mode } => {
                    sample_landau(n_y, &[k0], nc.theta, grid, mode, timestamp)?
                }
            };
            f.meta.b_tesla = Some(b);
            f.meta.mu_kg = Some(base.mu);
            f.meta.zeta_j_per_m2 = Some(nc.zeta);
            Ok(f)
        })
        .collect()
}

impl FieldGrid {
    pub fn expected_len(&self) -> usize {
        self.axes.iter().map(|a| a.values.len()).product()
    }

    /// Structural checks: consistent array lengths, finite values, strictly
    /// increasing axes, and abs2 = re² + im² to 1e-12 relative.
    pub fn validate(&self) -> Result<(), CoreError> {
        if self.axes.is_empty() || self.axes.len() > 2 {
            return Err(CoreError::Validation(format!(
                "field grids carry 1 or 2 axes, got {}",
                self.axes.len()
            )));
        }
        for axis in &self.axes {
            if axis.values.is_empty() {
                return Err(CoreError::Validation(format!("axis {} is empty", axis.name)));
            }
            if axis.values.iter().any(|v| !v.is_finite()) {
                return Err(CoreError::Validation(format!(
                    "axis {} has non-finite values",
                    axis.name
                )));
            }
            if axis.values.windows(2).any(|w| w[1] <= w[0]) {
                return Err(CoreError::Validation(format!(
                    "axis {} is not strictly increasing",
                    axis.name
                )));
            }
        }
        let len = self.expected_len();
        if self.re.len() != len || self.im.len() != len || self.abs2.len() != len {
            return Err(CoreError::Validation(format!(
                "axes imply {len} samples, data has {}/{}/{}",
                self.re.len(),
                self.im.len(),
                self.abs2.len()
            )));
        }
        let peak = self.abs2.iter().cloned().fold(0.0, f64::max);
        for i in 0..len {
            if !self.re[i].is_finite() || !self.im[i].is_finite() {
                return Err(CoreError::Validation(format!("non-finite sample at {i}")));
            }
            let expect = self.re[i] * self.re[i] + self.im[i] * self.im[i];
            if (self.abs2[i] - expect).abs() > 1e-12 * peak.max(f64::MIN_POSITIVE) {
                return Err(CoreError::Validation(format!(
                    "abs2 disagrees with re² + im² at {i}"
                )));
            }
        }
        Ok(())
    }

    /// ∫|Ψ|² over the grid's domain by the trapezoid rule (area element
    /// included for polar grids). Sweep grids are rejected: their norm is
    /// per-row, extract one with [`FieldGrid::row_abs2`] first.
    pub fn norm(&self) -> Result<f64, CoreError> {
        self.validate()?;
        match self.kind {
            FieldKind::Polar => {
                let r = &self.axes[0].values;
                let nphi = self.axes[1].values.len();
                let hr = r[1] - r[0];
                let dphi = std::f64::consts::TAU / nphi as f64;
                let mut total = 0.0;
                for (i, &ri) in r.iter().enumerate() {
                    let row: f64 = self.abs2[i * nphi..(i + 1) * nphi].iter().sum();
                    let w = if i == 0 || i == r.len() - 1 { 0.5 } else { 1.0 };
                    total += w * row * ri;
                }
                Ok(total * hr * dphi)
            }
            FieldKind::Line => {
                let c = &self.axes[0].values;
                let h = c[1] - c[0];
                let mut total = 0.0;
                for (i, &v) in self.abs2.iter().enumerate() {
                    let w = if i == 0 || i == c.len() - 1 { 0.5 } else { 1.0 };
                    total += w * v;
                }
                Ok(total * h)
            }
            FieldKind::KSweep => Err(CoreError::Validation(
                "norms are per-row for sweep grids; extract a row first".into(),
            )),
        }
    }

    /// One row of a two-axis grid as (inner axis values, abs2 values).
    pub fn row_abs2(&self, index: usize) -> Result<(&[f64], &[f64]), CoreError> {
        if self.axes.len() != 2 {
            return Err(CoreError::Validation("row extraction needs two axes".into()));
        }
        let inner = self.axes[1].values.len();
        if index >= self.axes[0].values.len() {
            return Err(CoreError::Validation(format!(
                "row {index} out of range ({} rows)",
                self.axes[0].values.len()
            )));
        }
        Ok((
            &self.axes[1].values,
            &self.abs2[index * inner..(index + 1) * inner],
        ))
    }

    /// CSV rendering: one header line naming the columns, then one line per
    /// sample in outer-axis-major order. Numbers print in shortest
    /// round-trip form, so equal grids render to identical bytes.
    pub fn to_csv(&self) -> String {
        let mut header: Vec<String> = self
            .axes
            .iter()
            .map(|a| format!("{}[{}]", a.name, a.unit))
            .collect();
        header.extend(["re".into(), "im".into(), "abs2".into()]);
        let mut out = header.join(",");
        out.push('\n');
        let inner = self.axes.last().unwrap().values.len();
        for idx in 0..self.re.len() {
            if self.axes.len() == 2 {
                let i = idx / inner;
                let j = idx % inner;
                out.push_str(&format!(
                    "{},{},{},{},{}\n",
                    self.axes[0].values[i],
                    self.axes[1].values[j],
                    self.re[idx],
                    self.im[idx],
                    self.abs2[idx]
                ));
            } else {
                out.push_str(&format!(
                    "{},{},{},{}\n",
                    self.axes[0].values[idx], self.re[idx], self.im[idx], self.abs2[idx]
                ));
            }
        }
        out
    }

    /// JSON rendering (pretty-printed, fixed field order). Numbers are
    /// written in shortest round-trip form, so import returns the exact
    /// same grid.
    pub fn to_json(&self) -> Result<String, CoreError> {
        serde_json::to_string_pretty(self)
            .map_err(|e| CoreError::Validation(format!("serialization failed: {e}")))
    }

    pub fn from_json(text: &str) -> Result<Self, CoreError> {
        let grid: Self = serde_json::from_str(text)
            .map_err(|e| CoreError::Validation(format!("malformed field grid: {e}")))?;
        grid.validate()?;
        Ok(grid)
    }

    pub fn write_csv(&self, path: &std::path::Path) -> Result<(), CoreError> {
        std::fs::write(path, self.to_csv()).map_err(|source| CoreError::Io {
            path: path.display().to_string(),
            source,
        })
    }

    pub fn write_json(&self, path: &std::path::Path) -> Result<(), CoreError> {
        std::fs::write(path, self.to_json()?).map_err(|source| CoreError::Io {
            path: path.display().to_string(),
            source,
        })
    }

    /// |Ψ|² as an 8-bit binary PGM image, min-max normalized. Polar grids
    /// are resampled to a `size`×`size` Cartesian image by nearest neighbor
    /// (pixels outside the disk stay black); sweep grids map rows and
    /// columns directly and ignore `size`; single profiles are not images.
    /// A constant field has no contrast to stretch, so it renders mid-gray
    /// and the returned warnings say so.
    pub fn heatmap_pgm(&self, size: usize) -> Result<(Vec<u8>, Vec<String>), CoreError> {
        self.validate()?;
        if self.axes.len() != 2 {
            return Err(CoreError::Validation(
                "heatmaps need a 2D grid; single profiles export as CSV/JSON".into(),
            ));
        }
        let mut warnings = Vec::new();
        let lo = self.abs2.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = self.abs2.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let flat = hi - lo <= 1e-12 * hi.abs().max(f64::MIN_POSITIVE);
        if flat {
            warnings.push(
                "field is constant; heatmap rendered mid-gray with no contrast".to_string(),
            );
        }
        let shade = |v: f64| -> u8 {
            if flat {
                128
            } else {
                (255.0 * (v - lo) / (hi - lo)).round().clamp(0.0, 255.0) as u8
            }
        };
        let (w, h, pixels) = match self.kind {
            FieldKind::Polar => {
                if size < 2 {
                    return Err(CoreError::Validation(
                        "heatmap size must be at least 2 pixels".into(),
                    ));
                }
                let r = &self.axes[0].values;
                let r_max = *r.last().unwrap();
                let hr = r[1] - r[0];
                let nphi = self.axes[1].values.len();
                let dphi = std::f64::consts::TAU / nphi as f64;
                let mut px = vec![0u8; size * size];
                for row in 0..size {
                    // image rows scan y from top to bottom
                    let y = r_max * (1.0 - 2.0 * row as f64 / (size - 1) as f64);
                    for col in 0..size {
                        let x = r_max * (2.0 * col as f64 / (size - 1) as f64 - 1.0);
                        let rad = x.hypot(y);
                        if rad > r_max {
                            continue;
                        }
                        let i = ((rad / hr).round() as usize).min(r.len() - 1);
                        let phi = y.atan2(x).rem_euclid(std::f64::consts::TAU);
                        let j = ((phi / dphi).round() as usize) % nphi;
                        px[row * size + col] = shade(self.abs2[i * nphi + j]);
                    }
                }
                (size, size, px)
            }
            _ => {
                let rows = self.axes[0].values.len();
                let cols = self.axes[1].values.len();
                let px = self.abs2.iter().map(|&v| shade(v)).collect();
                (cols, rows, px)
            }
        };
        let mut bytes = format!("P5\n{w} {h}\n255\n").into_bytes();
        bytes.extend(pixels);
        Ok((bytes, warnings))
    }
}
