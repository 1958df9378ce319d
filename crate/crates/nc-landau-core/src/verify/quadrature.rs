//! Inner products of sampled fields by composite trapezoid quadrature.
//!
//! The angular direction of a polar grid is periodic, where the trapezoid
//! rule is exact for the finitely many azimuthal harmonics these fields
//! contain. The radial direction folds the r weight of the area element into
//! the integrand, which leaves a nonzero derivative of g(r) = f(r)·r at the
//! origin; a plain trapezoid sum would therefore converge only as h²·g′(0)/12.
//! The radial rule here adds the first two Euler–Maclaurin endpoint
//! corrections, using g′(0) = f(0) (exact, straight from the sample on the
//! axis) and one-sided difference estimates for the remaining endpoint
//! derivatives, which pushes the radial error to O(h⁶) — refining from 128
//! to 256 radial points moves a unit norm by ~2e−9.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::landau::PhysicalParams;
use crate::CoreError;

/// A quadrature lattice. Counts are numbers of intervals per axis; sample
/// points include both endpoints of non-periodic axes, so an axis with n
/// intervals carries n+1 samples (the periodic angular axis carries exactly
/// n_phi samples).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum QuadratureGrid {
    /// r ∈ [0, r_max] (n_r intervals), φ ∈ [0, 2π) (n_phi samples).
    /// Point order: radial index outer, angular inner.
    Polar { r_max: f64, n_r: usize, n_phi: usize },
    /// One Cartesian axis, c ∈ [min, max] with n intervals.
    Cartesian1D { min: f64, max: f64, n: usize },
    /// Square box [−half_width, half_width]² with n intervals per axis.
    /// Point order: x index outer, y inner.
    Cartesian2D { half_width: f64, n: usize },
}

impl QuadratureGrid {
    pub fn polar(r_max: f64, n_r: usize, n_phi: usize) -> Result<Self, CoreError> {
        if r_max <= 0.0 || !r_max.is_finite() {
            return Err(CoreError::Validation(format!(
                "radial extent must be positive, got {r_max}"
            )));
        }
        if n_r < 16 || n_phi < 16 {
            return Err(CoreError::Validation(format!(
                "need at least 16 points per axis, got {n_r}×{n_phi}"
            )));
        }
        Ok(Self::Polar { r_max, n_r, n_phi })
    }

    pub fn cartesian_1d(min: f64, max: f64, n: usize) -> Result<Self, CoreError> {
        if max <= min || !min.is_finite() || !max.is_finite() {
            return Err(CoreError::Validation(format!(
                "need a finite range with max > min, got [{min}, {max}]"
            )));
        }
        if n < 16 {
            return Err(CoreError::Validation(format!(
                "need at least 16 points per axis, got {n}"
            )));
        }
        Ok(Self::Cartesian1D { min, max, n })
    }

    pub fn cartesian_2d(half_width: f64, n: usize) -> Result<Self, CoreError> {
        if half_width <= 0.0 || !half_width.is_finite() {
            return Err(CoreError::Validation(format!(
                "half-width must be positive, got {half_width}"
            )));
        }
        if n < 16 {
            return Err(CoreError::Validation(format!(
                "need at least 16 points per axis, got {n}"
            )));
        }
        Ok(Self::Cartesian2D { half_width, n })
    }

    /// Number of samples a field on this grid must carry.
    pub fn point_count(&self) -> usize {
        match *self {
            Self::Polar { n_r, n_phi, .. } => (n_r + 1) * n_phi,
            Self::Cartesian1D { n, .. } => n + 1,
            Self::Cartesian2D { n, .. } => (n + 1) * (n + 1),
        }
    }

    /// Norm convergence needs the radial extent to clear the state's
    /// Gaussian envelope; 8 magnetic lengths is the documented minimum for
    /// the states this library works with.
    pub fn check_extent_for(&self, p: &PhysicalParams) -> Result<(), CoreError> {
        let l_b = p.magnetic_length();
        let extent = match *self {
            Self::Polar { r_max, .. } => r_max,
            Self::Cartesian1D { min, max, .. } => 0.5 * (max - min),
            Self::Cartesian2D { half_width, .. } => half_width,
        };
        if extent < 8.0 * l_b {
            return Err(CoreError::Validation(format!(
                "grid extent {extent:.3e} m is under 8 magnetic lengths ({:.3e} m)",
                8.0 * l_b
            )));
        }
        Ok(())
    }

    /// Sample a polar-coordinate function in this grid's canonical order.
    pub fn sample_polar(
        &self,
        f: impl Fn(f64, f64) -> Complex64 + Sync + Send,
    ) -> Result<Vec<Complex64>, CoreError> {
        let Self::Polar { r_max, n_r, n_phi } = *self else {
            return Err(CoreError::GridMismatch("not a polar grid".into()));
        };
        let hr = r_max / n_r as f64;
        let dphi = std::f64::consts::TAU / n_phi as f64;
        let f = &f;
        Ok((0..=n_r)
            .into_par_iter()
            .flat_map_iter(|i| {
                let r = i as f64 * hr;
                (0..n_phi).map(move |j| f(r, j as f64 * dphi))
            })
            .collect())
    }

    /// Sample a 1D function on this grid's axis.
    pub fn sample_line(
        &self,
        f: impl Fn(f64) -> Complex64 + Sync + Send,
    ) -> Result<Vec<Complex64>, CoreError> {
        let Self::Cartesian1D { min, max, n } = *self else {
            return Err(CoreError::GridMismatch("not a 1D grid".into()));
        };
        let h = (max - min) / n as f64;
        Ok((0..=n)
            .into_par_iter()
            .map(|i| f(min + i as f64 * h))
            .collect())
    }

    /// Sample an (x, y) function on this grid (x outer, y inner).
    pub fn sample_plane(
        &self,
        f: impl Fn(f64, f64) -> Complex64 + Sync + Send,
    ) -> Result<Vec<Complex64>, CoreError> {
        let Self::Cartesian2D { half_width, n } = *self else {
            return Err(CoreError::GridMismatch("not a 2D Cartesian grid".into()));
        };
        let h = 2.0 * half_width / n as f64;
        let f = &f;
        Ok((0..=n)
            .into_par_iter()
            .flat_map_iter(|i| {
                let x = -half_width + i as f64 * h;
                (0..=n).map(move |j| f(x, -half_width + j as f64 * h))
            })
            .collect())
    }
}

/// ⟨a|b⟩ = ∫ conj(a)·b over the grid's domain, with the polar area element
/// r·dr·dφ folded in and the radial Euler–Maclaurin endpoint correction
/// applied (see the module docs).
pub fn inner_product(
    psi_a: &[Complex64],
    psi_b: &[Complex64],
    grid: &QuadratureGrid,
) -> Result<Complex64, CoreError> {
    let expected = grid.point_count();
    if psi_a.len() != expected || psi_b.len() != expected {
        return Err(CoreError::GridMismatch(format!(
            "fields carry {} and {} samples, grid has {} points",
            psi_a.len(),
            psi_b.len(),
            expected
        )));
    }
    match *grid {
        QuadratureGrid::Polar { r_max, n_r, n_phi } => {
            let hr = r_max / n_r as f64;
            let dphi = std::f64::consts::TAU / n_phi as f64;
            // angular sweep first: f_i = ∫ conj(a)b dφ at radius index i
            let f: Vec<Complex64> = (0..=n_r)
                .into_par_iter()
                .map(|i| {
                    let row = i * n_phi;
                    let mut acc = Complex64::new(0.0, 0.0);
                    for j in 0..n_phi {
                        acc += psi_a[row + j].conj() * psi_b[row + j];
                    }
                    acc * dphi
                })
                .collect();
            // radial integral of g = f·r
            let g: Vec<Complex64> = f
                .iter()
                .enumerate()
                .map(|(i, &fi)| fi * (i as f64 * hr))
                .collect();
            let mut total: Complex64 = g.iter().sum();
            total -= 0.5 * (g[0] + g[n_r]);
            total *= hr;
            // Euler–Maclaurin endpoint terms:
            //   I = T − h²/12·(g′(R) − g′(0)) + h⁴/720·(g‴(R) − g‴(0))
            // g′(0) = f(0) since g = f·r; the rest by one-sided differences.
            let gp0 = f[0];
            let gp_r = (25.0 * g[n_r] - 48.0 * g[n_r - 1] + 36.0 * g[n_r - 2]
                - 16.0 * g[n_r - 3]
                + 3.0 * g[n_r - 4])
                / (12.0 * hr);
            let g3_0 =
                (-2.5 * g[0] + 9.0 * g[1] - 12.0 * g[2] + 7.0 * g[3] - 1.5 * g[4]) / hr.powi(3);
            let g3_r = (2.5 * g[n_r] - 9.0 * g[n_r - 1] + 12.0 * g[n_r - 2] - 7.0 * g[n_r - 3]
                + 1.5 * g[n_r - 4])
                / hr.powi(3);
            total -= hr * hr / 12.0 * (gp_r - gp0);
            total += hr.powi(4) / 720.0 * (g3_r - g3_0);
            Ok(total)
        }
        QuadratureGrid::Cartesian1D { min, max, n } => {
            let h = (max - min) / n as f64;
            let mut acc = Complex64::new(0.0, 0.0);
            for i in 0..=n {
                let w = if i == 0 || i == n { 0.5 } else { 1.0 };
                acc += w * psi_a[i].conj() * psi_b[i];
            }
            Ok(acc * h)
        }
        QuadratureGrid::Cartesian2D { half_width, n } => {
            let h = 2.0 * half_width / n as f64;
            let acc: Complex64 = (0..=n)
                .into_par_iter()
                .map(|i| {
                    let wx = if i == 0 || i == n { 0.5 } else { 1.0 };
                    let mut row = Complex64::new(0.0, 0.0);
                    for j in 0..=n {
                        let wy = if j == 0 || j == n { 0.5 } else { 1.0 };
                        row += wx * wy * psi_a[i * (n + 1) + j].conj() * psi_b[i * (n + 1) + j];
                    }
                    row
                })
                .sum();
            Ok(acc * h * h)
        }
    }
}
