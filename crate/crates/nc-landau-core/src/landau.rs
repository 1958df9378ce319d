//! Spectra and eigenfunctions of a charged particle in a uniform magnetic
//! field, in the symmetric gauge and both Landau gauges, for either sign of
//! the charge–field product.
//!
//! Unit conventions: SI throughout. The magnetic length l_B = √(ħ/eB) sets
//! every spatial scale; energies come in steps of ħω_c with ω_c = eB/μ.
//! (A Gaussian-units variant of the Hamiltonian would replace eB by eB/c in
//! every formula below; this library does not provide that as a code path.)

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::constants::{ELECTRON_MASS, ELEMENTARY_CHARGE, HBAR};
use crate::special::{hermite_phys, laguerre_assoc, ln_factorial};
use crate::CoreError;

/// Particle and field configuration, with the physical constants carried
/// along so a single record fully determines every formula.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhysicalParams {
    /// Particle mass μ, kg.
    pub mu: f64,
    /// Magnetic field strength B, T.
    pub b: f64,
    /// Reduced Planck constant, J·s.
    pub hbar: f64,
    /// Elementary charge, C.
    pub e: f64,
}

impl Default for PhysicalParams {
    /// Electron in a 12 T field, the configuration all worked numbers use.
    fn default() -> Self {
        Self {
            mu: ELECTRON_MASS,
            b: 12.0,
            hbar: HBAR,
            e: ELEMENTARY_CHARGE,
        }
    }
}

impl PhysicalParams {
    /// Electron-mass particle in a field of `b` tesla.
    pub fn electron_in_field(b: f64) -> Result<Self, CoreError> {
        Self::new(b, ELECTRON_MASS)
    }

    pub fn new(b: f64, mu: f64) -> Result<Self, CoreError> {
        let p = Self {
            mu,
            b,
            ..Self::default()
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<(), CoreError> {
        for (name, v) in [
            ("mu", self.mu),
            ("B", self.b),
            ("hbar", self.hbar),
            ("e", self.e),
        ] {
            if v <= 0.0 || !v.is_finite() {
                return Err(CoreError::Validation(format!(
                    "{name} must be finite and positive, got {v}"
                )));
            }
        }
        Ok(())
    }

    /// Magnetic length l_B = √(ħ/eB), m.
    pub fn magnetic_length(&self) -> f64 {
        (self.hbar / (self.e * self.b)).sqrt()
    }
}

/// Vector-potential choice. The symmetric gauge A = (−By/2, Bx/2, 0)
/// preserves rotational symmetry; the first Landau gauge A = (−By, 0, 0)
/// preserves translations along x; the second, A = (0, Bx, 0), along y.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum GaugeChoice {
    Symmetric,
    LandauFirst,
    LandauSecond,
}

/// Sign of the charge–field product: +1 means qB = +eB, −1 means qB = −eB.
/// Flipping it mirrors the angular-momentum dependence of the spectrum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SignConvention {
    Plus,
    Minus,
}

impl SignConvention {
    pub fn value(self) -> f64 {
        match self {
            SignConvention::Plus => 1.0,
            SignConvention::Minus => -1.0,
        }
    }
}

/// How to scale the Hermite argument in the Landau-gauge eigenfunctions.
///
/// The standard shifted-oscillator result uses H_n(√(eB/ħ)·(y − y₀)), which
/// is what `Orthonormal` does and what every orthonormality and residual
/// check relies on. Some written forms of these eigenfunctions instead print
/// the dimensionally odd argument (eB/ħ)·(y − y₀); `PaperLiteral` evaluates
/// exactly that, so figures generated from such a form can be reproduced
/// verbatim. The symmetric-gauge eigenfunction is identical in both modes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum NormalizationMode {
    #[default]
    Orthonormal,
    PaperLiteral,
}

/// Quantum numbers of one eigenstate, tied to the gauge that defines them.
///
/// Symmetric-gauge states carry a radial number n_r and angular number m_l;
/// Landau-gauge states carry an oscillator number (n_y for the first gauge,
/// n_x for the second) and a real plane-wave number k ([1/m]). The enum makes
/// it impossible to hold the wrong pair for a gauge.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum StateNumbers {
    Radial { n_r: u32, m_l: i32 },
    Transverse { n_perp: u32, k: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuantumState {
    pub gauge: GaugeChoice,
    pub sign: SignConvention,
    pub numbers: StateNumbers,
}

impl QuantumState {
    pub fn symmetric(sign: SignConvention, n_r: u32, m_l: i32) -> Self {
        Self {
            gauge: GaugeChoice::Symmetric,
            sign,
            numbers: StateNumbers::Radial { n_r, m_l },
        }
    }

    pub fn landau_first(sign: SignConvention, n_perp: u32, k: f64) -> Self {
        Self {
            gauge: GaugeChoice::LandauFirst,
            sign,
            numbers: StateNumbers::Transverse { n_perp, k },
        }
    }

    pub fn landau_second(sign: SignConvention, n_perp: u32, k: f64) -> Self {
        Self {
            gauge: GaugeChoice::LandauSecond,
            sign,
            numbers: StateNumbers::Transverse { n_perp, k },
        }
    }
}

/// Cyclotron frequency ω_c = eB/μ, rad/s.
pub fn cyclotron_frequency(p: &PhysicalParams) -> f64 {
    p.e * p.b / p.mu
}

/// Symmetric-gauge energy
/// E = (2n_r + |m_l| + 1)·ħeB/2μ − s·m_l·ħeB/2μ.
///
/// For s = +1 every m_l ≥ 0 state is degenerate with (n_r, 0); negative m_l
/// climbs the ladder instead. Flipping s mirrors m_l (see the sign-symmetry
/// test below).
pub fn energy_symmetric(n_r: u32, m_l: i32, p: &PhysicalParams, sign: SignConvention) -> f64 {
    let half_hw = 0.5 * p.hbar * p.e * p.b / p.mu;
    let units = 2.0 * n_r as f64 + m_l.unsigned_abs() as f64 + 1.0 - sign.value() * m_l as f64;
    units * half_hw
}

/// Landau-gauge energy E = (2n + 1)·ħω_c/2.
///
/// Identical for both Landau gauges and both sign conventions, and carries no
/// dependence on the plane-wave number k: each level is infinitely
/// degenerate in k.
pub fn energy_landau(n_perp: u32, p: &PhysicalParams) -> f64 {
    (2.0 * n_perp as f64 + 1.0) * 0.5 * p.hbar * cyclotron_frequency(p)
}

/// Symmetric-gauge eigenfunction at (r, φ):
///
/// Ψ = (2π)^{−1/2} (eB/ħ)^{1/2} √(n_r!/(n_r+|m_l|)!) · u^{|m_l|/2} e^{−u/2}
///     L_{n_r}^{|m_l|}(u) · e^{i m_l φ},     u = eBr²/2ħ.
///
/// The amplitude is assembled in log space (factorial ratio, power, Gaussian)
/// and exponentiated once, so states with large n_r·|m_l| and radii tens of
/// l_B out evaluate without overflow; far tails underflow cleanly to zero.
/// The mode argument is accepted for signature symmetry with the
/// Landau-gauge evaluator; this function is identical in both modes.
pub fn eigenfunction_symmetric(
    state: &QuantumState,
    p: &PhysicalParams,
    r: f64,
    phi: f64,
    _mode: NormalizationMode,
) -> Result<Complex64, CoreError> {
    let StateNumbers::Radial { n_r, m_l } = state.numbers else {
        return Err(CoreError::Domain(
            "symmetric-gauge evaluation requires a (n_r, m_l) state".into(),
        ));
    };
    if state.gauge != GaugeChoice::Symmetric {
        return Err(CoreError::Domain(
            "state does not belong to the symmetric gauge".into(),
        ));
    }
    if r < 0.0 || !r.is_finite() {
        return Err(CoreError::Domain(format!("radius must be ≥ 0, got {r}")));
    }
    let u = p.e * p.b * r * r / (2.0 * p.hbar);
    let amp = radial_amplitude(n_r, m_l.unsigned_abs(), p.e * p.b / p.hbar, u);
    Ok(Complex64::from_polar(amp.abs(), m_l as f64 * phi) * amp.signum())
}

/// Radial amplitude shared by the magnetic-field form (scale = eB/ħ) and the
/// noncommutative form (scale = 4/θ); `u` is the dimensionless squared
/// radius, scale·r²/2. Returns a signed real number.
pub(crate) fn radial_amplitude(n_r: u32, m_abs: u32, scale: f64, u: f64) -> f64 {
    let lag = laguerre_assoc(n_r, m_abs as f64, u);
    if lag == 0.0 {
        return 0.0;
    }
    let ln_prefactor = 0.5
        * (scale.ln() - (2.0 * std::f64::consts::PI).ln() + ln_factorial(n_r)
            - ln_factorial(n_r + m_abs));
    let ln_radial = if m_abs == 0 {
        -0.5 * u
    } else if u == 0.0 {
        return 0.0; // u^{|m|/2} kills the amplitude exactly on the axis
    } else {
        0.5 * m_abs as f64 * u.ln() - 0.5 * u
    };
    lag.signum() * (ln_prefactor + ln_radial + lag.abs().ln()).exp()
}

/// Landau-gauge eigenfunction at (x, y): a shifted 1D oscillator state in
/// the transverse coordinate times a plane wave in the other,
///
/// Ψ = (2^n n!)^{−1/2} (eB/πħ)^{1/4} exp(−(eB/2ħ)(c − c₀)²) H_n(a·(c − c₀)) e^{ikx_∥}.
///
/// First gauge: transverse c = y, longitudinal x, center c₀ = −s·ħk/eB.
/// Second gauge: c = x, longitudinal y, center c₀ = +s·ħk/eB.
/// The Hermite scale a follows the [`NormalizationMode`]. The plane wave is
/// kept with unit amplitude: normalization is per unit length along the
/// longitudinal direction.
pub fn eigenfunction_landau(
    state: &QuantumState,
    p: &PhysicalParams,
    x: f64,
    y: f64,
    mode: NormalizationMode,
) -> Result<Complex64, CoreError> {
    let StateNumbers::Transverse { n_perp, k } = state.numbers else {
        return Err(CoreError::Domain(
            "Landau-gauge evaluation requires a (n, k) state".into(),
        ));
    };
    let s = state.sign.value();
    let shift = p.hbar * k / (p.e * p.b);
    let (transverse, longitudinal) = match state.gauge {
        GaugeChoice::LandauFirst => (y + s * shift, x),
        GaugeChoice::LandauSecond => (x - s * shift, y),
        GaugeChoice::Symmetric => {
            return Err(CoreError::Domain(
                "state does not belong to a Landau gauge".into(),
            ))
        }
    };
    let amp = transverse_amplitude(n_perp, p.e * p.b / p.hbar, transverse, mode);
    Ok(Complex64::from_polar(amp.abs(), k * longitudinal) * amp.signum())
}

/// Transverse 1D oscillator amplitude shared by the magnetic-field form
/// (scale = eB/ħ) and the noncommutative form (scale = 4/θ): for
/// inverse-squared-length `scale` and centered coordinate `c`,
/// N_n (scale/π)^{1/4} exp(−scale·c²/2) H_n(a·c), with a = √scale in
/// [`NormalizationMode::Orthonormal`] and a = scale in
/// [`NormalizationMode::PaperLiteral`].
pub(crate) fn transverse_amplitude(n: u32, scale: f64, c: f64, mode: NormalizationMode) -> f64 {
    let a = match mode {
        NormalizationMode::Orthonormal => scale.sqrt(),
        NormalizationMode::PaperLiteral => scale,
    };
    let h = hermite_phys(n, a * c);
    if h == 0.0 {
        return 0.0;
    }
    let ln_norm = -0.5 * (n as f64 * 2f64.ln() + ln_factorial(n))
        + 0.25 * (scale / std::f64::consts::PI).ln();
    h.signum() * (ln_norm - 0.5 * scale * c * c + h.abs().ln()).exp()
}

/// One energy level of the symmetric-gauge spectrum, listed with every
/// (n_r, m_l) member within an angular-momentum cutoff.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegenerateLevel {
    /// Energy in units of ħω_c/2 (always odd).
    pub energy_units: u32,
    /// Member states, favorable-m_l family first (ordered by s·m_l), then
    /// the finite unfavorable-side members by |m_l|.
    pub members: Vec<(u32, i32)>,
    /// True when the favorable-sign m_l family continues past the cutoff:
    /// the level is infinitely degenerate and the listing is a truncation.
    pub truncated_infinite_family: bool,
}

/// Enumerate all levels with energy ≤ `max_units`·ħω_c/2 and their members
/// with |m_l| ≤ `m_cutoff`.
///
/// The energy in these units is 2n_r + |m_l| − s·m_l + 1: for sign s = +1
/// every m_l ≥ 0 shares the energy of (n_r, 0), so each level carries an
/// infinite family truncated at the cutoff and flagged as such; mirrored
/// for s = −1.
pub fn degeneracy_listing(
    max_units: u32,
    sign: SignConvention,
    m_cutoff: u32,
) -> Result<Vec<DegenerateLevel>, CoreError> {
    if max_units == 0 || max_units.is_multiple_of(2) {
        return Err(CoreError::Validation(format!(
            "max energy must be an odd positive multiple of ħω_c/2, got {max_units}"
        )));
    }
    let s = match sign {
        SignConvention::Plus => 1i64,
        SignConvention::Minus => -1i64,
    };
    let mut levels = Vec::new();
    for units in (1..=max_units).step_by(2) {
        let mut favorable = Vec::new();
        let mut unfavorable = Vec::new();
        for m in -(m_cutoff as i64)..=m_cutoff as i64 {
            let rest = units as i64 - 1 - m.abs() + s * m;
            if rest >= 0 && rest % 2 == 0 {
                let n_r = (rest / 2) as u32;
                if s * m >= 0 {
                    favorable.push((s * m, (n_r, m as i32)));
                } else {
                    unfavorable.push((m.abs(), (n_r, m as i32)));
                }
            }
        }
        favorable.sort_by_key(|&(key, _)| key);
        unfavorable.sort_by_key(|&(key, _)| key);
        let members: Vec<(u32, i32)> = favorable
            .into_iter()
            .chain(unfavorable)
            .map(|(_, nm)| nm)
            .collect();
        levels.push(DegenerateLevel {
            energy_units: units,
            members,
            // the favorable family σ·m_l = 0, 1, 2, … never ends
            truncated_infinite_family: true,
        });
    }
    Ok(levels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn cyclotron_frequency_of_electron_at_12_tesla() {
        let p = PhysicalParams::default();
        assert_relative_eq!(cyclotron_frequency(&p), 2.110e12, max_relative = 1e-3);
        let p6 = PhysicalParams::electron_in_field(6.0).unwrap();
        assert_relative_eq!(
            cyclotron_frequency(&p6),
            0.5 * cyclotron_frequency(&p),
            max_relative = 1e-15
        );
    }

    #[test]
    fn ground_energy_at_12_tesla() {
        let p = PhysicalParams::default();
        let e0 = energy_symmetric(0, 0, &p, SignConvention::Plus);
        assert_relative_eq!(e0, 1.112e-22, max_relative = 1e-3);
        // and in eV
        assert_relative_eq!(e0 / p.e, 6.943e-4, max_relative = 1e-3);
    }

    #[test]
    fn angular_momentum_splits_only_one_sign() {
        let p = PhysicalParams::default();
        let s = SignConvention::Plus;
        assert_relative_eq!(
            energy_symmetric(0, 3, &p, s),
            energy_symmetric(0, 0, &p, s),
            max_relative = 1e-15
        );
        assert_relative_eq!(energy_symmetric(0, -3, &p, s), 7.793e-22, max_relative = 1e-3);
    }

    #[test]
    fn sign_convention_mirrors_m_l() {
        let p = PhysicalParams::default();
        for n_r in 0..4 {
            for m_l in -5..=5 {
                assert_eq!(
                    energy_symmetric(n_r, m_l, &p, SignConvention::Plus),
                    energy_symmetric(n_r, -m_l, &p, SignConvention::Minus),
                );
            }
        }
    }

    #[test]
    fn landau_energy_matches_symmetric_ladder_and_ignores_k() {
        let p = PhysicalParams::default();
        assert_relative_eq!(energy_landau(0, &p), 1.112e-22, max_relative = 1e-3);
        assert_relative_eq!(energy_landau(1, &p), 3.340e-22, max_relative = 1e-3);
        // E carries no k argument at all; degenerate by construction. The
        // eigenfunctions for different k are genuinely different states:
        let s0 = QuantumState::landau_first(SignConvention::Plus, 0, 0.0);
        let s1 = QuantumState::landau_first(SignConvention::Plus, 0, 1e8);
        let p0 = eigenfunction_landau(&s0, &p, 0.0, 0.0, NormalizationMode::Orthonormal).unwrap();
        let p1 = eigenfunction_landau(&s1, &p, 0.0, 0.0, NormalizationMode::Orthonormal).unwrap();
        assert_ne!(p0, p1);
    }

    #[test]
    fn symmetric_eigenfunction_at_origin() {
        let p = PhysicalParams::default();
        let st = QuantumState::symmetric(SignConvention::Plus, 0, 0);
        let v = eigenfunction_symmetric(&st, &p, 0.0, 1.234, NormalizationMode::Orthonormal)
            .unwrap();
        let expect = (p.e * p.b / (2.0 * std::f64::consts::PI * p.hbar)).sqrt();
        assert_relative_eq!(v.re, expect, max_relative = 1e-14);
        assert_eq!(v.im, 0.0);
        // any m_l ≠ 0 state vanishes on the axis
        let st1 = QuantumState::symmetric(SignConvention::Plus, 2, -3);
        let v1 = eigenfunction_symmetric(&st1, &p, 0.0, 0.3, NormalizationMode::Orthonormal)
            .unwrap();
        assert_eq!(v1, Complex64::new(0.0, 0.0));
    }

    #[test]
    fn landau_eigenfunction_gaussian_peak() {
        let p = PhysicalParams::default();
        let st = QuantumState::landau_first(SignConvention::Plus, 0, 0.0);
        let v = eigenfunction_landau(&st, &p, 0.0, 0.0, NormalizationMode::Orthonormal).unwrap();
        let expect = (p.e * p.b / (std::f64::consts::PI * p.hbar)).powf(0.25);
        assert_relative_eq!(v.re, expect, max_relative = 1e-14);
        assert_eq!(v.im, 0.0);
    }

    #[test]
    fn landau_center_shifts_against_k() {
        // |Ψ|² for n = 0 peaks where the shifted Gaussian is centered:
        // y = −ħk/eB in the first gauge with sign +1.
        let p = PhysicalParams::default();
        let k0 = 3.0e7;
        let st = QuantumState::landau_first(SignConvention::Plus, 0, k0);
        let y_center = -p.hbar * k0 / (p.e * p.b);
        let at_center =
            eigenfunction_landau(&st, &p, 0.0, y_center, NormalizationMode::Orthonormal)
                .unwrap()
                .norm();
        for dy in [-2.0, -0.5, 0.5, 2.0] {
            let y = y_center + dy * p.magnetic_length();
            let v = eigenfunction_landau(&st, &p, 0.0, y, NormalizationMode::Orthonormal)
                .unwrap()
                .norm();
            assert!(v < at_center);
        }
        // sign −1 flips the shift
        let st_m = QuantumState::landau_second(SignConvention::Minus, 0, k0);
        let x_center = -p.hbar * k0 / (p.e * p.b);
        let a = eigenfunction_landau(&st_m, &p, x_center, 0.0, NormalizationMode::Orthonormal)
            .unwrap()
            .norm();
        let b = eigenfunction_landau(&st_m, &p, -x_center, 0.0, NormalizationMode::Orthonormal)
            .unwrap()
            .norm();
        assert!(a > b);
    }

    #[test]
    fn degeneracy_listing_matches_direct_enumeration() {
        let levels = degeneracy_listing(3, SignConvention::Plus, 3).unwrap();
        assert_eq!(levels.len(), 2);
        assert_eq!(levels[0].energy_units, 1);
        assert_eq!(levels[0].members, vec![(0, 0), (0, 1), (0, 2), (0, 3)]);
        assert!(levels[0].truncated_infinite_family);
        assert_eq!(levels[1].energy_units, 3);
        assert_eq!(
            levels[1].members,
            vec![(1, 0), (1, 1), (1, 2), (1, 3), (0, -1)]
        );

        let mirrored = degeneracy_listing(3, SignConvention::Minus, 3).unwrap();
        assert_eq!(
            mirrored[1].members,
            vec![(1, 0), (1, -1), (1, -2), (1, -3), (0, 1)]
        );
    }

    #[test]
    fn degeneracy_listing_rejects_even_units() {
        assert!(degeneracy_listing(4, SignConvention::Plus, 3).is_err());
        assert!(degeneracy_listing(0, SignConvention::Plus, 3).is_err());
    }

    #[test]
    fn negative_radius_is_a_domain_error() {
        let p = PhysicalParams::default();
        let st = QuantumState::symmetric(SignConvention::Plus, 0, 0);
        assert!(matches!(
            eigenfunction_symmetric(&st, &p, -1e-9, 0.0, NormalizationMode::Orthonormal),
            Err(CoreError::Domain(_))
        ));
    }
}
