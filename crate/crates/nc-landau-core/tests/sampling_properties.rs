//! Physical properties the sampled fields must show: unit norm on a grid
//! that clears the Gaussian envelope, azimuthal symmetry of the densities,
//! the m_l sign mirror, and node counts matching the quantum numbers.

use nc_landau_core::field::{sample_landau, sample_symmetric};
use nc_landau_core::landau::{NormalizationMode, PhysicalParams};
use nc_landau_core::ncmap::theta_from_b;
use nc_landau_core::verify::QuadratureGrid;
use proptest::prelude::*;

/// θ for an electron at field strength b, and the characteristic length
/// √θ/2 (the magnetic length of the generating field).
fn theta_and_scale(b: f64) -> (f64, f64) {
    let p = PhysicalParams::electron_in_field(b).unwrap();
    let theta = theta_from_b(&p);
    (theta, theta.sqrt() / 2.0)
}

/// Count sign changes of a profile, ignoring samples in the noise floor.
fn sign_changes(profile: impl Iterator<Item = f64> + Clone) -> usize {
    let peak = profile.clone().fold(0.0f64, |m, v| m.max(v.abs()));
    let mut changes = 0;
    let mut last = 0.0f64;
    for v in profile {
        if v.abs() <= 1e-9 * peak {
            continue;
        }
        if last != 0.0 && v.signum() != last {
            changes += 1;
        }
        last = v.signum();
    }
    changes
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    /// Quadrature norm of any sampled low state sits within a tenth of a
    /// percent of one once the grid reaches 8 characteristic lengths.
    #[test]
    fn sampled_states_are_normalized(
        n_r in 0u32..=3,
        m_l in -3i32..=3,
        b in 8.0f64..20.0,
    ) {
        let (theta, scale) = theta_and_scale(b);
        let grid = QuadratureGrid::polar(8.0 * scale, 256, 64).unwrap();
        let field = sample_symmetric(n_r, m_l, theta, &grid, 0).unwrap();
        let norm = field.norm().unwrap();
        prop_assert!((0.999..=1.001).contains(&norm), "norm {norm}");
    }

    /// Transverse profiles are likewise normalized along their axis.
    #[test]
    fn transverse_states_are_normalized(n_y in 0u32..=3, b in 8.0f64..20.0) {
        let (theta, scale) = theta_and_scale(b);
        let grid = QuadratureGrid::cartesian_1d(-8.0 * scale, 8.0 * scale, 320).unwrap();
        let field =
            sample_landau(n_y, &[0.2 / scale], theta, &grid, NormalizationMode::Orthonormal, 0)
                .unwrap();
        let norm = field.norm().unwrap();
        prop_assert!((0.999..=1.001).contains(&norm), "norm {norm}");
    }
}

/// |Ψ|² of a planar state carries no φ dependence: every radial row of the
/// sampled density is constant to 1e−12 of the peak.
#[test]
fn planar_densities_are_azimuthally_flat() {
    let (theta, scale) = theta_and_scale(12.0);
    let grid = QuadratureGrid::polar(8.0 * scale, 64, 32).unwrap();
    for (n_r, m_l) in [(0u32, 0i32), (1, 2), (2, -3), (3, 1)] {
        let field = sample_symmetric(n_r, m_l, theta, &grid, 0).unwrap();
        let peak = field.abs2.iter().cloned().fold(0.0f64, f64::max);
        for i in 0..field.axes[0].values.len() {
            let (_, row) = field.row_abs2(i).unwrap();
            let lo = row.iter().cloned().fold(f64::INFINITY, f64::min);
            let hi = row.iter().cloned().fold(0.0f64, f64::max);
            assert!(
                hi - lo <= 1e-12 * peak,
                "({n_r},{m_l}) row {i}: spread {:.3e}",
                hi - lo
            );
        }
    }
}

/// Densities of (n_r, m_l) and (n_r, −m_l) coincide; the fields themselves
/// are complex conjugates.
#[test]
fn density_mirror_under_angular_momentum_flip() {
    let (theta, scale) = theta_and_scale(12.0);
    let grid = QuadratureGrid::polar(8.0 * scale, 64, 32).unwrap();
    for (n_r, m_l) in [(0u32, 1i32), (1, 2), (2, 3), (3, 4)] {
        let a = sample_symmetric(n_r, m_l, theta, &grid, 0).unwrap();
        let b = sample_symmetric(n_r, -m_l, theta, &grid, 0).unwrap();
        let peak = a.abs2.iter().cloned().fold(0.0f64, f64::max);
        for i in 0..a.abs2.len() {
            assert!(
                (a.abs2[i] - b.abs2[i]).abs() <= 1e-12 * peak,
                "({n_r},±{m_l}) sample {i}"
            );
            assert_eq!(a.re[i], b.re[i]);
            assert_eq!(a.im[i], -b.im[i]);
        }
    }
}

/// The radial profile has exactly n_r interior zeros and the transverse
/// profile exactly n_y, for all quantum numbers through 4.
#[test]
fn node_counts_match_quantum_numbers() {
    let (theta, scale) = theta_and_scale(12.0);
    let polar = QuadratureGrid::polar(8.0 * scale, 512, 16).unwrap();
    for n_r in 0..=4u32 {
        for m_l in [0i32, 1, 2] {
            let field = sample_symmetric(n_r, m_l, theta, &polar, 0).unwrap();
            let n_phi = field.axes[1].values.len();
            let ray = field.re.iter().step_by(n_phi).cloned();
            let nodes = sign_changes(ray);
            assert_eq!(nodes, n_r as usize, "radial nodes of ({n_r},{m_l})");
        }
    }

    let line = QuadratureGrid::cartesian_1d(-8.0 * scale, 8.0 * scale, 512).unwrap();
    for n_y in 0..=4u32 {
        let field =
            sample_landau(n_y, &[0.0], theta, &line, NormalizationMode::Orthonormal, 0).unwrap();
        let nodes = sign_changes(field.re.iter().cloned());
        assert_eq!(nodes, n_y as usize, "transverse nodes of n_y={n_y}");
    }
}

/// Shape facts used by the rendered figures: the planar ground state peaks
/// on the axis and decays monotonically; (0, ±1) is an annulus with a dark
/// center; a k₀ = 0 transverse profile is symmetric about y = 0.
#[test]
fn density_profiles_have_documented_shapes() {
    let (theta, scale) = theta_and_scale(12.0);
    let polar = QuadratureGrid::polar(8.0 * scale, 256, 16).unwrap();

    let ground = sample_symmetric(0, 0, theta, &polar, 0).unwrap();
    let n_phi = ground.axes[1].values.len();
    let profile: Vec<f64> = ground.abs2.iter().step_by(n_phi).cloned().collect();
    assert!(profile.windows(2).all(|w| w[1] < w[0]), "ground state must decay radially");

    let ring = sample_symmetric(0, 1, theta, &polar, 0).unwrap();
    let profile: Vec<f64> = ring.abs2.iter().step_by(n_phi).cloned().collect();
    assert_eq!(profile[0], 0.0, "annulus center is dark");
    let peak_at = profile
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.total_cmp(b.1))
        .unwrap()
        .0;
    let r_peak = ring.axes[0].values[peak_at];
    // peak of |Ψ_{0,1}|² sits at u = eBr²/2ħ = 1, i.e. r = √θ/√2
    let expected = (theta / 2.0).sqrt();
    assert!(
        (r_peak - expected).abs() <= 2.0 * (ring.axes[0].values[1] - ring.axes[0].values[0]),
        "annulus radius {r_peak:.3e} vs {expected:.3e}"
    );

    let line = QuadratureGrid::cartesian_1d(-8.0 * scale, 8.0 * scale, 512).unwrap();
    let even = sample_landau(2, &[0.0], theta, &line, NormalizationMode::Orthonormal, 0).unwrap();
    let n = even.abs2.len();
    let peak = even.abs2.iter().cloned().fold(0.0f64, f64::max);
    for i in 0..n {
        let diff = (even.abs2[i] - even.abs2[n - 1 - i]).abs();
        assert!(diff <= 1e-12 * peak, "asymmetry {diff:.3e} at sample {i}");
    }
}
