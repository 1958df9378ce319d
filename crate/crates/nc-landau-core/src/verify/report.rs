//! Comparing analytic and numeric spectra.

use crate::CoreError;

/// Level-by-level comparison of two spectra, sorted ascending and truncated
/// to the shorter list.
#[derive(Debug, Clone, serde::Serialize)]
pub struct SpectrumMatchReport {
    pub analytic: Vec<f64>,
    pub numeric: Vec<f64>,
    /// |analytic − numeric| / |analytic|, level by level.
    pub rel_errors: Vec<f64>,
    pub max_rel_error: f64,
    pub tolerance: f64,
    pub verdict: bool,
    /// Set when the lists had different lengths and the tail was dropped.
    pub truncation_warning: Option<String>,
}

/// Match two spectra to a relative tolerance. Both lists are sorted before
/// pairing, so callers can pass levels in whatever order their source
/// produces them.
pub fn spectrum_match(
    analytic: &[f64],
    numeric: &[f64],
    tolerance: f64,
) -> Result<SpectrumMatchReport, CoreError> {
    if analytic.is_empty() || numeric.is_empty() {
        return Err(CoreError::Validation(
            "spectrum comparison needs at least one level on each side".into(),
        ));
    }
    if tolerance <= 0.0 || !tolerance.is_finite() {
        return Err(CoreError::Validation(format!(
            "tolerance must be positive and finite, got {tolerance}"
        )));
    }
    let mut a = analytic.to_vec();
    let mut b = numeric.to_vec();
    a.sort_by(f64::total_cmp);
    b.sort_by(f64::total_cmp);
    let len = a.len().min(b.len());
    let truncation_warning = if a.len() != b.len() {
        Some(format!(
            "comparing the lowest {len} levels; the {} extra on the longer side were dropped",
            a.len().max(b.len()) - len
        ))
    } else {
        None
    };
    a.truncate(len);
    b.truncate(len);
    let rel_errors: Vec<f64> = a
        .iter()
        .zip(&b)
        .map(|(x, y)| (x - y).abs() / x.abs().max(f64::MIN_POSITIVE))
        .collect();
    let max_rel_error = rel_errors.iter().cloned().fold(0.0, f64::max);
    Ok(SpectrumMatchReport {
        verdict: max_rel_error <= tolerance,
        analytic: a,
        numeric: b,
        rel_errors,
        max_rel_error,
        tolerance,
        truncation_warning,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matching_spectra_pass_in_any_order() {
        let a = [3.0, 1.0, 2.0];
        let b = [1.0 + 1e-9, 2.0, 3.0 - 1e-9];
        let r = spectrum_match(&a, &b, 1e-6).unwrap();
        assert!(r.verdict);
        assert!(r.truncation_warning.is_none());
        assert!(r.max_rel_error < 1e-8);
    }

    #[test]
    fn length_mismatch_truncates_with_a_warning() {
        let r = spectrum_match(&[1.0, 2.0, 3.0, 4.0], &[1.0, 2.0], 1e-6).unwrap();
        assert!(r.verdict);
        assert_eq!(r.rel_errors.len(), 2);
        assert!(r.truncation_warning.is_some());
    }

    #[test]
    fn a_bad_level_fails_the_verdict() {
        let r = spectrum_match(&[1.0, 2.0], &[1.0, 2.1], 1e-3).unwrap();
        assert!(!r.verdict);
        assert!((r.max_rel_error - 0.05).abs() < 1e-12);
    }

    #[test]
    fn degenerate_inputs_are_rejected() {
        assert!(spectrum_match(&[], &[1.0], 1e-3).is_err());
        assert!(spectrum_match(&[1.0], &[1.0], 0.0).is_err());
    }
}
