//! Physical constants, CODATA 2018 exact/recommended values.

/// Reduced Planck constant, J·s (exact since the 2019 SI redefinition).
pub const HBAR: f64 = 1.054571817e-34;

/// Elementary charge, C (exact).
pub const ELEMENTARY_CHARGE: f64 = 1.602176634e-19;

/// Electron mass, kg.
pub const ELECTRON_MASS: f64 = 9.1093837015e-31;
