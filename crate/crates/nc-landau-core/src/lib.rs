//! Landau levels and the noncommutative isotropic oscillator.
//!
//! A charged particle in a uniform magnetic field (the Landau problem, in the
//! symmetric gauge and both Landau gauges) and a Bopp-shifted noncommutative
//! harmonic oscillator have identical spectra and eigenfunctions once the
//! noncommutativity parameter and a global scale are fixed from the field:
//! θ = 4ħ/eB together with ζ = e²B²/8μ. This crate computes both sides
//! analytically, performs the mapping, and checks everything against
//! numerical oracles that use no analytic spectrum: quadrature inner
//! products, finite-difference operator residuals, and direct grid
//! diagonalization.
//!
//! All quantities are SI. Energies are joules, lengths are metres, θ carries
//! m², and the natural length scale throughout is the magnetic length
//! l_B = √(ħ/eB).

pub mod constants;
pub mod field;
pub mod landau;
pub mod ncmap;
pub mod special;
pub mod verify;

mod error;

pub use error::CoreError;
