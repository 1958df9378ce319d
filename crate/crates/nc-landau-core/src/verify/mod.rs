//! Independent numerical oracles.
//!
//! Nothing in this module trusts the analytic spectra or normalizations it
//! is asked to check: inner products come from composite quadrature over
//! sampled fields, operator residuals from finite-difference application of
//! the Hamiltonian to sampled eigenfunctions, and reference spectra from
//! direct diagonalization of the discretized operator. Agreement between
//! these and the closed-form results is the evidence the closed forms are
//! implemented correctly.

mod oracle;
mod quadrature;
mod report;
mod residual;

pub use oracle::{
    grid_diagonalize, grid_diagonalize_with, DiagonalizeOptions, OracleSolution, SolverMethod,
};
pub use quadrature::{inner_product, QuadratureGrid};
pub use report::{spectrum_match, SpectrumMatchReport};
pub use residual::{
    hamiltonian_residual, hamiltonian_residual_with_offset, nc_residual_landau,
    nc_residual_symmetric,
};
