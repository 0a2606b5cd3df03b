//! Semi-analytical American option pricing engine.
//!
//! The engine prices American options by decomposing the price into its
//! European counterpart plus an early exercise premium, with the exercise
//! boundary obtained from a nonlinear Volterra integral equation of the
//! second kind solved backward in time. Models without a closed-form
//! transition density are handled through their characteristic function
//! via a Fourier-cosine (COS) density reconstruction; jump models add a
//! Levy-integral term to the premium.
//!
//! Module layout:
//! - [`term`]: deterministic parameter curves, discount factors, carry integrals
//! - [`specfun`]: complex log-Gamma, Kummer M, Bessel K1, erfc
//! - [`models`]: characteristic functions and transition densities
//! - [`cos`]: COS reconstruction, European pricing, premium coefficients
//! - [`boundary`]: backward Volterra solver for the exercise boundary
//! - [`pricer`]: decomposition pricing and Greeks
//! - [`jump`]: jump-model premium machinery and the Pade operator shortcut

pub mod boundary;
pub mod cos;
pub mod error;
pub mod grid;
pub mod jump;
pub mod models;
pub mod pricer;
pub mod quad;
pub mod specfun;
pub mod term;

pub use error::EngineError;

/// Crate result alias.
pub type Result<T> = std::result::Result<T, EngineError>;
