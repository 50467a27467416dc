//! Finite-N distribution of the restricted maximum of non-intersecting
//! Brownian bridges.
//!
//! The library has four layers:
//!
//! * [`orthopoly`] — Hermite and generalized Laguerre polynomials/functions,
//!   the complementary error function, and Gauss-Legendre based quadrature
//!   rules for semi-infinite Gaussian-weighted integrals.
//! * [`kernels`] — the finite matrices (`M`, `Q`, `F`, `S`, `T`, `A` and the
//!   Laguerre kernel reduction) that turn every Fredholm determinant here
//!   into an ordinary finite determinant.
//! * [`fredholm`] — determinants and the CDF evaluators built from them,
//!   plus Kolmogorov-Smirnov utilities.
//! * [`exactcheck`] — zero-tolerance verification of the matrix and
//!   Hermite-polynomial identities in exact rational arithmetic.
//! * [`montecarlo`] — samplers for Hermitian matrix bridges, the
//!   Antisymmetric Gaussian Ensemble and Wishart matrices, used to validate
//!   the determinant formulas empirically.
//!
//! The `bridgemax` binary exposes all of this behind `cdf`, `verify`,
//! `simulate` and `compare` subcommands.

pub mod exactcheck;
pub mod format;
pub mod fredholm;
pub mod kernels;
pub mod montecarlo;
pub mod orthopoly;
pub mod parse;

/// Errors shared across the library.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// An argument fell outside the domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// A configuration value (node counts, grids, sample sizes) is invalid.
    #[error("configuration error: {0}")]
    Config(String),
    /// Matrix shapes or index ranges do not line up.
    #[error("dimension error: {0}")]
    Dimension(String),
    /// The evaluation point sits on a pole of the function.
    #[error("pole: {0}")]
    Pole(String),
    /// Malformed textual input (grid specs, rationals, CSV/JSON payloads).
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
