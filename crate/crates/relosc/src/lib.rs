//! A one-parameter family of (1+1)-dimensional relativistic oscillator models.
//!
//! A static metric deformed by a real parameter `lambda` confines a massive
//! scalar field. In the conformal frame the stationary Klein-Gordon equation
//! becomes a Schrodinger-type eigenvalue problem whose potential is
//!
//! * a symmetric Poschl-Teller well (`tan^2`) for `lambda < 0`, with a
//!   countable discrete spectrum — the anti-de Sitter oscillator is the
//!   special case `lambda = -1`;
//! * a symmetric Rosen-Morse barrier (`tanh^2`) for `lambda > 0`, with
//!   finitely many bound states below a continuum threshold;
//! * the harmonic `m^2 omega^2 x^2` for `lambda = 0`.
//!
//! The crate provides the closed-form energy levels and hypergeometric
//! eigenfunctions in all three regimes, plus an independent finite-difference
//! eigensolver and quadrature engine used to cross-validate them. Everything
//! works in natural units (`hbar = c = 1`).
//!
//! ```
//! use relosc::{ModelParams, spectra};
//!
//! // The anti-de Sitter case: equidistant levels E_n = omega_hat (k + n).
//! let params = ModelParams::new(1.0, 1.0, -1.0).unwrap();
//! let k = params.shape_k().unwrap().value();
//! let e0 = spectra::pt_level(&params, 0.into()).unwrap();
//! assert!((e0 - k).abs() < 1e-12);
//! ```

pub mod error;
mod gamma;
pub mod geometry;
pub mod hyp2f1;
pub mod model;
pub mod oracle;
pub mod spectra;
pub mod wavefunction;

pub use error::Error;
pub use geometry::Domain;
pub use model::{ModelParams, Regime, ShapeParam};
pub use oracle::{FdConfig, GridFunction, QuadratureResult};
pub use spectra::{LevelIndex, Parity, SpectrumReport};
pub use wavefunction::{BoundState, ScatteringState};

/// Crate-wide result type.
pub type Result<T, E = Error> = std::result::Result<T, E>;
