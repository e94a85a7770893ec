//! Error type shared by every module of the crate.

use thiserror::Error;

/// Everything that can go wrong when driving the model family.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Model parameters violate their invariants (`m > 0`, `omega > 0`, finite `lambda`).
    #[error("invalid model parameters: {0}")]
    InvalidParams(String),

    /// An operation was called in a regime it is not defined for.
    #[error("operation requires the {required} regime, but lambda = {lambda}")]
    RegimeMismatch {
        required: &'static str,
        lambda: f64,
    },

    /// A coordinate lies outside the domain of the model (beyond the event
    /// horizon in the original frame, or outside the well in the conformal one).
    #[error("position {x} lies outside the domain ({lo}, {hi})")]
    OutOfDomain { x: f64, lo: f64, hi: f64 },

    /// A discrete level beyond the last bound state was requested.
    #[error("no bound level n = {n}: the highest bound level is n_max = {n_max}")]
    NoSuchLevel { n: u32, n_max: u64 },

    /// A continuum-state energy below the threshold was supplied.
    #[error("energy {energy} lies below the continuum threshold {threshold}")]
    BelowThreshold { energy: f64, threshold: f64 },

    /// A series evaluation ran out of its term budget.
    #[error("series did not converge: relative term size {achieved:.3e} after {terms} terms")]
    SeriesDivergence { achieved: f64, terms: usize },

    /// Two states that must share a domain and parameters do not.
    #[error("states are defined with different parameters or domains")]
    DomainMismatch,

    /// A solver or evaluation failed numerically.
    #[error("numerical failure: {0}")]
    Numerics(String),
}
