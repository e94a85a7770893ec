//! Closed-form energy spectra for the three regimes, discrete-level counting,
//! and the continuum threshold of the barrier models.
//!
//! Every function returns the positive-frequency branch, i.e. the positive
//! root of the squared-energy formulas.

use crate::error::Error;
use crate::model::{ModelParams, Regime};
use crate::Result;

/// Parity channel of a state: even (`s = 0`) or odd (`s = 1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    /// The exponent `s` of the odd prefactor in the eigenfunctions.
    pub fn exponent(&self) -> u32 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }
}

/// Main quantum number `n = 2 n_s + s`, combining the degree `n_s` of the
/// terminating hypergeometric polynomial with the parity channel `s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct LevelIndex(u32);

impl LevelIndex {
    pub fn new(n: u32) -> Self {
        Self(n)
    }

    pub fn n(&self) -> u32 {
        self.0
    }

    /// Degree `n_s = floor(n / 2)` of the polynomial factor.
    pub fn degree(&self) -> u32 {
        self.0 / 2
    }

    pub fn parity(&self) -> Parity {
        if self.0.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl From<u32> for LevelIndex {
    fn from(n: u32) -> Self {
        Self(n)
    }
}

/// Discrete level of the trigonometric well:
/// `E_n^2 = m^2 + w_hat^2 [2 k (n + 1/2) + n^2]`.
///
/// At `lambda = -1` this reduces algebraically to the equidistant ladder
/// `E_n = w_hat (k + n)`; no separate branch is needed.
pub fn pt_level(params: &ModelParams, n: LevelIndex) -> Result<f64> {
    let k = params.shape_k()?.value();
    let wh = params.omega_hat();
    let nf = f64::from(n.n());
    let m = params.mass();
    Ok((m * m + wh * wh * (2.0 * k * (nf + 0.5) + nf * nf)).sqrt())
}

/// Discrete level of the hyperbolic barrier:
/// `E_n^2 = m^2 + w_hat^2 [2 k' (n + 1/2) - n^2]`, defined for `n <= n_max`.
pub fn rm_level(params: &ModelParams, n: LevelIndex) -> Result<f64> {
    let kp = params.shape_k_prime()?.value();
    let nm = n_max_from_shape(kp);
    if u64::from(n.n()) > nm {
        return Err(Error::NoSuchLevel { n: n.n(), n_max: nm });
    }
    let wh = params.omega_hat();
    let nf = f64::from(n.n());
    let m = params.mass();
    Ok((m * m + wh * wh * (2.0 * kp * (nf + 0.5) - nf * nf)).sqrt())
}

/// Largest integer strictly below `k'`. `ceil(k') - 1` handles both the
/// generic case (`= floor(k')`) and integer `k'` (`= k' - 1`).
pub(crate) fn n_max_from_shape(k_prime: f64) -> u64 {
    debug_assert!(k_prime > 0.0);
    (k_prime.ceil() - 1.0).max(0.0) as u64
}

/// Index of the highest bound state of a barrier model. Always at least 0:
/// `k' > 0` for any positive mass, so the ground state exists.
pub fn n_max(params: &ModelParams) -> Result<u64> {
    Ok(n_max_from_shape(params.shape_k_prime()?.value()))
}

/// Bottom of the continuous spectrum of a barrier model,
/// `m sqrt(1 + 1 / eps^2)`. Well and flat models have no continuum.
pub fn continuum_threshold(params: &ModelParams) -> Result<f64> {
    if params.lambda() <= 0.0 {
        return Err(Error::RegimeMismatch {
            required: "rosen-morse",
            lambda: params.lambda(),
        });
    }
    Ok(params.mass() * (1.0 + 1.0 / params.lambda()).sqrt())
}

/// Wavenumber `nu(E) = sqrt(E^2 - m^2 (1 + 1/eps^2)) / (2 w_hat)` of a
/// continuum state. The radicand is computed as `(E - thr)(E + thr)` so that
/// `nu(threshold)` is exactly zero.
pub fn wavenumber_nu(params: &ModelParams, energy: f64) -> Result<f64> {
    let thr = continuum_threshold(params)?;
    if energy < thr {
        return Err(Error::BelowThreshold {
            energy,
            threshold: thr,
        });
    }
    Ok(((energy - thr) * (energy + thr)).sqrt() / (2.0 * params.omega_hat()))
}

/// Level of the flat member of the family:
/// `E_n^2 = m^2 + 2 m w (n + 1/2)`, the relativistic dispersion on top of the
/// non-relativistic harmonic ladder.
pub fn flat_level(params: &ModelParams, n: LevelIndex) -> Result<f64> {
    if params.lambda() != 0.0 {
        return Err(Error::RegimeMismatch {
            required: "flat",
            lambda: params.lambda(),
        });
    }
    let m = params.mass();
    let nf = f64::from(n.n());
    Ok((m * m + 2.0 * m * params.omega() * (nf + 0.5)).sqrt())
}

/// Discrete level in whichever regime `params` selects.
pub fn level(params: &ModelParams, n: LevelIndex) -> Result<f64> {
    match params.regime() {
        Regime::PoschlTeller { .. } => pt_level(params, n),
        Regime::RosenMorse => rm_level(params, n),
        Regime::Flat => flat_level(params, n),
    }
}

/// Spectrum summary assembled for reporting: levels, shape parameter, and the
/// continuum data when the regime has one.
#[derive(Debug, Clone)]
pub struct SpectrumReport {
    pub regime: Regime,
    /// `k` (well) or `k'` (barrier); absent in the flat limit.
    pub shape: Option<f64>,
    /// `(n, E_n)` pairs, in increasing `n`.
    pub levels: Vec<(u32, f64)>,
    /// Bottom of the continuum for barrier models.
    pub threshold: Option<f64>,
    /// Highest bound index for barrier models.
    pub n_max: Option<u64>,
}

/// Collects up to `max_levels` levels: the well and flat spectra are countable
/// and get exactly `max_levels` entries, the barrier spectrum stops at its
/// highest bound state.
pub fn spectrum_report(params: &ModelParams, max_levels: u32) -> Result<SpectrumReport> {
    let regime = params.regime();
    match regime {
        Regime::PoschlTeller { .. } => {
            let levels = (0..max_levels)
                .map(|n| Ok((n, pt_level(params, n.into())?)))
                .collect::<Result<_>>()?;
            Ok(SpectrumReport {
                regime,
                shape: Some(params.shape_k()?.value()),
                levels,
                threshold: None,
                n_max: None,
            })
        }
        Regime::RosenMorse => {
            let nm = n_max(params)?;
            let count = u64::from(max_levels).min(nm.saturating_add(1));
            let levels = (0..count)
                .map(|n| Ok((n as u32, rm_level(params, (n as u32).into())?)))
                .collect::<Result<_>>()?;
            Ok(SpectrumReport {
                regime,
                shape: Some(params.shape_k_prime()?.value()),
                levels,
                threshold: Some(continuum_threshold(params)?),
                n_max: Some(nm),
            })
        }
        Regime::Flat => {
            let levels = (0..max_levels)
                .map(|n| Ok((n, flat_level(params, n.into())?)))
                .collect::<Result<_>>()?;
            Ok(SpectrumReport {
                regime,
                shape: None,
                levels,
                threshold: None,
                n_max: None,
            })
        }
    }
}
