//! Metric components, the conformal coordinate change, and the conformal-frame
//! potentials.
//!
//! The line element of the family is
//! `ds^2 = F(x) dt^2 - F(x) / (1 + lambda w^2 x^2) dx^2` with
//! `F(x) = (1 + (1 + lambda) w^2 x^2) / (1 + lambda w^2 x^2)`. The coordinate
//! `xhat = integral of mu(x) dx` (with `xhat(0) = 0`) brings it to a conformal
//! multiple of the flat metric, where the scalar-product weight is 1 and the
//! stationary Klein-Gordon equation turns into a Schrodinger-type problem.

use std::f64::consts::FRAC_PI_2;

use crate::error::Error;
use crate::model::{ModelParams, Regime};
use crate::Result;

/// Interval of conformal coordinates on which the model lives. Open at finite
/// endpoints (the trigonometric well walls are metric singularities).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Domain {
    pub lo: f64,
    pub hi: f64,
}

impl Domain {
    pub fn contains(&self, xhat: f64) -> bool {
        xhat > self.lo && xhat < self.hi
    }

    pub fn is_finite(&self) -> bool {
        self.lo.is_finite() && self.hi.is_finite()
    }

    /// Half-width of a finite domain; infinite otherwise.
    pub fn half_width(&self) -> f64 {
        0.5 * (self.hi - self.lo)
    }
}

/// Domain of the conformal coordinate: `(-pi / 2 w_hat, pi / 2 w_hat)` for the
/// trigonometric well, the whole line otherwise.
pub fn domain(params: &ModelParams) -> Domain {
    match params.regime() {
        Regime::PoschlTeller { .. } => {
            let wall = FRAC_PI_2 / params.omega_hat();
            Domain {
                lo: -wall,
                hi: wall,
            }
        }
        _ => Domain {
            lo: f64::NEG_INFINITY,
            hi: f64::INFINITY,
        },
    }
}

/// `1 + lambda w^2 x^2`, checking the horizon condition for `lambda < 0`.
fn horizon_factor(params: &ModelParams, x: f64) -> Result<f64> {
    let wx = params.omega() * x;
    let den = 1.0 + params.lambda() * wx * wx;
    if den <= 0.0 {
        let horizon = 1.0 / params.omega_hat();
        return Err(Error::OutOfDomain {
            x,
            lo: -horizon,
            hi: horizon,
        });
    }
    Ok(den)
}

/// Metric components `(g00, g11)` at position `x` in the original frame.
pub fn metric_components(params: &ModelParams, x: f64) -> Result<(f64, f64)> {
    let den = horizon_factor(params, x)?;
    let wx = params.omega() * x;
    let num = 1.0 + (1.0 + params.lambda()) * wx * wx;
    Ok((num / den, -num / (den * den)))
}

/// Scalar-product weight `mu(x) = sqrt(-g) g^00 = 1 / sqrt(1 + lambda w^2 x^2)`.
pub fn weight_mu(params: &ModelParams, x: f64) -> Result<f64> {
    Ok(1.0 / horizon_factor(params, x)?.sqrt())
}

/// Maps the original coordinate to the conformal one, with `xhat(0) = 0`:
/// `arcsin(w_hat x) / w_hat` in the well, `asinh(w_hat x) / w_hat` for the
/// barrier, the identity in the flat limit.
pub fn to_conformal(params: &ModelParams, x: f64) -> Result<f64> {
    let wh = params.omega_hat();
    match params.regime() {
        Regime::PoschlTeller { .. } => {
            let u = wh * x;
            if u.abs() > 1.0 {
                let horizon = 1.0 / wh;
                return Err(Error::OutOfDomain {
                    x,
                    lo: -horizon,
                    hi: horizon,
                });
            }
            Ok(u.asin() / wh)
        }
        Regime::RosenMorse => Ok((wh * x).asinh() / wh),
        Regime::Flat => Ok(x),
    }
}

/// Exact inverse of [`to_conformal`].
pub fn from_conformal(params: &ModelParams, xhat: f64) -> Result<f64> {
    let wh = params.omega_hat();
    match params.regime() {
        Regime::PoschlTeller { .. } => {
            let u = wh * xhat;
            if u.abs() >= FRAC_PI_2 {
                let d = domain(params);
                return Err(Error::OutOfDomain {
                    x: xhat,
                    lo: d.lo,
                    hi: d.hi,
                });
            }
            Ok(u.sin() / wh)
        }
        Regime::RosenMorse => Ok((wh * xhat).sinh() / wh),
        Regime::Flat => Ok(xhat),
    }
}

/// Conformal-frame potential of the stationary Klein-Gordon problem,
/// in units of energy squared:
/// `(m^2 / eps^2) tan^2 (w_hat xhat)` in the well,
/// `(m^2 / eps^2) tanh^2 (w_hat xhat)` for the barrier,
/// `m^2 w^2 xhat^2` in the flat limit.
pub fn potential(params: &ModelParams, xhat: f64) -> Result<f64> {
    let m = params.mass();
    match params.regime() {
        Regime::PoschlTeller { .. } => {
            let u = params.omega_hat() * xhat;
            if u.abs() >= FRAC_PI_2 {
                let d = domain(params);
                return Err(Error::OutOfDomain {
                    x: xhat,
                    lo: d.lo,
                    hi: d.hi,
                });
            }
            let t = u.tan();
            Ok(m * m / params.lambda().abs() * t * t)
        }
        Regime::RosenMorse => {
            let t = (params.omega_hat() * xhat).tanh();
            Ok(m * m / params.lambda() * t * t)
        }
        Regime::Flat => {
            let mwx = m * params.omega() * xhat;
            Ok(mwx * mwx)
        }
    }
}

/// Conformal factor of the line element, `1 + V(xhat) / m^2`.
pub fn conformal_factor(params: &ModelParams, xhat: f64) -> Result<f64> {
    Ok(1.0 + potential(params, xhat)? / (params.mass() * params.mass()))
}
