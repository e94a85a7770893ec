//! Model parameters, regime classification, and the well-shape parameters.

use crate::error::Error;
use crate::Result;

/// Which member of the metric family a given `lambda` selects.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// `lambda < 0`: trigonometric well with a countable discrete spectrum.
    /// `rho` is true exactly for `lambda = -1`, the anti-de Sitter
    /// relativistic harmonic oscillator with equidistant levels.
    PoschlTeller { rho: bool },
    /// `lambda > 0`: hyperbolic barrier with a finite discrete spectrum plus
    /// a continuum.
    RosenMorse,
    /// `lambda = 0`: harmonic potential, the common limit of the family.
    Flat,
}

impl Regime {
    /// Short lowercase label, used in CLI output.
    pub fn label(&self) -> &'static str {
        match self {
            Regime::PoschlTeller { .. } => "poschl-teller",
            Regime::RosenMorse => "rosen-morse",
            Regime::Flat => "flat",
        }
    }

    pub fn is_rho(&self) -> bool {
        matches!(self, Regime::PoschlTeller { rho: true })
    }
}

impl std::fmt::Display for Regime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

/// Positive root of the well-depth quadratic: `k (k - 1) = (m / eps w_hat)^2`
/// in the trigonometric regime, `k' (k' + 1) = (m / eps w_hat)^2` in the
/// hyperbolic one.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShapeParam(f64);

impl ShapeParam {
    pub fn value(&self) -> f64 {
        self.0
    }
}

/// Mass, frequency, and deformation of one member of the oscillator family,
/// in natural units (`hbar = c = 1`).
///
/// `epsilon = sqrt(|lambda|)` and `omega_hat = epsilon * omega` are always
/// derived on the fly so the struct cannot hold inconsistent values.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    mass: f64,
    omega: f64,
    lambda: f64,
}

impl ModelParams {
    /// Requires `mass > 0`, `omega > 0` and finite `lambda`.
    pub fn new(mass: f64, omega: f64, lambda: f64) -> Result<Self> {
        if !(mass.is_finite() && mass > 0.0) {
            return Err(Error::InvalidParams(format!(
                "mass must be finite and positive, got {mass}"
            )));
        }
        if !(omega.is_finite() && omega > 0.0) {
            return Err(Error::InvalidParams(format!(
                "omega must be finite and positive, got {omega}"
            )));
        }
        if !lambda.is_finite() {
            return Err(Error::InvalidParams(format!(
                "lambda must be finite, got {lambda}"
            )));
        }
        Ok(Self {
            mass,
            omega,
            lambda,
        })
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// Deformation strength `epsilon = sqrt(|lambda|)`.
    pub fn epsilon(&self) -> f64 {
        self.lambda.abs().sqrt()
    }

    /// Effective frequency `omega_hat = epsilon * omega` of the conformal frame.
    pub fn omega_hat(&self) -> f64 {
        self.epsilon() * self.omega
    }

    /// Classifies by the sign of `lambda`; `lambda = -1` is flagged exactly.
    pub fn regime(&self) -> Regime {
        if self.lambda < 0.0 {
            Regime::PoschlTeller {
                rho: self.lambda == -1.0,
            }
        } else if self.lambda > 0.0 {
            Regime::RosenMorse
        } else {
            Regime::Flat
        }
    }

    /// `m^2 / (eps^2 w_hat^2)`, the right-hand side of both shape quadratics.
    /// Equal to `(m / (lambda omega))^2`, which avoids squaring a square root.
    fn shape_rhs(&self) -> f64 {
        let q = self.mass / (self.lambda * self.omega);
        q * q
    }

    /// Well-depth parameter of the trigonometric regime:
    /// `k = (1 + sqrt(1 + 4 m^2 / (eps^2 w_hat^2))) / 2 > 1`.
    pub fn shape_k(&self) -> Result<ShapeParam> {
        if self.lambda >= 0.0 {
            return Err(Error::RegimeMismatch {
                required: "poschl-teller",
                lambda: self.lambda,
            });
        }
        let r = self.shape_rhs();
        Ok(ShapeParam(0.5 * (1.0 + (1.0 + 4.0 * r).sqrt())))
    }

    /// Barrier parameter of the hyperbolic regime: the positive root of
    /// `k' (k' + 1) = m^2 / (eps^2 w_hat^2)`, written in the cancellation-free
    /// form `2 r / (1 + sqrt(1 + 4 r))`.
    pub fn shape_k_prime(&self) -> Result<ShapeParam> {
        if self.lambda <= 0.0 {
            return Err(Error::RegimeMismatch {
                required: "rosen-morse",
                lambda: self.lambda,
            });
        }
        let r = self.shape_rhs();
        Ok(ShapeParam(2.0 * r / (1.0 + (1.0 + 4.0 * r).sqrt())))
    }
}
