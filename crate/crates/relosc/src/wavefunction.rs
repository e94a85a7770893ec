//! Bound and continuum eigenfunctions in the conformal frame, their numeric
//! normalization, and the scalar product.
//!
//! Bound states follow the closed forms
//!
//! * well:    `N cos^k(w_hat xhat) sin^s(w_hat xhat) F(-n_s, k + s + n_s; s + 1/2; sin^2)`,
//! * barrier: `N cosh^{-k'}(w_hat xhat) sinh^s(w_hat xhat) F(-n_s, -k' + s + n_s; s + 1/2; -sinh^2)`,
//! * flat:    `N exp(-m w xhat^2 / 2) xi^s M(-n_s; s + 1/2; xi^2)` with `xi = sqrt(m w) xhat`,
//!
//! all sharing the sign convention that the state is positive at the origin
//! (even channel) or has positive slope there (odd channel). The closed-form
//! normalization constants are not known in elementary form, so `N` is fixed
//! by adaptive quadrature of `|U|^2` over the domain (truncated where the
//! state has decayed below 1e-14 of its scale, for the infinite regimes).
//!
//! Continuum states of the barrier use the conjugate-pair hypergeometric
//! configuration with unit amplitude at the origin (`N_nu = 1`).

use crate::error::Error;
use crate::geometry;
use crate::hyp2f1;
use crate::model::{ModelParams, Regime};
use crate::oracle;
use crate::spectra::{self, LevelIndex, Parity};
use crate::Result;

use std::f64::consts::LN_2;

/// `ln cosh y`, stable for any magnitude.
fn ln_cosh(y: f64) -> f64 {
    let a = y.abs();
    a + (-2.0 * a).exp().ln_1p() - LN_2
}

/// `ln sinh |y|`, for y away from zero.
fn ln_sinh_abs(y: f64) -> f64 {
    let a = y.abs();
    a + (-(-2.0 * a).exp()).ln_1p() - LN_2
}

/// Beyond this value of `w_hat |xhat|` the barrier eigenfunctions switch to a
/// log-space tail form (the polynomial collapses onto its leading term well
/// before that).
const RM_TAIL_Y: f64 = 30.0;

/// Normalized square-integrable eigenfunction of one discrete level.
#[derive(Debug, Clone)]
pub struct BoundState {
    params: ModelParams,
    index: LevelIndex,
    energy: f64,
    /// `k` or `k'`; absent in the flat regime.
    shape: Option<f64>,
    norm: f64,
    /// Half-width of the evaluation/normalization window (the wall position
    /// for the well regime, a decay-based truncation radius otherwise).
    support_radius: f64,
}

/// Unnormalized closed-form value. Assumes `xhat` is inside the domain.
fn eval_raw(params: &ModelParams, index: LevelIndex, shape: Option<f64>, xhat: f64) -> f64 {
    let n_s = index.degree();
    let s = index.parity().exponent();
    let sf = f64::from(s);
    let c = sf + 0.5;
    match params.regime() {
        Regime::PoschlTeller { .. } => {
            let k = shape.expect("well regime carries k");
            let y = params.omega_hat() * xhat;
            let (sy, cy) = y.sin_cos();
            let f = hyp2f1::hyp2f1_terminating(n_s, k + sf + f64::from(n_s), c, sy * sy);
            let odd = if s == 1 { sy } else { 1.0 };
            cy.powf(k) * odd * f
        }
        Regime::RosenMorse => {
            let kp = shape.expect("barrier regime carries k'");
            let b = -kp + sf + f64::from(n_s);
            let y = params.omega_hat() * xhat;
            if y.abs() <= RM_TAIL_Y {
                let sh = y.sinh();
                let f = hyp2f1::hyp2f1_terminating(n_s, b, c, -sh * sh);
                let odd = if s == 1 { sh } else { 1.0 };
                (-kp * ln_cosh(y)).exp() * odd * f
            } else {
                // Leading coefficient of the terminating series.
                let mut c_top = 1.0;
                for j in 0..n_s {
                    let j = f64::from(j);
                    c_top *= (j - f64::from(n_s)) * (b + j) / ((c + j) * (j + 1.0));
                }
                let ls = ln_sinh_abs(y);
                let magnitude =
                    (f64::from(2 * n_s + s) * ls - kp * ln_cosh(y)).exp() * c_top.abs();
                let mut sign = c_top.signum();
                if n_s % 2 == 1 {
                    sign = -sign;
                }
                if y < 0.0 && s == 1 {
                    sign = -sign;
                }
                sign * magnitude
            }
        }
        Regime::Flat => {
            let xi = (params.mass() * params.omega()).sqrt() * xhat;
            let f = hyp2f1::hyp1f1_terminating(n_s, c, xi * xi);
            let odd = if s == 1 { xi } else { 1.0 };
            (-0.5 * xi * xi).exp() * odd * f
        }
    }
}

impl BoundState {
    /// Builds the level-`n` eigenfunction and fixes its normalization by
    /// quadrature of `|U|^2` over the (possibly truncated) domain.
    pub fn normalized(params: &ModelParams, n: u32) -> Result<Self> {
        let index = LevelIndex::new(n);
        let energy = spectra::level(params, index)?;
        let shape = match params.regime() {
            Regime::PoschlTeller { .. } => Some(params.shape_k()?.value()),
            Regime::RosenMorse => Some(params.shape_k_prime()?.value()),
            Regime::Flat => None,
        };
        let support_radius = match params.regime() {
            Regime::PoschlTeller { .. } => geometry::domain(params).hi,
            Regime::RosenMorse => {
                let kp = shape.unwrap();
                let decay = params.omega_hat() * (kp - f64::from(n));
                turning_point(params, energy) + 36.0 / decay
            }
            Regime::Flat => {
                let mw = params.mass() * params.omega();
                turning_point(params, energy) + 8.4 / mw.sqrt()
            }
        };
        let quad = oracle::integrate(
            |x| {
                let u = eval_raw(params, index, shape, x);
                u * u
            },
            -support_radius,
            support_radius,
        );
        if !(quad.value.is_finite() && quad.value > 0.0) {
            return Err(Error::Numerics(format!(
                "normalization integral came out as {}",
                quad.value
            )));
        }
        if !quad.converged && quad.error_estimate > 1e-10 * quad.value {
            return Err(Error::Numerics(format!(
                "normalization quadrature stalled at relative error {:.3e}",
                quad.error_estimate / quad.value
            )));
        }
        Ok(Self {
            params: *params,
            index,
            energy,
            shape,
            norm: 1.0 / quad.value.sqrt(),
            support_radius,
        })
    }

    pub fn params(&self) -> &ModelParams {
        &self.params
    }

    pub fn index(&self) -> LevelIndex {
        self.index
    }

    pub fn energy(&self) -> f64 {
        self.energy
    }

    /// Positive normalization constant `N`.
    pub fn norm(&self) -> f64 {
        self.norm
    }

    pub fn shape(&self) -> Option<f64> {
        self.shape
    }

    pub fn support_radius(&self) -> f64 {
        self.support_radius
    }

    /// Normalized value at `xhat`. Fails outside the well walls.
    pub fn eval(&self, xhat: f64) -> Result<f64> {
        if let Regime::PoschlTeller { .. } = self.params.regime() {
            let d = geometry::domain(&self.params);
            if !d.contains(xhat) {
                return Err(Error::OutOfDomain {
                    x: xhat,
                    lo: d.lo,
                    hi: d.hi,
                });
            }
        }
        Ok(self.norm * eval_raw(&self.params, self.index, self.shape, xhat))
    }

    /// Window on which pointwise checks (residuals, node scans) are reliable:
    /// the classically allowed region plus a few decay lengths, but always
    /// strictly inside the walls for the well regime.
    pub fn residual_window(&self) -> (f64, f64) {
        let w = match self.params.regime() {
            Regime::PoschlTeller { .. } => 0.95 * geometry::domain(&self.params).hi,
            Regime::RosenMorse => {
                let kp = self.shape.unwrap();
                let decay = self.params.omega_hat() * (kp - f64::from(self.index.n()));
                turning_point(&self.params, self.energy) + 3.0 / decay
            }
            Regime::Flat => {
                let mw = self.params.mass() * self.params.omega();
                turning_point(&self.params, self.energy) + 3.0 / mw.sqrt()
            }
        };
        (-w, w)
    }
}

/// Classical turning point `V(x_t) = E^2 - m^2` for the non-well regimes.
fn turning_point(params: &ModelParams, energy: f64) -> f64 {
    let mu = energy * energy - params.mass() * params.mass();
    match params.regime() {
        Regime::RosenMorse => {
            // tanh^2(w_hat x_t) = mu eps^2 / m^2, always < 1 for bound states.
            let ratio = (mu * params.lambda() / (params.mass() * params.mass()))
                .clamp(0.0, 1.0 - 1e-12);
            ratio.sqrt().atanh() / params.omega_hat()
        }
        Regime::Flat => mu.max(0.0).sqrt() / (params.mass() * params.omega()),
        Regime::PoschlTeller { .. } => unreachable!("well states use the wall instead"),
    }
}

/// Scalar product of two bound states of the same model, by adaptive
/// quadrature in the conformal frame (where the weight is 1).
pub fn inner_product(a: &BoundState, b: &BoundState) -> Result<f64> {
    if a.params != b.params {
        return Err(Error::DomainMismatch);
    }
    let radius = a.support_radius.max(b.support_radius);
    let quad = oracle::integrate(
        |x| {
            eval_raw(&a.params, a.index, a.shape, x) * eval_raw(&b.params, b.index, b.shape, x)
        },
        -radius,
        radius,
    );
    Ok(a.norm * b.norm * quad.value)
}

/// Counts interior sign changes on a uniform scan of the state; a correct
/// level-`n` eigenfunction has exactly `n` of them.
pub fn count_nodes(state: &BoundState, grid_points: usize) -> usize {
    assert!(grid_points >= 256, "node scan needs at least 256 points");
    let (lo, hi) = state.residual_window();
    let mut nodes = 0;
    let mut last_sign = 0i8;
    for i in 0..grid_points {
        let x = lo + (i + 1) as f64 * (hi - lo) / (grid_points + 1) as f64;
        let v = eval_raw(&state.params, state.index, state.shape, x);
        let sign = if v == 0.0 {
            0
        } else if v > 0.0 {
            1
        } else {
            -1
        };
        if sign != 0 {
            if last_sign != 0 && sign != last_sign {
                nodes += 1;
            }
            last_sign = sign;
        }
    }
    nodes
}

/// Continuum eigenfunction of a barrier model, parameterized by parity
/// channel and energy at or above the threshold. Amplitude convention:
/// value 1 (even) or unit `sinh` prefactor (odd) at the origin.
#[derive(Debug, Clone)]
pub struct ScatteringState {
    params: ModelParams,
    parity: Parity,
    energy: f64,
    nu: f64,
}

impl ScatteringState {
    pub fn new(params: &ModelParams, parity: Parity, energy: f64) -> Result<Self> {
        let nu = spectra::wavenumber_nu(params, energy)?;
        Ok(Self {
            params: *params,
            parity,
            energy,
            nu,
        })
    }

    pub fn params(&self) -> &ModelParams {
        &self.params
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn energy(&self) -> f64 {
        self.energy
    }

    /// Wavenumber `nu(E)`; zero exactly at the threshold.
    pub fn nu(&self) -> f64 {
        self.nu
    }

    pub fn eval(&self, xhat: f64) -> Result<f64> {
        let kp = self.params.shape_k_prime()?.value();
        let s = self.parity.exponent();
        let sf = f64::from(s);
        let y = self.params.omega_hat() * xhat;
        if y.abs() > 350.0 {
            return Err(Error::Numerics(format!(
                "continuum state evaluation too far out (w_hat xhat = {y})"
            )));
        }
        let sh = y.sinh();
        // The bounded solution pairs the exponents (s - k')/2 +- i nu.
        let f = hyp2f1::hyp2f1_conjugate((sf - kp) / 2.0, self.nu, sf + 0.5, -sh * sh)?;
        let odd = if s == 1 { sh } else { 1.0 };
        let value = (-kp * ln_cosh(y)).exp() * odd * f;
        if value.is_finite() {
            Ok(value)
        } else {
            Err(Error::Numerics(format!(
                "continuum state overflowed at xhat = {xhat}"
            )))
        }
    }
}
