//! Independent numerical verification machinery: a finite-difference
//! eigensolver for the conformal-frame operator, an adaptive quadrature
//! engine, and a pointwise ODE-residual evaluator.
//!
//! Nothing here knows the closed-form spectra or eigenfunctions; agreement
//! between the two routes is what the validation suites check.

mod quadrature;
mod tridiag;

pub use quadrature::{integrate, integrate_fixed, integrate_with, QuadratureResult};
pub use tridiag::{eigenvector, lowest_eigenvalues, sturm_count};

use crate::error::Error;
use crate::geometry;
use crate::model::{ModelParams, Regime};
use crate::spectra;
use crate::Result;

/// Function sampled on a uniform grid, endpoints included.
#[derive(Debug, Clone)]
pub struct GridFunction {
    lo: f64,
    hi: f64,
    values: Vec<f64>,
}

impl GridFunction {
    pub fn new(lo: f64, hi: f64, values: Vec<f64>) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(Error::InvalidParams(format!(
                "grid interval [{lo}, {hi}] is not finite and increasing"
            )));
        }
        if values.len() < 3 {
            return Err(Error::InvalidParams(
                "a grid function needs at least 3 samples".into(),
            ));
        }
        Ok(Self { lo, hi, values })
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn step(&self) -> f64 {
        (self.hi - self.lo) / (self.values.len() - 1) as f64
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn position(&self, i: usize) -> f64 {
        self.lo + i as f64 * self.step()
    }

    /// Linear interpolation; clamps outside the grid.
    pub fn value_at(&self, x: f64) -> f64 {
        let t = (x - self.lo) / self.step();
        if t <= 0.0 {
            return self.values[0];
        }
        let i = t.floor() as usize;
        if i + 1 >= self.values.len() {
            return *self.values.last().unwrap();
        }
        let frac = t - i as f64;
        self.values[i] * (1.0 - frac) + self.values[i + 1] * frac
    }

    /// Trapezoidal scalar product; both functions must share the grid.
    pub fn inner_product(&self, other: &GridFunction) -> Result<f64> {
        if self.lo != other.lo || self.hi != other.hi || self.len() != other.len() {
            return Err(Error::DomainMismatch);
        }
        let mut sum = 0.0;
        for (i, (a, b)) in self.values.iter().zip(&other.values).enumerate() {
            let w = if i == 0 || i + 1 == self.len() { 0.5 } else { 1.0 };
            sum += w * a * b;
        }
        Ok(sum * self.step())
    }

    pub fn l2_norm(&self) -> f64 {
        self.inner_product(self).expect("same grid").sqrt()
    }
}

/// Configuration of the finite-difference eigensolve. The two grid sizes
/// (points including both endpoints) feed one Richardson step assuming the
/// leading error is quadratic in the spacing.
#[derive(Debug, Clone, Copy)]
pub struct FdConfig {
    pub coarse_points: usize,
    pub fine_points: usize,
    /// How many of the lowest eigenvalues to extract.
    pub count: usize,
    /// Dirichlet-box half-width override for the infinite-domain regimes.
    pub box_radius: Option<f64>,
}

impl Default for FdConfig {
    fn default() -> Self {
        Self {
            coarse_points: 2049,
            fine_points: 4097,
            count: 4,
            box_radius: None,
        }
    }
}

impl FdConfig {
    fn validate(&self) -> Result<()> {
        if self.coarse_points < 3 || self.fine_points <= self.coarse_points {
            return Err(Error::InvalidParams(format!(
                "grid sizes must be >= 3 and strictly increasing, got {} and {}",
                self.coarse_points, self.fine_points
            )));
        }
        if self.count == 0 {
            return Err(Error::InvalidParams("count must be at least 1".into()));
        }
        Ok(())
    }
}

/// Dirichlet window for the discretized operator. The trigonometric well uses
/// its own walls; the infinite-domain regimes are truncated where both the
/// potential has saturated and the target state's envelope is negligible.
fn solver_window(params: &ModelParams, top_index: u32, radius: Option<f64>) -> Result<(f64, f64)> {
    match params.regime() {
        Regime::PoschlTeller { .. } => {
            let d = geometry::domain(params);
            Ok((d.lo, d.hi))
        }
        Regime::RosenMorse => {
            let r = match radius {
                Some(r) => r,
                None => {
                    let kp = params.shape_k_prime()?.value();
                    let decay = params.omega_hat() * (kp - f64::from(top_index));
                    // sech^2 < 1e-12 beyond y = ln(2e6); envelope below 1e-10
                    // needs kappa x > ln(1e10).
                    let y_flat = (2e6f64).ln();
                    let x_env = (1e10f64).ln() / decay;
                    (y_flat / params.omega_hat()).max(x_env)
                }
            };
            Ok((-r, r))
        }
        Regime::Flat => {
            let r = radius.unwrap_or_else(|| {
                let mw = params.mass() * params.omega();
                let turning = ((2.0 * f64::from(top_index) + 1.0) / mw).sqrt();
                turning + (2.0 * (1e10f64).ln() / mw).sqrt()
            });
            Ok((-r, r))
        }
    }
}

/// Assembles the 3-point discretization of `-d^2/dxhat^2 + V` on the interior
/// of `[lo, hi]` with Dirichlet boundaries.
fn assemble(
    params: &ModelParams,
    lo: f64,
    hi: f64,
    n_points: usize,
) -> Result<(Vec<f64>, Vec<f64>, f64)> {
    let h = (hi - lo) / (n_points - 1) as f64;
    let dim = n_points - 2;
    let inv_h2 = 1.0 / (h * h);
    let mut diag = Vec::with_capacity(dim);
    for i in 1..n_points - 1 {
        let x = lo + i as f64 * h;
        diag.push(2.0 * inv_h2 + geometry::potential(params, x)?);
    }
    let off = vec![-inv_h2; dim - 1];
    Ok((diag, off, h))
}

fn lowest_mu(
    params: &ModelParams,
    lo: f64,
    hi: f64,
    n_points: usize,
    count: usize,
) -> Result<Vec<f64>> {
    let (diag, off, _) = assemble(params, lo, hi, n_points)?;
    if count > diag.len() {
        return Err(Error::InvalidParams(format!(
            "grid of {} interior points cannot produce {count} eigenvalues",
            diag.len()
        )));
    }
    Ok(lowest_eigenvalues(&diag, &off, count))
}

/// Lowest `cfg.count` energies of the discretized Klein-Gordon operator,
/// Richardson-extrapolated across the two grids: `E_n = sqrt(m^2 + mu_n)`
/// where `mu_n` are eigenvalues of `-d^2/dxhat^2 + V`.
///
/// For barrier models the request must not exceed the bound-state count.
pub fn fd_eigenvalues(params: &ModelParams, cfg: &FdConfig) -> Result<Vec<f64>> {
    cfg.validate()?;
    if params.regime() == Regime::RosenMorse {
        let nm = spectra::n_max(params)?;
        if cfg.count as u64 > nm.saturating_add(1) {
            return Err(Error::NoSuchLevel {
                n: (cfg.count - 1) as u32,
                n_max: nm,
            });
        }
    }
    let (lo, hi) = solver_window(params, cfg.count as u32 - 1, cfg.box_radius)?;
    let coarse = lowest_mu(params, lo, hi, cfg.coarse_points, cfg.count)?;
    let fine = lowest_mu(params, lo, hi, cfg.fine_points, cfg.count)?;
    let hc = (hi - lo) / (cfg.coarse_points - 1) as f64;
    let hf = (hi - lo) / (cfg.fine_points - 1) as f64;
    let r2 = (hc / hf) * (hc / hf);
    let m2 = params.mass() * params.mass();
    coarse
        .iter()
        .zip(&fine)
        .map(|(mu_c, mu_f)| {
            let mu = (r2 * mu_f - mu_c) / (r2 - 1.0);
            let e2 = m2 + mu;
            if e2 < 0.0 {
                Err(Error::Numerics(format!(
                    "extrapolated squared energy {e2} is negative"
                )))
            } else {
                Ok(e2.sqrt())
            }
        })
        .collect()
}

/// Single-grid eigenvalues without extrapolation, used for convergence-order
/// checks.
pub fn fd_eigenvalues_single(
    params: &ModelParams,
    n_points: usize,
    count: usize,
    box_radius: Option<f64>,
) -> Result<Vec<f64>> {
    let (lo, hi) = solver_window(params, count as u32 - 1, box_radius)?;
    let m2 = params.mass() * params.mass();
    Ok(lowest_mu(params, lo, hi, n_points, count)?
        .into_iter()
        .map(|mu| (m2 + mu).sqrt())
        .collect())
}

/// Energy and grid eigenfunction of the `index`-th level on a single grid,
/// normalized to unit L2 norm (trapezoidal), with zero boundary values.
pub fn fd_eigenfunction(
    params: &ModelParams,
    n_points: usize,
    index: usize,
    box_radius: Option<f64>,
) -> Result<(f64, GridFunction)> {
    let (lo, hi) = solver_window(params, index as u32, box_radius)?;
    let (diag, off, _h) = assemble(params, lo, hi, n_points)?;
    let mu = *lowest_eigenvalues(&diag, &off, index + 1)
        .last()
        .expect("count >= 1");
    let interior = eigenvector(&diag, &off, mu);
    let mut values = Vec::with_capacity(n_points);
    values.push(0.0);
    values.extend_from_slice(&interior);
    values.push(0.0);
    let mut gf = GridFunction::new(lo, hi, values)?;
    let norm = gf.l2_norm();
    for v in gf.values.iter_mut() {
        *v /= norm;
    }
    let energy = (params.mass() * params.mass() + mu).sqrt();
    Ok((energy, gf))
}

/// Number of discrete eigenvalues below the continuum threshold of a barrier
/// model, straight from the Sturm count — no bisection needed.
pub fn fd_bound_count(
    params: &ModelParams,
    n_points: usize,
    box_radius: Option<f64>,
) -> Result<usize> {
    let nm = spectra::n_max(params)?;
    let (lo, hi) = solver_window(params, nm.min(u64::from(u32::MAX)) as u32, box_radius)?;
    let (diag, off, _) = assemble(params, lo, hi, n_points)?;
    // mu at threshold is m^2 / eps^2, the barrier height.
    let mu_thr = params.mass() * params.mass() / params.lambda();
    Ok(sturm_count(&diag, &off, mu_thr))
}

/// Worst relative Klein-Gordon residual `|-u'' + V u - (E^2 - m^2) u|`,
/// normalized by `max |u|`, over `samples` points uniformly placed strictly
/// inside `[lo, hi]`. The second derivative uses the 5-point stencil with
/// step `1e-4 (hi - lo)`; the window must keep the stencil inside the domain.
pub fn ode_residual<F: Fn(f64) -> f64>(
    params: &ModelParams,
    energy: f64,
    u: F,
    lo: f64,
    hi: f64,
    samples: usize,
) -> Result<f64> {
    assert!(samples >= 2);
    let h = 1e-4 * (hi - lo);
    let mu = energy * energy - params.mass() * params.mass();
    let mut worst = 0.0f64;
    let mut scale = 0.0f64;
    for i in 0..samples {
        let x = lo + (i + 1) as f64 * (hi - lo) / (samples + 1) as f64;
        let v = geometry::potential(params, x)?;
        let u0 = u(x);
        let second = (-u(x - 2.0 * h) + 16.0 * u(x - h) - 30.0 * u0 + 16.0 * u(x + h)
            - u(x + 2.0 * h))
            / (12.0 * h * h);
        worst = worst.max((-second + v * u0 - mu * u0).abs());
        scale = scale.max(u0.abs());
    }
    if scale == 0.0 {
        return Err(Error::Numerics(
            "state vanishes at every sample point".into(),
        ));
    }
    Ok(worst / scale)
}
