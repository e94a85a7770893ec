//! Gauss hypergeometric evaluations in the three configurations the
//! eigenfunctions need: terminating polynomials for the bound states, a
//! complex-conjugate parameter pair with real value for the continuum states,
//! and the terminating confluent limit for the flat regime.
//!
//! This is not a general-purpose 2F1: arguments stay on `z <= 0` or inside
//! the polynomial cases, so no branch cuts are ever crossed.

use num_complex::Complex64;

use crate::error::Error;
use crate::gamma::gamma;
use crate::Result;

/// Relative term size at which a convergent series is truncated.
const TERM_EPS: f64 = 1e-16;
/// A series must examine at least this many terms before it may stop, which
/// guards against accidental small early terms.
const MIN_TERMS: usize = 10;
const MAX_TERMS: usize = 500_000;

/// Neumaier-compensated accumulator.
#[derive(Debug, Default, Clone, Copy)]
struct Compensated {
    sum: f64,
    comp: f64,
}

impl Compensated {
    fn new(x: f64) -> Self {
        Self { sum: x, comp: 0.0 }
    }

    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

/// Terminating series `F(-n, b; c; z)`: the exact finite sum of `n + 1`
/// Pochhammer terms. Defined for every real `z`, including `z < -1`.
pub fn hyp2f1_terminating(degree: u32, b: f64, c: f64, z: f64) -> f64 {
    assert!(c > 0.0, "series parameter c must be positive");
    let n = f64::from(degree);
    let mut sum = Compensated::new(1.0);
    let mut term = 1.0;
    for j in 0..degree {
        let j = f64::from(j);
        term *= (j - n) * (b + j) / ((c + j) * (j + 1.0)) * z;
        sum.add(term);
    }
    sum.value()
}

/// Terminating confluent series `M(-n; c; z)`, the harmonic limit of the
/// bound-state polynomials (proportional to a Hermite polynomial in
/// `sqrt(z)`).
pub fn hyp1f1_terminating(degree: u32, c: f64, z: f64) -> f64 {
    assert!(c > 0.0, "series parameter c must be positive");
    let n = f64::from(degree);
    let mut sum = Compensated::new(1.0);
    let mut term = 1.0;
    for j in 0..degree {
        let j = f64::from(j);
        term *= (j - n) / ((c + j) * (j + 1.0)) * z;
        sum.add(term);
    }
    sum.value()
}

/// `F(a, conj(a); c; z)` for `a = a_re + i a_im`, real `c > 0` and `z <= 0`.
/// The value is real; the evaluation strategy depends on how far `z` sits
/// from the origin:
///
/// * `|z| <= 1/2`: the defining series, whose terms are already real;
/// * `1/2 < |z| <= 10`: the Pfaff transform `w = z / (z - 1)` in `[1/3, 10/11]`,
///   recombined through the modulus/phase split of `(1 - z)^{-a}`;
/// * `|z| > 10`: the `1/z` connection formula, whose two terms are complex
///   conjugates of each other (requires `a_im` away from zero; small `a_im`
///   falls back to the Pfaff route).
pub fn hyp2f1_conjugate(a_re: f64, a_im: f64, c: f64, z: f64) -> Result<f64> {
    assert!(c > 0.0, "series parameter c must be positive");
    assert!(z <= 0.0, "conjugate-pair evaluation is restricted to z <= 0");
    let a_im = a_im.abs();
    if z == 0.0 {
        return Ok(1.0);
    }
    let value = if -z <= 0.5 {
        conjugate_direct(a_re, a_im, c, z)?
    } else if -z <= 10.0 || a_im < 0.05 {
        conjugate_pfaff(a_re, a_im, c, z)?
    } else {
        conjugate_large_z(a_re, a_im, c, z)?
    };
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::Numerics(format!(
            "conjugate-pair 2F1 overflowed at z = {z}"
        )))
    }
}

/// Defining series: `(a)_j (conj a)_j` is `|(a)_j|^2`, so every term is real.
fn conjugate_direct(a_re: f64, a_im: f64, c: f64, z: f64) -> Result<f64> {
    let mut sum = Compensated::new(1.0);
    let mut term = 1.0;
    for j in 0..MAX_TERMS {
        let jf = j as f64;
        let num = (a_re + jf) * (a_re + jf) + a_im * a_im;
        term *= num / ((c + jf) * (jf + 1.0)) * z;
        sum.add(term);
        if j + 1 >= MIN_TERMS && term.abs() <= TERM_EPS * sum.value().abs() {
            return Ok(sum.value());
        }
    }
    Err(Error::SeriesDivergence {
        achieved: (term / sum.value()).abs(),
        terms: MAX_TERMS,
    })
}

/// Pfaff transform: `F(a, b; c; z) = (1 - z)^{-a} F(a, c - b; c; z / (z - 1))`.
/// For `b = conj(a)` and `z <= 0` the new argument lies in `[0, 1)` and the
/// prefactor has real modulus `(1 - z)^{-a_re}` and phase `-a_im ln(1 - z)`.
fn conjugate_pfaff(a_re: f64, a_im: f64, c: f64, z: f64) -> Result<f64> {
    let w = z / (z - 1.0);
    let log1mz = (1.0 - z).ln();
    let a = Complex64::new(a_re, a_im);
    let b2 = Complex64::new(c - a_re, a_im);
    let mut re = Compensated::new(1.0);
    let mut im = Compensated::new(0.0);
    let mut term = Complex64::new(1.0, 0.0);
    let mut norm = f64::INFINITY;
    for j in 0..MAX_TERMS {
        let jf = j as f64;
        term *= (a + jf) * (b2 + jf) / ((c + jf) * (jf + 1.0)) * w;
        re.add(term.re);
        im.add(term.im);
        norm = re.value().hypot(im.value());
        if j + 1 >= MIN_TERMS && term.norm() <= TERM_EPS * norm {
            let phase = a_im * log1mz;
            return Ok((-a_re * log1mz).exp()
                * (phase.cos() * re.value() + phase.sin() * im.value()));
        }
    }
    Err(Error::SeriesDivergence {
        achieved: term.norm() / norm,
        terms: MAX_TERMS,
    })
}

/// Connection formula at large `|z|`:
/// `F(a, b; c; z) = G (-z)^{-a} F(a, a - c + 1; a - b + 1; 1/z) + (a <-> b)`
/// with `G = gamma(c) gamma(b - a) / (gamma(b) gamma(c - a))`. For
/// `b = conj(a)` and real `c`, `z` the two terms are conjugate, so the value
/// is twice the real part of the first.
fn conjugate_large_z(a_re: f64, a_im: f64, c: f64, z: f64) -> Result<f64> {
    debug_assert!(z < -1.0);
    let a = Complex64::new(a_re, a_im);
    let a_conj = a.conj();
    let cc = Complex64::new(c, 0.0);
    let prefactor = gamma(cc) * gamma(a_conj - a) / (gamma(a_conj) * gamma(cc - a));

    // (-z)^{-a} with -z > 1 real.
    let log_mz = (-z).ln();
    let power = Complex64::from_polar((-a_re * log_mz).exp(), -a_im * log_mz);

    let x = 1.0 / z;
    let p = a;
    let q = a - c + 1.0;
    let r = a - a_conj + 1.0;
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    for j in 0..MAX_TERMS {
        let jf = j as f64;
        term *= (p + jf) * (q + jf) / ((r + jf) * (jf + 1.0)) * x;
        sum += term;
        if j + 1 >= MIN_TERMS && term.norm() <= TERM_EPS * sum.norm() {
            return Ok(2.0 * (prefactor * power * sum).re);
        }
    }
    Err(Error::SeriesDivergence {
        achieved: term.norm() / sum.norm(),
        terms: MAX_TERMS,
    })
}
