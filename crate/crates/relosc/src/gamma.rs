//! Lanczos gamma function, real and complex, for the connection formulas of
//! the hypergeometric module. Internal only.

use num_complex::Complex64;
use std::f64::consts::PI;

// Lanczos coefficients for g = 7, 9 terms (double precision).
const COEFFS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

const SQRT_TWO_PI: f64 = 2.506_628_274_631_000_5;

/// Gamma function of a complex argument. Poles at non-positive integers
/// return non-finite values.
pub(crate) fn gamma(z: Complex64) -> Complex64 {
    if z.re < 0.5 {
        // Reflection: gamma(z) gamma(1 - z) = pi / sin(pi z).
        let s = (PI * z).sin();
        PI / (s * gamma(Complex64::new(1.0, 0.0) - z))
    } else {
        let z = z - 1.0;
        let mut acc = Complex64::new(COEFFS[0], 0.0);
        for (i, &c) in COEFFS.iter().enumerate().skip(1) {
            acc += c / (z + i as f64);
        }
        let t = z + 7.5;
        SQRT_TWO_PI * t.powc(z + 0.5) * (-t).exp() * acc
    }
}

/// Log-gamma for real positive arguments. Only test oracles need it so far.
#[cfg(test)]
pub(crate) fn ln_gamma(x: f64) -> f64 {
    debug_assert!(x > 0.0);
    if x < 0.5 {
        // ln gamma(x) = ln gamma(x + 1) - ln x.
        return ln_gamma(x + 1.0) - x.ln();
    }
    let z = x - 1.0;
    let mut acc = COEFFS[0];
    for (i, &c) in COEFFS.iter().enumerate().skip(1) {
        acc += c / (z + i as f64);
    }
    let t = z + 7.5;
    SQRT_TWO_PI.ln() + (z + 0.5) * t.ln() - t + acc.ln()
}
