//! High-precision reference oracles shared by the integration suites.
//!
//! Everything here is deliberately independent of the production evaluation
//! paths: terminating sums run in exact rational arithmetic (doubles are
//! dyadic rationals, so the inputs convert without loss), and the
//! conjugate-pair reference comes from Taylor continuation of the
//! hypergeometric ODE carried out in 512-fractional-bit fixed point.
//!
//! Each test target compiles its own copy, so not every helper is used by
//! every suite.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact terminating Gauss series: every factor is a rational number, so the
/// sum is computed without rounding and converted to f64 once at the end.
pub fn hyp2f1_terminating_exact(degree: u32, b: f64, c: f64, z: f64) -> f64 {
    let b = rational(b);
    let c = rational(c);
    let z = rational(z);
    let degree_r = BigRational::from_integer(BigInt::from(degree));
    let mut term = BigRational::one();
    let mut sum = BigRational::one();
    for j in 0..degree {
        let jr = BigRational::from_integer(BigInt::from(j));
        term *= (&jr - &degree_r) * (&b + &jr) * &z
            / ((&c + &jr) * (jr + BigRational::one()));
        sum += &term;
    }
    ratio_to_f64(&sum)
}

/// Exact terminating confluent series, same scheme.
pub fn hyp1f1_terminating_exact(degree: u32, c: f64, z: f64) -> f64 {
    let c = rational(c);
    let z = rational(z);
    let degree_r = BigRational::from_integer(BigInt::from(degree));
    let mut term = BigRational::one();
    let mut sum = BigRational::one();
    for j in 0..degree {
        let jr = BigRational::from_integer(BigInt::from(j));
        term *= (&jr - &degree_r) * &z / ((&c + &jr) * (jr + BigRational::one()));
        sum += &term;
    }
    ratio_to_f64(&sum)
}

/// Naive complex-arithmetic direct series for `F(a, conj a; c; z)`,
/// convergent for `|z| < 1`. Returns `(re, im)`.
pub fn hyp2f1_conjugate_direct_c64(a_re: f64, a_im: f64, c: f64, z: f64) -> (f64, f64) {
    let (mut tre, mut tim) = (1.0f64, 0.0f64);
    let (mut sre, mut sim) = (1.0f64, 0.0f64);
    for j in 0..200_000 {
        let j = j as f64;
        // term *= (a + j) (conj a + j) / ((c + j)(j + 1)) * z
        let (pre, pim) = (a_re + j, a_im);
        let (qre, qim) = (a_re + j, -a_im);
        let (mre, mim) = (pre * qre - pim * qim, pre * qim + pim * qre);
        let denom = (c + j) * (j + 1.0);
        let f = z / denom;
        let (nre, nim) = ((tre * mre - tim * mim) * f, (tre * mim + tim * mre) * f);
        tre = nre;
        tim = nim;
        sre += tre;
        sim += tim;
        if j as usize >= 10 && tre.hypot(tim) <= 1e-18 * sre.hypot(sim) {
            break;
        }
    }
    (sre, sim)
}

fn rational(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite input")
}

/// Rational-to-double conversion that survives huge numerators/denominators:
/// scale the quotient to roughly 96 bits, convert, then undo the scaling.
fn ratio_to_f64(r: &BigRational) -> f64 {
    if r.is_zero() {
        return 0.0;
    }
    let sign = if r.is_negative() { -1.0 } else { 1.0 };
    let num = r.numer().abs();
    let den = r.denom().abs();
    let shift = 96i64 - (num.bits() as i64 - den.bits() as i64);
    let scaled = if shift >= 0 {
        num << shift as usize
    } else {
        num >> (-shift) as usize
    };
    let q = (scaled / den).to_f64().expect("fits after scaling");
    sign * q * 2f64.powi(-shift as i32)
}

/// Fixed-point big number with 512 fractional bits: `value = mantissa * 2^-512`.
/// Just enough arithmetic for the ODE continuation below.
#[derive(Clone, Debug)]
pub struct Fx(BigInt);

const FX_BITS: usize = 512;

impl Fx {
    pub fn zero() -> Self {
        Fx(BigInt::zero())
    }

    pub fn one() -> Self {
        Fx(BigInt::one() << FX_BITS)
    }

    pub fn from_f64(x: f64) -> Self {
        let r = rational(x);
        Fx((r.numer() << FX_BITS) / r.denom())
    }

    pub fn from_i64(x: i64) -> Self {
        Fx(BigInt::from(x) << FX_BITS)
    }

    pub fn add(&self, o: &Fx) -> Fx {
        Fx(&self.0 + &o.0)
    }

    pub fn sub(&self, o: &Fx) -> Fx {
        Fx(&self.0 - &o.0)
    }

    pub fn neg(&self) -> Fx {
        Fx(-&self.0)
    }

    pub fn mul(&self, o: &Fx) -> Fx {
        Fx((&self.0 * &o.0) >> FX_BITS)
    }

    pub fn div(&self, o: &Fx) -> Fx {
        Fx((&self.0 << FX_BITS) / &o.0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Approximate binary magnitude; very negative for zero.
    pub fn log2_magnitude(&self) -> i64 {
        if self.0.is_zero() {
            i64::MIN / 2
        } else {
            self.0.bits() as i64 - FX_BITS as i64
        }
    }

    pub fn to_f64(&self) -> f64 {
        if self.0.is_zero() {
            return 0.0;
        }
        let sign = if self.0.is_negative() { -1.0 } else { 1.0 };
        let mag = self.0.abs();
        let bits = mag.bits() as i64;
        let shift = bits - 96;
        let scaled = if shift > 0 { mag >> shift as usize } else { mag };
        let q = scaled.to_f64().expect("96-bit integer");
        sign * q * 2f64.powi((shift - FX_BITS as i64) as i32)
    }
}

/// Reference value of `F(a, conj a; c; z)` for `z <= 0` by Taylor
/// continuation of the hypergeometric ODE
/// `t (1 - t) w'' + (c - (S + 1) t) w' - P w = 0`
/// (`S = 2 Re a`, `P = |a|^2`; both real, so the whole continuation is real).
///
/// Starts from the defining series at `t >= -1/2` and walks the negative real
/// axis in steps bounded by 0.55 of the distance to the singularity at 0.
/// With 512 fractional bits the result is far more accurate than any f64.
pub fn hyp2f1_conjugate_reference(a_re: f64, a_im: f64, c_in: f64, z: f64) -> f64 {
    assert!(z <= 0.0);
    if z == 0.0 {
        return 1.0;
    }
    let s_sum = Fx::from_f64(2.0 * a_re);
    let p_prod = Fx::from_f64(a_re)
        .mul(&Fx::from_f64(a_re))
        .add(&Fx::from_f64(a_im).mul(&Fx::from_f64(a_im)));
    let c = Fx::from_f64(c_in);
    let target = Fx::from_f64(z);

    // Defining series at t1 = max(z, -1/2), with its derivative.
    let t1f = z.max(-0.5);
    let t1 = Fx::from_f64(t1f);
    let (mut w, mut wp) = direct_series_with_derivative(&s_sum, &p_prod, &c, &t1);
    if z >= -0.5 {
        return w.to_f64();
    }

    // Continuation steps.
    let mut t0 = t1;
    let mut t0f = t1f;
    loop {
        let remaining = target.sub(&t0);
        let remaining_f = z - t0f;
        if remaining_f == 0.0 {
            break;
        }
        let max_step = 0.55 * t0f.abs();
        let u = if remaining_f.abs() <= max_step {
            remaining
        } else {
            Fx::from_f64(-max_step)
        };
        let (nw, nwp) = taylor_step(&s_sum, &p_prod, &c, &t0, &w, &wp, &u);
        w = nw;
        wp = nwp;
        t0 = t0.add(&u);
        t0f = t0.to_f64();
        if (z - t0f).abs() <= f64::EPSILON * z.abs() {
            // Solid landing: the final step used the exact remainder.
            break;
        }
    }
    w.to_f64()
}

/// Series `sum c_j t^j` with `c_{j+1}/c_j = ((a_re + j)^2 + a_im^2) / ((c + j)(j + 1))`,
/// plus its derivative, all in fixed point. Converges for `|t| <= 1/2` fast.
fn direct_series_with_derivative(s_sum: &Fx, p_prod: &Fx, c: &Fx, t: &Fx) -> (Fx, Fx) {
    let mut term = Fx::one();
    let mut w = Fx::one();
    let mut wp = Fx::zero();
    for j in 0..4000i64 {
        let jf = Fx::from_i64(j);
        // (a_re + j)^2 + a_im^2 = P + j S + j^2.
        let numer = p_prod
            .add(&jf.mul(s_sum))
            .add(&jf.mul(&jf));
        let denom = c.add(&jf).mul(&Fx::from_i64(j + 1));
        term = term.mul(&numer).mul(t).div(&denom);
        w = w.add(&term);
        // d/dt picks up a factor (j + 1) / t for the term of degree j + 1.
        wp = wp.add(&term.mul(&Fx::from_i64(j + 1)).div(t));
        if j >= 8 && term.log2_magnitude() < w.log2_magnitude() - 260 {
            return (w, wp);
        }
    }
    panic!("reference series did not converge");
}

/// One Taylor step of the ODE from `t0` to `t0 + u`:
/// `a_{k+2} = -[(p1 k + q0)(k+1) a_{k+1} - (k(k-1) + (S+1) k + P) a_k] / (p0 (k+2)(k+1))`
/// with `p0 = t0 (1 - t0)`, `p1 = 1 - 2 t0`, `q0 = c - (S + 1) t0`.
fn taylor_step(
    s_sum: &Fx,
    p_prod: &Fx,
    c: &Fx,
    t0: &Fx,
    w0: &Fx,
    w1: &Fx,
    u: &Fx,
) -> (Fx, Fx) {
    let one = Fx::one();
    let p0 = t0.mul(&one.sub(t0));
    let p1 = one.sub(&t0.mul(&Fx::from_i64(2)));
    let s_plus_1 = s_sum.add(&one);
    let q0 = c.sub(&s_plus_1.mul(t0));

    let mut a_k = w0.clone();
    let mut a_k1 = w1.clone();
    // Accumulators for w(t0+u) and w'(t0+u).
    let mut w = a_k.add(&a_k1.mul(u));
    let mut wp = a_k1.clone();
    let mut u_pow = u.mul(u); // u^{k+2} as we advance
    let mut small_streak = 0;
    for k in 0..3000i64 {
        let kf = Fx::from_i64(k);
        let lead = p1.mul(&kf).add(&q0).mul(&Fx::from_i64(k + 1)).mul(&a_k1);
        let tail = kf
            .mul(&Fx::from_i64(k - 1))
            .add(&s_plus_1.mul(&kf))
            .add(p_prod)
            .mul(&a_k);
        let denom = p0.mul(&Fx::from_i64((k + 2) * (k + 1)));
        let a_k2 = tail.sub(&lead).div(&denom);

        let contribution = a_k2.mul(&u_pow);
        w = w.add(&contribution);
        wp = wp.add(&a_k2.mul(&Fx::from_i64(k + 2)).mul(&u_pow).div(u));

        if contribution.log2_magnitude() < w.log2_magnitude() - 260 {
            small_streak += 1;
        } else {
            small_streak = 0;
        }
        a_k = a_k1;
        a_k1 = a_k2;
        u_pow = u_pow.mul(u);
        if k >= 8 && small_streak >= 3 {
            return (w, wp);
        }
    }
    panic!("Taylor step did not converge");
}

/// Convenience: relative difference against a reference scale.
pub fn rel_err(value: f64, reference: f64) -> f64 {
    (value - reference).abs() / reference.abs().max(f64::MIN_POSITIVE)
}
