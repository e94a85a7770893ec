//! Symmetric tridiagonal eigensolver: Sturm-sequence bisection for
//! eigenvalues, inverse iteration for eigenvectors. Deterministic by
//! construction — no iteration-order or threading nondeterminism.

/// Number of eigenvalues strictly below `x`, via the signs of the LDL^T
/// pivots (Sturm sequence).
pub fn sturm_count(diag: &[f64], off: &[f64], x: f64) -> usize {
    let n = diag.len();
    debug_assert_eq!(off.len() + 1, n);
    if n == 0 {
        return 0;
    }
    let guard = pivot_guard(diag, off);
    let mut count = 0;
    let mut q = diag[0] - x;
    if q < 0.0 {
        count += 1;
    }
    for i in 1..n {
        let safe = if q.abs() < guard {
            if q < 0.0 {
                -guard
            } else {
                guard
            }
        } else {
            q
        };
        q = (diag[i] - x) - off[i - 1] * off[i - 1] / safe;
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

fn pivot_guard(diag: &[f64], off: &[f64]) -> f64 {
    let mut scale = 0.0f64;
    for &d in diag {
        scale = scale.max(d.abs());
    }
    for &e in off {
        scale = scale.max(e.abs());
    }
    (scale * f64::EPSILON * f64::EPSILON).max(f64::MIN_POSITIVE)
}

/// The `count` smallest eigenvalues, ascending, each bisected to machine
/// precision inside its Gershgorin bracket.
pub fn lowest_eigenvalues(diag: &[f64], off: &[f64], count: usize) -> Vec<f64> {
    let n = diag.len();
    assert!(count <= n, "requested more eigenvalues than the matrix has");
    let (mut glo, mut ghi) = (f64::MAX, f64::MIN);
    for i in 0..n {
        let left = if i > 0 { off[i - 1].abs() } else { 0.0 };
        let right = if i < n - 1 { off[i].abs() } else { 0.0 };
        glo = glo.min(diag[i] - left - right);
        ghi = ghi.max(diag[i] + left + right);
    }
    let width = (ghi - glo).max(1.0);
    glo -= 1e-12 * width;
    ghi += 1e-12 * width;

    let mut out = Vec::with_capacity(count);
    for k in 0..count {
        // Eigenvalues come out ascending, so the previous one bounds below.
        let mut lo = out.last().copied().unwrap_or(glo);
        let mut hi = ghi;
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if hi - lo <= 2.0 * f64::EPSILON * mid.abs().max(1e-300) {
                break;
            }
            if sturm_count(diag, off, mid) <= k {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        out.push(0.5 * (lo + hi));
    }
    out
}

/// LU factorization of `T - shift I` with partial pivoting. Row swaps create
/// a second superdiagonal (`du2`).
struct ShiftedLu {
    d: Vec<f64>,
    du: Vec<f64>,
    du2: Vec<f64>,
    dl: Vec<f64>,
    swapped: Vec<bool>,
}

fn factor_shifted(diag: &[f64], off: &[f64], shift: f64) -> ShiftedLu {
    let n = diag.len();
    let tiny = pivot_guard(diag, off).max(f64::EPSILON * shift.abs());
    let mut d: Vec<f64> = diag.iter().map(|&v| v - shift).collect();
    let mut du = off.to_vec();
    let mut dl = off.to_vec();
    let mut du2 = vec![0.0; n.saturating_sub(2)];
    let mut swapped = vec![false; n.saturating_sub(1)];
    for i in 0..n.saturating_sub(1) {
        if dl[i].abs() <= d[i].abs() {
            if d[i] == 0.0 {
                d[i] = tiny;
            }
            let fact = dl[i] / d[i];
            dl[i] = fact;
            d[i + 1] -= fact * du[i];
        } else {
            let fact = d[i] / dl[i];
            d[i] = dl[i];
            dl[i] = fact;
            let t = du[i];
            du[i] = d[i + 1];
            d[i + 1] = t - fact * d[i + 1];
            if i + 2 < n {
                du2[i] = du[i + 1];
                du[i + 1] *= -fact;
            }
            swapped[i] = true;
        }
    }
    if let Some(last) = d.last_mut() {
        if *last == 0.0 {
            *last = tiny;
        }
    }
    ShiftedLu {
        d,
        du,
        du2,
        dl,
        swapped,
    }
}

fn solve_factored(lu: &ShiftedLu, rhs: &[f64]) -> Vec<f64> {
    let n = rhs.len();
    let mut b = rhs.to_vec();
    for i in 0..n.saturating_sub(1) {
        if lu.swapped[i] {
            let t = b[i];
            b[i] = b[i + 1];
            b[i + 1] = t - lu.dl[i] * b[i];
        } else {
            b[i + 1] -= lu.dl[i] * b[i];
        }
    }
    b[n - 1] /= lu.d[n - 1];
    if n > 1 {
        b[n - 2] = (b[n - 2] - lu.du[n - 2] * b[n - 1]) / lu.d[n - 2];
    }
    for i in (0..n.saturating_sub(2)).rev() {
        b[i] = (b[i] - lu.du[i] * b[i + 1] - lu.du2[i] * b[i + 2]) / lu.d[i];
    }
    b
}

/// Eigenvector for an eigenvalue already bisected to machine precision, by
/// inverse iteration from a fixed pseudorandom start.
pub fn eigenvector(diag: &[f64], off: &[f64], eigenvalue: f64) -> Vec<f64> {
    let n = diag.len();
    let lu = factor_shifted(diag, off, eigenvalue);
    // Deterministic start vector; any dense direction works.
    let mut state = 0x9e37_79b9_7f4a_7c15u64;
    let mut v: Vec<f64> = (0..n)
        .map(|_| {
            state = state
                .wrapping_mul(6_364_136_223_846_793_005)
                .wrapping_add(1_442_695_040_888_963_407);
            (state >> 11) as f64 / (1u64 << 53) as f64 - 0.5
        })
        .collect();
    normalize(&mut v);
    for _ in 0..3 {
        v = solve_factored(&lu, &v);
        normalize(&mut v);
    }
    v
}

fn normalize(v: &mut [f64]) {
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if norm > 0.0 {
        for x in v.iter_mut() {
            *x /= norm;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn sturm_counts_two_by_two() {
        // [[1, -1], [-1, 3]]: eigenvalues 2 -+ sqrt(2).
        let d = [1.0, 3.0];
        let e = [-1.0];
        assert_eq!(sturm_count(&d, &e, 0.0), 0);
        assert_eq!(sturm_count(&d, &e, 1.0), 1);
        assert_eq!(sturm_count(&d, &e, 4.0), 2);
    }

    #[test]
    fn chain_eigenvalues_match_cosines() {
        // Tight-binding chain: d_i = 0, e_i = -1; spectrum -2 cos(k pi / (N+1)).
        let n = 40;
        let d = vec![0.0; n];
        let e = vec![-1.0; n - 1];
        let got = lowest_eigenvalues(&d, &e, n);
        let mut expected: Vec<f64> = (1..=n)
            .map(|k| -2.0 * (k as f64 * PI / (n as f64 + 1.0)).cos())
            .collect();
        expected.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for (g, x) in got.iter().zip(&expected) {
            assert!((g - x).abs() < 1e-12, "got {g}, expected {x}");
        }
    }

    #[test]
    fn eigenvalues_ascend() {
        let d: Vec<f64> = (0..120).map(|i| ((i * 37) % 17) as f64).collect();
        let e: Vec<f64> = (0..119).map(|i| 1.0 + ((i * 11) % 5) as f64 * 0.2).collect();
        let vals = lowest_eigenvalues(&d, &e, 120);
        for pair in vals.windows(2) {
            assert!(pair[1] >= pair[0] - 1e-12);
        }
    }

    #[test]
    fn inverse_iteration_recovers_chain_mode() {
        let n = 60;
        let d = vec![0.0; n];
        let e = vec![-1.0; n - 1];
        let vals = lowest_eigenvalues(&d, &e, 2);
        let v = eigenvector(&d, &e, vals[0]);
        // Ground mode of the chain is sin(j pi / (N+1)).
        let mut exact: Vec<f64> = (1..=n)
            .map(|j| (j as f64 * PI / (n as f64 + 1.0)).sin())
            .collect();
        normalize(&mut exact);
        let dot: f64 = v.iter().zip(&exact).map(|(a, b)| a * b).sum();
        assert!(dot.abs() > 1.0 - 1e-10, "overlap {dot}");
    }

    #[test]
    fn residual_of_eigenpair_is_small() {
        let n = 80;
        let d: Vec<f64> = (0..n).map(|i| (i as f64 * 0.37).sin() * 3.0).collect();
        let e: Vec<f64> = (0..n - 1).map(|i| 1.0 + (i as f64 * 0.11).cos()).collect();
        let vals = lowest_eigenvalues(&d, &e, 3);
        for &mu in &vals {
            let v = eigenvector(&d, &e, mu);
            let mut worst = 0.0f64;
            for i in 0..n {
                let mut r = (d[i] - mu) * v[i];
                if i > 0 {
                    r += e[i - 1] * v[i - 1];
                }
                if i + 1 < n {
                    r += e[i] * v[i + 1];
                }
                worst = worst.max(r.abs());
            }
            assert!(worst < 1e-9, "residual {worst} for mu = {mu}");
        }
    }
}
