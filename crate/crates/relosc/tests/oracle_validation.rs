//! Cross-validation of the finite-difference machinery itself: convergence
//! order (which justifies the Richardson step), bound-state counting across a
//! parameter sweep, and eigenvector agreement with the closed forms.

mod support;

use relosc::{oracle, spectra, BoundState, ModelParams};

fn params(m: f64, omega: f64, lambda: f64) -> ModelParams {
    ModelParams::new(m, omega, lambda).unwrap()
}

const GOLDEN: f64 = 1.618_033_988_749_895;

#[test]
fn fd_error_is_second_order_in_the_spacing() {
    // Halving h should shrink the eigenvalue error about fourfold. The flat
    // regime is perfectly smooth, so the ratio is tight there; the well walls
    // add a weak boundary term, so that band is wider.
    let flat = params(1.0, 1.0, 0.0);
    let exact = 2f64.sqrt();
    let errors: Vec<f64> = [1025, 2049, 4097]
        .iter()
        .map(|&n| {
            (oracle::fd_eigenvalues_single(&flat, n, 1, None).unwrap()[0] - exact).abs()
        })
        .collect();
    for pair in errors.windows(2) {
        let ratio = pair[0] / pair[1];
        assert!((3.7..4.3).contains(&ratio), "flat ratio {ratio}");
    }

    let well = params(1.0, 1.0, -1.0);
    let errors: Vec<f64> = [1025, 2049, 4097]
        .iter()
        .map(|&n| (oracle::fd_eigenvalues_single(&well, n, 1, None).unwrap()[0] - GOLDEN).abs())
        .collect();
    for pair in errors.windows(2) {
        let ratio = pair[0] / pair[1];
        assert!((3.2..4.9).contains(&ratio), "well ratio {ratio}");
    }
}

#[test]
fn fd_bound_count_sweep() {
    // k'(k' + 1) = m^2 at lambda = omega = 1, so these masses give
    // n_max = 0, 1, 2, 5.
    for (m, expected_n_max) in [(1.0, 0u64), (2.0, 1), (3.0, 2), (6.0, 5)] {
        let p = params(m, 1.0, 1.0);
        assert_eq!(spectra::n_max(&p).unwrap(), expected_n_max);
        let counted = oracle::fd_bound_count(&p, 4097, None).unwrap() as u64;
        assert_eq!(counted, expected_n_max + 1, "m = {m}");
    }
}

#[test]
fn fd_ground_vector_matches_closed_form() {
    let p = params(1.0, 1.0, -1.0);
    let (energy, grid) = oracle::fd_eigenfunction(&p, 8193, 0, None).unwrap();
    assert!((energy - GOLDEN).abs() < 1e-4);
    let u0 = BoundState::normalized(&p, 0).unwrap();
    // Fix the arbitrary eigenvector sign from the value at the center.
    let mid = grid.len() / 2;
    let sign = grid.values()[mid].signum();
    let mut worst = 0.0f64;
    for (i, &v) in grid.values().iter().enumerate() {
        let x = grid.position(i);
        let reference = if x.abs() < grid.hi() {
            u0.eval(x).unwrap()
        } else {
            0.0
        };
        worst = worst.max((sign * v - reference).abs());
    }
    assert!(worst < 1e-4, "max pointwise deviation {worst:.3e}");
}

#[test]
fn fd_second_excited_vector_pins_closed_form_samples() {
    // Five-point profile of U_2 against the high-resolution eigenvector,
    // sign-aligned and norm-matched (both carry unit L2 norm already).
    let p = params(1.0, 1.0, -1.0);
    let (energy, grid) = oracle::fd_eigenfunction(&p, 8193, 2, None).unwrap();
    assert!((energy - (GOLDEN + 2.0)).abs() < 1e-4);
    let u2 = BoundState::normalized(&p, 2).unwrap();
    let sign = {
        let probe = grid.value_at(0.0);
        (probe * u2.eval(0.0).unwrap()).signum()
    };
    for x in [-1.0, -0.5, 0.0, 0.5, 1.0] {
        let fd = sign * grid.value_at(x);
        let closed = u2.eval(x).unwrap();
        assert!(
            (fd - closed).abs() < 1e-4,
            "x = {x}: fd {fd:.8} vs closed {closed:.8}"
        );
    }
}

#[test]
fn flat_polynomials_match_exact_rational_sums() {
    for (degree, c, z) in [(3u32, 0.5, 2.3), (5, 1.5, 7.1), (8, 0.5, 0.4)] {
        let exact = support::hyp1f1_terminating_exact(degree, c, z);
        let fast = relosc::hyp2f1::hyp1f1_terminating(degree, c, z);
        assert!(
            support::rel_err(fast, exact) < 1e-12,
            "M(-{degree}; {c}; {z})"
        );
    }
}

#[test]
fn barrier_states_are_orthonormal_too() {
    // Gram matrix of the first six bound states of a deep barrier model.
    let p = params(10.0, 1.0, 1.0);
    let states: Vec<_> = (0..6)
        .map(|n| BoundState::normalized(&p, n).unwrap())
        .collect();
    for (i, a) in states.iter().enumerate() {
        for (j, b) in states.iter().enumerate() {
            let ip = relosc::wavefunction::inner_product(a, b).unwrap();
            let expected = if i == j { 1.0 } else { 0.0 };
            assert!(
                (ip - expected).abs() < 1e-8,
                "gram ({i}, {j}) = {ip:.3e}"
            );
        }
    }
}

#[test]
fn residual_evaluator_flags_detuned_states() {
    // A correct barrier state passes; shifting its energy by 0.1 must trip
    // the detector by orders of magnitude.
    let p = params(3.0, 1.0, 1.0);
    let state = BoundState::normalized(&p, 1).unwrap();
    let (lo, hi) = state.residual_window();
    let good = oracle::ode_residual(&p, state.energy(), |x| state.eval(x).unwrap(), lo, hi, 64)
        .unwrap();
    assert!(good < 1e-6, "true residual {good:.2e}");
    let bad = oracle::ode_residual(
        &p,
        state.energy() + 0.1,
        |x| state.eval(x).unwrap(),
        lo,
        hi,
        64,
    )
    .unwrap();
    assert!(bad > 1e-2, "detuned residual {bad:.2e}");
}
