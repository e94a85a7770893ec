//! Command-line interface to the relativistic oscillator family: closed-form
//! spectra, conformal-frame potentials, eigenfunction sampling, oracle
//! validation, and flat-limit studies, emitted as plot-ready CSV or JSON.
//!
//! Exit codes: 0 success, 1 validation failure, 2 usage or parameter error,
//! 3 numerical failure.

mod output;

use std::io::Write;
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};

use output::{Cell, OutputRecord};
use relosc::{
    geometry, oracle, spectra, wavefunction, BoundState, Error, FdConfig, ModelParams, Parity,
    Regime, ScatteringState,
};

#[derive(Parser)]
#[command(
    name = "relosc",
    version,
    about = "Relativistic oscillator family: spectra, potentials, eigenfunctions (natural units, hbar = c = 1)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Csv, global = true)]
    format: Format,
    /// Omit the timestamp metadata line, making reruns byte-identical.
    #[arg(long, global = true)]
    no_timestamp: bool,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct ModelArgs {
    /// Scalar mass m > 0.
    #[arg(long, allow_negative_numbers = true)]
    m: f64,
    /// Frequency omega > 0.
    #[arg(long, allow_negative_numbers = true)]
    omega: f64,
    /// Deformation parameter; its sign selects the regime (<0 well, >0 barrier, 0 flat).
    #[arg(long, allow_negative_numbers = true)]
    lambda: f64,
}

impl ModelArgs {
    fn params(&self) -> Result<ModelParams, Error> {
        ModelParams::new(self.m, self.omega, self.lambda)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form energy levels; barrier models also report threshold and n_max.
    Spectrum {
        #[command(flatten)]
        model: ModelArgs,
        /// How many levels to list (the barrier regime caps at its bound count).
        #[arg(long, default_value_t = 8)]
        levels: u32,
    },
    /// Conformal-frame potential V(xhat) and conformal factor on a grid.
    Potential {
        #[command(flatten)]
        model: ModelArgs,
        /// Number of grid points.
        #[arg(long, default_value_t = 201)]
        points: usize,
        /// Grid half-width for the infinite-domain regimes.
        #[arg(long)]
        xhat_max: Option<f64>,
        /// Well regime: stay this fraction of the half-width away from the walls.
        #[arg(long, default_value_t = 1e-3)]
        wall_margin: f64,
    },
    /// Samples of a bound state U_n or a continuum state at a given energy.
    Wavefunction {
        #[command(flatten)]
        model: ModelArgs,
        /// Bound-level index.
        #[arg(long, default_value_t = 0)]
        n: u32,
        /// Sample a continuum state instead (barrier regime only).
        #[arg(long)]
        scattering: bool,
        /// Continuum energy, at or above the threshold.
        #[arg(long, allow_negative_numbers = true)]
        energy: Option<f64>,
        /// Continuum parity channel: 0 even, 1 odd.
        #[arg(long, default_value_t = 0)]
        parity: u8,
        /// Number of grid points.
        #[arg(long, default_value_t = 201)]
        points: usize,
        /// Grid half-width for the infinite-domain regimes.
        #[arg(long)]
        xhat_max: Option<f64>,
        /// Well regime: stay this fraction of the half-width away from the walls.
        #[arg(long, default_value_t = 1e-3)]
        wall_margin: f64,
    },
    /// Compare closed-form levels against the finite-difference oracle.
    Validate {
        #[command(flatten)]
        model: ModelArgs,
        /// Levels to check (default: 5, or every bound state of a barrier).
        #[arg(long)]
        levels: Option<u32>,
        /// Relative tolerance each level must meet.
        #[arg(long, default_value_t = 1e-5)]
        tolerance: f64,
        /// Two increasing grid sizes for the Richardson step, comma-separated.
        #[arg(long, value_delimiter = ',', default_values_t = vec![4097, 8193])]
        grids: Vec<usize>,
    },
    /// Flat-limit study: eps^2-scaled shape parameter and levels along an eps sequence.
    Limit {
        #[command(flatten)]
        model: ModelArgs,
        /// Comma-separated decreasing positive eps values.
        #[arg(long, value_delimiter = ',', required = true)]
        eps_list: Vec<f64>,
        /// Levels per eps.
        #[arg(long, default_value_t = 3)]
        levels: u32,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::SeriesDivergence { .. } | Error::Numerics(_) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, Error> {
    let (record, code) = match &cli.command {
        Command::Spectrum { model, levels } => (cmd_spectrum(model, *levels)?, ExitCode::SUCCESS),
        Command::Potential {
            model,
            points,
            xhat_max,
            wall_margin,
        } => (
            cmd_potential(model, *points, *xhat_max, *wall_margin)?,
            ExitCode::SUCCESS,
        ),
        Command::Wavefunction {
            model,
            n,
            scattering,
            energy,
            parity,
            points,
            xhat_max,
            wall_margin,
        } => (
            cmd_wavefunction(
                model,
                *n,
                *scattering,
                *energy,
                *parity,
                *points,
                *xhat_max,
                *wall_margin,
            )?,
            ExitCode::SUCCESS,
        ),
        Command::Validate {
            model,
            levels,
            tolerance,
            grids,
        } => {
            let (record, all_pass) = cmd_validate(model, *levels, *tolerance, grids)?;
            let code = if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            };
            (record, code)
        }
        Command::Limit {
            model,
            eps_list,
            levels,
        } => (cmd_limit(model, eps_list, *levels)?, ExitCode::SUCCESS),
    };

    let mut record = record;
    if !cli.no_timestamp {
        let now = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        record.meta("generated_unix", now);
    }
    let stdout = std::io::stdout();
    let mut w = stdout.lock();
    let written = match cli.format {
        Format::Csv => record.write_csv(&mut w),
        Format::Json => record.write_json(&mut w),
    }
    .and_then(|()| w.flush());
    match written {
        Ok(()) => Ok(code),
        // Downstream consumers (head, grep -m) may close the pipe early.
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(code),
        Err(e) => Err(Error::Numerics(format!("write failed: {e}"))),
    }
}

fn echo_params(record: &mut OutputRecord, params: &ModelParams) {
    record.meta_num("m", params.mass());
    record.meta_num("omega", params.omega());
    record.meta_num("lambda", params.lambda());
    record.meta("regime", params.regime().label());
    if params.regime().is_rho() {
        record.meta("rho_special_case", "true");
    }
}

fn cmd_spectrum(model: &ModelArgs, levels: u32) -> Result<OutputRecord, Error> {
    let params = model.params()?;
    let report = spectra::spectrum_report(&params, levels)?;
    let mut record = OutputRecord::new(
        "spectrum.v1",
        vec!["n", "energy", "energy_squared", "regime"],
    );
    echo_params(&mut record, &params);
    if let Some(shape) = report.shape {
        let key = if params.lambda() < 0.0 { "k" } else { "k_prime" };
        record.meta_num(key, shape);
    }
    if let Some(nm) = report.n_max {
        record.meta("n_max", nm);
    }
    if let Some(thr) = report.threshold {
        record.meta_num("continuum_threshold", thr);
    }
    let label = report.regime.label();
    for (n, e) in &report.levels {
        record.push_row(vec![
            Cell::Int(i64::from(*n)),
            Cell::Num(*e),
            Cell::Num(e * e),
            Cell::Text(label.to_string()),
        ]);
    }
    Ok(record)
}

/// Uniform sampling grid: inside the walls (minus a margin) for the well
/// regime, `[-xhat_max, xhat_max]` otherwise.
fn sample_grid(
    params: &ModelParams,
    points: usize,
    xhat_max: Option<f64>,
    wall_margin: f64,
    fallback_half_width: f64,
) -> Result<Vec<f64>, Error> {
    if points < 2 {
        return Err(Error::InvalidParams(format!(
            "need at least 2 grid points, got {points}"
        )));
    }
    let half = match params.regime() {
        Regime::PoschlTeller { .. } => {
            if !(0.0..1.0).contains(&wall_margin) {
                return Err(Error::InvalidParams(format!(
                    "wall margin must lie in [0, 1), got {wall_margin}"
                )));
            }
            geometry::domain(params).hi * (1.0 - wall_margin)
        }
        _ => xhat_max.unwrap_or(fallback_half_width),
    };
    if !(half.is_finite() && half > 0.0) {
        return Err(Error::InvalidParams(format!(
            "grid half-width must be positive and finite, got {half}"
        )));
    }
    Ok((0..points)
        .map(|i| -half + 2.0 * half * i as f64 / (points - 1) as f64)
        .collect())
}

fn cmd_potential(
    model: &ModelArgs,
    points: usize,
    xhat_max: Option<f64>,
    wall_margin: f64,
) -> Result<OutputRecord, Error> {
    let params = model.params()?;
    let fallback = match params.regime() {
        Regime::Flat => 5.0 / (params.mass() * params.omega()).sqrt(),
        _ => 5.0 / params.omega_hat(),
    };
    let grid = sample_grid(&params, points, xhat_max, wall_margin, fallback)?;
    let mut record =
        OutputRecord::new("potential.v1", vec!["xhat", "potential", "conformal_factor"]);
    echo_params(&mut record, &params);
    record.meta("points", points);
    if let Regime::PoschlTeller { .. } = params.regime() {
        record.meta_num("wall_margin", wall_margin);
        record.meta_num("wall", geometry::domain(&params).hi);
    }
    for &x in &grid {
        record.push_row(vec![
            Cell::Num(x),
            Cell::Num(geometry::potential(&params, x)?),
            Cell::Num(geometry::conformal_factor(&params, x)?),
        ]);
    }
    Ok(record)
}

#[allow(clippy::too_many_arguments)]
fn cmd_wavefunction(
    model: &ModelArgs,
    n: u32,
    scattering: bool,
    energy: Option<f64>,
    parity: u8,
    points: usize,
    xhat_max: Option<f64>,
    wall_margin: f64,
) -> Result<OutputRecord, Error> {
    let params = model.params()?;
    let mut record = OutputRecord::new("wavefunction.v1", vec!["xhat", "u"]);
    echo_params(&mut record, &params);
    if scattering {
        let energy = energy
            .ok_or_else(|| Error::InvalidParams("--scattering requires --energy".to_string()))?;
        let parity = match parity {
            0 => Parity::Even,
            1 => Parity::Odd,
            other => {
                return Err(Error::InvalidParams(format!(
                    "parity channel must be 0 or 1, got {other}"
                )))
            }
        };
        let state = ScatteringState::new(&params, parity, energy)?;
        let grid = sample_grid(
            &params,
            points,
            xhat_max,
            wall_margin,
            5.0 / params.omega_hat(),
        )?;
        record.meta("state", "scattering");
        record.meta_num("energy", state.energy());
        record.meta_num("nu", state.nu());
        record.meta_num(
            "continuum_threshold",
            spectra::continuum_threshold(&params)?,
        );
        record.meta("parity", parity.exponent());
        record.meta(
            "amplitude_convention",
            "unit value (even) or unit sinh prefactor (odd) at the origin",
        );
        for &x in &grid {
            record.push_row(vec![Cell::Num(x), Cell::Num(state.eval(x)?)]);
        }
    } else {
        let state = BoundState::normalized(&params, n)?;
        let default_half = state.residual_window().1;
        let grid = sample_grid(&params, points, xhat_max, wall_margin, default_half)?;
        record.meta("state", "bound");
        record.meta("n", n);
        record.meta("n_s", state.index().degree());
        record.meta("parity", state.index().parity().exponent());
        record.meta_num("energy", state.energy());
        record.meta_num("norm_constant", state.norm());
        record.meta("nodes", wavefunction::count_nodes(&state, 1024));
        record.meta_num("truncation_radius", state.support_radius());
        for &x in &grid {
            record.push_row(vec![Cell::Num(x), Cell::Num(state.eval(x)?)]);
        }
    }
    Ok(record)
}

fn cmd_validate(
    model: &ModelArgs,
    levels: Option<u32>,
    tolerance: f64,
    grids: &[usize],
) -> Result<(OutputRecord, bool), Error> {
    let params = model.params()?;
    if !(tolerance.is_finite() && tolerance > 0.0) {
        return Err(Error::InvalidParams(format!(
            "tolerance must be positive, got {tolerance}"
        )));
    }
    if grids.len() != 2 {
        return Err(Error::InvalidParams(format!(
            "--grids takes exactly two sizes, got {}",
            grids.len()
        )));
    }
    let count = match levels {
        Some(0) => {
            return Err(Error::InvalidParams(
                "need at least one level to validate".into(),
            ))
        }
        Some(l) => usize::try_from(l).expect("u32 fits"),
        None => match params.regime() {
            Regime::RosenMorse => usize::try_from(spectra::n_max(&params)?.saturating_add(1))
                .map_err(|_| Error::InvalidParams("too many bound states to validate".into()))?,
            _ => 5,
        },
    };
    let cfg = FdConfig {
        coarse_points: grids[0],
        fine_points: grids[1],
        count,
        box_radius: None,
    };
    let fd = oracle::fd_eigenvalues(&params, &cfg)?;

    let mut record = OutputRecord::new(
        "validate.v1",
        vec![
            "n",
            "energy_closed",
            "energy_fd",
            "abs_err",
            "rel_err",
            "pass",
        ],
    );
    echo_params(&mut record, &params);
    record.meta_num("tolerance", tolerance);
    record.meta("grid_coarse", cfg.coarse_points);
    record.meta("grid_fine", cfg.fine_points);

    let mut all_pass = true;
    for (n, fd_e) in fd.iter().enumerate() {
        let closed = spectra::level(&params, (n as u32).into())?;
        let abs = (closed - fd_e).abs();
        let rel = abs / closed.abs();
        let pass = rel < tolerance;
        all_pass &= pass;
        record.push_row(vec![
            Cell::Int(n as i64),
            Cell::Num(closed),
            Cell::Num(*fd_e),
            Cell::Num(abs),
            Cell::Num(rel),
            Cell::Text(if pass { "pass" } else { "fail" }.to_string()),
        ]);
    }

    if params.regime() == Regime::RosenMorse {
        let expected = spectra::n_max(&params)?.saturating_add(1);
        let counted = oracle::fd_bound_count(&params, cfg.fine_points, cfg.box_radius)? as u64;
        record.meta("bound_count_closed", expected);
        record.meta("bound_count_fd", counted);
        all_pass &= counted == expected;
    }
    record.meta("result", if all_pass { "pass" } else { "fail" });
    Ok((record, all_pass))
}

fn cmd_limit(model: &ModelArgs, eps_list: &[f64], levels: u32) -> Result<OutputRecord, Error> {
    let params = model.params()?;
    if params.lambda() == 0.0 {
        return Err(Error::InvalidParams(
            "the flat point has no eps sequence; pick a branch via the sign of --lambda".into(),
        ));
    }
    if eps_list.iter().any(|e| !(e.is_finite() && *e > 0.0)) {
        return Err(Error::InvalidParams(
            "eps values must be positive and finite".into(),
        ));
    }
    if eps_list.windows(2).any(|w| w[1] >= w[0]) {
        return Err(Error::InvalidParams(
            "eps values must be strictly decreasing".into(),
        ));
    }
    let (m, omega) = (params.mass(), params.omega());
    let flat = ModelParams::new(m, omega, 0.0)?;
    let well_branch = params.lambda() < 0.0;

    let mut record = OutputRecord::new(
        "limit.v1",
        vec![
            "eps",
            "eps_sq_shape",
            "n",
            "energy",
            "flat_energy",
            "delta_e_squared",
            "max_delta_e_squared",
        ],
    );
    echo_params(&mut record, &params);
    record.meta(
        "branch",
        if well_branch {
            "poschl-teller"
        } else {
            "rosen-morse"
        },
    );
    record.meta_num("shape_limit_m_over_omega", m / omega);

    for &eps in eps_list {
        let lam = if well_branch { -eps * eps } else { eps * eps };
        let deformed = ModelParams::new(m, omega, lam)?;
        let shape = if well_branch {
            deformed.shape_k()?.value()
        } else {
            deformed.shape_k_prime()?.value()
        };
        let mut rows = Vec::new();
        let mut max_delta: f64 = 0.0;
        for n in 0..levels {
            let e = match spectra::level(&deformed, n.into()) {
                Ok(e) => e,
                // A level can stop being bound at large eps; skip it then.
                Err(Error::NoSuchLevel { .. }) => continue,
                Err(other) => return Err(other),
            };
            let ef = spectra::flat_level(&flat, n.into())?;
            let delta = e * e - ef * ef;
            max_delta = max_delta.max(delta.abs());
            rows.push((n, e, ef, delta));
        }
        for (n, e, ef, delta) in rows {
            record.push_row(vec![
                Cell::Num(eps),
                Cell::Num(eps * eps * shape),
                Cell::Int(i64::from(n)),
                Cell::Num(e),
                Cell::Num(ef),
                Cell::Num(delta),
                Cell::Num(max_delta),
            ]);
        }
    }
    Ok(record)
}
