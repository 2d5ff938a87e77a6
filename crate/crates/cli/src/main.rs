//! `kgosc` — quantized frequencies, energy levels and radial wavefunctions of
//! the Klein-Gordon oscillator under a Coulomb-type scalar potential.
//!
//! Subcommands print CSV on stdout (or to a file for `wavefunction --out`)
//! and diagnostics on stderr. Exit codes: 0 success, 1 empty or failed
//! result, 2 invalid input.

mod config;

use clap::{Args, Parser, Subcommand};
use config::{resolve, ConfigFile};
use kg_oscillator::oracle::{self, GridSpec};
use kg_oscillator::output::{format_float, write_radial_table};
use kg_oscillator::{
    allowed_frequencies, build_radial, sample_to_table, solve_mode, Error, ModeSolution,
    ModelParams,
};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "kgosc", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Admissible oscillator frequencies omega_{n,l} (CSV: n,l,gamma,delta,omega)
    Frequency(CommonArgs),
    /// Frequencies with both energy branches (CSV: n,l,omega,E_plus,E_minus)
    Spectrum(CommonArgs),
    /// Sampled normalized radial wavefunction (CSV: xi,rho,R)
    Wavefunction(WavefunctionArgs),
    /// Finite-difference eigenvalue check of each mode
    /// (CSV: predicted_lambda,matched_lambda,relative_error,pass)
    Verify(VerifyArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Rest mass m > 0 (natural units)
    #[arg(long)]
    mass: Option<f64>,
    /// Coulomb coupling f (signed)
    #[arg(long, allow_negative_numbers = true)]
    coupling: Option<f64>,
    /// Azimuthal quantum number l
    #[arg(long, allow_negative_numbers = true)]
    l: Option<i32>,
    /// Radial quantum number n (>= 1 unless coupling = 0)
    #[arg(long)]
    n: Option<u32>,
    /// Config file with key=value lines; flags override it
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Args)]
struct WavefunctionArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Grid upper end in xi
    #[arg(long)]
    xi_max: Option<f64>,
    /// Number of grid samples
    #[arg(long)]
    points: Option<usize>,
    /// Output file (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
    /// Which admissible root to export, 0 = highest omega
    #[arg(long)]
    root: Option<usize>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Interior grid intervals of the eigensolver
    #[arg(long)]
    grid_points: Option<usize>,
    /// Domain cutoff in xi
    #[arg(long)]
    xi_max: Option<f64>,
    /// Relative tolerance on the matched eigenvalue
    #[arg(long)]
    tol: Option<f64>,
}

/// Failure that maps to exit code 2.
struct InvalidInput(String);

impl<E: std::fmt::Display> From<E> for InvalidInput {
    fn from(e: E) -> Self {
        InvalidInput(e.to_string())
    }
}

struct Resolved {
    params: ModelParams,
    config: ConfigFile,
}

fn resolve_common(args: &CommonArgs) -> Result<Resolved, InvalidInput> {
    let config = match &args.config {
        Some(path) => ConfigFile::load(path)?,
        None => ConfigFile::default(),
    };
    let mass = resolve(args.mass, &config, "mass", None)?;
    let coupling = resolve(args.coupling, &config, "coupling", None)?;
    let l = resolve(args.l, &config, "l", None)?;
    let n = resolve(args.n, &config, "n", None)?;
    let params = ModelParams::new(mass, coupling, l, n)?;
    Ok(Resolved { params, config })
}

fn modes_or_degenerate(params: &ModelParams) -> Result<Vec<ModeSolution>, InvalidInput> {
    allowed_frequencies(params).map_err(InvalidInput::from)
}

fn cmd_frequency(args: &CommonArgs) -> Result<ExitCode, InvalidInput> {
    let resolved = resolve_common(args)?;
    let modes = modes_or_degenerate(&resolved.params)?;
    println!("n,l,gamma,delta,omega");
    for mode in &modes {
        println!(
            "{},{},{},{},{}",
            mode.n,
            mode.l,
            format_float(mode.gamma_abs),
            format_float(mode.delta_root),
            format_float(mode.omega)
        );
    }
    Ok(if modes.is_empty() { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

fn cmd_spectrum(args: &CommonArgs) -> Result<ExitCode, InvalidInput> {
    let resolved = resolve_common(args)?;
    let modes = modes_or_degenerate(&resolved.params)?;
    println!("n,l,omega,E_plus,E_minus");
    for mode in &modes {
        println!(
            "{},{},{},{},{}",
            mode.n,
            mode.l,
            format_float(mode.omega),
            format_float(mode.energy_plus),
            format_float(mode.energy_minus)
        );
    }
    Ok(if modes.is_empty() { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

fn cmd_wavefunction(args: &WavefunctionArgs) -> Result<ExitCode, InvalidInput> {
    let resolved = resolve_common(&args.common)?;
    let xi_max = resolve(args.xi_max, &resolved.config, "xi_max", Some(12.0))?;
    let points = resolve(args.points, &resolved.config, "points", Some(4001))?;
    let root = resolve(args.root, &resolved.config, "root", Some(0))?;
    if !xi_max.is_finite() || xi_max <= 0.0 {
        return Err(InvalidInput("xi_max must be positive".to_string()));
    }
    if points < 2 {
        return Err(InvalidInput("points must be >= 2".to_string()));
    }
    let out = args.out.clone().or_else(|| resolved.config.get_string("out").map(PathBuf::from));

    let mode = solve_mode(&resolved.params, root)?;
    let wf = build_radial(&mode)?;
    let table = sample_to_table(&wf, xi_max, points);
    match out {
        Some(path) => {
            let mut file = std::fs::File::create(&path)
                .map_err(|e| InvalidInput(format!("cannot write {}: {e}", path.display())))?;
            write_radial_table(&table, &mut file)?;
        }
        None => write_radial_table(&table, &mut std::io::stdout().lock())?,
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: &VerifyArgs) -> Result<ExitCode, InvalidInput> {
    let resolved = resolve_common(&args.common)?;
    let grid_points =
        resolve(args.grid_points, &resolved.config, "grid_points", Some(oracle::DEFAULT_POINTS))?;
    let xi_max = resolve(args.xi_max, &resolved.config, "xi_max", Some(oracle::DEFAULT_XI_MAX))?;
    let tol = resolve(args.tol, &resolved.config, "tol", Some(oracle::DEFAULT_TOL))?;
    if !xi_max.is_finite() || xi_max <= 0.0 {
        return Err(InvalidInput("xi_max must be positive".to_string()));
    }
    if grid_points < 8 {
        return Err(InvalidInput("grid_points must be >= 8".to_string()));
    }
    let grid = GridSpec::new(xi_max, grid_points);

    let modes = if resolved.params.f == 0.0 {
        // Pure-oscillator path: the spectrum check is omega-independent, so a
        // unit frequency stands in for the free parameter.
        if resolved.params.n != 0 {
            return Err(InvalidInput(Error::InvalidInput(
                "with coupling 0 only the n = 0 pure-oscillator mode is defined".to_string(),
            )
            .to_string()));
        }
        vec![ModeSolution::pure_oscillator(resolved.params.m, 1.0, resolved.params.l)?]
    } else {
        modes_or_degenerate(&resolved.params)?
    };

    println!("predicted_lambda,matched_lambda,relative_error,pass");
    let mut all_pass = !modes.is_empty();
    for mode in &modes {
        let report = oracle::verify_mode(mode, &grid, tol);
        all_pass &= report.pass;
        println!(
            "{},{},{},{}",
            format_float(report.predicted_lambda),
            format_float(report.matched_lambda),
            format_float(report.relative_error),
            report.pass
        );
    }
    Ok(if all_pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Frequency(args) => cmd_frequency(args),
        Command::Spectrum(args) => cmd_spectrum(args),
        Command::Wavefunction(args) => cmd_wavefunction(args),
        Command::Verify(args) => cmd_verify(args),
    };
    match result {
        Ok(code) => code,
        Err(InvalidInput(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
