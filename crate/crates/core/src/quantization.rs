//! Frequency quantization.
//!
//! Bound states require the series to truncate to a polynomial of degree n,
//! which imposes two conditions: theta = 2n and a_{n+1} = 0. The first fixes
//! the energy at given omega; the second, read as a polynomial equation
//! a_{n+1}(delta) = 0, restricts the oscillator frequency itself to the
//! discrete set omega_{n,l} = 4 m f^2 / delta^2 over its admissible roots.

use crate::error::{Error, Result};
use crate::params::{derive_gamma, energy_from_theta_condition, ModelParams};
use crate::series::generate_coefficients;
use crate::tridiagonal::{lowest_eigenvalues, SymmetricTridiagonal};

/// Roots closer to zero than this are the delta = 0 artifact of odd n+1.
const ZERO_ROOT_FLOOR: f64 = 1e-8;
/// Newton refinement stops when the step falls below this relative size.
const NEWTON_RELATIVE_TOL: f64 = 1e-14;

/// One quantized mode of the oscillator.
#[derive(Debug, Clone, PartialEq)]
pub struct ModeSolution {
    pub n: u32,
    pub l: i32,
    pub gamma_abs: f64,
    /// Root of a_{n+1}(delta); its sign matches the sign of f.
    pub delta_root: f64,
    /// omega = 4 m f^2 / delta_root^2.
    pub omega: f64,
    pub energy_plus: f64,
    pub energy_minus: f64,
    /// Terminated series a_0..a_n.
    pub coefficients: Vec<f64>,
    /// Rest mass the mode was solved for.
    pub m: f64,
}

impl ModeSolution {
    /// The f = 0 degenerate mode with n = 0: H = 1 and the frequency is a free
    /// parameter rather than a root of the termination condition.
    pub fn pure_oscillator(m: f64, omega: f64, l: i32) -> Result<Self> {
        if !(m.is_finite() && m > 0.0) {
            return Err(Error::InvalidInput(format!("mass must be positive, got {m}")));
        }
        if !(omega.is_finite() && omega > 0.0) {
            return Err(Error::InvalidInput(format!("omega must be positive, got {omega}")));
        }
        let gamma_abs = derive_gamma(l, 0.0);
        let e = (m * m + 2.0 * m * omega * (gamma_abs + 0.5)).sqrt();
        Ok(Self {
            n: 0,
            l,
            gamma_abs,
            delta_root: 0.0,
            omega,
            energy_plus: e,
            energy_minus: -e,
            coefficients: vec![1.0],
            m,
        })
    }
}

/// Value and delta-derivative of a_{n+1} at a fixed delta, via the recurrence.
fn a_np1_and_derivative(alpha: f64, theta: f64, n: u32, delta: f64) -> (f64, f64) {
    let target = n as usize + 1;
    // value recurrence alongside its delta-derivative
    let (mut a_prev, mut a_curr) = (1.0, delta / alpha);
    let (mut d_prev, mut d_curr) = (0.0, 1.0 / alpha);
    for j in 0..target - 1 {
        let den = (j as f64 + 2.0) * (j as f64 + 1.0 + alpha);
        let a_next = (delta * a_curr - (theta - 2.0 * j as f64) * a_prev) / den;
        let d_next = (a_curr + delta * d_curr - (theta - 2.0 * j as f64) * d_prev) / den;
        a_prev = a_curr;
        a_curr = a_next;
        d_prev = d_curr;
        d_curr = d_next;
    }
    (a_curr, d_curr)
}

/// Newton-refines a candidate root of a_{n+1}(delta), using the numeric
/// recurrence as the function oracle.
fn refine_root(alpha: f64, theta: f64, n: u32, start: f64) -> f64 {
    let mut delta = start;
    for _ in 0..60 {
        let (value, slope) = a_np1_and_derivative(alpha, theta, n, delta);
        if slope == 0.0 || !slope.is_finite() {
            break;
        }
        let step = value / slope;
        delta -= step;
        if step.abs() <= NEWTON_RELATIVE_TOL * delta.abs().max(1.0) {
            break;
        }
    }
    delta
}

/// The termination condition a_{n+1}(delta) = 0 as a matrix eigenproblem.
///
/// Reading the recurrence as delta a_k = (k+1)(k+alpha) a_{k+1} +
/// (2n - 2k + 2) a_{k-1} on the vector (a_0..a_n) with a_{n+1} = 0 makes
/// delta an eigenvalue of a tridiagonal matrix whose sub/super-diagonal
/// products (k+1)(k+alpha)(2n-2k) are positive, so a diagonal scaling
/// symmetrizes it: zero diagonal and off-diagonal entries
/// sqrt((k+1)(k+alpha)(2n-2k)). Its spectrum is exactly the root set of
/// a_{n+1}, all real and simple.
fn quantization_matrix(alpha: f64, n: u32) -> SymmetricTridiagonal {
    let dim = n as usize + 1;
    let two_n = 2.0 * f64::from(n);
    let off_diagonal = (0..dim - 1)
        .map(|k| {
            let kf = k as f64;
            ((kf + 1.0) * (kf + alpha) * (two_n - 2.0 * kf)).sqrt()
        })
        .collect();
    SymmetricTridiagonal { diagonal: vec![0.0; dim], off_diagonal }
}

/// All admissible frequencies for the given quantum numbers.
///
/// With theta = 2n and alpha = 2|gamma| + 1 fixed, the roots of
/// a_{n+1}(delta) are found as the eigenvalues of [`quantization_matrix`],
/// Newton-refined against the numeric recurrence, and filtered to the real
/// nonzero roots whose sign matches sign(f). Every surviving root delta maps
/// to omega = 4 m f^2 / delta^2. The result is sorted by descending omega and
/// may be empty.
pub fn allowed_frequencies(params: &ModelParams) -> Result<Vec<ModeSolution>> {
    if params.f == 0.0 {
        return Err(Error::DegenerateCase(
            "the frequency is not quantized for f = 0; any omega > 0 is admissible \
             (pure oscillator); see ModeSolution::pure_oscillator"
                .to_string(),
        ));
    }
    let (m, f, l, n) = (params.m, params.f, params.l, params.n);
    debug_assert!(n >= 1, "ModelParams guarantees n >= 1 when f != 0");
    let gamma_abs = derive_gamma(l, f);
    let alpha = 2.0 * gamma_abs + 1.0;
    let theta = 2.0 * f64::from(n);

    let matrix = quantization_matrix(alpha, n);
    let candidates = lowest_eigenvalues(&matrix, matrix.dimension());

    let mut roots: Vec<f64> = Vec::new();
    for candidate in candidates {
        let delta = refine_root(alpha, theta, n, candidate);
        if delta.abs() < ZERO_ROOT_FLOOR {
            continue; // the delta = 0 root; excluded since delta = 0 requires f = 0
        }
        if delta.signum() != f.signum() {
            continue;
        }
        if roots.iter().any(|&r| (r - delta).abs() <= 1e-8 * delta.abs().max(1.0)) {
            continue;
        }
        roots.push(delta);
    }
    // descending omega = ascending |delta|
    roots.sort_by(|a, b| a.abs().partial_cmp(&b.abs()).unwrap());

    let mut modes = Vec::with_capacity(roots.len());
    for delta in roots {
        let omega = 4.0 * m * f * f / (delta * delta);
        let (energy_plus, energy_minus) = energy_from_theta_condition(m, omega, n, gamma_abs)?;
        let coefficients = generate_coefficients(alpha, theta, delta, n as usize + 1).coeffs;
        modes.push(ModeSolution {
            n,
            l,
            gamma_abs,
            delta_root: delta,
            omega,
            energy_plus,
            energy_minus,
            coefficients,
            m,
        });
    }
    Ok(modes)
}

/// Closed-form ground-state frequency omega_{1,l} = 2 m f^2 / (2|gamma| + 1).
pub fn ground_state_frequency(m: f64, f: f64, l: i32) -> Result<f64> {
    if !(m.is_finite() && m > 0.0) {
        return Err(Error::InvalidInput(format!("mass must be positive, got {m}")));
    }
    if f == 0.0 {
        return Err(Error::DegenerateCase(
            "the ground-state frequency formula requires f != 0".to_string(),
        ));
    }
    let gamma_abs = derive_gamma(l, f);
    Ok(2.0 * m * f * f / (2.0 * gamma_abs + 1.0))
}

/// Closed-form ground-state energy
/// E = +-m [1 + 4 f^2 (|gamma| + 3/2) / (2|gamma| + 1)]^(1/2).
pub fn ground_state_energy(m: f64, f: f64, l: i32) -> Result<(f64, f64)> {
    if !(m.is_finite() && m > 0.0) {
        return Err(Error::InvalidInput(format!("mass must be positive, got {m}")));
    }
    if f == 0.0 {
        return Err(Error::DegenerateCase(
            "the ground-state energy formula requires f != 0".to_string(),
        ));
    }
    let gamma_abs = derive_gamma(l, f);
    let e = m * (1.0 + 4.0 * f * f * (gamma_abs + 1.5) / (2.0 * gamma_abs + 1.0)).sqrt();
    Ok((e, -e))
}

/// Selects one mode from the admissible list by index (0 = highest omega).
pub fn solve_mode(params: &ModelParams, root_index: usize) -> Result<ModeSolution> {
    let modes = allowed_frequencies(params)?;
    let count = modes.len();
    modes
        .into_iter()
        .nth(root_index)
        .ok_or(Error::RootNotFound { index: root_index, count })
}
