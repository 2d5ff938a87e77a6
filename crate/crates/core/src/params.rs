//! Physical inputs and the scalar parameter derivations that connect them to
//! the dimensionless radial series equation.
//!
//! Natural units (c = hbar = 1) throughout: mass, energy and frequency share
//! one unit, and the Coulomb coupling f is a dimensionless signed real.

use crate::error::{Error, Result};

/// Physical inputs of the model.
///
/// * `m` — rest mass, > 0.
/// * `f` — Coulomb coupling, signed; f > 0 repulsive, f < 0 attractive.
/// * `l` — azimuthal quantum number (any integer).
/// * `n` — radial quantum number; n >= 1 whenever f != 0. n = 0 is accepted
///   only in the f = 0 degenerate case, where the series truncates at a
///   constant automatically.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    pub m: f64,
    pub f: f64,
    pub l: i32,
    pub n: u32,
}

impl ModelParams {
    pub fn new(m: f64, f: f64, l: i32, n: u32) -> Result<Self> {
        if !(m.is_finite() && m > 0.0) {
            return Err(Error::InvalidInput(format!("mass must be positive, got {m}")));
        }
        if !f.is_finite() {
            return Err(Error::InvalidInput(format!("coupling must be finite, got {f}")));
        }
        if n == 0 && f != 0.0 {
            return Err(Error::InvalidInput(
                "n = 0 is not admissible with a nonzero coupling; the ground state is n = 1"
                    .to_string(),
            ));
        }
        Ok(Self { m, f, l, n })
    }

    /// |gamma| = sqrt(l^2 + f^2) for these inputs.
    pub fn gamma_abs(&self) -> f64 {
        derive_gamma(self.l, self.f)
    }
}

/// Scalar quantities tying the physical inputs to the series equation,
/// evaluated at a given oscillator frequency with the termination condition
/// theta = 2n imposed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivedParams {
    /// |gamma| = sqrt(l^2 + f^2).
    pub gamma_abs: f64,
    /// alpha = 2|gamma| + 1.
    pub alpha: f64,
    /// delta = 2 m f / sqrt(m omega).
    pub delta: f64,
    /// beta^2 = E^2 - m^2 + m omega = m omega (theta + 2 + 2|gamma|).
    pub beta_sq: f64,
    /// theta = beta^2 / (m omega) - 2 - 2|gamma|.
    pub theta: f64,
}

impl DerivedParams {
    /// Derives the series parameters for `params` at frequency `omega`,
    /// with theta pinned to 2n.
    pub fn quantized(params: &ModelParams, omega: f64) -> Result<Self> {
        let gamma_abs = params.gamma_abs();
        let theta = 2.0 * f64::from(params.n);
        let delta = derive_delta(params.m, params.f, omega)?;
        let beta_sq = params.m * omega * (theta + 2.0 + 2.0 * gamma_abs);
        Ok(Self { gamma_abs, alpha: 2.0 * gamma_abs + 1.0, delta, beta_sq, theta })
    }
}

/// |gamma| = sqrt(l^2 + f^2).
///
/// Symmetric under l -> -l and f -> -f exactly.
pub fn derive_gamma(l: i32, f: f64) -> f64 {
    let lf = f64::from(l);
    (lf * lf + f * f).sqrt()
}

/// delta = 2 m f / sqrt(m omega); the sign of delta matches the sign of f.
pub fn derive_delta(m: f64, f: f64, omega: f64) -> Result<f64> {
    if !(m.is_finite() && m > 0.0) {
        return Err(Error::InvalidInput(format!("mass must be positive, got {m}")));
    }
    if !(omega.is_finite() && omega > 0.0) {
        return Err(Error::InvalidInput(format!("omega must be positive, got {omega}")));
    }
    Ok(2.0 * m * f / (m * omega).sqrt())
}

/// Inverts the delta definition: omega = 4 m f^2 / delta^2.
///
/// Requires delta != 0, f != 0 and matching signs, so the result round-trips
/// through [`derive_delta`].
pub fn omega_from_delta(m: f64, f: f64, delta: f64) -> Result<f64> {
    if !(m.is_finite() && m > 0.0) {
        return Err(Error::InvalidInput(format!("mass must be positive, got {m}")));
    }
    if delta == 0.0 || f == 0.0 {
        return Err(Error::InvalidInput(
            "delta and f must be nonzero to invert the delta definition".to_string(),
        ));
    }
    if delta.signum() != f.signum() {
        return Err(Error::InvalidInput(format!(
            "sign mismatch: delta = {delta} but f = {f}; sign(delta) must equal sign(f)"
        )));
    }
    Ok(4.0 * m * f * f / (delta * delta))
}

/// Energy branches from the first termination condition theta = 2n:
/// E = +-sqrt(m^2 + 2 m omega (n + |gamma| + 1/2)).
///
/// Returns (E_plus, E_minus) with E_plus > m.
pub fn energy_from_theta_condition(
    m: f64,
    omega: f64,
    n: u32,
    gamma_abs: f64,
) -> Result<(f64, f64)> {
    if !(m.is_finite() && m > 0.0) {
        return Err(Error::InvalidInput(format!("mass must be positive, got {m}")));
    }
    if !(omega.is_finite() && omega > 0.0) {
        return Err(Error::InvalidInput(format!("omega must be positive, got {omega}")));
    }
    if n == 0 {
        return Err(Error::InvalidInput("n must be >= 1".to_string()));
    }
    let e = (m * m + 2.0 * m * omega * (f64::from(n) + gamma_abs + 0.5)).sqrt();
    Ok((e, -e))
}
