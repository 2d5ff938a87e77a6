//! Radial wavefunctions R(xi) = N exp(-xi^2/2) xi^|gamma| H(xi) for quantized
//! modes, normalized under the planar radial measure xi dxi, plus grid
//! sampling for export.

use crate::error::{Error, Result};
use crate::quantization::ModeSolution;

/// Default integration cutoff; the Gaussian factor makes the integrand tail
/// at xi = 12 far below any double-precision threshold.
pub const DEFAULT_XI_MAX: f64 = 12.0;
/// Default Simpson sample count (odd, 4000 intervals).
pub const DEFAULT_POINTS: usize = 4001;
/// The integrand at xi_max must stay below this fraction of its peak.
const TAIL_LIMIT: f64 = 1e-14;

/// A normalized radial wavefunction of the sigma = +1 (non-singular) branch.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialWavefunction {
    pub gamma_abs: f64,
    /// Terminated polynomial part a_0..a_n.
    pub coefficients: Vec<f64>,
    /// N such that the integral of |R|^2 xi dxi over [0, inf) is 1.
    pub normalization: f64,
    pub omega: f64,
    pub m: f64,
}

/// Sampled wavefunction on a uniform xi grid, with the physical radii
/// rho = xi / sqrt(m omega).
#[derive(Debug, Clone, PartialEq)]
pub struct RadialTable {
    pub xi_values: Vec<f64>,
    pub r_values: Vec<f64>,
    pub rho_values: Vec<f64>,
}

impl RadialWavefunction {
    /// R(xi) including the normalization constant.
    pub fn evaluate(&self, xi: f64) -> f64 {
        self.normalization * self.shape(xi)
    }

    /// The unnormalized shape exp(-xi^2/2) xi^|gamma| H(xi).
    fn shape(&self, xi: f64) -> f64 {
        let h: f64 = self.coefficients.iter().rev().fold(0.0, |acc, &a| acc * xi + a);
        (-0.5 * xi * xi).exp() * xi.powf(self.gamma_abs) * h
    }
}

/// Builds the normalized radial solution for a quantized mode, using the
/// default quadrature grid.
pub fn build_radial(mode: &ModeSolution) -> Result<RadialWavefunction> {
    let mut wf = RadialWavefunction {
        gamma_abs: mode.gamma_abs,
        coefficients: mode.coefficients.clone(),
        normalization: 1.0,
        omega: mode.omega,
        m: mode.m,
    };
    wf.normalization = normalize(&wf, DEFAULT_XI_MAX, DEFAULT_POINTS)?;
    Ok(wf)
}

/// Composite Simpson over uniformly spaced samples (odd length).
fn simpson(values: &[f64], h: f64) -> f64 {
    debug_assert!(values.len() >= 3 && values.len() % 2 == 1);
    let mut sum = values[0] + values[values.len() - 1];
    for (i, &v) in values.iter().enumerate().skip(1).take(values.len() - 2) {
        sum += if i % 2 == 1 { 4.0 * v } else { 2.0 * v };
    }
    sum * h / 3.0
}

/// Normalization constant N with integral |N R_shape|^2 xi dxi = 1 on
/// [0, xi_max], by composite Simpson with `points` samples (bumped to odd if
/// needed). The stored normalization of `wf` is ignored.
///
/// Fails if the integrand at xi_max exceeds 1e-14 of its peak.
pub fn normalize(wf: &RadialWavefunction, xi_max: f64, points: usize) -> Result<f64> {
    assert!(xi_max > 0.0, "xi_max must be positive");
    assert!(points >= 200, "need at least 200 quadrature points, got {points}");
    let points = if points.is_multiple_of(2) { points + 1 } else { points };
    let h = xi_max / (points - 1) as f64;
    let integrand: Vec<f64> = (0..points)
        .map(|i| {
            let xi = h * i as f64;
            let r = wf.shape(xi);
            r * r * xi
        })
        .collect();
    let peak = integrand.iter().fold(0.0_f64, |m, &v| m.max(v));
    let tail_fraction = integrand[points - 1] / peak;
    if tail_fraction.is_nan() || tail_fraction >= TAIL_LIMIT {
        return Err(Error::TailTooLarge { tail_fraction, limit: TAIL_LIMIT });
    }
    let integral = simpson(&integrand, h);
    Ok(1.0 / integral.sqrt())
}

/// Samples R on a uniform grid over [0, xi_max] with `points` samples.
pub fn sample_to_table(wf: &RadialWavefunction, xi_max: f64, points: usize) -> RadialTable {
    assert!(points >= 2, "need at least 2 grid points, got {points}");
    let scale = (wf.m * wf.omega).sqrt();
    let mut xi_values = Vec::with_capacity(points);
    let mut r_values = Vec::with_capacity(points);
    let mut rho_values = Vec::with_capacity(points);
    for i in 0..points {
        let xi = xi_max * i as f64 / (points - 1) as f64;
        xi_values.push(xi);
        r_values.push(wf.evaluate(xi));
        rho_values.push(xi / scale);
    }
    RadialTable { xi_values, r_values, rho_values }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::ModelParams;
    use crate::quantization::allowed_frequencies;
    use approx::assert_relative_eq;

    fn reference_mode() -> ModeSolution {
        let params = ModelParams::new(1.0, 1.0, 0, 1).unwrap();
        allowed_frequencies(&params).unwrap().remove(0)
    }

    fn bare(gamma_abs: f64, coefficients: Vec<f64>) -> RadialWavefunction {
        RadialWavefunction { gamma_abs, coefficients, normalization: 1.0, omega: 1.0, m: 1.0 }
    }

    #[test]
    fn gaussian_normalization_closed_forms() {
        // integral of exp(-xi^2) xi dxi = 1/2 and of exp(-xi^2) xi^3 dxi = 1/2,
        // so N = sqrt(2) in both cases
        for gamma in [0.0, 1.0] {
            let wf = bare(gamma, vec![1.0]);
            let n = normalize(&wf, DEFAULT_XI_MAX, DEFAULT_POINTS).unwrap();
            assert_relative_eq!(n, 2.0_f64.sqrt(), max_relative = 1e-10);
        }
    }

    #[test]
    fn reference_mode_shape_and_values() {
        let wf = build_radial(&reference_mode()).unwrap();
        // R(xi) = N exp(-xi^2/2) xi (1 + (sqrt6/3) xi)
        let delta = 6.0_f64.sqrt();
        for &xi in &[0.0, 0.3, 1.0, 2.7] {
            let expected =
                wf.normalization * (-0.5_f64 * xi * xi).exp() * xi * (1.0 + delta / 3.0 * xi);
            assert_relative_eq!(wf.evaluate(xi), expected, max_relative = 1e-12, epsilon = 1e-300);
        }
        assert_eq!(wf.evaluate(0.0), 0.0);
        // Gaussian decay dominates the polynomial: direct evaluation puts
        // R(10)/max R at 1.53e-20
        let peak = (0..400).map(|i| wf.evaluate(i as f64 * 0.01).abs()).fold(0.0, f64::max);
        assert!(wf.evaluate(10.0) < 2e-20 * peak);
        assert!(wf.evaluate(10.0) > 0.0);
    }

    #[test]
    fn reference_mode_matches_moment_oracle() {
        // integral of exp(-xi^2) xi^(2g+1) H^2 via Gamma-function moments:
        // the integral of exp(-xi^2) xi^s dxi is Gamma((s+1)/2)/2
        let wf = build_radial(&reference_mode()).unwrap();
        let d = wf.coefficients[1]; // delta/alpha
        let moment = |s: f64| statrs::function::gamma::gamma((s + 1.0) / 2.0) / 2.0;
        let integral = moment(3.0) + 2.0 * d * moment(4.0) + d * d * moment(5.0);
        assert_relative_eq!(wf.normalization, 1.0 / integral.sqrt(), max_relative = 1e-8);
    }

    #[test]
    fn normalization_is_grid_stable() {
        let wf = build_radial(&reference_mode()).unwrap();
        let n0 = normalize(&wf, DEFAULT_XI_MAX, DEFAULT_POINTS).unwrap();
        let n_double = normalize(&wf, DEFAULT_XI_MAX, 2 * DEFAULT_POINTS - 1).unwrap();
        let n_wider = normalize(&wf, DEFAULT_XI_MAX * 1.25, DEFAULT_POINTS).unwrap();
        assert_relative_eq!(n0, n_double, max_relative = 1e-8);
        assert_relative_eq!(n0, n_wider, max_relative = 1e-8);
    }

    #[test]
    fn normalization_rejects_short_domain() {
        let wf = bare(1.0, vec![1.0]);
        assert!(matches!(
            normalize(&wf, 2.0, 401),
            Err(Error::TailTooLarge { .. })
        ));
    }

    #[test]
    fn node_structure_of_first_modes() {
        // f > 0: H = 1 + |d| xi has no positive root, so R has no node;
        // f < 0: exactly one node at xi = alpha/|delta|
        let count_nodes = |wf: &RadialWavefunction| {
            let mut nodes = 0;
            let mut prev = wf.evaluate(0.01);
            for i in 2..1200 {
                let v = wf.evaluate(0.01 * i as f64);
                if prev != 0.0 && v != 0.0 && prev.signum() != v.signum() {
                    nodes += 1;
                }
                prev = v;
            }
            nodes
        };
        let repulsive = build_radial(&reference_mode()).unwrap();
        assert_eq!(count_nodes(&repulsive), 0);

        let params = ModelParams::new(1.0, -1.0, 0, 1).unwrap();
        let mode = allowed_frequencies(&params).unwrap().remove(0);
        let attractive = build_radial(&mode).unwrap();
        assert_eq!(count_nodes(&attractive), 1);
        let node = 3.0 / 6.0_f64.sqrt(); // alpha/|delta|
        assert!(attractive.evaluate(node - 1e-3) * attractive.evaluate(node + 1e-3) < 0.0);
    }

    #[test]
    fn table_grids_and_rho_mapping() {
        let wf = build_radial(&reference_mode()).unwrap();
        let t = sample_to_table(&wf, 1.0, 2);
        assert_eq!(t.xi_values, vec![0.0, 1.0]);
        assert_eq!(t.r_values[0], 0.0);

        let t = sample_to_table(&wf, 12.0, 101);
        assert_eq!(t.xi_values.len(), 101);
        assert_eq!(*t.xi_values.last().unwrap(), 12.0);
        // rho = xi / sqrt(m omega); for m = 1, omega = 2/3 and xi = 1 this is sqrt(3/2)
        let scale = (wf.m * wf.omega).sqrt();
        for (xi, rho) in t.xi_values.iter().zip(&t.rho_values) {
            assert_relative_eq!(*rho, xi / scale, max_relative = 1e-15);
        }
        let idx = t.xi_values.iter().position(|&x| (x - 1.08).abs() < 1e-12);
        assert!(idx.is_some());

        let t = sample_to_table(&wf, 1.0, 3);
        assert_relative_eq!(t.rho_values[2], 1.0 / (2.0_f64 / 3.0).sqrt(), max_relative = 1e-14);
    }
}
