//! Independent finite-difference verification of quantized modes.
//!
//! The substitution u = sqrt(xi) R turns the radial equation into the
//! symmetric Sturm-Liouville form
//!
//! ```text
//! -u'' + [ (gamma^2 - 1/4)/xi^2 + delta/xi + xi^2 ] u = lambda u,
//! ```
//!
//! with u(0) = u(xi_max) = 0 and lambda = beta^2/(m omega). A mode with
//! quantum number n must show up in the grid spectrum at
//! lambda = 2n + 2|gamma| + 2.

use crate::quantization::ModeSolution;
pub use crate::tridiagonal::{lowest_eigenvalues, SymmetricTridiagonal};

pub const DEFAULT_XI_MAX: f64 = 12.0;
pub const DEFAULT_POINTS: usize = 4000;
pub const DEFAULT_TOL: f64 = 1e-4;

/// Uniform grid over [0, xi_max] with spacing h = xi_max/points; the matrix
/// acts on the points - 1 interior nodes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub xi_max: f64,
    pub points: usize,
}

impl GridSpec {
    pub fn new(xi_max: f64, points: usize) -> Self {
        assert!(xi_max > 0.0, "xi_max must be positive");
        assert!(points >= 8, "need at least 8 grid intervals, got {points}");
        Self { xi_max, points }
    }

    pub fn spacing(&self) -> f64 {
        self.xi_max / self.points as f64
    }
}

impl Default for GridSpec {
    fn default() -> Self {
        Self { xi_max: DEFAULT_XI_MAX, points: DEFAULT_POINTS }
    }
}

/// Verification record for one mode.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleReport {
    /// lambda = 2n + 2|gamma| + 2 from the termination condition.
    pub predicted_lambda: f64,
    /// Nearest grid eigenvalue among the lowest 2n + 4.
    pub matched_lambda: f64,
    /// |matched - predicted| / predicted.
    pub relative_error: f64,
    pub grid: GridSpec,
    /// relative_error < the requested tolerance.
    pub pass: bool,
}

/// Second-order discretization of the symmetrized radial operator on the
/// interior nodes xi_i = i h, i = 1..points-1, with Dirichlet ends.
///
/// The inverse-square term is sampled as the centered second-difference
/// defect of xi^nu with nu = |gamma| + 1/2, the function annihilated by
/// -u'' + (gamma^2 - 1/4) u / xi^2. The defect equals
/// (gamma^2 - 1/4)/xi_i^2 + O(h^2) away from the origin, and keeps the
/// scheme second-order accurate down to gamma = 0, where the pointwise
/// sample does not.
pub fn discretize_radial_operator(
    gamma_abs: f64,
    delta: f64,
    grid: &GridSpec,
) -> SymmetricTridiagonal {
    assert!(gamma_abs >= 0.0, "gamma_abs must be >= 0");
    let h = grid.spacing();
    let h2 = h * h;
    let nu = gamma_abs + 0.5;
    let dim = grid.points - 1;
    let mut diagonal = Vec::with_capacity(dim);
    for i in 1..grid.points {
        let fi = i as f64;
        let xi = fi * h;
        let inverse_square =
            ((fi + 1.0).powf(nu) + (fi - 1.0).powf(nu) - 2.0 * fi.powf(nu)) / (fi.powf(nu) * h2);
        diagonal.push(2.0 / h2 + inverse_square + delta / xi + xi * xi);
    }
    let off_diagonal = vec![-1.0 / h2; dim - 1];
    SymmetricTridiagonal { diagonal, off_diagonal }
}

/// Checks that the mode's predicted eigenvalue appears in the grid spectrum.
///
/// A failed match is reported through `pass = false`, not an error.
pub fn verify_mode(mode: &ModeSolution, grid: &GridSpec, tol: f64) -> OracleReport {
    let predicted = 2.0 * f64::from(mode.n) + 2.0 * mode.gamma_abs + 2.0;
    let matrix = discretize_radial_operator(mode.gamma_abs, mode.delta_root, grid);
    let k = (2 * mode.n as usize + 4).min(matrix.dimension());
    let eigenvalues = lowest_eigenvalues(&matrix, k);
    let matched = eigenvalues
        .iter()
        .copied()
        .min_by(|a, b| {
            (a - predicted).abs().partial_cmp(&(b - predicted).abs()).unwrap()
        })
        .expect("k >= 1 eigenvalues");
    let relative_error = (matched - predicted).abs() / predicted;
    OracleReport {
        predicted_lambda: predicted,
        matched_lambda: matched,
        relative_error,
        grid: *grid,
        pass: relative_error < tol,
    }
}
