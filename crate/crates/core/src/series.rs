//! Power-series coefficients of the biconfluent Heun function H(xi) around the
//! origin, generated by the three-term recurrence
//!
//! ```text
//! a_{j+2} = [ delta * a_{j+1} - (theta - 2j) * a_j ] / [ (j+2)(j+1+alpha) ]
//! ```
//!
//! seeded by a_0 = 1 and a_1 = delta / alpha, both numerically at fixed delta
//! and symbolically as polynomials in delta (the form the quantization
//! root-finder consumes).

use crate::error::{Error, Result};
use crate::poly::Polynomial;

/// Hard cap on the series index during tail-converged evaluation.
const MAX_SERIES_INDEX: usize = 10_000;
/// Number of consecutive below-tolerance terms that counts as a converged tail.
const TAIL_RUN: usize = 5;

/// Series coefficients a_0..a_{count-1} at a fixed delta.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesCoefficients {
    pub alpha: f64,
    pub theta: f64,
    pub delta: f64,
    pub coeffs: Vec<f64>,
}

/// The coefficients a_j viewed as polynomials in delta at fixed (alpha, theta).
///
/// `polys[j]` has degree exactly j, and only powers with the parity of j carry
/// nonzero entries.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientPolynomials {
    pub alpha: f64,
    pub theta: f64,
    pub polys: Vec<Polynomial>,
}

#[inline]
fn recurrence_denominator(j: usize, alpha: f64) -> f64 {
    (j as f64 + 2.0) * (j as f64 + 1.0 + alpha)
}

/// Generates a_0..a_{count-1} numerically.
///
/// a_0 = 1 and a_1 = delta/alpha are seeded directly; the recurrence only
/// defines a_{j+2}.
pub fn generate_coefficients(
    alpha: f64,
    theta: f64,
    delta: f64,
    count: usize,
) -> SeriesCoefficients {
    assert!(alpha >= 1.0, "alpha = 2|gamma| + 1 must be >= 1, got {alpha}");
    assert!(count >= 2, "need at least a_0 and a_1, got count = {count}");
    let mut coeffs = Vec::with_capacity(count);
    coeffs.push(1.0);
    coeffs.push(delta / alpha);
    for j in 0..count - 2 {
        let next = (delta * coeffs[j + 1] - (theta - 2.0 * j as f64) * coeffs[j])
            / recurrence_denominator(j, alpha);
        coeffs.push(next);
    }
    SeriesCoefficients { alpha, theta, delta, coeffs }
}

/// Runs the same recurrence with delta kept symbolic, producing a_0..a_{n_max}
/// as polynomials in delta.
pub fn coefficient_polynomials(alpha: f64, theta: f64, n_max: usize) -> CoefficientPolynomials {
    assert!(alpha >= 1.0, "alpha = 2|gamma| + 1 must be >= 1, got {alpha}");
    assert!(n_max >= 1, "n_max must be >= 1, got {n_max}");
    let mut polys: Vec<Vec<f64>> = Vec::with_capacity(n_max + 1);
    polys.push(vec![1.0]);
    polys.push(vec![0.0, 1.0 / alpha]);
    for j in 0..n_max.saturating_sub(1) {
        let den = recurrence_denominator(j, alpha);
        let mut next = vec![0.0; j + 3];
        // delta * a_{j+1}: shift up one power
        for (k, &c) in polys[j + 1].iter().enumerate() {
            next[k + 1] += c / den;
        }
        // -(theta - 2j) * a_j
        let factor = (theta - 2.0 * j as f64) / den;
        for (k, &c) in polys[j].iter().enumerate() {
            next[k] -= factor * c;
        }
        polys.push(next);
    }
    CoefficientPolynomials {
        alpha,
        theta,
        polys: polys.into_iter().map(Polynomial::new).collect(),
    }
}

/// Evaluates H(xi) = sum_j a_j xi^j.
///
/// The provided coefficients are consumed first; if the tail has not yet
/// converged (five consecutive terms below `tail_tolerance`), the recurrence
/// extends the series up to index 10 000. Terminated series (two consecutive
/// exactly-zero coefficients) evaluate exactly as polynomials.
pub fn evaluate_h(coeffs: &SeriesCoefficients, xi: f64, tail_tolerance: f64) -> Result<f64> {
    assert!(xi >= 0.0, "xi must be >= 0, got {xi}");
    let a = &coeffs.coeffs;
    if xi == 0.0 {
        return Ok(a[0]);
    }

    let mut sum = 0.0;
    let mut power = 1.0;
    let mut run = 0usize;
    let mut last_term = f64::INFINITY;
    let finish = |sum: f64, last_term: f64| {
        if sum.is_finite() {
            Ok(sum)
        } else {
            Err(Error::TailNotConverged { achieved: last_term, requested: tail_tolerance })
        }
    };
    for &c in a {
        let term = c * power;
        sum += term;
        power *= xi;
        last_term = term.abs();
        run = if last_term < tail_tolerance { run + 1 } else { 0 };
        if run >= TAIL_RUN {
            return finish(sum, last_term);
        }
    }

    // Extend with the recurrence from the last two known coefficients.
    let (mut prev, mut curr) = (a[a.len() - 2], a[a.len() - 1]);
    for j in (a.len() - 2)..MAX_SERIES_INDEX {
        if prev == 0.0 && curr == 0.0 {
            // terminated: every further coefficient is exactly zero
            return finish(sum, last_term);
        }
        let next = (coeffs.delta * curr - (coeffs.theta - 2.0 * j as f64) * prev)
            / recurrence_denominator(j, coeffs.alpha);
        let term = next * power;
        sum += term;
        power *= xi;
        last_term = term.abs();
        run = if last_term < tail_tolerance { run + 1 } else { 0 };
        if run >= TAIL_RUN {
            return finish(sum, last_term);
        }
        prev = curr;
        curr = next;
    }
    Err(Error::TailNotConverged { achieved: last_term, requested: tail_tolerance })
}
