//! Bound states of the Klein-Gordon oscillator with a Coulomb-type scalar
//! potential S(rho) = f/rho coupled through the mass term, in (2+1)
//! dimensions with natural units (c = hbar = 1).
//!
//! Separating the stationary solutions and substituting
//! R(xi) = exp(-xi^2/2) xi^|gamma| H(xi) with xi = sqrt(m omega) rho turns the
//! radial equation into a biconfluent Heun equation for H, solved as a power
//! series with the three-term recurrence implemented in [`series`]. Requiring
//! the series to truncate to a degree-n polynomial quantizes not only the
//! energy,
//!
//! ```text
//! E^2 = m^2 + 2 m omega (n + |gamma| + 1/2),
//! ```
//!
//! but the oscillator frequency itself: a_{n+1}(delta) = 0 restricts omega to
//! discrete values omega_{n,l}, computed by [`quantization`]. Every reported
//! mode can be cross-checked against an independent finite-difference
//! eigensolver of the radial operator ([`oracle`]), and [`wavefunction`]
//! builds, normalizes and samples the corresponding radial solutions.
//!
//! The `kgosc` command-line frontend exposes the same operations as CSV.

pub mod error;
pub mod oracle;
pub mod output;
pub mod params;
pub mod poly;
pub mod quantization;
pub mod series;
pub mod tridiagonal;
pub mod wavefunction;

pub use error::{Error, Result};
pub use params::{
    derive_delta, derive_gamma, energy_from_theta_condition, omega_from_delta, DerivedParams,
    ModelParams,
};
pub use quantization::{
    allowed_frequencies, ground_state_energy, ground_state_frequency, solve_mode, ModeSolution,
};
pub use wavefunction::{build_radial, normalize, sample_to_table, RadialTable, RadialWavefunction};
