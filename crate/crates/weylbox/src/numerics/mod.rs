//! Special functions and quadrature shared by every other module.
//!
//! [`special`] holds the gamma, Riemann zeta and polylogarithm evaluations
//! plus the small closed-form helpers (unit-ball volume, the radiation-law
//! coefficient). [`quadrature`] provides adaptive Gauss-Kronrod integration
//! tuned for Bose-Einstein integrands, including semi-infinite ranges.
//!
//! All functions here are pure; there is no shared mutable state.

pub mod quadrature;
pub mod special;

pub use quadrature::{bose_integral, integrate, log_partition, QuadratureSpec};
pub use special::{gamma, polylog, theta_coeff, unit_ball_volume, zeta};
