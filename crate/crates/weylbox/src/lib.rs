//! Mode counting and corrected Weyl asymptotics for fields in d-dimensional boxes.
//!
//! The library answers one question in several guises: how many Helmholtz
//! eigenmodes of a hypercubic cavity lie below a given wavenumber, and what
//! does the answer imply for the thermodynamics of radiation and solids once
//! the box is large but *finite*?
//!
//! Three layers build on each other:
//!
//! * [`lattice`] counts modes exactly, by integer enumeration, for Neumann,
//!   Dirichlet, mixed and polarized (electromagnetic / acoustic) boundary
//!   setups. These counts are the ground truth everything else is tested
//!   against.
//! * [`weyl`] produces the matching asymptotic counting polynomials: the
//!   volume (Weyl) term, the boundary ("area") correction, and every
//!   lower-order term down to the constant.
//! * [`cavity`] and [`debye`] turn the mode densities into physics: a
//!   corrected Stefan-Boltzmann law and Planck spectrum for the
//!   electromagnetic field, and a generalized Debye model (Debye frequency,
//!   low- and high-temperature heat capacities) for a finite solid.
//!
//! [`numerics`] supplies the special functions (gamma, zeta, polylogarithm)
//! and the adaptive Bose-Einstein quadrature used throughout; [`report`]
//! builds the sweep tables emitted by the `weylbox` command-line tool.
//!
//! Default units are natural (`hbar = k_B = c = 1`); SI constants are an
//! explicit opt-in via [`PhysicalConstants::si`].
//!
//! See the crate examples for runnable tours of each capability:
//! `mode_counting`, `weyl_convergence`, `blackbody_cavity`,
//! `minimum_frequency` and `debye_solid`.

pub mod constants;
pub mod numerics;
pub mod lattice;
pub mod weyl;
pub mod cavity;
pub mod debye;
pub mod report;

pub use constants::PhysicalConstants;
pub use numerics::quadrature::QuadratureSpec;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// Input outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// A quantity diverges at the requested argument.
    #[error("divergent: {0}")]
    Divergent(String),
    /// Adaptive quadrature could not reach the requested tolerance.
    /// Carries the best estimate and its error bound.
    #[error("quadrature did not converge: estimate {estimate}, error bound {bound}")]
    Convergence { estimate: f64, bound: f64 },
    /// A mode count would exceed the 64-bit representable range.
    #[error("count overflow: {0}")]
    Overflow(String),
    /// A parameter combination hits a singular point of a formula.
    #[error("singular: {0}")]
    Singular(String),
    /// An input collection has the wrong number of entries.
    #[error("arity error: {0}")]
    Arity(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
