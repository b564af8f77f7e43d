//! Physical constants and unit systems.
//!
//! The crate works in natural units (`hbar = k_B = c = 1`) unless a caller
//! explicitly installs SI values. Keeping the defaults at unity makes the
//! closed-form test values exact and keeps dimensional mistakes visible.

use crate::{Error, Result};

/// Reduced Planck constant, Boltzmann constant and a wave speed.
///
/// The speed is context dependent: the speed of light for electromagnetic
/// cavities, a sound speed for acoustic problems.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    /// Reduced Planck constant.
    pub hbar: f64,
    /// Boltzmann constant.
    pub k_b: f64,
    /// Wave propagation speed.
    pub c: f64,
}

impl PhysicalConstants {
    /// Natural units: `hbar = k_B = c = 1`.
    pub const fn natural() -> Self {
        Self {
            hbar: 1.0,
            k_b: 1.0,
            c: 1.0,
        }
    }

    /// SI values (CODATA 2018 exact definitions), with `c` the speed of light.
    pub const fn si() -> Self {
        Self {
            hbar: 1.054_571_817e-34,
            k_b: 1.380_649e-23,
            c: 299_792_458.0,
        }
    }

    /// Same constants with the wave speed replaced, e.g. for sound.
    pub const fn with_speed(self, c: f64) -> Self {
        Self { c, ..self }
    }

    /// All constants must be strictly positive and finite.
    pub fn validate(&self) -> Result<()> {
        for (name, v) in [("hbar", self.hbar), ("k_B", self.k_b), ("c", self.c)] {
            if !(v > 0.0) || !v.is_finite() {
                return Err(Error::Domain(format!(
                    "physical constant {name} must be strictly positive, got {v}"
                )));
            }
        }
        Ok(())
    }
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        Self::natural()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn natural_units_are_unity() {
        let c = PhysicalConstants::natural();
        assert_eq!((c.hbar, c.k_b, c.c), (1.0, 1.0, 1.0));
        assert!(c.validate().is_ok());
    }

    #[test]
    fn nonpositive_constants_rejected() {
        let c = PhysicalConstants {
            hbar: 0.0,
            ..PhysicalConstants::natural()
        };
        assert!(c.validate().is_err());
        let c = PhysicalConstants {
            k_b: -1.0,
            ..PhysicalConstants::natural()
        };
        assert!(c.validate().is_err());
    }

    #[test]
    fn si_speed_of_light() {
        assert_eq!(PhysicalConstants::si().c, 299_792_458.0);
    }
}
