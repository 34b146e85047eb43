//! Hyperbolic worldline of a uniformly accelerated observer and the
//! time-dependent Doppler shift it induces on plane waves.
//!
//! The observer moves along z with constant proper acceleration a > 0,
//! following z² − c²t² = c⁴/a² in the right wedge z > c|t|. A plane wave of
//! lab frequency ω and propagation sign ε = ±1 is seen at proper time τ with
//! the exponentially evolving frequency ω′(τ) = ω·exp(−ε·aτ/c) and
//! accumulated phase φ(τ) = (ωc/a)·exp(−ε·aτ/c).
//!
//! Phase sign convention: φ(τ) as defined here is positive for both
//! propagation directions and satisfies dφ/dτ = −ε·ω′(τ). Spectral moduli
//! downstream are insensitive to simultaneous conjugation of the whole
//! amplitude; the vacuum spectral integrands attach exp(−iε·φ) so that both
//! directions give the same spectrum.

use crate::error::{Error, Result};
use crate::units::PhysicalConstants;

/// Propagation sign ε = ±1 of a plane wave along the boost axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WaveDirection {
    /// Wave moving in the +z direction (K = +ω/c, ε = +1).
    PlusZ,
    /// Wave moving in the −z direction (K = −ω/c, ε = −1).
    MinusZ,
}

impl WaveDirection {
    /// The sign ε as a float.
    pub fn sign(self) -> f64 {
        match self {
            WaveDirection::PlusZ => 1.0,
            WaveDirection::MinusZ => -1.0,
        }
    }
}

impl std::fmt::Display for WaveDirection {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            WaveDirection::PlusZ => write!(f, "+1"),
            WaveDirection::MinusZ => write!(f, "-1"),
        }
    }
}

impl std::str::FromStr for WaveDirection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "+1" | "1" | "plus" => Ok(WaveDirection::PlusZ),
            "-1" | "minus" => Ok(WaveDirection::MinusZ),
            other => Err(Error::domain(format!(
                "direction must be +1 or -1, got {other:?}"
            ))),
        }
    }
}

/// A Minkowski plane-wave mode: angular frequency ω > 0 and propagation
/// sign. The implied wavenumber is K = ε·ω/c.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlaneWaveMode {
    omega: f64,
    direction: WaveDirection,
}

impl PlaneWaveMode {
    pub fn new(omega: f64, direction: WaveDirection) -> Result<Self> {
        if !omega.is_finite() || omega <= 0.0 {
            return Err(Error::domain(format!(
                "mode frequency must be positive and finite, got {omega}"
            )));
        }
        Ok(PlaneWaveMode { omega, direction })
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn direction(&self) -> WaveDirection {
        self.direction
    }

    /// Wavenumber K = ε·ω/c.
    pub fn wavenumber(&self, consts: &PhysicalConstants) -> f64 {
        self.direction.sign() * self.omega / consts.c
    }
}

/// Spacetime point (t, z) on the accelerated trajectory.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WorldlinePoint {
    pub lab_time: f64,
    pub position: f64,
}

/// Uniformly accelerated observer: proper acceleration a > 0 plus the
/// constants fixing the unit system.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AcceleratedWorldline {
    accel: f64,
    consts: PhysicalConstants,
}

impl AcceleratedWorldline {
    pub fn new(accel: f64, consts: PhysicalConstants) -> Result<Self> {
        if !accel.is_finite() || accel <= 0.0 {
            return Err(Error::domain(format!(
                "proper acceleration must be positive and finite, got {accel}"
            )));
        }
        Ok(AcceleratedWorldline { accel, consts })
    }

    pub fn accel(&self) -> f64 {
        self.accel
    }

    pub fn consts(&self) -> &PhysicalConstants {
        &self.consts
    }

    /// Lab-frame velocity as a function of lab time,
    /// v(t) = at/√(1 + (at/c)²).
    pub fn lab_velocity_at_lab_time(&self, t: f64) -> f64 {
        let at_over_c = self.accel * t / self.consts.c;
        self.accel * t / (1.0 + at_over_c * at_over_c).sqrt()
    }

    /// Lab-frame velocity as a function of proper time, v(τ) = c·tanh(aτ/c).
    pub fn lab_velocity_at_proper_time(&self, tau: f64) -> f64 {
        self.consts.c * (self.accel * tau / self.consts.c).tanh()
    }

    /// Hyperbolic trajectory t(τ) = (c/a)sinh(aτ/c), z(τ) = (c²/a)cosh(aτ/c).
    pub fn worldline_point(&self, tau: f64) -> WorldlinePoint {
        let c = self.consts.c;
        let u = self.accel * tau / c;
        WorldlinePoint {
            lab_time: c / self.accel * u.sinh(),
            position: c * c / self.accel * u.cosh(),
        }
    }

    /// Instantaneous frequency ω′(τ) = ω·exp(−ε·aτ/c) attributed to the mode
    /// by the accelerated observer.
    pub fn doppler_frequency(&self, tau: f64, mode: &PlaneWaveMode) -> f64 {
        let u = self.accel * tau / self.consts.c;
        mode.omega() * (-mode.direction().sign() * u).exp()
    }

    /// Accumulated phase φ(τ) = (ωc/a)·exp(−ε·aτ/c), the antiderivative of
    /// the Doppler frequency with dφ/dτ = −ε·ω′(τ).
    pub fn doppler_phase(&self, tau: f64, mode: &PlaneWaveMode) -> f64 {
        mode.omega() * self.consts.c / self.accel * (-mode.direction().sign() * self.accel * tau
            / self.consts.c)
            .exp()
    }
}
