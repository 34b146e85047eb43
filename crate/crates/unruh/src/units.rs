//! Physical constants, unit systems, and the acceleration-temperature
//! calculators.
//!
//! The headline relation is T = ħa/(2πkc): a uniformly accelerated detector
//! in vacuum responds as if immersed in a thermal bath at that temperature.
//! This module also carries the Newtonian helpers (surface gravity,
//! Schwarzschild radius) needed to evaluate that temperature at the surface
//! of the earth, the sun, and a solar-mass black hole.

use crate::error::{Error, Result};

/// Fundamental constants in whatever unit system the caller picked.
///
/// Use [`PhysicalConstants::si`] for CODATA 2018 SI values, or
/// [`PhysicalConstants::natural`] for ħ = c = k = 1 (the cleanest system for
/// all the spectral modules).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    /// Reduced Planck constant (J·s in SI).
    pub hbar: f64,
    /// Speed of light (m/s in SI).
    pub c: f64,
    /// Boltzmann constant (J/K in SI).
    pub k_boltzmann: f64,
    /// Newtonian gravitational constant (m³/(kg·s²) in SI).
    pub g_newton: f64,
}

impl PhysicalConstants {
    /// CODATA 2018 values.
    pub fn si() -> Self {
        PhysicalConstants {
            hbar: 1.054_571_817e-34,
            c: 299_792_458.0,
            k_boltzmann: 1.380_649e-23,
            g_newton: 6.674_30e-11,
        }
    }

    /// Natural units: ħ = c = k = 1 exactly. G is set to 1 as well but no
    /// spectral module uses it; gravitational helpers only make sense in SI.
    pub fn natural() -> Self {
        PhysicalConstants {
            hbar: 1.0,
            c: 1.0,
            k_boltzmann: 1.0,
            g_newton: 1.0,
        }
    }
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        PhysicalConstants::natural()
    }
}

/// Reference body data for the temperature table.
///
/// Masses and radii are the IAU nominal values: earth mass and equatorial
/// radius (5.9722e24 kg, 6378.1 km), solar mass and photospheric radius
/// (1.98892e30 kg, 695700 km). The black-hole row uses one solar mass with
/// the Schwarzschild radius as its surface.
pub mod bodies {
    pub const EARTH_MASS_KG: f64 = 5.9722e24;
    pub const EARTH_RADIUS_M: f64 = 6.3781e6;
    pub const SUN_MASS_KG: f64 = 1.98892e30;
    pub const SUN_RADIUS_M: f64 = 6.957e8;
}

/// One row of the temperature table: a named body, the Newtonian surface
/// acceleration, and the corresponding temperature.
#[derive(Debug, Clone, PartialEq)]
pub struct BodyRow {
    pub name: &'static str,
    pub mass_kg: f64,
    pub radius_m: f64,
    pub acceleration: f64,
    pub temperature: f64,
}

fn require_positive(value: f64, what: &str) -> Result<()> {
    if !value.is_finite() || value <= 0.0 {
        return Err(Error::domain(format!(
            "{what} must be positive and finite, got {value}"
        )));
    }
    Ok(())
}

/// Temperature ħa/(2πkc) of the thermal bath seen by an observer with proper
/// acceleration `a`.
pub fn unruh_temperature(accel: f64, consts: &PhysicalConstants) -> Result<f64> {
    require_positive(accel, "acceleration")?;
    Ok(consts.hbar * accel / (2.0 * std::f64::consts::PI * consts.k_boltzmann * consts.c))
}

/// Newtonian gravitational acceleration GM/r² of a test mass at distance `r`
/// from a mass `M`.
pub fn surface_gravity(mass: f64, radius: f64, consts: &PhysicalConstants) -> Result<f64> {
    require_positive(mass, "mass")?;
    require_positive(radius, "radius")?;
    Ok(consts.g_newton * mass / (radius * radius))
}

/// Schwarzschild radius 2GM/c².
pub fn schwarzschild_radius(mass: f64, consts: &PhysicalConstants) -> Result<f64> {
    require_positive(mass, "mass")?;
    Ok(2.0 * consts.g_newton * mass / (consts.c * consts.c))
}

/// Temperature table for the earth, the sun, and a one-solar-mass black hole
/// whose surface is taken at the Schwarzschild radius. Acceleration is the
/// Newtonian GM/r² in every row.
pub fn exercise_table(consts: &PhysicalConstants) -> Vec<BodyRow> {
    let mut rows = Vec::with_capacity(3);
    for (name, mass, radius) in [
        ("earth", bodies::EARTH_MASS_KG, bodies::EARTH_RADIUS_M),
        ("sun", bodies::SUN_MASS_KG, bodies::SUN_RADIUS_M),
    ] {
        let a = surface_gravity(mass, radius, consts).expect("table data is positive");
        let t = unruh_temperature(a, consts).expect("surface gravity is positive");
        rows.push(BodyRow {
            name,
            mass_kg: mass,
            radius_m: radius,
            acceleration: a,
            temperature: t,
        });
    }
    let r_s = schwarzschild_radius(bodies::SUN_MASS_KG, consts).expect("solar mass is positive");
    let a = surface_gravity(bodies::SUN_MASS_KG, r_s, consts).expect("radius is positive");
    let t = unruh_temperature(a, consts).expect("surface gravity is positive");
    rows.push(BodyRow {
        name: "black_hole",
        mass_kg: bodies::SUN_MASS_KG,
        radius_m: r_s,
        acceleration: a,
        temperature: t,
    });
    rows
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    // Reference values recomputed from the CODATA 2018 constants with mpmath
    // at 50 digits.
    const T_ONE_GEE: f64 = 3.9766098362829508e-20;
    const T_SOLAR_SURFACE: f64 = 1.111073705232193e-18;
    const A_EARTH: f64 = 9.7984508522433499;
    const T_EARTH: f64 = 3.9732850707801305e-20;
    const A_SUN: f64 = 274.27045807518945;
    const T_SUN: f64 = 1.1121704163844218e-18;
    const R_S_SUN: f64 = 2954.0077364910992;
    const R_S_EARTH: f64 = 8.8701028718460988e-3;
    const A_BH: f64 = 1.5212471647152805e13;
    const T_BH: f64 = 6.1686778243583025e-8;

    #[test]
    fn natural_units_invert_the_temperature_formula() {
        let c = PhysicalConstants::natural();
        let a = 2.0 * std::f64::consts::PI;
        assert_relative_eq!(unruh_temperature(a, &c).unwrap(), 1.0, epsilon = 1e-15);
    }

    #[test]
    fn temperature_of_one_gee() {
        let c = PhysicalConstants::si();
        assert_relative_eq!(
            unruh_temperature(9.80665, &c).unwrap(),
            T_ONE_GEE,
            max_relative = 1e-14
        );
    }

    #[test]
    fn temperature_of_solar_surface_gravity() {
        let c = PhysicalConstants::si();
        assert_relative_eq!(
            unruh_temperature(274.0, &c).unwrap(),
            T_SOLAR_SURFACE,
            max_relative = 1e-14
        );
    }

    #[test]
    fn rejects_nonpositive_or_nonfinite_acceleration() {
        let c = PhysicalConstants::si();
        assert!(unruh_temperature(0.0, &c).is_err());
        assert!(unruh_temperature(-9.8, &c).is_err());
        assert!(unruh_temperature(f64::NAN, &c).is_err());
        assert!(unruh_temperature(f64::INFINITY, &c).is_err());
    }

    #[test]
    fn earth_surface_gravity() {
        let c = PhysicalConstants::si();
        let a = surface_gravity(bodies::EARTH_MASS_KG, bodies::EARTH_RADIUS_M, &c).unwrap();
        assert_relative_eq!(a, A_EARTH, max_relative = 1e-14);
    }

    #[test]
    fn sun_surface_gravity() {
        let c = PhysicalConstants::si();
        let a = surface_gravity(bodies::SUN_MASS_KG, bodies::SUN_RADIUS_M, &c).unwrap();
        assert_relative_eq!(a, A_SUN, max_relative = 1e-14);
    }

    #[test]
    fn unit_inputs_return_g() {
        let c = PhysicalConstants::si();
        assert_relative_eq!(
            surface_gravity(1.0, 1.0, &c).unwrap(),
            c.g_newton,
            epsilon = 0.0
        );
    }

    #[test]
    fn surface_gravity_rejects_nonpositive_inputs() {
        let c = PhysicalConstants::si();
        assert!(surface_gravity(-1.0, 1.0, &c).is_err());
        assert!(surface_gravity(1.0, 0.0, &c).is_err());
    }

    #[test]
    fn schwarzschild_radii() {
        let c = PhysicalConstants::si();
        assert_relative_eq!(
            schwarzschild_radius(bodies::SUN_MASS_KG, &c).unwrap(),
            R_S_SUN,
            max_relative = 1e-14
        );
        assert_relative_eq!(
            schwarzschild_radius(bodies::EARTH_MASS_KG, &c).unwrap(),
            R_S_EARTH,
            max_relative = 1e-14
        );
        // mass chosen so the radius comes out at exactly one metre
        let m = c.c * c.c / (2.0 * c.g_newton);
        assert_relative_eq!(schwarzschild_radius(m, &c).unwrap(), 1.0, epsilon = 1e-15);
        assert!(schwarzschild_radius(0.0, &c).is_err());
    }

    #[test]
    fn exercise_table_rows() {
        let c = PhysicalConstants::si();
        let rows = exercise_table(&c);
        assert_eq!(rows.len(), 3);
        assert_eq!(rows[0].name, "earth");
        assert_relative_eq!(rows[0].temperature, T_EARTH, max_relative = 1e-14);
        assert_eq!(rows[1].name, "sun");
        assert_relative_eq!(rows[1].temperature, T_SUN, max_relative = 1e-14);
        assert_eq!(rows[2].name, "black_hole");
        assert_relative_eq!(rows[2].acceleration, A_BH, max_relative = 1e-14);
        assert_relative_eq!(rows[2].temperature, T_BH, max_relative = 1e-14);
    }

    #[test]
    fn black_hole_temperature_matches_closed_form() {
        // chaining GM/r_s^2 through the temperature formula must reproduce
        // hbar c^3/(8 pi G M k)
        let c = PhysicalConstants::si();
        for mass in [1.0e20, bodies::SUN_MASS_KG, 4.0e40] {
            let r_s = schwarzschild_radius(mass, &c).unwrap();
            let a = surface_gravity(mass, r_s, &c).unwrap();
            let t = unruh_temperature(a, &c).unwrap();
            let closed = c.hbar * c.c.powi(3)
                / (8.0 * std::f64::consts::PI * c.g_newton * mass * c.k_boltzmann);
            assert_relative_eq!(t, closed, max_relative = 1e-12);
        }
    }

    proptest! {
        #[test]
        fn temperature_is_linear_in_acceleration(
            a in 1e-6f64..1e6, lambda in 1e-3f64..1e3
        ) {
            let c = PhysicalConstants::si();
            let lhs = unruh_temperature(lambda * a, &c).unwrap();
            let rhs = lambda * unruh_temperature(a, &c).unwrap();
            prop_assert!((lhs - rhs).abs() <= 1e-15 * lhs.abs().max(rhs.abs()));
        }

        #[test]
        fn doubling_radius_quarters_gravity(
            m in 1e10f64..1e35, r in 1e3f64..1e12
        ) {
            let c = PhysicalConstants::si();
            let g1 = surface_gravity(m, r, &c).unwrap();
            let g2 = surface_gravity(m, 2.0 * r, &c).unwrap();
            prop_assert!((g1 / 4.0 - g2).abs() <= 1e-15 * g1);
        }
    }
}
