//! The isoperimetric profile of Euclidean space.
//!
//! Balls are the isoperimetric regions of R^n, so the profile is the pure
//! power law I(v) = gamma_n v^((n-1)/n) with the dimensional constant
//! gamma_n = V_{n-1} / omega_n^((n-1)/n). Its renormalization
//! J(v) = I(v)^(n/(n-1)) = gamma_n^(n/(n-1)) v is linear, hence concave.

use crate::error::Result;
use crate::geom;
use crate::profiles::ProfileFn;

/// The Euclidean isoperimetric constant gamma_n (n >= 2).
pub fn euclidean_constant(n: u32) -> Result<f64> {
    geom::euclidean_constant(n)
}

/// The profile of R^n on (0, inf): nondecreasing, renormalized-concave.
pub fn euclidean_profile(n: u32) -> Result<ProfileFn> {
    let gamma = geom::euclidean_constant(n)?;
    let exponent = (f64::from(n) - 1.0) / f64::from(n);
    ProfileFn::power_law(format!("euclidean R^{n} profile"), gamma, exponent)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    #[test]
    fn plane_profile_matches_circle_closed_form() {
        let p = euclidean_profile(2).unwrap();
        // I(v) = 2 sqrt(pi v): a disk of area v has circumference 2 sqrt(pi v).
        assert_relative_eq!(p.evaluate(1.0).unwrap(), 2.0 * PI.sqrt(), max_relative = 1e-14);
        // Doubling by homogeneity: I(4) = 2 I(1).
        assert_relative_eq!(
            p.evaluate(4.0).unwrap(),
            2.0 * p.evaluate(1.0).unwrap(),
            max_relative = 1e-14
        );
    }

    #[test]
    fn three_space_profile_at_unit_volume_is_gamma_3() {
        let p = euclidean_profile(3).unwrap();
        assert_relative_eq!(
            p.evaluate(1.0).unwrap(),
            4.835975862049409,
            max_relative = 1e-13
        );
    }

    #[test]
    fn profile_flags_and_domain() {
        let p = euclidean_profile(4).unwrap();
        assert!(p.monotone_nondecreasing());
        assert!(p.renormalized_concave());
        assert!(p.domain_max().is_infinite());
    }

    #[test]
    fn dimension_below_two_is_rejected() {
        assert!(euclidean_profile(1).is_err());
    }
}
