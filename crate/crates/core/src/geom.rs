//! Closed-form geometric constants.
//!
//! Volumes of unit round spheres and balls only ever need the gamma function
//! at integer and half-integer arguments, where it has exact factorial
//! expressions. Evaluating those directly (instead of a general gamma
//! approximation) keeps every constant correct to the last few ulps and
//! removes quadrature error from downstream formulas.

use crate::error::{Error, Result};

/// Gamma(x) for x = `twice_x` / 2 > 0, from the exact identities
/// Gamma(k) = (k-1)! and Gamma(k + 1/2) = (2k)! / (4^k k!) * sqrt(pi).
fn gamma_half_integer(twice_x: u32) -> f64 {
    assert!(twice_x > 0, "gamma argument must be positive");
    if twice_x % 2 == 0 {
        factorial(twice_x / 2 - 1)
    } else {
        let k = (twice_x - 1) / 2;
        factorial(2 * k) / (4f64.powi(k as i32) * factorial(k)) * std::f64::consts::PI.sqrt()
    }
}

fn factorial(k: u32) -> f64 {
    (2..=k).map(f64::from).product()
}

/// pi^(`twice_p` / 2), split into an exact integer power times sqrt(pi) so
/// half-integer exponents do not go through a general `powf`.
fn pi_half_power(twice_p: u32) -> f64 {
    let int_part = std::f64::consts::PI.powi((twice_p / 2) as i32);
    if twice_p % 2 == 0 {
        int_part
    } else {
        int_part * std::f64::consts::PI.sqrt()
    }
}

/// Volume of the unit round m-sphere: V_m = 2 pi^((m+1)/2) / Gamma((m+1)/2).
pub fn sphere_volume(m: u32) -> f64 {
    2.0 * pi_half_power(m + 1) / gamma_half_integer(m + 1)
}

/// Volume of the unit n-ball: omega_n = pi^(n/2) / Gamma(n/2 + 1).
pub fn ball_volume(n: u32) -> f64 {
    pi_half_power(n) / gamma_half_integer(n + 2)
}

/// Euclidean isoperimetric constant gamma_n = V_{n-1} / omega_n^((n-1)/n),
/// the coefficient in the profile of R^n: I(v) = gamma_n v^((n-1)/n).
pub fn euclidean_constant(n: u32) -> Result<f64> {
    if n < 2 {
        return Err(Error::Domain(format!(
            "euclidean constant needs dimension n >= 2, got {n}"
        )));
    }
    let nf = f64::from(n);
    Ok(sphere_volume(n - 1) / ball_volume(n).powf((nf - 1.0) / nf))
}
