//! Tube comparison functions for product spaces.
//!
//! For a compact m-manifold M of volume vol_M, small regions in M x R^n that
//! spread along the compact factor look like tubes M x D for a Euclidean
//! domain D, whose boundary measure is vol_M times the Euclidean perimeter.
//! Optimizing D gives the power law F(v) = vol_M^(1/n) gamma_n v^((n-1)/n),
//! the yardstick against which the tube-type lower bound is calibrated.

use crate::error::{Error, Result};
use crate::geom;
use crate::profiles::ProfileFn;

/// The power law F(v) = C v^((n-1)/n) with C = vol_M^(1/n) gamma_n.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TubeFunction {
    pub vol_m: f64,
    pub n: u32,
    pub coefficient: f64,
}

impl TubeFunction {
    pub fn evaluate(&self, v: f64) -> f64 {
        let nf = f64::from(self.n);
        self.coefficient * v.powf((nf - 1.0) / nf)
    }

    /// The same power law as a profile-shaped function on (0, infinity).
    pub fn as_profile(&self) -> Result<ProfileFn> {
        let nf = f64::from(self.n);
        ProfileFn::power_law(
            format!(
                "tube comparison C v^({}/{}) with C = {:.6}",
                self.n - 1,
                self.n,
                self.coefficient
            ),
            self.coefficient,
            (nf - 1.0) / nf,
        )
    }
}

/// Build the tube comparison function for volume vol_M and Euclidean factor
/// dimension n >= 2.
pub fn tube_function(vol_m: f64, n: u32) -> Result<TubeFunction> {
    if !(vol_m > 0.0) || !vol_m.is_finite() {
        return Err(Error::Domain(format!(
            "compact-factor volume must be positive and finite, got {vol_m}"
        )));
    }
    let gamma = geom::euclidean_constant(n)?;
    Ok(TubeFunction {
        vol_m,
        n,
        coefficient: vol_m.powf(1.0 / f64::from(n)) * gamma,
    })
}
