//! Evaluable isoperimetric profiles.
//!
//! A profile maps an enclosed volume to the least boundary area among
//! regions of that volume. The module provides exact profiles for Euclidean
//! space, round spheres, and sphere-line cylinders S^m x R, the tube area
//! law for products with a Euclidean factor, and the metric-scaling
//! transform that turns a profile of (M, g) into the profile of (M, mu g).

pub mod cylinder;
pub mod euclidean;
pub mod sphere;
pub mod tube;

pub use cylinder::{cylinder_family, cylinder_profile, CylinderBallFamily, FamilySample};
pub use euclidean::{euclidean_constant, euclidean_profile};
pub use sphere::{sphere_ball, sphere_profile, SphereGeometry};
pub use tube::{tube_function, TubeFunction};

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Outcome of a profile evaluation. `boundary` marks the continuous
/// extension at volume exactly 0 or exactly the total volume, where the area
/// is 0 by limit rather than by computation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Evaluation {
    pub area: f64,
    pub boundary: bool,
}

type EvalClosure = Arc<dyn Fn(f64) -> Result<f64> + Send + Sync>;

/// A named, evaluable volume -> area function with domain and shape
/// metadata. Instances are immutable and cheap to clone (the evaluation
/// closure is shared), so they are safe to use from multiple threads.
#[derive(Clone)]
pub struct ProfileFn {
    name: String,
    domain_max: f64,
    monotone_nondecreasing: bool,
    renormalized_concave: bool,
    eval: EvalClosure,
}

impl ProfileFn {
    /// Build a profile from its evaluation closure. The closure is only
    /// called for volumes strictly inside `(0, domain_max)`; boundary and
    /// out-of-domain handling is centralized in [`ProfileFn::evaluate_full`].
    pub fn new(
        name: impl Into<String>,
        domain_max: f64,
        monotone_nondecreasing: bool,
        renormalized_concave: bool,
        eval: impl Fn(f64) -> Result<f64> + Send + Sync + 'static,
    ) -> Self {
        Self {
            name: name.into(),
            domain_max,
            monotone_nondecreasing,
            renormalized_concave,
            eval: Arc::new(eval),
        }
    }

    /// Pure power law `coefficient * v^exponent` on `(0, inf)`. The
    /// renormalized-concave flag is set when the exponent does not exceed
    /// (d-1)/d for every ambient dimension d >= 2, i.e. exponent <= 1/2 is
    /// always safe; callers with a specific ambient dimension may override.
    pub fn power_law(name: impl Into<String>, coefficient: f64, exponent: f64) -> Result<Self> {
        if !(coefficient > 0.0) || !coefficient.is_finite() {
            return Err(Error::Domain(format!(
                "power law coefficient must be positive and finite, got {coefficient}"
            )));
        }
        if !(0.0..1.0).contains(&exponent) {
            return Err(Error::Domain(format!(
                "power law exponent must lie in (0, 1), got {exponent}"
            )));
        }
        Ok(Self::new(
            name,
            f64::INFINITY,
            true,
            true,
            move |v| Ok(coefficient * v.powf(exponent)),
        ))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Upper end of the volume domain `(0, domain_max]`; infinite for
    /// unbounded profiles.
    pub fn domain_max(&self) -> f64 {
        self.domain_max
    }

    /// Whether sampled evaluations are guaranteed nondecreasing in volume.
    pub fn monotone_nondecreasing(&self) -> bool {
        self.monotone_nondecreasing
    }

    /// Whether I(v)^(d/(d-1)) is concave for the ambient dimension d the
    /// profile was built for.
    pub fn renormalized_concave(&self) -> bool {
        self.renormalized_concave
    }

    /// Replace the display name, keeping everything else.
    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Evaluate, returning the area alone.
    pub fn evaluate(&self, v: f64) -> Result<f64> {
        Ok(self.evaluate_full(v)?.area)
    }

    /// Evaluate with the boundary flag. Volume exactly 0 (and exactly the
    /// total volume, when finite) returns area 0 by continuous extension and
    /// sets `boundary`; anything outside `[0, domain_max]` is a domain error.
    pub fn evaluate_full(&self, v: f64) -> Result<Evaluation> {
        if v.is_nan() {
            return Err(Error::Domain(format!(
                "volume must be a number for profile '{}'",
                self.name
            )));
        }
        if v == 0.0 || (self.domain_max.is_finite() && v == self.domain_max) {
            return Ok(Evaluation {
                area: 0.0,
                boundary: true,
            });
        }
        if v < 0.0 || v > self.domain_max {
            return Err(Error::Domain(format!(
                "volume {v} outside the domain (0, {}] of profile '{}'",
                self.domain_max, self.name
            )));
        }
        let area = (self.eval)(v)?;
        if !area.is_finite() {
            return Err(Error::Numeric(format!(
                "profile '{}' produced a non-finite area at v = {v}",
                self.name
            )));
        }
        Ok(Evaluation {
            area,
            boundary: false,
        })
    }

    /// The profile multiplied by a positive constant, e.g. the 0.99 or 0.886
    /// comparison factors. Positive multiples preserve both shape flags.
    pub fn scaled_by(&self, factor: f64) -> Result<ProfileFn> {
        if !(factor > 0.0) || !factor.is_finite() {
            return Err(Error::Domain(format!(
                "profile multiplier must be positive and finite, got {factor}"
            )));
        }
        let inner = self.clone();
        Ok(ProfileFn {
            name: format!("{factor} * {}", self.name),
            domain_max: self.domain_max,
            monotone_nondecreasing: self.monotone_nondecreasing,
            renormalized_concave: self.renormalized_concave,
            eval: Arc::new(move |v| Ok(factor * (inner.eval)(v)?)),
        })
    }
}

impl fmt::Debug for ProfileFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ProfileFn")
            .field("name", &self.name)
            .field("domain_max", &self.domain_max)
            .field("monotone_nondecreasing", &self.monotone_nondecreasing)
            .field("renormalized_concave", &self.renormalized_concave)
            .finish_non_exhaustive()
    }
}

/// Metric-scaling transform: for a profile of (M, g) with ambient dimension
/// d, the profile of (M, mu g) is v -> mu^((d-1)/2) * I(mu^(-d/2) v), and the
/// volume domain stretches by mu^(d/2). Shape flags are preserved.
pub fn scale_profile(p: &ProfileFn, ambient_dim: u32, mu: f64) -> Result<ProfileFn> {
    if ambient_dim < 2 {
        return Err(Error::Domain(format!(
            "scaling needs ambient dimension >= 2, got {ambient_dim}"
        )));
    }
    if !(mu > 0.0) || !mu.is_finite() {
        return Err(Error::Domain(format!(
            "metric multiplier must be positive and finite, got {mu}"
        )));
    }
    if mu == 1.0 {
        return Ok(p.clone());
    }
    let d = f64::from(ambient_dim);
    let area_factor = mu.powf((d - 1.0) / 2.0);
    let volume_factor = mu.powf(d / 2.0);
    let inner = p.clone();
    let domain_max = p.domain_max * volume_factor;
    Ok(ProfileFn {
        name: format!("{} scaled by mu={mu}", p.name),
        domain_max,
        monotone_nondecreasing: p.monotone_nondecreasing,
        renormalized_concave: p.renormalized_concave,
        eval: Arc::new(move |v| {
            // Clamp away the final-ulp excess that v/volume_factor can pick
            // up at the very top of the stretched domain.
            let w = (v / volume_factor).min(inner.domain_max);
            Ok(area_factor * inner.evaluate_full(w)?.area)
        }),
    })
}
