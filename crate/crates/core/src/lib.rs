//! Numerical toolkit for isoperimetric profiles of product manifolds.
//!
//! The library computes exact isoperimetric profiles of round spheres S^m,
//! Euclidean space R^n, and cylinders S^m x R (all with optional metric
//! scaling), assembles certified piecewise lower bounds for profiles of
//! products M^m x R^n, verifies the dominance inequalities behind those
//! bounds by adaptive sampling, and evaluates the resulting Yamabe-constant
//! lower bounds.
//!
//! Module map:
//! - [`geom`]: closed-form sphere/ball volumes and Euclidean isoperimetric
//!   constants via exact half-integer gamma values.
//! - [`quad`]: tanh-sinh (double-exponential) quadrature, robust to
//!   inverse-square-root endpoint singularities.
//! - [`profiles`]: evaluable profiles (sphere, Euclidean, cylinder ball
//!   family, tube area law) and the metric-scaling transform.
//! - [`bounds`]: tube-comparison lower bound with threshold, forward
//!   power-law and backward scaled-reference extensions, and the certified
//!   piecewise bounds for the three named products.
//! - [`verify`]: dominance / monotonicity / renormalized-concavity checks,
//!   the six standard comparison figures, and the claim registry.
//! - [`yamabe`]: sphere Yamabe constants, the product comparison ratio, and
//!   the named constant reports.

pub mod bounds;
pub mod error;
pub mod geom;
pub mod profiles;
pub mod quad;
pub mod types;
pub mod verify;
pub mod yamabe;

pub use error::{Error, Result};
pub use types::{Interval, ProductId};
