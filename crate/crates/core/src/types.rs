//! Small shared value types.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::Error;

/// A closed volume interval `[lo, hi]`; `hi` may be infinite. Evaluation at
/// `lo == 0` is a boundary case handled by the profiles themselves.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Self {
        Self { lo, hi }
    }

    pub fn contains(&self, v: f64) -> bool {
        v >= self.lo && v <= self.hi
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// The product manifolds with named certified bounds, plus a catch-all for
/// bounds assembled from caller-supplied certificates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ProductId {
    S2xR2,
    S2xR3,
    S3xR2,
    Generic,
}

impl ProductId {
    /// The three products with built-in certified bounds.
    pub const NAMED: [ProductId; 3] = [ProductId::S2xR2, ProductId::S2xR3, ProductId::S3xR2];

    /// Sphere-factor dimension m of S^m x R^n.
    pub fn sphere_dim(&self) -> Option<u32> {
        match self {
            ProductId::S2xR2 | ProductId::S2xR3 => Some(2),
            ProductId::S3xR2 => Some(3),
            ProductId::Generic => None,
        }
    }

    /// Euclidean-factor dimension n of S^m x R^n.
    pub fn euclidean_dim(&self) -> Option<u32> {
        match self {
            ProductId::S2xR2 | ProductId::S3xR2 => Some(2),
            ProductId::S2xR3 => Some(3),
            ProductId::Generic => None,
        }
    }
}

impl fmt::Display for ProductId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ProductId::S2xR2 => "s2xr2",
            ProductId::S2xR3 => "s2xr3",
            ProductId::S3xR2 => "s3xr2",
            ProductId::Generic => "generic",
        };
        f.write_str(s)
    }
}

impl FromStr for ProductId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "s2xr2" => Ok(ProductId::S2xR2),
            "s2xr3" => Ok(ProductId::S2xR3),
            "s3xr2" => Ok(ProductId::S3xR2),
            "generic" => Ok(ProductId::Generic),
            other => Err(Error::Domain(format!(
                "unknown product id '{other}' (expected s2xr2, s2xr3, or s3xr2)"
            ))),
        }
    }
}
