//! Error type shared across the toolkit.

use thiserror::Error;

/// Errors produced by profile construction, evaluation, bound assembly, and
/// verification.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    /// An argument lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A numerical routine produced an unusable result (non-finite value,
    /// broken monotonicity, failed inversion).
    #[error("numeric error: {0}")]
    Numeric(String),

    /// Quadrature failed to reach its target accuracy. `context` names the
    /// integral (and its parameter, e.g. the family parameter eta);
    /// `residual` is the last level-to-level difference.
    #[error("quadrature did not converge{}: residual {residual:.3e} after {levels} levels", fmt_context(.context))]
    Quadrature {
        context: String,
        residual: f64,
        levels: u32,
    },

    /// A bound construction was rejected because its hypotheses fail.
    #[error("rejected: {0}")]
    Rejected(String),
}

fn fmt_context(context: &str) -> String {
    if context.is_empty() {
        String::new()
    } else {
        format!(" ({context})")
    }
}

impl Error {
    /// Attach or replace the context of a quadrature error; other variants
    /// are returned unchanged.
    pub fn with_quad_context(self, context: impl Into<String>) -> Self {
        match self {
            Error::Quadrature {
                residual, levels, ..
            } => Error::Quadrature {
                context: context.into(),
                residual,
                levels,
            },
            other => other,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
