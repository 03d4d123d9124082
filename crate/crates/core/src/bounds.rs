//! Certified lower bounds for profiles of products M^m x R^n.
//!
//! Three constructors produce the raw bounds:
//! - [`tube_lower_bound`]: for volumes above a computable threshold v0, the
//!   profile of M x R^n dominates alpha^(2-1/n) C v^((n-1)/n), where
//!   C = vol(M)^(1/n) gamma_n is the tube comparison coefficient.
//! - [`forward_extension`]: a certified point (x0, y0) with y0 <= I(x0)
//!   propagates forward as (y0/x0^((n-1)/n)) v^((n-1)/n) for v >= x0.
//! - [`backward_extension`]: a certified anchor I(v0) > k v0^((d-1)/d) in
//!   ambient dimension d propagates backward as (k/gamma_d) I_ref(v) for
//!   v <= v0 against a renormalized-concave reference profile.
//!
//! [`certified_bound`] assembles these, together with the imported transfer
//! inequalities of [`imported_inequalities`], into one piecewise bound per
//! named product, re-deriving every certified pair before trusting it.

use std::fmt;

use crate::error::{Error, Result};
use crate::geom;
use crate::profiles::{cylinder_profile, sphere_profile, ProfileFn, SphereGeometry};
use crate::types::{Interval, ProductId};

/// Tube-comparison lower bound: valid only for v > v0.
#[derive(Debug, Clone, serde::Serialize)]
pub struct TubeLowerBound {
    pub alpha: f64,
    pub vol_m: f64,
    pub n: u32,
    /// k = alpha vol(M) / h(alpha vol(M)).
    pub k: f64,
    /// v0 = (C / (k (1-alpha)^2))^n.
    pub v0: f64,
    /// coefficient = alpha^(2-1/n) C, strictly below C for alpha < 1.
    pub coefficient: f64,
}

impl TubeLowerBound {
    /// The unrestricted comparison coefficient C = vol(M)^(1/n) gamma_n.
    pub fn comparison_coefficient(&self) -> f64 {
        self.coefficient / self.alpha.powf(2.0 - 1.0 / f64::from(self.n))
    }

    /// Evaluate the bound; defined only above the threshold v0.
    pub fn evaluate(&self, v: f64) -> Result<f64> {
        if !(v > self.v0) {
            return Err(Error::Domain(format!(
                "tube lower bound is valid only for v > v0 = {}, got {v}",
                self.v0
            )));
        }
        let nf = f64::from(self.n);
        Ok(self.coefficient * v.powf((nf - 1.0) / nf))
    }
}

/// Build the tube-comparison bound from a concave factor-profile lower bound
/// h with h(0) = h(vol_M) = 0 (concavity is caller-asserted and marked by the
/// renormalized-concave flag; the numeric check lives in the verify module).
pub fn tube_lower_bound(vol_m: f64, n: u32, h: &ProfileFn, alpha: f64) -> Result<TubeLowerBound> {
    if !(vol_m > 0.0) || !vol_m.is_finite() {
        return Err(Error::Domain(format!(
            "compact-factor volume must be positive and finite, got {vol_m}"
        )));
    }
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::Domain(format!(
            "alpha must lie strictly inside (0, 1), got {alpha}"
        )));
    }
    if !h.renormalized_concave() {
        return Err(Error::Domain(format!(
            "factor profile '{}' does not carry the concavity marker",
            h.name()
        )));
    }
    let gamma = geom::euclidean_constant(n)?;
    let h_at = h.evaluate(alpha * vol_m)?;
    if !(h_at > 0.0) {
        return Err(Error::Domain(format!(
            "factor profile '{}' is nonpositive at alpha * vol_M = {}",
            h.name(),
            alpha * vol_m
        )));
    }
    let nf = f64::from(n);
    let k = alpha * vol_m / h_at;
    let c = vol_m.powf(1.0 / nf) * gamma;
    let v0 = (c / (k * (1.0 - alpha) * (1.0 - alpha))).powf(nf);
    Ok(TubeLowerBound {
        alpha,
        vol_m,
        n,
        k,
        v0,
        coefficient: alpha.powf(2.0 - 1.0 / nf) * c,
    })
}

/// Nondecreasing power law `coefficient * v^exponent`; the certification
/// starts at `valid_from` (evaluation itself is pure).
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct PowerLawBound {
    pub coefficient: f64,
    pub exponent: f64,
    pub valid_from: f64,
}

impl PowerLawBound {
    pub fn evaluate(&self, v: f64) -> f64 {
        self.coefficient * v.powf(self.exponent)
    }
}

/// Propagate a certified pair y0 <= I(x0) forward: for v >= x0 the profile of
/// a product with an R^n factor dominates (y0/x0^((n-1)/n)) v^((n-1)/n).
pub fn forward_extension(x0: f64, y0: f64, n: u32) -> Result<PowerLawBound> {
    if !(x0 > 0.0 && x0.is_finite()) || !(y0 > 0.0 && y0.is_finite()) {
        return Err(Error::Domain(format!(
            "certified pair must be positive and finite, got ({x0}, {y0})"
        )));
    }
    if n < 2 {
        return Err(Error::Domain(format!(
            "Euclidean factor dimension must be >= 2, got {n}"
        )));
    }
    let exponent = (f64::from(n) - 1.0) / f64::from(n);
    Ok(PowerLawBound {
        coefficient: y0 / x0.powf(exponent),
        exponent,
        valid_from: x0,
    })
}

/// A scaled reference profile `lambda * reference` certified on an interval.
#[derive(Debug, Clone)]
pub struct ScaledReferenceBound {
    pub lambda: f64,
    pub reference: ProfileFn,
    pub valid_interval: Interval,
}

impl ScaledReferenceBound {
    pub fn evaluate(&self, v: f64) -> Result<f64> {
        if !self.valid_interval.contains(v) {
            return Err(Error::Domain(format!(
                "scaled-reference bound is certified only on {}, got {v}",
                self.valid_interval
            )));
        }
        Ok(self.lambda * self.reference.evaluate(v)?)
    }
}

/// Propagate a certified anchor I(v0) > k v0^((d-1)/d) backward: under
/// nonnegative-Ricci comparison the profile dominates (k/gamma_d) times the
/// renormalized-concave reference on (0, v0]. The interval is clamped to the
/// reference's domain when the anchor lies beyond it.
pub fn backward_extension(
    v0: f64,
    k: f64,
    total_dim: u32,
    reference: ProfileFn,
) -> Result<ScaledReferenceBound> {
    if !(v0 > 0.0 && v0.is_finite()) || !(k > 0.0 && k.is_finite()) {
        return Err(Error::Domain(format!(
            "anchor must be positive and finite, got v0 = {v0}, k = {k}"
        )));
    }
    let gamma = geom::euclidean_constant(total_dim)?;
    if k >= gamma {
        return Err(Error::Rejected(format!(
            "anchor coefficient k = {k} is not below the Euclidean constant gamma_{total_dim} = \
             {gamma}; the scaled-reference comparison would exceed the small-volume limit"
        )));
    }
    if !reference.renormalized_concave() {
        return Err(Error::Domain(format!(
            "reference profile '{}' does not carry the renormalized-concave flag",
            reference.name()
        )));
    }
    let hi = v0.min(reference.domain_max());
    Ok(ScaledReferenceBound {
        lambda: k / gamma,
        reference,
        valid_interval: Interval::new(0.0, hi),
    })
}

/// One certified bound, in any of the three shapes.
#[derive(Debug, Clone)]
pub enum BoundForm {
    Tube(TubeLowerBound),
    PowerLaw(PowerLawBound),
    ScaledReference(ScaledReferenceBound),
}

/// A bound restricted to an interval, with a human-readable derivation note.
#[derive(Debug, Clone)]
pub struct Segment {
    pub interval: Interval,
    pub form: BoundForm,
    pub provenance: String,
}

impl Segment {
    /// Evaluate the segment's bound at a volume inside its interval.
    pub fn evaluate(&self, v: f64) -> Result<f64> {
        if !self.interval.contains(v) {
            return Err(Error::Domain(format!(
                "segment {} does not cover v = {v}",
                self.interval
            )));
        }
        match &self.form {
            BoundForm::Tube(b) => b.evaluate(v),
            BoundForm::PowerLaw(b) => Ok(b.evaluate(v)),
            BoundForm::ScaledReference(b) => b.evaluate(v),
        }
    }
}

/// An assembled piecewise lower bound. Where segments overlap, evaluation
/// takes the maximum: every segment is certified, so the largest applies.
#[derive(Debug, Clone)]
pub struct PiecewiseBound {
    product: ProductId,
    segments: Vec<Segment>,
}

impl PiecewiseBound {
    pub fn product(&self) -> ProductId {
        self.product
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    /// The best certified value at volume v; a domain error when no segment
    /// covers v (the three named products cover all of (0, inf)).
    pub fn evaluate(&self, v: f64) -> Result<f64> {
        self.best_segment(v).map(|(value, _)| value)
    }

    /// The best certified value together with the segment that attains it.
    pub fn best_segment(&self, v: f64) -> Result<(f64, &Segment)> {
        if !(v > 0.0) || v.is_nan() {
            return Err(Error::Domain(format!(
                "bounds are defined for positive volumes, got {v}"
            )));
        }
        let mut best: Option<(f64, &Segment)> = None;
        for seg in &self.segments {
            if seg.interval.contains(v) {
                let val = seg.evaluate(v)?;
                if best.is_none_or(|(b, _)| val > b) {
                    best = Some((val, seg));
                }
            }
        }
        best.ok_or_else(|| {
            Error::Domain(format!(
                "no certified segment of the {} bound covers v = {v}",
                self.product
            ))
        })
    }
}

/// A transfer inequality imported as certified input:
/// I_product >= factor * I_(S^m x R, scale * (g0 + dt^2)) for all volumes.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct ImportedInequality {
    pub factor: f64,
    pub lhs_product: ProductId,
    pub cylinder_dim: u32,
    pub cylinder_scale: f64,
}

/// The three imported transfer inequalities, with exact constants.
pub fn imported_inequalities() -> [ImportedInequality; 3] {
    [
        ImportedInequality {
            factor: 1.0,
            lhs_product: ProductId::S2xR2,
            cylinder_dim: 3,
            cylinder_scale: 2.0,
        },
        ImportedInequality {
            factor: 0.99,
            lhs_product: ProductId::S3xR2,
            cylinder_dim: 4,
            cylinder_scale: 2.0_f64.powf(1.5),
        },
        ImportedInequality {
            factor: 0.99,
            lhs_product: ProductId::S2xR3,
            cylinder_dim: 4,
            cylinder_scale: 2.0_f64.powf(5.0 / 3.0),
        },
    ]
}

/// The headline comparison certified for a named product:
/// I_product(v) >= factor * I_(S^dim, scale * g0)(v).
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct HeadlineComparison {
    pub product: ProductId,
    pub factor: f64,
    pub sphere_dim: u32,
    pub sphere_scale: f64,
}

/// Backward anchor I(v0) > k v0^((d-1)/d) certified for a named product (d is
/// the product's total dimension).
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct BackwardAnchor {
    pub v0: f64,
    pub k: f64,
}

/// Certified pair y0 <= I(x0) feeding the forward extension.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct CertifiedPair {
    pub x0: f64,
    pub y0: f64,
}

/// Everything certified about one named product: the headline scaled-sphere
/// comparison, the imported cylinder transfer, the backward anchor, and the
/// forward pair.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct ProductCertificate {
    pub product: ProductId,
    pub headline: HeadlineComparison,
    pub import: ImportedInequality,
    pub anchor: BackwardAnchor,
    pub pair: CertifiedPair,
}

impl ProductCertificate {
    /// Total dimension m + n of the product.
    pub fn total_dim(&self) -> u32 {
        self.product.sphere_dim().unwrap_or(0) + self.product.euclidean_dim().unwrap_or(0)
    }
}

impl fmt::Display for ProductCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: I >= {} * I_(S^{}, {} g0)",
            self.product, self.headline.factor, self.headline.sphere_dim, self.headline.sphere_scale
        )
    }
}

/// The certificate data for one of the three named products.
pub fn product_certificate(product: ProductId) -> Result<ProductCertificate> {
    let [imp_s2xr2, imp_s3xr2, imp_s2xr3] = imported_inequalities();
    let cert = match product {
        ProductId::S2xR2 => ProductCertificate {
            product,
            headline: HeadlineComparison {
                product,
                factor: 0.886,
                sphere_dim: 4,
                sphere_scale: 4.7,
            },
            import: imp_s2xr2,
            anchor: BackwardAnchor { v0: 4.0, k: 5.5 },
            pair: CertifiedPair { x0: 65.0, y0: 99.4 },
        },
        ProductId::S3xR2 => ProductCertificate {
            product,
            headline: HeadlineComparison {
                product,
                factor: 0.91,
                sphere_dim: 5,
                sphere_scale: 2.77,
            },
            import: imp_s3xr2,
            anchor: BackwardAnchor { v0: 1.0, k: 6.5 },
            pair: CertifiedPair {
                x0: 60.0,
                y0: 118.245,
            },
        },
        ProductId::S2xR3 => ProductCertificate {
            product,
            headline: HeadlineComparison {
                product,
                factor: 0.867,
                sphere_dim: 5,
                sphere_scale: 7.5,
            },
            import: imp_s2xr3,
            anchor: BackwardAnchor { v0: 13.0, k: 6.34 },
            pair: CertifiedPair {
                x0: 140.0,
                y0: 277.8,
            },
        },
        ProductId::Generic => {
            return Err(Error::Domain(
                "no built-in certificate for generic products; use combine_pointwise with your \
                 own certified pair"
                    .into(),
            ))
        }
    };
    Ok(cert)
}

/// Combine a certified pair (x0, y0) for S^m x R^n into a two-segment bound:
/// backward against the unit total-dimension sphere with
/// lambda = y0 / (gamma_(m+n) x0^((m+n-1)/(m+n))) on (0, x0], and the forward
/// power law on [x0, inf). When x0 exceeds the unit sphere's total volume the
/// backward interval is clamped to the sphere's domain, leaving an uncovered
/// gap that evaluation reports as a domain error.
pub fn combine_pointwise(x0: f64, y0: f64, m: u32, n: u32) -> Result<PiecewiseBound> {
    if m < 2 {
        return Err(Error::Domain(format!(
            "sphere factor dimension must be >= 2, got {m}"
        )));
    }
    let total = m + n;
    let exponent = (f64::from(total) - 1.0) / f64::from(total);
    let k = y0 / x0.powf(exponent);
    let reference = sphere_profile(&SphereGeometry::new(total, 1.0)?)?;
    let backward = backward_extension(x0, k, total, reference)?;
    let clamped = backward.valid_interval.hi < x0;
    let forward = forward_extension(x0, y0, n)?;
    let segments = vec![
        Segment {
            interval: backward.valid_interval,
            provenance: format!(
                "backward scaled-reference extension from the pair ({x0}, {y0}): factor \
                 {:.6} against the unit S^{total} profile{}",
                backward.lambda,
                if clamped {
                    "; interval clamped to the reference domain"
                } else {
                    ""
                }
            ),
            form: BoundForm::ScaledReference(backward),
        },
        Segment {
            interval: Interval::new(x0, f64::INFINITY),
            provenance: format!(
                "forward power-law extension from the pair ({x0}, {y0}): {:.6} * v^({}/{})",
                forward.coefficient,
                n - 1,
                n
            ),
            form: BoundForm::PowerLaw(forward),
        },
    ];
    Ok(PiecewiseBound {
        product: ProductId::Generic,
        segments,
    })
}

/// Relative slack allowed when re-deriving a certified pair: the recomputed
/// transfer value must reach at least this fraction of the stated y0.
const PAIR_REDERIVATION_FLOOR: f64 = 0.995;

/// Assemble the certified piecewise bound for a named product.
///
/// Three segments: the backward scaled-sphere comparison up to the anchor
/// volume, the imported cylinder transfer through the middle range, and the
/// forward power law from the certified pair onward. Construction re-derives
/// the pair from the cylinder profile and rejects the assembly if the
/// recomputed value undercuts the stated y0 by more than 0.5%, and rejects
/// any anchor whose derived factor k/gamma_d fails to reach the headline
/// factor.
pub fn certified_bound(product: ProductId) -> Result<PiecewiseBound> {
    let cert = product_certificate(product)?;
    let total = cert.total_dim();
    let sphere = sphere_profile(&SphereGeometry::new(
        cert.headline.sphere_dim,
        cert.headline.sphere_scale,
    )?)?;
    let cylinder = cylinder_profile(cert.import.cylinder_dim, cert.import.cylinder_scale)?;

    let gamma_total = geom::euclidean_constant(total)?;
    let derived_factor = cert.anchor.k / gamma_total;
    if derived_factor < cert.headline.factor {
        return Err(Error::Rejected(format!(
            "derived backward factor {derived_factor} falls below the stated headline factor {}",
            cert.headline.factor
        )));
    }

    let transfer_at_x0 = cert.import.factor * cylinder.evaluate(cert.pair.x0)?;
    if transfer_at_x0 < PAIR_REDERIVATION_FLOOR * cert.pair.y0 {
        return Err(Error::Rejected(format!(
            "re-derived transfer value {transfer_at_x0} at x0 = {} undercuts the certified y0 = \
             {} by more than 0.5%",
            cert.pair.x0, cert.pair.y0
        )));
    }

    let backward = ScaledReferenceBound {
        lambda: cert.headline.factor,
        reference: sphere.clone(),
        valid_interval: Interval::new(0.0, cert.anchor.v0),
    };
    let middle = ScaledReferenceBound {
        lambda: cert.import.factor,
        reference: cylinder,
        valid_interval: Interval::new(cert.anchor.v0, cert.pair.x0),
    };
    let euclidean_dim = cert.product.euclidean_dim().ok_or_else(|| {
        Error::Domain("certified bounds exist only for products with an R^n factor".into())
    })?;
    let forward = forward_extension(cert.pair.x0, cert.pair.y0, euclidean_dim)?;
    let segments = vec![
        Segment {
            interval: backward.valid_interval,
            provenance: format!(
                "backward scaled-reference extension on (0, {}]: anchor I({}) >= {} * {}^({}/{}) \
                 gives factor {:.4}/{:.4} ~ {:.4}, carried at the stated {}",
                cert.anchor.v0,
                cert.anchor.v0,
                cert.anchor.k,
                cert.anchor.v0,
                total - 1,
                total,
                cert.anchor.k,
                gamma_total,
                derived_factor,
                cert.headline.factor
            ),
            form: BoundForm::ScaledReference(backward),
        },
        Segment {
            interval: middle.valid_interval,
            provenance: format!(
                "imported transfer: I >= {} * cylinder S^{} x R profile at scale {:.6}; \
                 dominates {} * the scaled-sphere reference across [{}, {}]",
                cert.import.factor,
                cert.import.cylinder_dim,
                cert.import.cylinder_scale,
                cert.headline.factor,
                cert.anchor.v0,
                cert.pair.x0
            ),
            form: BoundForm::ScaledReference(middle),
        },
        Segment {
            interval: Interval::new(cert.pair.x0, f64::INFINITY),
            provenance: format!(
                "forward power-law extension from the re-derived certified pair ({}, {}): \
                 {:.6} * v^{:.6}",
                cert.pair.x0, cert.pair.y0, forward.coefficient, forward.exponent
            ),
            form: BoundForm::PowerLaw(forward),
        },
    ];
    Ok(PiecewiseBound { product, segments })
}
