//! Numerical verification of the certified inequalities.
//!
//! The workhorse is [`dominates`]: sample `f - g` on a uniform grid, locate
//! the worst margin, refine the three-point bracket around it at four times
//! the resolution for three rounds, and pass only if the margin stays
//! strictly positive throughout. [`check_monotone`] and
//! [`check_renormalized_concavity`] verify the two shape hypotheses the
//! comparison arguments rely on. [`figure_data`] emits the six named curve
//! pairs (fig1..fig6) as plot-ready rows, and [`run_claim`] dispatches a
//! registry of named claims covering every interval inequality behind the
//! certified product bounds.

use serde::Serialize;

use crate::bounds::{certified_bound, product_certificate, ProductCertificate};
use crate::error::{Error, Result};
use crate::geom;
use crate::profiles::{cylinder_profile, sphere_profile, ProfileFn, SphereGeometry};
use crate::types::{Interval, ProductId};

/// Minimum grid size accepted by the interval checks.
pub const MIN_SAMPLES: usize = 256;

/// Absolute slack for monotonicity checks.
pub const MONOTONE_SLACK: f64 = 1e-9;

/// Scale-relative slack for concavity checks (applied to max |J|).
pub const CONCAVITY_SLACK: f64 = 1e-6;

/// Relative tolerance for maximum-location checks.
pub const MAX_LOCATION_TOL: f64 = 1e-3;

/// Relative slack for seam handoffs between adjacent certified segments.
pub const SEAM_SLACK: f64 = 5e-3;

/// Outcome of one numeric verification.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub claim_id: String,
    pub interval: Interval,
    pub samples: usize,
    /// Minimum of f - g over the grid and all refinement rounds.
    pub min_margin: f64,
    pub min_margin_location: f64,
    /// Minimum of (f - g)/g over the evaluated points with g > 0.
    pub relative_min_margin: f64,
    pub passed: bool,
    pub tolerance_used: f64,
    pub note: Option<String>,
}

impl std::fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} {}: min margin {:.6e} at v = {:.6} (relative {:.3e}) over {}, {} samples",
            if self.passed { "PASS" } else { "FAIL" },
            self.claim_id,
            self.min_margin,
            self.min_margin_location,
            self.relative_min_margin,
            self.interval,
            self.samples
        )?;
        if let Some(note) = &self.note {
            write!(f, " — {note}")?;
        }
        Ok(())
    }
}

fn grid(interval: Interval, n: usize) -> impl Iterator<Item = f64> {
    let Interval { lo, hi } = interval;
    let last = n - 1;
    (0..n).map(move |i| {
        if i == last {
            hi
        } else {
            lo + (hi - lo) * (i as f64) / (last as f64)
        }
    })
}

fn failed_evaluation(
    claim_id: &str,
    interval: Interval,
    samples: usize,
    v: f64,
    err: &Error,
) -> VerificationReport {
    VerificationReport {
        claim_id: claim_id.to_string(),
        interval,
        samples,
        min_margin: f64::NAN,
        min_margin_location: v,
        relative_min_margin: f64::NAN,
        passed: false,
        tolerance_used: 0.0,
        note: Some(format!("evaluation failed at v = {v}: {err}")),
    }
}

fn check_interval_and_samples(interval: Interval, samples: usize) -> Result<()> {
    if !(interval.lo > 0.0) || !(interval.hi > interval.lo) || !interval.hi.is_finite() {
        return Err(Error::Domain(format!(
            "verification interval must satisfy 0 < lo < hi < inf, got {interval}"
        )));
    }
    if samples < MIN_SAMPLES {
        return Err(Error::Domain(format!(
            "at least {MIN_SAMPLES} samples are required, got {samples}"
        )));
    }
    Ok(())
}

/// Verify `f(v) > g(v)` strictly across the interval.
///
/// A uniform grid of `base_samples` points locates the minimum margin; the
/// three-point bracket around the minimizer is then re-sampled at four times
/// the local resolution for three rounds. The report is returned even when
/// the claim fails; an evaluation error inside the interval produces a
/// failed report naming the offending volume.
pub fn dominates(
    f: &ProfileFn,
    g: &ProfileFn,
    interval: Interval,
    base_samples: usize,
    claim_id: &str,
) -> Result<VerificationReport> {
    check_interval_and_samples(interval, base_samples)?;

    let mut points: Vec<(f64, f64)> = Vec::with_capacity(base_samples);
    let mut min_margin = f64::INFINITY;
    let mut min_location = interval.lo;
    let mut min_relative = f64::INFINITY;

    let mut absorb = |v: f64, fv: f64, gv: f64| {
        let margin = fv - gv;
        if margin < min_margin {
            min_margin = margin;
            min_location = v;
        }
        if gv > 0.0 {
            min_relative = min_relative.min(margin / gv);
        }
    };

    for v in grid(interval, base_samples.max(2)) {
        let fv = match f.evaluate(v) {
            Ok(x) => x,
            Err(e) => return Ok(failed_evaluation(claim_id, interval, base_samples, v, &e)),
        };
        let gv = match g.evaluate(v) {
            Ok(x) => x,
            Err(e) => return Ok(failed_evaluation(claim_id, interval, base_samples, v, &e)),
        };
        absorb(v, fv, gv);
        points.push((v, fv - gv));
    }

    // Three refinement rounds around the current minimizer, each at four
    // times the previous resolution (nine points across the bracket).
    let idx = points
        .iter()
        .enumerate()
        .min_by(|a, b| a.1 .1.total_cmp(&b.1 .1))
        .map(|(i, _)| i)
        .unwrap_or(0);
    let mut lo = points[idx.saturating_sub(1)].0;
    let mut hi = points[(idx + 1).min(points.len() - 1)].0;
    for _ in 0..3 {
        if !(hi > lo) {
            break;
        }
        let mut local: Vec<(f64, f64)> = Vec::with_capacity(9);
        for v in grid(Interval::new(lo, hi), 9) {
            let fv = match f.evaluate(v) {
                Ok(x) => x,
                Err(e) => return Ok(failed_evaluation(claim_id, interval, base_samples, v, &e)),
            };
            let gv = match g.evaluate(v) {
                Ok(x) => x,
                Err(e) => return Ok(failed_evaluation(claim_id, interval, base_samples, v, &e)),
            };
            absorb(v, fv, gv);
            local.push((v, fv - gv));
        }
        let k = local
            .iter()
            .enumerate()
            .min_by(|a, b| a.1 .1.total_cmp(&b.1 .1))
            .map(|(i, _)| i)
            .unwrap_or(0);
        lo = local[k.saturating_sub(1)].0;
        hi = local[(k + 1).min(local.len() - 1)].0;
    }

    Ok(VerificationReport {
        claim_id: claim_id.to_string(),
        interval,
        samples: base_samples,
        min_margin,
        min_margin_location: min_location,
        relative_min_margin: min_relative,
        passed: min_margin > 0.0,
        tolerance_used: 0.0,
        note: None,
    })
}

/// Verify the profile is nondecreasing across the interval, within absolute
/// slack [`MONOTONE_SLACK`] (constant stretches count as nondecreasing).
pub fn check_monotone(
    p: &ProfileFn,
    interval: Interval,
    samples: usize,
    claim_id: &str,
) -> Result<VerificationReport> {
    check_interval_and_samples(interval, samples)?;

    let mut prev: Option<(f64, f64)> = None;
    let mut min_diff = f64::INFINITY;
    let mut min_location = interval.lo;
    let mut max_abs: f64 = 0.0;
    for v in grid(interval, samples) {
        let val = match p.evaluate(v) {
            Ok(x) => x,
            Err(e) => return Ok(failed_evaluation(claim_id, interval, samples, v, &e)),
        };
        max_abs = max_abs.max(val.abs());
        if let Some((_, prev_val)) = prev {
            let diff = val - prev_val;
            if diff < min_diff {
                min_diff = diff;
                min_location = v;
            }
        }
        prev = Some((v, val));
    }

    Ok(VerificationReport {
        claim_id: claim_id.to_string(),
        interval,
        samples,
        min_margin: min_diff,
        min_margin_location: min_location,
        relative_min_margin: if max_abs > 0.0 { min_diff / max_abs } else { 0.0 },
        passed: min_diff >= -MONOTONE_SLACK,
        tolerance_used: MONOTONE_SLACK,
        note: None,
    })
}

/// Verify the renormalized profile J = p^(d/(d-1)) is concave on the grid:
/// discrete second differences stay below [`CONCAVITY_SLACK`] times max |J|,
/// and the consequence p(v)/v^((d-1)/d) is nonincreasing within the same
/// scale-relative slack.
pub fn check_renormalized_concavity(
    p: &ProfileFn,
    ambient_dim: u32,
    interval: Interval,
    samples: usize,
    claim_id: &str,
) -> Result<VerificationReport> {
    check_interval_and_samples(interval, samples)?;
    if ambient_dim < 2 {
        return Err(Error::Domain(format!(
            "ambient dimension must be >= 2, got {ambient_dim}"
        )));
    }

    let d = f64::from(ambient_dim);
    let q = d / (d - 1.0);
    let mut vs = Vec::with_capacity(samples);
    let mut js = Vec::with_capacity(samples);
    let mut ratios = Vec::with_capacity(samples);
    for v in grid(interval, samples) {
        let val = match p.evaluate(v) {
            Ok(x) => x,
            Err(e) => return Ok(failed_evaluation(claim_id, interval, samples, v, &e)),
        };
        vs.push(v);
        js.push(val.powf(q));
        ratios.push(val / v.powf((d - 1.0) / d));
    }

    let j_scale = js.iter().fold(0.0_f64, |m, &x| m.max(x.abs()));
    let r_scale = ratios.iter().fold(0.0_f64, |m, &x| m.max(x.abs()));
    let j_slack = CONCAVITY_SLACK * j_scale;
    let r_slack = CONCAVITY_SLACK * r_scale;

    // Worst convexity violation: largest second difference of J, and the
    // largest increase of the ratio p/v^((d-1)/d).
    let mut min_margin = f64::INFINITY;
    let mut min_location = vs[0];
    for i in 1..samples - 1 {
        let second = js[i + 1] - 2.0 * js[i] + js[i - 1];
        let margin = j_slack - second;
        if margin < min_margin {
            min_margin = margin;
            min_location = vs[i];
        }
    }
    for i in 0..samples - 1 {
        let increase = ratios[i + 1] - ratios[i];
        let margin = r_slack - increase;
        if margin < min_margin {
            min_margin = margin;
            min_location = vs[i + 1];
        }
    }

    Ok(VerificationReport {
        claim_id: claim_id.to_string(),
        interval,
        samples,
        min_margin,
        min_margin_location: min_location,
        relative_min_margin: if j_scale > 0.0 { min_margin / j_scale } else { 0.0 },
        passed: min_margin > 0.0,
        tolerance_used: CONCAVITY_SLACK,
        note: Some(format!(
            "second-difference slack {j_slack:.3e}, ratio slack {r_slack:.3e}"
        )),
    })
}

/// One row of figure data.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct FigureRow {
    pub v: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
}

/// The curve pair behind one of the six named figures.
#[derive(Debug, Clone)]
pub struct FigureSpec {
    pub id: u8,
    pub description: String,
    pub interval: Interval,
    pub lhs: ProfileFn,
    pub rhs: ProfileFn,
}

/// The displayed forward power-law coefficients (truncated, hence slightly
/// conservative against the pair-derived values).
fn displayed_forward(product: ProductId) -> Result<(f64, f64)> {
    match product {
        ProductId::S2xR2 => Ok((12.32, 0.5)),
        ProductId::S3xR2 => Ok((15.26, 0.5)),
        ProductId::S2xR3 => Ok((10.3, 2.0 / 3.0)),
        ProductId::Generic => Err(Error::Domain(
            "no displayed forward coefficient for generic products".into(),
        )),
    }
}

/// Published comparison value for the reference-profile maximum location.
fn displayed_max_location(product: ProductId) -> Result<f64> {
    match product {
        ProductId::S2xR2 => Ok(290.69),
        ProductId::S3xR2 => Ok(198.4),
        ProductId::S2xR3 => Ok(2388.2),
        ProductId::Generic => Err(Error::Domain(
            "no displayed maximum location for generic products".into(),
        )),
    }
}

/// The imported transfer curve for a named product: factor times the scaled
/// cylinder profile.
fn transfer_profile(cert: &ProductCertificate) -> Result<ProfileFn> {
    cylinder_profile(cert.import.cylinder_dim, cert.import.cylinder_scale)?
        .scaled_by(cert.import.factor)
}

/// The headline reference curve: factor times the scaled-sphere profile.
fn headline_reference(cert: &ProductCertificate) -> Result<ProfileFn> {
    reference_sphere(cert)?.scaled_by(cert.headline.factor)
}

fn reference_sphere(cert: &ProductCertificate) -> Result<ProfileFn> {
    sphere_profile(&SphereGeometry::new(
        cert.headline.sphere_dim,
        cert.headline.sphere_scale,
    )?)
}

fn forward_law(cert: &ProductCertificate) -> Result<ProfileFn> {
    let (coefficient, exponent) = displayed_forward(cert.product)?;
    ProfileFn::power_law(
        format!("{coefficient} * v^{exponent}"),
        coefficient,
        exponent,
    )
}

/// The figure id pairs: odd figures compare the transfer curve to the
/// headline reference over the middle range; even figures compare the
/// displayed forward power law to the same reference past the seam.
pub fn figure_spec(id: u8) -> Result<FigureSpec> {
    let (product, interval, forward): (ProductId, Interval, bool) = match id {
        1 => (ProductId::S2xR2, Interval::new(4.0, 65.0), false),
        2 => (ProductId::S2xR2, Interval::new(65.0, 291.0), true),
        3 => (ProductId::S3xR2, Interval::new(1.0, 60.0), false),
        4 => (ProductId::S3xR2, Interval::new(60.0, 200.0), true),
        5 => (ProductId::S2xR3, Interval::new(13.0, 140.0), false),
        6 => (ProductId::S2xR3, Interval::new(140.0, 2389.0), true),
        other => {
            return Err(Error::Domain(format!(
                "figure id must be 1..=6, got {other}"
            )))
        }
    };
    let cert = product_certificate(product)?;
    let rhs = headline_reference(&cert)?;
    let lhs = if forward {
        forward_law(&cert)?
    } else {
        transfer_profile(&cert)?
    };
    let description = format!(
        "{} vs {} on {interval} ({product})",
        lhs.name(),
        rhs.name()
    );
    Ok(FigureSpec {
        id,
        description,
        interval,
        lhs,
        rhs,
    })
}

/// Emit the curve pair of a named figure as rows sorted by volume.
pub fn figure_data(id: u8, samples: usize) -> Result<Vec<FigureRow>> {
    let spec = figure_spec(id)?;
    let n = samples.max(2);
    let mut rows = Vec::with_capacity(n);
    for v in grid(spec.interval, n) {
        let lhs = spec.lhs.evaluate(v)?;
        let rhs = spec.rhs.evaluate(v)?;
        rows.push(FigureRow {
            v,
            lhs,
            rhs,
            margin: lhs - rhs,
        });
    }
    Ok(rows)
}

/// All registered claim ids, in deterministic execution order.
pub fn claim_ids() -> &'static [&'static str] {
    &[
        "fig1",
        "fig2",
        "fig3",
        "fig4",
        "fig5",
        "fig6",
        "anchor-s2xr2",
        "anchor-s3xr2",
        "anchor-s2xr3",
        "factor-s2xr2",
        "factor-s3xr2",
        "factor-s2xr3",
        "seam-s2xr2",
        "seam-s3xr2",
        "seam-s2xr3",
        "maxloc-s2xr2",
        "maxloc-s3xr2",
        "maxloc-s2xr3",
        "mono-transfer-s2xr2",
        "mono-transfer-s3xr2",
        "mono-transfer-s2xr3",
        "mono-bound-s2xr2",
        "concave-sphere-s2xr2",
        "concave-sphere-s3xr2",
        "concave-sphere-s2xr3",
        "concave-cylinder-ball",
        "headline-s2xr2",
        "headline-s3xr2",
        "headline-s2xr3",
    ]
}

/// Run one registered claim. `samples` controls grid-based claims (point
/// claims ignore it). Unknown ids are usage errors.
pub fn run_claim(claim_id: &str, samples: usize) -> Result<VerificationReport> {
    let product_for = |suffix: &str| -> Result<ProductId> { suffix.parse() };
    if let Some(n) = claim_id
        .strip_prefix("fig")
        .and_then(|s| s.parse::<u8>().ok())
    {
        let spec = figure_spec(n)?;
        return dominates(&spec.lhs, &spec.rhs, spec.interval, samples, claim_id);
    }
    if let Some(suffix) = claim_id.strip_prefix("anchor-") {
        return anchor_claim(product_for(suffix)?, claim_id);
    }
    if let Some(suffix) = claim_id.strip_prefix("factor-") {
        return factor_claim(product_for(suffix)?, claim_id);
    }
    if let Some(suffix) = claim_id.strip_prefix("seam-") {
        return seam_claim(product_for(suffix)?, claim_id);
    }
    if let Some(suffix) = claim_id.strip_prefix("maxloc-") {
        return max_location_claim(product_for(suffix)?, claim_id);
    }
    if let Some(suffix) = claim_id.strip_prefix("mono-transfer-") {
        let cert = product_certificate(product_for(suffix)?)?;
        let transfer = transfer_profile(&cert)?;
        return check_monotone(&transfer, Interval::new(1.0, 500.0), samples, claim_id);
    }
    if claim_id == "mono-bound-s2xr2" {
        let bound = certified_bound(ProductId::S2xR2)?;
        let envelope = ProfileFn::new(
            "certified lower bound for s2xr2",
            f64::INFINITY,
            false,
            false,
            move |v| bound.evaluate(v),
        );
        return check_monotone(&envelope, Interval::new(0.5, 300.0), samples, claim_id);
    }
    if let Some(suffix) = claim_id.strip_prefix("concave-sphere-") {
        let cert = product_certificate(product_for(suffix)?)?;
        let geometry = SphereGeometry::new(cert.headline.sphere_dim, cert.headline.sphere_scale)?;
        let total = geometry.total_volume();
        let sphere = sphere_profile(&geometry)?;
        return check_renormalized_concavity(
            &sphere,
            cert.headline.sphere_dim,
            Interval::new(total * 1e-3, total * 0.988),
            samples,
            claim_id,
        );
    }
    if claim_id == "concave-cylinder-ball" {
        let cyl = cylinder_profile(3, 1.0)?;
        return check_renormalized_concavity(
            &cyl,
            4,
            Interval::new(0.5, 16.0),
            samples,
            claim_id,
        );
    }
    if let Some(suffix) = claim_id.strip_prefix("headline-") {
        return headline_claim(product_for(suffix)?, samples, claim_id);
    }
    Err(Error::Domain(format!(
        "unknown claim id '{claim_id}'; known ids: {}",
        claim_ids().join(", ")
    )))
}

/// The anchor inequality at the backward seam: the imported transfer value
/// at v0 strictly exceeds k * v0^((d-1)/d).
fn anchor_claim(product: ProductId, claim_id: &str) -> Result<VerificationReport> {
    let cert = product_certificate(product)?;
    let total = f64::from(cert.total_dim());
    let transfer = transfer_profile(&cert)?;
    let v0 = cert.anchor.v0;
    let lhs = transfer.evaluate(v0)?;
    let rhs = cert.anchor.k * v0.powf((total - 1.0) / total);
    let margin = lhs - rhs;
    Ok(VerificationReport {
        claim_id: claim_id.to_string(),
        interval: Interval::new(v0, v0),
        samples: 1,
        min_margin: margin,
        min_margin_location: v0,
        relative_min_margin: margin / rhs,
        passed: margin > 0.0,
        tolerance_used: 0.0,
        note: Some(format!(
            "transfer value {lhs:.6} vs anchor requirement {rhs:.6} at v = {v0}"
        )),
    })
}

/// The backward factor inequality: k / gamma_d reaches the headline factor.
fn factor_claim(product: ProductId, claim_id: &str) -> Result<VerificationReport> {
    let cert = product_certificate(product)?;
    let gamma = geom::euclidean_constant(cert.total_dim())?;
    let derived = cert.anchor.k / gamma;
    let margin = derived - cert.headline.factor;
    Ok(VerificationReport {
        claim_id: claim_id.to_string(),
        interval: Interval::new(cert.anchor.v0, cert.anchor.v0),
        samples: 1,
        min_margin: margin,
        min_margin_location: cert.anchor.v0,
        relative_min_margin: margin / cert.headline.factor,
        passed: margin > 0.0,
        tolerance_used: 0.0,
        note: Some(format!(
            "derived factor {derived:.6} vs stated factor {}",
            cert.headline.factor
        )),
    })
}

/// Seam consistency at the certified pair volume x0: both adjacent segments
/// clear the headline reference there, and the pair value y0 never exceeds
/// the left-side transfer certificate by more than [`SEAM_SLACK`].
fn seam_claim(product: ProductId, claim_id: &str) -> Result<VerificationReport> {
    let cert = product_certificate(product)?;
    let x0 = cert.pair.x0;
    let y0 = cert.pair.y0;
    let left = transfer_profile(&cert)?.evaluate(x0)?;
    let reference = headline_reference(&cert)?.evaluate(x0)?;
    let left_margin = left - reference;
    let right_margin = y0 - reference;
    let handoff_margin = (1.0 + SEAM_SLACK) * left - y0;
    let (min_margin, which) = [
        (left_margin, "left-side margin"),
        (right_margin, "right-side margin"),
        (handoff_margin, "handoff slack"),
    ]
    .into_iter()
    .min_by(|a, b| a.0.total_cmp(&b.0))
    .unwrap();
    Ok(VerificationReport {
        claim_id: claim_id.to_string(),
        interval: Interval::new(x0, x0),
        samples: 2,
        min_margin,
        min_margin_location: x0,
        relative_min_margin: min_margin / reference,
        passed: min_margin > 0.0,
        tolerance_used: SEAM_SLACK,
        note: Some(format!(
            "transfer {left:.6} from the left, pair value {y0} from the right, reference \
             {reference:.6}; binding part: {which}"
        )),
    })
}

/// Golden-section search for the maximum of a unimodal profile.
fn golden_section_max(p: &ProfileFn, mut lo: f64, mut hi: f64) -> Result<(f64, f64)> {
    const INV_PHI: f64 = 0.618_033_988_749_894_8;
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = p.evaluate(x1)?;
    let mut f2 = p.evaluate(x2)?;
    for _ in 0..200 {
        if hi - lo < 1e-10 * hi {
            break;
        }
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = p.evaluate(x2)?;
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = p.evaluate(x1)?;
        }
    }
    let mid = 0.5 * (lo + hi);
    Ok((mid, p.evaluate(mid)?))
}

/// Past-maximum continuation: the headline reference attains its maximum at
/// half the total volume (located numerically, compared to the closed-form
/// half-volume within [`MAX_LOCATION_TOL`]), and the displayed forward power
/// law is nondecreasing through that region.
fn max_location_claim(product: ProductId, claim_id: &str) -> Result<VerificationReport> {
    let cert = product_certificate(product)?;
    let geometry = SphereGeometry::new(cert.headline.sphere_dim, cert.headline.sphere_scale)?;
    let half = geometry.total_volume() / 2.0;
    let sphere = sphere_profile(&geometry)?;
    let (located, _) = golden_section_max(&sphere, 0.5 * half, 1.5 * half)?;
    let rel_err = (located - half).abs() / half;
    let location_margin = MAX_LOCATION_TOL - rel_err;

    let law = forward_law(&cert)?;
    let monotone = check_monotone(
        &law,
        Interval::new(0.9 * half, 1.1 * half),
        MIN_SAMPLES,
        claim_id,
    )?;

    let displayed = displayed_max_location(product)?;
    let displayed_err = (half - displayed).abs() / displayed;
    Ok(VerificationReport {
        claim_id: claim_id.to_string(),
        interval: Interval::new(0.5 * half, 1.5 * half),
        samples: MIN_SAMPLES,
        min_margin: location_margin,
        min_margin_location: located,
        relative_min_margin: location_margin / MAX_LOCATION_TOL,
        passed: location_margin > 0.0 && monotone.passed,
        tolerance_used: MAX_LOCATION_TOL,
        note: Some(format!(
            "maximum located at v = {located:.4}; half-volume formula {half:.4}; published \
             comparison value {displayed} ({:.2}% apart); forward law monotone: {}",
            100.0 * displayed_err,
            monotone.passed
        )),
    })
}

/// The headline inequality: the assembled certified bound dominates
/// factor times the scaled-sphere reference from the anchor volume to the
/// reference's total volume.
fn headline_claim(product: ProductId, samples: usize, claim_id: &str) -> Result<VerificationReport> {
    let cert = product_certificate(product)?;
    let bound = certified_bound(product)?;
    let lhs = ProfileFn::new(
        format!("certified lower bound for {product}"),
        f64::INFINITY,
        false,
        false,
        move |v| bound.evaluate(v),
    );
    let rhs = headline_reference(&cert)?;
    let geometry = SphereGeometry::new(cert.headline.sphere_dim, cert.headline.sphere_scale)?;
    let interval = Interval::new(cert.anchor.v0, geometry.total_volume());
    dominates(&lhs, &rhs, interval, samples, claim_id)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::profiles::euclidean_profile;
    use approx::assert_relative_eq;

    const TEST_SAMPLES: usize = 1024;

    #[test]
    fn figure_margins_match_the_frozen_oracle_values() {
        // (figure, relative minimum margin from the frozen reference run)
        let frozen = [
            (1u8, 4.27e-2),
            (2, 0.61e-2),
            (3, 11.39e-2),
            (4, 0.82e-2),
            (5, 3.91e-2),
            (6, 0.73e-2),
        ];
        for (id, expect) in frozen {
            let report = run_claim(&format!("fig{id}"), TEST_SAMPLES).unwrap();
            assert!(report.passed, "fig{id} failed: {report}");
            assert_relative_eq!(report.relative_min_margin, expect, max_relative = 0.05);
        }
    }

    #[test]
    fn dominance_is_antisymmetric_on_the_first_figure_pair() {
        let spec = figure_spec(1).unwrap();
        let reversed = dominates(&spec.rhs, &spec.lhs, spec.interval, 256, "reversed").unwrap();
        assert!(!reversed.passed);
        assert!(reversed.min_margin < 0.0);
    }

    #[test]
    fn reflexive_dominance_fails_with_zero_margin() {
        let p = ProfileFn::power_law("p", 2.0, 0.5).unwrap();
        let report = dominates(&p, &p, Interval::new(1.0, 10.0), 256, "self").unwrap();
        assert!(!report.passed);
        assert_eq!(report.min_margin, 0.0);
    }

    #[test]
    fn refinement_never_raises_the_coarse_minimum() {
        let spec = figure_spec(2).unwrap();
        let report = dominates(&spec.lhs, &spec.rhs, spec.interval, 256, "fig2").unwrap();
        let mut coarse = f64::INFINITY;
        for v in grid(spec.interval, 256) {
            let margin = spec.lhs.evaluate(v).unwrap() - spec.rhs.evaluate(v).unwrap();
            coarse = coarse.min(margin);
        }
        assert!(report.min_margin <= coarse + 1e-12);
    }

    #[test]
    fn dominates_rejects_bad_grids_and_reports_evaluation_failures() {
        let p = ProfileFn::power_law("p", 2.0, 0.5).unwrap();
        let q = ProfileFn::power_law("q", 1.0, 0.5).unwrap();
        assert!(dominates(&p, &q, Interval::new(1.0, 10.0), 100, "few").is_err());
        assert!(dominates(&p, &q, Interval::new(-1.0, 10.0), 256, "neg").is_err());

        // A profile with a bounded domain fails evaluation past its end.
        let bounded = ProfileFn::new("bounded", 5.0, true, false, |v| Ok(v));
        let report = dominates(&bounded, &q, Interval::new(1.0, 10.0), 256, "esc").unwrap();
        assert!(!report.passed);
        assert!(report.note.unwrap().contains("evaluation failed"));
    }

    #[test]
    fn monotone_check_examples() {
        let euclid = euclidean_profile(2).unwrap();
        let report =
            check_monotone(&euclid, Interval::new(0.1, 100.0), 512, "euclid").unwrap();
        assert!(report.passed);

        let sphere = sphere_profile(&SphereGeometry::new(4, 4.7).unwrap()).unwrap();
        let report =
            check_monotone(&sphere, Interval::new(1.0, 560.0), 512, "sphere").unwrap();
        assert!(!report.passed, "sphere profile decreases past half volume");
        assert!(report.min_margin_location > 290.0);

        let cyl = cylinder_profile(3, 2.0).unwrap();
        let report = check_monotone(&cyl, Interval::new(1.0, 500.0), 512, "cyl").unwrap();
        assert!(report.passed, "slab constancy counts as nondecreasing");
    }

    #[test]
    fn concavity_check_examples() {
        let s2 = sphere_profile(&SphereGeometry::new(2, 1.0).unwrap()).unwrap();
        let report = check_renormalized_concavity(
            &s2,
            2,
            Interval::new(0.5, 12.0),
            512,
            "s2",
        )
        .unwrap();
        assert!(report.passed, "I^2 = v(4pi - v) is exactly concave: {report}");

        let euclid = euclidean_profile(3).unwrap();
        let report = check_renormalized_concavity(
            &euclid,
            3,
            Interval::new(0.5, 50.0),
            512,
            "euclid",
        )
        .unwrap();
        assert!(report.passed, "linear renormalization passes: {report}");
    }

    #[test]
    fn concavity_check_catches_a_convex_profile() {
        let convex = ProfileFn::power_law("convex", 1.0, 0.9).unwrap();
        let report = check_renormalized_concavity(
            &convex,
            2,
            Interval::new(1.0, 100.0),
            512,
            "convex",
        )
        .unwrap();
        assert!(!report.passed, "J = v^1.8 is convex and must fail");
    }

    #[test]
    fn figure_data_rows_are_sorted_and_consistent() {
        let rows = figure_data(1, 128).unwrap();
        assert_eq!(rows.len(), 128);
        assert_eq!(rows[0].v, 4.0);
        assert_eq!(rows[rows.len() - 1].v, 65.0);
        for pair in rows.windows(2) {
            assert!(pair[1].v > pair[0].v);
        }
        for row in &rows {
            assert_relative_eq!(row.margin, row.lhs - row.rhs, max_relative = 1e-15);
            assert!(row.margin > 0.0);
        }
        assert!(figure_data(7, 10).is_err());
        assert!(figure_data(0, 10).is_err());
    }

    #[test]
    fn anchor_claims_pass_with_frozen_margins() {
        let tight = run_claim("anchor-s2xr3", 256).unwrap();
        assert!(tight.passed);
        // The tightest inequality in the whole assembly: 4.2e-4 relative.
        assert!(tight.relative_min_margin > 1e-4 && tight.relative_min_margin < 1e-3);

        let s3 = run_claim("anchor-s3xr2", 256).unwrap();
        assert!(s3.passed);
        assert_relative_eq!(s3.relative_min_margin, 2.79e-2, max_relative = 0.05);

        let s2 = run_claim("anchor-s2xr2", 256).unwrap();
        assert!(s2.passed);
        assert_relative_eq!(s2.relative_min_margin, 2.09e-2, max_relative = 0.05);
    }

    #[test]
    fn factor_claims_pass_with_closed_form_margins() {
        for (id, expect) in [
            ("factor-s2xr2", 0.0365),
            ("factor-s3xr2", 0.0226),
            ("factor-s2xr3", 0.0426),
        ] {
            let report = run_claim(id, 256).unwrap();
            assert!(report.passed);
            assert_relative_eq!(report.min_margin, expect, max_relative = 0.02);
        }
    }

    #[test]
    fn seam_claims_pass_including_the_conservative_pair() {
        for id in ["seam-s2xr2", "seam-s3xr2", "seam-s2xr3"] {
            let report = run_claim(id, 256).unwrap();
            assert!(report.passed, "{report}");
        }
        // The s3xr2 pair is far below its transfer; the binding part there is
        // a genuine margin, not the handoff slack.
        let report = run_claim("seam-s3xr2", 256).unwrap();
        assert!(report.note.unwrap().contains("pair value 118.245"));
    }

    #[test]
    fn max_location_claims_match_the_half_volume_formula() {
        let report = run_claim("maxloc-s2xr2", 256).unwrap();
        assert!(report.passed, "{report}");
        assert_relative_eq!(report.min_margin_location, 290.6934, max_relative = 1e-3);

        let report = run_claim("maxloc-s3xr2", 256).unwrap();
        assert!(report.passed, "{report}");
        assert_relative_eq!(report.min_margin_location, 197.979, max_relative = 1e-3);
        // The published location is a rounding artifact 0.21% off the formula.
        assert!(report.note.unwrap().contains("0.21% apart"));

        let report = run_claim("maxloc-s2xr3", 256).unwrap();
        assert!(report.passed, "{report}");
        assert_relative_eq!(report.min_margin_location, 2388.2, max_relative = 1e-3);
    }

    #[test]
    fn monotone_and_concavity_claims_pass() {
        for id in [
            "mono-transfer-s2xr2",
            "mono-transfer-s3xr2",
            "mono-transfer-s2xr3",
            "mono-bound-s2xr2",
            "concave-sphere-s2xr2",
            "concave-sphere-s3xr2",
            "concave-sphere-s2xr3",
            "concave-cylinder-ball",
        ] {
            let report = run_claim(id, 512).unwrap();
            assert!(report.passed, "{report}");
        }
    }

    #[test]
    fn headline_claims_pass() {
        for id in ["headline-s2xr2", "headline-s3xr2", "headline-s2xr3"] {
            let report = run_claim(id, 512).unwrap();
            assert!(report.passed, "{report}");
        }
    }

    #[test]
    fn registry_is_complete_and_rejects_unknown_ids() {
        let ids = claim_ids();
        assert_eq!(ids.len(), 29);
        let mut unique: Vec<&str> = ids.to_vec();
        unique.sort_unstable();
        unique.dedup();
        assert_eq!(unique.len(), ids.len());
        assert!(run_claim("fig9", 256).is_err());
        assert!(run_claim("nonsense", 256).is_err());
    }

    #[test]
    fn report_display_is_one_line_per_claim() {
        let report = run_claim("factor-s2xr2", 256).unwrap();
        let line = report.to_string();
        assert!(line.starts_with("PASS factor-s2xr2"));
        assert!(!line.contains('\n'));
    }
}
