//! Profiles of sphere-line products S^m x R.
//!
//! The isoperimetric regions of the unit-scale product are of two kinds:
//! ball-type regions forming a one-parameter family indexed by eta in (0,pi),
//! and slabs S^m x [a,b] of constant boundary area 2 V_m. For the ball type,
//! with k = m-1 and G(t) = int_0^t sin^k,
//!
//!   area(eta)   = 2 V_{m-1} int_0^eta sin^k(y) / sqrt(1 - u^2) dy,
//!   volume(eta) = 2 V_{m-1} int_0^eta G(y) u / sqrt(1 - u^2) dy,
//!
//! where u = u(eta, y) = h(eta) / h(y) and h(t) = sin^k(t) / G(t). Since h is
//! strictly decreasing, u climbs to 1 as y -> eta and the integrands carry an
//! integrable (eta - y)^(-1/2) endpoint singularity, which the tanh-sinh
//! quadrature absorbs without substitution.
//!
//! The family's volume is not monotone over all of (0,pi): it rises to a
//! maximum at an interior eta (about 2.27 for m = 3) and decays afterwards,
//! with the ball boundary area already above the slab area at the maximum.
//! Construction therefore tabulates the grid, truncates at the volume argmax,
//! and verifies strict monotonicity of the retained prefix; every volume
//! beyond the last sample belongs to the slab branch.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::geom;
use crate::profiles::sphere::sin_power_integral;
use crate::profiles::{scale_profile, ProfileFn};
use crate::quad::{Node, TanhSinh};

/// Default eta-grid resolution for family construction.
pub const DEFAULT_ETA_GRID: usize = 512;

/// One tabulated ball-type candidate: parameter, enclosed volume, boundary
/// area, all on the unit-scale product.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct FamilySample {
    pub eta: f64,
    pub volume: f64,
    pub area: f64,
}

/// Tabulated ball-type family for S^m x R plus the slab branch, truncated at
/// the family's volume maximum. Immutable once built; safe to share.
#[derive(Debug, Clone)]
pub struct CylinderBallFamily {
    dim: u32,
    scale: f64,
    samples: Vec<FamilySample>,
    slab_area: f64,
}

/// Integrand kernel for one value of eta.
struct BallKernel {
    k: i32,
    eta: f64,
    h_eta: f64,
}

/// h(t) = sin^k(t) / int_0^t sin^k; strictly decreasing on (0, pi).
fn h_ratio(k: u32, t: f64) -> f64 {
    t.sin().powi(k as i32) / sin_power_integral(k, t)
}

/// h'(t) = sin^(k-1)(t) (k cos(t) G(t) - sin^(k+1)(t)) / G(t)^2.
fn h_ratio_prime(k: u32, t: f64) -> f64 {
    let (s, c) = t.sin_cos();
    let g = sin_power_integral(k, t);
    s.powi(k as i32 - 1) * (f64::from(k) * c * g - s.powi(k as i32 + 1)) / (g * g)
}

impl BallKernel {
    fn new(k: u32, eta: f64) -> Self {
        Self {
            k: k as i32,
            eta,
            h_eta: h_ratio(k, eta),
        }
    }

    /// (u, 1 - u^2) at height y, with `dist` = eta - y supplied by the
    /// quadrature node to keep the endpoint distance exact. The difference
    /// h(y) - h(eta) cancels catastrophically as y -> eta, so below a
    /// relative threshold it is replaced by the midpoint-rule value
    /// -h'(eta - dist/2) * dist.
    fn u_terms(&self, y: f64, dist: f64) -> (f64, f64) {
        let k = self.k as u32;
        let hy = h_ratio(k, y);
        let mut diff = hy - self.h_eta;
        if diff < 1e-5 * self.h_eta {
            diff = -h_ratio_prime(k, self.eta - 0.5 * dist) * dist;
        }
        let one_minus_u_sq = diff * (hy + self.h_eta) / (hy * hy);
        (self.h_eta / hy, one_minus_u_sq)
    }

    fn area_integrand(&self, n: Node) -> f64 {
        let y = n.x;
        if y < 1e-30 {
            return 0.0;
        }
        let (_, om) = self.u_terms(y, n.from_b);
        if om <= 0.0 {
            return 0.0;
        }
        y.sin().powi(self.k) / om.sqrt()
    }

    fn volume_integrand(&self, n: Node) -> f64 {
        let y = n.x;
        if y < 1e-30 {
            return 0.0;
        }
        let (u, om) = self.u_terms(y, n.from_b);
        if om <= 0.0 {
            return 0.0;
        }
        sin_power_integral(self.k as u32, y) * u / om.sqrt()
    }
}

/// Boundary area of the ball-type candidate at parameter eta (unit scale).
fn ball_area(k: u32, eta: f64, quad: &TanhSinh) -> Result<f64> {
    let kern = BallKernel::new(k, eta);
    let integral = quad
        .integrate(0.0, eta, |n| kern.area_integrand(n))
        .map_err(|e| e.with_quad_context(format!("ball-family area integral at eta = {eta}")))?;
    Ok(2.0 * geom::sphere_volume(k) * integral.value)
}

/// Enclosed volume of the ball-type candidate at parameter eta (unit scale).
fn ball_volume(k: u32, eta: f64, quad: &TanhSinh) -> Result<f64> {
    let kern = BallKernel::new(k, eta);
    let integral = quad
        .integrate(0.0, eta, |n| kern.volume_integrand(n))
        .map_err(|e| e.with_quad_context(format!("ball-family volume integral at eta = {eta}")))?;
    Ok(2.0 * geom::sphere_volume(k) * integral.value)
}

/// Tabulate the ball-type family of S^m x R on an eta grid over (0, pi).
///
/// The grid is cosine-spaced (Chebyshev-Lobatto interior nodes), dense near
/// both endpoints. Samples past the family's volume maximum are discarded;
/// the retained prefix must be strictly increasing in volume and must meet
/// the small-region Euclidean limit area/volume^(m/(m+1)) -> gamma_(m+1) at
/// its first sample, or construction fails.
pub fn cylinder_family(m: u32, eta_grid_size: usize) -> Result<CylinderBallFamily> {
    if m < 2 {
        return Err(Error::Domain(format!(
            "sphere factor dimension must be >= 2, got {m}"
        )));
    }
    if eta_grid_size < 64 {
        return Err(Error::Domain(format!(
            "eta grid size must be >= 64, got {eta_grid_size}"
        )));
    }
    let k = m - 1;
    let quad = TanhSinh::default();
    let n = eta_grid_size;
    let mut samples = Vec::with_capacity(n);
    for j in 1..=n {
        let theta = std::f64::consts::PI * j as f64 / (n as f64 + 1.0);
        let eta = 0.5 * std::f64::consts::PI * (1.0 - theta.cos());
        let volume = ball_volume(k, eta, &quad)?;
        let area = ball_area(k, eta, &quad)?;
        samples.push(FamilySample { eta, volume, area });
    }

    let mut argmax = 0;
    for (i, s) in samples.iter().enumerate() {
        if s.volume > samples[argmax].volume {
            argmax = i;
        }
    }
    samples.truncate(argmax + 1);

    for pair in samples.windows(2) {
        if !(pair[1].volume > pair[0].volume) {
            return Err(Error::Numeric(format!(
                "ball-family volume fails to increase strictly between eta = {} and eta = {}",
                pair[0].eta, pair[1].eta
            )));
        }
    }
    let first = &samples[0];
    let d = f64::from(m) + 1.0;
    let ratio = first.area / first.volume.powf((d - 1.0) / d);
    let gamma = geom::euclidean_constant(m + 1)?;
    if !((ratio / gamma - 1.0).abs() < 0.02) {
        return Err(Error::Numeric(format!(
            "ball-family small-region limit violated: area/volume^({}/{}) = {ratio} vs gamma = {gamma}",
            m,
            m + 1
        )));
    }

    Ok(CylinderBallFamily {
        dim: m,
        scale: 1.0,
        samples,
        slab_area: 2.0 * geom::sphere_volume(m),
    })
}

impl CylinderBallFamily {
    /// Sphere factor dimension m.
    pub fn dim(&self) -> u32 {
        self.dim
    }

    /// Metric multiplier of the tabulated samples (the constructor tabulates
    /// the unit metric; [`CylinderBallFamily::profile`] applies scaling).
    pub fn scale(&self) -> f64 {
        self.scale
    }

    /// Retained samples, strictly increasing in volume.
    pub fn samples(&self) -> &[FamilySample] {
        &self.samples
    }

    /// Boundary area 2 V_m of the slab branch at the tabulated scale.
    pub fn slab_area(&self) -> f64 {
        self.slab_area
    }

    /// The profile of (S^m x R, scale * (g0 + dt^2)): pointwise minimum of
    /// the ball branch (volume inverted by table bisection plus local
    /// re-quadrature, to 1e-8 relative) and the constant slab branch, with
    /// the scaling transform applied for ambient dimension m + 1.
    /// Nondecreasing; renormalized-concave.
    pub fn profile(&self, scale: f64) -> Result<ProfileFn> {
        if !(scale > 0.0) || !scale.is_finite() {
            return Err(Error::Domain(format!(
                "metric multiplier must be positive and finite, got {scale}"
            )));
        }
        let fam = Arc::new(self.clone());
        let quad = TanhSinh::default();
        let m = self.dim;
        let base = ProfileFn::new(
            format!("cylinder S^{m} x R profile"),
            f64::INFINITY,
            true,
            true,
            move |w| {
                let slab = fam.slab_area;
                let last = fam.samples.last().expect("family is non-empty");
                if w >= last.volume {
                    return Ok(slab);
                }
                let k = fam.dim - 1;
                let eta = invert_ball_volume(&fam, w, &quad)?;
                Ok(ball_area(k, eta, &quad)?.min(slab))
            },
        );
        let name = format!("cylinder S^{m} x R profile (scale {scale})");
        Ok(scale_profile(&base, m + 1, scale)?.with_name(name))
    }
}

/// Relative volume tolerance of the eta inversion.
const INVERT_REL_TOL: f64 = 1e-8;

/// Invert volume(eta) = w on the ball branch: bracket from the table, then a
/// guarded secant iteration with re-quadrature at each candidate (falling
/// back to bisection every fourth step so the bracket provably shrinks).
/// Requires 0 < w < the last tabulated volume.
fn invert_ball_volume(fam: &CylinderBallFamily, w: f64, quad: &TanhSinh) -> Result<f64> {
    let k = fam.dim - 1;
    let samples = &fam.samples;
    let idx = samples.partition_point(|s| s.volume < w);
    let (mut lo_eta, mut lo_vol, mut hi_eta, mut hi_vol);
    let mut cand;
    if idx == 0 {
        lo_eta = 0.0;
        lo_vol = 0.0;
        hi_eta = samples[0].eta;
        hi_vol = samples[0].volume;
        // Volume grows like eta^(m+1) near zero; seed with the power law.
        cand = hi_eta * (w / hi_vol).powf(1.0 / (f64::from(fam.dim) + 1.0));
    } else {
        let lo = samples[idx - 1];
        let hi = samples[idx];
        if (lo.volume - w).abs() <= INVERT_REL_TOL * w {
            return Ok(lo.eta);
        }
        if (hi.volume - w).abs() <= INVERT_REL_TOL * w {
            return Ok(hi.eta);
        }
        lo_eta = lo.eta;
        lo_vol = lo.volume;
        hi_eta = hi.eta;
        hi_vol = hi.volume;
        cand = lo_eta + (w - lo_vol) / (hi_vol - lo_vol) * (hi_eta - lo_eta);
    }
    for iter in 0..80 {
        if !(cand > lo_eta && cand < hi_eta) {
            cand = 0.5 * (lo_eta + hi_eta);
        }
        let v = ball_volume(k, cand, quad)?;
        if (v - w).abs() <= INVERT_REL_TOL * w {
            return Ok(cand);
        }
        if v < w {
            lo_eta = cand;
            lo_vol = v;
        } else {
            hi_eta = cand;
            hi_vol = v;
        }
        let denom = hi_vol - lo_vol;
        cand = if iter % 4 == 3 || !(denom > 0.0) {
            0.5 * (lo_eta + hi_eta)
        } else {
            lo_eta + (w - lo_vol) / denom * (hi_eta - lo_eta)
        };
    }
    Err(Error::Numeric(format!(
        "ball-branch volume inversion did not converge for volume {w}"
    )))
}

/// The profile of (S^m x R, scale * (g0 + dt^2)) at the default grid
/// resolution. See [`CylinderBallFamily::profile`].
pub fn cylinder_profile(m: u32, scale: f64) -> Result<ProfileFn> {
    cylinder_family(m, DEFAULT_ETA_GRID)?.profile(scale)
}
