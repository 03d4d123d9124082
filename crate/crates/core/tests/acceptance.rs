//! Acceptance suite: one test per criterion, each printing a single
//! PASS/FAIL line (run with `--nocapture` to see the lines for passing
//! criteria as well).

use std::f64::consts::PI;
use std::time::Instant;

use isoperim::bounds::{forward_extension, tube_lower_bound};
use isoperim::profiles::{
    cylinder_profile, euclidean_profile, scale_profile, sphere_profile, ProfileFn, SphereGeometry,
};
use isoperim::verify::run_claim;
use isoperim::yamabe::{constant_reports, product_yamabe_ratio};
use isoperim::ProductId;

fn report(criterion: u32, description: &str, passed: bool) {
    println!(
        "acceptance criterion {criterion} [{}]: {description}",
        if passed { "PASS" } else { "FAIL" }
    );
    assert!(passed, "acceptance criterion {criterion} failed: {description}");
}

#[test]
fn criterion_1_cylinder_profile_value() {
    let start = Instant::now();
    let profile = cylinder_profile(3, 2.0).unwrap();
    let value = profile.evaluate(65.0).unwrap();
    let elapsed = start.elapsed();
    let ok_value = (value - 99.4).abs() / 99.4 < 5e-3;
    let ok_time = elapsed.as_secs_f64() < 5.0;
    report(
        1,
        &format!(
            "scaled cylinder profile at v = 65 is {value:.4} (target 99.4 within 0.5%), built \
             and evaluated in {:.2} s (< 5 s)",
            elapsed.as_secs_f64()
        ),
        ok_value && ok_time,
    );
}

#[test]
fn criterion_2_forward_extension_constants() {
    let cases = [
        (65.0, 99.4, 2u32, 12.32),
        (60.0, 118.245, 2, 15.26),
        (140.0, 277.8, 3, 10.3),
    ];
    let mut all = true;
    let mut parts = Vec::new();
    for (x0, y0, n, target) in cases {
        let law = forward_extension(x0, y0, n).unwrap();
        let ok = (law.coefficient - target).abs() / target < 1e-3;
        all &= ok;
        parts.push(format!("{:.4} vs {target}", law.coefficient));
    }
    report(
        2,
        &format!(
            "forward power-law coefficients [{}] each within 0.1%",
            parts.join(", ")
        ),
        all,
    );
}

#[test]
fn criterion_3_figure_dominance_checks() {
    let start = Instant::now();
    let mut all = true;
    let mut margins = Vec::new();
    for id in 1..=6u8 {
        let rep = run_claim(&format!("fig{id}"), 2048).unwrap();
        all &= rep.passed && rep.min_margin > 0.0;
        margins.push(format!(
            "fig{id} rel {:.2}%",
            100.0 * rep.relative_min_margin
        ));
    }
    let elapsed = start.elapsed();
    let ok_time = elapsed.as_secs_f64() < 60.0;
    report(
        3,
        &format!(
            "six figure dominance checks at 2048 samples all strictly positive [{}] in {:.1} s \
             (< 60 s)",
            margins.join(", "),
            elapsed.as_secs_f64()
        ),
        all && ok_time,
    );
}

#[test]
fn criterion_4_backward_factors_and_anchors() {
    let mut all = true;
    let mut parts = Vec::new();
    for product in ["s2xr2", "s3xr2", "s2xr3"] {
        let factor = run_claim(&format!("factor-{product}"), 256).unwrap();
        let anchor = run_claim(&format!("anchor-{product}"), 256).unwrap();
        all &= factor.passed && anchor.passed;
        parts.push(format!(
            "{product}: factor margin {:.4}, anchor margin {:.4}",
            factor.min_margin, anchor.min_margin
        ));
    }
    report(
        4,
        &format!(
            "backward factors clear the stated headline factors and every anchor inequality \
             re-verifies numerically [{}]",
            parts.join("; ")
        ),
        all,
    );
}

#[test]
fn criterion_5_yamabe_ratios_and_echoes() {
    let round2 = |x: f64| (x * 100.0).round() / 100.0;
    let a = product_yamabe_ratio(2, 2, 4.7, 0.886, true).unwrap();
    let b = product_yamabe_ratio(2, 3, 7.5, 0.867, true).unwrap();
    let c = product_yamabe_ratio(3, 2, 2.77, 0.91, true).unwrap();
    let rounding_ok =
        round2(a.ratio) == 0.78 && round2(b.ratio) == 0.75 && round2(c.ratio) == 0.83;

    let reports = constant_reports().unwrap();
    let by_name = |n: &str| reports.iter().find(|r| r.name == n).unwrap();
    let l41 = by_name("lambda-4-1");
    let echoes_ok = (l41.absolute - 43.9).abs() / 43.9 < 5e-3
        && l41.absolute > 43.7
        && (by_name("lambda-5-1").absolute - 56.7).abs() / 56.7 < 5e-3
        && (by_name("lambda-5-2").absolute - 49.0).abs() / 49.0 < 5e-3;
    let discrepancy_logged = l41.source.contains('%');
    report(
        5,
        &format!(
            "ratios {:.4}/{:.4}/{:.4} round to 0.78/0.75/0.83; echoes 43.71 (vs published 43.9, \
             discrepancy logged: {discrepancy_logged}), 56.72, 48.98 each within 0.5%",
            a.ratio, b.ratio, c.ratio
        ),
        rounding_ok && echoes_ok && discrepancy_logged,
    );
}

#[test]
fn criterion_6_property_suite() {
    // (a) Sphere half-volume identity to 1e-8 relative.
    let mut half_ok = true;
    for (m, mu) in [(2u32, 1.0), (4, 4.7), (5, 2.77), (5, 7.5)] {
        let geometry = SphereGeometry::new(m, mu).unwrap();
        let profile = sphere_profile(&geometry).unwrap();
        let at_half = profile.evaluate(geometry.total_volume() / 2.0).unwrap();
        let expect =
            mu.powf((f64::from(m) - 1.0) / 2.0) * isoperim::geom::sphere_volume(m - 1);
        half_ok &= (at_half - expect).abs() / expect < 1e-8;
    }

    // (b) Small-volume Euclidean limit within 2% at v = 1e-4 for every
    // implemented profile.
    let mut limit_ok = true;
    let mut check_limit = |p: &ProfileFn, d: u32| {
        let v = 1e-4;
        let gamma = isoperim::geom::euclidean_constant(d).unwrap();
        let ratio =
            p.evaluate(v).unwrap() / (gamma * v.powf((f64::from(d) - 1.0) / f64::from(d)));
        limit_ok &= (ratio - 1.0).abs() < 0.02;
    };
    check_limit(&euclidean_profile(2).unwrap(), 2);
    check_limit(&euclidean_profile(4).unwrap(), 4);
    check_limit(
        &sphere_profile(&SphereGeometry::new(4, 4.7).unwrap()).unwrap(),
        4,
    );
    check_limit(
        &sphere_profile(&SphereGeometry::new(5, 7.5).unwrap()).unwrap(),
        5,
    );
    check_limit(&cylinder_profile(3, 2.0).unwrap(), 4);
    check_limit(&cylinder_profile(4, 2.0_f64.powf(1.5)).unwrap(), 5);

    // (c) Scaling composition law to 1e-9 relative.
    let base = sphere_profile(&SphereGeometry::new(3, 1.0).unwrap()).unwrap();
    let composed = scale_profile(&scale_profile(&base, 3, 1.7).unwrap(), 3, 2.3).unwrap();
    let direct = scale_profile(&base, 3, 1.7 * 2.3).unwrap();
    let mut compose_ok = true;
    for i in 1..=100 {
        let v = direct.domain_max() * f64::from(i) / 101.0;
        let a = composed.evaluate(v).unwrap();
        let b = direct.evaluate(v).unwrap();
        compose_ok &= (a - b).abs() <= 1e-9 * b.abs();
    }

    // (d) Renormalized concavity of the sphere references and the cylinder
    // ball branch.
    let concave_ok = ["concave-sphere-s2xr2", "concave-cylinder-ball"]
        .iter()
        .all(|id| run_claim(id, 512).unwrap().passed);

    // (e) Tube threshold closed form: alpha = 0.9 on the round two-sphere
    // factor gives v0 = (4 pi / 0.03)^2 to 1e-10 relative.
    let h = ProfileFn::new("unit two-sphere factor", 4.0 * PI, false, true, |v| {
        Ok((v * (4.0 * PI - v)).sqrt())
    });
    let tube = tube_lower_bound(4.0 * PI, 2, &h, 0.9).unwrap();
    let v0_expect = (4.0 * PI / 0.03).powi(2);
    let tube_ok = (tube.v0 - v0_expect).abs() / v0_expect < 1e-10;

    report(
        6,
        &format!(
            "half-volume identity ({half_ok}), Euclidean limits ({limit_ok}), scaling \
             composition ({compose_ok}), renormalized concavity ({concave_ok}), tube threshold \
             v0 = {:.6e} vs {:.6e} ({tube_ok})",
            tube.v0, v0_expect
        ),
        half_ok && limit_ok && compose_ok && concave_ok && tube_ok,
    );
}

#[test]
fn criterion_7_maximum_locations() {
    let mut all = true;
    let mut parts = Vec::new();
    for (product, published) in [
        (ProductId::S2xR2, 290.69),
        (ProductId::S3xR2, 198.4),
        (ProductId::S2xR3, 2388.2),
    ] {
        let rep = run_claim(&format!("maxloc-{product}"), 256).unwrap();
        // The numeric maximum must sit within 0.1% of the half-volume
        // formula; the published display value is itself a rounding of that
        // formula (0.21% off for the 2.77-scale case, recorded in the note).
        let near_published = (rep.min_margin_location - published).abs() / published < 3e-3;
        all &= rep.passed && near_published;
        parts.push(format!(
            "{product}: located {:.2} vs published {published}",
            rep.min_margin_location
        ));
    }
    report(
        7,
        &format!(
            "reference-profile maxima at half total volume within 0.1% of the closed form \
             [{}]",
            parts.join("; ")
        ),
        all,
    );
}
