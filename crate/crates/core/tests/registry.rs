//! Full claim-registry run: the library-level equivalent of `verify --all`.

use isoperim::verify::{claim_ids, run_claim};

#[test]
fn every_registered_claim_passes() {
    let mut failures = Vec::new();
    for id in claim_ids() {
        let report = run_claim(id, 1024).unwrap();
        println!("{report}");
        if !report.passed {
            failures.push(report.to_string());
        }
    }
    assert!(
        failures.is_empty(),
        "claims failed:\n{}",
        failures.join("\n")
    );
}
