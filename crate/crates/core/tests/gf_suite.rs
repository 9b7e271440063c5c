//! Full default-grid sweep over the generating-function registry.

use floorsum_core::catalog::gf_ids;
use floorsum_core::registry::{params_string, Policy, Status};
use std::time::Instant;

#[test]
fn gf_default_grids_confirm_to_order_300() {
    let policy = Policy::default();
    let t0 = Instant::now();
    let mut checked = 0usize;
    let mut failures = Vec::new();
    for meta in gf_ids::meta() {
        let id = meta.id;
        let grid = gf_ids::default_grid(id).unwrap();
        assert!(!grid.is_empty(), "{id}: empty default grid");
        for params in &grid {
            let v = gf_ids::verify(id, params, &policy)
                .unwrap_or_else(|e| panic!("{id} {} errored: {e}", params_string(params)));
            checked += 1;
            if v.status != Status::Confirmed {
                failures.push(format!(
                    "{id} {}: {} note={:?}",
                    params_string(params),
                    v.status.as_str(),
                    v.note
                ));
            }
        }
    }
    assert!(failures.is_empty(), "mismatches:\n{}", failures.join("\n"));
    assert!(checked >= 100, "expected a dense sweep, got {checked}");
    // the acceptance budget for the whole suite is 10 seconds
    println!("gf sweep: {checked} cells in {:?}", t0.elapsed());
}
