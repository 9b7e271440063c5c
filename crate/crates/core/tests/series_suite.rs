//! Full default-grid sweep over the series registry. Flagged entries may
//! refute (their mismatches are reported); everything else must confirm.

use floorsum_core::catalog::series;
use floorsum_core::registry::{params_string, Policy, Status};

#[test]
fn series_default_grids_confirm() {
    let policy = Policy::default();
    let mut checked = 0usize;
    let mut failures: Vec<String> = Vec::new();
    let mut flagged_refutations = 0usize;
    for meta in series::meta() {
        let id = meta.id;
        let grid = series::default_grid(id).unwrap();
        assert!(!grid.is_empty(), "{id}: empty default grid");
        for params in &grid {
            let v = series::verify(id, params, &policy)
                .unwrap_or_else(|e| panic!("{id} {} errored: {e}", params_string(params)));
            checked += 1;
            match v.status {
                Status::Confirmed => {}
                Status::Refuted if series::is_flagged(id) => flagged_refutations += 1,
                _ => failures.push(format!(
                    "{id} {}: {} gap={} note={:?}",
                    params_string(params),
                    v.status.as_str(),
                    v.gap,
                    v.note
                )),
            }
        }
    }
    assert!(
        failures.is_empty(),
        "{} unexpected non-confirmed cells (of {checked}):\n{}",
        failures.len(),
        failures.join("\n")
    );
    assert!(checked > 3000, "expected a dense sweep, got {checked}");
    // the flagged printed forms that genuinely disagree must be visible
    assert!(flagged_refutations > 0, "expected reported refutations among flagged entries");
}
