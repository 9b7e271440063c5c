//! Full default-grid sweep over the binomial-sum registry plus the
//! registered reduction pairs.

use floorsum_core::catalog::binom;
use floorsum_core::registry::{params_string, Policy, Status};

#[test]
fn binom_default_grids_confirm() {
    let policy = Policy::default();
    let mut checked = 0usize;
    let mut skipped_by_policy = 0usize;
    let mut failures: Vec<String> = Vec::new();
    for meta in binom::meta() {
        let id = meta.id;
        let grid = binom::default_grid(id).unwrap();
        assert!(!grid.is_empty(), "{id}: empty default grid");
        for params in &grid {
            let v = binom::verify(id, params, &policy)
                .unwrap_or_else(|e| panic!("{id} {} errored: {e}", params_string(params)));
            checked += 1;
            match v.status {
                Status::Confirmed => {}
                Status::Inconclusive if v.note.is_some() => skipped_by_policy += 1,
                Status::Refuted if binom::is_flagged(id) => {}
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
        "{} unexpected cells (of {checked}):\n{}",
        failures.len(),
        failures.join("\n")
    );
    assert!(checked > 3000, "expected a dense sweep, got {checked}");
    // polar cells with b < 0 are inconclusive by policy and must appear
    assert!(skipped_by_policy > 0);
}

#[test]
fn reduction_pairs_confirm() {
    let policy = Policy::default();
    for (g, s) in [
        ("B15", "B01"),
        ("B22", "B19"),
        ("B28", "B26"),
        ("B16", "B15"),
        ("B23", "B22"),
    ] {
        let v = binom::reduction_check(g, s, &policy).unwrap();
        assert_eq!(v.status, Status::Confirmed, "{g}->{s}: {:?}", v.note);
    }
}
