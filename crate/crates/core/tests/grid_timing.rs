//! Ad-hoc timing probe over the series grids (ignored by default).

use floorsum_core::catalog::series;
use floorsum_core::registry::Policy;
use std::io::Write;
use std::time::Instant;

#[test]
#[ignore]
fn time_each_series_entry() {
    let policy = Policy::default();
    for meta in series::meta() {
        let id = meta.id;
        let grid = series::default_grid(id).unwrap();
        let t0 = Instant::now();
        let mut cells = 0;
        for params in grid.iter() {
            let _ = series::verify(id, params, &policy).unwrap();
            cells += 1;
            if t0.elapsed().as_secs() > 15 {
                break;
            }
        }
        println!("{id}: {cells}/{} cells in {:?}", grid.len(), t0.elapsed());
        std::io::stdout().flush().unwrap();
    }
}
