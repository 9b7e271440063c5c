use floorsum_core::catalog::series;
use floorsum_core::registry::{p_int, Policy};
use std::time::Instant;

#[test]
#[ignore]
fn one_slow_cell() {
    let policy = Policy::default();
    let params = p_int(&[("v", 7), ("k", 1), ("m", 5), ("s", 1)]);
    for _ in 0..3 {
        let t0 = Instant::now();
        let v = series::verify("S07", &params, &policy).unwrap();
        println!("verify: {:?} status {:?} terms {}", t0.elapsed(), v.status, v.terms_used);
    }
    let t0 = Instant::now();
    let _ = series::partial_sum("S07", &params, 1024).unwrap();
    println!("partial_sum(1024): {:?}", t0.elapsed());
    let t0 = Instant::now();
    let _ = series::tail_bound("S07", &params, 1024).unwrap();
    println!("tail: {:?}", t0.elapsed());
    let t0 = Instant::now();
    let _ = series::closed_form("S07", &params, 256).unwrap();
    println!("closed: {:?}", t0.elapsed());
}
