use spherefit::eval::{bench_timing, Method};
use spherefit::IterativeConfig;

#[test]
fn exact_fit_time_scales_linearly() {
    let t = bench_timing(Method::Exact, &[100, 10_000], 2000, &IterativeConfig::default()).unwrap();
    let ratio = t[1].seconds_per_fit / t[0].seconds_per_fit;
    assert!((50.0..=200.0).contains(&ratio), "N=10000 / N=100 time ratio {ratio}");
}

#[test]
fn exact_beats_iterative() {
    let iter = IterativeConfig::default();
    let exact = bench_timing(Method::Exact, &[1000], 200, &iter).unwrap();
    let eberly = bench_timing(Method::Eberly, &[1000], 200, &iter).unwrap();
    assert!(exact[0].seconds_per_fit < eberly[0].seconds_per_fit);
    assert_eq!(exact[0].repetitions, 200);
}
