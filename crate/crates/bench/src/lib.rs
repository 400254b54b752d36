//! Shared inputs for the criterion benchmarks.

use spherefit::{builtin_case, generate, Point3};

/// Point counts swept by the benchmarks.
pub const SIZES: [usize; 5] = [100, 300, 1000, 3000, 10_000];

/// Case 1 geometry and noise with `n` points.
pub fn dataset(n: usize) -> Vec<Point3> {
    let cfg = builtin_case(1).expect("case 1 exists").with_points(n).with_seed(17);
    generate(&cfg).expect("valid config")
}
