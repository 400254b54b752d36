//! Independent numerical oracles shared by the integration tests.
#![allow(dead_code, clippy::needless_range_loop)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spherefit::{objective_j, Point3, SphereParams};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Σ xᵃ yᵇ zᶜ over `points` measured from `origin`, by explicit loops.
pub fn naive_moment(points: &[Point3], origin: Point3, a: u32, b: u32, c: u32) -> f64 {
    let mut s = 0.0;
    for p in points {
        let q = *p - origin;
        let mut term = 1.0;
        for _ in 0..a {
            term *= q.x;
        }
        for _ in 0..b {
            term *= q.y;
        }
        for _ in 0..c {
            term *= q.z;
        }
        s += term;
    }
    s
}

/// Exponents (a, b, c) of the 18 sums in `MomentSums::sums()` order.
pub const EXPONENTS: [(u32, u32, u32); 18] = [
    (1, 0, 0),
    (0, 1, 0),
    (0, 0, 1),
    (2, 0, 0),
    (0, 2, 0),
    (0, 0, 2),
    (1, 1, 0),
    (1, 0, 1),
    (0, 1, 1),
    (3, 0, 0),
    (0, 3, 0),
    (0, 0, 3),
    (1, 2, 0),
    (1, 0, 2),
    (2, 1, 0),
    (2, 0, 1),
    (0, 1, 2),
    (0, 2, 1),
];

/// Gaussian elimination with partial pivoting.
pub fn gauss_solve(mut m: [[f64; 3]; 3], mut rhs: [f64; 3]) -> [f64; 3] {
    for col in 0..3 {
        let pivot = (col..3).max_by(|&i, &j| m[i][col].abs().total_cmp(&m[j][col].abs())).unwrap();
        m.swap(col, pivot);
        rhs.swap(col, pivot);
        for row in col + 1..3 {
            let f = m[row][col] / m[col][col];
            for k in col..3 {
                m[row][k] -= f * m[col][k];
            }
            rhs[row] -= f * rhs[col];
        }
    }
    let mut x = [0.0; 3];
    for row in (0..3).rev() {
        let mut s = rhs[row];
        for k in row + 1..3 {
            s -= m[row][k] * x[k];
        }
        x[row] = s / m[row][row];
    }
    x
}

/// Nelder–Mead simplex minimization, restarted from the best vertex until a
/// restart no longer improves the objective.
pub fn nelder_mead<F: Fn(&[f64; 4]) -> f64>(f: F, start: [f64; 4], step: f64, xtol: f64) -> [f64; 4] {
    let mut best = start;
    let mut best_val = f(&best);
    for _ in 0..20 {
        let cand = nelder_mead_once(&f, best, step, xtol);
        let v = f(&cand);
        let moved = cand.iter().zip(&best).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        if v <= best_val {
            best = cand;
            best_val = v;
        }
        if moved < xtol {
            break;
        }
    }
    best
}

fn nelder_mead_once<F: Fn(&[f64; 4]) -> f64>(f: &F, start: [f64; 4], step: f64, xtol: f64) -> [f64; 4] {
    const N: usize = 4;
    let mut simplex: Vec<([f64; 4], f64)> = Vec::with_capacity(N + 1);
    simplex.push((start, f(&start)));
    for i in 0..N {
        let mut v = start;
        v[i] += step;
        simplex.push((v, f(&v)));
    }
    let lerp = |a: &[f64; 4], b: &[f64; 4], t: f64| {
        let mut out = [0.0; 4];
        for k in 0..N {
            out[k] = a[k] + t * (b[k] - a[k]);
        }
        out
    };
    for _ in 0..200_000 {
        simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
        let size = simplex[1..]
            .iter()
            .flat_map(|(v, _)| v.iter().zip(&simplex[0].0).map(|(a, b)| (a - b).abs()))
            .fold(0.0, f64::max);
        if size < xtol {
            break;
        }
        let mut centroid = [0.0; 4];
        for (v, _) in &simplex[..N] {
            for k in 0..N {
                centroid[k] += v[k] / N as f64;
            }
        }
        let worst = simplex[N];
        let refl = lerp(&centroid, &worst.0, -1.0);
        let fr = f(&refl);
        if fr < simplex[0].1 {
            let exp = lerp(&centroid, &worst.0, -2.0);
            let fe = f(&exp);
            simplex[N] = if fe < fr { (exp, fe) } else { (refl, fr) };
        } else if fr < simplex[N - 1].1 {
            simplex[N] = (refl, fr);
        } else {
            let (con, fc) = if fr < worst.1 {
                let c = lerp(&centroid, &refl, 0.5);
                (c, f(&c))
            } else {
                let c = lerp(&centroid, &worst.0, 0.5);
                (c, f(&c))
            };
            if fc < worst.1.min(fr) {
                simplex[N] = (con, fc);
            } else {
                let best = simplex[0].0;
                for item in simplex.iter_mut().skip(1) {
                    let v = lerp(&best, &item.0, 0.5);
                    *item = (v, f(&v));
                }
            }
        }
    }
    simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
    simplex[0].0
}

/// Central-difference gradient of the objective with respect to
/// `(x0, y0, z0, r)`.
pub fn numerical_gradient(points: &[Point3], at: &SphereParams, h: f64) -> [f64; 4] {
    let base = at.to_array();
    let mut g = [0.0; 4];
    for k in 0..4 {
        let mut plus = base;
        let mut minus = base;
        plus[k] += h;
        minus[k] -= h;
        g[k] = (objective_j(points, &SphereParams::from_array(plus))
            - objective_j(points, &SphereParams::from_array(minus)))
            / (2.0 * h);
    }
    g
}

/// Rotation matrix about a unit axis by `angle` (Rodrigues).
pub fn rotation(axis: [f64; 3], angle: f64) -> [[f64; 3]; 3] {
    let n = (axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]).sqrt();
    let [x, y, z] = axis.map(|a| a / n);
    let (s, c) = angle.sin_cos();
    let t = 1.0 - c;
    [
        [t * x * x + c, t * x * y - s * z, t * x * z + s * y],
        [t * x * y + s * z, t * y * y + c, t * y * z - s * x],
        [t * x * z - s * y, t * y * z + s * x, t * z * z + c],
    ]
}

pub fn rotate(q: &[[f64; 3]; 3], p: Point3) -> Point3 {
    let v = p.to_array();
    Point3::new(
        q[0][0] * v[0] + q[0][1] * v[1] + q[0][2] * v[2],
        q[1][0] * v[0] + q[1][1] * v[1] + q[1][2] * v[2],
        q[2][0] * v[0] + q[2][1] * v[1] + q[2][2] * v[2],
    )
}

/// `n` noisy samples spread over a whole random sphere.
pub fn random_noisy_sphere(rng: &mut impl Rng, n: usize, noise: f64) -> (SphereParams, Vec<Point3>) {
    let truth = SphereParams::new(
        rng.random_range(-20.0..20.0),
        rng.random_range(-20.0..20.0),
        rng.random_range(-20.0..20.0),
        rng.random_range(1.0..10.0),
    );
    let pts = (0..n)
        .map(|_| {
            let theta = rng.random_range(0.0..std::f64::consts::TAU);
            let u: f64 = rng.random_range(-1.0..=1.0);
            let ring = (1.0 - u * u).sqrt();
            let dir = Point3::new(ring * theta.cos(), ring * theta.sin(), u);
            let jitter = Point3::new(
                rng.random_range(-noise..=noise),
                rng.random_range(-noise..=noise),
                rng.random_range(-noise..=noise),
            );
            truth.center() + dir * truth.r + jitter
        })
        .collect();
    (truth, pts)
}

pub fn rel_close(a: f64, b: f64, scale: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * scale
}
