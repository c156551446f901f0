//! Shared test oracles, all independent of the implementation paths they
//! check: bisection root-finding over monotone intervals for polynomials,
//! dense single-parameter sweeps for fold counts, and grid searches for
//! layout dispersion.

#![allow(dead_code)]

use origami::{Line, Point, Tolerance};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_point(rng: &mut ChaCha8Rng) -> Point {
    Point::new(rng.gen_range(-10.0..10.0), rng.gen_range(-10.0..10.0))
}

pub fn random_line(rng: &mut ChaCha8Rng) -> Line {
    let theta = rng.gen_range(0.0..std::f64::consts::PI);
    let offset = rng.gen_range(-10.0..10.0);
    Line::new(theta.cos(), theta.sin(), offset).unwrap()
}

/// All real roots of t^3 + a t^2 + b t + c, by bisection over the monotone
/// intervals between the critical points. Independent of the closed-form
/// solver under test.
pub fn oracle_cubic_roots(a: f64, b: f64, c: f64) -> Vec<f64> {
    let f = |t: f64| ((t + a) * t + b) * t + c;
    let bound = 1.0 + a.abs().max(b.abs()).max(c.abs());
    // Critical points: 3t^2 + 2at + b = 0.
    let mut knots = vec![-bound];
    let disc = 4.0 * a * a - 12.0 * b;
    if disc > 0.0 {
        let sq = disc.sqrt();
        for crit in [(-2.0 * a - sq) / 6.0, (-2.0 * a + sq) / 6.0] {
            if crit > -bound && crit < bound {
                knots.push(crit);
            }
        }
        knots.sort_by(f64::total_cmp);
    }
    knots.push(bound);

    let mut roots: Vec<f64> = Vec::new();
    let mut push = |t: f64| {
        if roots
            .iter()
            .all(|r| (r - t).abs() > 1e-7 * t.abs().max(1.0))
        {
            roots.push(t);
        }
    };
    for pair in knots.windows(2) {
        let (mut lo, mut hi) = (pair[0], pair[1]);
        let (flo, fhi) = (f(lo), f(hi));
        if flo == 0.0 {
            push(lo);
            continue;
        }
        if fhi == 0.0 {
            push(hi);
            continue;
        }
        if flo * fhi < 0.0 {
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                if f(lo) * f(mid) <= 0.0 {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            push(0.5 * (lo + hi));
        }
    }
    // A double root sits at a critical point without a sign change.
    for &crit in &knots[1..knots.len().saturating_sub(1)] {
        if f(crit).abs() <= 1e-11 * (1.0 + a.abs() + b.abs() + c.abs()) {
            push(crit);
        }
    }
    roots.sort_by(f64::total_cmp);
    roots
}

/// All real roots of t^2 + p t + q by the quadratic formula.
pub fn oracle_quadratic_roots(p: f64, q: f64) -> Vec<f64> {
    let disc = p * p - 4.0 * q;
    if disc < 0.0 {
        return vec![];
    }
    if disc == 0.0 {
        return vec![-p / 2.0];
    }
    let sq = disc.sqrt();
    let big = -0.5 * (p + sq.copysign(p));
    let mut roots = if big == 0.0 {
        vec![0.0, 0.0]
    } else {
        vec![big, q / big]
    };
    roots.sort_by(f64::total_cmp);
    roots.dedup_by(|x, y| (*x - *y).abs() <= 1e-12);
    roots
}

/// Number of folds through `p2` placing `p1` onto `l1`, counted by a dense
/// angular sweep over all lines through `p2` with sign-change refinement.
pub fn o5_count_oracle(p1: Point, p2: Point, l1: &Line) -> usize {
    let signed = |theta: f64| -> f64 {
        let (a, b) = (theta.cos(), theta.sin());
        let fold = Line::new(a, b, a * p2.x + b * p2.y).unwrap();
        l1.signed_distance(fold.reflect_point(p1))
    };
    count_zeros_periodic(signed, std::f64::consts::PI, 20_000)
}

/// Number of simultaneous placements for the double fold, counted by a
/// million-sample sweep over the tangent family of the first parabola:
/// each point q on `l1` gives the unique fold reflecting `p1` onto q, and
/// the zeros of the second placement residual are the solutions.
pub fn o6_count_oracle(p1: Point, l1: &Line, p2: Point, l2: &Line) -> usize {
    let tol = Tolerance::default();
    let base = l1.point_on();
    let (dx, dy) = l1.direction();
    let signed = |phi: f64| -> f64 {
        let s = phi.tan();
        let q = Point::new(base.x + s * dx, base.y + s * dy);
        let fold = Line::bisector(p1, q, &tol).expect("focus off the directrix");
        l2.signed_distance(fold.reflect_point(p2))
    };

    let n = 1_000_000usize;
    let lo = -std::f64::consts::FRAC_PI_2 + 1e-7;
    let hi = std::f64::consts::FRAC_PI_2 - 1e-7;
    let step = (hi - lo) / n as f64;
    let mut zeros: Vec<f64> = Vec::new();
    let mut prev = signed(lo);
    for i in 1..=n {
        let phi = lo + step * i as f64;
        let cur = signed(phi);
        if prev == 0.0 {
            zeros.push(lo + step * (i - 1) as f64);
        } else if prev * cur < 0.0 {
            // Bisection refinement of the bracket.
            let (mut a, mut b) = (phi - step, phi);
            for _ in 0..60 {
                let mid = 0.5 * (a + b);
                if signed(a) * signed(mid) <= 0.0 {
                    b = mid;
                } else {
                    a = mid;
                }
            }
            zeros.push(0.5 * (a + b));
        }
        prev = cur;
    }
    // Merge zeros whose tangent parameters agree to the refinement scale.
    zeros.sort_by(f64::total_cmp);
    zeros.dedup_by(|x, y| {
        let (sx, sy) = (x.tan(), y.tan());
        (sx - sy).abs() <= 1e-6 * sx.abs().max(1.0)
    });
    zeros.len()
}

/// Zero count of a continuous periodic function on [0, period).
fn count_zeros_periodic<F: Fn(f64) -> f64>(f: F, period: f64, samples: usize) -> usize {
    let step = period / samples as f64;
    let mut zeros: Vec<f64> = Vec::new();
    let first = f(0.0);
    let mut prev = first;
    for i in 1..=samples {
        let x = step * i as f64;
        let cur = if i == samples { first } else { f(x) };
        if prev == 0.0 {
            zeros.push(step * (i - 1) as f64);
        } else if prev * cur < 0.0 {
            let (mut a, mut b) = (x - step, x);
            for _ in 0..60 {
                let mid = 0.5 * (a + b);
                if f(a) * f(mid) <= 0.0 {
                    b = mid;
                } else {
                    a = mid;
                }
            }
            zeros.push(0.5 * (a + b));
        }
        prev = cur;
    }
    zeros.sort_by(f64::total_cmp);
    zeros.dedup_by(|x, y| (*x - *y).abs() <= 1e-9);
    // The two ends of the interval are the same line.
    if zeros.len() >= 2 && (period - (zeros.last().unwrap() - zeros[0])) <= 1e-9 {
        zeros.pop();
    }
    zeros.len()
}

/// Maximal minimum pairwise distance of three points in the unit square,
/// searched on the boundary at the given resolution. Dispersion optima can
/// always be pushed to the boundary: the farthest point from two fixed
/// points over a convex region lies on its boundary, one point at a time.
pub fn dispersion3_boundary_grid(n: usize) -> f64 {
    let boundary: Vec<(f64, f64)> = (0..4 * n)
        .map(|k| {
            let t = k as f64 / n as f64;
            if k < n {
                (t, 0.0)
            } else if k < 2 * n {
                (1.0, t - 1.0)
            } else if k < 3 * n {
                (3.0 - t, 1.0)
            } else {
                (0.0, 4.0 - t)
            }
        })
        .collect();
    let d2 = |p: (f64, f64), q: (f64, f64)| (p.0 - q.0).powi(2) + (p.1 - q.1).powi(2);

    let mut best2 = 0.0f64;
    // Symmetry: some optimal point maps onto the lower-left half of the
    // bottom edge under the square's symmetry group.
    for k1 in 0..=n / 2 {
        let p1 = boundary[k1];
        for (k2, &p2) in boundary.iter().enumerate() {
            let d12 = d2(p1, p2);
            if d12 <= best2 {
                continue;
            }
            for &p3 in &boundary[k2 + 1..] {
                let m = d12.min(d2(p1, p3)).min(d2(p2, p3));
                if m > best2 {
                    best2 = m;
                }
            }
        }
    }
    best2.sqrt()
}

/// Unrestricted full-grid dispersion search (coarse resolutions only).
pub fn dispersion3_full_grid(n: usize) -> f64 {
    let coords: Vec<f64> = (0..=n).map(|k| k as f64 / n as f64).collect();
    let grid: Vec<(f64, f64)> = coords
        .iter()
        .flat_map(|&x| coords.iter().map(move |&y| (x, y)))
        .collect();
    let d2 = |p: (f64, f64), q: (f64, f64)| (p.0 - q.0).powi(2) + (p.1 - q.1).powi(2);
    let mut best2 = 0.0f64;
    for (i, &p1) in grid.iter().enumerate() {
        // Symmetry: restrict the first point to the lower-left octant.
        if p1.0 > 0.5 + 1e-12 || p1.1 > p1.0 + 1e-12 {
            continue;
        }
        for (j, &p2) in grid.iter().enumerate().skip(i + 1) {
            let d12 = d2(p1, p2);
            if d12 <= best2 {
                continue;
            }
            for &p3 in &grid[j + 1..] {
                let m = d12.min(d2(p1, p3)).min(d2(p2, p3));
                if m > best2 {
                    best2 = m;
                }
            }
        }
    }
    best2.sqrt()
}
