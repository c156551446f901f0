//! Real-root extraction for polynomials up to degree three: closed form
//! (Cardano / trigonometric) followed by Newton polishing, with roots of
//! magnitude above one polished on the reversed polynomial for conditioning.

use crate::error::{Error, Result};

/// Relative threshold below which a leading coefficient is treated as zero
/// and the degree drops.
const DEGREE_EPS: f64 = 1e-13;

/// Distinct roots closer than this (relative to the root magnitude) are
/// merged and reported once.
const ROOT_MERGE_EPS: f64 = 1e-7;

/// All distinct real roots of `c[3] t^3 + c[2] t^2 + c[1] t + c[0] = 0`,
/// ascending. Coefficients are given lowest-degree first. The zero
/// polynomial is rejected.
///
/// Candidates come from the closed form of both the polynomial and its
/// reversal (whose roots are the reciprocals); whichever of the two is
/// better conditioned supplies each root, and Newton polishing against the
/// exact polynomial plus a backward-error filter discards the junk.
pub(crate) fn real_roots_cubic(coeffs: [f64; 4]) -> Result<Vec<f64>> {
    let scale = coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs()));
    if scale == 0.0 {
        return Err(Error::NumericalFailure(
            "all polynomial coefficients vanish".into(),
        ));
    }
    let c: Vec<f64> = coeffs.iter().map(|x| x / scale).collect();
    let mut candidates = if c[3].abs() <= DEGREE_EPS {
        quadratic_candidates(c[2], c[1], c[0])
    } else {
        cubic_candidates(c[2] / c[3], c[1] / c[3], c[0] / c[3])
    };
    if c[0].abs() > DEGREE_EPS {
        for s in cubic_candidates(c[1] / c[0], c[2] / c[0], c[3] / c[0]) {
            if s.abs() > 1e-300 {
                candidates.push(1.0 / s);
            }
        }
    } else {
        candidates.push(0.0);
    }

    for t in candidates.iter_mut() {
        *t = polish(&c, *t);
    }
    candidates.retain(|t| t.is_finite() && relative_residual(&c, *t) <= 1e-9);
    candidates.sort_by(f64::total_cmp);

    let mut roots: Vec<f64> = Vec::with_capacity(candidates.len());
    for t in candidates {
        match roots.last() {
            Some(prev) if (t - prev).abs() <= ROOT_MERGE_EPS * t.abs().max(1.0) => {}
            _ => roots.push(t),
        }
    }

    // An effective cubic always has a real root; finding none means both
    // routes failed to converge.
    if roots.is_empty() && c[3].abs() > DEGREE_EPS {
        return Err(Error::NumericalFailure(
            "no real root of the cubic survived polishing".into(),
        ));
    }
    Ok(roots)
}

/// Real roots of `a t^2 + b t + c = 0` (degenerating gracefully to linear).
fn quadratic_candidates(a: f64, b: f64, c: f64) -> Vec<f64> {
    if a.abs() <= DEGREE_EPS {
        if b.abs() <= DEGREE_EPS {
            return vec![];
        }
        return vec![-c / b];
    }
    let disc = b * b - 4.0 * a * c;
    if disc < 0.0 {
        return vec![];
    }
    if disc == 0.0 {
        return vec![-b / (2.0 * a)];
    }
    // Avoid cancellation: compute the larger-magnitude root first.
    let sq = disc.sqrt();
    let q = -0.5 * (b + sq.copysign(b));
    if q == 0.0 {
        return vec![0.0];
    }
    let mut r = vec![q / a, c / q];
    r.sort_by(f64::total_cmp);
    r
}

/// Initial guesses for the monic cubic `t^3 + p t^2 + q t + r = 0`.
fn cubic_candidates(p: f64, q: f64, r: f64) -> Vec<f64> {
    // Depress with t = s - p/3.
    let shift = p / 3.0;
    let big_p = q - p * p / 3.0;
    let big_q = 2.0 * p * p * p / 27.0 - p * q / 3.0 + r;
    let half_q = 0.5 * big_q;
    let third_p = big_p / 3.0;
    let disc = half_q * half_q + third_p * third_p * third_p;
    let disc_scale = (half_q * half_q).max((third_p * third_p * third_p).abs());
    let eps_d = 1e-13 * disc_scale;

    let s_roots: Vec<f64> = if disc.abs() <= eps_d {
        if big_p.abs() <= 1e-13 * (1.0 + big_q.abs()) {
            vec![0.0] // triple root
        } else {
            // One simple and one double root.
            vec![3.0 * big_q / big_p, -1.5 * big_q / big_p]
        }
    } else if disc > 0.0 {
        let sq = disc.sqrt();
        vec![(sq - half_q).cbrt() - (sq + half_q).cbrt()]
    } else {
        // Three distinct real roots, trigonometric form.
        let m = 2.0 * (-third_p).sqrt();
        let arg = (3.0 * big_q / (big_p * m)).clamp(-1.0, 1.0);
        let theta = arg.acos() / 3.0;
        const TAU_3: f64 = 2.0 * std::f64::consts::FRAC_PI_3;
        vec![
            m * theta.cos(),
            m * (theta - TAU_3).cos(),
            m * (theta + TAU_3).cos(),
        ]
    };
    s_roots.into_iter().map(|s| s - shift).collect()
}

fn eval(c: &[f64], t: f64) -> (f64, f64) {
    let f = ((c[3] * t + c[2]) * t + c[1]) * t + c[0];
    let df = (3.0 * c[3] * t + 2.0 * c[2]) * t + c[1];
    (f, df)
}

/// Newton polish on the polynomial, switching to the reversed polynomial in
/// s = 1/t for |t| > 1 where it is better conditioned.
fn polish(c: &[f64], t0: f64) -> f64 {
    if t0.abs() > 1.0 {
        let rev = [c[3], c[2], c[1], c[0]];
        let s = polish_direct(&rev, 1.0 / t0);
        if s != 0.0 && s.is_finite() {
            return 1.0 / s;
        }
        return t0;
    }
    polish_direct(c, t0)
}

fn polish_direct(c: &[f64], mut t: f64) -> f64 {
    for _ in 0..40 {
        let (f, df) = eval(c, t);
        if f == 0.0 || df.abs() < 1e-300 {
            break;
        }
        let step = f / df;
        t -= step;
        if step.abs() <= 1e-16 * t.abs().max(1.0) {
            break;
        }
    }
    t
}

/// Backward-error style residual: |f(t)| over the sum of term magnitudes.
fn relative_residual(c: &[f64], t: f64) -> f64 {
    let (f, _) = eval(c, t);
    let denom = c[3].abs() * t.abs().powi(3)
        + c[2].abs() * t.abs().powi(2)
        + c[1].abs() * t.abs()
        + c[0].abs()
        + f64::MIN_POSITIVE;
    f.abs() / denom
}
