//! Tangency machinery and equation solving through fold constructions:
//! quadratics via the point-onto-line fold through a point (o5), cubics via
//! the double placement fold (o6).
//!
//! A fold placing a point `p` onto a line `l` is tangent to the parabola
//! with focus `p` and directrix `l`; the tangency residual below is the
//! computational form of that fact.

pub(crate) mod roots;

use crate::axioms;
use crate::error::{Error, Result};
use crate::geom::{Line, Point, Tolerance};
use serde::Serialize;

/// A parabola given by focus and directrix. The focus never lies on the
/// directrix.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Parabola {
    pub focus: Point,
    pub directrix: Line,
}

impl Parabola {
    pub fn new(focus: Point, directrix: Line, tol: &Tolerance) -> Result<Self> {
        if directrix.contains(focus, tol) {
            return Err(Error::DegenerateFocus);
        }
        Ok(Parabola { focus, directrix })
    }

    /// Distance from the fold-reflected focus to the directrix: zero exactly
    /// when `l` is tangent to the parabola.
    pub fn tangency_residual(&self, l: &Line) -> f64 {
        self.directrix.distance_to(l.reflect_point(self.focus))
    }

    /// |distance to focus - distance to directrix|: zero exactly when `q`
    /// lies on the parabola.
    pub fn point_residual(&self, q: Point) -> f64 {
        (q.distance_to(self.focus) - self.directrix.distance_to(q)).abs()
    }

    /// The point of the parabola whose directrix foot sits at arc parameter
    /// `s` along the directrix (measured from the foot closest to the
    /// origin). Exact equidistance by construction.
    pub fn point_at(&self, s: f64) -> Point {
        let (dx, dy) = self.directrix.direction();
        let base = self.directrix.point_on();
        let q = Point::new(base.x + s * dx, base.y + s * dy);
        let sd = self.directrix.signed_distance(self.focus);
        let (nx, ny) = if sd >= 0.0 {
            (self.directrix.a(), self.directrix.b())
        } else {
            (-self.directrix.a(), -self.directrix.b())
        };
        let w = {
            let ddx = q.x - self.focus.x;
            let ddy = q.y - self.focus.y;
            (ddx * ddx + ddy * ddy) / (2.0 * sd.abs())
        };
        Point::new(q.x + w * nx, q.y + w * ny)
    }
}

/// The construction frame actually used by a fold-based solver: focus and
/// directrix pairs fed to the axiom. `l2` is absent for the quadratic route.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Construction {
    pub p1: Point,
    pub l1: Line,
    pub p2: Point,
    pub l2: Option<Line>,
}

/// Roots recovered as fold slopes, with the fold lines parallel to the root
/// list and the construction that produced them.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FoldSolution {
    /// Distinct real roots, ascending.
    pub roots: Vec<f64>,
    /// The fold whose slope is `roots[i]`.
    pub folds: Vec<Line>,
    pub construction: Construction,
}

impl FoldSolution {
    fn from_folds(mut pairs: Vec<(f64, Line)>, construction: Construction) -> Self {
        pairs.sort_by(|x, y| x.0.total_cmp(&y.0));
        FoldSolution {
            roots: pairs.iter().map(|p| p.0).collect(),
            folds: pairs.iter().map(|p| p.1).collect(),
            construction,
        }
    }
}

/// Y-intercept of the slope-`t` tangent to the parabola with focus `(a, 1)`
/// and directrix `y = -1`.
pub fn intercept_of_fold(t: f64, a: f64) -> f64 {
    -t * t - t * a
}

/// Solves `t^2 + p t + q = 0` by folding the point `(0, 1)` onto the line
/// `y = -1` with a fold through `(-p, q)`. The slopes of the resulting folds
/// are exactly the real roots; an empty root list encodes a negative
/// discriminant.
pub fn solve_quadratic(p: f64, q: f64, tol: &Tolerance) -> Result<FoldSolution> {
    assert!(p.is_finite() && q.is_finite(), "coefficients must be finite");
    let p1 = Point::new(0.0, 1.0);
    let l1 = Line::horizontal(-1.0);
    let p2 = Point::new(-p, q);
    let fold_set = axioms::o5(p1, p2, &l1, tol)?;
    let mut pairs = Vec::new();
    for fold in fold_set.iter() {
        let t = fold.slope().ok_or_else(|| {
            Error::NumericalFailure("vertical fold cannot encode a root".into())
        })?;
        pairs.push((t, *fold));
    }
    Ok(FoldSolution::from_folds(
        pairs,
        Construction {
            p1,
            l1,
            p2,
            l2: None,
        },
    ))
}

/// Solves the monic cubic `t^3 + a t^2 + b t + c = 0` by folding `(a, 1)`
/// onto `y = -1` and `(c, b)` onto `x = -c` simultaneously; the slope of
/// every such fold is a root.
///
/// When `c` is (numerically) zero the second focus sits on its directrix and
/// the double placement degenerates; the root `t = 0` is split off and the
/// deflated quadratic `t^2 + a t + b` is solved by the fold construction
/// above, with all roots re-polished against the original cubic.
pub fn solve_cubic(a: f64, b: f64, c: f64, tol: &Tolerance) -> Result<FoldSolution> {
    assert!(
        a.is_finite() && b.is_finite() && c.is_finite(),
        "coefficients must be finite"
    );
    let p1 = Point::new(a, 1.0);
    let l1 = Line::horizontal(-1.0);
    let p2 = Point::new(c, b);
    let l2 = Line::vertical(-c);
    let construction = Construction {
        p1,
        l1,
        p2,
        l2: Some(l2),
    };

    let max_coeff = a.abs().max(b.abs()).max(c.abs()).max(1.0);
    let mut pairs: Vec<(f64, Line)> = Vec::new();
    if 2.0 * c.abs() <= tol.abs {
        // Deflation fallback: roots of t (t^2 + a t + b), then polished on
        // the full cubic so a tiny nonzero c still rounds out correctly.
        let mut candidates = vec![0.0];
        candidates.extend(solve_quadratic(a, b, tol)?.roots);
        let coeffs = [c, b, a, 1.0];
        let mut polished: Vec<f64> = candidates
            .into_iter()
            .map(|t| polish_monic(&coeffs, t))
            .collect();
        polished.sort_by(f64::total_cmp);
        polished.dedup_by(|x, y| (*x - *y).abs() <= axioms::MERGE_EPS * x.abs().max(1.0));
        for t in polished {
            let fold = Line::new(t, -1.0, -intercept_of_fold(t, a))?;
            pairs.push((t, fold));
        }
    } else {
        let fold_set = axioms::o6(p1, &l1, p2, &l2, tol)?;
        for fold in fold_set.iter() {
            // Folds vertical in the construction frame cannot encode finite
            // roots; the construction never produces one, but stay safe.
            if let Some(t) = fold.slope() {
                pairs.push((t, *fold));
            }
        }
    }

    for (t, _) in &pairs {
        let residual = ((t + a) * t + b) * t + c;
        if residual.abs() > 1e-8 * max_coeff {
            return Err(Error::NumericalFailure(format!(
                "slope {t} leaves cubic residual {residual:.3e}"
            )));
        }
    }
    Ok(FoldSolution::from_folds(pairs, construction))
}

/// Newton polish for a monic cubic given as ascending coefficients
/// `[c, b, a, 1]`.
fn polish_monic(coeffs: &[f64; 4], mut t: f64) -> f64 {
    for _ in 0..40 {
        let f = ((coeffs[3] * t + coeffs[2]) * t + coeffs[1]) * t + coeffs[0];
        let df = (3.0 * coeffs[3] * t + 2.0 * coeffs[2]) * t + coeffs[1];
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
