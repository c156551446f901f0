//! Solvers for the seven single-fold operations. Each returns the complete
//! set of fold lines satisfying the placement conditions, with a fixed
//! multiplicity contract: o1/o2/o4 yield exactly one fold, o3 one or two,
//! o5 zero to two, o6 zero to three, o7 zero or one.

use crate::error::{Error, Result};
use crate::geom::{Line, Point, Tolerance};
use serde::{Deserialize, Serialize};

/// Folds from nearly-tangent configurations closer than this in canonical
/// line parameters are merged and reported once.
pub const MERGE_EPS: f64 = 1e-7;

/// Identifier of a fold operation, used in construction traces and the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum AxiomId {
    O1,
    O2,
    O3,
    O4,
    O5,
    O6,
    O7,
}

impl std::fmt::Display for AxiomId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}", self)
    }
}

impl std::str::FromStr for AxiomId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "O1" | "1" => Ok(AxiomId::O1),
            "O2" | "2" => Ok(AxiomId::O2),
            "O3" | "3" => Ok(AxiomId::O3),
            "O4" | "4" => Ok(AxiomId::O4),
            "O5" | "5" => Ok(AxiomId::O5),
            "O6" | "6" => Ok(AxiomId::O6),
            "O7" | "7" => Ok(AxiomId::O7),
            other => Err(Error::DegenerateInput(format!("unknown axiom {other:?}"))),
        }
    }
}

/// The set of folds returned by a solver, ordered ascending by the canonical
/// `(a, b, c)` tuple with near-duplicates merged.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FoldSet {
    folds: Vec<Line>,
    multiplicity: usize,
}

impl FoldSet {
    pub(crate) fn from_lines(mut lines: Vec<Line>, merge_eps: f64) -> Self {
        lines.sort_by(Line::canonical_cmp);
        let mut folds: Vec<Line> = Vec::with_capacity(lines.len());
        for l in lines {
            if !folds.iter().any(|f| f.approx_eq(&l, merge_eps)) {
                folds.push(l);
            }
        }
        let multiplicity = folds.len();
        FoldSet {
            folds,
            multiplicity,
        }
    }

    pub fn folds(&self) -> &[Line] {
        &self.folds
    }

    pub fn multiplicity(&self) -> usize {
        self.multiplicity
    }

    pub fn is_empty(&self) -> bool {
        self.folds.is_empty()
    }

    pub fn contains(&self, l: &Line, eps: f64) -> bool {
        self.folds.iter().any(|f| f.approx_eq(l, eps))
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Line> {
        self.folds.iter()
    }
}

/// Fold through two distinct points.
pub fn o1(p1: Point, p2: Point, tol: &Tolerance) -> Result<FoldSet> {
    let fold = Line::from_points(p1, p2, tol)?;
    Ok(FoldSet::from_lines(vec![fold], tol.abs))
}

/// Fold placing one point onto another: the perpendicular bisector.
pub fn o2(p1: Point, p2: Point, tol: &Tolerance) -> Result<FoldSet> {
    let fold = Line::bisector(p1, p2, tol)?;
    Ok(FoldSet::from_lines(vec![fold], tol.abs))
}

/// Folds placing one line onto another: both angle bisectors for
/// intersecting lines, the midline for parallel ones.
pub fn o3(l1: &Line, l2: &Line, tol: &Tolerance) -> Result<FoldSet> {
    if l1.approx_eq(l2, tol.abs) {
        return Err(Error::CoincidentLines);
    }
    let (a1, b1, c1) = (l1.a(), l1.b(), l1.c());
    let (a2, b2, c2) = (l2.a(), l2.b(), l2.c());
    if l1.is_parallel(l2, tol) {
        // Canonical parallel lines share a normal up to a possible sign flip
        // near the canonicalization boundary.
        let (c2, _) = if a1 * a2 + b1 * b2 >= 0.0 {
            (c2, 1.0)
        } else {
            (-c2, -1.0)
        };
        let fold = Line::new(a1, b1, 0.5 * (c1 + c2))?;
        return Ok(FoldSet::from_lines(vec![fold], tol.abs));
    }
    // Points equidistant from both lines: (n1 +/- n2) . x = c1 +/- c2.
    let sum = Line::new(a1 + a2, b1 + b2, c1 + c2)?;
    let diff = Line::new(a1 - a2, b1 - b2, c1 - c2)?;
    Ok(FoldSet::from_lines(vec![sum, diff], tol.abs))
}

/// The unique fold through `p` perpendicular to `l`.
pub fn o4(p: Point, l: &Line, tol: &Tolerance) -> Result<FoldSet> {
    // The fold's normal is l's direction.
    let (a, b) = l.direction();
    let fold = Line::new(a, b, a * p.x + b * p.y)?;
    Ok(FoldSet::from_lines(vec![fold], tol.abs))
}

/// Folds through `p2` placing `p1` onto `l1`. The image of `p1` keeps its
/// distance to `p2`, so solutions correspond to the intersections of the
/// circle centered at `p2` with radius |p1 - p2| and the line `l1`.
pub fn o5(p1: Point, p2: Point, l1: &Line, tol: &Tolerance) -> Result<FoldSet> {
    if l1.contains(p1, tol) {
        return Err(Error::DegenerateFocus);
    }
    let r = p1.distance_to(p2);
    let d = l1.signed_distance(p2);
    if d.abs() > r + tol.abs {
        return Ok(FoldSet::from_lines(vec![], MERGE_EPS));
    }
    let foot = l1.perpendicular_foot(p2);
    let images: Vec<Point> = if (d.abs() - r).abs() <= tol.abs {
        vec![foot]
    } else {
        let s = (r * r - d * d).max(0.0).sqrt();
        let (dx, dy) = l1.direction();
        vec![
            Point::new(foot.x - s * dx, foot.y - s * dy),
            Point::new(foot.x + s * dx, foot.y + s * dy),
        ]
    };
    let mut folds = Vec::new();
    for q in images {
        // q = p1 would need p1 on l1, which is excluded above.
        folds.push(Line::bisector(p1, q, tol)?);
    }
    Ok(FoldSet::from_lines(folds, MERGE_EPS))
}

/// Frame that rotates the plane so a given line's normal becomes (0, 1).
struct Frame {
    // Row-major rotation matrix.
    m: [[f64; 2]; 2],
}

impl Frame {
    fn for_line(l: &Line) -> Self {
        let (a, b) = (l.a(), l.b());
        Frame {
            m: [[b, -a], [a, b]],
        }
    }

    fn fwd_point(&self, p: Point) -> Point {
        Point::new(
            self.m[0][0] * p.x + self.m[0][1] * p.y,
            self.m[1][0] * p.x + self.m[1][1] * p.y,
        )
    }

    /// Rotates a line into the frame; offsets are preserved by rotations.
    fn fwd_line(&self, l: &Line) -> Line {
        let (a, b) = (
            self.m[0][0] * l.a() + self.m[0][1] * l.b(),
            self.m[1][0] * l.a() + self.m[1][1] * l.b(),
        );
        Line::new(a, b, l.c()).expect("rotation preserves the unit normal")
    }

    /// Maps a frame line back to world coordinates (inverse rotation).
    fn back_line(&self, l: &Line) -> Line {
        let (a, b) = (
            self.m[0][0] * l.a() + self.m[1][0] * l.b(),
            self.m[0][1] * l.a() + self.m[1][1] * l.b(),
        );
        Line::new(a, b, l.c()).expect("rotation preserves the unit normal")
    }
}

/// Folds placing `p1` onto `l1` and `p2` onto `l2` simultaneously: the
/// common tangents of the two focus/directrix parabolas.
///
/// The solver rotates the frame so `l1` is horizontal. There every fold
/// placing `p1` onto `l1` has a finite slope `t` and intercept fixed by
/// tangency to the first parabola, and the second placement condition
/// becomes a cubic in `t`.
pub fn o6(p1: Point, l1: &Line, p2: Point, l2: &Line, tol: &Tolerance) -> Result<FoldSet> {
    if l1.contains(p1, tol) || l2.contains(p2, tol) {
        return Err(Error::DegenerateFocus);
    }
    let frame = Frame::for_line(l1);
    let f1 = frame.fwd_point(p1);
    let q = frame.fwd_point(p2);
    let l2f = frame.fwd_line(l2);
    let d1 = l1.c(); // l1 in frame: y = c1
    let h = f1.y - d1;
    let k = d1 + f1.y;
    let (a2, b2, c2) = (l2f.a(), l2f.b(), l2f.c());
    let r = a2 * q.x + b2 * q.y - c2;

    // Intercept of the slope-t tangent to the first parabola.
    let intercept = |t: f64| 0.5 * (k - 2.0 * f1.x * t - h * t * t);

    // Substituting u(t) into the second placement condition gives
    // c3 t^3 + c2 t^2 + c1 t + c0 = 0.
    let coeffs = [
        r + b2 * (k - 2.0 * q.y),
        -a2 * (k - 2.0 * q.y) + 2.0 * b2 * (q.x - f1.x),
        r - 2.0 * a2 * (q.x - f1.x) - b2 * h,
        a2 * h,
    ];
    let scale = coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs()));
    if scale <= 1e-12 {
        return Err(Error::DegenerateInput(
            "the two focus/directrix pairs define the same parabola".into(),
        ));
    }

    let roots = crate::algebra::roots::real_roots_cubic(coeffs)?;
    let mut folds = Vec::new();
    for t in roots {
        let u = intercept(t);
        let fold_frame = Line::new(t, -1.0, -u)?;
        folds.push(frame.back_line(&fold_frame));
    }

    // A fold vertical in this frame moves p1 parallel to l1; it can satisfy
    // both placements only in setups where p1 sits on l1, which is excluded.
    // The candidate fixed by the second placement is still checked.
    if a2.abs() > tol.abs {
        let x0 = (c2 - b2 * q.y + a2 * q.x) / (2.0 * a2);
        let candidate = frame.back_line(&Line::vertical(x0));
        let r1 = l1.distance_to(candidate.reflect_point(p1));
        let r2 = l2.distance_to(candidate.reflect_point(p2));
        if r1 <= tol.abs && r2 <= tol.abs {
            folds.push(candidate);
        }
    }

    Ok(FoldSet::from_lines(folds, MERGE_EPS))
}

/// Fold perpendicular to `l2` placing `p` onto `l1`. The image of `p` slides
/// along the direction of `l2`, so it is the intersection of the through-`p`
/// parallel to `l2` with `l1`.
pub fn o7(p: Point, l1: &Line, l2: &Line, tol: &Tolerance) -> Result<FoldSet> {
    let (dx, dy) = l2.direction();
    let travel = Line::new(l2.a(), l2.b(), l2.a() * p.x + l2.b() * p.y)?;
    match travel.intersection(l1, tol) {
        Err(Error::CoincidentLines) => {
            // p already sits on l1 and every perpendicular fold keeps it
            // there; report the zero-travel representative through p.
            let fold = Line::new(dx, dy, dx * p.x + dy * p.y)?;
            Ok(FoldSet::from_lines(vec![fold], tol.abs))
        }
        Err(e) => Err(e),
        Ok(None) => Ok(FoldSet::from_lines(vec![], tol.abs)),
        Ok(Some(q)) => {
            let fold = if p.distance_to(q) <= tol.abs {
                // Zero travel: the fold is the perpendicular to l2 through p.
                Line::new(dx, dy, dx * p.x + dy * p.y)?
            } else {
                Line::bisector(p, q, tol)?
            };
            Ok(FoldSet::from_lines(vec![fold], tol.abs))
        }
    }
}
