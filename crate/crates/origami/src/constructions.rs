//! Named fold constructions: segment trisection, angle trisection, the
//! triangle angle-sum/area fold and the square-dissection fold for the
//! Pythagorean identity. Every construction records its axiom steps so the
//! crease pattern can be replayed and checked.

use crate::axioms::{self, AxiomId, FoldSet};
use crate::error::{Error, Result};
use crate::geom::{Line, Point, Tolerance};
use crate::{algebra, algebra::FoldSolution};
use std::f64::consts::PI;

/// One fold operation with the concrete inputs it was applied to.
#[derive(Debug, Clone, PartialEq)]
pub enum AxiomApplication {
    O1(Point, Point),
    O2(Point, Point),
    O3(Line, Line),
    O4(Point, Line),
    O5(Point, Point, Line),
    O6(Point, Line, Point, Line),
    O7(Point, Line, Line),
}

impl AxiomApplication {
    pub fn axiom(&self) -> AxiomId {
        match self {
            AxiomApplication::O1(..) => AxiomId::O1,
            AxiomApplication::O2(..) => AxiomId::O2,
            AxiomApplication::O3(..) => AxiomId::O3,
            AxiomApplication::O4(..) => AxiomId::O4,
            AxiomApplication::O5(..) => AxiomId::O5,
            AxiomApplication::O6(..) => AxiomId::O6,
            AxiomApplication::O7(..) => AxiomId::O7,
        }
    }

    pub fn solve(&self, tol: &Tolerance) -> Result<FoldSet> {
        match self {
            AxiomApplication::O1(p, q) => axioms::o1(*p, *q, tol),
            AxiomApplication::O2(p, q) => axioms::o2(*p, *q, tol),
            AxiomApplication::O3(l, m) => axioms::o3(l, m, tol),
            AxiomApplication::O4(p, l) => axioms::o4(*p, l, tol),
            AxiomApplication::O5(p1, p2, l1) => axioms::o5(*p1, *p2, l1, tol),
            AxiomApplication::O6(p1, l1, p2, l2) => axioms::o6(*p1, l1, *p2, l2, tol),
            AxiomApplication::O7(p, l1, l2) => axioms::o7(*p, l1, l2, tol),
        }
    }
}

/// A recorded fold step: the operation, its inputs, and the crease chosen
/// from the returned fold set.
#[derive(Debug, Clone, PartialEq)]
pub struct TraceStep {
    pub name: String,
    pub application: AxiomApplication,
    pub fold: Line,
}

/// A named residual with the bound it must stay under for the construction
/// to count as verified.
#[derive(Debug, Clone, PartialEq)]
pub struct Assertion {
    pub name: String,
    pub residual: f64,
    pub limit: f64,
}

impl Assertion {
    pub fn ok(&self) -> bool {
        self.residual <= self.limit
    }
}

/// The crease pattern of a construction: ordered fold steps, the points they
/// produce, and the residuals that certify the result.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ConstructionTrace {
    pub steps: Vec<TraceStep>,
    pub derived_points: Vec<(String, Point)>,
    pub assertions: Vec<Assertion>,
}

impl ConstructionTrace {
    fn push_step(
        &mut self,
        name: &str,
        application: AxiomApplication,
        tol: &Tolerance,
    ) -> Result<Line> {
        let set = application.solve(tol)?;
        let fold = *set
            .folds()
            .first()
            .ok_or_else(|| Error::NumericalFailure(format!("step {name} produced no fold")))?;
        self.steps.push(TraceStep {
            name: name.to_string(),
            application,
            fold,
        });
        Ok(fold)
    }

    fn push_point(&mut self, name: &str, p: Point) {
        self.derived_points.push((name.to_string(), p));
    }

    fn push_assertion(&mut self, name: &str, residual: f64, limit: f64) {
        self.assertions.push(Assertion {
            name: name.to_string(),
            residual,
            limit,
        });
    }

    pub fn point(&self, name: &str) -> Option<Point> {
        self.derived_points
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, p)| *p)
    }

    /// All assertions hold within their limits.
    pub fn verified(&self) -> bool {
        self.assertions.iter().all(Assertion::ok)
    }

    /// Re-executes every step and checks the recorded fold is reproduced.
    pub fn replay(&self, tol: &Tolerance) -> Result<()> {
        for step in &self.steps {
            let set = step.application.solve(tol)?;
            if !set.contains(&step.fold, axioms::MERGE_EPS) {
                return Err(Error::NumericalFailure(format!(
                    "step {} does not reproduce its fold",
                    step.name
                )));
            }
        }
        Ok(())
    }
}

/// Segment trisection result: fold trace plus the two division points.
#[derive(Debug, Clone, PartialEq)]
pub struct SegmentTrisection {
    pub trace: ConstructionTrace,
    pub one_third: Point,
    pub two_thirds: Point,
}

/// Trisects the segment from (0, 0) to (length, 0) with creases on its
/// bounding square: the anti-diagonal crossed with the crease from the
/// origin to the right-edge midpoint meets at x = 2/3 of the side.
pub fn trisect_segment(length: f64, tol: &Tolerance) -> Result<SegmentTrisection> {
    if !length.is_finite() || length <= tol.abs {
        return Err(Error::InvalidLength);
    }
    let l = length;
    let mut trace = ConstructionTrace::default();

    let origin = Point::new(0.0, 0.0);
    let br = Point::new(l, 0.0);
    let tr = Point::new(l, l);
    let tl = Point::new(0.0, l);

    let bottom = trace.push_step("bottom_edge", AxiomApplication::O1(origin, br), tol)?;
    let right = trace.push_step("right_edge", AxiomApplication::O1(br, tr), tol)?;
    let midline = trace.push_step("horizontal_midline", AxiomApplication::O2(br, tr), tol)?;
    let right_mid = right
        .intersection(&midline, tol)?
        .ok_or_else(|| Error::NumericalFailure("midline misses the right edge".into()))?;
    trace.push_point("right_midpoint", right_mid);

    let diagonal = trace.push_step("anti_diagonal", AxiomApplication::O1(tl, br), tol)?;
    let crossing_crease = trace.push_step(
        "crossing_crease",
        AxiomApplication::O1(origin, right_mid),
        tol,
    )?;
    let crossing = diagonal
        .intersection(&crossing_crease, tol)?
        .ok_or_else(|| Error::NumericalFailure("creases do not cross".into()))?;
    trace.push_point("crossing", crossing);

    let drop = trace.push_step("drop_to_base", AxiomApplication::O4(crossing, bottom), tol)?;
    let two_thirds = drop
        .intersection(&bottom, tol)?
        .ok_or_else(|| Error::NumericalFailure("perpendicular misses the base".into()))?;
    trace.push_point("two_thirds", two_thirds);

    let halve = trace.push_step(
        "halve_left_part",
        AxiomApplication::O2(origin, two_thirds),
        tol,
    )?;
    let one_third = halve
        .intersection(&bottom, tol)?
        .ok_or_else(|| Error::NumericalFailure("bisector misses the base".into()))?;
    trace.push_point("one_third", one_third);

    let limit = 1e-12 * l.max(1.0);
    trace.push_assertion("one_third_error", (one_third.x - l / 3.0).abs(), limit);
    trace.push_assertion(
        "two_thirds_error",
        (two_thirds.x - 2.0 * l / 3.0).abs(),
        limit,
    );

    Ok(SegmentTrisection {
        trace,
        one_third,
        two_thirds,
    })
}

/// Angle trisection result: the fold algebra behind it and the trisecting
/// ray through the origin.
#[derive(Debug, Clone, PartialEq)]
pub struct AngleTrisection {
    pub trace: ConstructionTrace,
    /// Line through the origin at angle `theta / 3` to the x axis.
    pub ray: Line,
    /// cos(theta / 3), the largest real root of the trisection cubic.
    pub cosine: f64,
    /// theta / 3 in radians, recovered from the fold slope.
    pub angle: f64,
    pub solution: FoldSolution,
}

/// Trisects `theta` in (0, pi) by solving 4 cos^3(x) - 3 cos(x) = cos(theta)
/// through the double-placement fold, i.e. the monic cubic
/// t^3 - (3/4) t - cos(theta)/4 whose largest real root is cos(theta / 3).
pub fn trisect_angle(theta: f64, tol: &Tolerance) -> Result<AngleTrisection> {
    if !theta.is_finite() || theta <= 0.0 || theta >= PI {
        return Err(Error::OutOfRange);
    }
    let solution = algebra::solve_cubic(0.0, -0.75, -theta.cos() / 4.0, tol)?;
    // theta/3 lies in (0, pi/3), so cos(theta/3) is in (1/2, 1) while the
    // other real roots stay at or below 1/2.
    let cosine = *solution
        .roots
        .last()
        .ok_or_else(|| Error::NumericalFailure("trisection cubic has no real root".into()))?;
    let clamped = cosine.clamp(-1.0, 1.0);
    let angle = clamped.acos();
    let sine = (1.0 - clamped * clamped).max(0.0).sqrt();

    let mut trace = ConstructionTrace::default();
    let on_ray = Point::new(clamped, sine);
    trace.push_point("on_ray", on_ray);
    let ray = trace.push_step(
        "trisecting_ray",
        AxiomApplication::O1(Point::new(0.0, 0.0), on_ray),
        tol,
    )?;
    let cubic_residual = (clamped * clamped * clamped - 0.75 * clamped - theta.cos() / 4.0).abs();
    trace.push_assertion("cubic_residual", cubic_residual, 1e-10);
    trace.push_assertion("angle_error", (angle - theta / 3.0).abs(), 1e-9);

    Ok(AngleTrisection {
        trace,
        ray,
        cosine,
        angle,
        solution,
    })
}

/// A non-degenerate triangle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Triangle {
    pub vertices: [Point; 3],
}

impl Triangle {
    pub fn new(a: Point, b: Point, c: Point, tol: &Tolerance) -> Result<Self> {
        let t = Triangle {
            vertices: [a, b, c],
        };
        if t.area() <= tol.abs {
            return Err(Error::DegenerateTriangle);
        }
        Ok(t)
    }

    pub fn area(&self) -> f64 {
        let [a, b, c] = self.vertices;
        0.5 * ((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)).abs()
    }

    /// Interior angle at vertex `i`, in radians.
    pub fn angle(&self, i: usize) -> f64 {
        let p = self.vertices[i];
        let q = self.vertices[(i + 1) % 3];
        let r = self.vertices[(i + 2) % 3];
        let (vx, vy) = (q.x - p.x, q.y - p.y);
        let (wx, wy) = (r.x - p.x, r.y - p.y);
        let cross = vx * wy - vy * wx;
        let dot = vx * wx + vy * wy;
        cross.abs().atan2(dot)
    }
}

/// Result of the angle-sum/area folding of a triangle.
#[derive(Debug, Clone, PartialEq)]
pub struct AngleSumDemo {
    pub trace: ConstructionTrace,
    /// Index of the vertex folded down onto the base.
    pub apex: usize,
    /// The base point where all three vertex images meet.
    pub meeting_point: Point,
}

/// Folds a triangle flat: the apex comes down onto the foot of its altitude
/// along the midline crease, and the two base corners fold in over their
/// bisector creases. All three vertex images meet in one base point, the
/// three angles tile a straight line, and the covered rectangle certifies
/// the area formula.
pub fn angle_sum_demo(triangle: &Triangle, tol: &Tolerance) -> Result<AngleSumDemo> {
    // The altitude foot from the widest vertex is strictly interior because
    // the other two angles are acute.
    let apex = (0..3)
        .max_by(|&i, &j| triangle.angle(i).total_cmp(&triangle.angle(j)))
        .unwrap();
    let apex_pt = triangle.vertices[apex];
    let b1 = triangle.vertices[(apex + 1) % 3];
    let b2 = triangle.vertices[(apex + 2) % 3];

    let mut trace = ConstructionTrace::default();
    let base = trace.push_step("base_edge", AxiomApplication::O1(b1, b2), tol)?;
    let altitude = trace.push_step("altitude", AxiomApplication::O4(apex_pt, base), tol)?;
    let foot = altitude
        .intersection(&base, tol)?
        .ok_or_else(|| Error::NumericalFailure("altitude misses the base".into()))?;
    trace.push_point("foot", foot);
    let along = ((foot.x - b1.x) * (b2.x - b1.x) + (foot.y - b1.y) * (b2.y - b1.y))
        / (b1.distance_to(b2) * b1.distance_to(b2));
    assert!(
        along > 0.0 && along < 1.0,
        "altitude foot of the widest vertex must be interior"
    );

    let midline = trace.push_step("midline", AxiomApplication::O2(apex_pt, foot), tol)?;
    let corner1 = trace.push_step("corner_crease_1", AxiomApplication::O2(b1, foot), tol)?;
    let corner2 = trace.push_step("corner_crease_2", AxiomApplication::O2(b2, foot), tol)?;

    // (i) All three vertex images coincide at the foot.
    let imgs = [
        midline.reflect_point(apex_pt),
        corner1.reflect_point(b1),
        corner2.reflect_point(b2),
    ];
    let coincide = imgs
        .iter()
        .map(|p| p.distance_to(foot))
        .fold(0.0f64, f64::max);
    trace.push_assertion("vertices_coincide", coincide, 1e-9);

    // (ii) The three angles cover a straight line.
    let angle_sum: f64 = (0..3).map(|i| triangle.angle(i)).sum();
    trace.push_assertion("angle_sum", (angle_sum - PI).abs(), 1e-12);

    // (iii) The fold covers the half-base x half-height rectangle twice.
    let base_len = b1.distance_to(b2);
    let height = base.distance_to(apex_pt);
    let rect_twice = 2.0 * (base_len / 2.0) * (height / 2.0);
    trace.push_assertion("area_identity", (triangle.area() - rect_twice).abs(), 1e-12);

    Ok(AngleSumDemo {
        trace,
        apex,
        meeting_point: foot,
    })
}

/// Result of the four-corner square dissection fold.
#[derive(Debug, Clone, PartialEq)]
pub struct PythagorasDemo {
    pub trace: ConstructionTrace,
    /// Vertices of the inner square, in rotational order.
    pub inner_square: [Point; 4],
    /// Side length of the inner square (the hypotenuse).
    pub side: f64,
}

/// On a square of side a+b, marks four congruent right triangles with legs
/// a and b in the corners and folds each along its hypotenuse. The four
/// creases bound a square of side c with c^2 = (a+b)^2 - 4(ab/2).
pub fn pythagoras_demo(a: f64, b: f64, tol: &Tolerance) -> Result<PythagorasDemo> {
    if !a.is_finite() || !b.is_finite() || a <= tol.abs || b <= tol.abs {
        return Err(Error::InvalidLengths);
    }
    let s = a + b;
    let marks = [
        Point::new(b, 0.0),
        Point::new(s, b),
        Point::new(a, s),
        Point::new(0.0, a),
    ];
    let corners = [
        Point::new(0.0, 0.0),
        Point::new(s, 0.0),
        Point::new(s, s),
        Point::new(0.0, s),
    ];

    let mut trace = ConstructionTrace::default();
    for (i, m) in marks.iter().enumerate() {
        trace.push_point(&format!("mark_{i}"), *m);
    }
    // Crease i runs between marks i-1 and i and folds corner i inward.
    let mut creases = Vec::with_capacity(4);
    for (i, corner) in corners.iter().enumerate() {
        let from = marks[(i + 3) % 4];
        let to = marks[i];
        let crease = trace.push_step(
            &format!("hypotenuse_{i}"),
            AxiomApplication::O1(from, to),
            tol,
        )?;
        debug_assert!(crease.distance_to(*corner) > 0.0);
        creases.push(crease);
    }

    // (i) The crease segments bound an equilateral, right-angled quad.
    let c = a.hypot(b);
    let mut side_residual = 0.0f64;
    let mut angle_residual = 0.0f64;
    for i in 0..4 {
        let p = marks[i];
        let q = marks[(i + 1) % 4];
        let r = marks[(i + 2) % 4];
        side_residual = side_residual.max((p.distance_to(q) - c).abs());
        let dot = (q.x - p.x) * (r.x - q.x) + (q.y - p.y) * (r.y - q.y);
        angle_residual = angle_residual.max(dot.abs());
    }
    trace.push_assertion("equal_sides", side_residual, 1e-9);
    trace.push_assertion("right_angles", angle_residual, 1e-9);

    // (ii) c^2 = (a+b)^2 - 4 (ab/2): the outer square minus the four folded
    // triangles. The geometric side comes from the crease segment.
    let c2_geom = {
        let (dx, dy) = (marks[1].x - marks[0].x, marks[1].y - marks[0].y);
        dx * dx + dy * dy
    };
    let c2_folded = s * s - 4.0 * (0.5 * a * b);
    trace.push_assertion(
        "area_identity",
        (c2_geom - c2_folded).abs(),
        1e-12 * s.max(1.0).powi(2),
    );

    // (iii) Every folded corner lands strictly inside the inner square.
    let mut worst_inside = f64::INFINITY;
    for i in 0..4 {
        let image = creases[i].reflect_point(corners[i]);
        trace.push_point(&format!("folded_corner_{i}"), image);
        for j in 0..4 {
            let p = marks[j];
            let q = marks[(j + 1) % 4];
            // The inner square is counter-clockwise, so its inside is to the
            // left of each directed edge.
            let cross = (q.x - p.x) * (image.y - p.y) - (q.y - p.y) * (image.x - p.x);
            worst_inside = worst_inside.min(cross / p.distance_to(q));
        }
    }
    trace.push_assertion("corners_inside", (-worst_inside).max(0.0), tol.abs);

    Ok(PythagorasDemo {
        trace,
        inner_square: marks,
        side: c,
    })
}
