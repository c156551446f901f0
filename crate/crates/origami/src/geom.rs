//! Tolerance-disciplined 2D primitives: points, normalized implicit lines,
//! reflections and intersections. Everything else in the crate is built on
//! these.

use crate::error::{Error, Result};
use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Sign-convention epsilon for canonicalizing lines. A line with |a| below
/// this is treated as "a = 0" and the sign of b decides orientation.
const SIGN_EPS: f64 = 1e-9;

/// Absolute/relative tolerance pair used by geometric predicates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub abs: f64,
    pub rel: f64,
}

impl Tolerance {
    pub fn new(abs: f64, rel: f64) -> Result<Self> {
        let positive = |x: f64| x.is_finite() && x > 0.0;
        if !positive(abs) || !positive(rel) {
            return Err(Error::InvalidTolerance(
                "abs and rel must be strictly positive".into(),
            ));
        }
        if abs > 1e-3 {
            return Err(Error::InvalidTolerance("abs must be at most 1e-3".into()));
        }
        Ok(Tolerance { abs, rel })
    }

    /// Scale-aware comparison bound: `abs + rel * max(|x|, |y|)`.
    pub fn scaled(&self, x: f64, y: f64) -> f64 {
        self.abs + self.rel * x.abs().max(y.abs())
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            abs: 1e-9,
            rel: 1e-9,
        }
    }
}

/// A 2D point. Coordinates are always finite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    /// Panics on non-finite coordinates; use [`Point::try_new`] at I/O
    /// boundaries.
    pub fn new(x: f64, y: f64) -> Self {
        assert!(
            x.is_finite() && y.is_finite(),
            "point coordinates must be finite"
        );
        Point { x, y }
    }

    pub fn try_new(x: f64, y: f64) -> Result<Self> {
        if !x.is_finite() || !y.is_finite() {
            return Err(Error::NonFinite(x, y));
        }
        Ok(Point { x, y })
    }

    pub fn distance_to(&self, other: Point) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }

    /// Midpoint of the segment to `other`.
    pub fn midpoint(&self, other: Point) -> Point {
        Point {
            x: 0.5 * (self.x + other.x),
            y: 0.5 * (self.y + other.y),
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

// JSON encoding: a point is the two-element array [x, y].
impl Serialize for Point {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(2))?;
        seq.serialize_element(&self.x)?;
        seq.serialize_element(&self.y)?;
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Point {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct PointVisitor;
        impl<'de> Visitor<'de> for PointVisitor {
            type Value = Point;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a two-element array [x, y]")
            }
            fn visit_seq<A: SeqAccess<'de>>(
                self,
                mut seq: A,
            ) -> std::result::Result<Point, A::Error> {
                let x: f64 = seq
                    .next_element()?
                    .ok_or_else(|| de::Error::invalid_length(0, &self))?;
                let y: f64 = seq
                    .next_element()?
                    .ok_or_else(|| de::Error::invalid_length(1, &self))?;
                if seq.next_element::<f64>()?.is_some() {
                    return Err(de::Error::invalid_length(3, &self));
                }
                Point::try_new(x, y).map_err(de::Error::custom)
            }
        }
        deserializer.deserialize_seq(PointVisitor)
    }
}

/// A normalized implicit line: the set `{(x, y) : a*x + b*y = c}` with
/// `a^2 + b^2 = 1` and a canonical sign (`a > 0`, or `a ~ 0` and `b > 0`),
/// so equal lines compare equal componentwise.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Line {
    a: f64,
    b: f64,
    c: f64,
}

impl Line {
    /// Builds the canonical line for `a*x + b*y = c`. The input need not be
    /// normalized.
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        if !a.is_finite() || !b.is_finite() || !c.is_finite() {
            return Err(Error::NonFinite(a, b));
        }
        let n = a.hypot(b);
        if n < 1e-12 {
            return Err(Error::ZeroNormal);
        }
        let (mut a, mut b, mut c) = (a / n, b / n, c / n);
        let flip = if a > SIGN_EPS {
            false
        } else if a < -SIGN_EPS {
            true
        } else {
            b < 0.0
        };
        if flip {
            a = -a;
            b = -b;
            c = -c;
        }
        Ok(Line { a, b, c })
    }

    /// The horizontal line `y = y0`.
    pub fn horizontal(y0: f64) -> Self {
        Line::new(0.0, 1.0, y0).expect("finite offset")
    }

    /// The vertical line `x = x0`.
    pub fn vertical(x0: f64) -> Self {
        Line::new(1.0, 0.0, x0).expect("finite offset")
    }

    /// Line through two distinct points.
    pub fn from_points(p: Point, q: Point, tol: &Tolerance) -> Result<Self> {
        if p.distance_to(q) <= tol.abs {
            return Err(Error::CoincidentPoints);
        }
        let (dx, dy) = (q.x - p.x, q.y - p.y);
        // Normal is the segment direction rotated a quarter turn.
        let (a, b) = (-dy, dx);
        Line::new(a, b, a * p.x + b * p.y)
    }

    /// Perpendicular bisector of two distinct points: the unique fold that
    /// places `p` onto `q`.
    pub fn bisector(p: Point, q: Point, tol: &Tolerance) -> Result<Self> {
        if p.distance_to(q) <= tol.abs {
            return Err(Error::CoincidentPoints);
        }
        let (a, b) = (q.x - p.x, q.y - p.y);
        let m = p.midpoint(q);
        Line::new(a, b, a * m.x + b * m.y)
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    /// Signed distance from `p`; the sign follows the unit normal `(a, b)`.
    pub fn signed_distance(&self, p: Point) -> f64 {
        self.a * p.x + self.b * p.y - self.c
    }

    /// Shortest distance from `p` to the line.
    pub fn distance_to(&self, p: Point) -> f64 {
        self.signed_distance(p).abs()
    }

    pub fn contains(&self, p: Point, tol: &Tolerance) -> bool {
        self.distance_to(p) <= tol.abs
    }

    /// Mirror image of `p` across the line.
    pub fn reflect_point(&self, p: Point) -> Point {
        let d = self.signed_distance(p);
        Point {
            x: p.x - 2.0 * d * self.a,
            y: p.y - 2.0 * d * self.b,
        }
    }

    /// Mirror image of the line `m` across `self`.
    pub fn reflect_line(&self, m: &Line) -> Line {
        // The reflection x -> x + 2(c - n.x)n maps {nm.x = cm} to the line
        // with normal nm - 2(nm.nl)nl and offset cm - 2 cl (nm.nl).
        let dot = self.a * m.a + self.b * m.b;
        let a = m.a - 2.0 * dot * self.a;
        let b = m.b - 2.0 * dot * self.b;
        let c = m.c - 2.0 * dot * self.c;
        Line::new(a, b, c).expect("reflection preserves the unit normal")
    }

    /// Intersection point, `None` when parallel. Coincident lines are an
    /// error, distinguishable from plain parallelism.
    pub fn intersection(&self, m: &Line, tol: &Tolerance) -> Result<Option<Point>> {
        let det = self.a * m.b - self.b * m.a;
        if det.abs() <= tol.abs {
            // Canonical parallel lines have near-equal normals up to sign.
            let c_other = if self.a * m.a + self.b * m.b >= 0.0 {
                m.c
            } else {
                -m.c
            };
            if (self.c - c_other).abs() <= tol.abs {
                return Err(Error::CoincidentLines);
            }
            return Ok(None);
        }
        Ok(Some(Point {
            x: (self.c * m.b - m.c * self.b) / det,
            y: (self.a * m.c - m.a * self.c) / det,
        }))
    }

    /// Foot of the perpendicular dropped from `p` onto the line.
    pub fn perpendicular_foot(&self, p: Point) -> Point {
        let d = self.signed_distance(p);
        Point {
            x: p.x - d * self.a,
            y: p.y - d * self.b,
        }
    }

    /// Slope `-a/b`, or `None` for a (near-)vertical line.
    pub fn slope(&self) -> Option<f64> {
        if self.b.abs() <= SIGN_EPS {
            None
        } else {
            Some(-self.a / self.b)
        }
    }

    /// Intercept with the y axis, `None` for a (near-)vertical line.
    pub fn y_intercept(&self) -> Option<f64> {
        if self.b.abs() <= SIGN_EPS {
            None
        } else {
            Some(self.c / self.b)
        }
    }

    /// Unit direction vector of the line.
    pub fn direction(&self) -> (f64, f64) {
        (-self.b, self.a)
    }

    /// A concrete point on the line (the one closest to the origin).
    pub fn point_on(&self) -> Point {
        Point {
            x: self.a * self.c,
            y: self.b * self.c,
        }
    }

    pub fn is_parallel(&self, m: &Line, tol: &Tolerance) -> bool {
        (self.a * m.b - self.b * m.a).abs() <= tol.abs
    }

    /// Componentwise equality of canonical forms.
    pub fn approx_eq(&self, m: &Line, eps: f64) -> bool {
        (self.a - m.a).abs() <= eps && (self.b - m.b).abs() <= eps && (self.c - m.c).abs() <= eps
    }

    /// Total order on the canonical tuple `(a, b, c)`.
    pub fn canonical_cmp(&self, m: &Line) -> std::cmp::Ordering {
        self.a
            .total_cmp(&m.a)
            .then(self.b.total_cmp(&m.b))
            .then(self.c.total_cmp(&m.c))
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x + {}y = {}", self.a, self.b, self.c)
    }
}

// JSON encoding: {"a": ..., "b": ..., "c": ...}, canonicalized on read.
impl Serialize for Line {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("Line", 3)?;
        s.serialize_field("a", &self.a)?;
        s.serialize_field("b", &self.b)?;
        s.serialize_field("c", &self.c)?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for Line {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            a: f64,
            b: f64,
            c: f64,
        }
        let raw = Raw::deserialize(deserializer)?;
        Line::new(raw.a, raw.b, raw.c).map_err(de::Error::custom)
    }
}
