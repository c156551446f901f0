//! Deterministic SVG emission: fixed element order, fixed six-decimal
//! coordinate formatting, and a fitted viewBox, so identical scenes render
//! to identical bytes.

use crate::geom::{Line, Point};
use std::fmt::Write;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StyleClass {
    Crease,
    Fold,
    ActivePath,
    Outline,
}

impl StyleClass {
    fn name(self) -> &'static str {
        match self {
            StyleClass::Crease => "crease",
            StyleClass::Fold => "fold",
            StyleClass::ActivePath => "active-path",
            StyleClass::Outline => "outline",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Element {
    Segment {
        from: Point,
        to: Point,
        class: StyleClass,
    },
    Marker {
        at: Point,
        label: Option<String>,
    },
    Polygon {
        points: Vec<Point>,
        class: StyleClass,
    },
    Label {
        at: Point,
        text: String,
    },
}

/// An ordered list of drawable elements with a viewBox containing them all.
#[derive(Debug, Clone, PartialEq)]
pub struct SvgScene {
    viewbox: (f64, f64, f64, f64),
    elements: Vec<Element>,
}

impl SvgScene {
    /// Builds a scene with the viewBox fitted around the elements plus a
    /// margin.
    pub fn fitted(elements: Vec<Element>, margin: f64) -> Self {
        let mut min = (f64::INFINITY, f64::INFINITY);
        let mut max = (f64::NEG_INFINITY, f64::NEG_INFINITY);
        let mut account = |p: &Point| {
            min.0 = min.0.min(p.x);
            min.1 = min.1.min(p.y);
            max.0 = max.0.max(p.x);
            max.1 = max.1.max(p.y);
        };
        for e in &elements {
            match e {
                Element::Segment { from, to, .. } => {
                    account(from);
                    account(to);
                }
                Element::Marker { at, .. } | Element::Label { at, .. } => account(at),
                Element::Polygon { points, .. } => points.iter().for_each(&mut account),
            }
        }
        let viewbox = if elements.is_empty() {
            (0.0, 0.0, 1.0, 1.0)
        } else {
            (
                min.0 - margin,
                min.1 - margin,
                (max.0 - min.0) + 2.0 * margin,
                (max.1 - min.1) + 2.0 * margin,
            )
        };
        SvgScene { viewbox, elements }
    }

    /// Builds a scene over an explicit viewBox; elements outside it should
    /// be clipped by the caller first.
    pub fn with_viewbox(viewbox: (f64, f64, f64, f64), elements: Vec<Element>) -> Self {
        SvgScene { viewbox, elements }
    }

    pub fn viewbox(&self) -> (f64, f64, f64, f64) {
        self.viewbox
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    /// Renders the scene. The output is a pure function of the scene value.
    pub fn render(&self) -> String {
        let (x, y, w, h) = self.viewbox;
        let mut out = String::new();
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}">"#,
            fmt6(x),
            fmt6(y),
            fmt6(w.max(1e-6)),
            fmt6(h.max(1e-6)),
        );
        // The y axis points up in the geometry; flip it for screen space.
        let _ = writeln!(
            out,
            r#"<g transform="translate(0,{}) scale(1,-1)">"#,
            fmt6(2.0 * y + h)
        );
        out.push_str(
            "<style>\n\
             .crease { stroke: #888888; stroke-dasharray: 0.02 0.012; fill: none; }\n\
             .fold { stroke: #c0392b; fill: none; }\n\
             .active-path { stroke: #2471a3; fill: none; }\n\
             .outline { stroke: #222222; fill: #f4f1ea; }\n\
             .marker { fill: #222222; stroke: none; }\n\
             text { font-size: 0.05px; fill: #222222; transform: scale(1,-1); }\n\
             </style>\n",
        );
        let stroke = (self.viewbox.2.max(self.viewbox.3) / 300.0).max(1e-6);
        let _ = writeln!(out, r#"<g stroke-width="{}">"#, fmt6(stroke));
        for e in &self.elements {
            match e {
                Element::Segment { from, to, class } => {
                    let _ = writeln!(
                        out,
                        r#"<line class="{}" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
                        class.name(),
                        fmt6(from.x),
                        fmt6(from.y),
                        fmt6(to.x),
                        fmt6(to.y)
                    );
                }
                Element::Marker { at, label } => {
                    let _ = writeln!(
                        out,
                        r#"<circle class="marker" cx="{}" cy="{}" r="{}"/>"#,
                        fmt6(at.x),
                        fmt6(at.y),
                        fmt6(stroke * 2.5)
                    );
                    if let Some(text) = label {
                        let _ = writeln!(
                            out,
                            r#"<text x="{}" y="{}">{}</text>"#,
                            fmt6(at.x + 3.0 * stroke),
                            fmt6(-(at.y + 3.0 * stroke)),
                            escape(text)
                        );
                    }
                }
                Element::Polygon { points, class } => {
                    let mut attr = String::new();
                    for p in points {
                        let _ = write!(attr, "{},{} ", fmt6(p.x), fmt6(p.y));
                    }
                    let _ = writeln!(
                        out,
                        r#"<polygon class="{}" points="{}"/>"#,
                        class.name(),
                        attr.trim_end()
                    );
                }
                Element::Label { at, text } => {
                    let _ = writeln!(
                        out,
                        r#"<text x="{}" y="{}">{}</text>"#,
                        fmt6(at.x),
                        fmt6(-at.y),
                        escape(text)
                    );
                }
            }
        }
        out.push_str("</g>\n</g>\n</svg>\n");
        out
    }

    /// Clips an infinite line to the viewBox; `None` when it misses.
    pub fn clip_line(&self, line: &Line) -> Option<(Point, Point)> {
        clip_line(line, self.viewbox)
    }
}

/// Clips an infinite line to a `(x, y, w, h)` box; `None` when it misses.
pub fn clip_line(line: &Line, viewbox: (f64, f64, f64, f64)) -> Option<(Point, Point)> {
    let (x0, y0, w, h) = viewbox;
    let (x1, y1) = (x0 + w, y0 + h);
    let (a, b, c) = (line.a(), line.b(), line.c());
    let mut hits: Vec<Point> = Vec::new();
    let mut push = |p: Point| {
        if hits.iter().all(|q| q.distance_to(p) > 1e-9) {
            hits.push(p);
        }
    };
    if b.abs() > 1e-12 {
        for x in [x0, x1] {
            let y = (c - a * x) / b;
            if y >= y0 - 1e-9 && y <= y1 + 1e-9 {
                push(Point::new(x, y));
            }
        }
    }
    if a.abs() > 1e-12 {
        for y in [y0, y1] {
            let x = (c - b * y) / a;
            if x >= x0 - 1e-9 && x <= x1 + 1e-9 {
                push(Point::new(x, y));
            }
        }
    }
    if hits.len() < 2 {
        return None;
    }
    // Take the two extreme hits along the line direction.
    let (dx, dy) = line.direction();
    hits.sort_by(|p, q| (p.x * dx + p.y * dy).total_cmp(&(q.x * dx + q.y * dy)));
    Some((hits[0], *hits.last().unwrap()))
}

/// Fixed six-decimal formatting with a normalized zero.
fn fmt6(x: f64) -> String {
    let v = if x == 0.0 { 0.0 } else { x };
    format!("{:.6}", v)
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_scene_is_minimal_and_stable() {
        let scene = SvgScene::fitted(vec![], 0.0);
        let a = scene.render();
        let b = scene.render();
        assert_eq!(a, b);
        assert!(a.starts_with("<svg"));
        assert!(a.ends_with("</svg>\n"));
        assert!(a.contains(r#"viewBox="0.000000 0.000000 1.000000 1.000000""#));
    }

    #[test]
    fn segment_count_matches_scene() {
        let scene = SvgScene::fitted(
            vec![Element::Segment {
                from: Point::new(0.0, 0.0),
                to: Point::new(1.0, 1.0),
                class: StyleClass::ActivePath,
            }],
            0.05,
        );
        let svg = scene.render();
        assert_eq!(svg.matches("<line").count(), 1);
        assert_eq!(svg.matches("active-path").count(), 2); // style + element
    }

    #[test]
    fn clip_line_inside_box() {
        let scene = SvgScene::fitted(
            vec![Element::Polygon {
                points: vec![
                    Point::new(0.0, 0.0),
                    Point::new(1.0, 0.0),
                    Point::new(1.0, 1.0),
                    Point::new(0.0, 1.0),
                ],
                class: StyleClass::Outline,
            }],
            0.0,
        );
        let (p, q) = scene.clip_line(&Line::horizontal(0.5)).unwrap();
        assert!((p.y - 0.5).abs() < 1e-12 && (q.y - 0.5).abs() < 1e-12);
        assert!((q.x - p.x).abs() > 0.99);
        assert!(scene.clip_line(&Line::horizontal(5.0)).is_none());
    }
}
