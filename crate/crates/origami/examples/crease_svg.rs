//! Builds an SVG scene by hand from a fold construction and prints it to
//! standard output. Rendering is deterministic: the same scene always
//! yields the same bytes.
//!
//!     cargo run --example crease_svg > trisection.svg

use origami::constructions::trisect_segment;
use origami::svg::{Element, StyleClass, SvgScene};
use origami::{Point, Tolerance};

fn main() {
    let tol = Tolerance::default();
    let t = trisect_segment(1.0, &tol).unwrap();

    let square = [
        Point::new(0.0, 0.0),
        Point::new(1.0, 0.0),
        Point::new(1.0, 1.0),
        Point::new(0.0, 1.0),
    ];
    let mut elements = vec![Element::Polygon {
        points: square.to_vec(),
        class: StyleClass::Outline,
    }];

    // Clip each recorded crease to the paper before drawing it.
    let paper = SvgScene::with_viewbox((0.0, 0.0, 1.0, 1.0), vec![]);
    for step in &t.trace.steps {
        if let Some((from, to)) = paper.clip_line(&step.fold) {
            elements.push(Element::Segment {
                from,
                to,
                class: StyleClass::Crease,
            });
        }
    }
    for (name, p) in &t.trace.derived_points {
        elements.push(Element::Marker {
            at: *p,
            label: Some(name.clone()),
        });
    }

    print!("{}", SvgScene::fitted(elements, 0.1).render());
}
