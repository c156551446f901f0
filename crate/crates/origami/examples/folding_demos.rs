//! The two classroom folds, checked numerically: folding a triangle flat
//! shows its angles tile a straight line and certifies the area formula;
//! folding the corners of a dissected square proves the Pythagorean
//! identity.
//!
//!     cargo run --example folding_demos

use origami::constructions::{angle_sum_demo, pythagoras_demo, Triangle};
use origami::{Point, Tolerance};

fn main() {
    let tol = Tolerance::default();

    let triangle = Triangle::new(
        Point::new(0.0, 0.0),
        Point::new(4.0, 0.0),
        Point::new(1.0, 2.0),
        &tol,
    )
    .unwrap();
    let demo = angle_sum_demo(&triangle, &tol).unwrap();
    println!("triangle fold:");
    println!(
        "    all three vertices meet at ({:.6}, {:.6})",
        demo.meeting_point.x, demo.meeting_point.y
    );
    for a in &demo.trace.assertions {
        println!(
            "    {:<18} residual {:.2e} (limit {:.0e}) {}",
            a.name,
            a.residual,
            a.limit,
            if a.ok() { "ok" } else { "FAILED" }
        );
    }

    let demo = pythagoras_demo(3.0, 4.0, &tol).unwrap();
    println!("square dissection with legs 3 and 4:");
    println!("    inner square side {:.12}", demo.side);
    for a in &demo.trace.assertions {
        println!(
            "    {:<18} residual {:.2e} (limit {:.0e}) {}",
            a.name,
            a.residual,
            a.limit,
            if a.ok() { "ok" } else { "FAILED" }
        );
    }
}
