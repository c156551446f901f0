//! Exact thirds from folds alone: a segment split at 1/3 and 2/3, and the
//! classical angle trisection that compass and straightedge cannot do.
//!
//!     cargo run --example trisection

use origami::{constructions, Tolerance};
use std::f64::consts::PI;

fn main() {
    let tol = Tolerance::default();

    let seg = constructions::trisect_segment(1.0, &tol).unwrap();
    println!("unit segment:");
    println!("    one third at  x = {:.15}", seg.one_third.x);
    println!("    two thirds at x = {:.15}", seg.two_thirds.x);
    println!("    creases used:");
    for step in &seg.trace.steps {
        println!("        {:<18} {} fold {}", step.name, step.application.axiom(), step.fold);
    }

    for degrees in [90.0, 60.0, 135.0, 10.0] {
        let theta = degrees * PI / 180.0;
        let tri = constructions::trisect_angle(theta, &tol).unwrap();
        println!(
            "{degrees:>5.1} deg -> {:.9} deg (error {:.2e} rad, ray {})",
            tri.angle.to_degrees(),
            (tri.angle - theta / 3.0).abs(),
            tri.ray
        );
    }
}
