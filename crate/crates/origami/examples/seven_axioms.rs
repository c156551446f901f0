//! Runs each of the seven single-fold operations on a concrete instance and
//! prints the resulting fold lines.
//!
//!     cargo run --example seven_axioms

use origami::{axioms, Line, Point, Tolerance};

fn show(name: &str, what: &str, folds: &origami::axioms::FoldSet) {
    println!("{name}: {what}");
    if folds.is_empty() {
        println!("    no fold exists");
    }
    for fold in folds.iter() {
        println!("    fold {fold}");
    }
}

fn main() {
    let tol = Tolerance::default();
    let p = Point::new(0.0, 1.0);
    let q = Point::new(2.0, 0.0);
    let x_axis = Line::horizontal(0.0);
    let y_axis = Line::vertical(0.0);

    let folds = axioms::o1(p, q, &tol).unwrap();
    show("O1", "the crease through (0,1) and (2,0)", &folds);

    let folds = axioms::o2(p, q, &tol).unwrap();
    show("O2", "placing (0,1) onto (2,0)", &folds);

    let folds = axioms::o3(&x_axis, &y_axis, &tol).unwrap();
    show("O3", "placing the x axis onto the y axis", &folds);

    let folds = axioms::o4(p, &x_axis, &tol).unwrap();
    show("O4", "through (0,1), perpendicular to the x axis", &folds);

    // Two folds through the origin place (0,1) onto y = -1.
    let folds = axioms::o5(p, Point::new(0.0, -1.0), &Line::horizontal(-1.0), &tol).unwrap();
    show("O5", "placing (0,1) onto y=-1 through (0,-1)", &folds);

    // The double placement: (0,1) onto y=-1 and (-2,-3) onto x=2. One of
    // the folds is y = 2x - 4.
    let folds = axioms::o6(
        p,
        &Line::horizontal(-1.0),
        Point::new(-2.0, -3.0),
        &Line::vertical(2.0),
        &tol,
    )
    .unwrap();
    show("O6", "(0,1) onto y=-1 and (-2,-3) onto x=2", &folds);

    let folds = axioms::o7(p, &x_axis, &y_axis, &tol).unwrap();
    show("O7", "perpendicular to x=0, placing (0,1) onto y=0", &folds);

    // Every returned fold satisfies its placement condition.
    for fold in axioms::o6(
        p,
        &Line::horizontal(-1.0),
        Point::new(-2.0, -3.0),
        &Line::vertical(2.0),
        &tol,
    )
    .unwrap()
    .iter()
    {
        let image = fold.reflect_point(p);
        println!(
            "check: fold {fold} sends (0,1) to ({:.6}, {:.6}), residual {:.2e}",
            image.x,
            image.y,
            Line::horizontal(-1.0).distance_to(image)
        );
    }
}
