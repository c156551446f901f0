//! Solves polynomial equations with folds: the slopes of the creases are
//! the roots.
//!
//!     cargo run --example equations_by_folding

use origami::{algebra, Tolerance};

fn main() {
    let tol = Tolerance::default();

    // t^2 - t - 1 = 0: the golden ratio and its conjugate, from a single
    // point-onto-line fold through a chosen point.
    let quad = algebra::solve_quadratic(-1.0, -1.0, &tol).unwrap();
    println!("t^2 - t - 1 = 0");
    for (root, fold) in quad.roots.iter().zip(&quad.folds) {
        println!("    root {root:+.12}  from fold {fold}");
    }
    println!(
        "    golden ratio error: {:.2e}",
        (quad.roots[1] - (1.0 + 5f64.sqrt()) / 2.0).abs()
    );

    // t^3 - 2 = 0: doubling the cube, impossible with ruler and compass.
    let cube = algebra::solve_cubic(0.0, 0.0, -2.0, &tol).unwrap();
    println!("t^3 - 2 = 0");
    println!(
        "    cbrt(2) = {:.12} (error {:.2e})",
        cube.roots[0],
        (cube.roots[0] - 2f64.cbrt()).abs()
    );

    // t^3 - 3t - 2 = (t+1)^2 (t-2): the fold with slope 2 is y = 2x - 4.
    let cubic = algebra::solve_cubic(0.0, -3.0, -2.0, &tol).unwrap();
    println!("t^3 - 3t - 2 = 0");
    println!("    distinct roots: {:?}", cubic.roots);
    for (root, fold) in cubic.roots.iter().zip(&cubic.folds) {
        println!(
            "    root {root:+.3}: fold slope {:+.12}, intercept {:+.12}",
            fold.slope().unwrap(),
            fold.y_intercept().unwrap()
        );
    }

    // The folds are common tangents of the two construction parabolas.
    let c = &cubic.construction;
    let pa = algebra::Parabola::new(c.p1, c.l1, &tol).unwrap();
    let pb = algebra::Parabola::new(c.p2, c.l2.unwrap(), &tol).unwrap();
    for fold in &cubic.folds {
        println!(
            "    tangency residuals: {:.2e} and {:.2e}",
            pa.tangency_residual(fold),
            pb.tangency_residual(fold)
        );
    }
}
