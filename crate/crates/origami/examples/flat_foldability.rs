//! Single-vertex flat-foldability: the alternating sector-angle condition
//! and the mountain/valley count condition.
//!
//!     cargo run --example flat_foldability

use origami::flatfold::{single_vertex_flat_foldable, CreaseLabel, CreaseVertex};

fn vertex(angles_deg: &[f64], assignment: &str) -> CreaseVertex {
    let angles = angles_deg.iter().map(|d| d.to_radians()).collect();
    let labels = if assignment.is_empty() {
        None
    } else {
        Some(
            assignment
                .chars()
                .map(|c| {
                    if c == 'M' {
                        CreaseLabel::Mountain
                    } else {
                        CreaseLabel::Valley
                    }
                })
                .collect(),
        )
    };
    CreaseVertex::new(angles, labels).unwrap()
}

fn report(name: &str, v: &CreaseVertex) {
    let verdict = single_vertex_flat_foldable(v);
    println!(
        "{name}: alternating sum {:.3} deg ({}), {}{}",
        verdict.kawasaki.residual.to_degrees(),
        if verdict.kawasaki.pass { "ok" } else { "violated" },
        match verdict.maekawa {
            Some(m) => format!(
                "M - V = {} ({}), ",
                m.mountains as i64 - m.valleys as i64,
                if m.pass { "ok" } else { "violated" }
            ),
            None => "no assignment, ".to_string(),
        },
        if verdict.pass {
            "passes the necessary conditions"
        } else {
            "NOT flat-foldable"
        }
    );
}

fn main() {
    // The classic bird-base corner vertex.
    report(
        "bird base vertex ",
        &vertex(&[90.0, 90.0, 90.0, 90.0], "MMMV"),
    );
    // Same sectors, balanced assignment: the count condition fails.
    report(
        "balanced labels  ",
        &vertex(&[90.0, 90.0, 90.0, 90.0], "MMVV"),
    );
    // Unequal sectors that still alternate to zero.
    report(
        "skewed but flat  ",
        &vertex(&[100.0, 80.0, 80.0, 100.0], "MMMV"),
    );
    // Alternating sum of 140 degrees: cannot fold flat.
    report("bad sectors      ", &vertex(&[60.0, 70.0, 50.0, 180.0], ""));
    // A single straight crease through the vertex.
    report("straight crease  ", &vertex(&[180.0, 180.0], "MM"));
}
