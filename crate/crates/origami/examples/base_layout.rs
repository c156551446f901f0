//! Designs the layout for a six-limbed base: places the terminals of a
//! weighted tree in the unit square at the largest feasible scale, marks
//! the guaranteed creases, and partitions the square into polygons.
//!
//!     cargo run --example base_layout [out.svg]

use origami::subdivision::identify_polygons;
use origami::svg::{Element, StyleClass, SvgScene};
use origami::tree::{mark_active_paths, optimize_scale, NodeKind, WeightedTree};
use origami::Tolerance;

fn main() {
    // A lizard-like base: head, two forelegs, two hind legs, and a long
    // tail hanging off a two-segment stem.
    let tree = WeightedTree::from_parts(
        vec![
            ("head".into(), NodeKind::Terminal),
            ("foreleg_l".into(), NodeKind::Terminal),
            ("foreleg_r".into(), NodeKind::Terminal),
            ("hindleg_l".into(), NodeKind::Terminal),
            ("hindleg_r".into(), NodeKind::Terminal),
            ("tail".into(), NodeKind::Terminal),
            ("shoulder".into(), NodeKind::Internal),
            ("hip".into(), NodeKind::Internal),
        ],
        vec![
            ("head".into(), "shoulder".into(), 1.0),
            ("foreleg_l".into(), "shoulder".into(), 1.0),
            ("foreleg_r".into(), "shoulder".into(), 1.0),
            ("shoulder".into(), "hip".into(), 2.0),
            ("hindleg_l".into(), "hip".into(), 1.0),
            ("hindleg_r".into(), "hip".into(), 1.0),
            ("hip".into(), "tail".into(), 3.0),
        ],
    )
    .unwrap();
    println!(
        "head-to-tail distance along the tree: {}",
        tree.distance("head", "tail").unwrap()
    );

    let tol = Tolerance::default();
    let layout = optimize_scale(&tree, 32, 7, &tol).unwrap();
    println!("optimal scale m = {:.9}", layout.scale);
    for (id, p) in &layout.positions {
        println!("    {id:<10} at ({:.6}, {:.6})", p.x, p.y);
    }

    let active = mark_active_paths(&tree, &layout).unwrap();
    println!("{} active paths (guaranteed creases):", active.paths.len());
    for path in &active.paths {
        println!(
            "    {} -- {} (tree distance {})",
            path.pair.0, path.pair.1, path.tree_distance
        );
    }

    let faces = identify_polygons(&active).unwrap();
    let total: f64 = faces.iter().map(|f| f.area).sum();
    println!("{} polygons, total area {:.12}:", faces.len(), total);
    for face in &faces {
        println!(
            "    {} vertices, area {:.6}, {} dangling creases",
            face.outer.len(),
            face.area,
            face.dangling.len()
        );
    }

    if let Some(path) = std::env::args().nth(1) {
        let mut elements = Vec::new();
        for face in &faces {
            elements.push(Element::Polygon {
                points: face.outer.clone(),
                class: StyleClass::Outline,
            });
        }
        for p in &active.paths {
            elements.push(Element::Segment {
                from: p.from,
                to: p.to,
                class: StyleClass::ActivePath,
            });
        }
        for (id, p) in &layout.positions {
            elements.push(Element::Marker {
                at: *p,
                label: Some(id.clone()),
            });
        }
        let svg = SvgScene::fitted(elements, 0.08).render();
        std::fs::write(&path, svg).unwrap();
        println!("wrote {path}");
    }
}
