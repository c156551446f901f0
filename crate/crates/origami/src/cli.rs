//! Command-line front end: JSON in, JSON out, optional SVG rendering.
//!
//! Exit codes: 0 success or passing verdict, 1 no-solution or failing
//! verdict, 2 invalid input or usage, 3 numerical failure. Output bytes are
//! deterministic for identical inputs: JSON keys are sorted, numbers carry
//! twelve significant digits, SVG coordinates six decimals, and the layout
//! optimizer is seeded.

use crate::algebra::{self, FoldSolution, Parabola};
use crate::axioms::{self, AxiomId, FoldSet};
use crate::constructions::{self, ConstructionTrace, Triangle};
use crate::error::Error;
use crate::flatfold::{self, VertexSpec};
use crate::geom::{Line, Point, Tolerance};
use crate::subdivision::{self, Face};
use crate::svg::{clip_line, Element, StyleClass, SvgScene};
use crate::tree::{self, WeightedTree, DEFAULT_STARTS};
use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde::Deserialize;
use serde_json::{json, Value};
use std::io::{Read, Write};

#[derive(Parser, Debug)]
#[command(
    name = "origami",
    about = "Fold-axiom solvers, equation solving by folds, flat-foldability checks, and uniaxial-base layouts",
    version
)]
struct Cli {
    /// Write an SVG rendering of the result to this path.
    #[arg(long, global = true, value_name = "PATH")]
    svg: Option<String>,
    /// Write the JSON result to this path instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<String>,
    /// Absolute tolerance override (also via ORIGAMI_TOL).
    #[arg(long, global = true, value_name = "X")]
    tol: Option<f64>,
    /// Seed for the layout optimizer.
    #[arg(long, global = true, value_name = "N")]
    seed: Option<u64>,
    /// Number of layout optimizer starts.
    #[arg(long, global = true, value_name = "N")]
    starts: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Solve one fold axiom (O1..O7) on a JSON input document.
    Axiom {
        /// Axiom identifier: O1 through O7.
        id: String,
        /// Input JSON path, or - for standard input.
        input: String,
    },
    /// Solve t^2 + p t + q = 0 by folding a point onto a line.
    #[command(allow_negative_numbers = true)]
    Quadratic { p: f64, q: f64 },
    /// Solve t^3 + a t^2 + b t + c = 0 by a double placement fold.
    #[command(allow_negative_numbers = true)]
    Cubic { a: f64, b: f64, c: f64 },
    /// Trisect a segment of the given length by folds.
    TrisectSegment { length: f64 },
    /// Trisect an angle, given in degrees, by a fold construction.
    #[command(allow_negative_numbers = true)]
    TrisectAngle { degrees: f64 },
    /// Run a verified folding demonstration: angle-sum or pythagoras.
    #[command(allow_negative_numbers = true)]
    Demo {
        /// angle-sum (optionally six triangle coordinates) or pythagoras
        /// (optionally the two leg lengths).
        which: String,
        values: Vec<f64>,
    },
    /// Check single-vertex flat-foldability of a crease vertex JSON file.
    Flatfold {
        /// Input JSON path, or - for standard input.
        input: String,
    },
    /// Compute a scale-optimal uniaxial-base layout for a tree JSON file.
    Layout {
        /// Input JSON path, or - for standard input.
        input: String,
    },
}

/// Runs the CLI against explicit argv (index 0 is the program name) and the
/// real process streams and environment.
pub fn run<I, S>(args: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let env_tol = std::env::var("ORIGAMI_TOL").ok();
    run_with_io(
        args,
        &mut std::io::stdout(),
        &mut std::io::stderr(),
        env_tol.as_deref(),
    )
}

/// Same as [`run`] with injectable streams and environment, for tests.
pub fn run_with_io<I, S>(
    args: I,
    out: &mut dyn Write,
    err: &mut dyn Write,
    env_tol: Option<&str>,
) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args: Vec<String> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    2
                }
            };
        }
    };

    let tol = {
        let abs = match (cli.tol, env_tol) {
            (Some(t), _) => Some(t),
            (None, Some(s)) => match s.trim().parse::<f64>() {
                Ok(t) => Some(t),
                Err(_) => {
                    let _ = writeln!(err, "error: ORIGAMI_TOL is not a number: {s:?}");
                    return 2;
                }
            },
            (None, None) => None,
        };
        match abs {
            None => Tolerance::default(),
            Some(a) => match Tolerance::new(a, Tolerance::default().rel) {
                Ok(t) => t,
                Err(e) => {
                    let _ = writeln!(err, "error: {e}");
                    return 2;
                }
            },
        }
    };

    let outcome = dispatch(&cli, &tol);
    match outcome {
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::NumericalFailure(_) => 3,
                _ => 2,
            }
        }
        Ok(Outcome { value, scene, exit }) => {
            let body = serde_json::to_string_pretty(&value).expect("serializable value");
            match &cli.json {
                None => {
                    let _ = writeln!(out, "{body}");
                }
                Some(path) => {
                    if let Err(e) = std::fs::write(path, body + "\n") {
                        let _ = writeln!(err, "error: cannot write {path}: {e}");
                        return 2;
                    }
                }
            }
            if let Some(path) = &cli.svg {
                let rendered = scene.render();
                if let Err(e) = std::fs::write(path, rendered) {
                    let _ = writeln!(err, "error: cannot write {path}: {e}");
                    return 2;
                }
            }
            exit
        }
    }
}

struct Outcome {
    value: Value,
    scene: SvgScene,
    exit: i32,
}

fn dispatch(cli: &Cli, tol: &Tolerance) -> Result<Outcome, Error> {
    match &cli.command {
        Command::Axiom { id, input } => {
            let axiom: AxiomId = id.parse()?;
            let doc = read_input(input)?;
            run_axiom(axiom, &doc, tol)
        }
        Command::Quadratic { p, q } => {
            if !p.is_finite() || !q.is_finite() {
                return Err(Error::DegenerateInput("coefficients must be finite".into()));
            }
            let solution = algebra::solve_quadratic(*p, *q, tol)?;
            let exit = if solution.roots.is_empty() { 1 } else { 0 };
            Ok(Outcome {
                value: solution_json(&solution),
                scene: solution_scene(&solution, tol),
                exit,
            })
        }
        Command::Cubic { a, b, c } => {
            if !a.is_finite() || !b.is_finite() || !c.is_finite() {
                return Err(Error::DegenerateInput("coefficients must be finite".into()));
            }
            let solution = algebra::solve_cubic(*a, *b, *c, tol)?;
            Ok(Outcome {
                value: solution_json(&solution),
                scene: solution_scene(&solution, tol),
                exit: 0,
            })
        }
        Command::TrisectSegment { length } => {
            let t = constructions::trisect_segment(*length, tol)?;
            let mut value = trace_json(&t.trace);
            value["length"] = jnum(*length);
            value["one_third"] = jpoint(t.one_third);
            value["two_thirds"] = jpoint(t.two_thirds);
            let scene = trace_scene(&t.trace, &[]);
            Ok(Outcome {
                value,
                scene,
                exit: 0,
            })
        }
        Command::TrisectAngle { degrees } => {
            let theta = degrees.to_radians();
            let t = constructions::trisect_angle(theta, tol)?;
            let mut value = trace_json(&t.trace);
            value["theta_deg"] = jnum(*degrees);
            value["third_deg"] = jnum(t.angle.to_degrees());
            value["cos_third"] = jnum(t.cosine);
            value["ray"] = jline(&t.ray);
            let arms = [
                (
                    Point::new(0.0, 0.0),
                    Point::new(1.2, 0.0),
                    StyleClass::Outline,
                ),
                (
                    Point::new(0.0, 0.0),
                    Point::new(1.2 * theta.cos(), 1.2 * theta.sin()),
                    StyleClass::Outline,
                ),
            ];
            let scene = trace_scene(&t.trace, &arms);
            Ok(Outcome {
                value,
                scene,
                exit: 0,
            })
        }
        Command::Demo { which, values } => run_demo(which, values, tol),
        Command::Flatfold { input } => {
            let doc = read_input(input)?;
            let spec: VertexSpec = serde_json::from_str(&doc)
                .map_err(|e| Error::InvalidVertex(format!("bad vertex JSON: {e}")))?;
            let vertex = spec.to_vertex()?;
            let verdict = flatfold::single_vertex_flat_foldable(&vertex);
            let value = json!({
                "angle_count": vertex.crease_count(),
                "kawasaki": {
                    "pass": verdict.kawasaki.pass,
                    "even_count": verdict.kawasaki.even_count,
                    "residual_deg": jnum(verdict.kawasaki.residual.to_degrees()),
                },
                "maekawa": verdict.maekawa.map(|m| json!({
                    "pass": m.pass,
                    "mountains": m.mountains,
                    "valleys": m.valleys,
                })),
                "pass": verdict.pass,
            });
            Ok(Outcome {
                value,
                scene: vertex_scene(&vertex),
                exit: if verdict.pass { 0 } else { 1 },
            })
        }
        Command::Layout { input } => {
            let doc = read_input(input)?;
            let tree = WeightedTree::from_json(&doc)?;
            let starts = cli.starts.unwrap_or(DEFAULT_STARTS);
            let seed = cli.seed.unwrap_or(0);
            let layout = tree::optimize_scale(&tree, starts, seed, tol)?;
            let active = tree::mark_active_paths(&tree, &layout)?;
            let faces = subdivision::identify_polygons(&active)?;

            let mut positions = serde_json::Map::new();
            for (id, p) in &layout.positions {
                positions.insert(id.clone(), jpoint(*p));
            }
            let value = json!({
                "m": jnum(layout.scale),
                "positions": Value::Object(positions),
                "active_paths": active.paths.iter().map(|p| json!({
                    "pair": [p.pair.0, p.pair.1],
                    "from": jpoint(p.from),
                    "to": jpoint(p.to),
                    "tree_distance": jnum(p.tree_distance),
                })).collect::<Vec<_>>(),
                "polygons": faces.iter().map(face_json).collect::<Vec<_>>(),
            });
            Ok(Outcome {
                value,
                scene: layout_scene(&layout, &active, &faces),
                exit: 0,
            })
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PointsInput {
    p1: Point,
    p2: Point,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct LinesInput {
    l1: Line,
    l2: Line,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PointLineInput {
    p: Point,
    l: Line,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct O5Input {
    p1: Point,
    p2: Point,
    l1: Line,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct O6Input {
    p1: Point,
    l1: Line,
    p2: Point,
    l2: Line,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct O7Input {
    p: Point,
    l1: Line,
    l2: Line,
}

fn run_axiom(axiom: AxiomId, doc: &str, tol: &Tolerance) -> Result<Outcome, Error> {
    let bad = |e: serde_json::Error| Error::DegenerateInput(format!("bad axiom input: {e}"));
    let mut points: Vec<Point> = Vec::new();
    let mut lines: Vec<Line> = Vec::new();
    let folds: FoldSet = match axiom {
        AxiomId::O1 | AxiomId::O2 => {
            let input: PointsInput = serde_json::from_str(doc).map_err(bad)?;
            points.extend([input.p1, input.p2]);
            match axiom {
                AxiomId::O1 => axioms::o1(input.p1, input.p2, tol)?,
                _ => axioms::o2(input.p1, input.p2, tol)?,
            }
        }
        AxiomId::O3 => {
            let input: LinesInput = serde_json::from_str(doc).map_err(bad)?;
            lines.extend([input.l1, input.l2]);
            axioms::o3(&input.l1, &input.l2, tol)?
        }
        AxiomId::O4 => {
            let input: PointLineInput = serde_json::from_str(doc).map_err(bad)?;
            points.push(input.p);
            lines.push(input.l);
            axioms::o4(input.p, &input.l, tol)?
        }
        AxiomId::O5 => {
            let input: O5Input = serde_json::from_str(doc).map_err(bad)?;
            points.extend([input.p1, input.p2]);
            lines.push(input.l1);
            axioms::o5(input.p1, input.p2, &input.l1, tol)?
        }
        AxiomId::O6 => {
            let input: O6Input = serde_json::from_str(doc).map_err(bad)?;
            points.extend([input.p1, input.p2]);
            lines.extend([input.l1, input.l2]);
            axioms::o6(input.p1, &input.l1, input.p2, &input.l2, tol)?
        }
        AxiomId::O7 => {
            let input: O7Input = serde_json::from_str(doc).map_err(bad)?;
            points.push(input.p);
            lines.extend([input.l1, input.l2]);
            axioms::o7(input.p, &input.l1, &input.l2, tol)?
        }
    };
    let exit = if folds.is_empty() { 1 } else { 0 };
    Ok(Outcome {
        value: fold_set_json(&folds),
        scene: axiom_scene(&points, &lines, &folds),
        exit,
    })
}

fn run_demo(which: &str, values: &[f64], tol: &Tolerance) -> Result<Outcome, Error> {
    match which {
        "angle-sum" => {
            let coords: Vec<f64> = if values.is_empty() {
                vec![0.0, 0.0, 4.0, 0.0, 1.0, 2.0]
            } else if values.len() == 6 {
                values.to_vec()
            } else {
                return Err(Error::DegenerateInput(
                    "angle-sum takes zero or six coordinates".into(),
                ));
            };
            let triangle = Triangle::new(
                Point::try_new(coords[0], coords[1])?,
                Point::try_new(coords[2], coords[3])?,
                Point::try_new(coords[4], coords[5])?,
                tol,
            )?;
            let demo = constructions::angle_sum_demo(&triangle, tol)?;
            let mut value = trace_json(&demo.trace);
            value["demo"] = json!("angle-sum");
            value["pass"] = json!(demo.trace.verified());
            value["meeting_point"] = jpoint(demo.meeting_point);
            let outline: Vec<(Point, Point, StyleClass)> = (0..3)
                .map(|i| {
                    (
                        triangle.vertices[i],
                        triangle.vertices[(i + 1) % 3],
                        StyleClass::Outline,
                    )
                })
                .collect();
            let exit = if demo.trace.verified() { 0 } else { 1 };
            Ok(Outcome {
                value,
                scene: trace_scene(&demo.trace, &outline),
                exit,
            })
        }
        "pythagoras" => {
            let (a, b) = if values.is_empty() {
                (3.0, 4.0)
            } else if values.len() == 2 {
                (values[0], values[1])
            } else {
                return Err(Error::DegenerateInput(
                    "pythagoras takes zero or two lengths".into(),
                ));
            };
            let demo = constructions::pythagoras_demo(a, b, tol)?;
            let mut value = trace_json(&demo.trace);
            value["demo"] = json!("pythagoras");
            value["pass"] = json!(demo.trace.verified());
            value["side"] = jnum(demo.side);
            value["inner_square"] = Value::Array(
                demo.inner_square.iter().map(|p| jpoint(*p)).collect(),
            );
            let s = a + b;
            let corners = [
                Point::new(0.0, 0.0),
                Point::new(s, 0.0),
                Point::new(s, s),
                Point::new(0.0, s),
            ];
            let outline: Vec<(Point, Point, StyleClass)> = (0..4)
                .map(|i| (corners[i], corners[(i + 1) % 4], StyleClass::Outline))
                .collect();
            let exit = if demo.trace.verified() { 0 } else { 1 };
            Ok(Outcome {
                value,
                scene: trace_scene(&demo.trace, &outline),
                exit,
            })
        }
        other => Err(Error::DegenerateInput(format!(
            "unknown demo {other:?}; use angle-sum or pythagoras"
        ))),
    }
}

fn read_input(path: &str) -> Result<String, Error> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::DegenerateInput(format!("cannot read standard input: {e}")))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Error::DegenerateInput(format!("cannot read {path}: {e}")))
    }
}

// ---------------------------------------------------------------------------
// JSON shaping: numbers are rounded to twelve significant digits so repeated
// runs emit identical bytes and round-trips stay within 1e-12 per field.

fn sig12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return 0.0;
    }
    let exp = x.abs().log10().floor() as i32;
    let factor = 10f64.powi((11 - exp).clamp(-300, 300));
    (x * factor).round() / factor
}

fn jnum(x: f64) -> Value {
    json!(sig12(x))
}

fn jpoint(p: Point) -> Value {
    json!([sig12(p.x), sig12(p.y)])
}

fn jline(l: &Line) -> Value {
    json!({"a": sig12(l.a()), "b": sig12(l.b()), "c": sig12(l.c())})
}

fn fold_set_json(folds: &FoldSet) -> Value {
    json!({
        "folds": folds.iter().map(jline).collect::<Vec<_>>(),
        "multiplicity": folds.multiplicity(),
    })
}

fn solution_json(solution: &FoldSolution) -> Value {
    json!({
        "roots": solution.roots.iter().map(|r| jnum(*r)).collect::<Vec<_>>(),
        "folds": solution.folds.iter().map(jline).collect::<Vec<_>>(),
        "construction": {
            "p1": jpoint(solution.construction.p1),
            "l1": jline(&solution.construction.l1),
            "p2": jpoint(solution.construction.p2),
            "l2": solution.construction.l2.as_ref().map(jline),
        },
    })
}

fn trace_json(trace: &ConstructionTrace) -> Value {
    let mut derived = serde_json::Map::new();
    for (name, p) in &trace.derived_points {
        derived.insert(name.clone(), jpoint(*p));
    }
    json!({
        "steps": trace.steps.iter().map(|s| json!({
            "name": s.name,
            "axiom": s.application.axiom().to_string(),
            "fold": jline(&s.fold),
        })).collect::<Vec<_>>(),
        "derived_points": Value::Object(derived),
        "assertions": trace.assertions.iter().map(|a| json!({
            "name": a.name,
            "residual": jnum(a.residual),
            "limit": jnum(a.limit),
            "pass": a.ok(),
        })).collect::<Vec<_>>(),
    })
}

fn face_json(face: &Face) -> Value {
    json!({
        "vertices": face.outer.iter().map(|p| jpoint(*p)).collect::<Vec<_>>(),
        "area": jnum(face.area),
        "holes": face.holes.iter().map(|h| {
            Value::Array(h.iter().map(|p| jpoint(*p)).collect())
        }).collect::<Vec<_>>(),
        "dangling": face.dangling.iter().map(|(a, b)| {
            json!([jpoint(*a), jpoint(*b)])
        }).collect::<Vec<_>>(),
    })
}

// ---------------------------------------------------------------------------
// Scenes.

fn padded_viewbox(anchors: &[Point], margin: f64, min_half: f64) -> (f64, f64, f64, f64) {
    let mut min = (f64::INFINITY, f64::INFINITY);
    let mut max = (f64::NEG_INFINITY, f64::NEG_INFINITY);
    for p in anchors {
        min.0 = min.0.min(p.x);
        min.1 = min.1.min(p.y);
        max.0 = max.0.max(p.x);
        max.1 = max.1.max(p.y);
    }
    if anchors.is_empty() {
        return (-1.0, -1.0, 2.0, 2.0);
    }
    let cx = 0.5 * (min.0 + max.0);
    let cy = 0.5 * (min.1 + max.1);
    let half = (0.5 * (max.0 - min.0))
        .max(0.5 * (max.1 - min.1))
        .max(min_half)
        + margin;
    (cx - half, cy - half, 2.0 * half, 2.0 * half)
}

fn axiom_scene(points: &[Point], lines: &[Line], folds: &FoldSet) -> SvgScene {
    let mut anchors = points.to_vec();
    for l in lines {
        anchors.push(l.point_on());
    }
    for f in folds.iter() {
        anchors.push(f.point_on());
    }
    let viewbox = padded_viewbox(&anchors, 1.0, 1.5);
    let mut elements = Vec::new();
    for l in lines {
        if let Some((p, q)) = clip_line(l, viewbox) {
            elements.push(Element::Segment {
                from: p,
                to: q,
                class: StyleClass::Crease,
            });
        }
    }
    for f in folds.iter() {
        if let Some((p, q)) = clip_line(f, viewbox) {
            elements.push(Element::Segment {
                from: p,
                to: q,
                class: StyleClass::Fold,
            });
        }
    }
    for (i, p) in points.iter().enumerate() {
        elements.push(Element::Marker {
            at: *p,
            label: Some(format!("p{}", i + 1)),
        });
    }
    SvgScene::with_viewbox(viewbox, elements)
}

/// Scene for the equation solvers: both parabolas sampled, directrices and
/// folds clipped, foci marked. Sampled points are checked against the
/// parabola before rendering.
fn solution_scene(solution: &FoldSolution, tol: &Tolerance) -> SvgScene {
    let c = &solution.construction;
    let mut anchors = vec![c.p1, c.p2, c.l1.perpendicular_foot(c.p1)];
    if let Some(l2) = &c.l2 {
        anchors.push(l2.perpendicular_foot(c.p2));
    }
    for f in &solution.folds {
        anchors.push(f.perpendicular_foot(c.p1));
    }
    let viewbox = padded_viewbox(&anchors, 2.0, 3.0);
    let mut elements = Vec::new();

    let sample_parabola = |focus: Point, directrix: &Line, elements: &mut Vec<Element>| {
        if let Ok(parabola) = Parabola::new(focus, *directrix, tol) {
            let center = directrix.perpendicular_foot(focus);
            let (dx, dy) = directrix.direction();
            let s0 = center.x * dx + center.y * dy;
            let span = viewbox.2;
            let n = 96;
            let mut prev: Option<Point> = None;
            for i in 0..=n {
                let s = s0 - span + 2.0 * span * (i as f64) / (n as f64);
                let p = parabola.point_at(s);
                debug_assert!(parabola.point_residual(p) <= 1e-9);
                let inside = p.x >= viewbox.0
                    && p.x <= viewbox.0 + viewbox.2
                    && p.y >= viewbox.1
                    && p.y <= viewbox.1 + viewbox.3;
                if let (Some(q), true) = (prev, inside) {
                    elements.push(Element::Segment {
                        from: q,
                        to: p,
                        class: StyleClass::Crease,
                    });
                }
                prev = if inside { Some(p) } else { None };
            }
        }
    };
    sample_parabola(c.p1, &c.l1, &mut elements);
    if let Some(l2) = &c.l2 {
        sample_parabola(c.p2, l2, &mut elements);
    }

    for l in [Some(&c.l1), c.l2.as_ref()].into_iter().flatten() {
        if let Some((p, q)) = clip_line(l, viewbox) {
            elements.push(Element::Segment {
                from: p,
                to: q,
                class: StyleClass::Outline,
            });
        }
    }
    for f in &solution.folds {
        if let Some((p, q)) = clip_line(f, viewbox) {
            elements.push(Element::Segment {
                from: p,
                to: q,
                class: StyleClass::Fold,
            });
        }
    }
    elements.push(Element::Marker {
        at: c.p1,
        label: Some("p1".into()),
    });
    elements.push(Element::Marker {
        at: c.p2,
        label: Some("p2".into()),
    });
    SvgScene::with_viewbox(viewbox, elements)
}

fn trace_scene(trace: &ConstructionTrace, outline: &[(Point, Point, StyleClass)]) -> SvgScene {
    let mut anchors: Vec<Point> = trace.derived_points.iter().map(|(_, p)| *p).collect();
    for (p, q, _) in outline {
        anchors.push(*p);
        anchors.push(*q);
    }
    for step in &trace.steps {
        anchors.push(step.fold.point_on());
    }
    let viewbox = padded_viewbox(&anchors, 0.5, 1.0);
    let mut elements = Vec::new();
    for (p, q, class) in outline {
        elements.push(Element::Segment {
            from: *p,
            to: *q,
            class: *class,
        });
    }
    for step in &trace.steps {
        if let Some((p, q)) = clip_line(&step.fold, viewbox) {
            elements.push(Element::Segment {
                from: p,
                to: q,
                class: StyleClass::Crease,
            });
        }
    }
    for (name, p) in &trace.derived_points {
        elements.push(Element::Marker {
            at: *p,
            label: Some(name.clone()),
        });
    }
    SvgScene::with_viewbox(viewbox, elements)
}

fn vertex_scene(vertex: &flatfold::CreaseVertex) -> SvgScene {
    let mut elements = Vec::new();
    let origin = Point::new(0.0, 0.0);
    let mut angle = 0.0f64;
    for (i, sector) in vertex.angles().iter().enumerate() {
        let dir = Point::new(angle.cos(), angle.sin());
        let label = vertex.assignment().map(|labels| {
            match labels[i] {
                flatfold::CreaseLabel::Mountain => format!("M{i}"),
                flatfold::CreaseLabel::Valley => format!("V{i}"),
            }
        });
        elements.push(Element::Segment {
            from: origin,
            to: dir,
            class: StyleClass::Crease,
        });
        elements.push(Element::Marker { at: dir, label });
        angle += sector;
    }
    SvgScene::fitted(elements, 0.3)
}

fn layout_scene(
    layout: &tree::Layout,
    active: &tree::ActivePathSet,
    faces: &[Face],
) -> SvgScene {
    let mut elements = Vec::new();
    for face in faces {
        elements.push(Element::Polygon {
            points: face.outer.clone(),
            class: StyleClass::Outline,
        });
    }
    let square = [
        Point::new(0.0, 0.0),
        Point::new(1.0, 0.0),
        Point::new(1.0, 1.0),
        Point::new(0.0, 1.0),
    ];
    for i in 0..4 {
        elements.push(Element::Segment {
            from: square[i],
            to: square[(i + 1) % 4],
            class: StyleClass::Outline,
        });
    }
    for path in &active.paths {
        elements.push(Element::Segment {
            from: path.from,
            to: path.to,
            class: StyleClass::ActivePath,
        });
    }
    for (id, p) in &layout.positions {
        elements.push(Element::Marker {
            at: *p,
            label: Some(id.clone()),
        });
    }
    elements.push(Element::Label {
        at: Point::new(0.02, 1.05),
        text: format!("m = {:.6}", layout.scale),
    });
    SvgScene::fitted(elements, 0.1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv: Vec<String> = std::iter::once("origami".to_string())
            .chain(args.iter().map(|s| s.to_string()))
            .collect();
        let code = run_with_io(argv, &mut out, &mut err, None);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn cubic_golden_instance_via_cli() {
        let (code, out, _) = run_capture(&["cubic", "0", "-3", "-2"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        let roots = v["roots"].as_array().unwrap();
        assert_eq!(roots.len(), 2);
        assert!((roots[0].as_f64().unwrap() + 1.0).abs() < 1e-9);
        assert!((roots[1].as_f64().unwrap() - 2.0).abs() < 1e-9);
    }

    #[test]
    fn arity_errors_exit_two() {
        let (code, _, err) = run_capture(&["cubic", "0", "0", "1", "extra"]);
        assert_eq!(code, 2);
        assert!(!err.is_empty());
    }

    #[test]
    fn unknown_flags_rejected() {
        let (code, _, _) = run_capture(&["cubic", "0", "0", "1", "--frobnicate"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn quadratic_without_roots_exits_one() {
        let (code, out, _) = run_capture(&["quadratic", "0", "1"]);
        assert_eq!(code, 1);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert!(v["roots"].as_array().unwrap().is_empty());
    }

    #[test]
    fn sig12_rounds() {
        assert_eq!(sig12(0.0), 0.0);
        assert_eq!(sig12(-0.0), 0.0);
        assert_eq!(sig12(1.0 / 3.0), 0.333333333333);
        assert_eq!((sig12(2f64.sqrt()) * 1e11).round(), 141421356237.0);
        assert_eq!(sig12(1234.5678901234567), 1234.56789012);
    }

    #[test]
    fn tolerance_resolution_prefers_flag() {
        let (code, _, err) = run_capture(&["--tol", "0.01", "cubic", "0", "0", "-2"]);
        assert_eq!(code, 2, "{err}");

        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run_with_io(
            ["origami", "cubic", "0", "0", "-2"].map(String::from),
            &mut out,
            &mut err,
            Some("not-a-number"),
        );
        assert_eq!(code, 2);
    }

    #[test]
    fn demo_validation() {
        let (code, _, _) = run_capture(&["demo", "angle-sum", "1", "2", "3"]);
        assert_eq!(code, 2);
        let (code, _, _) = run_capture(&["demo", "unknown"]);
        assert_eq!(code, 2);
        let (code, out, _) = run_capture(&["demo", "pythagoras"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["pass"], json!(true));
    }
}
