//! Face extraction for the crease arrangement: the unit-square boundary
//! plus the active-path segments induce a planar subdivision, and the
//! creases for each resulting polygon can then be handled separately.
//!
//! Segments may share endpoints, end on other segments (T junctions) or lie
//! along each other and the square boundary; those are resolved by vertex
//! merging, splitting and deduplication. Segments that properly cross are
//! rejected. Components of the arrangement that float inside a face are
//! attached to it: cycles become holes, tree-like parts become dangling
//! segments.

use crate::error::{Error, Result};
use crate::geom::Point;
use crate::tree::ActivePathSet;

/// Vertex merge radius.
const VEPS: f64 = 1e-9;

/// Orientation-test threshold for the crossing check.
const ORIENT_EPS: f64 = 1e-12;

/// One face of the subdivision.
#[derive(Debug, Clone, PartialEq)]
pub struct Face {
    /// Bounding cycle, counter-clockwise, starting at its smallest vertex.
    pub outer: Vec<Point>,
    /// Contours of components nested inside this face (clockwise).
    pub holes: Vec<Vec<Point>>,
    /// Bridge segments lying inside this face without bounding area.
    pub dangling: Vec<(Point, Point)>,
    /// Enclosed area, holes subtracted.
    pub area: f64,
}

/// Faces of the subdivision induced by the unit square plus the active
/// paths. Face areas always sum to the square's area.
pub fn identify_polygons(paths: &ActivePathSet) -> Result<Vec<Face>> {
    let mut segments: Vec<(Point, Point)> = vec![
        (Point::new(0.0, 0.0), Point::new(1.0, 0.0)),
        (Point::new(1.0, 0.0), Point::new(1.0, 1.0)),
        (Point::new(1.0, 1.0), Point::new(0.0, 1.0)),
        (Point::new(0.0, 1.0), Point::new(0.0, 0.0)),
    ];
    for p in &paths.paths {
        let clamp = |q: Point| Point::new(q.x.clamp(0.0, 1.0), q.y.clamp(0.0, 1.0));
        segments.push((clamp(p.from), clamp(p.to)));
    }
    build_faces(&segments)
}

struct Arrangement {
    verts: Vec<Point>,
    /// Undirected edges as vertex-index pairs with u < v.
    edges: Vec<(usize, usize)>,
}

impl Arrangement {
    fn vertex(&mut self, p: Point) -> usize {
        for (i, q) in self.verts.iter().enumerate() {
            if q.distance_to(p) <= VEPS {
                return i;
            }
        }
        self.verts.push(p);
        self.verts.len() - 1
    }
}

fn orient(p: Point, q: Point, r: Point) -> f64 {
    (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)
}

fn build_faces(segments: &[(Point, Point)]) -> Result<Vec<Face>> {
    let mut arr = Arrangement {
        verts: Vec::new(),
        edges: Vec::new(),
    };
    let mut raw: Vec<(usize, usize)> = Vec::new();
    for (a, b) in segments {
        let u = arr.vertex(*a);
        let v = arr.vertex(*b);
        if u != v {
            raw.push((u, v));
        }
    }

    // Split every segment at vertices sitting in its interior, then dedupe.
    let mut seen = std::collections::BTreeSet::new();
    for &(u, v) in &raw {
        let pu = arr.verts[u];
        let pv = arr.verts[v];
        let len2 = (pv.x - pu.x).powi(2) + (pv.y - pu.y).powi(2);
        let mut cuts: Vec<(f64, usize)> = vec![(0.0, u), (1.0, v)];
        for (w, pw) in arr.verts.iter().enumerate() {
            if w == u || w == v {
                continue;
            }
            let t = ((pw.x - pu.x) * (pv.x - pu.x) + (pw.y - pu.y) * (pv.y - pu.y)) / len2;
            if t <= 0.0 || t >= 1.0 {
                continue;
            }
            let proj = Point::new(pu.x + t * (pv.x - pu.x), pu.y + t * (pv.y - pu.y));
            if proj.distance_to(*pw) <= VEPS {
                cuts.push((t, w));
            }
        }
        cuts.sort_by(|a, b| a.0.total_cmp(&b.0));
        for pair in cuts.windows(2) {
            let (a, b) = (pair[0].1, pair[1].1);
            if a != b && seen.insert((a.min(b), a.max(b))) {
                arr.edges.push((a.min(b), a.max(b)));
            }
        }
    }

    // Any remaining interior-interior intersection is a genuine crossing.
    for (i, &(a, b)) in arr.edges.iter().enumerate() {
        for &(c, d) in &arr.edges[i + 1..] {
            if a == c || a == d || b == c || b == d {
                continue;
            }
            let (pa, pb, pc, pd) = (arr.verts[a], arr.verts[b], arr.verts[c], arr.verts[d]);
            let o1 = orient(pa, pb, pc);
            let o2 = orient(pa, pb, pd);
            let o3 = orient(pc, pd, pa);
            let o4 = orient(pc, pd, pb);
            if o1.abs() > ORIENT_EPS
                && o2.abs() > ORIENT_EPS
                && o3.abs() > ORIENT_EPS
                && o4.abs() > ORIENT_EPS
                && o1 * o2 < 0.0
                && o3 * o4 < 0.0
            {
                let t = o3 / (o3 - o4);
                let x = pa.x + t * (pb.x - pa.x);
                let y = pa.y + t * (pb.y - pa.y);
                return Err(Error::CrossingPaths(pa.x, pa.y, x, y));
            }
        }
    }

    extract(&arr)
}

fn extract(arr: &Arrangement) -> Result<Vec<Face>> {
    let nv = arr.verts.len();
    let ne = arr.edges.len();
    let tail = |h: usize| {
        let (u, v) = arr.edges[h / 2];
        if h.is_multiple_of(2) {
            u
        } else {
            v
        }
    };
    let head = |h: usize| tail(h ^ 1);

    // Counter-clockwise rings of outgoing half-edges per vertex.
    let mut rings: Vec<Vec<usize>> = vec![Vec::new(); nv];
    for h in 0..2 * ne {
        rings[tail(h)].push(h);
    }
    for (v, ring) in rings.iter_mut().enumerate() {
        ring.sort_by(|&g, &h| {
            let pg = arr.verts[head(g)];
            let ph = arr.verts[head(h)];
            let p = arr.verts[v];
            let ag = (pg.y - p.y).atan2(pg.x - p.x);
            let ah = (ph.y - p.y).atan2(ph.x - p.x);
            ag.total_cmp(&ah).then(g.cmp(&h))
        });
    }
    let mut ring_pos = vec![0usize; 2 * ne];
    for ring in &rings {
        for (i, &h) in ring.iter().enumerate() {
            ring_pos[h] = i;
        }
    }
    // Continuing a face walk: the edge before the reversed one in the ring,
    // which keeps the enclosed region on the left.
    let next = |h: usize| {
        let ring = &rings[head(h)];
        let i = ring_pos[h ^ 1];
        ring[(i + ring.len() - 1) % ring.len()]
    };

    // Face orbits with signed areas.
    let mut face_of = vec![usize::MAX; 2 * ne];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    let mut areas: Vec<f64> = Vec::new();
    for h0 in 0..2 * ne {
        if face_of[h0] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        let mut walk = Vec::new();
        let mut area = 0.0;
        let mut h = h0;
        loop {
            face_of[h] = id;
            walk.push(h);
            let p = arr.verts[tail(h)];
            let q = arr.verts[head(h)];
            area += 0.5 * (p.x * q.y - q.x * p.y);
            h = next(h);
            if h == h0 {
                break;
            }
        }
        orbits.push(walk);
        areas.push(area);
    }

    let is_bridge: Vec<bool> = (0..ne).map(|e| face_of[2 * e] == face_of[2 * e + 1]).collect();
    let orbit_has_cycle: Vec<bool> = orbits
        .iter()
        .map(|walk| walk.iter().any(|&h| !is_bridge[h / 2]))
        .collect();

    // Connected components of the arrangement.
    let mut comp = (0..nv).collect::<Vec<usize>>();
    fn find(comp: &mut Vec<usize>, x: usize) -> usize {
        if comp[x] != x {
            let root = find(comp, comp[x]);
            comp[x] = root;
        }
        comp[x]
    }
    for &(u, v) in &arr.edges {
        let (ru, rv) = (find(&mut comp, u), find(&mut comp, v));
        if ru != rv {
            comp[ru] = rv;
        }
    }
    let orbit_comp: Vec<usize> = orbits
        .iter()
        .map(|walk| find(&mut comp, tail(walk[0])))
        .collect();

    let global_outer = (0..orbits.len())
        .min_by(|&i, &j| areas[i].total_cmp(&areas[j]))
        .expect("the square contributes at least one face");
    let root_comp = orbit_comp[global_outer];

    // Bounded faces come from cyclic orbits with positive area.
    let cycle_points = |walk: &[usize]| -> Vec<Point> {
        let filtered: Vec<usize> = walk.iter().copied().filter(|&h| !is_bridge[h / 2]).collect();
        let start = filtered
            .iter()
            .enumerate()
            .min_by(|(_, &g), (_, &h)| {
                let pg = arr.verts[tail(g)];
                let ph = arr.verts[tail(h)];
                pg.x.total_cmp(&ph.x).then(pg.y.total_cmp(&ph.y))
            })
            .map(|(i, _)| i)
            .unwrap_or(0);
        (0..filtered.len())
            .map(|i| arr.verts[tail(filtered[(start + i) % filtered.len()])])
            .collect()
    };

    let mut face_ids = Vec::new();
    let mut faces: std::collections::BTreeMap<usize, Face> = std::collections::BTreeMap::new();
    for (id, walk) in orbits.iter().enumerate() {
        if id != global_outer && orbit_has_cycle[id] && areas[id] > 0.0 {
            faces.insert(
                id,
                Face {
                    outer: cycle_points(walk),
                    holes: Vec::new(),
                    dangling: Vec::new(),
                    area: areas[id],
                },
            );
            face_ids.push(id);
        }
    }

    // Attach every floating component to the smallest face containing it.
    let mut parent_of_comp: std::collections::BTreeMap<usize, usize> =
        std::collections::BTreeMap::new();
    let comps: std::collections::BTreeSet<usize> =
        (0..nv).map(|v| find(&mut comp, v)).collect();
    for c in comps {
        if c == root_comp {
            continue;
        }
        let rep = arr.verts[(0..nv)
            .filter(|&v| find(&mut comp, v) == c)
            .min_by(|&a, &b| {
                arr.verts[a]
                    .x
                    .total_cmp(&arr.verts[b].x)
                    .then(arr.verts[a].y.total_cmp(&arr.verts[b].y))
            })
            .expect("component has vertices")];
        let parent = face_ids
            .iter()
            .copied()
            .filter(|&id| orbit_comp[id] != c && point_in_cycle(rep, &faces[&id].outer))
            .min_by(|&i, &j| areas[i].total_cmp(&areas[j]))
            .ok_or_else(|| {
                Error::NumericalFailure("floating component outside every face".into())
            })?;
        parent_of_comp.insert(c, parent);
    }

    // Holes: the outer contour of each nested cyclic component.
    for (id, walk) in orbits.iter().enumerate() {
        let c = orbit_comp[id];
        if c == root_comp || areas[id] >= 0.0 || !orbit_has_cycle[id] {
            continue;
        }
        let parent = parent_of_comp[&c];
        let face = faces.get_mut(&parent).expect("parent face exists");
        face.holes.push(cycle_points(walk));
        face.area += areas[id];
    }

    // Dangling bridges land in the face whose orbit they sit in, or in the
    // parent face of their floating component.
    for e in 0..ne {
        if !is_bridge[e] {
            continue;
        }
        let id = face_of[2 * e];
        let target = if faces.contains_key(&id) {
            Some(id)
        } else if orbit_comp[id] != root_comp {
            parent_of_comp.get(&orbit_comp[id]).copied()
        } else {
            None
        };
        if let Some(fid) = target {
            let (u, v) = arr.edges[e];
            let (pu, pv) = (arr.verts[u], arr.verts[v]);
            let seg = if (pu.x, pu.y) <= (pv.x, pv.y) {
                (pu, pv)
            } else {
                (pv, pu)
            };
            let face = faces.get_mut(&fid).expect("face exists");
            if !face.dangling.contains(&seg) {
                face.dangling.push(seg);
            }
        }
    }

    let mut out: Vec<Face> = faces.into_values().collect();
    for f in &mut out {
        f.dangling.sort_by(|a, b| {
            (a.0.x, a.0.y, a.1.x, a.1.y)
                .partial_cmp(&(b.0.x, b.0.y, b.1.x, b.1.y))
                .unwrap()
        });
        f.holes.sort_by(|a, b| {
            (a[0].x, a[0].y)
                .partial_cmp(&(b[0].x, b[0].y))
                .unwrap()
        });
    }
    out.sort_by(|f, g| {
        (f.outer[0].x, f.outer[0].y, f.area)
            .partial_cmp(&(g.outer[0].x, g.outer[0].y, g.area))
            .unwrap()
    });
    Ok(out)
}

/// Ray-casting point-in-polygon test (the point is never on the boundary
/// for the uses above: distinct components cannot touch).
fn point_in_cycle(p: Point, cycle: &[Point]) -> bool {
    let mut inside = false;
    let n = cycle.len();
    for i in 0..n {
        let a = cycle[i];
        let b = cycle[(i + 1) % n];
        if (a.y > p.y) != (b.y > p.y) {
            let x_cross = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
            if p.x < x_cross {
                inside = !inside;
            }
        }
    }
    inside
}
