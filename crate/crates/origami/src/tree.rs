//! Weighted tree model for uniaxial bases and the scale-optimal layout
//! search. A layout places every terminal node in the unit square so that
//! planar distances dominate scaled tree distances; the optimizer maximizes
//! the scale, and pairs that meet the distance bound with equality become
//! guaranteed creases (active paths).

use crate::error::{Error, Result};
use crate::geom::{Point, Tolerance};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

pub const DEFAULT_STARTS: usize = 32;

/// Feasibility slack: a layout passes when no pair violates the scaled tree
/// distance by more than this.
pub const FEASIBILITY_EPS: f64 = 1e-9;

/// Relative slack under which a pair counts as active.
pub const ACTIVE_EPS: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NodeKind {
    Terminal,
    Internal,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct NodeSpec {
    id: String,
    kind: NodeKind,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct TreeSpec {
    nodes: Vec<NodeSpec>,
    edges: Vec<(String, String, f64)>,
}

/// A connected acyclic graph with positive edge lengths and at least two
/// terminal nodes.
#[derive(Debug, Clone)]
pub struct WeightedTree {
    ids: Vec<String>,
    kinds: Vec<NodeKind>,
    adjacency: Vec<Vec<(usize, f64)>>,
    edges: Vec<(usize, usize, f64)>,
}

impl WeightedTree {
    pub fn from_parts(
        nodes: Vec<(String, NodeKind)>,
        edges: Vec<(String, String, f64)>,
    ) -> Result<Self> {
        let mut ids = Vec::with_capacity(nodes.len());
        let mut kinds = Vec::with_capacity(nodes.len());
        let mut index = BTreeMap::new();
        for (id, kind) in nodes {
            if index.insert(id.clone(), ids.len()).is_some() {
                return Err(Error::InvalidTree(format!("duplicate node id {id:?}")));
            }
            ids.push(id);
            kinds.push(kind);
        }
        if ids.len() < 2 {
            return Err(Error::InvalidTree("a tree needs at least two nodes".into()));
        }

        let mut adjacency = vec![Vec::new(); ids.len()];
        let mut resolved = Vec::with_capacity(edges.len());
        for (u, v, len) in &edges {
            let iu = *index
                .get(u)
                .ok_or_else(|| Error::UnknownNode(u.clone()))?;
            let iv = *index
                .get(v)
                .ok_or_else(|| Error::UnknownNode(v.clone()))?;
            if iu == iv {
                return Err(Error::InvalidTree(format!("self loop at {u:?}")));
            }
            if !len.is_finite() || *len <= 1e-9 {
                return Err(Error::InvalidTree(format!(
                    "edge {u:?}-{v:?} has non-positive length {len}"
                )));
            }
            adjacency[iu].push((iv, *len));
            adjacency[iv].push((iu, *len));
            resolved.push((iu, iv, *len));
        }

        if resolved.len() != ids.len() - 1 {
            return Err(Error::InvalidTree(format!(
                "{} edges for {} nodes; a tree needs exactly n - 1",
                resolved.len(),
                ids.len()
            )));
        }
        // Connectivity; with n - 1 edges this also rules out cycles.
        let mut seen = vec![false; ids.len()];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &(v, _) in &adjacency[u] {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::InvalidTree("tree is not connected".into()));
        }
        if ids.iter().zip(&kinds).filter(|(_, k)| **k == NodeKind::Terminal).count() < 2 {
            return Err(Error::InvalidTree(
                "a tree needs at least two terminal nodes".into(),
            ));
        }

        Ok(WeightedTree {
            ids,
            kinds,
            adjacency,
            edges: resolved,
        })
    }

    pub fn from_json(json: &str) -> Result<Self> {
        let spec: TreeSpec = serde_json::from_str(json)
            .map_err(|e| Error::InvalidTree(format!("bad tree JSON: {e}")))?;
        WeightedTree::from_parts(
            spec.nodes.into_iter().map(|n| (n.id, n.kind)).collect(),
            spec.edges,
        )
    }

    pub fn node_ids(&self) -> &[String] {
        &self.ids
    }

    pub fn edges(&self) -> impl Iterator<Item = (&str, &str, f64)> {
        self.edges
            .iter()
            .map(|&(u, v, len)| (self.ids[u].as_str(), self.ids[v].as_str(), len))
    }

    /// Terminal node ids in declaration order.
    pub fn terminals(&self) -> Vec<&str> {
        self.ids
            .iter()
            .zip(&self.kinds)
            .filter(|(_, k)| **k == NodeKind::Terminal)
            .map(|(id, _)| id.as_str())
            .collect()
    }

    fn index_of(&self, id: &str) -> Result<usize> {
        self.ids
            .iter()
            .position(|x| x == id)
            .ok_or_else(|| Error::UnknownNode(id.to_string()))
    }

    /// Sum of edge lengths along the unique path between two nodes.
    pub fn distance(&self, u: &str, v: &str) -> Result<f64> {
        let a = self.index_of(u)?;
        let b = self.index_of(v)?;
        if a == b {
            return Ok(0.0);
        }
        // Fixed traversal direction keeps the sum bitwise symmetric.
        let (start, goal) = (a.min(b), a.max(b));
        let mut dist = vec![f64::NAN; self.ids.len()];
        dist[start] = 0.0;
        let mut stack = vec![start];
        while let Some(n) = stack.pop() {
            for &(m, len) in &self.adjacency[n] {
                if dist[m].is_nan() {
                    dist[m] = dist[n] + len;
                    if m == goal {
                        return Ok(dist[m]);
                    }
                    stack.push(m);
                }
            }
        }
        unreachable!("tree is connected");
    }
}

/// A scaled placement of the terminal nodes in the closed unit square.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Layout {
    pub scale: f64,
    pub positions: BTreeMap<String, Point>,
}

impl Layout {
    pub fn new(scale: f64, positions: BTreeMap<String, Point>, tol: &Tolerance) -> Result<Self> {
        if !scale.is_finite() || scale <= 0.0 {
            return Err(Error::InvalidLayout(scale));
        }
        for p in positions.values() {
            if p.x < -tol.abs || p.x > 1.0 + tol.abs || p.y < -tol.abs || p.y > 1.0 + tol.abs {
                return Err(Error::InvalidLayout(0.0));
            }
        }
        Ok(Layout { scale, positions })
    }

    pub fn position(&self, id: &str) -> Result<Point> {
        self.positions
            .get(id)
            .copied()
            .ok_or_else(|| Error::MissingPosition(id.to_string()))
    }
}

/// Outcome of a layout validity check: verdict, the worst pair, and its gap
/// (negative when the distance condition is violated).
#[derive(Debug, Clone, PartialEq)]
pub struct LayoutCheck {
    pub pass: bool,
    pub worst_pair: Option<(String, String)>,
    /// Smallest value of planar distance minus scaled tree distance.
    pub worst_gap: f64,
}

/// The distance condition: every pair of terminal placements must be at
/// least the scaled tree distance apart.
pub fn validate_layout(tree: &WeightedTree, layout: &Layout) -> Result<LayoutCheck> {
    let terminals = tree.terminals();
    let mut worst_gap = f64::INFINITY;
    let mut worst_pair = None;
    for (i, u) in terminals.iter().enumerate() {
        for v in &terminals[i + 1..] {
            let pu = layout.position(u)?;
            let pv = layout.position(v)?;
            let gap = pu.distance_to(pv) - layout.scale * tree.distance(u, v)?;
            if gap < worst_gap {
                worst_gap = gap;
                worst_pair = Some((u.to_string(), v.to_string()));
            }
        }
    }
    Ok(LayoutCheck {
        pass: worst_gap >= -FEASIBILITY_EPS,
        worst_pair,
        worst_gap,
    })
}

/// One terminal pair whose planar distance equals its scaled tree distance:
/// a guaranteed crease of the final base.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ActivePath {
    pub pair: (String, String),
    pub from: Point,
    pub to: Point,
    pub tree_distance: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ActivePathSet {
    pub scale: f64,
    pub paths: Vec<ActivePath>,
}

impl ActivePathSet {
    /// Assembles a set directly from segments; used when the paths come
    /// from somewhere other than a marked layout.
    pub fn from_segments(segments: Vec<(Point, Point)>) -> Self {
        ActivePathSet {
            scale: 1.0,
            paths: segments
                .into_iter()
                .enumerate()
                .map(|(i, (from, to))| ActivePath {
                    pair: (format!("a{i}"), format!("b{i}")),
                    from,
                    to,
                    tree_distance: from.distance_to(to),
                })
                .collect(),
        }
    }
}

/// Marks exactly the pairs whose slack is below the relative activity
/// threshold. The layout must already satisfy the distance condition.
pub fn mark_active_paths(tree: &WeightedTree, layout: &Layout) -> Result<ActivePathSet> {
    let check = validate_layout(tree, layout)?;
    if !check.pass {
        return Err(Error::InvalidLayout(check.worst_gap));
    }
    let terminals = tree.terminals();
    let mut paths = Vec::new();
    for (i, u) in terminals.iter().enumerate() {
        for v in &terminals[i + 1..] {
            let pu = layout.position(u)?;
            let pv = layout.position(v)?;
            let required = layout.scale * tree.distance(u, v)?;
            let slack = pu.distance_to(pv) - required;
            if slack <= ACTIVE_EPS * required.max(1.0) {
                paths.push(ActivePath {
                    pair: (u.to_string(), v.to_string()),
                    from: pu,
                    to: pv,
                    tree_distance: tree.distance(u, v)?,
                });
            }
        }
    }
    Ok(ActivePathSet {
        scale: layout.scale,
        paths,
    })
}

/// Internal optimizer state for one start: terminal positions as a flat
/// vector of (x, y).
struct StartResult {
    scale: f64,
    positions: Vec<(f64, f64)>,
}

/// Maximizes the layout scale with a deterministic multi-start search:
/// softmin gradient ascent over the pairwise distance ratios with an
/// annealed temperature, followed by a compass-search polish of the exact
/// minimum ratio. The scale of the returned layout is the exact minimum
/// ratio, so the distance condition holds with at least one active pair.
pub fn optimize_scale(
    tree: &WeightedTree,
    starts: usize,
    seed: u64,
    tol: &Tolerance,
) -> Result<Layout> {
    let terminals: Vec<String> = tree.terminals().iter().map(|s| s.to_string()).collect();
    let n = terminals.len();
    let mut dist = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let d = tree.distance(&terminals[i], &terminals[j])?;
            dist[i][j] = d;
            dist[j][i] = d;
        }
    }

    let starts = starts.max(1);
    let results: Vec<StartResult> = (0..starts)
        .into_par_iter()
        .map(|start| run_start(n, &dist, seed, start as u64))
        .collect();

    let mut best: Option<StartResult> = None;
    for r in results {
        let better = match &best {
            None => true,
            Some(b) => {
                r.scale > b.scale
                    || (r.scale == b.scale && lex_less(&r.positions, &b.positions))
            }
        };
        if better {
            best = Some(r);
        }
    }
    let best = best.expect("at least one start");
    assert!(
        best.scale > 1e-6,
        "a valid tree always admits a layout with positive scale"
    );

    let mut positions = BTreeMap::new();
    for (id, (x, y)) in terminals.iter().zip(&best.positions) {
        positions.insert(id.clone(), Point::new(*x, *y));
    }
    Layout::new(best.scale, positions, tol)
}

fn lex_less(a: &[(f64, f64)], b: &[(f64, f64)]) -> bool {
    for ((ax, ay), (bx, by)) in a.iter().zip(b) {
        match ax.total_cmp(bx).then(ay.total_cmp(by)) {
            std::cmp::Ordering::Less => return true,
            std::cmp::Ordering::Greater => return false,
            std::cmp::Ordering::Equal => {}
        }
    }
    false
}

fn min_ratio(pos: &[(f64, f64)], dist: &[Vec<f64>]) -> f64 {
    let n = pos.len();
    let mut m = f64::INFINITY;
    for i in 0..n {
        for j in i + 1..n {
            let d = ((pos[i].0 - pos[j].0).powi(2) + (pos[i].1 - pos[j].1).powi(2)).sqrt();
            m = m.min(d / dist[i][j]);
        }
    }
    m
}

/// All pairwise ratios, ascending. Comparing these lexicographically lets
/// the polish cross plateaus where several pairs are tight at the minimum:
/// a move that holds the minimum but widens the next-tightest pair is still
/// progress.
fn sorted_ratios(pos: &[(f64, f64)], dist: &[Vec<f64>], out: &mut Vec<f64>) {
    out.clear();
    let n = pos.len();
    for i in 0..n {
        for j in i + 1..n {
            let d = ((pos[i].0 - pos[j].0).powi(2) + (pos[i].1 - pos[j].1).powi(2)).sqrt();
            out.push(d / dist[i][j]);
        }
    }
    out.sort_by(f64::total_cmp);
}

fn lex_greater(a: &[f64], b: &[f64]) -> bool {
    for (x, y) in a.iter().zip(b) {
        match x.total_cmp(y) {
            std::cmp::Ordering::Greater => return true,
            std::cmp::Ordering::Less => return false,
            std::cmp::Ordering::Equal => {}
        }
    }
    false
}

/// Smoothed minimum of the distance ratios at temperature `tau`.
fn softmin(pos: &[(f64, f64)], dist: &[Vec<f64>], tau: f64) -> f64 {
    let n = pos.len();
    let mut ratios = Vec::with_capacity(n * (n - 1) / 2);
    let mut rmin = f64::INFINITY;
    for i in 0..n {
        for j in i + 1..n {
            let d = ((pos[i].0 - pos[j].0).powi(2) + (pos[i].1 - pos[j].1).powi(2)).sqrt();
            let r = d / dist[i][j];
            rmin = rmin.min(r);
            ratios.push(r);
        }
    }
    let sum: f64 = ratios.iter().map(|r| (-(r - rmin) / tau).exp()).sum();
    rmin - tau * sum.ln()
}

/// Gradient of the softmin objective with respect to the positions.
fn softmin_gradient(pos: &[(f64, f64)], dist: &[Vec<f64>], tau: f64) -> Vec<(f64, f64)> {
    let n = pos.len();
    struct Pair {
        i: usize,
        j: usize,
        ratio: f64,
        ux: f64,
        uy: f64,
        tree_dist: f64,
    }
    let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
    let mut rmin = f64::INFINITY;
    for i in 0..n {
        for j in i + 1..n {
            let dx = pos[i].0 - pos[j].0;
            let dy = pos[i].1 - pos[j].1;
            let d = (dx * dx + dy * dy).sqrt();
            let (ux, uy) = if d > 1e-12 {
                (dx / d, dy / d)
            } else {
                // Coincident points: push apart along a fixed direction.
                let phi = 2.4 * (i as f64 + 1.0);
                (phi.cos(), phi.sin())
            };
            let ratio = d / dist[i][j];
            rmin = rmin.min(ratio);
            pairs.push(Pair {
                i,
                j,
                ratio,
                ux,
                uy,
                tree_dist: dist[i][j],
            });
        }
    }
    let weight_sum: f64 = pairs
        .iter()
        .map(|p| (-(p.ratio - rmin) / tau).exp())
        .sum();
    let mut grad = vec![(0.0, 0.0); n];
    for p in &pairs {
        let w = (-(p.ratio - rmin) / tau).exp() / weight_sum;
        let gx = w * p.ux / p.tree_dist;
        let gy = w * p.uy / p.tree_dist;
        grad[p.i].0 += gx;
        grad[p.i].1 += gy;
        grad[p.j].0 -= gx;
        grad[p.j].1 -= gy;
    }
    grad
}

fn clamp01(pos: &mut [(f64, f64)]) {
    for p in pos.iter_mut() {
        p.0 = p.0.clamp(0.0, 1.0);
        p.1 = p.1.clamp(0.0, 1.0);
    }
}

fn run_start(n: usize, dist: &[Vec<f64>], seed: u64, stream: u64) -> StartResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    let mut pos: Vec<(f64, f64)> = (0..n)
        .map(|_| (rng.gen::<f64>(), rng.gen::<f64>()))
        .collect();

    // Annealed ascent on the smoothed objective.
    let taus = [1e-1, 3e-2, 1e-2, 3e-3, 1e-3, 3e-4, 1e-4];
    for &tau in &taus {
        let mut step = 0.05;
        let mut value = softmin(&pos, dist, tau);
        for _ in 0..160 {
            let grad = softmin_gradient(&pos, dist, tau);
            let norm = grad
                .iter()
                .map(|g| g.0 * g.0 + g.1 * g.1)
                .sum::<f64>()
                .sqrt();
            if norm < 1e-14 {
                break;
            }
            let mut advanced = false;
            for _ in 0..12 {
                let mut trial = pos.clone();
                for (t, g) in trial.iter_mut().zip(&grad) {
                    t.0 += step * g.0 / norm;
                    t.1 += step * g.1 / norm;
                }
                clamp01(&mut trial);
                let trial_value = softmin(&trial, dist, tau);
                if trial_value > value {
                    pos = trial;
                    value = trial_value;
                    step *= 1.4;
                    advanced = true;
                    break;
                }
                step *= 0.5;
            }
            if !advanced {
                break;
            }
        }
    }

    // Compass polish on the exact minimum ratio.
    const DIAG: f64 = std::f64::consts::FRAC_1_SQRT_2;
    let dirs = [
        (1.0, 0.0),
        (-1.0, 0.0),
        (0.0, 1.0),
        (0.0, -1.0),
        (DIAG, DIAG),
        (DIAG, -DIAG),
        (-DIAG, DIAG),
        (-DIAG, -DIAG),
    ];
    let mut radius = 0.1;
    let mut current = Vec::new();
    let mut trial = Vec::new();
    sorted_ratios(&pos, dist, &mut current);
    while radius > 1e-8 {
        let mut sweeps = 0;
        let mut improved = true;
        while improved && sweeps < 400 {
            improved = false;
            sweeps += 1;
            for i in 0..n {
                for dir in &dirs {
                    let saved = pos[i];
                    pos[i].0 = (saved.0 + radius * dir.0).clamp(0.0, 1.0);
                    pos[i].1 = (saved.1 + radius * dir.1).clamp(0.0, 1.0);
                    sorted_ratios(&pos, dist, &mut trial);
                    if lex_greater(&trial, &current) {
                        std::mem::swap(&mut current, &mut trial);
                        improved = true;
                    } else {
                        pos[i] = saved;
                    }
                }
            }
        }
        radius *= 0.5;
    }

    StartResult {
        scale: min_ratio(&pos, dist),
        positions: pos,
    }
}
