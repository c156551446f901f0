//! Single-vertex flat-foldability checks. The two implemented conditions
//! are the standard single-vertex statements: the alternating sector-angle
//! sum vanishes (with an even crease count), and mountain and valley counts
//! differ by exactly two. Both are necessary conditions; layer ordering is
//! out of scope, so a passing verdict reads "passes necessary conditions".

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::f64::consts::TAU;

/// Crease label around a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CreaseLabel {
    Mountain,
    Valley,
}

/// Sector angles around one interior vertex, in rotational order, plus an
/// optional mountain/valley assignment parallel to the creases.
#[derive(Debug, Clone, PartialEq)]
pub struct CreaseVertex {
    angles: Vec<f64>,
    assignment: Option<Vec<CreaseLabel>>,
}

/// Sum tolerance for accepting a sector list as a full turn.
const TURN_EPS: f64 = 1e-9;

impl CreaseVertex {
    /// Validates sector angles (all positive, summing to a full turn) and,
    /// when present, an assignment with one label per crease. Inputs that
    /// do not sum to a full turn are rejected, never rescaled.
    pub fn new(angles: Vec<f64>, assignment: Option<Vec<CreaseLabel>>) -> Result<Self> {
        if angles.len() < 2 {
            return Err(Error::InvalidVertex(
                "a vertex needs at least two creases".into(),
            ));
        }
        for &a in &angles {
            if !a.is_finite() || a <= 1e-9 {
                return Err(Error::InvalidVertex(format!(
                    "sector angle {a} is not a positive finite value"
                )));
            }
        }
        let sum: f64 = angles.iter().sum();
        if (sum - TAU).abs() > TURN_EPS {
            return Err(Error::InvalidVertex(format!(
                "sector angles sum to {sum}, expected a full turn"
            )));
        }
        if let Some(ref labels) = assignment {
            if labels.len() != angles.len() {
                return Err(Error::InvalidVertex(format!(
                    "{} labels for {} creases",
                    labels.len(),
                    angles.len()
                )));
            }
        }
        Ok(CreaseVertex { angles, assignment })
    }

    /// Builds a vertex from crease direction angles (radians, any order):
    /// directions are sorted around the turn and differenced into sectors.
    /// The assignment is permuted along with its creases.
    pub fn from_directions(
        directions: &[f64],
        assignment: Option<Vec<CreaseLabel>>,
    ) -> Result<Self> {
        if directions.len() < 2 {
            return Err(Error::InvalidVertex(
                "a vertex needs at least two creases".into(),
            ));
        }
        let mut order: Vec<usize> = (0..directions.len()).collect();
        let normalized: Vec<f64> = directions.iter().map(|d| d.rem_euclid(TAU)).collect();
        order.sort_by(|&i, &j| normalized[i].total_cmp(&normalized[j]));
        let mut angles = Vec::with_capacity(directions.len());
        for k in 0..order.len() {
            let a = normalized[order[k]];
            let b = normalized[order[(k + 1) % order.len()]];
            let gap = if k + 1 == order.len() {
                b + TAU - a
            } else {
                b - a
            };
            angles.push(gap);
        }
        let assignment =
            assignment.map(|labels| order.iter().map(|&i| labels[i]).collect::<Vec<_>>());
        CreaseVertex::new(angles, assignment)
    }

    pub fn angles(&self) -> &[f64] {
        &self.angles
    }

    pub fn assignment(&self) -> Option<&[CreaseLabel]> {
        self.assignment.as_deref()
    }

    pub fn crease_count(&self) -> usize {
        self.angles.len()
    }
}

/// Kawasaki outcome: verdict plus the alternating-sum residual in radians
/// (reported even on failure).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct KawasakiOutcome {
    pub pass: bool,
    pub residual: f64,
    pub even_count: bool,
}

/// Alternating sector-angle sum around the vertex; flat-foldability needs an
/// even crease count and a vanishing sum.
pub fn kawasaki_check(v: &CreaseVertex) -> KawasakiOutcome {
    let mut alternating = 0.0;
    for (i, a) in v.angles().iter().enumerate() {
        alternating += if i % 2 == 0 { *a } else { -*a };
    }
    let residual = alternating.abs();
    let even_count = v.crease_count().is_multiple_of(2);
    KawasakiOutcome {
        pass: even_count && residual <= TURN_EPS,
        residual,
        even_count,
    }
}

/// Maekawa outcome: verdict plus the mountain and valley counts.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MaekawaOutcome {
    pub pass: bool,
    pub mountains: usize,
    pub valleys: usize,
}

/// Mountain and valley counts must differ by exactly two at a flat-folded
/// interior vertex.
pub fn maekawa_check(v: &CreaseVertex) -> Result<MaekawaOutcome> {
    let labels = v.assignment().ok_or(Error::MissingAssignment)?;
    let mountains = labels
        .iter()
        .filter(|l| **l == CreaseLabel::Mountain)
        .count();
    let valleys = labels.len() - mountains;
    Ok(MaekawaOutcome {
        pass: mountains.abs_diff(valleys) == 2,
        mountains,
        valleys,
    })
}

/// Combined verdict: Kawasaki always, Maekawa when an assignment exists.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FlatFoldVerdict {
    pub kawasaki: KawasakiOutcome,
    pub maekawa: Option<MaekawaOutcome>,
    /// All evaluated necessary conditions pass.
    pub pass: bool,
}

pub fn single_vertex_flat_foldable(v: &CreaseVertex) -> FlatFoldVerdict {
    let kawasaki = kawasaki_check(v);
    let maekawa = v.assignment().map(|_| maekawa_check(v).expect("assignment"));
    let pass = kawasaki.pass && maekawa.is_none_or(|m| m.pass);
    FlatFoldVerdict {
        kawasaki,
        maekawa,
        pass,
    }
}

/// JSON representation accepted by the CLI: angles in degrees plus an
/// optional "MV" string.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VertexSpec {
    pub angles_deg: Vec<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub assignment: Option<String>,
}

impl VertexSpec {
    pub fn to_vertex(&self) -> Result<CreaseVertex> {
        let angles: Vec<f64> = self
            .angles_deg
            .iter()
            .map(|d| d.to_radians())
            .collect();
        let assignment = match &self.assignment {
            None => None,
            Some(s) => {
                let mut labels = Vec::with_capacity(s.len());
                for ch in s.chars() {
                    match ch.to_ascii_uppercase() {
                        'M' => labels.push(CreaseLabel::Mountain),
                        'V' => labels.push(CreaseLabel::Valley),
                        other => {
                            return Err(Error::InvalidVertex(format!(
                                "assignment character {other:?} is not M or V"
                            )))
                        }
                    }
                }
                Some(labels)
            }
        };
        CreaseVertex::new(angles, assignment)
    }
}
