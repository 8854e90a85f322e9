//! Minkowski-space causal order.
//!
//! Points live in 1+1 or 1+3 dimensions with units `c = 1`. The causal
//! relations are closed: the light-cone boundary counts as causal, so
//! `Q ⪰ P` holds exactly when `t_Q − t_P ≥ ‖x_Q − x_P‖`. Comparisons are
//! exact on the given reals, with no epsilon — feasibility verdicts
//! downstream depend on boundary cases being classified consistently.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpacetimeError {
    #[error("spatial dimension must be 1 or 3, got {0}")]
    BadDimension(usize),
    #[error("spatial dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("non-finite coordinate")]
    NonFinite,
    #[error("invalid causal diamond: return point is not in the strict causal future of the call point")]
    InvalidDiamond,
    #[error("operation requires 1+1 dimensions, got spatial dimension {0}")]
    RequiresOneDim(usize),
}

/// An event in Minkowski coordinates, time `t` and spatial coordinates `x`
/// (length 1 or 3). Serializes as the flat array `[x.., t]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct SpacetimePoint {
    t: f64,
    x: Vec<f64>,
}

impl SpacetimePoint {
    /// Point in 1+1 dimensions from `(x, t)`.
    pub fn new_1d(x: f64, t: f64) -> Result<Self, SpacetimeError> {
        Self::new(vec![x], t)
    }

    /// Point in 1+3 dimensions from `([x, y, z], t)`.
    pub fn new_3d(x: [f64; 3], t: f64) -> Result<Self, SpacetimeError> {
        Self::new(x.to_vec(), t)
    }

    pub fn new(x: Vec<f64>, t: f64) -> Result<Self, SpacetimeError> {
        if x.len() != 1 && x.len() != 3 {
            return Err(SpacetimeError::BadDimension(x.len()));
        }
        if !t.is_finite() || x.iter().any(|c| !c.is_finite()) {
            return Err(SpacetimeError::NonFinite);
        }
        Ok(Self { t, x })
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn x(&self) -> &[f64] {
        &self.x
    }

    /// Spatial dimension, 1 or 3.
    pub fn spatial_dim(&self) -> usize {
        self.x.len()
    }

    /// Euclidean distance between the spatial parts.
    pub fn spatial_distance(&self, other: &Self) -> f64 {
        self.x
            .iter()
            .zip(&other.x)
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt()
    }

    fn check_dim(&self, other: &Self) -> Result<(), SpacetimeError> {
        if self.spatial_dim() != other.spatial_dim() {
            return Err(SpacetimeError::DimensionMismatch(
                self.spatial_dim(),
                other.spatial_dim(),
            ));
        }
        Ok(())
    }
}

impl TryFrom<Vec<f64>> for SpacetimePoint {
    type Error = SpacetimeError;

    /// Flat coordinates `[x, t]` or `[x, y, z, t]`.
    fn try_from(coords: Vec<f64>) -> Result<Self, SpacetimeError> {
        match coords.len() {
            2 => Self::new_1d(coords[0], coords[1]),
            4 => Self::new_3d([coords[0], coords[1], coords[2]], coords[3]),
            n => Err(SpacetimeError::BadDimension(n.saturating_sub(1))),
        }
    }
}

impl From<SpacetimePoint> for Vec<f64> {
    fn from(p: SpacetimePoint) -> Vec<f64> {
        let mut v = p.x;
        v.push(p.t);
        v
    }
}

impl std::fmt::Display for SpacetimePoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for c in &self.x {
            write!(f, "{c}, ")?;
        }
        write!(f, "t={})", self.t)
    }
}

/// How a point `Q` stands relative to a point `P`.
///
/// Exactly one of `Q ≻ P`, `P ≻ Q`, `P = Q`, or spacelike holds for any
/// pair. Lightlike separation is a refinement of the strict relations: a
/// point on the boundary of the future light cone is still in the causal
/// future.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CausalRelation {
    /// Identical coordinates.
    Equal,
    /// `Q ≻ P`; `lightlike` is set when `Q` lies on the light cone of `P`.
    StrictFuture { lightlike: bool },
    /// `Q ≺ P`; `lightlike` as above.
    StrictPast { lightlike: bool },
    /// Neither point can signal to the other.
    Spacelike,
}

impl CausalRelation {
    /// `Q ⪰ P`: strict future or equal.
    pub fn future_or_equal(&self) -> bool {
        matches!(self, CausalRelation::StrictFuture { .. } | CausalRelation::Equal)
    }

    /// `Q ≻ P`.
    pub fn strict_future(&self) -> bool {
        matches!(self, CausalRelation::StrictFuture { .. })
    }

    pub fn is_spacelike(&self) -> bool {
        matches!(self, CausalRelation::Spacelike)
    }

    pub fn is_lightlike(&self) -> bool {
        matches!(
            self,
            CausalRelation::StrictFuture { lightlike: true }
                | CausalRelation::StrictPast { lightlike: true }
        )
    }
}

/// Classifies `Q` relative to `P`.
///
/// `Q ≻ P` iff `t_Q − t_P ≥ ‖x_Q − x_P‖` and `Q ≠ P`, with the lightlike
/// flag set on equality. `|Δt| < ‖Δx‖` is spacelike.
pub fn causal_relation(
    p: &SpacetimePoint,
    q: &SpacetimePoint,
) -> Result<CausalRelation, SpacetimeError> {
    p.check_dim(q)?;
    Ok(relation_unchecked(p, q))
}

/// `Q ⪰ P`.
pub fn in_causal_future_or_equal(
    q: &SpacetimePoint,
    p: &SpacetimePoint,
) -> Result<bool, SpacetimeError> {
    Ok(causal_relation(p, q)?.future_or_equal())
}

pub(crate) fn relation_unchecked(p: &SpacetimePoint, q: &SpacetimePoint) -> CausalRelation {
    if p == q {
        return CausalRelation::Equal;
    }
    let dt = q.t - p.t;
    let dx = p.spatial_distance(q);
    if dt >= dx {
        CausalRelation::StrictFuture { lightlike: dt == dx }
    } else if -dt >= dx {
        CausalRelation::StrictPast { lightlike: -dt == dx }
    } else {
        CausalRelation::Spacelike
    }
}

pub(crate) fn future_or_equal_unchecked(q: &SpacetimePoint, p: &SpacetimePoint) -> bool {
    relation_unchecked(p, q).future_or_equal()
}

/// The closed causal diamond `D = {x : ret ⪰ x ⪰ call}`.
///
/// Construction requires `ret ≻ call` strictly; a lightlike worldline
/// between the two is allowed.
#[derive(Debug, Clone, PartialEq)]
pub struct CausalDiamond {
    call: SpacetimePoint,
    ret: SpacetimePoint,
}

impl CausalDiamond {
    pub fn new(call: SpacetimePoint, ret: SpacetimePoint) -> Result<Self, SpacetimeError> {
        call.check_dim(&ret)?;
        if !relation_unchecked(&call, &ret).strict_future() {
            return Err(SpacetimeError::InvalidDiamond);
        }
        Ok(Self { call, ret })
    }

    pub fn call(&self) -> &SpacetimePoint {
        &self.call
    }

    pub fn ret(&self) -> &SpacetimePoint {
        &self.ret
    }

    pub fn spatial_dim(&self) -> usize {
        self.call.spatial_dim()
    }

    /// Membership in the closed diamond.
    pub fn contains(&self, p: &SpacetimePoint) -> Result<bool, SpacetimeError> {
        self.call.check_dim(p)?;
        Ok(future_or_equal_unchecked(p, &self.call) && future_or_equal_unchecked(&self.ret, p))
    }
}

/// True iff every point of `d1` is spacelike separated from every point of
/// `d2`.
///
/// Reduces to the extremal pair test: the diamonds are spacelike separated
/// iff `NOT(r₂ ⪰ c₁)` and `NOT(r₁ ⪰ c₂)`. Any causal chain `x ⪯ y` with
/// `x ∈ D₁`, `y ∈ D₂` extends to `c₁ ⪯ x ⪯ y ⪯ r₂`, so ruling out the
/// extremal pairs rules out all pairs.
pub fn diamonds_spacelike(d1: &CausalDiamond, d2: &CausalDiamond) -> Result<bool, SpacetimeError> {
    d1.call.check_dim(&d2.call)?;
    Ok(!future_or_equal_unchecked(&d2.ret, &d1.call)
        && !future_or_equal_unchecked(&d1.ret, &d2.call))
}

/// The causally-latest point lying in the causal pasts of both `q0` and
/// `q1` (1+1 dimensions only).
///
/// If the two points are causally comparable the earlier one is returned;
/// otherwise the apex of the intersection of the two past light cones.
pub fn latest_common_cause(
    q0: &SpacetimePoint,
    q1: &SpacetimePoint,
) -> Result<SpacetimePoint, SpacetimeError> {
    q0.check_dim(q1)?;
    if q0.spatial_dim() != 1 {
        return Err(SpacetimeError::RequiresOneDim(q0.spatial_dim()));
    }
    match relation_unchecked(q0, q1) {
        CausalRelation::Equal | CausalRelation::StrictFuture { .. } => Ok(q0.clone()),
        CausalRelation::StrictPast { .. } => Ok(q1.clone()),
        CausalRelation::Spacelike => {
            // Intersection of the past-cone boundaries t = t_i − |x − x_i|:
            // with x0 < x1, the right branch of the first meets the left
            // branch of the second.
            let (a, b) = if q0.x[0] <= q1.x[0] { (q0, q1) } else { (q1, q0) };
            let x = (a.x[0] + b.x[0] + a.t - b.t) / 2.0;
            let t = (a.t + b.t - (b.x[0] - a.x[0])) / 2.0;
            SpacetimePoint::new_1d(x, t)
        }
    }
}
