//! Direction relations between sampled real functions from the interlacing
//! of their maxima.
//!
//! The family of a pair `(first, second)` is `{first, second, -first, -second}`.
//! `first` leads `second` when every maximum of `first` has, as its nearest
//! family maximum on the right, a maximum of `second`. It trails when the
//! nearest family maximum on the left belongs to `second`. In time this is
//! future/past, in the radial variable outwards/inwards.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Minimum number of grid samples strictly between adjacent family maxima.
pub const MIN_SAMPLES_BETWEEN: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Interlacing {
    Leading,
    Trailing,
    Ambiguous,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TimeRelation {
    Future,
    Past,
    Ambiguous,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RadialRelation {
    Outwards,
    Inwards,
    Ambiguous,
}

impl From<Interlacing> for TimeRelation {
    fn from(i: Interlacing) -> Self {
        match i {
            Interlacing::Leading => TimeRelation::Future,
            Interlacing::Trailing => TimeRelation::Past,
            Interlacing::Ambiguous => TimeRelation::Ambiguous,
        }
    }
}

impl From<Interlacing> for RadialRelation {
    fn from(i: Interlacing) -> Self {
        match i {
            Interlacing::Leading => RadialRelation::Outwards,
            Interlacing::Trailing => RadialRelation::Inwards,
            Interlacing::Ambiguous => RadialRelation::Ambiguous,
        }
    }
}

/// A local maximum: refined position and the grid index it was found at.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Maximum {
    pub position: f64,
    pub index: usize,
}

fn parabola_vertex(x: [f64; 3], y: [f64; 3]) -> f64 {
    let denom = (x[0] - x[1]) * (x[0] - x[2]) * (x[1] - x[2]);
    let a = (x[2] * (y[1] - y[0]) + x[1] * (y[0] - y[2]) + x[0] * (y[2] - y[1])) / denom;
    let b = (x[2] * x[2] * (y[0] - y[1]) + x[1] * x[1] * (y[2] - y[0]) + x[0] * x[0] * (y[1] - y[2])) / denom;
    if a < 0.0 {
        (-b / (2.0 * a)).clamp(x[0], x[2])
    } else {
        x[1]
    }
}

fn check_grid(grid: &[f64], values: &[f64]) -> Result<()> {
    if grid.len() != values.len() {
        return Err(Error::DimensionMismatch { expected: grid.len(), got: values.len() });
    }
    if grid.len() < 3 {
        return Err(Error::Domain("need at least three samples".into()));
    }
    if grid.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(Error::Domain("grid must be strictly increasing".into()));
    }
    Ok(())
}

/// Interior local maxima, refined by a parabola through the three samples
/// around each grid maximum.
pub fn local_maxima(grid: &[f64], values: &[f64]) -> Result<Vec<Maximum>> {
    check_grid(grid, values)?;
    Ok((1..grid.len() - 1)
        .filter(|&i| values[i] > values[i - 1] && values[i] >= values[i + 1])
        .map(|i| Maximum {
            position: parabola_vertex([grid[i - 1], grid[i], grid[i + 1]], [values[i - 1], values[i], values[i + 1]]),
            index: i,
        })
        .collect())
}

/// Relation of `first` to `second`, both sampled on `grid`.
pub fn extrema_relation(grid: &[f64], first: &[f64], second: &[f64]) -> Result<Interlacing> {
    check_grid(grid, first)?;
    check_grid(grid, second)?;
    let neg = |v: &[f64]| v.iter().map(|x| -x).collect::<Vec<_>>();
    let members = [first.to_vec(), second.to_vec(), neg(first), neg(second)];
    let mut all: Vec<(Maximum, usize)> = Vec::new();
    for (label, m) in members.iter().enumerate() {
        all.extend(local_maxima(grid, m)?.into_iter().map(|x| (x, label)));
    }
    all.sort_by(|a, b| a.0.position.total_cmp(&b.0.position));
    if all.windows(2).any(|w| w[1].0.index.abs_diff(w[0].0.index) <= MIN_SAMPLES_BETWEEN) {
        return Ok(Interlacing::Ambiguous);
    }
    let mut right = Vec::new();
    let mut left = Vec::new();
    for (k, (_, label)) in all.iter().enumerate() {
        if *label != 0 {
            continue;
        }
        if let Some((_, next)) = all.get(k + 1) {
            right.push(*next);
        }
        if k > 0 {
            left.push(all[k - 1].1);
        }
    }
    let leads = !right.is_empty() && right.iter().all(|&l| l == 1);
    let trails = !left.is_empty() && left.iter().all(|&l| l == 1);
    Ok(match (leads, trails) {
        (true, false) => Interlacing::Leading,
        (false, true) => Interlacing::Trailing,
        _ => Interlacing::Ambiguous,
    })
}

/// Future/past relation of two temporal functions.
pub fn time_relation(grid: &[f64], first: &[f64], second: &[f64]) -> Result<TimeRelation> {
    extrema_relation(grid, first, second).map(Into::into)
}

/// Outwards/inwards relation of two radial functions.
pub fn radial_relation(grid: &[f64], first: &[f64], second: &[f64]) -> Result<RadialRelation> {
    extrema_relation(grid, first, second).map(Into::into)
}
