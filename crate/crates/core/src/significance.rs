//! Projection-aware significance of a dominant point.
//!
//! For a dominant point with polygon neighbours `prev` and `next`, every
//! original curve point on the open arc `(prev, next)` contributes its
//! distance to the chord `prev -> next`, measured according to where the
//! point projects along the chord:
//!
//! * before `prev`: Euclidean distance to `prev`;
//! * onto the chord: perpendicular distance `|y'|` in the chord frame;
//! * beyond `next`: Euclidean distance to `next`.
//!
//! The significance is the sum of those contributions.

use std::collections::BTreeMap;

use crate::curve::{DigitalCurve, DominantPointSet};
use crate::error::{Error, Result};
use crate::geometry::Point;

/// Coordinate frame with `origin` at the chord start and the chord along +x.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChordFrame {
    pub origin: Point,
    /// Chord direction relative to +x, radians.
    pub angle: f64,
    pub chord_length: f64,
}

impl ChordFrame {
    /// Coordinates of `p` in this frame.
    pub fn transform(&self, p: Point) -> Point {
        let (sin, cos) = self.angle.sin_cos();
        let d = p - self.origin;
        Point::new(cos * d.x + sin * d.y, -sin * d.x + cos * d.y)
    }
}

pub fn chord_frame(s_prev: Point, s_next: Point) -> Result<ChordFrame> {
    let chord = s_next - s_prev;
    if chord.x == 0.0 && chord.y == 0.0 {
        return Err(Error::DegenerateChord);
    }
    Ok(ChordFrame {
        origin: s_prev,
        angle: chord.y.atan2(chord.x),
        chord_length: chord.norm(),
    })
}

/// Where a point's projection falls along the chord.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProjectionRegion {
    Before,
    Within,
    Beyond,
}

/// Both chord endpoints belong to `Within`.
pub fn classify_projection(x_t: f64, chord_length: f64) -> ProjectionRegion {
    if x_t < 0.0 {
        ProjectionRegion::Before
    } else if x_t > chord_length {
        ProjectionRegion::Beyond
    } else {
        ProjectionRegion::Within
    }
}

/// Chord geometry shared by every point of one arc.
#[derive(Debug, Clone, Copy)]
struct Chord {
    start: Point,
    end: Point,
    dir: Point,
    len_sq: f64,
    len: f64,
}

impl Chord {
    fn new(start: Point, end: Point) -> Option<Self> {
        let dir = end - start;
        let len_sq = dir.dot(dir);
        (len_sq > 0.0).then(|| Self {
            start,
            end,
            dir,
            len_sq,
            len: len_sq.sqrt(),
        })
    }

    fn region(&self, p: Point) -> ProjectionRegion {
        // compare along-chord coordinate times length against [0, len^2]
        let along = (p - self.start).dot(self.dir);
        if along < 0.0 {
            ProjectionRegion::Before
        } else if along > self.len_sq {
            ProjectionRegion::Beyond
        } else {
            ProjectionRegion::Within
        }
    }

    fn contribution(&self, p: Point) -> f64 {
        match self.region(p) {
            ProjectionRegion::Before => p.distance(self.start),
            ProjectionRegion::Within => self.dir.cross(p - self.start).abs() / self.len,
            ProjectionRegion::Beyond => p.distance(self.end),
        }
    }
}

/// Contribution of `p` to the significance of the point between `s_prev`
/// and `s_next`. Equals the distance from `p` to the segment.
pub fn point_contribution(s_prev: Point, s_next: Point, p: Point) -> Result<f64> {
    Chord::new(s_prev, s_next)
        .map(|c| c.contribution(p))
        .ok_or(Error::DegenerateChord)
}

/// Sum of contributions over the open arc `(from, to)` of `curve`.
///
/// When the two endpoints coincide in the plane (a self-touching boundary)
/// every point contributes its distance to that shared point.
pub(crate) fn arc_significance(curve: &DigitalCurve, from: usize, to: usize) -> f64 {
    let start = curve.point(from);
    let end = curve.point(to);
    let arc = crate::curve::ArcIndices::new(from, to, curve.len());
    match Chord::new(start, end) {
        Some(chord) => arc.map(|i| chord.contribution(curve.point(i))).sum(),
        None => arc.map(|i| curve.point(i).distance(start)).sum(),
    }
}

/// Significance of the `k`-th dominant point of `set` (position in the set,
/// not a curve index).
pub fn significance(curve: &DigitalCurve, set: &DominantPointSet, k: usize) -> Result<f64> {
    let m = set.len();
    if k >= m {
        return Err(Error::IndexOutOfRange { index: k, len: m });
    }
    if m < 3 {
        return Err(Error::DegenerateChord);
    }
    let idx = set.indices();
    let from = idx[(k + m - 1) % m];
    let to = idx[(k + 1) % m];
    Ok(arc_significance(curve, from, to))
}

/// Significance per current dominant point, keyed by curve index.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct SignificanceTable {
    entries: BTreeMap<usize, f64>,
}

impl SignificanceTable {
    /// Compute every entry from scratch.
    pub fn compute(curve: &DigitalCurve, set: &DominantPointSet) -> Result<Self> {
        let entries = (0..set.len())
            .map(|k| Ok((set.indices()[k], significance(curve, set, k)?)))
            .collect::<Result<_>>()?;
        Ok(Self { entries })
    }

    pub fn get(&self, index: usize) -> Option<f64> {
        self.entries.get(&index).copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// (curve index, significance) in curve order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, f64)> + '_ {
        self.entries.iter().map(|(&i, &s)| (i, s))
    }

    pub(crate) fn insert(&mut self, index: usize, sig: f64) {
        self.entries.insert(index, sig);
    }
}
