//! Boundary of the convex hull of a union of disks, and the classification
//! of three-disk configurations by that boundary.

use serde::{Deserialize, Serialize};

use crate::disk::{crossing_angles, disk_in_hull, normalize, Circle};
use crate::error::{Error, Result};
use crate::scalar::{wrap_angle, Scalar};

/// A piece of the hull boundary, traversed counterclockwise.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Feature<T> {
    /// Arc of circle `circle` for outward normals in `[start, end]`;
    /// `start ∈ [0, 2π)` and `end - start ∈ (0, 2π]`.
    Arc { circle: usize, start: T, end: T },
    /// Tangent segment between two consecutive arcs.
    Segment { from: (T, T), to: (T, T), from_circle: usize, to_circle: usize },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HullBoundary<T> {
    pub features: Vec<Feature<T>>,
}

impl<T: Scalar> HullBoundary<T> {
    pub fn arc_count(&self) -> usize {
        self.features.iter().filter(|f| matches!(f, Feature::Arc { .. })).count()
    }

    pub fn segment_count(&self) -> usize {
        self.features.iter().filter(|f| matches!(f, Feature::Segment { .. })).count()
    }

    /// Indices of circles that own at least one arc.
    pub fn arc_owners(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self
            .features
            .iter()
            .filter_map(|f| match f {
                Feature::Arc { circle, .. } => Some(*circle),
                _ => None,
            })
            .collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Smallest angular span among the arcs.
    pub fn min_arc_span(&self) -> Option<T> {
        self.features
            .iter()
            .filter_map(|f| match f {
                Feature::Arc { start, end, .. } => Some(*end - *start),
                _ => None,
            })
            .reduce(T::min)
    }
}

fn argmax_support<T: Scalar>(circles: &[Circle<T>], theta: T) -> usize {
    let mut best = 0;
    let mut best_val = circles[0].support(theta);
    for (i, c) in circles.iter().enumerate().skip(1) {
        let v = c.support(theta);
        if v > best_val {
            best = i;
            best_val = v;
        }
    }
    best
}

/// Support-function sweep over all directions.
///
/// The direction circle is cut at every pairwise switching angle
/// `(c_i - c_j)·u(θ) = r_j - r_i`; each piece is owned by the disk of largest
/// support at its midpoint (ties go to the lower index). Maximal runs of one
/// owner become arcs, and each change of owner a tangent segment.
pub fn hull_boundary<T: Scalar>(circles: &[Circle<T>]) -> Result<HullBoundary<T>> {
    if circles.is_empty() {
        return Err(Error::EmptyInput("hull_boundary needs at least one circle"));
    }
    let tau = T::TAU();
    let mut cuts = Vec::new();
    for (i, a) in circles.iter().enumerate() {
        for b in &circles[i + 1..] {
            crossing_angles(a.cx - b.cx, a.cy - b.cy, b.r - a.r, &mut cuts);
        }
    }
    let mut cuts: Vec<T> = cuts.into_iter().map(wrap_angle).collect();
    cuts.sort_by(|a, b| a.partial_cmp(b).expect("finite angles"));
    cuts.dedup_by(|a, b| (*a - *b).abs() <= T::angle_slack());

    // (owner, start, end) pieces in angular order, starting at cuts[0]
    let mut pieces: Vec<(usize, T, T)> = Vec::new();
    for k in 0..cuts.len() {
        let start = cuts[k];
        let end = if k + 1 < cuts.len() { cuts[k + 1] } else { cuts[0] + tau };
        if end - start <= T::angle_slack() {
            continue;
        }
        let mid = (start + end) / T::lit(2.0);
        let owner = argmax_support(circles, mid);
        match pieces.last_mut() {
            Some(last) if last.0 == owner => last.2 = end,
            _ => pieces.push((owner, start, end)),
        }
    }
    if pieces.len() > 1 && pieces[0].0 == pieces[pieces.len() - 1].0 {
        let (_, _, end) = pieces[0];
        let last = pieces.pop().expect("nonempty");
        pieces[0] = (last.0, last.1, end + tau);
    }
    if pieces.len() <= 1 {
        let owner = pieces.first().map(|p| p.0).unwrap_or_else(|| argmax_support(circles, T::zero()));
        return Ok(HullBoundary {
            features: vec![Feature::Arc { circle: owner, start: T::zero(), end: tau }],
        });
    }

    let mut features = Vec::with_capacity(2 * pieces.len());
    for (k, &(owner, start, end)) in pieces.iter().enumerate() {
        let (s, e) = normalize_arc(start, end);
        features.push(Feature::Arc { circle: owner, start: s, end: e });
        let next = pieces[(k + 1) % pieces.len()].0;
        features.push(Feature::Segment {
            from: circles[owner].boundary_point(end),
            to: circles[next].boundary_point(end),
            from_circle: owner,
            to_circle: next,
        });
    }
    Ok(HullBoundary { features })
}

fn normalize_arc<T: Scalar>(start: T, end: T) -> (T, T) {
    let s = wrap_angle(start);
    (s, s + (end - start))
}

/// Three-disk configuration type, by hull boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TripleClass {
    /// Two arcs and two segments: one disk lies in the hull of the other two.
    I,
    /// Four arcs and four segments.
    II,
    /// Three arcs and three segments.
    III,
}

/// Classify three disks, none contained in another, by the arc/segment
/// structure of their hull.
///
/// Coordinates are normalized first. Containment in the hull of the other two
/// disks is read non-strictly, as everywhere else, so a disk touching that
/// hull from inside gives [`TripleClass::I`]. A boundary whose arc count hinges
/// on an arc narrower than `sqrt(eps)` is reported as [`Error::Marginal`].
pub fn classify_triple<T: Scalar>(a: &Circle<T>, b: &Circle<T>, c: &Circle<T>, eps: T) -> Result<TripleClass> {
    let circles = normalize(&[*a, *b, *c]);
    for i in 0..3 {
        for j in 0..3 {
            if i != j && circles[i].is_inside_disk(&circles[j], eps) {
                return Err(Error::ContainedDisks { inner: i, outer: j });
            }
        }
    }
    for i in 0..3 {
        let others: Vec<_> = (0..3).filter(|&j| j != i).map(|j| circles[j]).collect();
        if disk_in_hull(&circles[i], &others, eps)?.is_contained() {
            return Ok(TripleClass::I);
        }
    }
    let boundary = hull_boundary(&circles)?;
    if let Some(span) = boundary.min_arc_span().filter(|&s| s <= eps.sqrt()) {
        return Err(Error::Marginal(format!("hull boundary has an arc of angular span {span}")));
    }
    match (boundary.arc_count(), boundary.segment_count()) {
        (3, 3) => Ok(TripleClass::III),
        (4, 4) => Ok(TripleClass::II),
        (arcs, segs) => Err(Error::Marginal(format!("unexpected hull structure: {arcs} arcs, {segs} segments"))),
    }
}
