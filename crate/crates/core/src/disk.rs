//! Disks in the plane, support functions and disk-in-hull containment.
//!
//! The support function of a disk with center `c` and radius `r` is
//! `h(θ) = c·u(θ) + r`, `u(θ) = (cos θ, sin θ)`. The hull of a union of disks
//! has support `max_i h_i`, so a disk `e` lies in that hull iff
//! `h_e(θ) <= max_i h_i(θ)` for every direction.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A closed disk; radius zero is a point.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Circle<T> {
    pub cx: T,
    pub cy: T,
    pub r: T,
}

impl<T: Scalar> Circle<T> {
    pub fn new(cx: T, cy: T, r: T) -> Result<Self> {
        if !(cx.is_finite() && cy.is_finite() && r.is_finite()) {
            return Err(Error::InvalidCircle(format!("non-finite value in ({cx}, {cy}, {r})")));
        }
        if r < T::zero() {
            return Err(Error::InvalidCircle(format!("negative radius {r}")));
        }
        Ok(Circle { cx, cy, r })
    }

    pub fn point(cx: T, cy: T) -> Self {
        Circle { cx, cy, r: T::zero() }
    }

    #[inline]
    pub fn support(&self, theta: T) -> T {
        self.cx * theta.cos() + self.cy * theta.sin() + self.r
    }

    /// Point of the circle in direction `theta` from its center.
    #[inline]
    pub fn boundary_point(&self, theta: T) -> (T, T) {
        (self.cx + self.r * theta.cos(), self.cy + self.r * theta.sin())
    }

    #[inline]
    pub fn center_distance(&self, other: &Circle<T>) -> T {
        (self.cx - other.cx).hypot(self.cy - other.cy)
    }

    /// `self ⊆ other` up to `eps`.
    pub fn is_inside_disk(&self, other: &Circle<T>, eps: T) -> bool {
        self.center_distance(other) + self.r <= other.r + eps
    }

    /// `(x, y, r) ↦ ((x - ox) s, (y - oy) s, r s)`.
    pub fn transformed(&self, ox: T, oy: T, scale: T) -> Self {
        Circle { cx: (self.cx - ox) * scale, cy: (self.cy - oy) * scale, r: self.r * scale }
    }

    pub fn cast<U: Scalar>(&self) -> Circle<U> {
        let c = |v: T| U::from_f64(v.to_f64().unwrap_or(0.0)).unwrap_or_else(U::zero);
        Circle { cx: c(self.cx), cy: c(self.cy), r: c(self.r) }
    }
}

impl<T: Scalar> fmt::Display for Circle<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}; r={})", self.cx, self.cy, self.r)
    }
}

/// Free function form of [`Circle::support`].
pub fn support_value<T: Scalar>(c: &Circle<T>, theta: T) -> T {
    c.support(theta)
}

/// Translation and scale that bring the maximum pairwise center distance to one.
///
/// Falls back to the largest radius when all centers coincide, and to the
/// identity scale when everything is a single point.
pub fn normalization<T: Scalar>(circles: &[Circle<T>]) -> (T, T, T) {
    if circles.is_empty() {
        return (T::zero(), T::zero(), T::one());
    }
    let k = T::from_usize(circles.len()).unwrap();
    let ox = circles.iter().fold(T::zero(), |s, c| s + c.cx) / k;
    let oy = circles.iter().fold(T::zero(), |s, c| s + c.cy) / k;
    let mut span = T::zero();
    for (i, a) in circles.iter().enumerate() {
        for b in &circles[i + 1..] {
            span = span.max(a.center_distance(b));
        }
    }
    if span <= T::zero() {
        span = circles.iter().fold(T::zero(), |m, c| m.max(c.r));
    }
    if span <= T::zero() {
        span = T::one();
    }
    (ox, oy, T::one() / span)
}

pub fn normalize<T: Scalar>(circles: &[Circle<T>]) -> Vec<Circle<T>> {
    let (ox, oy, s) = normalization(circles);
    circles.iter().map(|c| c.transformed(ox, oy, s)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ContainmentState {
    Inside,
    Outside,
    Marginal,
}

/// Tri-state containment with the signed minimum support gap.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Containment<T> {
    pub state: ContainmentState,
    pub margin: T,
}

impl<T: Scalar> Containment<T> {
    pub fn from_margin(margin: T, eps: T) -> Self {
        let state = if margin > eps {
            ContainmentState::Inside
        } else if margin < -eps {
            ContainmentState::Outside
        } else {
            ContainmentState::Marginal
        };
        Containment { state, margin }
    }

    /// Non-strict reading: marginal counts as contained.
    pub fn is_contained(&self) -> bool {
        self.state != ContainmentState::Outside
    }
}

/// Directions at which `(p, q)·u(θ) = k`, plus the extremal directions of
/// `(p, q)·u(θ)`. Including the extremes keeps near-tangent roots that
/// rounding would otherwise lose.
pub(crate) fn crossing_angles<T: Scalar>(p: T, q: T, k: T, out: &mut Vec<T>) {
    let len = p.hypot(q);
    if len <= T::zero() {
        return;
    }
    let phi = q.atan2(p);
    out.push(phi);
    out.push(phi + T::PI());
    let ratio = k / len;
    if ratio.abs() <= T::one() {
        let alpha = ratio.acos();
        out.push(phi + alpha);
        out.push(phi - alpha);
    }
}

/// Minimum over directions of `max_i h_i(θ) - h_e(θ)`.
///
/// `gap` is the upper envelope of the sinusoids `(c_i - c_e)·u(θ) + r_i - r_e`.
/// Its minimum sits either where the active sinusoid changes (a pairwise
/// crossing) or at the minimum of one sinusoid, so evaluating `gap` at those
/// finitely many directions is exact.
pub fn support_margin<T: Scalar>(e: &Circle<T>, others: &[Circle<T>]) -> T {
    let mut candidates = vec![T::zero()];
    for (i, a) in others.iter().enumerate() {
        let (dx, dy) = (a.cx - e.cx, a.cy - e.cy);
        if dx != T::zero() || dy != T::zero() {
            candidates.push((-dy).atan2(-dx));
        }
        for b in &others[i + 1..] {
            crossing_angles(a.cx - b.cx, a.cy - b.cy, b.r - a.r, &mut candidates);
        }
    }
    candidates
        .into_iter()
        .map(|t| {
            let top = others.iter().map(|c| c.support(t)).fold(T::neg_infinity(), T::max);
            top - e.support(t)
        })
        .fold(T::infinity(), T::min)
}

/// Whether disk `e` lies in the convex hull of the union of `others`.
pub fn disk_in_hull<T: Scalar>(e: &Circle<T>, others: &[Circle<T>], eps: T) -> Result<Containment<T>> {
    if others.is_empty() {
        return Err(Error::EmptyInput("disk_in_hull needs at least one hull disk"));
    }
    Ok(Containment::from_margin(support_margin(e, others), eps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn c(x: f64, y: f64, r: f64) -> Circle<f64> {
        Circle::new(x, y, r).unwrap()
    }

    #[test]
    fn support_examples() {
        for t in [0.0, 1.0, PI, 5.0] {
            assert!((support_value(&c(0.0, 0.0, 1.0), t) - 1.0).abs() < 1e-15);
        }
        assert_eq!(support_value(&c(3.0, 4.0, 0.0), 0.0), 3.0);
        assert!((support_value(&c(1.0, 2.0, 2.0), FRAC_PI_2) - 4.0).abs() < 1e-12);
    }

    #[test]
    fn invalid_circles() {
        assert!(Circle::new(0.0, 0.0, -1.0).is_err());
        assert!(Circle::new(f64::NAN, 0.0, 1.0).is_err());
        assert!(Circle::new(0.0, f64::INFINITY, 1.0).is_err());
    }

    #[test]
    fn containment_examples() {
        let hull = [c(0.0, 0.0, 1.0), c(4.0, 0.0, 1.0)];
        let eps = 1e-9;

        let same = disk_in_hull(&hull[0], &hull, eps).unwrap();
        assert_eq!(same.state, ContainmentState::Marginal);
        assert!(same.margin.abs() < 1e-12);

        let inside = disk_in_hull(&c(2.0, 0.0, 0.5), &hull, eps).unwrap();
        assert_eq!(inside.state, ContainmentState::Inside);
        assert!((inside.margin - 0.5).abs() < 1e-12);

        let outside = disk_in_hull(&c(2.0, 0.0, 1.1), &hull, eps).unwrap();
        assert_eq!(outside.state, ContainmentState::Outside);
        assert!((outside.margin + 0.1).abs() < 1e-12);

        let touching = disk_in_hull(&c(2.0, 0.0, 1.0), &hull, eps).unwrap();
        assert_eq!(touching.state, ContainmentState::Marginal);

        assert!(matches!(disk_in_hull(&hull[0], &[], eps), Err(Error::EmptyInput(_))));
    }

    #[test]
    fn concentric_hull_disk() {
        let eps = 1e-9;
        let r = disk_in_hull(&c(0.0, 0.0, 0.0), &[c(0.0, 0.0, 1.0)], eps).unwrap();
        assert_eq!(r.state, ContainmentState::Inside);
        assert!((r.margin - 1.0).abs() < 1e-12);
        let r = disk_in_hull(&c(0.0, 0.0, 2.0), &[c(0.0, 0.0, 1.0)], eps).unwrap();
        assert_eq!(r.state, ContainmentState::Outside);
    }

    #[test]
    fn f32_kernel() {
        let hull = [Circle::<f32>::new(0.0, 0.0, 1.0).unwrap(), Circle::new(4.0, 0.0, 1.0).unwrap()];
        let r = disk_in_hull(&Circle::new(2.0f32, 0.0, 0.5).unwrap(), &hull, f32::default_eps()).unwrap();
        assert_eq!(r.state, ContainmentState::Inside);
        assert!((r.margin - 0.5).abs() < 1e-5);
    }

    #[test]
    fn normalization_scales_span_to_one() {
        let n = normalize(&[c(0.0, 0.0, 1.0), c(10.0, 0.0, 2.0), c(5.0, 5.0, 0.0)]);
        let mut span: f64 = 0.0;
        for i in 0..3 {
            for j in i + 1..3 {
                span = span.max(n[i].center_distance(&n[j]));
            }
        }
        assert!((span - 1.0).abs() < 1e-12);
        assert!((n[1].r - 0.2).abs() < 1e-12);
        let single = normalize(&[c(3.0, 3.0, 2.0)]);
        assert!((single[0].r - 1.0).abs() < 1e-12);
    }
}
