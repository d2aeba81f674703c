//! Position of a conclusion center relative to the premise centers of a
//! tight implication between circles.

use crate::config::Configuration;
use crate::error::{Error, Result};
use crate::implications::is_tight;
use crate::scalar::Scalar;
use crate::sets::{ConvexGeometry, SubsetMask};

type Pt<T> = (T, T);

#[inline]
fn orient<T: Scalar>(a: Pt<T>, b: Pt<T>, c: Pt<T>) -> T {
    (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)
}

/// Checks that `premise → u` is tight in the alignment induced by `conf`
/// and returns the normalized configuration.
fn tight_precondition<T: Scalar>(conf: &Configuration<T>, premise: SubsetMask, u: usize, eps: T) -> Result<Configuration<T>> {
    let ground = conf.ground();
    ground.check_subset(premise)?;
    let norm = conf.normalized();
    let induced = norm.induced_alignment(eps);
    let geometry = ConvexGeometry::new(ground, induced.family)
        .map_err(|_| Error::Precondition("the configuration does not induce a convex geometry".into()))?;
    let label = || format!("{}→{}", ground.show(premise), ground.label(u));
    match is_tight(&geometry, premise, u) {
        Ok(true) => Ok(norm),
        Ok(false) => Err(Error::Precondition(format!("{} holds but is not tight", label()))),
        Err(_) => Err(Error::Precondition(format!("{} does not hold", label()))),
    }
}

fn center<T: Scalar>(conf: &Configuration<T>, i: usize) -> Pt<T> {
    let c = conf.circle(i);
    (c.cx, c.cy)
}

/// For a tight `abc → u`: whether the center of `u` lies strictly inside the
/// triangle of the centers of `a`, `b`, `c`.
///
/// The test runs on normalized coordinates with tolerance `eps` on each
/// orientation. Collinear premise centers are reported as
/// [`Error::Degenerate`], since tightness rules them out.
pub fn triangle_property_check<T: Scalar>(conf: &Configuration<T>, premise: SubsetMask, u: usize, eps: T) -> Result<bool> {
    if premise.len() != 3 {
        return Err(Error::Precondition(format!("premise must have three elements, got {}", premise.len())));
    }
    let norm = tight_precondition(conf, premise, u, eps)?;
    let idx: Vec<usize> = premise.elements().collect();
    let (a, b, c) = (center(&norm, idx[0]), center(&norm, idx[1]), center(&norm, idx[2]));
    let area = orient(a, b, c);
    if area.abs() <= eps {
        return Err(Error::Degenerate(format!(
            "premise centers of {} are collinear",
            conf.ground().show(premise)
        )));
    }
    let e = center(&norm, u);
    let sign = area.signum();
    Ok([orient(a, b, e), orient(b, c, e), orient(c, a, e)].iter().all(|&o| o * sign > eps))
}

/// For a tight `Y → u` with `|Y| > 2`: whether the center of `u` lies in the
/// closed convex hull of the centers of `Y` (within `eps`).
pub fn centers_hull_check<T: Scalar>(conf: &Configuration<T>, premise: SubsetMask, u: usize, eps: T) -> Result<bool> {
    if premise.len() <= 2 {
        return Err(Error::Precondition(format!("premise must have more than two elements, got {}", premise.len())));
    }
    let norm = tight_precondition(conf, premise, u, eps)?;
    let pts: Vec<Pt<T>> = premise.elements().map(|i| center(&norm, i)).collect();
    let e = center(&norm, u);
    point_in_hull(&pts, e, eps).ok_or_else(|| {
        Error::Degenerate(format!("premise centers of {} are collinear", conf.ground().show(premise)))
    })
}

/// Closed hull membership; `None` when all points are collinear.
fn point_in_hull<T: Scalar>(pts: &[Pt<T>], e: Pt<T>, eps: T) -> Option<bool> {
    let mut has_edge = false;
    for (i, &p) in pts.iter().enumerate() {
        for (j, &q) in pts.iter().enumerate() {
            if i == j {
                continue;
            }
            // (p, q) is a hull edge with the hull on its left
            let left_of = |r: Pt<T>| orient(p, q, r);
            let is_edge = pts.iter().all(|&r| left_of(r) >= -eps) && pts.iter().any(|&r| left_of(r) > eps);
            if is_edge {
                has_edge = true;
                if left_of(e) < -eps {
                    return Some(false);
                }
            }
        }
    }
    has_edge.then_some(true)
}
