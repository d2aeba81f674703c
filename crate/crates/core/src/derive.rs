//! Candidate five-element configurations built from four-element ones.
//!
//! The result is only a candidate; it has to be verified against its target.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::config::Configuration;
use crate::disk::{normalization, Circle};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::sets::{ConvexGeometry, GroundSet};

/// Relative offset used by the coatom and double strategies.
pub const DERIVE_DELTA: f64 = 0.05;

const DESCENT_STEPS: usize = 100;

/// How the fifth circle is placed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", tag = "kind", content = "element")]
pub enum Strategy {
    /// A point at the deepest common point of the four disks.
    Atom,
    /// A disk containing the four others.
    Coatom,
    /// A slightly shifted copy of the given element.
    Double(usize),
    /// A concentric disk of half the radius of the given element.
    Nest(usize),
}

impl FromStr for Strategy {
    type Err = Error;

    /// `atom`, `coatom`, `double:<label>` or `nest:<label>`.
    fn from_str(s: &str) -> Result<Self> {
        let parse_el = |label: &str| -> Result<usize> {
            let mut chars = label.chars();
            match (chars.next(), chars.next()) {
                (Some(c), None) => GroundSet::new(4)?.index_of(c),
                _ => Err(Error::Format(format!("expected a single element label, got {label:?}"))),
            }
        };
        match s.split_once(':') {
            None if s == "atom" => Ok(Strategy::Atom),
            None if s == "coatom" => Ok(Strategy::Coatom),
            Some(("double", el)) => Ok(Strategy::Double(parse_el(el)?)),
            Some(("nest", el)) => Ok(Strategy::Nest(parse_el(el)?)),
            _ => Err(Error::Format(format!("unknown strategy {s:?}"))),
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let label = |i: usize| ['a', 'b', 'c', 'd', 'e'].get(i).copied().unwrap_or('?');
        match *self {
            Strategy::Atom => f.write_str("atom"),
            Strategy::Coatom => f.write_str("coatom"),
            Strategy::Double(i) => write!(f, "double:{}", label(i)),
            Strategy::Nest(i) => write!(f, "nest:{}", label(i)),
        }
    }
}

/// `min_i (r_i - |p - c_i|)`: positive iff `p` is interior to every disk.
fn depth<T: Scalar>(circles: &[Circle<T>], x: T, y: T) -> T {
    circles
        .iter()
        .map(|c| c.r - (x - c.cx).hypot(y - c.cy))
        .fold(T::infinity(), T::min)
}

fn ternary_max<T: Scalar, F: Fn(T) -> T>(mut lo: T, mut hi: T, f: F) -> (T, T) {
    let three = T::lit(3.0);
    for _ in 0..DESCENT_STEPS {
        let m1 = lo + (hi - lo) / three;
        let m2 = hi - (hi - lo) / three;
        if f(m1) < f(m2) {
            lo = m1;
        } else {
            hi = m2;
        }
    }
    let x = (lo + hi) / T::lit(2.0);
    (x, f(x))
}

/// Point maximizing the common depth of the disks, with that depth.
///
/// Depth is concave, and so is its maximum over `y` for fixed `x`, so nested
/// ternary searches over the bounding box converge to the optimum.
pub fn deepest_point<T: Scalar>(circles: &[Circle<T>]) -> Result<((T, T), T)> {
    if circles.is_empty() {
        return Err(Error::EmptyInput("deepest_point needs at least one disk"));
    }
    let lo_x = circles.iter().map(|c| c.cx - c.r).fold(T::infinity(), T::min);
    let hi_x = circles.iter().map(|c| c.cx + c.r).fold(T::neg_infinity(), T::max);
    let lo_y = circles.iter().map(|c| c.cy - c.r).fold(T::infinity(), T::min);
    let hi_y = circles.iter().map(|c| c.cy + c.r).fold(T::neg_infinity(), T::max);
    let best_y = |x: T| ternary_max(lo_y, hi_y, |y| depth(circles, x, y));
    let (x, d) = ternary_max(lo_x, hi_x, |x| best_y(x).1);
    let (y, _) = best_y(x);
    Ok(((x, y), d))
}

/// Add a fifth circle (element `e`) to a four-element configuration.
pub fn derive_representation<T: Scalar>(
    rep4: &Configuration<T>,
    target: &ConvexGeometry,
    strategy: Strategy,
    eps: T,
) -> Result<Configuration<T>> {
    if rep4.ground().len() != 4 {
        return Err(Error::GroundMismatch { expected: 4, got: rep4.ground().len() });
    }
    if target.ground().len() != 5 {
        return Err(Error::GroundMismatch { expected: 5, got: target.ground().len() });
    }
    let circles = rep4.circles();
    let delta = T::lit(DERIVE_DELTA);
    let named = |i: usize| -> Result<Circle<T>> {
        circles
            .get(i)
            .copied()
            .ok_or_else(|| Error::Precondition(format!("element index {i} is not part of the four-element configuration")))
    };
    let fifth = match strategy {
        Strategy::Atom => {
            let ((x, y), d) = deepest_point(circles)?;
            let (_, _, inv_scale) = normalization(circles);
            if d * inv_scale <= eps {
                return Err(Error::Precondition("the four disks have no common interior point".into()));
            }
            Circle::point(x, y)
        }
        Strategy::Coatom => {
            let four = T::lit(4.0);
            let cx = circles.iter().fold(T::zero(), |s, c| s + c.cx) / four;
            let cy = circles.iter().fold(T::zero(), |s, c| s + c.cy) / four;
            let reach = circles
                .iter()
                .map(|c| (c.cx - cx).hypot(c.cy - cy) + c.r)
                .fold(T::zero(), T::max);
            Circle { cx, cy, r: reach * (T::one() + delta) }
        }
        Strategy::Double(i) => {
            let c = named(i)?;
            let (_, _, inv_scale) = normalization(circles);
            Circle { cx: c.cx + delta / inv_scale, ..c }
        }
        Strategy::Nest(i) => {
            let c = named(i)?;
            Circle { r: c.r / T::lit(2.0), ..c }
        }
    };
    let mut out = circles.to_vec();
    out.push(fifth);
    Configuration::new(target.ground(), out)
}
