//! Labelled circle configurations and the convex hull operator for circles.

use serde::{Deserialize, Serialize};

use crate::disk::{disk_in_hull, normalization, Circle, ContainmentState};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::sets::{FamilyMask, GroundSet, SubsetMask};

/// One circle per element of the ground set, in label order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Configuration<T> {
    ground: GroundSet,
    circles: Vec<Circle<T>>,
}

/// A containment decision of `element` against the hull of `subset` that fell
/// inside the tolerance band.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MarginalPair<T> {
    pub element: usize,
    pub subset: SubsetMask,
    pub margin: T,
}

/// `ch_c(Y)` together with the marginal decisions taken while computing it.
#[derive(Debug, Clone, PartialEq)]
pub struct HullClosure<T> {
    pub closed: SubsetMask,
    pub marginal: Vec<MarginalPair<T>>,
}

/// Family of `ch_c`-closed sets with every marginal decision encountered.
#[derive(Debug, Clone, PartialEq)]
pub struct InducedAlignment<T> {
    pub family: FamilyMask,
    pub marginal: Vec<MarginalPair<T>>,
}

impl<T> InducedAlignment<T> {
    pub fn is_clean(&self) -> bool {
        self.marginal.is_empty()
    }
}

impl<T: Scalar> Configuration<T> {
    pub fn new(ground: GroundSet, circles: Vec<Circle<T>>) -> Result<Self> {
        if circles.len() != ground.len() {
            return Err(Error::GroundMismatch { expected: ground.len(), got: circles.len() });
        }
        for c in &circles {
            Circle::new(c.cx, c.cy, c.r)?;
        }
        Ok(Configuration { ground, circles })
    }

    pub fn from_circles(circles: Vec<Circle<T>>) -> Result<Self> {
        Self::new(GroundSet::new(circles.len())?, circles)
    }

    #[inline]
    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    #[inline]
    pub fn circles(&self) -> &[Circle<T>] {
        &self.circles
    }

    pub fn circle(&self, element: usize) -> &Circle<T> {
        &self.circles[element]
    }

    /// Same circles, with element `i` renamed `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let mut circles = self.circles.clone();
        for (i, c) in self.circles.iter().enumerate() {
            circles[perm[i]] = *c;
        }
        Configuration { ground: self.ground, circles }
    }

    /// Copy with the maximum pairwise center distance scaled to one.
    pub fn normalized(&self) -> Self {
        let (ox, oy, s) = normalization(&self.circles);
        Configuration { ground: self.ground, circles: self.circles.iter().map(|c| c.transformed(ox, oy, s)).collect() }
    }

    pub fn cast<U: Scalar>(&self) -> Configuration<U> {
        Configuration { ground: self.ground, circles: self.circles.iter().map(Circle::cast).collect() }
    }

    /// The hull operator on normalized coordinates.
    pub fn hull_operator(&self, eps: T) -> HullOperator<T> {
        HullOperator { conf: self.normalized(), eps }
    }

    /// `ch_c(y)`: `y` plus every element whose disk lies in the hull of `y`'s disks.
    pub fn ch_c(&self, y: SubsetMask, eps: T) -> Result<HullClosure<T>> {
        self.ground.check_subset(y)?;
        Ok(self.hull_operator(eps).closure(y))
    }

    /// Family of all `ch_c`-closed subsets.
    pub fn induced_alignment(&self, eps: T) -> InducedAlignment<T> {
        self.hull_operator(eps).induced_alignment()
    }
}

/// `ch_c` over a configuration already in normalized coordinates.
#[derive(Debug, Clone)]
pub struct HullOperator<T> {
    conf: Configuration<T>,
    eps: T,
}

impl<T: Scalar> HullOperator<T> {
    pub fn ground(&self) -> GroundSet {
        self.conf.ground
    }

    /// Non-strict: marginal containments are counted as contained and reported.
    pub fn closure(&self, y: SubsetMask) -> HullClosure<T> {
        let mut marginal = Vec::new();
        if y.is_empty() {
            return HullClosure { closed: y, marginal };
        }
        let hull: Vec<Circle<T>> = y.elements().map(|i| self.conf.circles[i]).collect();
        let mut closed = y;
        for x in self.ground().full().difference(y).elements() {
            let c = disk_in_hull(&self.conf.circles[x], &hull, self.eps).expect("nonempty hull");
            if c.state == ContainmentState::Marginal {
                marginal.push(MarginalPair { element: x, subset: y, margin: c.margin });
            }
            if c.is_contained() {
                closed = closed.with(x);
            }
        }
        HullClosure { closed, marginal }
    }

    pub fn induced_alignment(&self) -> InducedAlignment<T> {
        let mut family = FamilyMask::EMPTY;
        let mut marginal = Vec::new();
        for w in self.ground().subsets() {
            let c = self.closure(w);
            marginal.extend(c.marginal);
            if c.closed == w {
                family.insert(w);
            }
        }
        InducedAlignment { family, marginal }
    }
}

/// Free function form of [`Configuration::ch_c`] with the default tolerance.
pub fn ch_c<T: Scalar>(conf: &Configuration<T>, y: SubsetMask) -> Result<HullClosure<T>> {
    conf.ch_c(y, T::default_eps())
}

/// Free function form of [`Configuration::induced_alignment`] with the default tolerance.
pub fn induced_alignment<T: Scalar>(conf: &Configuration<T>) -> InducedAlignment<T> {
    conf.induced_alignment(T::default_eps())
}
