//! Meet-irreducible closed sets and convex dimension.
//!
//! The convex dimension equals the width of the poset of meet-irreducibles
//! (Edelman–Saks). The width is computed through Dilworth's theorem as
//! `k - ν`, where `ν` is a maximum matching of the strict-inclusion relation
//! viewed as a bipartite graph.

use crate::error::{Error, Result};
use crate::sets::{ConvexGeometry, SubsetMask};

/// Subsets partially ordered by inclusion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    elements: Vec<SubsetMask>,
}

impl Poset {
    /// Duplicates are dropped; the remaining order is by mask.
    pub fn new(mut elements: Vec<SubsetMask>) -> Self {
        elements.sort();
        elements.dedup();
        Poset { elements }
    }

    pub fn elements(&self) -> &[SubsetMask] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// Closed sets `Y ∪ {a}` with `a ∉ Y`.
pub fn upper_covers(g: &ConvexGeometry, y: SubsetMask) -> Result<Vec<SubsetMask>> {
    if !g.is_closed(y) {
        return Err(Error::NotClosed(g.ground().show(y)));
    }
    Ok(g.ground()
        .full()
        .difference(y)
        .elements()
        .map(|a| y.with(a))
        .filter(|&z| g.is_closed(z))
        .collect())
}

/// Closed sets other than `X` with exactly one upper cover.
pub fn meet_irreducibles(g: &ConvexGeometry) -> Vec<SubsetMask> {
    g.closed_sets()
        .filter(|&y| y != g.ground().full())
        .filter(|&y| upper_covers(g, y).map(|c| c.len() == 1).unwrap_or(false))
        .collect()
}

/// Width of the inclusion order on `p`.
pub fn max_antichain_size(p: &Poset) -> usize {
    let k = p.len();
    let els = p.elements();
    let adj: Vec<Vec<usize>> = (0..k)
        .map(|i| (0..k).filter(|&j| els[i].is_proper_subset_of(els[j])).collect())
        .collect();
    let mut match_right: Vec<Option<usize>> = vec![None; k];
    let mut matched = 0;
    for left in 0..k {
        let mut seen = vec![false; k];
        if augment(left, &adj, &mut seen, &mut match_right) {
            matched += 1;
        }
    }
    k - matched
}

fn augment(left: usize, adj: &[Vec<usize>], seen: &mut [bool], match_right: &mut [Option<usize>]) -> bool {
    for &right in &adj[left] {
        if seen[right] {
            continue;
        }
        seen[right] = true;
        if match_right[right].is_none_or(|other| augment(other, adj, seen, match_right)) {
            match_right[right] = Some(left);
            return true;
        }
    }
    false
}

/// Largest antichain of meet-irreducibles.
pub fn convex_dimension(g: &ConvexGeometry) -> usize {
    max_antichain_size(&Poset::new(meet_irreducibles(g)))
}
