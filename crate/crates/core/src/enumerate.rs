//! Exhaustive enumeration of convex geometries up to isomorphism.
//!
//! Subsets are decided from the top (`X`) down, by decreasing size. When a
//! subset `S` is reached, every strict superset has already been decided, so
//! both axioms can be enforced locally:
//!
//! * if the intersection of the chosen strict supersets equals `S`, then `S`
//!   is forced into the family (intersection closure);
//! * `S` may only be chosen if some one-element extension `S ∪ {a}` was chosen.
//!
//! Every complete branch that also picks `∅` is a labelled convex geometry;
//! these are reduced to canonical forms.

use std::collections::BTreeSet;

use crate::error::Result;
use crate::sets::{canonical_form, FamilyMask, GroundSet, SubsetMask};

/// One canonical representative per isomorphism class, sorted by
/// (number of closed sets, canonical mask).
pub fn enumerate_geometries(ground: GroundSet) -> Result<Vec<FamilyMask>> {
    let mut classes = BTreeSet::new();
    for_each_labelled_geometry(ground, |f| {
        classes.insert(canonical_form(f, ground));
    });
    let mut out: Vec<FamilyMask> = classes.into_iter().collect();
    out.sort_by_key(|f| (f.len(), f.0));
    Ok(out)
}

/// Number of convex geometries on `ground` counted with labels.
pub fn count_labelled_geometries(ground: GroundSet) -> usize {
    let mut count = 0;
    for_each_labelled_geometry(ground, |_| count += 1);
    count
}

/// Visit every labelled convex geometry on `ground` exactly once.
pub fn for_each_labelled_geometry<F: FnMut(FamilyMask)>(ground: GroundSet, mut visit: F) {
    let full = ground.full();
    let mut order: Vec<SubsetMask> = ground.subsets().filter(|&s| s != full).collect();
    order.sort_by_key(|s| (std::cmp::Reverse(s.len()), s.0));
    let start = FamilyMask::EMPTY.with(full);
    descend(ground, &order, 0, start, &mut visit);
}

fn descend<F: FnMut(FamilyMask)>(ground: GroundSet, order: &[SubsetMask], depth: usize, family: FamilyMask, visit: &mut F) {
    let Some(&s) = order.get(depth) else {
        visit(family);
        return;
    };
    let full = ground.full();
    let has_cover = full.difference(s).elements().any(|a| family.contains(s.with(a)));
    let forced = family.closure(ground, s) == s;
    let must_include = forced || s.is_empty();
    if has_cover {
        descend(ground, order, depth + 1, family.with(s), visit);
    }
    if !must_include {
        descend(ground, order, depth + 1, family, visit);
    }
}
