//! Implications `A → B` between subsets, implicational bases and tightness.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sets::{ConvexGeometry, FamilyMask, GroundSet, SubsetMask};

/// `premise → conclusion`, stored with the premise removed from the conclusion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Implication {
    pub premise: SubsetMask,
    pub conclusion: SubsetMask,
}

impl Implication {
    pub fn new(premise: SubsetMask, conclusion: SubsetMask) -> Self {
        Implication { premise, conclusion: conclusion.difference(premise) }
    }

    pub fn parse(text: &str, ground: GroundSet) -> Result<Self> {
        let (lhs, rhs) = text
            .split_once("->")
            .or_else(|| text.split_once('→'))
            .ok_or_else(|| Error::Format(format!("expected `premise -> conclusion`, got {text:?}")))?;
        Ok(Implication::new(ground.encode(lhs)?, ground.encode(rhs)?))
    }

    /// `self` follows from `other` by the pairwise rule: `C ⊆ A` and `B ⊆ D`.
    #[inline]
    pub fn is_subsumed_by(&self, other: &Implication) -> bool {
        other.premise.is_subset_of(self.premise) && self.conclusion.is_subset_of(other.conclusion)
    }

    pub fn is_trivial(&self) -> bool {
        self.conclusion.is_empty()
    }
}

impl fmt::Display for Implication {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}→{}", self.premise, self.conclusion)
    }
}

/// Pairwise-reduced list of implications defining a closure operator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImplicationBasis {
    pub ground: GroundSet,
    pub rules: Vec<Implication>,
}

impl ImplicationBasis {
    pub fn new(ground: GroundSet, rules: Vec<Implication>) -> Self {
        ImplicationBasis { ground, rules: reduce_pairwise(&rules) }
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Implication> {
        self.rules.iter()
    }

    /// Whether `w` respects every rule.
    pub fn respects(&self, w: SubsetMask) -> bool {
        self.rules
            .iter()
            .all(|r| !r.premise.is_subset_of(w) || r.conclusion.is_subset_of(w))
    }
}

/// `conclusion ⊆ φ(premise)`.
pub fn implication_holds(g: &ConvexGeometry, imp: &Implication) -> bool {
    imp.conclusion.is_subset_of(g.closure(imp.premise))
}

/// Rules `A → φ(A) \ A` for every nonempty non-closed `A`, pairwise reduced.
pub fn generate_basis(g: &ConvexGeometry) -> ImplicationBasis {
    let candidates: Vec<Implication> = g
        .ground()
        .subsets()
        .filter(|&a| !a.is_empty() && !g.is_closed(a))
        .map(|a| Implication::new(a, g.closure(a)))
        .collect();
    ImplicationBasis::new(g.ground(), candidates)
}

/// Drop every rule that is subsumed by a different rule of the list
/// (`C ⊆ A` and `B ⊆ D`), collapse duplicates, and sort by premise then
/// conclusion.
///
/// Subsumption is a partial order on distinct rules, so the survivors are
/// exactly its maximal elements and the result does not depend on input order.
pub fn reduce_pairwise(rules: &[Implication]) -> Vec<Implication> {
    let mut rules: Vec<Implication> = rules.to_vec();
    rules.sort();
    rules.dedup();
    rules
        .iter()
        .filter(|r| !rules.iter().any(|s| s != *r && r.is_subsumed_by(s)))
        .copied()
        .collect()
}

/// All subsets that respect every rule of the basis.
pub fn alignment_from_implications(basis: &ImplicationBasis) -> FamilyMask {
    basis
        .ground
        .subsets()
        .filter(|&w| basis.respects(w))
        .fold(FamilyMask::EMPTY, FamilyMask::with)
}

/// `Y → u` is tight when no `(Y \ z) → u` holds.
///
/// Fails if `u ∈ Y` or the implication does not hold in `g`.
pub fn is_tight(g: &ConvexGeometry, premise: SubsetMask, u: usize) -> Result<bool> {
    if u >= g.ground().len() {
        return Err(Error::Precondition(format!("element index {u} out of range")));
    }
    if premise.contains(u) || !g.closure(premise).contains(u) {
        return Err(Error::ImplicationDoesNotHold(format!(
            "{}→{}",
            g.ground().show(premise),
            g.ground().label(u)
        )));
    }
    Ok(tight_unchecked(g, premise, u))
}

#[inline]
fn tight_unchecked(g: &ConvexGeometry, premise: SubsetMask, u: usize) -> bool {
    premise.elements().all(|z| !g.closure(premise.without(z)).contains(u))
}

/// Pruning rule: if some `y ∈ Y` already follows from `Y \ y`, no
/// implication with premise `Y` is tight.
pub fn premise_is_redundant(g: &ConvexGeometry, premise: SubsetMask) -> bool {
    premise.elements().any(|y| g.closure(premise.without(y)).contains(y))
}

/// Every tight `(Y, u)` with `u ∈ φ(Y) \ Y`, optionally restricted to `|Y| = size`,
/// ordered by premise mask then element.
pub fn tight_implications(g: &ConvexGeometry, premise_size: Option<usize>) -> Vec<(SubsetMask, usize)> {
    let mut out = Vec::new();
    for y in g.ground().subsets() {
        if y.is_empty() || premise_size.is_some_and(|k| y.len() != k) {
            continue;
        }
        if premise_is_redundant(g, y) {
            continue;
        }
        let gained = g.closure(y).difference(y);
        for u in gained.elements() {
            if tight_unchecked(g, y, u) {
                out.push((y, u));
            }
        }
    }
    out
}
