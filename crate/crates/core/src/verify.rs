//! Checking a circle configuration against a target convex geometry.
//!
//! Two procedures are provided. [`verify_full`] computes the whole induced
//! alignment and compares it with the target. [`verify_by_propositions`]
//! only checks that every basis rule `Y → Z` has `Z ⊆ ch_c(Y)` (so the
//! induced alignment is contained in the target) and that every
//! meet-irreducible of the target is `ch_c`-closed (so the target is contained
//! in the induced alignment). Both report `marginal` whenever any containment
//! decision of the configuration falls in the tolerance band, so their
//! verdicts always coincide.

use serde::{Deserialize, Serialize};

use crate::config::{Configuration, HullOperator, MarginalPair};
use crate::dimension::meet_irreducibles;
use crate::error::{Error, Result};
use crate::implications::{alignment_from_implications, generate_basis, Implication, ImplicationBasis};
use crate::scalar::Scalar;
use crate::sets::{ConvexGeometry, FamilyMask, SubsetMask};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Verified,
    Failed,
    Marginal,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport<T> {
    pub verdict: Verdict,
    pub induced: FamilyMask,
    /// Basis rules `Y → Z` with `Z ⊄ ch_c(Y)`.
    pub violated_implications: Vec<Implication>,
    /// Meet-irreducibles of the target that are not `ch_c`-closed.
    pub non_closed_meet_irreducibles: Vec<SubsetMask>,
    /// Symmetric difference of the induced and target families (full procedure only).
    pub mismatched_sets: Vec<SubsetMask>,
    pub marginal_pairs: Vec<MarginalPair<T>>,
    pub implications_checked: usize,
    pub meet_irreducibles_checked: usize,
}

fn check_ground<T: Scalar>(g: &ConvexGeometry, conf: &Configuration<T>) -> Result<()> {
    if g.ground() != conf.ground() {
        return Err(Error::GroundMismatch { expected: g.ground().len(), got: conf.ground().len() });
    }
    Ok(())
}

fn verdict(agrees: bool, clean: bool) -> Verdict {
    match (clean, agrees) {
        (false, _) => Verdict::Marginal,
        (true, true) => Verdict::Verified,
        (true, false) => Verdict::Failed,
    }
}

fn proposition_checks<T: Scalar>(
    op: &HullOperator<T>,
    basis: &ImplicationBasis,
    irreducibles: &[SubsetMask],
) -> (Vec<Implication>, Vec<SubsetMask>) {
    let violated = basis
        .iter()
        .filter(|r| !r.conclusion.is_subset_of(op.closure(r.premise).closed))
        .copied()
        .collect();
    let open = irreducibles
        .iter()
        .filter(|&&y| op.closure(y).closed != y)
        .copied()
        .collect();
    (violated, open)
}

/// Compare the induced alignment of `conf` with `g` under the identity labelling.
pub fn verify_full<T: Scalar>(g: &ConvexGeometry, conf: &Configuration<T>, eps: T) -> Result<VerificationReport<T>> {
    check_ground(g, conf)?;
    let op = conf.hull_operator(eps);
    let induced = op.induced_alignment();
    let diff = FamilyMask(induced.family.0 ^ g.family().0);
    let basis = generate_basis(g);
    let irreducibles = meet_irreducibles(g);
    let (violated, open) = proposition_checks(&op, &basis, &irreducibles);
    Ok(VerificationReport {
        verdict: verdict(diff.is_empty(), induced.is_clean()),
        induced: induced.family,
        violated_implications: violated,
        non_closed_meet_irreducibles: open,
        mismatched_sets: diff.members().collect(),
        marginal_pairs: induced.marginal,
        implications_checked: basis.len(),
        meet_irreducibles_checked: irreducibles.len(),
    })
}

/// Decide through the basis rules and the meet-irreducibles of `g`.
pub fn verify_by_propositions<T: Scalar>(
    g: &ConvexGeometry,
    basis: &ImplicationBasis,
    conf: &Configuration<T>,
    eps: T,
) -> Result<VerificationReport<T>> {
    check_ground(g, conf)?;
    if basis.ground != g.ground() || alignment_from_implications(basis) != g.family() {
        return Err(Error::Precondition("the implication basis does not generate the target geometry".into()));
    }
    let op = conf.hull_operator(eps);
    let irreducibles = meet_irreducibles(g);
    let (violated, open) = proposition_checks(&op, basis, &irreducibles);
    let induced = op.induced_alignment();
    Ok(VerificationReport {
        verdict: verdict(violated.is_empty() && open.is_empty(), induced.is_clean()),
        induced: induced.family,
        violated_implications: violated,
        non_closed_meet_irreducibles: open,
        mismatched_sets: Vec::new(),
        marginal_pairs: induced.marginal,
        implications_checked: basis.len(),
        meet_irreducibles_checked: irreducibles.len(),
    })
}
