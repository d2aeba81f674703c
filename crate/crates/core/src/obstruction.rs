//! Combinatorial obstructions to representability by circles.
//!
//! For circles, a tight implication `abc → e` forces the center of `e`
//! strictly inside the triangle of the centers of `a`, `b`, `c`. Two
//! patterns of three tight implications make that impossible:
//!
//! * wedge: `abc → e`, `abd → e`, `acd → e`
//! * cascade: `abc → d`, `acd → e`, `bcd → e`
//!
//! Any geometry containing either pattern has no circle representation.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::implications::Implication;
use crate::sets::{ConvexGeometry, GroundSet, SubsetMask};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Pattern {
    Wedge,
    Cascade,
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Pattern::Wedge => "wedge",
            Pattern::Cascade => "cascade",
        })
    }
}

/// Three tight implications forming a [`Pattern`] over elements `(a, b, c, d, e)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ObstructionCertificate {
    pub pattern: Pattern,
    pub elements: [usize; 5],
    pub implications: [Implication; 3],
}

impl ObstructionCertificate {
    /// The three implications prescribed by `pattern` on the tuple `(a, b, c, d, e)`.
    pub fn implications_for(pattern: Pattern, [a, b, c, d, e]: [usize; 5]) -> [Implication; 3] {
        let set = |xs: &[usize]| xs.iter().fold(SubsetMask::EMPTY, |s, &x| s.with(x));
        match pattern {
            Pattern::Wedge => [
                Implication::new(set(&[a, b, c]), set(&[e])),
                Implication::new(set(&[a, b, d]), set(&[e])),
                Implication::new(set(&[a, c, d]), set(&[e])),
            ],
            Pattern::Cascade => [
                Implication::new(set(&[a, b, c]), set(&[d])),
                Implication::new(set(&[a, c, d]), set(&[e])),
                Implication::new(set(&[b, c, d]), set(&[e])),
            ],
        }
    }

    pub fn describe(&self, ground: GroundSet) -> String {
        let rules: Vec<String> = self
            .implications
            .iter()
            .map(|i| format!("{}→{}", ground.decode(i.premise), ground.decode(i.conclusion)))
            .collect();
        format!("{}: {}", self.pattern, rules.join(", "))
    }
}

/// Tightness of every `(Y, u)` with `|Y| = 3`, indexed by `Y.bits() * n + u`.
struct TightTable {
    n: usize,
    tight: Vec<bool>,
}

impl TightTable {
    fn new(g: &ConvexGeometry) -> Self {
        let n = g.ground().len();
        let mut tight = vec![false; g.ground().subset_count() * n];
        for y in g.ground().subsets().filter(|s| s.len() == 3) {
            let gained = g.closure(y).difference(y);
            for u in gained.elements() {
                tight[y.index() * n + u] = y.elements().all(|z| !g.closure(y.without(z)).contains(u));
            }
        }
        TightTable { n, tight }
    }

    fn get(&self, imp: &Implication) -> bool {
        let u = imp.conclusion.elements().next().expect("singleton conclusion");
        self.tight[imp.premise.index() * self.n + u]
    }
}

/// Every wedge and cascade instance among tight 3-premise implications of `g`.
///
/// Each instance is reported once, under the lexicographically smallest
/// tuple that produces the same three implications.
pub fn detect_obstructions(g: &ConvexGeometry) -> Vec<ObstructionCertificate> {
    let n = g.ground().len();
    if n < 5 {
        return Vec::new();
    }
    let table = TightTable::new(g);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for pattern in [Pattern::Wedge, Pattern::Cascade] {
        for perm in g.ground().permutations() {
            let tuple = [perm[0], perm[1], perm[2], perm[3], perm[4]];
            let imps = ObstructionCertificate::implications_for(pattern, tuple);
            if !imps.iter().all(|i| table.get(i)) {
                continue;
            }
            let mut key = imps;
            key.sort();
            if seen.insert((pattern, key)) {
                out.push(ObstructionCertificate { pattern, elements: tuple, implications: imps });
            }
        }
    }
    out
}
