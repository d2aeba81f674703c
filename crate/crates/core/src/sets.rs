//! Subset and family encodings over a ground set of at most five elements.
//!
//! A subset is an `n`-bit integer (bit `i` is element `i`, labelled `a`, `b`, ...).
//! A family of subsets is a `2^n`-bit integer with one bit per subset index,
//! so a whole family over five elements fits a `u32`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_ELEMENTS: usize = 5;

const LABELS: [char; MAX_ELEMENTS] = ['a', 'b', 'c', 'd', 'e'];

/// A ground set `{a, b, ...}` of `n` elements, `1 <= n <= 5`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "usize", into = "usize")]
pub struct GroundSet {
    n: u8,
}

impl TryFrom<usize> for GroundSet {
    type Error = Error;

    fn try_from(n: usize) -> Result<Self> {
        GroundSet::new(n)
    }
}

impl From<GroundSet> for usize {
    fn from(g: GroundSet) -> usize {
        g.len()
    }
}

impl GroundSet {
    pub fn new(n: usize) -> Result<Self> {
        if (1..=MAX_ELEMENTS).contains(&n) {
            Ok(GroundSet { n: n as u8 })
        } else {
            Err(Error::GroundSize(n))
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Number of subsets, `2^n`.
    #[inline]
    pub fn subset_count(&self) -> usize {
        1 << self.n
    }

    #[inline]
    pub fn full(&self) -> SubsetMask {
        SubsetMask((1u32 << self.n) - 1)
    }

    /// The family of all subsets.
    #[inline]
    pub fn powerset(&self) -> FamilyMask {
        if self.subset_count() == 32 {
            FamilyMask(u32::MAX)
        } else {
            FamilyMask((1u32 << self.subset_count()) - 1)
        }
    }

    pub fn label(&self, index: usize) -> char {
        LABELS[index]
    }

    pub fn labels(&self) -> impl Iterator<Item = char> + '_ {
        LABELS[..self.len()].iter().copied()
    }

    pub fn index_of(&self, label: char) -> Result<usize> {
        LABELS[..self.len()]
            .iter()
            .position(|&c| c == label)
            .ok_or(Error::UnknownLabel { label, n: self.len() })
    }

    /// All subsets in index order.
    pub fn subsets(&self) -> impl Iterator<Item = SubsetMask> {
        (0..self.subset_count() as u32).map(SubsetMask)
    }

    /// Encode a string of element labels. Whitespace, commas, braces and `∅` are ignored.
    pub fn encode(&self, labels: &str) -> Result<SubsetMask> {
        let mut bits = 0u32;
        for ch in labels.chars() {
            if ch.is_whitespace() || matches!(ch, ',' | '{' | '}' | '∅') {
                continue;
            }
            bits |= 1 << self.index_of(ch)?;
        }
        Ok(SubsetMask(bits))
    }

    /// Labels of the subset in index order; the empty set is the empty string.
    pub fn decode(&self, s: SubsetMask) -> String {
        s.elements().map(|i| LABELS[i]).collect()
    }

    /// Human-readable form, `∅` for the empty set.
    pub fn show(&self, s: SubsetMask) -> String {
        if s.is_empty() {
            "∅".to_string()
        } else {
            self.decode(s)
        }
    }

    pub fn check_subset(&self, s: SubsetMask) -> Result<SubsetMask> {
        if s.0 < (1 << self.n) {
            Ok(s)
        } else {
            Err(Error::MaskOutOfRange { mask: s.0 as u64, n: self.len() })
        }
    }

    pub fn check_family(&self, f: u64) -> Result<FamilyMask> {
        if f < (1u64 << self.subset_count()) {
            Ok(FamilyMask(f as u32))
        } else {
            Err(Error::MaskOutOfRange { mask: f, n: self.len() })
        }
    }

    /// Every permutation of `0..n` in lexicographic order.
    pub fn permutations(&self) -> Vec<Vec<usize>> {
        fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
            if prefix.len() == used.len() {
                out.push(prefix.clone());
                return;
            }
            for i in 0..used.len() {
                if !used[i] {
                    used[i] = true;
                    prefix.push(i);
                    rec(prefix, used, out);
                    prefix.pop();
                    used[i] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), &mut vec![false; self.len()], &mut out);
        out
    }
}

/// A subset of the ground set; bit `i` set iff element `i` belongs to it.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SubsetMask(pub u32);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    #[inline]
    pub fn singleton(i: usize) -> Self {
        SubsetMask(1 << i)
    }

    #[inline]
    pub fn bits(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_subset_of(self, other: SubsetMask) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_proper_subset_of(self, other: SubsetMask) -> bool {
        self != other && self.is_subset_of(other)
    }

    #[inline]
    pub fn union(self, other: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 & !other.0)
    }

    #[inline]
    pub fn with(self, i: usize) -> SubsetMask {
        SubsetMask(self.0 | 1 << i)
    }

    #[inline]
    pub fn without(self, i: usize) -> SubsetMask {
        SubsetMask(self.0 & !(1 << i))
    }

    /// Element indices in increasing order.
    pub fn elements(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i)
            }
        })
    }

    /// Image under the element permutation `perm` (element `i` goes to `perm[i]`).
    pub fn permute(self, perm: &[usize]) -> SubsetMask {
        SubsetMask(self.elements().fold(0, |acc, i| acc | 1 << perm[i]))
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("∅");
        }
        for i in self.elements() {
            write!(f, "{}", LABELS.get(i).copied().unwrap_or('?'))?;
        }
        Ok(())
    }
}

/// A family of subsets; bit `k` set iff the subset with index `k` belongs to it.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FamilyMask(pub u32);

impl FamilyMask {
    pub const EMPTY: FamilyMask = FamilyMask(0);

    #[inline]
    pub fn bits(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn contains(self, s: SubsetMask) -> bool {
        self.0 >> s.0 & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, s: SubsetMask) {
        self.0 |= 1 << s.0;
    }

    #[inline]
    pub fn with(self, s: SubsetMask) -> FamilyMask {
        FamilyMask(self.0 | 1 << s.0)
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Member subsets in index order.
    pub fn members(self) -> impl Iterator<Item = SubsetMask> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let s = rest.trailing_zeros();
                rest &= rest - 1;
                Some(SubsetMask(s))
            }
        })
    }

    /// Encode a list of subsets; duplicates collapse.
    pub fn from_subsets<I: IntoIterator<Item = SubsetMask>>(ground: GroundSet, subsets: I) -> Result<Self> {
        let mut f = FamilyMask::EMPTY;
        for s in subsets {
            f.insert(ground.check_subset(s)?);
        }
        Ok(f)
    }

    /// Intersection of the members containing `y`; the full set when none does.
    pub fn closure(self, ground: GroundSet, y: SubsetMask) -> SubsetMask {
        self.members()
            .filter(|&z| y.is_subset_of(z))
            .fold(ground.full(), SubsetMask::intersection)
    }

    pub fn is_intersection_closed(self) -> bool {
        let members: Vec<_> = self.members().collect();
        members
            .iter()
            .enumerate()
            .all(|(i, &y)| members[i + 1..].iter().all(|&z| self.contains(y.intersection(z))))
    }

    pub fn is_union_closed(self) -> bool {
        let members: Vec<_> = self.members().collect();
        members
            .iter()
            .enumerate()
            .all(|(i, &y)| members[i + 1..].iter().all(|&z| self.contains(y.union(z))))
    }

    /// Family `{ π(S) : S ∈ f }` for the element permutation `π`.
    pub fn permute(self, perm: &[usize]) -> FamilyMask {
        FamilyMask(self.members().fold(0, |acc, s| acc | 1 << s.permute(perm).0))
    }
}

/// Encode a set of element labels.
pub fn subset_encode(labels: &str, ground: GroundSet) -> Result<SubsetMask> {
    ground.encode(labels)
}

pub fn subset_decode(s: SubsetMask, ground: GroundSet) -> String {
    ground.decode(s)
}

pub fn family_encode(subsets: &[SubsetMask], ground: GroundSet) -> Result<FamilyMask> {
    FamilyMask::from_subsets(ground, subsets.iter().copied())
}

/// Whether `f` is the family of closed sets of a convex geometry on `ground`:
/// it contains `∅` and `X`, is intersection-closed, and every member other
/// than `X` has a one-element extension in the family.
pub fn is_convex_geometry(f: FamilyMask, ground: GroundSet) -> bool {
    if ground.check_family(f.0 as u64).is_err() {
        return false;
    }
    let full = ground.full();
    if !f.contains(SubsetMask::EMPTY) || !f.contains(full) || !f.is_intersection_closed() {
        return false;
    }
    f.members().filter(|&y| y != full).all(|y| {
        full.difference(y).elements().any(|a| f.contains(y.with(a)))
    })
}

/// Anti-exchange check on the closure operator of an alignment `f`.
///
/// Requires `X ∈ f` and intersection closure; checks `φ(∅) = ∅` and, for
/// every closed `Y` and distinct `x, y ∉ Y`, that `x ∈ φ(Y ∪ {y})` forces
/// `y ∉ φ(Y ∪ {x})`.
pub fn anti_exchange_holds(f: FamilyMask, ground: GroundSet) -> Result<bool> {
    ground.check_family(f.0 as u64)?;
    if !f.contains(ground.full()) || !f.is_intersection_closed() {
        return Err(Error::NotClosureSystem(f.0));
    }
    if !f.closure(ground, SubsetMask::EMPTY).is_empty() {
        return Ok(false);
    }
    let full = ground.full();
    for y in f.members() {
        let outside: Vec<usize> = full.difference(y).elements().collect();
        for &p in &outside {
            let cp = f.closure(ground, y.with(p));
            for &q in &outside {
                if p == q || !cp.contains(q) {
                    continue;
                }
                if f.closure(ground, y.with(q)).contains(p) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// `{ X \ Y : Y ∈ f }`; maps antimatroids to convex geometries and back.
pub fn complement_family(f: FamilyMask, ground: GroundSet) -> FamilyMask {
    let full = ground.full();
    FamilyMask(f.members().fold(0, |acc, s| acc | 1 << full.difference(s).0))
}

/// Union-closed, contains `∅` and `X`, and every non-empty member loses
/// some element while staying in the family.
pub fn is_antimatroid(f: FamilyMask, ground: GroundSet) -> bool {
    let full = ground.full();
    f.contains(SubsetMask::EMPTY)
        && f.contains(full)
        && f.is_union_closed()
        && f.members()
            .filter(|y| !y.is_empty())
            .all(|y| y.elements().any(|x| f.contains(y.without(x))))
}

/// Minimum mask over all relabelings of the ground set.
pub fn canonical_form(f: FamilyMask, ground: GroundSet) -> FamilyMask {
    canonical_with_permutation(f, ground).0
}

/// Canonical form together with a permutation `π` such that `f.permute(π)`
/// equals it. Ties resolve to the lexicographically first permutation.
pub fn canonical_with_permutation(f: FamilyMask, ground: GroundSet) -> (FamilyMask, Vec<usize>) {
    let mut best: Option<(FamilyMask, Vec<usize>)> = None;
    for perm in ground.permutations() {
        let g = f.permute(&perm);
        if best.as_ref().is_none_or(|(b, _)| g < *b) {
            best = Some((g, perm));
        }
    }
    best.expect("at least one permutation")
}

/// A family of closed sets satisfying the convex-geometry axioms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ConvexGeometry {
    ground: GroundSet,
    family: FamilyMask,
}

impl ConvexGeometry {
    pub fn new(ground: GroundSet, family: FamilyMask) -> Result<Self> {
        if is_convex_geometry(family, ground) {
            Ok(ConvexGeometry { ground, family })
        } else {
            Err(Error::NotConvexGeometry(family.0))
        }
    }

    pub fn from_mask(n: usize, mask: u64) -> Result<Self> {
        let ground = GroundSet::new(n)?;
        let family = ground.check_family(mask)?;
        Self::new(ground, family)
    }

    /// The free geometry: every subset closed.
    pub fn powerset(ground: GroundSet) -> Self {
        ConvexGeometry { ground, family: ground.powerset() }
    }

    /// The chain `∅ ⊂ {a} ⊂ {a,b} ⊂ ... ⊂ X`.
    pub fn chain(ground: GroundSet) -> Self {
        let family = (0..=ground.len()).fold(FamilyMask::EMPTY, |f, k| f.with(SubsetMask((1 << k) - 1)));
        ConvexGeometry { ground, family }
    }

    #[inline]
    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    #[inline]
    pub fn family(&self) -> FamilyMask {
        self.family
    }

    #[inline]
    pub fn is_closed(&self, y: SubsetMask) -> bool {
        self.family.contains(y)
    }

    /// `φ(Y)`, the smallest closed superset of `y`.
    pub fn closure(&self, y: SubsetMask) -> SubsetMask {
        self.family.closure(self.ground, y)
    }

    pub fn closed_sets(&self) -> impl Iterator<Item = SubsetMask> {
        self.family.members()
    }

    /// Same geometry with elements renamed by `perm`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        ConvexGeometry { ground: self.ground, family: self.family.permute(perm) }
    }

    pub fn canonical(&self) -> Self {
        ConvexGeometry { ground: self.ground, family: canonical_form(self.family, self.ground) }
    }
}

/// Free function form of [`ConvexGeometry::closure`].
pub fn closure(g: &ConvexGeometry, y: SubsetMask) -> SubsetMask {
    g.closure(y)
}
