//! Ground sets and subsets as fixed-width bitmasks.
//!
//! Elements are labeled `1..=n`. A [`Subset`] packs membership into a `u128`,
//! so ground sets are capped at [`MAX_GROUND`] elements. All set algebra is
//! constant time, which is what the enumeration cores lean on.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Hard cap on ground-set size (bit width of the mask).
pub const MAX_GROUND: u32 = 128;

/// Default cap; large instances must opt in via [`GroundSet::new_extended`].
pub const DEFAULT_GROUND_CAP: u32 = 64;

/// The set `[n] = {1, .., n}` of element labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroundSet {
    n: u32,
}

impl GroundSet {
    pub fn new(n: u32) -> Result<Self> {
        if n == 0 || n > DEFAULT_GROUND_CAP {
            return Err(Error::GroundSetSize(n, DEFAULT_GROUND_CAP));
        }
        Ok(GroundSet { n })
    }

    /// Ground sets above the default cap, up to the mask width.
    pub fn new_extended(n: u32) -> Result<Self> {
        if n == 0 || n > MAX_GROUND {
            return Err(Error::GroundSetSize(n, MAX_GROUND));
        }
        Ok(GroundSet { n })
    }

    pub fn size(&self) -> u32 {
        self.n
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.n)
    }

    pub fn contains_label(&self, label: u32) -> bool {
        label >= 1 && label <= self.n
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        1..=self.n
    }
}

/// A subset of a ground set, stored as a bitmask (bit `i-1` holds label `i`).
///
/// `Ord` is the raw mask order (useful as a map key); the circuit order used
/// throughout the crate is [`Subset::canonical_cmp`].
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Subset(pub u128);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn empty() -> Self {
        Subset(0)
    }

    pub fn full(n: u32) -> Self {
        if n == 0 {
            Subset(0)
        } else if n == 128 {
            Subset(u128::MAX)
        } else {
            Subset((1u128 << n) - 1)
        }
    }

    pub fn singleton(label: u32) -> Self {
        debug_assert!(label >= 1 && label <= MAX_GROUND);
        Subset(1u128 << (label - 1))
    }

    pub fn from_labels(labels: &[u32]) -> Self {
        let mut m = 0u128;
        for &l in labels {
            debug_assert!(l >= 1 && l <= MAX_GROUND);
            m |= 1u128 << (l - 1);
        }
        Subset(m)
    }

    /// Checked construction against a ground set.
    pub fn checked_from_labels(labels: &[u32], ground: GroundSet) -> Result<Self> {
        for &l in labels {
            if !ground.contains_label(l) {
                return Err(Error::ElementOutOfRange(l, ground.size()));
            }
        }
        Ok(Self::from_labels(labels))
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn len(&self) -> u32 {
        self.0.count_ones()
    }

    pub fn contains(&self, label: u32) -> bool {
        label >= 1 && label <= MAX_GROUND && self.0 & (1u128 << (label - 1)) != 0
    }

    pub fn insert(&mut self, label: u32) {
        self.0 |= 1u128 << (label - 1);
    }

    pub fn remove(&mut self, label: u32) {
        self.0 &= !(1u128 << (label - 1));
    }

    pub fn with(self, label: u32) -> Self {
        Subset(self.0 | (1u128 << (label - 1)))
    }

    pub fn without(self, label: u32) -> Self {
        Subset(self.0 & !(1u128 << (label - 1)))
    }

    pub fn union(self, other: Subset) -> Self {
        Subset(self.0 | other.0)
    }

    pub fn inter(self, other: Subset) -> Self {
        Subset(self.0 & other.0)
    }

    pub fn minus(self, other: Subset) -> Self {
        Subset(self.0 & !other.0)
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_superset_of(&self, other: &Subset) -> bool {
        other.is_subset_of(self)
    }

    pub fn intersects(&self, other: &Subset) -> bool {
        self.0 & other.0 != 0
    }

    pub fn min_label(&self) -> Option<u32> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() + 1)
        }
    }

    /// Iterate member labels in increasing order.
    pub fn iter(&self) -> SubsetIter {
        SubsetIter(self.0)
    }

    pub fn labels(&self) -> Vec<u32> {
        self.iter().collect()
    }

    /// Total order by (cardinality, then lexicographic on sorted labels).
    /// This is the canonical circuit order used across the crate.
    pub fn canonical_cmp(&self, other: &Subset) -> Ordering {
        match self.len().cmp(&other.len()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let d = self.0 ^ other.0;
        if d == 0 {
            return Ordering::Equal;
        }
        // The side owning the lowest differing bit has the smaller element there.
        let low = d & d.wrapping_neg();
        if self.0 & low != 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, l) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

pub struct SubsetIter(u128);

impl Iterator for SubsetIter {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        if self.0 == 0 {
            None
        } else {
            let tz = self.0.trailing_zeros();
            self.0 &= self.0 - 1;
            Some(tz + 1)
        }
    }
}

/// All `k`-subsets of the members of `universe`, in canonical order.
pub fn k_subsets(universe: Subset, k: u32) -> Vec<Subset> {
    let elems = universe.labels();
    let mut out = Vec::new();
    if (k as usize) > elems.len() {
        return out;
    }
    let mut cur = Vec::with_capacity(k as usize);
    fn rec(elems: &[u32], start: usize, k: usize, cur: &mut Vec<u32>, out: &mut Vec<Subset>) {
        if cur.len() == k {
            out.push(Subset::from_labels(cur));
            return;
        }
        let need = k - cur.len();
        for i in start..=elems.len().saturating_sub(need) {
            cur.push(elems[i]);
            rec(elems, i + 1, k, cur, out);
            cur.pop();
        }
    }
    rec(&elems, 0, k as usize, &mut cur, &mut out);
    out
}

/// Visit every subset of the members of `universe` (including the empty set).
pub fn for_each_subset(universe: Subset, mut f: impl FnMut(Subset)) {
    // Carry-rippler over the masked universe.
    let set = universe.0;
    let mut sub = 0u128;
    loop {
        f(Subset(sub));
        sub = sub.wrapping_sub(set) & set;
        if sub == 0 {
            break;
        }
    }
}

/// Sort a family into canonical order and drop duplicates.
pub fn canonicalize_family(mut family: Vec<Subset>) -> Vec<Subset> {
    family.sort_by(|a, b| a.canonical_cmp(b));
    family.dedup();
    family
}
