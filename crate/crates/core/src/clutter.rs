//! Clutters (simple hypergraphs): antichains of subsets with an ambient
//! dimension parameter.
//!
//! Two storage modes are supported. Explicit clutters list every edge. A
//! clutter with `implicit_top` set lists only its edges of size at most `d`;
//! the `(d+1)`-subsets containing none of the explicit edges are members by
//! convention and are expanded on demand. The padded families of this crate
//! (`min(Δ ∪ C([n], d+1))`) would otherwise materialize `C(n, d+1)` edges.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::subset::{canonicalize_family, k_subsets, GroundSet, Subset};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Clutter {
    n: u32,
    ambient_d: u32,
    explicit: Vec<Subset>,
    implicit_top: bool,
}

/// Inclusion-wise minimal members of a family.
pub fn min_family(family: Vec<Subset>) -> Vec<Subset> {
    let sorted = canonicalize_family(family);
    let mut out: Vec<Subset> = Vec::with_capacity(sorted.len());
    // canonical order is size-ascending: only strictly smaller kept sets can
    // sit inside a candidate (equal-size duplicates are already gone)
    let mut smaller_end = 0;
    let mut current_len = 0;
    for s in sorted {
        if s.len() > current_len {
            smaller_end = out.len();
            current_len = s.len();
        }
        if !out[..smaller_end].iter().any(|kept| kept.is_subset_of(&s)) {
            out.push(s);
        }
    }
    out
}

/// `min(family ∪ {extra})` for an existing antichain, in place.
pub(crate) fn insert_min(antichain: &mut Vec<Subset>, extra: Subset) {
    if antichain
        .iter()
        .any(|m| m.is_subset_of(&extra))
    {
        return;
    }
    antichain.retain(|m| !extra.is_subset_of(m));
    let pos = antichain
        .binary_search_by(|m| m.canonical_cmp(&extra))
        .unwrap_or_else(|p| p);
    antichain.insert(pos, extra);
}

impl Clutter {
    /// The antichain of minimal members of `family`, as an explicit clutter.
    pub fn from_family(ground: GroundSet, ambient_d: u32, family: Vec<Subset>) -> Self {
        Clutter {
            n: ground.size(),
            ambient_d,
            explicit: min_family(family),
            implicit_top: false,
        }
    }

    /// Explicit clutter from an antichain already in canonical order.
    pub(crate) fn from_antichain(n: u32, ambient_d: u32, antichain: Vec<Subset>) -> Self {
        debug_assert!(antichain.windows(2).all(|w| w[0].canonical_cmp(&w[1]).is_lt()));
        Clutter {
            n,
            ambient_d,
            explicit: antichain,
            implicit_top: false,
        }
    }

    /// `min(small ∪ C([n], d+1))` without materializing the top layer.
    /// Every member of `small` must have size at most `d`.
    pub fn with_implicit_top(ground: GroundSet, d: u32, small: Vec<Subset>) -> Result<Self> {
        let small = min_family(small);
        for e in &small {
            if e.len() > d {
                return Err(Error::EdgeTooLarge(e.labels(), e.len() as usize, d));
            }
        }
        Ok(Clutter {
            n: ground.size(),
            ambient_d: d,
            explicit: small,
            implicit_top: true,
        })
    }

    pub fn ground_size(&self) -> u32 {
        self.n
    }

    pub fn ground(&self) -> GroundSet {
        GroundSet::new_extended(self.n).expect("stored ground size is valid")
    }

    pub fn ambient_d(&self) -> u32 {
        self.ambient_d
    }

    pub fn has_implicit_top(&self) -> bool {
        self.implicit_top
    }

    /// The edges stored explicitly (all edges when `implicit_top` is false).
    pub fn explicit_edges(&self) -> &[Subset] {
        &self.explicit
    }

    /// Materialize every edge, expanding the implicit top layer.
    pub fn edges(&self) -> Vec<Subset> {
        if !self.implicit_top {
            return self.explicit.clone();
        }
        let mut out = self.explicit.clone();
        for top in k_subsets(Subset::full(self.n), self.ambient_d + 1) {
            if !self.explicit.iter().any(|e| e.is_subset_of(&top)) {
                out.push(top);
            }
        }
        canonicalize_family(out)
    }

    /// Same clutter with the top layer expanded into explicit storage.
    pub fn expanded(&self) -> Clutter {
        Clutter {
            n: self.n,
            ambient_d: self.ambient_d,
            explicit: self.edges(),
            implicit_top: false,
        }
    }

    pub fn edge_count(&self) -> usize {
        if !self.implicit_top {
            return self.explicit.len();
        }
        self.edges().len()
    }

    pub fn is_member(&self, set: &Subset) -> bool {
        if self.explicit.iter().any(|e| e == set) {
            return true;
        }
        self.implicit_top
            && set.len() == self.ambient_d + 1
            && !self.explicit.iter().any(|e| e.is_subset_of(set))
    }

    /// Does some edge sit inside `set`?
    pub fn has_edge_within(&self, set: &Subset) -> bool {
        if self.explicit.iter().any(|e| e.is_subset_of(set)) {
            return true;
        }
        // any (d+1)-subset of `set` either is an implicit edge or contains an
        // explicit one, so size alone decides
        self.implicit_top && set.len() >= self.ambient_d + 1
    }

    /// Stable 64-bit key of the canonical edge list (used for search dedup
    /// and transformation traces).
    pub fn canonical_key(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.n.hash(&mut h);
        self.implicit_top.hash(&mut h);
        self.ambient_d.hash(&mut h);
        for e in &self.explicit {
            e.0.hash(&mut h);
        }
        h.finish()
    }

    /// Replace the ambient dimension (the edge sizes are not re-checked).
    pub fn with_ambient_d(mut self, d: u32) -> Self {
        self.ambient_d = d;
        self
    }
}
