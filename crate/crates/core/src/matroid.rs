//! Matroids represented by their circuits.
//!
//! A matroid is stored as its ground-set size plus the antichain of circuits
//! (minimal dependent sets) in canonical (size, lex) order. Rank, closure,
//! flats, the dependency order, simplification, restriction and the two
//! single-element growth operations all derive from the circuit list.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::subset::{canonicalize_family, k_subsets, GroundSet, Subset};

/// How a new element is attached by [`Matroid::extend`].
#[derive(Debug, Clone)]
pub enum Extension {
    /// New element independent of everything; raises the rank by one.
    Coloop,
    /// New element added as freely as possible inside the given flat.
    FreeToFlat(Subset),
}

/// A flat together with its rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flat {
    pub members: Subset,
    pub rank: u32,
}

/// Where an element lands under simplification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SimplifyClass {
    Loop,
    Class(u32),
}

/// Result of [`Matroid::simplify`]: the simple matroid on the parallel
/// classes plus the map from original elements to class indices (0-based;
/// class `i` becomes element `i + 1` of the simplification).
#[derive(Debug, Clone)]
pub struct Simplification {
    pub matroid: Matroid,
    pub class_of: Vec<SimplifyClass>,
    pub class_members: Vec<Subset>,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matroid {
    n: u32,
    circuits: Vec<Subset>,
}

impl std::fmt::Debug for Matroid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Matroid(n={}, circuits=[", self.n)?;
        for (i, c) in self.circuits.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "])")
    }
}

/// Check that `family` is an antichain satisfying circuit elimination.
///
/// Returns `false` when two members are comparable, when the empty set is a
/// member, or when some pair sharing an element has no member inside
/// `(C1 ∪ C2) \ {x}`.
pub fn validate_circuits(family: &[Subset], ground: GroundSet) -> bool {
    let full = ground.full();
    for c in family {
        if c.is_empty() || !c.is_subset_of(&full) {
            return false;
        }
    }
    for (i, a) in family.iter().enumerate() {
        for b in family.iter().skip(i + 1) {
            if a.is_subset_of(b) || b.is_subset_of(a) {
                return false;
            }
        }
    }
    for (i, a) in family.iter().enumerate() {
        for b in family.iter().skip(i + 1) {
            let common = a.inter(*b);
            if common.is_empty() {
                continue;
            }
            let union = a.union(*b);
            for x in common.iter() {
                let target = union.without(x);
                if !family.iter().any(|c| c.is_subset_of(&target)) {
                    return false;
                }
            }
        }
    }
    true
}

impl Matroid {
    /// Build a matroid from a circuit family, checking the circuit axioms.
    pub fn new(ground: GroundSet, circuits: Vec<Subset>) -> Result<Self> {
        let circuits = canonicalize_family(circuits);
        if !validate_circuits(&circuits, ground) {
            return Err(Error::InvalidCircuits(format!(
                "{} circuits on [{}]",
                circuits.len(),
                ground.size()
            )));
        }
        Ok(Matroid {
            n: ground.size(),
            circuits,
        })
    }

    /// Construct from a family already certified to satisfy the axioms
    /// (e.g. circuits of a matrix, or a clutter that passed the matroid
    /// criterion). Only canonicalizes; validates in debug builds.
    pub fn from_certified_circuits(n: u32, circuits: Vec<Subset>) -> Self {
        let circuits = canonicalize_family(circuits);
        // the full validation is cubic; keep the debug check to sizes where
        // it stays cheap
        debug_assert!(
            n == 0
                || circuits.len() > 400
                || validate_circuits(&circuits, GroundSet::new_extended(n).unwrap()),
            "certified circuit family fails the axioms"
        );
        Matroid { n, circuits }
    }

    /// The free matroid (no circuits) on `[n]`.
    pub fn free(n: u32) -> Self {
        Matroid {
            n,
            circuits: Vec::new(),
        }
    }

    /// Uniform matroid of rank `r` on `[n]`: circuits are all `(r+1)`-subsets.
    pub fn uniform(r: u32, n: u32) -> Self {
        if r >= n {
            return Matroid::free(n);
        }
        Matroid {
            n,
            circuits: k_subsets(Subset::full(n), r + 1),
        }
    }

    pub fn ground_size(&self) -> u32 {
        self.n
    }

    pub fn ground(&self) -> GroundSet {
        GroundSet::new_extended(self.n).expect("stored ground size is valid")
    }

    pub fn circuits(&self) -> &[Subset] {
        &self.circuits
    }

    pub fn is_dependent(&self, set: Subset) -> bool {
        self.circuits.iter().any(|c| c.is_subset_of(&set))
    }

    pub fn is_independent(&self, set: Subset) -> bool {
        !self.is_dependent(set)
    }

    /// Rank of a subset: size of a maximal independent subset of `set`.
    pub fn rank(&self, set: Subset) -> u32 {
        let mut indep = Subset::empty();
        for x in set.iter() {
            if !self.is_dependent(indep.with(x)) {
                indep.insert(x);
            }
        }
        indep.len()
    }

    pub fn rank_full(&self) -> u32 {
        self.rank(Subset::full(self.n))
    }

    /// Closure: `set` together with every element spanned by it.
    pub fn closure(&self, set: Subset) -> Subset {
        let r = self.rank(set);
        let mut cl = set;
        for x in Subset::full(self.n).minus(set).iter() {
            if self.rank(set.with(x)) == r {
                cl.insert(x);
            }
        }
        cl
    }

    pub fn is_flat(&self, set: Subset) -> bool {
        self.closure(set) == set
    }

    pub fn loops(&self) -> Subset {
        let mut l = Subset::empty();
        for c in &self.circuits {
            if c.len() == 1 {
                l = l.union(*c);
            } else {
                break; // canonical order puts singletons first
            }
        }
        l
    }

    /// Dependency order: `self <= other` iff every dependent set of `self`
    /// is dependent in `other`, checked circuit-by-circuit.
    pub fn dependency_leq(&self, other: &Matroid) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::GroundMismatch(self.n, other.n));
        }
        Ok(self.circuits.iter().all(|c| other.is_dependent(*c)))
    }

    /// All flats of each rank, level by level from `closure(∅)` upward.
    pub fn flats_all(&self) -> Vec<Flat> {
        let bottom = self.closure(Subset::empty());
        let mut flats = vec![Flat {
            members: bottom,
            rank: 0,
        }];
        let full = Subset::full(self.n);
        let top_rank = self.rank_full();
        let mut level: Vec<Subset> = vec![bottom];
        for r in 1..=top_rank {
            let mut next: HashSet<Subset> = HashSet::new();
            for f in &level {
                for x in full.minus(*f).iter() {
                    next.insert(self.closure(f.with(x)));
                }
            }
            let mut next: Vec<Subset> = next.into_iter().collect();
            next.sort_by(|a, b| a.canonical_cmp(b));
            for &m in &next {
                flats.push(Flat { members: m, rank: r });
            }
            level = next;
        }
        flats
    }

    /// All flats of rank exactly `r`.
    pub fn flats_of_rank(&self, r: u32) -> Vec<Flat> {
        self.flats_all().into_iter().filter(|f| f.rank == r).collect()
    }

    /// Parallel classes of the non-loop elements (rank-1 flats minus loops).
    pub fn parallel_classes(&self) -> Vec<Subset> {
        let loops = self.loops();
        let nonloops = Subset::full(self.n).minus(loops);
        let mut seen = Subset::empty();
        let mut classes = Vec::new();
        for x in nonloops.iter() {
            if seen.contains(x) {
                continue;
            }
            let cls = self.closure(Subset::singleton(x)).minus(loops);
            seen = seen.union(cls);
            classes.push(cls);
        }
        classes
    }

    /// Delete loops and collapse parallel classes to their smallest member.
    pub fn simplify(&self) -> Simplification {
        let loops = self.loops();
        let classes = self.parallel_classes();
        let mut class_of = vec![SimplifyClass::Loop; self.n as usize];
        let mut reps = Vec::with_capacity(classes.len());
        for (i, cls) in classes.iter().enumerate() {
            reps.push(cls.min_label().expect("parallel class is nonempty"));
            for x in cls.iter() {
                class_of[(x - 1) as usize] = SimplifyClass::Class(i as u32);
            }
        }
        for x in loops.iter() {
            class_of[(x - 1) as usize] = SimplifyClass::Loop;
        }
        let matroid = self.restrict(Subset::from_labels(&reps));
        Simplification {
            matroid,
            class_of,
            class_members: classes,
        }
    }

    /// Restriction to `set`, relabeled order-preservingly onto `1..=|set|`.
    pub fn restrict(&self, set: Subset) -> Matroid {
        let labels = set.labels();
        let mut new_label = HashMap::with_capacity(labels.len());
        for (i, &l) in labels.iter().enumerate() {
            new_label.insert(l, (i + 1) as u32);
        }
        let circuits = self
            .circuits
            .iter()
            .filter(|c| c.is_subset_of(&set))
            .map(|c| {
                let relabeled: Vec<u32> = c.iter().map(|x| new_label[&x]).collect();
                Subset::from_labels(&relabeled)
            })
            .collect();
        Matroid {
            n: labels.len() as u32,
            circuits: canonicalize_family(circuits),
        }
    }

    /// Deletion without relabeling: circuits inside `full \ removed`, ground kept.
    pub fn delete_keep_labels(&self, removed: Subset) -> Matroid {
        let keep = Subset::full(self.n).minus(removed);
        Matroid {
            n: self.n,
            circuits: self
                .circuits
                .iter()
                .filter(|c| c.is_subset_of(&keep))
                .copied()
                .collect(),
        }
    }

    /// Add element `n+1` as a coloop or freely inside a flat.
    ///
    /// The free extension is the principal extension on the flat: the flats
    /// of the result fall into the three classes of the free-addition
    /// definition, and the circuits are recomputed from the extended rank
    /// function `r'(X ∪ e) = min(r(X) + 1, r(X ∪ F))`.
    pub fn extend(&self, mode: Extension) -> Result<Matroid> {
        let new_elt = self.n + 1;
        if new_elt > crate::subset::MAX_GROUND {
            return Err(Error::GroundSetSize(new_elt, crate::subset::MAX_GROUND));
        }
        match mode {
            Extension::Coloop => Ok(Matroid {
                n: new_elt,
                circuits: self.circuits.clone(),
            }),
            Extension::FreeToFlat(flat) => {
                if !self.is_flat(flat) {
                    return Err(Error::NotAFlat(flat.labels()));
                }
                let rank_flat = self.rank(flat);
                let rank = |set: Subset| -> u32 {
                    if set.contains(new_elt) {
                        let x = set.without(new_elt);
                        let ra = self.rank(x) + 1;
                        let rb = self.rank(x.union(flat));
                        ra.min(rb)
                    } else {
                        self.rank(set)
                    }
                };
                // Circuits of the extension: old circuits plus minimal
                // dependent sets through the new element. Sets through e of
                // size up to rank(F)+1 can be new circuits.
                let mut circuits = self.circuits.clone();
                let old_full = Subset::full(self.n);
                for size in 1..=(rank_flat + 1) {
                    for base in k_subsets(old_full, size - 1) {
                        let cand = base.with(new_elt);
                        if rank(cand) >= size {
                            continue; // independent
                        }
                        // minimal iff every proper subset independent
                        if self.is_dependent(base) {
                            continue;
                        }
                        let mut minimal = true;
                        for x in base.iter() {
                            let sub = cand.without(x);
                            if rank(sub) < sub.len() {
                                minimal = false;
                                break;
                            }
                        }
                        if minimal {
                            circuits.push(cand);
                        }
                    }
                }
                Ok(Matroid {
                    n: new_elt,
                    circuits: canonicalize_family(circuits),
                })
            }
        }
    }

    /// Search for a relabeling of `[n]` carrying the circuits of `self` onto
    /// the circuits of `other`. Returns the permutation as a vector `p` with
    /// `p[i-1] = image of label i`, or `None`.
    pub fn is_isomorphic(&self, other: &Matroid) -> Option<Vec<u32>> {
        if self.n != other.n || self.circuits.len() != other.circuits.len() {
            return None;
        }
        let size_hist = |m: &Matroid| {
            let mut h = [0usize; 129];
            for c in &m.circuits {
                h[c.len() as usize] += 1;
            }
            h
        };
        if size_hist(self) != size_hist(other) {
            return None;
        }
        // Per-element invariant: how many circuits of each size contain it.
        let profile = |m: &Matroid| -> Vec<Vec<u32>> {
            let mut p = vec![vec![0u32; 6]; m.n as usize];
            for c in &m.circuits {
                let bucket = (c.len() as usize).min(5);
                for x in c.iter() {
                    p[(x - 1) as usize][bucket] += 1;
                }
            }
            p
        };
        let pa = profile(self);
        let pb = profile(other);
        {
            let mut sa = pa.clone();
            let mut sb = pb.clone();
            sa.sort();
            sb.sort();
            if sa != sb {
                return None;
            }
        }
        let target: HashSet<Subset> = other.circuits.iter().copied().collect();
        let n = self.n as usize;
        // Map elements in order of rarest profile first.
        let mut order: Vec<usize> = (0..n).collect();
        let mut freq: HashMap<&Vec<u32>, usize> = HashMap::new();
        for p in &pa {
            *freq.entry(p).or_insert(0) += 1;
        }
        order.sort_by_key(|&i| (freq[&pa[i]], i));

        let mut image = vec![0u32; n];
        let mut used = vec![false; n];

        fn consistent(
            m1: &Matroid,
            target: &HashSet<Subset>,
            image: &[u32],
            mapped: Subset,
        ) -> bool {
            // every fully-mapped circuit must land on a circuit of the target
            for c in m1.circuits.iter() {
                if c.is_subset_of(&mapped) {
                    let mapped_c =
                        Subset::from_labels(&c.iter().map(|x| image[(x - 1) as usize]).collect::<Vec<_>>());
                    if !target.contains(&mapped_c) {
                        return false;
                    }
                }
            }
            true
        }

        fn rec(
            pos: usize,
            order: &[usize],
            m1: &Matroid,
            pa: &[Vec<u32>],
            pb: &[Vec<u32>],
            target: &HashSet<Subset>,
            image: &mut Vec<u32>,
            used: &mut Vec<bool>,
            mapped: Subset,
        ) -> bool {
            if pos == order.len() {
                return true;
            }
            let i = order[pos];
            for j in 0..pb.len() {
                if used[j] || pa[i] != pb[j] {
                    continue;
                }
                image[i] = (j + 1) as u32;
                used[j] = true;
                let mapped2 = mapped.with((i + 1) as u32);
                if consistent(m1, target, image, mapped2)
                    && rec(pos + 1, order, m1, pa, pb, target, image, used, mapped2)
                {
                    return true;
                }
                used[j] = false;
            }
            image[i] = 0;
            false
        }

        if rec(
            0,
            &order,
            self,
            &pa,
            &pb,
            &target,
            &mut image,
            &mut used,
            Subset::empty(),
        ) {
            Some(image)
        } else {
            None
        }
    }

    /// Apply a relabeling `p` (with `p[i-1]` the image of `i`).
    pub fn relabel(&self, perm: &[u32]) -> Matroid {
        let circuits = self
            .circuits
            .iter()
            .map(|c| {
                Subset::from_labels(&c.iter().map(|x| perm[(x - 1) as usize]).collect::<Vec<_>>())
            })
            .collect();
        Matroid {
            n: self.n,
            circuits: canonicalize_family(circuits),
        }
    }
}
