//! Independent brute-force ground truth.
//!
//! Two enumeration engines back the oracle. The main engine streams every
//! labeled matroid of rank at most 3 on `[n]` through a compact
//! loops/parallel-classes/lines representation; it is sound for clutters that
//! carry the implicit `(d+1)`-subset layer with `d = 3`, because every
//! dependent matroid then has rank at most 3. The slow reference engine
//! enumerates circuit antichains of all ranks directly (tiny ground sets
//! only) and double-checks the compact engine.

use std::collections::HashMap;
use std::io::{Read, Write};

use crate::clutter::Clutter;
use crate::error::{Error, Result};
use crate::hypergraph::{grid_coordinates, GridShape};
use crate::matroid::{validate_circuits, Matroid};
use crate::subset::{k_subsets, GroundSet, Subset};

/// Compact form of a rank-≤3 matroid: loops, parallel classes of the
/// non-loops, and lines as bitmasks over class indices. A single line
/// covering every class encodes the "all points collinear" rank-2 case.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CompactRank3 {
    pub loops: Subset,
    pub classes: Vec<Subset>,
    pub lines: Vec<u32>,
}

impl CompactRank3 {
    pub fn rank(&self) -> u32 {
        let k = self.classes.len();
        match k {
            0 => 0,
            1 => 1,
            2 => 2,
            _ => {
                let full = (1u32 << k) - 1;
                if self.lines.contains(&full) {
                    2
                } else {
                    3
                }
            }
        }
    }

    fn class_of(&self, n: u32) -> Vec<u8> {
        let mut map = vec![u8::MAX; n as usize];
        for (i, cls) in self.classes.iter().enumerate() {
            for x in cls.iter() {
                map[(x - 1) as usize] = i as u8;
            }
        }
        map
    }

    /// Per-class bitmask of the lines through it.
    fn lines_of_class(&self) -> Vec<u64> {
        let mut out = vec![0u64; self.classes.len()];
        for (li, line) in self.lines.iter().enumerate() {
            let mut m = *line;
            while m != 0 {
                let c = m.trailing_zeros() as usize;
                m &= m - 1;
                out[c] |= 1u64 << li;
            }
        }
        out
    }

    /// Is `set` dependent? (Any 4-set is: the rank is at most 3.)
    fn is_dependent(&self, set: Subset, class_of: &[u8], lines_of: &[u64]) -> bool {
        if set.intersects(&self.loops) {
            return true;
        }
        if set.len() >= 4 {
            return true;
        }
        let mut ids = [0u8; 4];
        let mut cnt = 0;
        for x in set.iter() {
            let id = class_of[(x - 1) as usize];
            for &prev in &ids[..cnt] {
                if prev == id {
                    return true; // parallel pair
                }
            }
            ids[cnt] = id;
            cnt += 1;
        }
        if cnt == 3 {
            let common =
                lines_of[ids[0] as usize] & lines_of[ids[1] as usize] & lines_of[ids[2] as usize];
            return common != 0;
        }
        false
    }

    /// Materialize the circuit list.
    pub fn to_matroid(&self, n: u32) -> Matroid {
        let mut circuits: Vec<Subset> = self.loops.iter().map(Subset::singleton).collect();
        for cls in &self.classes {
            circuits.extend(k_subsets(*cls, 2));
        }
        let k = self.classes.len();
        let mut collinear = vec![false; k * k * k];
        for &line in &self.lines {
            let members: Vec<usize> = (0..k).filter(|i| line >> i & 1 == 1).collect();
            for a in 0..members.len() {
                for b in (a + 1)..members.len() {
                    for c in (b + 1)..members.len() {
                        let (x, y, z) = (members[a], members[b], members[c]);
                        collinear[(x * k + y) * k + z] = true;
                    }
                }
            }
        }
        let is_collinear = |mut t: [usize; 3]| -> bool {
            t.sort_unstable();
            collinear[(t[0] * k + t[1]) * k + t[2]]
        };
        for a in 0..k {
            for b in (a + 1)..k {
                for c in (b + 1)..k {
                    if is_collinear([a, b, c]) {
                        for x in self.classes[a].iter() {
                            for y in self.classes[b].iter() {
                                for z in self.classes[c].iter() {
                                    circuits.push(Subset::from_labels(&[x, y, z]));
                                }
                            }
                        }
                    }
                }
            }
        }
        if self.rank() == 3 {
            // 4-circuits: transversal 4-sets with no collinear triple
            for a in 0..k {
                for b in (a + 1)..k {
                    for c in (b + 1)..k {
                        for d in (c + 1)..k {
                            if is_collinear([a, b, c])
                                || is_collinear([a, b, d])
                                || is_collinear([a, c, d])
                                || is_collinear([b, c, d])
                            {
                                continue;
                            }
                            for x in self.classes[a].iter() {
                                for y in self.classes[b].iter() {
                                    for z in self.classes[c].iter() {
                                        for w in self.classes[d].iter() {
                                            circuits.push(Subset::from_labels(&[x, y, z, w]));
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        Matroid::from_certified_circuits(n, circuits)
    }

    /// Dependency order on compact matroids: every circuit of `self`
    /// dependent in `other`. Circuits of size 4 are dependent in any rank-≤3
    /// matroid, so only loops, class pairs and line triples need checking.
    pub fn dep_leq(
        &self,
        other: &CompactRank3,
        other_class_of: &[u8],
        other_lines_of: &[u64],
    ) -> bool {
        if !self.loops.is_subset_of(&other.loops) {
            return false;
        }
        // parallel pairs: each class minus other's loops must sit in one class
        let mut image = vec![u8::MAX; self.classes.len()];
        for (i, cls) in self.classes.iter().enumerate() {
            let y = cls.minus(other.loops);
            let mut id = u8::MAX;
            for x in y.iter() {
                let cx = other_class_of[(x - 1) as usize];
                if id == u8::MAX {
                    id = cx;
                } else if id != cx {
                    return false;
                }
            }
            image[i] = id; // MAX when the class is fully loops of `other`
        }
        // line triples: surviving class images must have at most 2 distinct
        // values or lie on one common line of `other`
        for &line in &self.lines {
            let mut distinct: Vec<u8> = Vec::with_capacity(8);
            let mut m = line;
            while m != 0 {
                let c = m.trailing_zeros() as usize;
                m &= m - 1;
                let id = image[c];
                if id != u8::MAX && !distinct.contains(&id) {
                    distinct.push(id);
                }
            }
            if distinct.len() >= 3 {
                let mut common = u64::MAX;
                for &id in &distinct {
                    common &= other_lines_of[id as usize];
                }
                if common == 0 {
                    return false;
                }
            }
        }
        true
    }
}

/// Default cap for the rank-≤3 enumeration.
pub const RANK3_CAP: u32 = 9;

/// Default cap for the all-rank antichain enumeration.
pub const ALL_RANK_CAP: u32 = 6;

/// Stream every labeled rank-≤3 matroid on `[n]` in compact form.
pub fn for_each_rank_le3(n: u32, mut f: impl FnMut(&CompactRank3)) -> Result<()> {
    if n > RANK3_CAP {
        return Err(Error::CapExceeded(format!(
            "rank-3 catalog supports n <= {RANK3_CAP}, got {n}"
        )));
    }
    let full = Subset::full(n);
    let mut loops_iter = 0u128;
    loop {
        let loops = Subset(loops_iter & full.0);
        let nonloops = full.minus(loops);
        let elems = nonloops.labels();
        partition_rec(&elems, 0, &mut Vec::new(), &mut |classes: &[Subset]| {
            emit_families(loops, classes, &mut f);
        });
        loops_iter = (loops.0.wrapping_sub(full.0)) & full.0;
        if loops_iter == 0 {
            break;
        }
    }
    Ok(())
}

fn partition_rec(
    elems: &[u32],
    idx: usize,
    classes: &mut Vec<Subset>,
    f: &mut impl FnMut(&[Subset]),
) {
    if idx == elems.len() {
        f(classes);
        return;
    }
    let x = elems[idx];
    for i in 0..classes.len() {
        classes[i].insert(x);
        partition_rec(elems, idx + 1, classes, f);
        classes[i].remove(x);
    }
    classes.push(Subset::singleton(x));
    partition_rec(elems, idx + 1, classes, f);
    classes.pop();
}

fn emit_families(loops: Subset, classes: &[Subset], f: &mut impl FnMut(&CompactRank3)) {
    let k = classes.len();
    let base = CompactRank3 {
        loops,
        classes: classes.to_vec(),
        lines: Vec::new(),
    };
    if k <= 2 {
        // ranks 0, 1 and the free rank-2 pair
        f(&base);
        return;
    }
    // rank 2: everything on one line
    let full = (1u32 << k) - 1;
    f(&CompactRank3 {
        loops,
        classes: classes.to_vec(),
        lines: vec![full],
    });
    // rank 3: families of proper lines, pairwise sharing at most one class
    let mut candidates: Vec<u32> = Vec::new();
    for m in 1..full {
        if m.count_ones() >= 3 {
            candidates.push(m);
        }
    }
    let mut chosen: Vec<u32> = Vec::new();
    line_family_rec(&candidates, 0, &mut chosen, &mut |lines: &[u32]| {
        f(&CompactRank3 {
            loops,
            classes: classes.to_vec(),
            lines: lines.to_vec(),
        });
    });
}

fn line_family_rec(
    candidates: &[u32],
    start: usize,
    chosen: &mut Vec<u32>,
    f: &mut impl FnMut(&[u32]),
) {
    f(chosen);
    for i in start..candidates.len() {
        let cand = candidates[i];
        if chosen.iter().all(|&l| (l & cand).count_ones() <= 1) {
            chosen.push(cand);
            line_family_rec(candidates, i + 1, chosen, f);
            chosen.pop();
        }
    }
}

/// A materialized catalog of all rank-≤3 matroids on `[n]`.
pub struct MatroidCatalog {
    pub n: u32,
    pub compacts: Vec<CompactRank3>,
}

impl MatroidCatalog {
    pub fn build(n: u32) -> Result<Self> {
        let mut compacts = Vec::new();
        for_each_rank_le3(n, |c| compacts.push(c.clone()))?;
        Ok(MatroidCatalog { n, compacts })
    }

    pub fn len(&self) -> usize {
        self.compacts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.compacts.is_empty()
    }

    pub fn matroids(&self) -> impl Iterator<Item = Matroid> + '_ {
        self.compacts.iter().map(move |c| c.to_matroid(self.n))
    }
}

/// Every matroid on `[n]` (all ranks), by direct enumeration of circuit
/// antichains with the elimination axiom. Slow; capped at tiny `n`.
pub fn enumerate_all_matroids(n: u32) -> Result<Vec<Matroid>> {
    if n > ALL_RANK_CAP {
        return Err(Error::CapExceeded(format!(
            "all-rank enumeration supports n <= {ALL_RANK_CAP}, got {n}"
        )));
    }
    let ground = GroundSet::new(n)?;
    let total = 1u128 << n;
    let mut out = Vec::new();

    fn satisfied(family: &[Subset], target: Subset) -> bool {
        family.iter().any(|c| c.is_subset_of(&target))
    }

    fn rec(
        next: u128,
        total: u128,
        family: &mut Vec<Subset>,
        obligations: &mut Vec<Subset>,
        out: &mut Vec<Matroid>,
        ground: GroundSet,
    ) {
        let all_satisfied = obligations.iter().all(|&t| satisfied(family, t));
        if all_satisfied {
            out.push(Matroid::from_certified_circuits(
                ground.size(),
                family.clone(),
            ));
        } else {
            // an unsatisfied obligation must still be repairable: some future
            // candidate (numerically >= next) has to fit inside its target
            let repairable = obligations
                .iter()
                .all(|&t| satisfied(family, t) || t.0 >= next);
            if !repairable {
                return;
            }
        }
        for cand in next..total {
            let c = Subset(cand);
            if family
                .iter()
                .any(|m| m.is_subset_of(&c) || c.is_subset_of(m))
            {
                continue;
            }
            let added: Vec<Subset> = family
                .iter()
                .flat_map(|m| {
                    let common = m.inter(c);
                    let union = m.union(c);
                    common.iter().map(move |x| union.without(x))
                })
                .collect();
            family.push(c);
            let before = obligations.len();
            obligations.extend(added);
            rec(cand + 1, total, family, obligations, out, ground);
            obligations.truncate(before);
            family.pop();
        }
    }
    rec(1, total, &mut Vec::new(), &mut Vec::new(), &mut out, ground);
    debug_assert!(out.iter().all(|m| validate_circuits(m.circuits(), ground)));
    Ok(out)
}

/// The dependency-order-minimal matroids whose dependent sets contain the
/// clutter.
///
/// Clutters carrying the implicit `(d+1)`-layer with `d = 3` stream the
/// rank-≤3 catalog (sound: the padded layer forces rank ≤ 3 on every
/// dependent matroid). Raw clutters without that layer can have minimal
/// dependent matroids of any rank, so they go through the all-rank engine
/// and are capped at small `n`.
pub fn brute_minimal_dependent(delta: &Clutter) -> Result<Vec<Matroid>> {
    let n = delta.ground_size();
    if delta.has_implicit_top() {
        if delta.ambient_d() != 3 {
            return Err(Error::CapExceeded(format!(
                "the rank-3 oracle needs ambient d = 3, got {}",
                delta.ambient_d()
            )));
        }
        let edges = delta.explicit_edges().to_vec();
        let mut antichain: Vec<(CompactRank3, Vec<u8>, Vec<u64>)> = Vec::new();
        for_each_rank_le3(n, |cand| {
            let class_of = cand.class_of(n);
            let lines_of = cand.lines_of_class();
            if !edges
                .iter()
                .all(|e| cand.is_dependent(*e, &class_of, &lines_of))
            {
                return;
            }
            if antichain
                .iter()
                .any(|(kept, _, _)| kept.dep_leq(cand, &class_of, &lines_of))
            {
                return;
            }
            antichain.retain(|(kept, co, lo)| !cand.dep_leq(kept, co, lo));
            antichain.push((cand.clone(), class_of, lines_of));
        })?;
        let mut out: Vec<Matroid> = antichain
            .into_iter()
            .map(|(c, _, _)| c.to_matroid(n))
            .collect();
        out.sort_by(canonical_matroid_cmp);
        Ok(out)
    } else {
        let edges = delta.edges();
        let all = enumerate_all_matroids(n)?;
        let mut kept: Vec<Matroid> = Vec::new();
        for m in all {
            if !edges.iter().all(|e| m.is_dependent(*e)) {
                continue;
            }
            if kept.iter().any(|k| k.dependency_leq(&m).unwrap_or(false)) {
                continue;
            }
            kept.retain(|k| !m.dependency_leq(k).unwrap_or(false));
            kept.push(m);
        }
        kept.sort_by(canonical_matroid_cmp);
        Ok(kept)
    }
}

pub fn canonical_matroid_cmp(a: &Matroid, b: &Matroid) -> std::cmp::Ordering {
    a.circuits().len().cmp(&b.circuits().len()).then_with(|| {
        for (x, y) in a.circuits().iter().zip(b.circuits()) {
            let ord = x.canonical_cmp(y);
            if ord != std::cmp::Ordering::Equal {
                return ord;
            }
        }
        std::cmp::Ordering::Equal
    })
}

// ---------------------------------------------------------------------------
// Grid type counting (s = 2, t = 3)
// ---------------------------------------------------------------------------

/// Combinatorial-type counts for `Δ^{2,3}`, under the documented readings of
/// "type". The first three count over the minimal dependent matroids; the
/// last counts the line/junction patterns achievable among all dependent
/// matroids, which is the table's literal caption.
#[derive(Debug, Clone)]
pub struct GridTypeCount {
    pub shape: GridShape,
    pub minimal_matroids: usize,
    /// iso-classes of the full simplifications of the minimal matroids
    pub simplification_types: usize,
    /// iso-classes after dropping points on no line
    pub covered_types: usize,
    /// iso-classes of the line/junction incidence pattern (minimal matroids)
    pub arrangement_types: usize,
    /// line/junction patterns over all dependent matroids
    pub dependent_arrangement_types: usize,
}

/// Candidate minimal matroid for `Δ^{2,3}` with a prescribed loop set.
///
/// Any rank-≤3 matroid dependent for the padded `Δ^{2,3}` forces this
/// structure: each column minus the loops is one parallel class (the `s = 2`
/// column pairs are dependent), and the distinct classes met by a row minus
/// the loops lie on one common line whenever there are at least three of them
/// (the `t = 3` row triples are dependent). Keeping exactly the forced
/// structure gives a matroid dependency-below the original, so every minimal
/// dependent matroid equals `candidate(S)` for its own loop set `S`.
fn grid_candidate(shape: GridShape, loops: Subset) -> CompactRank3 {
    let coords = grid_coordinates(shape);
    let mut classes: Vec<Subset> = Vec::new();
    let mut class_of = vec![u8::MAX; shape.cells() as usize];
    for col in &coords.cols {
        let y = col.minus(loops);
        if !y.is_empty() {
            let id = classes.len() as u8;
            for x in y.iter() {
                class_of[(x - 1) as usize] = id;
            }
            classes.push(y);
        }
    }
    let mut lines: Vec<u32> = Vec::new();
    for row in &coords.rows {
        let w = row.minus(loops);
        let mut mask = 0u32;
        for x in w.iter() {
            mask |= 1 << class_of[(x - 1) as usize];
        }
        if mask.count_ones() >= 3 {
            lines.push(mask);
        }
    }
    // lines sharing two classes span the same rank-2 flat: merge to fixpoint
    loop {
        let mut merged = false;
        'outer: for i in 0..lines.len() {
            for j in (i + 1)..lines.len() {
                if (lines[i] & lines[j]).count_ones() >= 2 {
                    lines[i] |= lines[j];
                    lines.remove(j);
                    merged = true;
                    break 'outer;
                }
            }
        }
        if !merged {
            break;
        }
    }
    lines.sort_unstable();
    lines.dedup();
    CompactRank3 {
        loops,
        classes,
        lines,
    }
}

/// Count combinatorial types of simplifications over the minimally dependent
/// matroids for `Δ^{2,3}` (padded, d = 3) by exhausting loop-set candidates.
/// Only `s = 2, t = 3` is supported; `2^{kl}` loop sets are enumerated, so
/// `kl` is capped at 20.
pub fn count_grid_types(shape: GridShape) -> Result<GridTypeCount> {
    if shape.s != 2 || shape.t != 3 {
        return Err(Error::ParameterRange(format!(
            "grid type counting is implemented for s=2, t=3, got s={}, t={}",
            shape.s, shape.t
        )));
    }
    let cells = shape.cells();
    if cells > 20 {
        return Err(Error::CapExceeded(format!(
            "loop-set enumeration supports kl <= 20, got {cells}"
        )));
    }
    let full = Subset::full(cells);
    let mut candidates: HashMap<u128, CompactRank3> = HashMap::new();
    let mut mask = 0u128;
    loop {
        candidates.insert(mask, grid_candidate(shape, Subset(mask)));
        mask = mask.wrapping_sub(full.0) & full.0;
        if mask == 0 {
            break;
        }
    }
    // minimality: a dominating candidate must have a loop subset
    let mut minimal: Vec<&CompactRank3> = Vec::new();
    'cand: for (mask, cand) in &candidates {
        let class_of = cand.class_of(cells);
        let lines_of = cand.lines_of_class();
        let mut sub = mask.wrapping_sub(1) & mask;
        while sub != *mask {
            let other = &candidates[&sub];
            if other.dep_leq(cand, &class_of, &lines_of) {
                continue 'cand;
            }
            if sub == 0 {
                break;
            }
            sub = sub.wrapping_sub(1) & mask;
        }
        minimal.push(cand);
    }
    let simplifications: Vec<Matroid> = minimal
        .iter()
        .map(|c| c.to_matroid(cells).simplify().matroid)
        .collect();
    let simplification_types = iso_class_count(&simplifications);

    let covered: Vec<Matroid> = simplifications
        .iter()
        .map(|s| {
            let covered_points: Vec<u32> = (1..=s.ground_size())
                .filter(|&p| s.circuits().iter().any(|c| c.len() == 3 && c.contains(p)))
                .collect();
            s.restrict(Subset::from_labels(&covered_points))
        })
        .collect();
    let covered_types = iso_class_count(&covered);

    let arrangement_types = {
        let mut keys: Vec<String> = simplifications.iter().map(arrangement_key).collect();
        keys.sort();
        keys.dedup();
        keys.len()
    };

    // Every dependent matroid reduces onto a candidate with the same line
    // pattern, and candidates are dependent, so the candidate patterns are
    // exactly the patterns appearing among dependent matroids.
    let dependent_arrangement_types = {
        let mut keys: Vec<String> = candidates
            .values()
            .map(|c| arrangement_key_compact(&c.lines))
            .collect();
        keys.sort();
        keys.dedup();
        keys.len()
    };

    Ok(GridTypeCount {
        shape,
        minimal_matroids: minimal.len(),
        simplification_types,
        covered_types,
        arrangement_types,
        dependent_arrangement_types,
    })
}

/// Canonical line/junction pattern straight from a compact line family.
fn arrangement_key_compact(lines: &[u32]) -> String {
    let mut seen_twice = 0u32;
    let mut seen_once = 0u32;
    for &l in lines {
        seen_twice |= seen_once & l;
        seen_once |= l;
    }
    let junctions: Vec<u32> = (0..32).filter(|i| seen_twice >> i & 1 == 1).collect();
    let line_sets: Vec<Vec<usize>> = lines
        .iter()
        .map(|l| {
            junctions
                .iter()
                .enumerate()
                .filter(|(_, &c)| l >> c & 1 == 1)
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    let j = junctions.len();
    let mut perm: Vec<usize> = (0..j).collect();
    let mut best: Option<Vec<Vec<usize>>> = None;
    permute_all(&mut perm, &mut |p| {
        let mut mapped: Vec<Vec<usize>> = line_sets
            .iter()
            .map(|ls| {
                let mut v: Vec<usize> = ls.iter().map(|&i| p[i]).collect();
                v.sort_unstable();
                v
            })
            .collect();
        mapped.sort();
        if best.as_ref().map(|b| &mapped < b).unwrap_or(true) {
            best = Some(mapped);
        }
    });
    format!("{}|{:?}", lines.len(), best.unwrap_or_default())
}

fn iso_class_count(matroids: &[Matroid]) -> usize {
    let mut reps: Vec<&Matroid> = Vec::new();
    for m in matroids {
        if !reps.iter().any(|r| r.is_isomorphic(m).is_some()) {
            reps.push(m);
        }
    }
    reps.len()
}

/// Canonical key of the line/junction incidence pattern of a simple matroid:
/// free points are dropped, line sizes are forgotten, and only which lines
/// meet in which shared points survives.
fn arrangement_key(simple: &Matroid) -> String {
    let config = match crate::config::config_from_matroid(simple) {
        Ok(c) => c,
        Err(_) => return format!("rank>3:{}", simple.circuits().len()),
    };
    let lines = config.lines();
    let junctions: Vec<u32> = (1..=config.point_count())
        .filter(|&p| config.line_degree(p) >= 2)
        .collect();
    let line_sets: Vec<Vec<usize>> = lines
        .iter()
        .map(|l| {
            junctions
                .iter()
                .enumerate()
                .filter(|(_, &p)| l.contains(p))
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    // canonical labeling of the junctions by brute force (their count is tiny)
    let j = junctions.len();
    let mut perm: Vec<usize> = (0..j).collect();
    let mut best: Option<Vec<Vec<usize>>> = None;
    permute_all(&mut perm, &mut |p| {
        let mut mapped: Vec<Vec<usize>> = line_sets
            .iter()
            .map(|ls| {
                let mut v: Vec<usize> = ls.iter().map(|&i| p[i]).collect();
                v.sort_unstable();
                v
            })
            .collect();
        mapped.sort();
        if best.as_ref().map(|b| &mapped < b).unwrap_or(true) {
            best = Some(mapped);
        }
    });
    format!("{}|{:?}", lines.len(), best.unwrap_or_default())
}

fn permute_all(arr: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    let n = arr.len();
    if n == 0 {
        f(arr);
        return;
    }
    fn heap(k: usize, arr: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if k <= 1 {
            f(arr);
            return;
        }
        for i in 0..k {
            heap(k - 1, arr, f);
            if k % 2 == 0 {
                arr.swap(i, k - 1);
            } else {
                arr.swap(0, k - 1);
            }
        }
    }
    heap(n, arr, f);
}

// ---------------------------------------------------------------------------
// Catalog cache files
// ---------------------------------------------------------------------------

const CACHE_MAGIC: u32 = 0x4d54_524c; // "MTRL"
const CACHE_VERSION: u32 = 1;

/// Write a catalog as length-prefixed canonical circuit masks.
pub fn write_catalog_cache(catalog: &MatroidCatalog, w: &mut impl Write) -> std::io::Result<()> {
    w.write_all(&CACHE_MAGIC.to_le_bytes())?;
    w.write_all(&CACHE_VERSION.to_le_bytes())?;
    w.write_all(&catalog.n.to_le_bytes())?;
    w.write_all(&(catalog.compacts.len() as u64).to_le_bytes())?;
    for m in catalog.matroids() {
        w.write_all(&(m.circuits().len() as u32).to_le_bytes())?;
        for c in m.circuits() {
            w.write_all(&c.0.to_le_bytes())?;
        }
    }
    Ok(())
}

/// Read back a cache file as explicit matroids.
pub fn read_catalog_cache(r: &mut impl Read) -> std::io::Result<(u32, Vec<Matroid>)> {
    let mut buf4 = [0u8; 4];
    let mut buf8 = [0u8; 8];
    let mut buf16 = [0u8; 16];
    r.read_exact(&mut buf4)?;
    if u32::from_le_bytes(buf4) != CACHE_MAGIC {
        return Err(std::io::Error::new(
            std::io::ErrorKind::InvalidData,
            "bad catalog magic",
        ));
    }
    r.read_exact(&mut buf4)?;
    if u32::from_le_bytes(buf4) != CACHE_VERSION {
        return Err(std::io::Error::new(
            std::io::ErrorKind::InvalidData,
            "unsupported catalog version",
        ));
    }
    r.read_exact(&mut buf4)?;
    let n = u32::from_le_bytes(buf4);
    r.read_exact(&mut buf8)?;
    let count = u64::from_le_bytes(buf8);
    let mut out = Vec::with_capacity(count as usize);
    for _ in 0..count {
        r.read_exact(&mut buf4)?;
        let clen = u32::from_le_bytes(buf4);
        let mut circuits = Vec::with_capacity(clen as usize);
        for _ in 0..clen {
            r.read_exact(&mut buf16)?;
            circuits.push(Subset(u128::from_le_bytes(buf16)));
        }
        out.push(Matroid::from_certified_circuits(n, circuits));
    }
    Ok((n, out))
}
