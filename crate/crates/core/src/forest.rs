//! Prime collections and the consecutive-forest decomposition.
//!
//! A collection pairs a set of singleton vertices with a set of 2-subsets of
//! vertices. Valid collections yield a matroid `M_S` whose circuits are the
//! singletons, the pairs inside clouds, the unblocked 3-subsets and the
//! leftover 4-subsets. Prime collections index the irreducible components of
//! the consecutive-forest hypergraph variety.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::hypergraph::Forest;
use crate::matroid::Matroid;
use crate::subset::{k_subsets, Subset};

/// A set of singletons plus a set of 2-subsets of the vertices of a forest.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Collection {
    pub singletons: Subset,
    pub pairs: Vec<(u32, u32)>,
}

impl Collection {
    pub fn new(singletons: Subset, mut pairs: Vec<(u32, u32)>) -> Self {
        for p in pairs.iter_mut() {
            *p = (p.0.min(p.1), p.0.max(p.1));
        }
        pairs.sort_unstable();
        pairs.dedup();
        Collection { singletons, pairs }
    }

    pub fn empty() -> Self {
        Collection {
            singletons: Subset::empty(),
            pairs: Vec::new(),
        }
    }

    pub fn pair_support(&self) -> Subset {
        let mut s = Subset::empty();
        for &(a, b) in &self.pairs {
            s.insert(a);
            s.insert(b);
        }
        s
    }
}

/// Outcome of the ordered prime-singleton test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrimeTest {
    Pass,
    /// Failed at `step` (0-based index into the ordering) by `rule` (1 or 2).
    Fail { step: usize, rule: u8 },
}

/// The sequential test: delete the vertices one by one, failing when the
/// current vertex is a leaf or isolated (rule 1) or is adjacent to a leaf
/// while having degree two (rule 2).
pub fn prime_singleton_test(g: &Forest, ordered: &[u32]) -> Result<PrimeTest> {
    let mut seen = Subset::empty();
    for &v in ordered {
        if v == 0 || v > g.vertex_count() {
            return Err(Error::ElementOutOfRange(v, g.vertex_count()));
        }
        if seen.contains(v) {
            return Err(Error::ParameterRange(format!("repeated vertex {v}")));
        }
        seen.insert(v);
    }
    let mut h = g.clone();
    let mut deleted = Subset::empty();
    for (step, &v) in ordered.iter().enumerate() {
        let deg = h.degree(v);
        if deg <= 1 {
            return Ok(PrimeTest::Fail { step, rule: 1 });
        }
        let adjacent_to_leaf = h.neighbors(v).iter().any(|&w| h.degree(w) == 1);
        if adjacent_to_leaf && deg == 2 {
            return Ok(PrimeTest::Fail { step, rule: 2 });
        }
        deleted.insert(v);
        h = g.delete_vertices(deleted);
    }
    Ok(PrimeTest::Pass)
}

/// Memoized oracle for prime collections of singletons over one forest.
pub struct PrimeSingletonOracle<'a> {
    forest: &'a Forest,
    memo: HashMap<Subset, bool>,
}

impl<'a> PrimeSingletonOracle<'a> {
    pub fn new(forest: &'a Forest) -> Self {
        PrimeSingletonOracle {
            forest,
            memo: HashMap::new(),
        }
    }

    /// The inductive definition: `S` is prime iff for every `s` in `S`,
    /// `S \ {s}` is prime and `s` satisfies the two rules in the forest with
    /// the other members of `S` deleted.
    pub fn is_prime(&mut self, set: Subset) -> bool {
        if set.is_empty() {
            return true;
        }
        if let Some(&v) = self.memo.get(&set) {
            return v;
        }
        let mut ok = true;
        for s in set.iter() {
            let rest = set.without(s);
            if !self.is_prime(rest) {
                ok = false;
                break;
            }
            let h = self.forest.delete_vertices(rest);
            let deg = h.degree(s);
            if deg <= 1 {
                ok = false;
                break;
            }
            if deg == 2 && h.neighbors(s).iter().any(|&w| h.degree(w) == 1) {
                ok = false;
                break;
            }
        }
        self.memo.insert(set, ok);
        ok
    }
}

pub fn is_prime_singletons(g: &Forest, set: Subset) -> bool {
    PrimeSingletonOracle::new(g).is_prime(set)
}

/// Slow reference path: `S` is prime iff every ordering passes the
/// sequential test. Kept independent of the memoized definition.
pub fn is_prime_singletons_all_orderings(g: &Forest, set: Subset) -> bool {
    let labels = set.labels();
    let mut perm = labels.clone();
    fn heap_permute(k: usize, arr: &mut Vec<u32>, g: &Forest, ok: &mut bool) {
        if !*ok {
            return;
        }
        if k <= 1 {
            if !matches!(prime_singleton_test(g, arr), Ok(PrimeTest::Pass)) {
                *ok = false;
            }
            return;
        }
        for i in 0..k {
            heap_permute(k - 1, arr, g, ok);
            if k % 2 == 0 {
                arr.swap(i, k - 1);
            } else {
                arr.swap(0, k - 1);
            }
        }
    }
    let mut ok = true;
    heap_permute(perm.len(), &mut perm, g, &mut ok);
    ok
}

/// Validity asks only that every pair avoids every singleton; pairs need not
/// be edges of the forest.
pub fn is_valid_collection(c: &Collection) -> bool {
    !c.pair_support().intersects(&c.singletons)
}

/// Prime collections additionally require: the singletons form a prime
/// collection of singletons, every pair is an edge of the forest minus the
/// singletons, and every pair-incident vertex keeps an edge outside the
/// collection.
pub fn is_prime_collection(g: &Forest, c: &Collection) -> bool {
    if !is_valid_collection(c) {
        return false;
    }
    if !is_prime_singletons(g, c.singletons) {
        return false;
    }
    let g_prime = g.delete_vertices(c.singletons);
    for &(a, b) in &c.pairs {
        if !g_prime.has_edge(a, b) {
            return false;
        }
    }
    let in_pairs = |a: u32, b: u32| c.pairs.binary_search(&(a.min(b), a.max(b))).is_ok();
    for v in c.pair_support().iter() {
        let has_outside = g_prime.neighbors(v).iter().any(|&w| !in_pairs(v, w));
        if !has_outside {
            return false;
        }
    }
    true
}

/// Connected components of the pair-graph, for a valid collection.
pub fn clouds(c: &Collection) -> Result<Vec<Subset>> {
    if !is_valid_collection(c) {
        return Err(Error::InvalidCollection(
            "a pair meets a singleton".to_string(),
        ));
    }
    let support = c.pair_support();
    let mut cloud_of: HashMap<u32, usize> = HashMap::new();
    let mut clouds: Vec<Subset> = Vec::new();
    for v in support.iter() {
        cloud_of.insert(v, usize::MAX);
    }
    for &(a, b) in &c.pairs {
        let ca = cloud_of[&a];
        let cb = cloud_of[&b];
        match (ca, cb) {
            (usize::MAX, usize::MAX) => {
                let id = clouds.len();
                clouds.push(Subset::from_labels(&[a, b]));
                cloud_of.insert(a, id);
                cloud_of.insert(b, id);
            }
            (usize::MAX, id) => {
                clouds[id].insert(a);
                cloud_of.insert(a, id);
            }
            (id, usize::MAX) => {
                clouds[id].insert(b);
                cloud_of.insert(b, id);
            }
            (ia, ib) if ia != ib => {
                let merged = clouds[ia].union(clouds[ib]);
                clouds[ia] = merged;
                let moved = clouds[ib];
                clouds[ib] = Subset::empty();
                for v in moved.iter() {
                    cloud_of.insert(v, ia);
                }
            }
            _ => {}
        }
    }
    clouds.retain(|c| !c.is_empty());
    clouds.sort_by(|a, b| a.canonical_cmp(b));
    Ok(clouds)
}

/// Blocking data reused across many queries for one collection.
pub struct BlockingContext<'a> {
    forest: &'a Forest,
    collection: &'a Collection,
    cloud_id: Vec<Option<usize>>,
}

impl<'a> BlockingContext<'a> {
    pub fn new(forest: &'a Forest, collection: &'a Collection) -> Result<Self> {
        let cl = clouds(collection)?;
        let mut cloud_id = vec![None; forest.vertex_count() as usize];
        for (i, cloud) in cl.iter().enumerate() {
            for v in cloud.iter() {
                cloud_id[(v - 1) as usize] = Some(i);
            }
        }
        Ok(BlockingContext {
            forest,
            collection,
            cloud_id,
        })
    }

    fn cloud_of(&self, v: u32) -> Option<usize> {
        self.cloud_id[(v - 1) as usize]
    }

    /// Does the unique `v`-`w` path cross a cloud or pass through an interior
    /// singleton? `None` when the endpoints are in different components.
    fn pair_blocked(&self, v: u32, w: u32) -> Option<bool> {
        let path = self.forest.path(v, w)?;
        let t = path.len();
        // interior singleton
        for &x in &path[1..t.saturating_sub(1)] {
            if self.collection.singletons.contains(x) {
                return Some(true);
            }
        }
        // crossing: some cloud has two path positions j < k with a
        // non-member strictly before j and strictly after k
        let ids: Vec<Option<usize>> = path.iter().map(|&x| self.cloud_of(x)).collect();
        let mut per_cloud: HashMap<usize, Vec<usize>> = HashMap::new();
        for (pos, id) in ids.iter().enumerate() {
            if let Some(id) = id {
                per_cloud.entry(*id).or_default().push(pos);
            }
        }
        for (id, positions) in per_cloud {
            let first_out = (0..t).find(|&p| ids[p] != Some(id));
            let last_out = (0..t).rev().find(|&p| ids[p] != Some(id));
            let (a, b) = match (first_out, last_out) {
                (Some(a), Some(b)) => (a, b),
                _ => continue, // whole path inside the cloud
            };
            let inside = positions.iter().filter(|&&p| p > a && p < b).count();
            if inside >= 2 {
                return Some(true);
            }
        }
        Some(false)
    }

    /// A set is blocked when some pair of its vertices lies in different
    /// components, or the path between some pair crosses a cloud or contains
    /// an interior singleton.
    pub fn is_blocked(&self, set: Subset) -> bool {
        let labels = set.labels();
        for i in 0..labels.len() {
            for j in (i + 1)..labels.len() {
                match self.pair_blocked(labels[i], labels[j]) {
                    None => return true,
                    Some(true) => return true,
                    Some(false) => {}
                }
            }
        }
        false
    }
}

pub fn is_blocked(g: &Forest, c: &Collection, set: Subset) -> Result<bool> {
    Ok(BlockingContext::new(g, c)?.is_blocked(set))
}

/// The matroid `M_S` of a valid collection: circuits are the singletons, the
/// 2-subsets of clouds, the unblocked 3-subsets containing none of those, and
/// the 4-subsets containing none of the above.
pub fn matroid_from_collection(g: &Forest, c: &Collection) -> Result<Matroid> {
    if !is_valid_collection(c) {
        return Err(Error::InvalidCollection(
            "a pair meets a singleton".to_string(),
        ));
    }
    let n = g.vertex_count();
    let ctx = BlockingContext::new(g, c)?;
    let mut circuits: Vec<Subset> = Vec::new();
    for s in c.singletons.iter() {
        circuits.push(Subset::singleton(s));
    }
    for cloud in clouds(c)? {
        circuits.extend(k_subsets(cloud, 2));
    }
    let contains_listed = |set: &Subset, list: &[Subset]| list.iter().any(|c| c.is_subset_of(set));
    let small: Vec<Subset> = circuits.clone();
    let mut triples = Vec::new();
    for t in k_subsets(Subset::full(n), 3) {
        if !contains_listed(&t, &small) && !ctx.is_blocked(t) {
            triples.push(t);
        }
    }
    circuits.extend(triples.iter().copied());
    for q in k_subsets(Subset::full(n), 4) {
        if !contains_listed(&q, &circuits) {
            circuits.push(q);
        }
    }
    Matroid::new(crate::subset::GroundSet::new_extended(n)?, circuits)
}

/// Every prime collection of the forest: prime singleton sets crossed with
/// the admissible pair subsets of the reduced forest's edges.
pub fn enumerate_prime_collections(g: &Forest) -> Vec<Collection> {
    let n = g.vertex_count();
    let mut oracle = PrimeSingletonOracle::new(g);

    // The prime-singleton family is subset-closed, so every member is reached
    // by inserting elements in increasing order; each set is visited once.
    let mut prime_singleton_sets: Vec<Subset> = Vec::new();
    let mut frontier = vec![Subset::empty()];
    while let Some(s) = frontier.pop() {
        prime_singleton_sets.push(s);
        let floor = s.labels().last().copied().unwrap_or(0);
        for v in (floor + 1)..=n {
            let bigger = s.with(v);
            if oracle.is_prime(bigger) {
                frontier.push(bigger);
            }
        }
    }
    debug_assert!(prime_singleton_sets
        .iter()
        .all(|s| s.iter().all(|v| prime_singleton_sets.contains(&s.without(v)))));

    let mut out = Vec::new();
    for singles in prime_singleton_sets {
        let g_prime = g.delete_vertices(singles);
        let edges: Vec<(u32, u32)> = g_prime.edges().to_vec();
        let m = edges.len();
        for mask in 0u64..(1u64 << m) {
            let chosen: Vec<(u32, u32)> = (0..m).filter(|i| mask >> i & 1 == 1).map(|i| edges[i]).collect();
            let c = Collection::new(singles, chosen);
            // outside-edge rule
            let in_pairs = |a: u32, b: u32| c.pairs.binary_search(&(a.min(b), a.max(b))).is_ok();
            let ok = c
                .pair_support()
                .iter()
                .all(|v| g_prime.neighbors(v).iter().any(|&w| !in_pairs(v, w)));
            if ok {
                out.push(c);
            }
        }
    }
    out.sort_by(|a, b| {
        a.singletons
            .canonical_cmp(&b.singletons)
            .then_with(|| a.pairs.cmp(&b.pairs))
    });
    out
}

/// One irreducible component of the forest hypergraph variety.
#[derive(Debug, Clone)]
pub struct ForestComponent {
    pub collection: Collection,
    pub matroid: Matroid,
    pub simplification: Matroid,
}

/// The full component list: one entry per prime collection. The matroids are
/// pairwise incomparable in the dependency order (asserted).
pub fn decompose_forest_variety(g: &Forest) -> Result<Vec<ForestComponent>> {
    let mut out = Vec::new();
    for c in enumerate_prime_collections(g) {
        let matroid = matroid_from_collection(g, &c)?;
        let simplification = matroid.simplify().matroid;
        out.push(ForestComponent {
            collection: c,
            matroid,
            simplification,
        });
    }
    for i in 0..out.len() {
        for j in 0..out.len() {
            if i != j && out[i].matroid.dependency_leq(&out[j].matroid)? {
                return Err(Error::VerificationFailed(format!(
                    "components for {:?} and {:?} are dependency-comparable",
                    out[i].collection, out[j].collection
                )));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::delta_forest;

    fn sub(labels: &[u32]) -> Subset {
        Subset::from_labels(labels)
    }

    fn example_graph() -> Forest {
        Forest::new(7, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7)]).unwrap()
    }

    #[test]
    fn ordered_test_examples() {
        // on a path, a degree-2 vertex adjacent to a leaf fails rule 2
        let path = Forest::new(5, &[(1, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
        assert_eq!(
            prime_singleton_test(&path, &[2]).unwrap(),
            PrimeTest::Fail { step: 0, rule: 2 }
        );
        // a leaf fails rule 1
        assert_eq!(
            prime_singleton_test(&path, &[1]).unwrap(),
            PrimeTest::Fail { step: 0, rule: 1 }
        );
        // empty ordering passes
        assert_eq!(prime_singleton_test(&path, &[]).unwrap(), PrimeTest::Pass);
        // a degree-3 vertex adjacent to leaves passes
        let star = Forest::new(4, &[(1, 2), (1, 3), (1, 4)]).unwrap();
        assert_eq!(prime_singleton_test(&star, &[1]).unwrap(), PrimeTest::Pass);
    }

    #[test]
    fn prime_singletons_examples() {
        let star = Forest::new(4, &[(1, 2), (1, 3), (1, 4)]).unwrap();
        assert!(is_prime_singletons(&star, Subset::empty()));
        assert!(is_prime_singletons(&star, sub(&[1])));
        let path = Forest::new(5, &[(1, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
        assert!(!is_prime_singletons(&path, sub(&[2])));
    }

    #[test]
    fn valid_collection_examples() {
        // S2 = {1, 2, 34, 45, 67}: valid (pairs need not be edges)
        let c = Collection::new(sub(&[1, 2]), vec![(3, 4), (4, 5), (6, 7)]);
        assert!(is_valid_collection(&c));
        let bad = Collection::new(sub(&[1]), vec![(1, 2)]);
        assert!(!is_valid_collection(&bad));
        let pairs_only = Collection::new(Subset::empty(), vec![(1, 2)]);
        assert!(is_valid_collection(&pairs_only));
    }

    #[test]
    fn prime_collection_examples() {
        let g = example_graph();
        let c = Collection::new(Subset::empty(), vec![(3, 4), (4, 5)]);
        assert!(is_prime_collection(&g, &c));
        // on a path, both edges at vertex 3 chosen: no outside edge
        let path = Forest::new(5, &[(1, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
        let c = Collection::new(Subset::empty(), vec![(2, 3), (3, 4)]);
        assert!(!is_prime_collection(&path, &c));
    }

    #[test]
    fn clouds_examples() {
        let c = Collection::new(Subset::empty(), vec![(3, 4), (4, 5)]);
        assert_eq!(clouds(&c).unwrap(), vec![sub(&[3, 4, 5])]);
        let c = Collection::empty();
        assert!(clouds(&c).unwrap().is_empty());
        let c = Collection::new(Subset::empty(), vec![(1, 2), (3, 4)]);
        assert_eq!(clouds(&c).unwrap(), vec![sub(&[1, 2]), sub(&[3, 4])]);
    }

    #[test]
    fn blocking_examples() {
        let path = Forest::new(5, &[(1, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
        let c = Collection::new(Subset::empty(), vec![(2, 3), (3, 4)]);
        // path 1..5 crosses the cloud {2,3,4}
        assert!(is_blocked(&path, &c, sub(&[1, 5])).unwrap());
        // no exit past the cloud in {1,3}
        assert!(!is_blocked(&path, &c, sub(&[1, 3])).unwrap());
        // interior singleton blocks
        let g = example_graph();
        let c = Collection::new(sub(&[4]), vec![]);
        assert!(is_blocked(&g, &c, sub(&[3, 5])).unwrap());
    }

    #[test]
    fn matroid_from_empty_collection_is_line() {
        // S = ∅ on a path: all 3-subsets in one component are circuits
        let path = Forest::new(7, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)]).unwrap();
        let m = matroid_from_collection(&path, &Collection::empty()).unwrap();
        assert_eq!(m.rank_full(), 2);
        assert!(m.is_dependent(sub(&[1, 4, 7])));
        assert!(m.circuits().iter().all(|c| c.len() == 3));
    }

    #[test]
    fn matroid_with_cloud_and_free_points() {
        let g = example_graph();
        let c = Collection::new(Subset::empty(), vec![(3, 4), (4, 5)]);
        let m = matroid_from_collection(&g, &c).unwrap();
        // {3,4,5} is a cloud: pairwise parallel
        assert!(m.is_dependent(sub(&[3, 4])));
        assert!(m.is_dependent(sub(&[4, 5])));
        assert!(m.is_dependent(sub(&[3, 5])));
        // 1,2,3,4,5 lie on a line
        assert!(m.is_dependent(sub(&[1, 2, 3])));
        assert!(m.is_dependent(sub(&[1, 2, 5])));
        // 6 and 7 are free
        assert!(m.is_independent(sub(&[1, 6, 7])));
        let s = m.simplify();
        // line with merged {3,4,5}: 5 simple points, one 3-point line, 2 free
        assert_eq!(s.matroid.ground_size(), 5);
    }

    #[test]
    fn matroid_with_singleton_loop() {
        let g = example_graph();
        let c = Collection::new(sub(&[4]), vec![]);
        let m = matroid_from_collection(&g, &c).unwrap();
        assert!(m.is_dependent(sub(&[4])));
        assert!(m.is_dependent(sub(&[1, 2, 3])));
        // pairs across {1,2,3} / {5,6} / {7} are blocked -> independent triples
        assert!(m.is_independent(sub(&[1, 5, 7])));
    }

    #[test]
    fn enumerate_examples() {
        let path3 = Forest::new(3, &[(1, 2), (2, 3)]).unwrap();
        let cs = enumerate_prime_collections(&path3);
        assert_eq!(cs, vec![Collection::empty()]);

        let star = Forest::new(4, &[(1, 2), (1, 3), (1, 4)]).unwrap();
        let cs = enumerate_prime_collections(&star);
        assert_eq!(cs.len(), 2);
        assert!(cs.contains(&Collection::empty()));
        assert!(cs.contains(&Collection::new(sub(&[1]), vec![])));

        let g = example_graph();
        let cs = enumerate_prime_collections(&g);
        assert!(cs.contains(&Collection::empty()));
        assert!(cs.contains(&Collection::new(Subset::empty(), vec![(3, 4), (4, 5)])));
    }

    #[test]
    fn decompose_small_forests() {
        let path3 = Forest::new(3, &[(1, 2), (2, 3)]).unwrap();
        assert_eq!(decompose_forest_variety(&path3).unwrap().len(), 1);
        let star = Forest::new(4, &[(1, 2), (1, 3), (1, 4)]).unwrap();
        assert_eq!(decompose_forest_variety(&star).unwrap().len(), 2);
    }

    #[test]
    fn prime_collection_matroids_contain_delta() {
        let g = example_graph();
        let delta = delta_forest(&g);
        for comp in decompose_forest_variety(&g).unwrap() {
            for e in delta.edges() {
                assert!(comp.matroid.is_dependent(e));
            }
        }
    }

    #[test]
    fn nine_vertex_concurrent_lines_example() {
        // S = {14, 47} on a spider tree: the cloud {1,4,7} becomes a point
        // on three lines, one per branch
        let g = Forest::new(
            9,
            &[(1, 2), (2, 3), (1, 4), (4, 5), (5, 6), (4, 7), (7, 8), (8, 9)],
        )
        .unwrap();
        let c = Collection::new(Subset::empty(), vec![(1, 4), (4, 7)]);
        assert!(is_prime_collection(&g, &c));
        let m = matroid_from_collection(&g, &c).unwrap();
        let dependent_lines: Vec<Subset> = m
            .flats_of_rank(2)
            .into_iter()
            .map(|f| f.members)
            .filter(|f| f.len() >= 3)
            .collect();
        assert_eq!(
            dependent_lines,
            vec![
                sub(&[1, 2, 3, 4, 7]),
                sub(&[1, 4, 5, 6, 7]),
                sub(&[1, 4, 7, 8, 9])
            ]
        );
        // simplification: three lines through a common point
        let s = m.simplify().matroid;
        let three_concurrent = {
            let mut circuits = Vec::new();
            for line in [[1u32, 2, 3], [1, 4, 5], [1, 6, 7]] {
                circuits.push(Subset::from_labels(&line));
            }
            for q in k_subsets(Subset::full(7), 4) {
                if !circuits[..3].iter().any(|t| t.is_subset_of(&q)) {
                    circuits.push(q);
                }
            }
            Matroid::new(crate::subset::GroundSet::new(7).unwrap(), circuits).unwrap()
        };
        assert!(s.is_isomorphic(&three_concurrent).is_some());
    }

    #[test]
    fn valid_collection_with_nonconvex_cloud_is_rejected() {
        // The construction requires each cloud to be a path-connected set of
        // the forest. Here the cloud {2,3,4} is split around the hub 1 (the
        // tree path from 2 to 4 leaves the cloud), and the blocking rules
        // contradict each other: {1,2,6} and {1,2,7} come out as circuits
        // while {1,6,7} stays independent, so elimination fails and the
        // construction reports the family honestly instead of a fake matroid.
        let g = Forest::new(7, &[(1, 2), (1, 4), (2, 3), (2, 7), (3, 5), (4, 6)]).unwrap();
        let c = Collection::new(sub(&[5]), vec![(2, 3), (3, 4)]);
        assert!(is_valid_collection(&c));
        assert!(matches!(
            matroid_from_collection(&g, &c),
            Err(crate::error::Error::InvalidCircuits(_))
        ));
    }

    #[test]
    fn valid_collection_with_chord_pair_works() {
        // non-edge pairs are fine as long as the cloud stays path-connected
        let path = Forest::new(5, &[(1, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
        let c = Collection::new(Subset::empty(), vec![(2, 4), (3, 4)]); // chord (2,4)
        assert!(is_valid_collection(&c));
        let m = matroid_from_collection(&path, &c).unwrap();
        assert!(m.is_dependent(sub(&[2, 3])));
        assert!(m.is_dependent(sub(&[2, 4])));
    }
}
