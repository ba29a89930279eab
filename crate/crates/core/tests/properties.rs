//! Property tests for the structural invariants: rank axioms, the dependency
//! order, growth/restriction round trips, transformation monotonicity, and
//! the exact-geometry primitives.

use matroidal::alpha::{alpha1, alpha2, alpha3, is_matroid_clutter, search_min_dependent, SearchLimits};
use matroidal::clutter::Clutter;
use matroidal::config::config_from_matroid;
use matroidal::forest::{decompose_forest_variety, matroid_from_collection, Collection};
use matroidal::hypergraph::{delta_forest, Forest};
use matroidal::matroid::{Extension, Matroid};
use matroidal::oracle::brute_minimal_dependent;
use matroidal::ratmat::{line_meet, rat_frac, Rational, RationalMatrix};
use matroidal::subset::{GroundSet, Subset};

use num_traits::Zero;
use proptest::prelude::*;

// ---------------------------------------------------------------------------
// generators
// ---------------------------------------------------------------------------

/// Random rank-≤3 matroid through the loops/classes/lines structure.
fn arb_matroid(max_n: u32) -> impl Strategy<Value = Matroid> {
    (2..=max_n)
        .prop_flat_map(|n| {
            let assignments = proptest::collection::vec(0..6u32, n as usize);
            let line_picks = proptest::collection::vec(any::<bool>(), 8);
            (Just(n), assignments, line_picks, 0u64..u64::MAX)
        })
        .prop_map(|(n, assignment, line_picks, salt)| {
            // assignment: 0 => loop, otherwise parallel-class id
            let mut loops = Subset::empty();
            let mut classes: Vec<Subset> = Vec::new();
            let mut class_ids: Vec<u32> = Vec::new();
            for (i, &a) in assignment.iter().enumerate() {
                let label = i as u32 + 1;
                if a == 0 {
                    loops.insert(label);
                } else {
                    match class_ids.iter().position(|&c| c == a) {
                        Some(pos) => classes[pos].insert(label),
                        None => {
                            class_ids.push(a);
                            classes.push(Subset::singleton(label));
                        }
                    }
                }
            }
            let k = classes.len();
            let mut lines: Vec<u32> = Vec::new();
            if k >= 3 {
                let full = (1u32 << k) - 1;
                let mut cand: Vec<u32> = (1..full).filter(|m| m.count_ones() >= 3).collect();
                // deterministic shuffle driven by the salt
                let mut state = salt | 1;
                for i in (1..cand.len()).rev() {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
                    let j = (state >> 33) as usize % (i + 1);
                    cand.swap(i, j);
                }
                for (i, m) in cand.into_iter().enumerate() {
                    if i >= line_picks.len() {
                        break;
                    }
                    if line_picks[i] && lines.iter().all(|&l| (l & m).count_ones() <= 1) {
                        lines.push(m);
                    }
                }
            }
            let mut circuits: Vec<Subset> = loops.iter().map(Subset::singleton).collect();
            for cls in &classes {
                circuits.extend(matroidal::subset::k_subsets(*cls, 2));
            }
            for &line in &lines {
                let members: Vec<usize> = (0..k).filter(|i| line >> i & 1 == 1).collect();
                for a in 0..members.len() {
                    for b in (a + 1)..members.len() {
                        for c in (b + 1)..members.len() {
                            for x in classes[members[a]].iter() {
                                for y in classes[members[b]].iter() {
                                    for z in classes[members[c]].iter() {
                                        circuits.push(Subset::from_labels(&[x, y, z]));
                                    }
                                }
                            }
                        }
                    }
                }
            }
            // close the family downward to honest circuits via the 4-sets
            let triples: Vec<Subset> = circuits.iter().copied().filter(|c| c.len() <= 3).collect();
            for q in matroidal::subset::k_subsets(Subset::full(n), 4) {
                if !triples.iter().any(|t| t.is_subset_of(&q)) {
                    circuits.push(q);
                }
            }
            Matroid::new(GroundSet::new(n).unwrap(), circuits).expect("structured rank-3 family")
        })
}

fn arb_subset(n: u32) -> impl Strategy<Value = Subset> {
    proptest::collection::vec(any::<bool>(), n as usize).prop_map(move |bits| {
        let mut s = Subset::empty();
        for (i, b) in bits.iter().enumerate() {
            if *b {
                s.insert(i as u32 + 1);
            }
        }
        s
    })
}

fn arb_forest(max_n: u32) -> impl Strategy<Value = Forest> {
    (2..=max_n)
        .prop_flat_map(|n| {
            let edge_bits = proptest::collection::vec(any::<bool>(), (n * (n - 1) / 2) as usize);
            (Just(n), edge_bits)
        })
        .prop_map(|(n, bits)| {
            let mut edges = Vec::new();
            let mut parent: Vec<u32> = (0..=n).collect();
            fn find(p: &mut Vec<u32>, x: u32) -> u32 {
                if p[x as usize] != x {
                    let r = find(p, p[x as usize]);
                    p[x as usize] = r;
                }
                p[x as usize]
            }
            let mut idx = 0;
            for a in 1..=n {
                for b in (a + 1)..=n {
                    if bits[idx] {
                        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                        if ra != rb {
                            parent[ra as usize] = rb;
                            edges.push((a, b));
                        }
                    }
                    idx += 1;
                }
            }
            Forest::new(n, &edges).expect("acyclic by construction")
        })
}

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=9).prop_map(|(n, d)| rat_frac(n, d))
}

// ---------------------------------------------------------------------------
// matroid axioms and order properties
// ---------------------------------------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn rank_is_monotone_and_submodular(m in arb_matroid(10), seed in any::<u64>()) {
        let n = m.ground_size();
        let a = Subset(seed as u128 & Subset::full(n).0);
        let b = Subset((seed >> 7) as u128 & Subset::full(n).0);
        // monotone
        prop_assert!(m.rank(a.inter(b)) <= m.rank(a));
        prop_assert!(m.rank(a) <= m.rank(a.union(b)));
        // submodular
        prop_assert!(m.rank(a.union(b)) + m.rank(a.inter(b)) <= m.rank(a) + m.rank(b));
    }

    #[test]
    fn dependency_order_is_a_partial_order(
        m1 in arb_matroid(7),
        m2 in arb_matroid(7),
        m3 in arb_matroid(7),
    ) {
        prop_assert!(m1.dependency_leq(&m1).unwrap());
        if m1.ground_size() == m2.ground_size() {
            // antisymmetry on distinct circuit families
            if m1.dependency_leq(&m2).unwrap() && m2.dependency_leq(&m1).unwrap() {
                prop_assert_eq!(m1.circuits(), m2.circuits());
            }
            if m2.ground_size() == m3.ground_size()
                && m1.dependency_leq(&m2).unwrap()
                && m2.dependency_leq(&m3).unwrap()
            {
                prop_assert!(m1.dependency_leq(&m3).unwrap());
            }
        }
    }

    #[test]
    fn coloop_extension_restricts_back(m in arb_matroid(8)) {
        let n = m.ground_size();
        let grown = m.extend(Extension::Coloop).unwrap();
        prop_assert_eq!(grown.restrict(Subset::full(n)), m);
    }

    #[test]
    fn free_extension_deletes_back(m in arb_matroid(7), flat_seed in any::<u64>()) {
        let n = m.ground_size();
        let base = Subset(flat_seed as u128 & Subset::full(n).0);
        let flat = m.closure(base);
        let grown = m.extend(Extension::FreeToFlat(flat)).unwrap();
        prop_assert_eq!(grown.restrict(Subset::full(n)), m);
    }

    #[test]
    fn simplify_is_idempotent(m in arb_matroid(9)) {
        let once = m.simplify().matroid;
        let twice = once.simplify().matroid;
        prop_assert!(once.is_isomorphic(&twice).is_some());
        prop_assert_eq!(once.ground_size(), twice.ground_size());
    }

    #[test]
    fn relabeling_preserves_forest_likeness(m in arb_matroid(8), perm_seed in any::<u64>()) {
        let simple = m.simplify().matroid;
        if simple.rank_full() > 3 || simple.ground_size() == 0 {
            return Ok(());
        }
        let config = config_from_matroid(&simple).unwrap();
        // random permutation from the seed
        let n = simple.ground_size();
        let mut perm: Vec<u32> = (1..=n).collect();
        let mut state = perm_seed | 1;
        for i in (1..perm.len()).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
            let j = (state >> 33) as usize % (i + 1);
            perm.swap(i, j);
        }
        let relabeled = simple.relabel(&perm);
        let config2 = config_from_matroid(&relabeled).unwrap();
        prop_assert_eq!(config.is_forest_like().0, config2.is_forest_like().0);
    }
}

// ---------------------------------------------------------------------------
// clutter transformations
// ---------------------------------------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn alpha_moves_grow_the_upward_closure(
        n in 4u32..=7,
        edges in proptest::collection::vec(arb_subset(7), 1..5),
    ) {
        let ground = GroundSet::new(n).unwrap();
        let full = ground.full();
        let edges: Vec<Subset> = edges
            .into_iter()
            .map(|e| e.inter(full))
            .filter(|e| !e.is_empty())
            .collect();
        prop_assume!(!edges.is_empty());
        let clutter = Clutter::from_family(ground, 3, edges);
        let mut nexts = vec![alpha2(&clutter), alpha3(&clutter)];
        let es = clutter.edges();
        if es.len() >= 2 {
            nexts.push(alpha1(&clutter, es[0], es[1]).unwrap());
        }
        for next in nexts {
            // antichain output
            let out = next.edges();
            for (i, a) in out.iter().enumerate() {
                for b in out.iter().skip(i + 1) {
                    prop_assert!(!a.is_subset_of(b) && !b.is_subset_of(a));
                }
            }
            // upward-closure containment: every old edge contains a new edge
            for old in clutter.edges() {
                prop_assert!(out.iter().any(|e| e.is_subset_of(&old)));
            }
        }
    }

    #[test]
    fn alpha_moves_fix_matroid_clutters(m in arb_matroid(6)) {
        let clutter = Clutter::from_family(
            m.ground(),
            3,
            m.circuits().to_vec(),
        );
        prop_assert!(is_matroid_clutter(&clutter));
        prop_assert_eq!(alpha2(&clutter).edges(), clutter.edges());
        prop_assert_eq!(alpha3(&clutter).edges(), clutter.edges());
        let es = clutter.edges();
        if es.len() >= 2 {
            prop_assert_eq!(alpha1(&clutter, es[0], es[1]).unwrap().edges(), clutter.edges());
        }
    }
}

/// The search agrees with brute force on small forest hypergraphs; its
/// outputs contain the hypergraph and are pairwise incomparable.
#[test]
fn search_matches_oracle_on_small_forests() {
    let cases: Vec<Forest> = vec![
        Forest::new(4, &[(1, 2), (1, 3), (1, 4)]).unwrap(),
        Forest::new(4, &[(1, 2), (2, 3), (3, 4)]).unwrap(),
        Forest::new(5, &[(1, 2), (2, 3), (3, 4), (4, 5)]).unwrap(),
        Forest::new(5, &[(1, 2), (2, 3), (2, 4), (4, 5)]).unwrap(),
        Forest::new(6, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6)]).unwrap(),
        Forest::new(7, &[(1, 2), (2, 3), (3, 4), (3, 5), (5, 6), (5, 7)]).unwrap(),
    ];
    for forest in cases {
        let delta = delta_forest(&forest);
        let expected = brute_minimal_dependent(&delta).unwrap();
        let limits = SearchLimits {
            max_states: 2_000_000,
            max_depth: 64,
        };
        let outcome = search_min_dependent(&delta, limits).unwrap();
        assert!(outcome.complete);
        assert_eq!(outcome.minimal.len(), expected.len());
        for m in &outcome.minimal {
            assert!(expected.contains(m), "unexpected minimal matroid {m:?}");
            for e in delta.edges() {
                assert!(m.is_dependent(e));
            }
        }
        for (i, a) in outcome.minimal.iter().enumerate() {
            for b in outcome.minimal.iter().skip(i + 1) {
                assert!(!a.dependency_leq(b).unwrap());
                assert!(!b.dependency_leq(a).unwrap());
            }
        }
    }
}

// ---------------------------------------------------------------------------
// forest decomposition invariants
// ---------------------------------------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn prime_components_contain_delta_and_have_rank_at_most_3(f in arb_forest(8)) {
        let delta = delta_forest(&f);
        let comps = decompose_forest_variety(&f).unwrap();
        for c in &comps {
            prop_assert!(c.matroid.rank_full() <= 3);
            for e in delta.edges() {
                prop_assert!(c.matroid.is_dependent(e));
            }
        }
        // pairwise incomparable is asserted inside decompose_forest_variety
    }

    #[test]
    fn empty_collection_matroid_is_connected_lines(f in arb_forest(8)) {
        let m = matroid_from_collection(&f, &Collection::empty()).unwrap();
        // triples inside one component are dependent; across components independent
        let n = f.vertex_count();
        for t in matroidal::subset::k_subsets(Subset::full(n), 3) {
            let labels = t.labels();
            let connected = f.same_component(labels[0], labels[1])
                && f.same_component(labels[0], labels[2]);
            prop_assert_eq!(m.is_dependent(t), connected);
        }
    }
}

// ---------------------------------------------------------------------------
// grid realizations and the embedding pipeline
// ---------------------------------------------------------------------------

/// Every in-range grid shape round-trips: the sampled affine realization
/// reproduces the unique minimal matroid exactly.
#[test]
fn grid_realizations_round_trip_in_range() {
    use matroidal::hypergraph::GridShape;
    use matroidal::ratmat::verify_realization;
    use matroidal::realize::{realize_grid_unique_minimal, unique_minimal_circuits};
    for s in 3..=4u32 {
        for t in s..=5u32 {
            for d in t..=(s + t - 3) {
                for k in s..=4u32 {
                    for l in t..=5u32 {
                        let shape = GridShape::new(k, l, s, t).unwrap();
                        let m = unique_minimal_circuits(shape, d).unwrap();
                        let a = realize_grid_unique_minimal(shape, d, 3, 50).unwrap();
                        assert!(
                            verify_realization(&a, &m).unwrap(),
                            "round trip failed for (s,t,d,k,l)=({s},{t},{d},{k},{l})"
                        );
                    }
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    /// The embedding pipeline's internal restriction check passes for random
    /// small matroids of every rank it accepts.
    #[test]
    fn hardness_pipeline_verifies_on_random_matroids(m in arb_matroid(5)) {
        let out = matroidal::hardness::hardness_pipeline(&m).unwrap();
        prop_assert!(out.restriction.is_isomorphic(&m).is_some());
    }
}

// ---------------------------------------------------------------------------
// exact geometry
// ---------------------------------------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn line_meet_lands_in_both_spans(
        a1 in proptest::array::uniform3(arb_rational()),
        a2 in proptest::array::uniform3(arb_rational()),
        b1 in proptest::array::uniform3(arb_rational()),
        b2 in proptest::array::uniform3(arb_rational()),
    ) {
        let det3 = |a: &[Rational; 3], b: &[Rational; 3], c: &[Rational; 3]| -> Rational {
            &a[0] * (&b[1] * &c[2] - &b[2] * &c[1]) - &a[1] * (&b[0] * &c[2] - &b[2] * &c[0])
                + &a[2] * (&b[0] * &c[1] - &b[1] * &c[0])
        };
        match line_meet(&a1, &a2, &b1, &b2) {
            Ok(q) => {
                prop_assert!(!q.iter().all(|x| x.is_zero()));
                prop_assert!(det3(&q, &a1, &a2).is_zero());
                prop_assert!(det3(&q, &b1, &b2).is_zero());
            }
            Err(_) => {} // degenerate spans are allowed to error
        }
    }

    #[test]
    fn bareiss_rank_matches_gauss(entries in proptest::collection::vec(arb_rational(), 12)) {
        let rows: Vec<Vec<Rational>> = entries.chunks(4).map(|c| c.to_vec()).collect();
        let m = RationalMatrix::from_rows(rows.clone()).unwrap();
        // reference: plain rational Gaussian elimination
        let mut a = rows;
        let (nr, nc) = (3usize, 4usize);
        let mut rank = 0;
        for c in 0..nc {
            if let Some(p) = (rank..nr).find(|&r| !a[r][c].is_zero()) {
                a.swap(rank, p);
                for r in 0..nr {
                    if r != rank && !a[r][c].is_zero() {
                        let f = &a[r][c] / &a[rank][c];
                        for j in 0..nc {
                            let sub = &f * &a[rank][j];
                            a[r][j] = &a[r][j] - &sub;
                        }
                    }
                }
                rank += 1;
            }
        }
        prop_assert_eq!(m.rank(), rank);
    }
}
