//! Point-line configurations: the geometric face of simple rank-≤3 matroids.
//!
//! A configuration lists points and lines (point sets of size ≥ 3, any two
//! lines sharing at most one point). The associated matroid makes a 3-subset
//! dependent exactly when it sits inside a line. Forest-likeness of the
//! path-glued graph `G_C` drives both the irreducibility certificates and the
//! component list of the combinatorial closure.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::subset::{k_subsets, GroundSet, Subset};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Configuration {
    n: u32,
    lines: Vec<Subset>,
}

/// A configuration with a subset of its points set to loops. Lines reduced
/// below three non-loop points are dropped from the line list (they add no
/// dependencies beyond the loops).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoopedConfiguration {
    pub base: Configuration,
    pub loops: Subset,
}

/// The glued-path graph of a configuration, with an edge list over points.
#[derive(Debug, Clone)]
pub struct PathGraph {
    pub n: u32,
    pub edges: Vec<(u32, u32)>,
}

impl PathGraph {
    pub fn is_acyclic(&self) -> bool {
        let mut parent: Vec<usize> = (0..self.n as usize).collect();
        fn find(p: &mut Vec<usize>, x: usize) -> usize {
            if p[x] != x {
                let r = find(p, p[x]);
                p[x] = r;
            }
            p[x]
        }
        for &(a, b) in &self.edges {
            let (ra, rb) = (
                find(&mut parent, a as usize - 1),
                find(&mut parent, b as usize - 1),
            );
            if ra == rb {
                return false;
            }
            parent[ra] = rb;
        }
        true
    }

    /// DOT rendering for diagnostics.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph path_graph {\n");
        for v in 1..=self.n {
            out.push_str(&format!("  p{v};\n"));
        }
        for &(a, b) in &self.edges {
            out.push_str(&format!("  p{a} -- p{b};\n"));
        }
        out.push_str("}\n");
        out
    }
}

impl Configuration {
    /// Build from the point count and the line point-sets. Checks line sizes
    /// and pairwise intersections.
    pub fn new(n: u32, lines: Vec<Subset>) -> Result<Self> {
        let ground = GroundSet::new_extended(n.max(1))?;
        for l in &lines {
            if !l.is_subset_of(&ground.full()) || n == 0 {
                return Err(Error::ElementOutOfRange(
                    l.labels().last().copied().unwrap_or(0),
                    n,
                ));
            }
            if l.len() < 3 {
                return Err(Error::ParameterRange(format!(
                    "line {l} has fewer than 3 points"
                )));
            }
        }
        for (i, a) in lines.iter().enumerate() {
            for b in lines.iter().skip(i + 1) {
                if a.inter(*b).len() > 1 {
                    return Err(Error::ParameterRange(format!(
                        "lines {a} and {b} share more than one point"
                    )));
                }
            }
        }
        let mut lines = lines;
        lines.sort_by(|a, b| a.canonical_cmp(b));
        lines.dedup();
        Ok(Configuration { n, lines })
    }

    pub fn point_count(&self) -> u32 {
        self.n
    }

    pub fn lines(&self) -> &[Subset] {
        &self.lines
    }

    pub fn line_degree(&self, p: u32) -> usize {
        self.lines.iter().filter(|l| l.contains(p)).count()
    }

    /// The matroid of the configuration: 3-subsets inside lines are circuits,
    /// plus the 4-subsets containing none of them (rank ≤ 3).
    pub fn matroid(&self) -> Matroid {
        let mut circuits = Vec::new();
        for l in &self.lines {
            circuits.extend(k_subsets(*l, 3));
        }
        let triples = circuits.clone();
        for q in k_subsets(Subset::full(self.n), 4) {
            if !triples.iter().any(|t| t.is_subset_of(&q)) {
                circuits.push(q);
            }
        }
        Matroid::from_certified_circuits(self.n, circuits)
    }

    /// The glued-path graph for the ascending point order: consecutive points
    /// of each line become edges. Forest-likeness does not depend on the
    /// order, so the canonical order is fixed here.
    pub fn path_graph(&self) -> PathGraph {
        let mut edges = Vec::new();
        for l in &self.lines {
            let pts = l.labels();
            for w in pts.windows(2) {
                edges.push((w[0], w[1]));
            }
        }
        edges.sort_unstable();
        edges.dedup();
        PathGraph { n: self.n, edges }
    }

    pub fn is_forest_like(&self) -> (bool, PathGraph) {
        let g = self.path_graph();
        (g.is_acyclic(), g)
    }
}

/// Build the configuration of a simple matroid of rank ≤ 3: points are the
/// ground set, lines are the dependent rank-2 flats. The round trip back to
/// the matroid is asserted.
pub fn config_from_matroid(m: &Matroid) -> Result<Configuration> {
    if !m.loops().is_empty() {
        return Err(Error::NotSimple("matroid has loops".to_string()));
    }
    if m.circuits().iter().any(|c| c.len() == 2) {
        return Err(Error::NotSimple("matroid has parallel pairs".to_string()));
    }
    let rank = m.rank_full();
    if rank > 3 {
        return Err(Error::RankTooLarge(rank, 3));
    }
    let lines: Vec<Subset> = m
        .flats_of_rank(2)
        .into_iter()
        .map(|f| f.members)
        .filter(|f| f.len() >= 3)
        .collect();
    let config = Configuration::new(m.ground_size(), lines)?;
    if &config.matroid() != m {
        return Err(Error::VerificationFailed(
            "configuration does not reproduce the matroid".to_string(),
        ));
    }
    Ok(config)
}

/// Remove a line: the points lying solely on that line disappear. All other
/// lines survive intact. Returns the reduced configuration together with the
/// original labels of the surviving points, in order.
pub fn remove_line(c: &Configuration, line: &Subset) -> Result<(Configuration, Vec<u32>)> {
    if !c.lines().contains(line) {
        return Err(Error::LineAbsent);
    }
    let mut survivors = Vec::new();
    for p in 1..=c.point_count() {
        let on_removed = line.contains(p);
        let on_other = c.lines().iter().any(|l| l != line && l.contains(p));
        if !on_removed || on_other {
            survivors.push(p);
        }
    }
    let mut new_label = HashMap::new();
    for (i, &p) in survivors.iter().enumerate() {
        new_label.insert(p, (i + 1) as u32);
    }
    let lines = c
        .lines()
        .iter()
        .filter(|l| *l != line)
        .map(|l| Subset::from_labels(&l.iter().map(|p| new_label[&p]).collect::<Vec<_>>()))
        .collect();
    Ok((
        Configuration::new(survivors.len() as u32, lines)?,
        survivors,
    ))
}

/// Set `loops` to be loops: the circuits become those loops as singletons
/// plus the base circuits avoiding them.
pub fn set_loops(c: &Configuration, loops: Subset) -> Matroid {
    let base = c.matroid();
    let mut circuits: Vec<Subset> = loops.iter().map(Subset::singleton).collect();
    circuits.extend(
        base.circuits()
            .iter()
            .filter(|c| !c.intersects(&loops))
            .copied(),
    );
    Matroid::from_certified_circuits(c.point_count(), circuits)
}

/// The looped configuration for a loop set: only lines with at least three
/// non-loop points remain.
pub fn looped_configuration(c: &Configuration, loops: Subset) -> LoopedConfiguration {
    let lines = c
        .lines()
        .iter()
        .filter(|l| l.minus(loops).len() >= 3)
        .map(|l| l.minus(loops))
        .collect();
    LoopedConfiguration {
        base: Configuration {
            n: c.point_count(),
            lines,
        },
        loops,
    }
}

impl LoopedConfiguration {
    pub fn matroid(&self) -> Matroid {
        let mut circuits: Vec<Subset> = self.loops.iter().map(Subset::singleton).collect();
        let base = self.base.matroid();
        circuits.extend(
            base.circuits()
                .iter()
                .filter(|c| !c.intersects(&self.loops))
                .copied(),
        );
        Matroid::from_certified_circuits(self.base.point_count(), circuits)
    }
}

/// One component of the combinatorial closure of a forest-like configuration.
#[derive(Debug, Clone)]
pub struct ClosureComponent {
    pub loops: Subset,
    pub matroid: Matroid,
}

/// The irredundant component list of the combinatorial closure of a
/// forest-like configuration, central component first.
///
/// Candidates are the loop settings `C_J` for `J ⊆ S`, where `S` collects the
/// points on at least three lines. A candidate is redundant exactly when some
/// `p ∈ J` lies on at most two surviving lines of `C_{J\{p}}` (its loop
/// degeneration then already sits inside that component's variety).
pub fn comb_closure_components(c: &Configuration) -> Result<Vec<ClosureComponent>> {
    let (forest_like, _) = c.is_forest_like();
    if !forest_like {
        return Err(Error::NotForestLike);
    }
    let s: Vec<u32> = (1..=c.point_count())
        .filter(|&p| c.line_degree(p) >= 3)
        .collect();
    let mut out = Vec::new();
    let m = s.len();
    for mask in 0u64..(1u64 << m) {
        let loops = Subset::from_labels(
            &(0..m)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| s[i])
                .collect::<Vec<_>>(),
        );
        let mut redundant = false;
        for p in loops.iter() {
            let without_p = looped_configuration(c, loops.without(p));
            if without_p.base.line_degree(p) <= 2 {
                redundant = true;
                break;
            }
        }
        if !redundant {
            out.push(ClosureComponent {
                loops,
                matroid: set_loops(c, loops),
            });
        }
    }
    out.sort_by(|a, b| {
        a.loops
            .len()
            .cmp(&b.loops.len())
            .then_with(|| a.loops.canonical_cmp(&b.loops))
    });
    Ok(out)
}

/// Sufficiency certificate for irreducibility of the realization space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IrreducibilityTag {
    ForestLike,
    AtMostSixLines,
    /// Lines can be removed in this order, each meeting at most two points of
    /// line-degree ≥ 3, down to a configuration with at most four lines.
    BuildUpChain(Vec<Subset>),
    Unknown,
}

/// Classify via the known sufficient conditions; `Unknown` does not mean
/// reducible.
pub fn irreducibility_tag(c: &Configuration) -> IrreducibilityTag {
    if c.is_forest_like().0 {
        return IrreducibilityTag::ForestLike;
    }
    if c.lines().len() <= 6 {
        return IrreducibilityTag::AtMostSixLines;
    }
    let mut order = Vec::new();
    if build_up_chain(c, &mut order) {
        return IrreducibilityTag::BuildUpChain(order);
    }
    IrreducibilityTag::Unknown
}

fn build_up_chain(c: &Configuration, order: &mut Vec<Subset>) -> bool {
    if c.lines().len() <= 4 {
        return true;
    }
    for line in c.lines().to_vec() {
        let busy = line.iter().filter(|&p| c.line_degree(p) >= 3).count();
        if busy <= 2 {
            if let Ok((rest, _survivors)) = remove_line(c, &line) {
                order.push(line);
                if build_up_chain(&rest, order) {
                    return true;
                }
                order.pop();
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sub(labels: &[u32]) -> Subset {
        Subset::from_labels(labels)
    }

    /// Three lines through the common point 1.
    fn three_concurrent() -> Configuration {
        Configuration::new(7, vec![sub(&[1, 2, 3]), sub(&[1, 4, 5]), sub(&[1, 6, 7])]).unwrap()
    }

    /// Spine {1,2,3} plus two extra lines through each spine point.
    fn e_configuration() -> Configuration {
        Configuration::new(
            15,
            vec![
                sub(&[1, 2, 3]),
                sub(&[1, 4, 5]),
                sub(&[1, 6, 7]),
                sub(&[2, 8, 9]),
                sub(&[2, 10, 11]),
                sub(&[3, 12, 13]),
                sub(&[3, 14, 15]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn config_from_line_matroid() {
        // all points on a single line
        let path = crate::hypergraph::Forest::new(
            7,
            &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)],
        )
        .unwrap();
        let m = crate::forest::matroid_from_collection(&path, &crate::forest::Collection::empty())
            .unwrap();
        let s = m.simplify();
        let config = config_from_matroid(&s.matroid).unwrap();
        assert_eq!(config.lines().len(), 1);
        assert_eq!(config.lines()[0].len(), 7);
    }

    #[test]
    fn config_from_free_matroid_has_no_lines() {
        let config = config_from_matroid(&Matroid::free(3)).unwrap();
        assert!(config.lines().is_empty());
    }

    #[test]
    fn config_rejects_nonsimple() {
        let m = Matroid::new(GroundSet::new(3).unwrap(), vec![sub(&[1])]).unwrap();
        assert!(config_from_matroid(&m).is_err());
    }

    #[test]
    fn forest_like_examples() {
        assert!(three_concurrent().is_forest_like().0);
        assert!(e_configuration().is_forest_like().0);
        // triangle: three lines pairwise meeting in distinct points
        let triangle =
            Configuration::new(6, vec![sub(&[1, 2, 4]), sub(&[2, 3, 5]), sub(&[1, 3, 6])]).unwrap();
        assert!(!triangle.is_forest_like().0);
        // Fano
        let fano = config_from_matroid(&crate::fano_matroid()).unwrap();
        assert!(!fano.is_forest_like().0);
    }

    #[test]
    fn remove_line_examples() {
        // removing the only line drops all its private points
        let single = Configuration::new(7, vec![Subset::full(7)]).unwrap();
        let (rest, _) = remove_line(&single, &Subset::full(7)).unwrap();
        assert_eq!(rest.point_count(), 0);

        let c = three_concurrent();
        let (rest, survivors) = remove_line(&c, &sub(&[1, 6, 7])).unwrap();
        assert_eq!(rest.lines().len(), 2);
        assert_eq!(survivors, vec![1, 2, 3, 4, 5]);

        assert!(remove_line(&c, &sub(&[2, 3, 4])).is_err());
    }

    #[test]
    fn set_loops_examples() {
        let c = three_concurrent();
        assert_eq!(set_loops(&c, Subset::empty()), c.matroid());
        let m = set_loops(&c, sub(&[1]));
        assert!(m.is_dependent(sub(&[1])));
        // lines with <= 2 remaining points contribute no 3-circuits
        assert!(m.is_independent(sub(&[2, 3, 4])));
        let looped = looped_configuration(&c, sub(&[1]));
        assert!(looped.base.lines().is_empty());
        assert_eq!(looped.matroid(), m);
    }

    #[test]
    fn closure_components_three_concurrent() {
        let comps = comb_closure_components(&three_concurrent()).unwrap();
        assert_eq!(comps.len(), 2);
        assert!(comps[0].loops.is_empty());
        assert_eq!(comps[1].loops, sub(&[1]));
    }

    #[test]
    fn closure_components_e_configuration() {
        let comps = comb_closure_components(&e_configuration()).unwrap();
        assert_eq!(comps.len(), 4);
        let loop_sets: Vec<Subset> = comps.iter().map(|c| c.loops).collect();
        assert_eq!(
            loop_sets,
            vec![Subset::empty(), sub(&[1]), sub(&[2]), sub(&[3])]
        );
    }

    #[test]
    fn closure_components_low_degree_single() {
        // all points on at most 2 lines: the closure is the central component
        let c = Configuration::new(5, vec![sub(&[1, 2, 3]), sub(&[3, 4, 5])]).unwrap();
        let comps = comb_closure_components(&c).unwrap();
        assert_eq!(comps.len(), 1);
        assert!(comps[0].loops.is_empty());
        assert_eq!(comps[0].matroid, c.matroid());
    }

    #[test]
    fn irreducibility_tags() {
        assert_eq!(
            irreducibility_tag(&three_concurrent()),
            IrreducibilityTag::ForestLike
        );
        // 5-line non-forest-like: triangle plus two disjoint lines
        let c = Configuration::new(
            12,
            vec![
                sub(&[1, 2, 4]),
                sub(&[2, 3, 5]),
                sub(&[1, 3, 6]),
                sub(&[7, 8, 9]),
                sub(&[10, 11, 12]),
            ],
        )
        .unwrap();
        assert_eq!(irreducibility_tag(&c), IrreducibilityTag::AtMostSixLines);
        let fano = config_from_matroid(&crate::fano_matroid()).unwrap();
        assert_eq!(irreducibility_tag(&fano), IrreducibilityTag::Unknown);
    }

    #[test]
    fn round_trip_matroid_config() {
        let c = e_configuration();
        let m = c.matroid();
        let back = config_from_matroid(&m).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn build_up_chain_certificate() {
        // a triangle (not forest-like) plus four disjoint lines: 7 lines, so
        // the six-line theorem does not apply, but every extra line peels off
        let c = Configuration::new(
            18,
            vec![
                sub(&[1, 2, 4]),
                sub(&[2, 3, 5]),
                sub(&[1, 3, 6]),
                sub(&[7, 8, 9]),
                sub(&[10, 11, 12]),
                sub(&[13, 14, 15]),
                sub(&[16, 17, 18]),
            ],
        )
        .unwrap();
        match irreducibility_tag(&c) {
            IrreducibilityTag::BuildUpChain(order) => assert_eq!(order.len(), 3),
            other => panic!("expected a build-up chain, got {other:?}"),
        }
    }
}
