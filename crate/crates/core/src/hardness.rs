//! The grid-embedding pipeline: every matroid appears, up to restriction, as
//! a matroid reached from a grid hypergraph by α₁/α₂-transformations.
//!
//! The construction follows the proof shape exactly: a dedicated branch for
//! rank ≤ 1 on a 2×ℓ grid, and for rank t−1 ≥ 2 the ladder of cross-set
//! clutters `Λ_0, …, Λ_{t−1}` on a 5×ℓ grid, followed by the column-pair
//! step, the singleton step and a final α₂ closure. Every stage is checked
//! against its independently-computed expected clutter, and the restriction
//! isomorphism is verified exactly before anything is returned.

use crate::alpha::{alpha1, alpha2, is_matroid_clutter, StepKind, TransformStep};
use crate::clutter::{min_family, Clutter};
use crate::error::{Error, Result};
use crate::hypergraph::{delta_grid, grid_coordinates, GridShape};
use crate::matroid::Matroid;
use crate::subset::{k_subsets, GroundSet, Subset};

/// How the input matroid sits inside the grid.
#[derive(Debug, Clone)]
pub struct GridEmbedding {
    pub shape: GridShape,
    /// `relabel[i-1]` = grid column carrying original element `i`.
    pub relabel: Vec<u32>,
    /// Grid labels of the row-1 cells of the first `n` columns.
    pub restriction_cells: Subset,
}

/// Outcome of the pipeline: the reached matroid, its embedding data, the
/// transformation trace and the verified restriction.
#[derive(Debug)]
pub struct HardnessOutcome {
    pub embedding: GridEmbedding,
    pub matroid: Matroid,
    pub trace: Vec<TransformStep>,
    /// `matroid` restricted to the row-1 cells of the first `n` columns,
    /// relabeled; equals the loop-sorted relabeling of the input.
    pub restriction: Matroid,
}

/// Driver state: applies moves, records the trace.
struct Driver {
    state: Clutter,
    trace: Vec<TransformStep>,
}

impl Driver {
    fn new(state: Clutter) -> Self {
        Driver {
            state,
            trace: Vec::new(),
        }
    }

    fn apply_alpha1(&mut self, a1: Subset, a2: Subset) -> Result<()> {
        let input_key = self.state.canonical_key();
        let next = alpha1(&self.state, a1, a2)?;
        let output_key = next.canonical_key();
        if input_key == output_key {
            return Err(Error::VerificationFailed(format!(
                "alpha1({a1}, {a2}) was a no-op"
            )));
        }
        self.trace.push(TransformStep {
            kind: StepKind::Alpha1 { a1, a2 },
            input_key,
            output_key,
        });
        self.state = next;
        Ok(())
    }

    fn apply_alpha2(&mut self) {
        let input_key = self.state.canonical_key();
        let next = alpha2(&self.state);
        let output_key = next.canonical_key();
        self.trace.push(TransformStep {
            kind: StepKind::Alpha2,
            input_key,
            output_key,
        });
        self.state = next;
    }

    fn expect_state(&self, expected: &Clutter, stage: &str) -> Result<()> {
        if self.state.edges() != expected.edges() {
            return Err(Error::VerificationFailed(format!(
                "{stage}: clutter does not match the expected construction"
            )));
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Definitions attached to a rank-(t-1) input matroid
// ---------------------------------------------------------------------------

/// `M'` and the grid parameters for a matroid of rank `t-1 >= 2`, with the
/// loops moved to the back so they occupy columns `n-c+1..=n'`.
struct GeneralRoute {
    n: u32,
    t: u32,
    c: u32,
    ell: u32,
    shape: GridShape,
    sigma: Vec<u32>,
    /// circuits of `M'` on `[n']` (relabeled input plus the added loops)
    m_prime: Vec<Subset>,
    m_prime_loops: Subset,
}

impl GeneralRoute {
    fn new(m: &Matroid) -> Result<Self> {
        let rank = m.rank_full();
        if rank < 2 {
            return Err(Error::ParameterRange(format!(
                "general route needs rank >= 2, got {rank}"
            )));
        }
        let t = rank + 1;
        let n = m.ground_size();
        let loops = m.loops();
        let c = loops.len();
        let c_prime = c.max(t - 1);
        let n_prime = n + c_prime - c;
        let ell = n_prime + 2 * (t - 2);
        let shape = GridShape::new(5, ell, 3, t)?;
        GroundSet::new_extended(shape.cells())?;
        // loops last, order preserved within each group
        let mut sigma = vec![0u32; n as usize];
        let mut next = 1u32;
        for i in 1..=n {
            if !loops.contains(i) {
                sigma[(i - 1) as usize] = next;
                next += 1;
            }
        }
        for i in 1..=n {
            if loops.contains(i) {
                sigma[(i - 1) as usize] = next;
                next += 1;
            }
        }
        let m_rel = m.relabel(&sigma);
        let mut m_prime: Vec<Subset> = m_rel.circuits().to_vec();
        for j in (n + 1)..=n_prime {
            m_prime.push(Subset::singleton(j));
        }
        let m_prime = min_family(m_prime);
        let m_prime_loops =
            Subset::from_labels(&((n - c + 1)..=n_prime).collect::<Vec<_>>());
        Ok(GeneralRoute {
            n,
            t,
            c,
            ell,
            shape,
            sigma,
            m_prime,
            m_prime_loops,
        })
    }

    fn cell(&self, i: u32, j: u32) -> u32 {
        self.shape.cell(i, j)
    }

    /// Lift a set of column indices to row-`i` cells.
    fn lift(&self, i: u32, cols: Subset) -> Subset {
        Subset::from_labels(&cols.iter().map(|j| self.cell(i, j)).collect::<Vec<_>>())
    }

    /// Circuits of `M⁺` on `[ℓ]`: the circuits of `M'` plus the `t`-subsets
    /// of `[ℓ]` containing none of them.
    fn m_plus_circuits(&self) -> Vec<Subset> {
        let mut out = self.m_prime.clone();
        for t_set in k_subsets(Subset::full(self.ell), self.t) {
            if !self.m_prime.iter().any(|c| c.is_subset_of(&t_set)) {
                out.push(t_set);
            }
        }
        min_family(out)
    }

    /// The clutter `Λ_p(M)` built directly from its five member classes.
    fn lambda_p(&self, p: u32) -> Clutter {
        let coords = grid_coordinates(self.shape);
        let mut family: Vec<Subset> = Vec::new();
        // (1) 3-subsets of columns
        for col in &coords.cols {
            family.extend(k_subsets(*col, 3));
        }
        // (2) t-subsets of rows
        for row in &coords.rows {
            family.extend(k_subsets(*row, self.t));
        }
        // (3) circuits of M' of size >= t-p, on row 1
        for c in &self.m_prime {
            if c.len() >= self.t - p {
                family.push(self.lift(1, *c));
            }
        }
        // (4) A ∪ {x}: A ⊆ [ℓ-2p] of size t-p-1 containing exactly one
        //     circuit of M', x one of the two spare columns
        if p >= 1 && self.t - p >= 2 {
            let window = Subset::full(self.ell - 2 * p);
            for a in k_subsets(window, self.t - p - 1) {
                let count = self
                    .m_prime
                    .iter()
                    .filter(|c| c.is_subset_of(&a))
                    .count();
                if count == 1 {
                    for x in [self.ell - 2 * p + 1, self.ell - 2 * p + 2] {
                        family.push(self.lift(1, a.with(x)));
                    }
                }
            }
        }
        // (5) cross sets H_i ∪ K_j
        for i in 1..=self.shape.k {
            for j in 1..=self.ell {
                let h_pool = coords.rows[(i - 1) as usize].minus(coords.cols[(j - 1) as usize]);
                let k_pool = coords.cols[(j - 1) as usize].minus(coords.rows[(i - 1) as usize]);
                for h in k_subsets(h_pool, self.t - 1) {
                    for kk in k_subsets(k_pool, 2) {
                        family.push(h.union(kk));
                    }
                }
            }
        }
        Clutter::from_antichain(
            self.shape.cells(),
            self.t.max(3),
            min_family(family),
        )
    }

    /// The `Γ`-additions that take `Λ_{p-1}` to `Λ_p`, in canonical order.
    fn gamma_sets(&self, p: u32) -> Vec<Subset> {
        let mut out: Vec<Subset> = self
            .m_prime
            .iter()
            .filter(|c| c.len() == self.t - p)
            .copied()
            .collect();
        if self.t - p >= 2 {
            let window = Subset::full(self.ell - 2 * p);
            for a in k_subsets(window, self.t - p - 1) {
                let count = self
                    .m_prime
                    .iter()
                    .filter(|c| c.is_subset_of(&a))
                    .count();
                if count == 1 {
                    for x in [self.ell - 2 * p + 1, self.ell - 2 * p + 2] {
                        out.push(a.with(x));
                    }
                }
            }
        }
        min_family(out)
    }

    /// Expected clutter after the column-pair step.
    fn expected_after_pairs(&self) -> Clutter {
        let mut family: Vec<Subset> = Vec::new();
        for j in 1..=self.ell {
            for m1 in 1..=5u32 {
                for m2 in (m1 + 1)..=5 {
                    if m1 == 1 && self.m_prime_loops.contains(j) {
                        continue;
                    }
                    family.push(Subset::from_labels(&[self.cell(m1, j), self.cell(m2, j)]));
                }
            }
        }
        for c in self.m_plus_circuits() {
            family.push(self.lift(1, c));
        }
        let coords = grid_coordinates(self.shape);
        for i in 2..=5u32 {
            family.extend(k_subsets(coords.rows[(i - 1) as usize], self.t));
        }
        Clutter::from_antichain(self.shape.cells(), self.t.max(3), min_family(family))
    }

    /// Expected clutter after the singleton step.
    fn expected_after_singles(&self) -> Clutter {
        let mut family: Vec<Subset> = Vec::new();
        for i in 2..=5u32 {
            for j in 1..=self.ell {
                if !self.m_prime_loops.contains(j) {
                    family.push(Subset::singleton(self.cell(i, j)));
                }
            }
        }
        for j in self.m_prime_loops.iter() {
            for m1 in 2..=5u32 {
                for m2 in (m1 + 1)..=5 {
                    family.push(Subset::from_labels(&[self.cell(m1, j), self.cell(m2, j)]));
                }
            }
        }
        // t-subsets of the loop-column cells of each lower row
        for i in 2..=5u32 {
            let loop_cells = self.lift(i, self.m_prime_loops);
            family.extend(k_subsets(loop_cells, self.t));
        }
        for c in self.m_plus_circuits() {
            family.push(self.lift(1, c));
        }
        Clutter::from_antichain(self.shape.cells(), self.t.max(3), min_family(family))
    }
}

// ---------------------------------------------------------------------------
// Public operations
// ---------------------------------------------------------------------------

/// The clutter `Λ_p(M)` for a matroid of rank `t-1 >= 2` (so `t >= 3`).
pub fn lambda_p(m: &Matroid, p: u32) -> Result<Clutter> {
    let route = GeneralRoute::new(m)?;
    if p > route.t - 1 {
        return Err(Error::ParameterRange(format!(
            "p must lie in 0..={}, got {p}",
            route.t - 1
        )));
    }
    Ok(route.lambda_p(p))
}

/// Run the full pipeline on any matroid. The returned matroid is reached
/// from `Δ^{s,t}` by the recorded α₁/α₂ steps, and its restriction to the
/// row-1 cells of the first `n` columns is isomorphic to the input (equal to
/// the loop-sorted relabeling, which is checked exactly).
pub fn hardness_pipeline(m: &Matroid) -> Result<HardnessOutcome> {
    if m.rank_full() <= 1 {
        rank_le1_pipeline(m)
    } else {
        general_pipeline(m)
    }
}

fn rank_le1_pipeline(m: &Matroid) -> Result<HardnessOutcome> {
    let n = m.ground_size();
    let loops = m.loops();
    let c = loops.len();
    // max{c+1, n} per the construction; at least 2 so the 2×ℓ grid shape is
    // well-formed (the spare column changes nothing in the restriction)
    let ell = (c + 1).max(n).max(2);
    let shape = GridShape::new(2, ell, 2, 2)?;
    GroundSet::new_extended(shape.cells())?;
    // loops first here: the proof's α₁ steps make columns 1..c loops
    let mut sigma = vec![0u32; n as usize];
    let mut next = 1u32;
    for i in 1..=n {
        if loops.contains(i) {
            sigma[(i - 1) as usize] = next;
            next += 1;
        }
    }
    for i in 1..=n {
        if !loops.contains(i) {
            sigma[(i - 1) as usize] = next;
            next += 1;
        }
    }
    let m_rel = m.relabel(&sigma);

    let mut driver = Driver::new(delta_grid(shape).expanded());
    for i in 1..=c {
        let a1 = Subset::from_labels(&[shape.cell(1, i), shape.cell(1, ell)]);
        let a2 = Subset::from_labels(&[shape.cell(1, i), shape.cell(2, i)]);
        driver.apply_alpha1(a1, a2)?;
    }
    driver.apply_alpha2();
    finish(driver, shape, sigma, m_rel, n)
}

fn general_pipeline(m: &Matroid) -> Result<HardnessOutcome> {
    let route = GeneralRoute::new(m)?;
    let shape = route.shape;
    let m_rel = m.relabel(&route.sigma);

    // Λ_0 = α2(Δ^{s,t})
    let mut driver = Driver::new(delta_grid(shape).expanded());
    driver.apply_alpha2();
    driver.expect_state(&route.lambda_p(0), "lambda_0")?;

    // The ladder Λ_{p-1} -> Λ_p via α₁-steps. Intermediate states may carry
    // extra partial-circuit sets (their witnessing small circuits only arrive
    // at later levels and then absorb them), so the exact comparison against
    // the direct construction happens at the final level.
    for p in 1..=(route.t - 1) {
        for x in route.gamma_sets(p) {
            let (a1, a2) = if p == 1 {
                let mut spare = (1..=route.ell).filter(|j| !x.contains(*j));
                let m1 = spare.next().ok_or_else(|| {
                    Error::VerificationFailed("no spare column for the ladder".to_string())
                })?;
                let m2 = spare.next().ok_or_else(|| {
                    Error::VerificationFailed("no second spare column".to_string())
                })?;
                let k1 = Subset::from_labels(&[route.cell(2, m1), route.cell(3, m1)]);
                let k2 = Subset::from_labels(&[route.cell(4, m2), route.cell(5, m2)]);
                (route.lift(1, x).union(k1), route.lift(1, x).union(k2))
            } else {
                let x1 = route.ell - 2 * (p - 1) + 1;
                let x2 = route.ell - 2 * (p - 1) + 2;
                (route.lift(1, x.with(x1)), route.lift(1, x.with(x2)))
            };
            driver.apply_alpha1(a1, a2)?;
        }
    }
    driver.expect_state(
        &route.lambda_p(route.t - 1),
        &format!("lambda_{}", route.t - 1),
    )?;

    // column pairs not containing a loop of M'
    for j in 1..=route.ell {
        for m1 in 1..=5u32 {
            for m2 in (m1 + 1)..=5 {
                if m1 == 1 && route.m_prime_loops.contains(j) {
                    continue;
                }
                let x = Subset::from_labels(&[route.cell(m1, j), route.cell(m2, j)]);
                let mut others = (2..=5u32).filter(|r| *r != m1 && *r != m2);
                let m3 = others.next().expect("two spare rows exist");
                let m4 = others.next().expect("two spare rows exist");
                // disjoint column supports for the two cross-set arms
                let mut cols = (1..=route.ell).filter(|cj| *cj != j);
                let k3_cols: Vec<u32> = cols.by_ref().take((route.t - 1) as usize).collect();
                let k4_cols: Vec<u32> = cols.take((route.t - 1) as usize).collect();
                if k4_cols.len() < (route.t - 1) as usize {
                    return Err(Error::VerificationFailed(
                        "not enough columns for disjoint cross sets".to_string(),
                    ));
                }
                let k3 = Subset::from_labels(
                    &k3_cols.iter().map(|cj| route.cell(m3, *cj)).collect::<Vec<_>>(),
                );
                let k4 = Subset::from_labels(
                    &k4_cols.iter().map(|cj| route.cell(m4, *cj)).collect::<Vec<_>>(),
                );
                driver.apply_alpha1(x.union(k3), x.union(k4))?;
            }
        }
    }
    driver.expect_state(&route.expected_after_pairs(), "column pairs")?;

    // singletons at the non-loop columns of the lower rows
    for i in 2..=5u32 {
        for j in 1..=route.ell {
            if route.m_prime_loops.contains(j) {
                continue;
            }
            let loop_cols: Vec<u32> = ((route.n - route.c + 1)
                ..=(route.n - route.c + route.t - 1))
                .collect();
            let a1 = Subset::from_labels(
                &std::iter::once(route.cell(i, j))
                    .chain(loop_cols.iter().map(|mj| route.cell(i, *mj)))
                    .collect::<Vec<_>>(),
            );
            let a2 = Subset::from_labels(&[route.cell(i, j), route.cell(1, j)]);
            driver.apply_alpha1(a1, a2)?;
        }
    }
    driver.expect_state(&route.expected_after_singles(), "singletons")?;

    // α₂ closure to the matroid
    let mut rounds = 0;
    loop {
        let before = driver.state.canonical_key();
        driver.apply_alpha2();
        if driver.state.canonical_key() == before {
            driver.trace.pop(); // drop the no-op record
            break;
        }
        rounds += 1;
        if rounds > 64 {
            return Err(Error::VerificationFailed(
                "alpha2 closure did not stabilize".to_string(),
            ));
        }
    }
    finish(driver, shape, route.sigma, m_rel, route.n)
}

/// Final checks shared by both branches: the state is a matroid clutter and
/// its restriction to the first `n` row-1 cells equals the relabeled input.
fn finish(
    driver: Driver,
    shape: GridShape,
    sigma: Vec<u32>,
    m_rel: Matroid,
    n: u32,
) -> Result<HardnessOutcome> {
    if !is_matroid_clutter(&driver.state) {
        return Err(Error::VerificationFailed(
            "final clutter is not a matroid circuit family".to_string(),
        ));
    }
    let matroid = Matroid::from_certified_circuits(shape.cells(), driver.state.edges());
    let restriction_cells =
        Subset::from_labels(&(1..=n).map(|j| shape.cell(1, j)).collect::<Vec<_>>());
    let restriction = matroid.restrict(restriction_cells);
    if restriction != m_rel {
        return Err(Error::VerificationFailed(
            "restriction to the first row does not match the relabeled input".to_string(),
        ));
    }
    Ok(HardnessOutcome {
        embedding: GridEmbedding {
            shape,
            relabel: sigma,
            restriction_cells,
        },
        matroid,
        trace: driver.trace,
        restriction,
    })
}

// ---------------------------------------------------------------------------
// The Fano route on the 7×7 grid
// ---------------------------------------------------------------------------

/// Fano line labels: row `i`'s surviving cells sit at the columns of `L_i`.
const FANO_LINES: [[u32; 3]; 7] = [
    [1, 2, 4],
    [1, 3, 6],
    [1, 5, 7],
    [2, 3, 5],
    [2, 6, 7],
    [3, 4, 7],
    [4, 5, 6],
];

/// Drive `Δ^{2,3}` on the 7×7 grid to a matroid whose simplification is the
/// Fano matroid: α₁-steps make every cell `(i,j)` with `j ∉ L_i` a loop, and
/// the α₂ closure fills in the Fano circuits on the surviving cells.
pub fn fano_route() -> Result<HardnessOutcome> {
    let shape = GridShape::new(7, 7, 2, 3)?;
    let mut driver = Driver::new(delta_grid(shape).expanded());
    let in_line = |i: u32, j: u32| FANO_LINES[(i - 1) as usize].contains(&j);
    for i in 1..=7u32 {
        for j in 1..=7u32 {
            if in_line(i, j) {
                continue;
            }
            // a row triple through (i,j) with both mates never-singled
            let mates: Vec<u32> = FANO_LINES[(i - 1) as usize][..2].to_vec();
            let a1 = Subset::from_labels(&[
                shape.cell(i, j),
                shape.cell(i, mates[0]),
                shape.cell(i, mates[1]),
            ]);
            // a column pair into a row that keeps column j
            let m = (1..=7u32)
                .find(|&r| r != i && in_line(r, j))
                .ok_or_else(|| {
                    Error::VerificationFailed("every column meets three lines".to_string())
                })?;
            let a2 = Subset::from_labels(&[shape.cell(i, j), shape.cell(m, j)]);
            driver.apply_alpha1(a1, a2)?;
        }
    }
    let mut rounds = 0;
    loop {
        let before = driver.state.canonical_key();
        driver.apply_alpha2();
        if driver.state.canonical_key() == before {
            driver.trace.pop();
            break;
        }
        rounds += 1;
        if rounds > 16 {
            return Err(Error::VerificationFailed(
                "alpha2 closure did not stabilize".to_string(),
            ));
        }
    }
    if !is_matroid_clutter(&driver.state) {
        return Err(Error::VerificationFailed(
            "Fano route did not end on a matroid clutter".to_string(),
        ));
    }
    let matroid = Matroid::from_certified_circuits(shape.cells(), driver.state.edges());
    let simplification = matroid.simplify().matroid;
    if simplification.is_isomorphic(&crate::fano_matroid()).is_none() {
        return Err(Error::VerificationFailed(
            "simplification is not the Fano matroid".to_string(),
        ));
    }
    let restriction_cells =
        Subset::from_labels(&(1..=7u32).map(|j| shape.cell(1, j)).collect::<Vec<_>>());
    let restriction = matroid.restrict(restriction_cells);
    Ok(HardnessOutcome {
        embedding: GridEmbedding {
            shape,
            relabel: (1..=7).collect(),
            restriction_cells,
        },
        matroid,
        trace: driver.trace,
        restriction,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sub(labels: &[u32]) -> Subset {
        Subset::from_labels(labels)
    }

    #[test]
    fn single_loop_pipeline() {
        let m = Matroid::new(GroundSet::new(1).unwrap(), vec![sub(&[1])]).unwrap();
        let out = hardness_pipeline(&m).unwrap();
        assert_eq!(out.embedding.shape.l, 2);
        assert_eq!(out.restriction, m);
    }

    #[test]
    fn single_free_element_pipeline() {
        let m = Matroid::free(1);
        let out = hardness_pipeline(&m).unwrap();
        assert_eq!(out.restriction, m);
    }

    #[test]
    fn rank1_with_mixed_loops() {
        // loops {2}, elements 1 and 3 parallel
        let m = Matroid::new(
            GroundSet::new(3).unwrap(),
            vec![sub(&[2]), sub(&[1, 3])],
        )
        .unwrap();
        let out = hardness_pipeline(&m).unwrap();
        // restriction equals the loop-sorted relabeling
        let expected = m.relabel(&out.embedding.relabel);
        assert_eq!(out.restriction, expected);
        assert!(out.restriction.is_isomorphic(&m).is_some());
    }

    #[test]
    fn u23_pipeline() {
        let m = Matroid::uniform(2, 3);
        let out = hardness_pipeline(&m).unwrap();
        assert_eq!(out.embedding.shape.k, 5);
        assert_eq!(out.embedding.shape.t, 3);
        assert_eq!(out.embedding.shape.l, 7);
        assert_eq!(out.restriction, m); // no loops: relabeling is identity
        assert!(!out.trace.is_empty());
    }

    #[test]
    fn rank2_with_loop_pipeline() {
        // loops force the relabeling that moves them behind the non-loops
        let m = Matroid::new(
            GroundSet::new(4).unwrap(),
            vec![sub(&[1]), sub(&[2, 3, 4])],
        )
        .unwrap();
        let out = hardness_pipeline(&m).unwrap();
        let expected = m.relabel(&out.embedding.relabel);
        assert_eq!(out.restriction, expected);
        assert!(out.restriction.is_isomorphic(&m).is_some());
        // loops sit in the trailing columns
        assert_eq!(out.embedding.relabel, vec![4, 1, 2, 3]);
    }

    #[test]
    fn lambda_p_rejects_low_rank_and_bad_p() {
        let m = Matroid::new(GroundSet::new(2).unwrap(), vec![sub(&[1, 2])]).unwrap();
        assert!(lambda_p(&m, 0).is_err()); // rank 1
        let u23 = Matroid::uniform(2, 3);
        assert!(lambda_p(&u23, 3).is_err()); // p > t-1 = 2
    }

    #[test]
    fn lambda_zero_is_alpha2_of_grid() {
        let m = Matroid::uniform(2, 3);
        let l0 = lambda_p(&m, 0).unwrap();
        let grid = delta_grid(GridShape::new(5, 7, 3, 3).unwrap());
        assert_eq!(l0.edges(), alpha2(&grid.expanded()).edges());
    }

    #[test]
    fn lambda_p_contains_large_circuits() {
        // every circuit of M' of size >= t-p is a member
        let m = Matroid::uniform(2, 3); // t = 3, circuits of M' = {123}
        let route_l1 = lambda_p(&m, 1).unwrap();
        let lifted = sub(&[1, 6, 11]); // cells (1,1),(1,2),(1,3) on the 5-row grid
        assert!(route_l1.edges().contains(&lifted));
        // p = t-1: the spare-column class is empty, loops included as singletons
        let l2 = lambda_p(&m, 2).unwrap();
        assert!(l2.edges().iter().any(|e| e.len() == 1));
    }
}
