//! Constructive exact realizations.
//!
//! Genericity ("in general position", "freely") is always realized the same
//! way: sample small integers, verify the resulting dependence pattern
//! exactly, and resample over a growing range on failure. Success yields a
//! rational witness; running out of retries is reported as inconclusive and
//! never as a proof of non-realizability.

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::clutter::Clutter;
use crate::config::{looped_configuration, set_loops, Configuration};
use crate::error::{Error, Result};
use crate::forest::{clouds, matroid_from_collection, Collection};
use crate::hypergraph::{delta_grid, Forest, GridShape};
use crate::matroid::{Extension, Matroid};
use crate::ratmat::{
    line_meet, matroid_of_matrix, scale_into_ball, verify_realization, Rational, RationalMatrix,
};
use crate::subset::Subset;

fn rand_int(rng: &mut ChaCha8Rng, range: i64) -> Rational {
    let v = rng.random_range(-range..=range);
    BigRational::from_integer(v.into())
}

fn rand_nonzero(rng: &mut ChaCha8Rng, range: i64) -> Rational {
    loop {
        let v = rand_int(rng, range);
        if !v.is_zero() {
            return v;
        }
    }
}

fn rand_vec(rng: &mut ChaCha8Rng, d: usize, range: i64) -> Vec<Rational> {
    (0..d).map(|_| rand_int(rng, range)).collect()
}

// ---------------------------------------------------------------------------
// Build plans
// ---------------------------------------------------------------------------

/// One growth step of a build plan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PlanStep {
    Loop,
    Coloop,
    FreeToRank3Flat,
    FreeToLineThrough(u32, u32),
    ParallelTo(u32),
}

/// An ordered list of growth steps; replaying them builds a matroid together
/// with a verified realization.
#[derive(Debug, Clone, Default)]
pub struct BuildPlan {
    pub steps: Vec<PlanStep>,
}

/// Replay a plan step by step. Coloops grow the matrix by a row and a column
/// (all zero except the shared corner); free additions sample inside the
/// target flat. Every prefix is verified exactly.
pub fn realize_by_plan(plan: &BuildPlan, seed: u64) -> Result<(Matroid, RationalMatrix)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut matroid = Matroid::free(0);
    let mut matrix = RationalMatrix::zero(0, 0);
    for (idx, step) in plan.steps.iter().enumerate() {
        let n = matroid.ground_size();
        match step {
            PlanStep::Loop => {
                let mut circuits = matroid.circuits().to_vec();
                circuits.push(Subset::singleton(n + 1));
                matroid = Matroid::from_certified_circuits(n + 1, circuits);
                matrix.push_column(&vec![Rational::zero(); matrix.rows()]);
            }
            PlanStep::Coloop => {
                matroid = matroid.extend(Extension::Coloop)?;
                // block construction: new row and column, 1 in the corner
                let d = matrix.rows();
                let mut next = RationalMatrix::zero(d + 1, n as usize + 1);
                for r in 0..d {
                    for c in 0..n as usize {
                        next.set(r, c, matrix.get(r, c).clone());
                    }
                }
                next.set(d, n as usize, Rational::one());
                matrix = next;
            }
            PlanStep::FreeToRank3Flat => {
                let full = Subset::full(n);
                if matroid.rank(full) != 3 {
                    return Err(Error::ParameterRange(format!(
                        "step {idx}: FreeToRank3Flat needs a rank-3 matroid"
                    )));
                }
                matroid = matroid.extend(Extension::FreeToFlat(full))?;
                sample_column_in_span(
                    &mut matrix,
                    &(1..=n).collect::<Vec<_>>(),
                    &matroid,
                    &mut rng,
                )?;
            }
            PlanStep::FreeToLineThrough(a, b) => {
                let flat = matroid.closure(Subset::from_labels(&[*a, *b]));
                if matroid.rank(flat) != 2 {
                    return Err(Error::ParameterRange(format!(
                        "step {idx}: {a} and {b} do not span a line"
                    )));
                }
                matroid = matroid.extend(Extension::FreeToFlat(flat))?;
                sample_column_in_span(&mut matrix, &[*a, *b], &matroid, &mut rng)?;
            }
            PlanStep::ParallelTo(x) => {
                let flat = matroid.closure(Subset::singleton(*x));
                matroid = matroid.extend(Extension::FreeToFlat(flat))?;
                sample_column_in_span(&mut matrix, &[*x], &matroid, &mut rng)?;
            }
        }
    }
    if !verify_realization(&matrix, &matroid)? {
        return Err(Error::VerificationFailed(
            "replayed plan does not realize its matroid".to_string(),
        ));
    }
    Ok((matroid, matrix))
}

/// Append a column sampled from the span of the given columns, resampling
/// until the grown matrix realizes the grown matroid.
fn sample_column_in_span(
    matrix: &mut RationalMatrix,
    span_cols: &[u32],
    target: &Matroid,
    rng: &mut ChaCha8Rng,
) -> Result<()> {
    let d = matrix.rows();
    let base = matrix.clone();
    let mut range = 4i64;
    for _attempt in 0..60 {
        let mut col = vec![Rational::zero(); d];
        for &c in span_cols {
            let coeff = rand_nonzero(rng, range);
            for (r, item) in col.iter_mut().enumerate() {
                *item += &coeff * base.get(r, (c - 1) as usize);
            }
        }
        let mut candidate = base.clone();
        candidate.push_column(&col);
        if verify_realization(&candidate, target)? {
            *matrix = candidate;
            return Ok(());
        }
        range = range.saturating_mul(2);
    }
    Err(Error::RetryBudgetExhausted(
        "free placement inside a flat".to_string(),
    ))
}

// ---------------------------------------------------------------------------
// Forest matroid realizations
// ---------------------------------------------------------------------------

/// A verified 3-row rational realization of the matroid `M_S` of a valid
/// collection, built element by element: cloud members become parallel
/// copies, witnesses of unblocked triples land on the spanned line, and
/// everything else is added as freely as the current rank allows.
pub fn realize_forest_matroid(
    g: &Forest,
    collection: &Collection,
    seed: u64,
    retry_budget: u32,
) -> Result<RationalMatrix> {
    let target = matroid_from_collection(g, collection)?;
    let n = g.vertex_count();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cloud_list = clouds(collection)?;
    let cloud_of = |v: u32| cloud_list.iter().position(|c| c.contains(v));

    let loops = collection.singletons;
    let mut order: Vec<u32> = loops.iter().collect();
    order.extend((1..=n).filter(|v| !loops.contains(*v)));

    let mut matrix = RationalMatrix::zero(3, n as usize);
    let mut placed = Subset::empty();
    for &v in &order {
        placed.insert(v);
        if loops.contains(v) {
            continue; // zero column
        }
        let expected = target.restrict(placed);
        let placed_cols: Vec<usize> = placed.iter().map(|x| (x - 1) as usize).collect();
        let mut done = false;
        let mut range = 4i64;
        for _attempt in 0..retry_budget.max(1) {
            let column = propose_column(
                v, placed, &matrix, &target, cloud_of, loops, &mut rng, range,
            );
            matrix.set_column((v - 1) as usize, &column);
            let sub = submatrix(&matrix, &placed_cols);
            if matroid_of_matrix(&sub, 4) == expected {
                done = true;
                break;
            }
            range = range.saturating_mul(2);
        }
        if !done {
            return Err(Error::RetryBudgetExhausted(format!(
                "placing vertex {v} of the collection matroid"
            )));
        }
    }
    if !verify_realization(&matrix, &target)? {
        return Err(Error::VerificationFailed(
            "final forest realization does not match its matroid".to_string(),
        ));
    }
    Ok(matrix)
}

fn submatrix(matrix: &RationalMatrix, cols: &[usize]) -> RationalMatrix {
    let rows = (0..matrix.rows())
        .map(|r| cols.iter().map(|&c| matrix.get(r, c).clone()).collect())
        .collect();
    RationalMatrix::from_rows(rows).expect("rectangular")
}

#[allow(clippy::too_many_arguments)]
fn propose_column(
    v: u32,
    placed: Subset,
    matrix: &RationalMatrix,
    target: &Matroid,
    cloud_of: impl Fn(u32) -> Option<usize>,
    loops: Subset,
    rng: &mut ChaCha8Rng,
    range: i64,
) -> Vec<Rational> {
    let earlier = placed.without(v).minus(loops);
    // parallel case: some earlier vertex shares v's cloud
    if let Some(cv) = cloud_of(v) {
        for w in earlier.iter() {
            if cloud_of(w) == Some(cv) {
                let coeff = rand_nonzero(rng, range);
                return matrix
                    .column((w - 1) as usize)
                    .iter()
                    .map(|x| x * &coeff)
                    .collect();
            }
        }
    }
    // collect the line constraints: placed independent pairs spanning a
    // plane that must contain v (deduplicated by span)
    let earlier_labels = earlier.labels();
    let mut planes: Vec<([Rational; 3], [Rational; 3])> = Vec::new();
    for (i, &w) in earlier_labels.iter().enumerate() {
        for &x in earlier_labels.iter().skip(i + 1) {
            if !target.is_dependent(Subset::from_labels(&[v, w, x])) {
                continue;
            }
            let cw = matrix.column((w - 1) as usize);
            let cx = matrix.column((x - 1) as usize);
            let gw = [cw[0].clone(), cw[1].clone(), cw[2].clone()];
            let gx = [cx[0].clone(), cx[1].clone(), cx[2].clone()];
            if !pair_independent(&gw, &gx) {
                continue; // the pair is itself dependent: no plane constraint
            }
            let duplicate = planes
                .iter()
                .any(|(h1, h2)| det_zero(&gw, h1, h2) && det_zero(&gx, h1, h2));
            if !duplicate {
                planes.push((gw, gx));
            }
        }
    }
    match planes.len() {
        0 => rand_vec(rng, 3, range.max(8)),
        1 => {
            // free on the single line
            let (g1, g2) = &planes[0];
            let (a, b) = (rand_nonzero(rng, range), rand_nonzero(rng, range));
            (0..3).map(|r| &a * &g1[r] + &b * &g2[r]).collect()
        }
        _ => {
            // v sits at the intersection of two placed lines
            let (g1, g2) = &planes[0];
            let (h1, h2) = &planes[1];
            match line_meet(g1, g2, h1, h2) {
                Ok(q) => {
                    let c = rand_nonzero(rng, range);
                    q.iter().map(|x| x * &c).collect()
                }
                Err(_) => rand_vec(rng, 3, range.max(8)),
            }
        }
    }
}

fn pair_independent(a: &[Rational; 3], b: &[Rational; 3]) -> bool {
    let cross = [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ];
    cross.iter().any(|x| !x.is_zero())
}

fn det_zero(v: &[Rational; 3], b: &[Rational; 3], c: &[Rational; 3]) -> bool {
    det3(v, b, c).is_zero()
}

// ---------------------------------------------------------------------------
// Grid matroids: the unique minimal matroid and its affine realization
// ---------------------------------------------------------------------------

fn check_grid_range(shape: GridShape, d: u32) -> Result<()> {
    let GridShape { k, l, s, t } = shape;
    if !(3 <= s && s <= t && t <= l && s <= k && t <= d && d + 3 <= s + t) {
        return Err(Error::ParameterRange(format!(
            "need 3 <= s <= t <= l, s <= k, t <= d <= s+t-3; got s={s}, t={t}, k={k}, l={l}, d={d}"
        )));
    }
    Ok(())
}

/// The clutter `min(Δ^{s,t} ∪ C([kl], d+1))` with its matroid certificate.
pub fn unique_minimal_clutter(shape: GridShape, d: u32) -> Result<Clutter> {
    check_grid_range(shape, d)?;
    let delta = delta_grid(shape);
    let padded = Clutter::with_implicit_top(delta.ground(), d, delta.explicit_edges().to_vec())?;
    if !crate::alpha::is_matroid_clutter(&padded) {
        // cannot happen in range: the padded family is always a circuit family
        return Err(Error::VerificationFailed(
            "padded grid clutter failed the matroid criterion".to_string(),
        ));
    }
    Ok(padded)
}

/// The unique minimal matroid for `Δ^{s,t}` in the range `t <= d <= s+t-3`:
/// its circuits are the padded clutter, and the clutter passing the matroid
/// criterion is the uniqueness certificate.
pub fn unique_minimal_circuits(shape: GridShape, d: u32) -> Result<Matroid> {
    let clutter = unique_minimal_clutter(shape, d)?;
    Ok(Matroid::from_certified_circuits(
        shape.cells(),
        clutter.edges(),
    ))
}

/// Exact Gauss-Jordan solve of `mat · x = rhs`: a particular solution and a
/// basis of the homogeneous solutions, or `None` when inconsistent.
fn solve_affine(
    mat: &[Vec<Rational>],
    rhs: &[Rational],
) -> Option<(Vec<Rational>, Vec<Vec<Rational>>)> {
    let rows = mat.len();
    let cols = if rows == 0 { 0 } else { mat[0].len() };
    let mut a: Vec<Vec<Rational>> = mat
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut row = r.clone();
            row.push(b.clone());
            row
        })
        .collect();
    let mut pivot_col_of_row = Vec::new();
    let mut r = 0usize;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].clone();
        for x in a[r].iter_mut() {
            *x = &*x / &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..=cols {
                    let sub = &f * &a[r][j];
                    a[i][j] = &a[i][j] - &sub;
                }
            }
        }
        pivot_col_of_row.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    // inconsistent?
    for i in r..rows {
        if !a[i][cols].is_zero() {
            return None;
        }
    }
    let pivot_set: std::collections::HashSet<usize> = pivot_col_of_row.iter().copied().collect();
    let mut particular = vec![Rational::zero(); cols];
    for (row, &pc) in pivot_col_of_row.iter().enumerate() {
        particular[pc] = a[row][cols].clone();
    }
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![Rational::zero(); cols];
        v[free] = Rational::one();
        for (row, &pc) in pivot_col_of_row.iter().enumerate() {
            v[pc] = -a[row][free].clone();
        }
        basis.push(v);
    }
    Some((particular, basis))
}

/// A `d × kl` affine realization (leading coordinate 1) of the unique
/// minimal grid matroid: each row sits in an affine subspace of rank `t-1`,
/// each column in one of rank `s-1`, cut out by random integer hyperplane
/// systems and verified exactly.
pub fn realize_grid_unique_minimal(
    shape: GridShape,
    d: u32,
    seed: u64,
    retry_budget: u32,
) -> Result<RationalMatrix> {
    let target = unique_minimal_circuits(shape, d)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dim = (d - 1) as usize; // affine coordinates
    let row_eqs = (d - shape.t + 1) as usize;
    let col_eqs = (d - shape.s + 1) as usize;
    let mut range = 4i64;
    for _attempt in 0..retry_budget.max(1) {
        let sample_system = |rng: &mut ChaCha8Rng, eqs: usize, range: i64| {
            let mat: Vec<Vec<Rational>> = (0..eqs).map(|_| rand_vec(rng, dim, range)).collect();
            let rhs: Vec<Rational> = (0..eqs).map(|_| rand_int(rng, range)).collect();
            (mat, rhs)
        };
        let rows_sys: Vec<_> = (0..shape.k)
            .map(|_| sample_system(&mut rng, row_eqs, range))
            .collect();
        let cols_sys: Vec<_> = (0..shape.l)
            .map(|_| sample_system(&mut rng, col_eqs, range))
            .collect();
        let mut matrix = RationalMatrix::zero(d as usize, shape.cells() as usize);
        let mut ok = true;
        'cells: for i in 1..=shape.k {
            for j in 1..=shape.l {
                let (ra, rb) = &rows_sys[(i - 1) as usize];
                let (ca, cb) = &cols_sys[(j - 1) as usize];
                let mut stacked = ra.clone();
                stacked.extend(ca.iter().cloned());
                let mut rhs = rb.clone();
                rhs.extend(cb.iter().cloned());
                let Some((particular, basis)) = solve_affine(&stacked, &rhs) else {
                    ok = false;
                    break 'cells;
                };
                // expected solution dimension s+t-d-2-1 = s+t-d-3
                if basis.len() != (shape.s + shape.t - d - 3) as usize {
                    ok = false;
                    break 'cells;
                }
                let mut point = particular;
                for b in &basis {
                    let c = rand_int(&mut rng, range);
                    for (x, bv) in point.iter_mut().zip(b) {
                        *x += &c * bv;
                    }
                }
                let col_index = (shape.cell(i, j) - 1) as usize;
                matrix.set(0, col_index, Rational::one());
                for (r, x) in point.into_iter().enumerate() {
                    matrix.set(r + 1, col_index, x);
                }
            }
        }
        if ok && verify_realization(&matrix, &target)? {
            return Ok(matrix);
        }
        range = range.saturating_mul(2).min(1 << 24);
    }
    Err(Error::RetryBudgetExhausted(
        "grid realization sampling".to_string(),
    ))
}

// ---------------------------------------------------------------------------
// The perturbation procedure
// ---------------------------------------------------------------------------

/// Perturb `A`, a point of the combinatorial closure of the (optionally
/// looped) forest-like configuration, into an exact realization at squared
/// distance below `eps²`.
///
/// The columns are rebuilt in line build-up order: each line's plane is
/// spanned by its (at most one) placed anchor and the most independent of its
/// original columns, points are projected onto their plane plus a shrinking
/// in-plane offset, and original loop columns landing on two lines are sent
/// along the exact meet of the two planes. Every candidate is verified
/// exactly; the offset scale halves until both the matroid and the distance
/// bound hold.
pub fn perturb_to_realization(
    a: &RationalMatrix,
    config: &Configuration,
    loops: Subset,
    eps: &Rational,
) -> Result<RationalMatrix> {
    if a.rows() != 3 {
        return Err(Error::ShapeMismatch(format!(
            "perturbation works on 3-row matrices, got {} rows",
            a.rows()
        )));
    }
    if a.cols() as u32 != config.point_count() {
        return Err(Error::ShapeMismatch(format!(
            "{} columns vs {} points",
            a.cols(),
            config.point_count()
        )));
    }
    if eps <= &Rational::zero() {
        return Err(Error::ParameterRange("eps must be positive".to_string()));
    }
    let target = set_loops(config, loops);
    let a_matroid = matroid_of_matrix(a, 4);
    if !target.dependency_leq(&a_matroid)? {
        return Err(Error::ParameterRange(
            "matrix is not in the combinatorial closure of the configuration".to_string(),
        ));
    }
    if &a_matroid == &target {
        return Ok(a.clone());
    }
    let looped = looped_configuration(config, loops);
    let n = config.point_count();
    for p in 1..=n {
        if !loops.contains(p) && looped.base.line_degree(p) > 2 {
            return Err(Error::ParameterRange(format!(
                "point {p} lies on more than two lines; perturbation needs every point on at most two"
            )));
        }
    }
    // line build-up order: peel lines meeting the rest in at most one point
    let lines = looped.base.lines().to_vec();
    let order = build_up_order(&lines).ok_or(Error::NotForestLike)?;

    let eps_sq = eps * eps;
    let mut rng = ChaCha8Rng::seed_from_u64(0x9e3779b97f4a7c15);
    let mut lambda = eps / BigRational::from_integer(4.into());
    for _attempt in 0..64 {
        if let Some(candidate) = try_perturb(a, &lines, &order, loops, n, &lambda, &mut rng)? {
            if matroid_of_matrix(&candidate, 4) == target
                && candidate.distance_sq(a)? < eps_sq
            {
                return Ok(candidate);
            }
        }
        lambda /= BigRational::from_integer(2.into());
    }
    Err(Error::RetryBudgetExhausted(
        "perturbation offsets shrank past the retry budget".to_string(),
    ))
}

/// Order the lines so each one meets the union of its predecessors in at
/// most one point; exists exactly for forest-like configurations.
fn build_up_order(lines: &[Subset]) -> Option<Vec<usize>> {
    let mut remaining: Vec<usize> = (0..lines.len()).collect();
    let mut peeled = Vec::new();
    while !remaining.is_empty() {
        let pos = remaining.iter().position(|&i| {
            let others: Subset = remaining
                .iter()
                .filter(|&&j| j != i)
                .fold(Subset::empty(), |acc, &j| acc.union(lines[j]));
            lines[i].inter(others).len() <= 1
        })?;
        let line = remaining.remove(pos);
        peeled.push(line);
    }
    peeled.reverse();
    Some(peeled)
}

fn column3(m: &RationalMatrix, p: u32) -> [Rational; 3] {
    let c = m.column((p - 1) as usize);
    [c[0].clone(), c[1].clone(), c[2].clone()]
}

fn rank2_pair(v1: &[Rational; 3], v2: &[Rational; 3]) -> bool {
    let cross = [
        &v1[1] * &v2[2] - &v1[2] * &v2[1],
        &v1[2] * &v2[0] - &v1[0] * &v2[2],
        &v1[0] * &v2[1] - &v1[1] * &v2[0],
    ];
    cross.iter().any(|x| !x.is_zero())
}

fn det3(a: &[Rational; 3], b: &[Rational; 3], c: &[Rational; 3]) -> Rational {
    &a[0] * (&b[1] * &c[2] - &b[2] * &c[1]) - &a[1] * (&b[0] * &c[2] - &b[2] * &c[0])
        + &a[2] * (&b[0] * &c[1] - &b[1] * &c[0])
}

/// Projection of `v` onto span(g1, g2) (g1, g2 independent), exactly.
fn project_onto_plane(
    v: &[Rational; 3],
    g1: &[Rational; 3],
    g2: &[Rational; 3],
) -> [Rational; 3] {
    let dot = |x: &[Rational; 3], y: &[Rational; 3]| -> Rational {
        &x[0] * &y[0] + &x[1] * &y[1] + &x[2] * &y[2]
    };
    let (a11, a12, a22) = (dot(g1, g1), dot(g1, g2), dot(g2, g2));
    let (b1, b2) = (dot(g1, v), dot(g2, v));
    let det = &a11 * &a22 - &a12 * &a12;
    let c1 = (&b1 * &a22 - &b2 * &a12) / &det;
    let c2 = (&b2 * &a11 - &b1 * &a12) / &det;
    [
        &c1 * &g1[0] + &c2 * &g2[0],
        &c1 * &g1[1] + &c2 * &g2[1],
        &c1 * &g1[2] + &c2 * &g2[2],
    ]
}

#[allow(clippy::too_many_arguments)]
fn try_perturb(
    a: &RationalMatrix,
    lines: &[Subset],
    order: &[usize],
    loops: Subset,
    n: u32,
    lambda: &Rational,
    rng: &mut ChaCha8Rng,
) -> Result<Option<RationalMatrix>> {
    let mut out = RationalMatrix::zero(3, n as usize);
    // `decided`: position fixed or deferred; `written`: column actually set
    let mut decided = loops;
    let mut written = loops;
    let on_two_lines = |p: u32| lines.iter().filter(|l| l.contains(p)).count() == 2;
    let offset = |rng: &mut ChaCha8Rng, g1: &[Rational; 3], g2: &[Rational; 3]| {
        let (c1, c2) = (rand_int(rng, 8), rand_int(rng, 8));
        let raw = [
            &c1 * &g1[0] + &c2 * &g2[0],
            &c1 * &g1[1] + &c2 * &g2[1],
            &c1 * &g1[2] + &c2 * &g2[2],
        ];
        let scaled = scale_into_ball(&raw, lambda);
        [scaled[0].clone(), scaled[1].clone(), scaled[2].clone()]
    };

    let mut planes: Vec<Option<([Rational; 3], [Rational; 3])>> = vec![None; lines.len()];
    let mut deferred: Vec<(u32, usize, usize)> = Vec::new(); // point, line_a, line_b

    for (step, &li) in order.iter().enumerate() {
        let line = lines[li];
        // anchor: the unique written non-loop point, if any
        let anchor = line.minus(loops).inter(written).min_label();
        let g1 = match anchor {
            Some(p) => column3(&out, p),
            None => {
                // most informative original direction on this line
                let mut best: Option<[Rational; 3]> = None;
                for p in line.minus(loops).iter() {
                    let v = column3(a, p);
                    if v.iter().any(|x| !x.is_zero()) {
                        best = Some(v);
                        break;
                    }
                }
                match best {
                    Some(v) => v,
                    None => {
                        let r = rand_vec(rng, 3, 8);
                        [r[0].clone(), r[1].clone(), r[2].clone()]
                    }
                }
            }
        };
        if g1.iter().all(|x| x.is_zero()) {
            return Ok(None); // degenerate anchor; retry with fresh offsets
        }
        // second generator: an original column independent of g1, else a
        // lambda-rotation
        let mut g2 = None;
        for p in line.minus(loops).iter() {
            let v = column3(a, p);
            if rank2_pair(&g1, &v) {
                g2 = Some(v);
                break;
            }
        }
        let mut g2 = match g2 {
            Some(v) => v,
            None => {
                let r = rand_vec(rng, 3, 8);
                let shift = scale_into_ball(&r, lambda);
                [
                    &g1[0] + &shift[0],
                    &g1[1] + &shift[1],
                    &g1[2] + &shift[2],
                ]
            }
        };
        // rotate until the plane is proper and distinct from earlier planes
        for _ in 0..20 {
            if rank2_pair(&g1, &g2) {
                let clash = order[..step].iter().any(|&lj| {
                    if let Some((h1, h2)) = &planes[lj] {
                        det3(&g1, h1, h2).is_zero() && det3(&g2, h1, h2).is_zero()
                    } else {
                        false
                    }
                });
                if !clash {
                    break;
                }
            }
            let r = rand_vec(rng, 3, 8);
            let shift = scale_into_ball(&r, lambda);
            g2 = [
                &g2[0] + &shift[0],
                &g2[1] + &shift[1],
                &g2[2] + &shift[2],
            ];
        }
        if !rank2_pair(&g1, &g2) {
            return Ok(None);
        }
        planes[li] = Some((g1.clone(), g2.clone()));

        // place the remaining points of this line
        for p in line.minus(loops).iter() {
            if decided.contains(p) {
                continue;
            }
            let a_col = column3(a, p);
            if a_col.iter().all(|x| x.is_zero()) && on_two_lines(p) {
                // original loop at a junction: send it along the meet of the
                // two planes once both exist
                let other = lines
                    .iter()
                    .position(|l| l.contains(p) && *l != line)
                    .expect("second line exists");
                deferred.push((p, li, other));
                decided.insert(p);
                continue;
            }
            let base = project_onto_plane(&a_col, &g1, &g2);
            let mut ok = false;
            for _try in 0..40 {
                let delta = offset(rng, &g1, &g2);
                let cand = [
                    &base[0] + &delta[0],
                    &base[1] + &delta[1],
                    &base[2] + &delta[2],
                ];
                if place_is_generic(&out, &cand, p, written, loops, lines) {
                    out.set_column((p - 1) as usize, &cand.to_vec());
                    ok = true;
                    break;
                }
            }
            if !ok {
                return Ok(None);
            }
            decided.insert(p);
            written.insert(p);
        }
    }
    // deferred loop repairs: exact meet directions, scaled small
    for (p, la, lb) in deferred {
        let (g1, g2) = planes[la].clone().expect("plane built");
        let (h1, h2) = match planes[lb].clone() {
            Some(pl) => pl,
            None => return Ok(None),
        };
        let q = match line_meet(&g1, &g2, &h1, &h2) {
            Ok(q) => q,
            Err(_) => return Ok(None),
        };
        let scaled = scale_into_ball(&q, lambda);
        let cand = [scaled[0].clone(), scaled[1].clone(), scaled[2].clone()];
        if !place_is_generic(&out, &cand, p, written, loops, lines) {
            return Ok(None);
        }
        out.set_column((p - 1) as usize, &cand.to_vec());
        written.insert(p);
    }
    // free points
    for p in 1..=n {
        if decided.contains(p) {
            continue;
        }
        let a_col = column3(a, p);
        let mut ok = false;
        for _try in 0..40 {
            let r = rand_vec(rng, 3, 8);
            let shift = scale_into_ball(&r, lambda);
            let cand = [
                &a_col[0] + &shift[0],
                &a_col[1] + &shift[1],
                &a_col[2] + &shift[2],
            ];
            if place_is_generic(&out, &cand, p, written, loops, lines) {
                out.set_column((p - 1) as usize, &cand.to_vec());
                ok = true;
                break;
            }
        }
        if !ok {
            return Ok(None);
        }
        decided.insert(p);
        written.insert(p);
    }
    Ok(Some(out))
}

/// Local genericity against the written columns: nonzero, not parallel to a
/// placed point, and no accidental collinear triple outside the lines.
fn place_is_generic(
    out: &RationalMatrix,
    cand: &[Rational; 3],
    p: u32,
    written: Subset,
    loops: Subset,
    lines: &[Subset],
) -> bool {
    if cand.iter().all(|x| x.is_zero()) {
        return false;
    }
    let others = written.minus(loops).without(p);
    for w in others.iter() {
        let cw = column3(out, w);
        if !rank2_pair(cand, &cw) {
            return false;
        }
    }
    let labels: Vec<u32> = others.iter().collect();
    for (i, &w) in labels.iter().enumerate() {
        for &x in labels.iter().skip(i + 1) {
            let allowed = lines
                .iter()
                .any(|l| l.contains(p) && l.contains(w) && l.contains(x));
            if !allowed {
                let cw = column3(out, w);
                let cx = column3(out, x);
                if det3(cand, &cw, &cx).is_zero() {
                    return false;
                }
            }
        }
    }
    true
}
