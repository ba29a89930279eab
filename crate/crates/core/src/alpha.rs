//! The clutter-transformation machinery: `I_Λ(B)`, the three α-moves, the
//! matroid-circuits criterion, and the breadth-first search that reaches
//! every minimally dependent matroid of a clutter.

use std::collections::{HashSet, VecDeque};

use crate::clutter::{min_family, Clutter};
use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::oracle::canonical_matroid_cmp;
use crate::subset::Subset;

/// `I_Λ(B)`: the intersection of all edges contained in `B`. When no edge is
/// contained in `B` the intersection is over the empty family; the convention
/// here is the full ground set, so that the matroid criterion below reads
/// uniformly.
pub fn i_lambda(edges: &[Subset], n: u32, b: Subset) -> Subset {
    let mut acc = Subset::full(n);
    for e in edges {
        if e.is_subset_of(&b) {
            acc = acc.inter(*e);
            if acc.is_empty() {
                break;
            }
        }
    }
    acc
}

/// `α₁(Λ; A1, A2) = min(Λ ∪ {A1 ∩ A2})` when `I_Λ(A1 ∪ A2)` is nonempty,
/// `Λ` unchanged otherwise. `A1` and `A2` must be distinct members.
pub fn alpha1(clutter: &Clutter, a1: Subset, a2: Subset) -> Result<Clutter> {
    let edges = clutter.edges();
    if a1 == a2 {
        return Err(Error::NotAMember(format!("{a1} given twice")));
    }
    for a in [a1, a2] {
        if !edges.contains(&a) {
            return Err(Error::NotAMember(format!("{a}")));
        }
    }
    if i_lambda(&edges, clutter.ground_size(), a1.union(a2)).is_empty() {
        return Ok(clutter.expanded());
    }
    let mut family = edges;
    crate::clutter::insert_min(&mut family, a1.inter(a2));
    Ok(Clutter::from_antichain(
        clutter.ground_size(),
        clutter.ambient_d(),
        family,
    ))
}

/// `α₂(Λ)`: add every elimination set `(A1 ∪ A2) \ {x}` over pairs of
/// distinct members sharing `x`, then take minimal sets.
pub fn alpha2(clutter: &Clutter) -> Clutter {
    let edges = clutter.edges();
    let mut family = edges.clone();
    for (i, a1) in edges.iter().enumerate() {
        for a2 in edges.iter().skip(i + 1) {
            let common = a1.inter(*a2);
            if common.is_empty() {
                continue;
            }
            let union = a1.union(*a2);
            for x in common.iter() {
                family.push(union.without(x));
            }
        }
    }
    Clutter::from_antichain(
        clutter.ground_size(),
        clutter.ambient_d(),
        min_family(family),
    )
}

/// `α₃(Λ)`: add `(A1 ∪ A2) \ I_Λ(A1 ∪ A2)` over pairs of distinct members.
pub fn alpha3(clutter: &Clutter) -> Clutter {
    let edges = clutter.edges();
    let n = clutter.ground_size();
    let mut family = edges.clone();
    for (i, a1) in edges.iter().enumerate() {
        for a2 in edges.iter().skip(i + 1) {
            let union = a1.union(*a2);
            let i_val = i_lambda(&edges, n, union);
            family.push(union.minus(i_val));
        }
    }
    Clutter::from_antichain(
        clutter.ground_size(),
        clutter.ambient_d(),
        min_family(family),
    )
}

/// A clutter is the circuit family of a matroid iff `I_Λ(A1 ∪ A2) = ∅` for
/// every pair of distinct members.
///
/// Clutters carrying the implicit `(d+1)`-layer get a structural shortcut:
/// any set of size at least `d+1` contains an edge, so for pairs whose union
/// has size at least `d+2` the criterion comes for free (take two disjoint-
/// intersection candidates inside the union). Only pairs of explicit edges
/// with small unions need the direct scan.
pub fn is_matroid_clutter(clutter: &Clutter) -> bool {
    let n = clutter.ground_size();
    if clutter.has_implicit_top() {
        let d = clutter.ambient_d();
        let edges = clutter.explicit_edges();
        // explicit-pair criterion, only where the union stays small
        for (i, a1) in edges.iter().enumerate() {
            for a2 in edges.iter().skip(i + 1) {
                let union = a1.union(*a2);
                if union.len() >= d + 2 {
                    continue;
                }
                if !i_lambda_implicit(clutter, union).is_empty() {
                    return false;
                }
            }
        }
        // pairs with union of size >= d+2: I contains only elements common to
        // every contained edge; the (d+1)-subsets of the union alone already
        // intersect to the empty set whenever the union has >= d+2 elements,
        // and each of them is an edge or contains one.
        true
    } else {
        let edges = clutter.explicit_edges();
        for (i, a1) in edges.iter().enumerate() {
            for a2 in edges.iter().skip(i + 1) {
                if !i_lambda(edges, n, a1.union(*a2)).is_empty() {
                    return false;
                }
            }
        }
        true
    }
}

/// `I_Λ(B)` for an implicit-top clutter without expanding the top layer.
fn i_lambda_implicit(clutter: &Clutter, b: Subset) -> Subset {
    let n = clutter.ground_size();
    let d = clutter.ambient_d();
    let mut acc = Subset::full(n);
    let mut any = false;
    for e in clutter.explicit_edges() {
        if e.is_subset_of(&b) {
            acc = acc.inter(*e);
            any = true;
        }
    }
    if b.len() >= d + 1 {
        // the implicit (d+1)-subsets of b that contain no explicit edge
        for top in crate::subset::k_subsets(b, d + 1) {
            if !clutter.explicit_edges().iter().any(|e| e.is_subset_of(&top)) {
                acc = acc.inter(top);
                any = true;
                if acc.is_empty() {
                    return acc;
                }
            }
        }
    }
    if any {
        acc
    } else {
        Subset::full(n)
    }
}

/// One recorded transformation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformStep {
    pub kind: StepKind,
    pub input_key: u64,
    pub output_key: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StepKind {
    Alpha1 { a1: Subset, a2: Subset },
    Alpha2,
    Alpha3,
}

/// Search limits for [`search_min_dependent`].
#[derive(Debug, Clone, Copy)]
pub struct SearchLimits {
    pub max_states: usize,
    pub max_depth: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_states: 200_000,
            max_depth: 64,
        }
    }
}

/// Result of the transformation search.
#[derive(Debug)]
pub struct SearchOutcome {
    /// Dependency-minimal matroids among the terminal clutters.
    pub minimal: Vec<Matroid>,
    /// All terminal matroids, including dominated ones, when requested.
    pub all_terminal: Vec<Matroid>,
    pub states_explored: usize,
    pub complete: bool,
}

/// Explore the closure of `{Λ}` under α₁/α₂/α₃ breadth-first, collect the
/// clutters that are matroid circuit families, and return the dependency-
/// minimal ones. When the search finishes within the budget the minimal list
/// is exactly the set of minimally dependent matroids for `Λ`.
pub fn search_min_dependent(start: &Clutter, limits: SearchLimits) -> Result<SearchOutcome> {
    if start.edge_count() == 0 {
        return Err(Error::ParameterRange("empty clutter".to_string()));
    }
    let start = start.expanded();
    let mut seen: HashSet<u64> = HashSet::new();
    let mut queue: VecDeque<(Clutter, usize)> = VecDeque::new();
    let mut terminal: Vec<Matroid> = Vec::new();
    let mut explored = 0usize;
    let mut complete = true;
    seen.insert(start.canonical_key());
    queue.push_back((start, 0));

    while let Some((state, depth)) = queue.pop_front() {
        explored += 1;
        if explored > limits.max_states {
            complete = false;
            break;
        }
        if is_matroid_clutter(&state) {
            terminal.push(Matroid::from_certified_circuits(
                state.ground_size(),
                state.edges(),
            ));
            continue; // α-moves fix matroid clutters
        }
        if depth >= limits.max_depth {
            complete = false;
            continue;
        }
        let push = |next: Clutter, queue: &mut VecDeque<(Clutter, usize)>,
                    seen: &mut HashSet<u64>| {
            let key = next.canonical_key();
            if seen.insert(key) {
                queue.push_back((next, depth + 1));
            }
        };
        let edges = state.edges();
        for (i, a1) in edges.iter().enumerate() {
            for a2 in edges.iter().skip(i + 1) {
                let next = alpha1(&state, *a1, *a2)?;
                if next.edges() != edges {
                    push(next, &mut queue, &mut seen);
                }
            }
        }
        let next = alpha2(&state);
        if next.edges() != edges {
            push(next, &mut queue, &mut seen);
        }
        let next = alpha3(&state);
        if next.edges() != edges {
            push(next, &mut queue, &mut seen);
        }
    }

    // dedupe terminals and filter to the dependency-minimal ones
    let mut all_terminal: Vec<Matroid> = Vec::new();
    for m in terminal {
        if !all_terminal.contains(&m) {
            all_terminal.push(m);
        }
    }
    let mut minimal: Vec<Matroid> = Vec::new();
    for m in &all_terminal {
        if minimal
            .iter()
            .any(|k: &Matroid| k.dependency_leq(m).unwrap_or(false))
        {
            continue;
        }
        minimal.retain(|k| !m.dependency_leq(k).unwrap_or(false));
        minimal.push(m.clone());
    }
    minimal.sort_by(canonical_matroid_cmp);
    all_terminal.sort_by(canonical_matroid_cmp);
    if !complete {
        return Err(Error::BudgetExhausted { explored });
    }
    Ok(SearchOutcome {
        minimal,
        all_terminal,
        states_explored: explored,
        complete,
    })
}
