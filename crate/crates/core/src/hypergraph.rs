//! Constructors for the hypergraph families under study: consecutive forest
//! hypergraphs, grid hypergraphs, big-circuit padding and the conditional
//! independence labeling.

use crate::clutter::Clutter;
use crate::error::{Error, Result};
use crate::subset::{GroundSet, Subset};

/// An acyclic simple graph on `[n]`; acyclicity is checked at construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Forest {
    n: u32,
    edges: Vec<(u32, u32)>,
}

impl Forest {
    pub fn new(n: u32, edges: &[(u32, u32)]) -> Result<Self> {
        let ground = GroundSet::new_extended(n)?;
        let mut norm = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if !ground.contains_label(a) || !ground.contains_label(b) || a == b {
                return Err(Error::ParameterRange(format!("bad edge ({a},{b}) on [{n}]")));
            }
            norm.push((a.min(b), a.max(b)));
        }
        norm.sort_unstable();
        norm.dedup();
        let mut dsu = Dsu::new(n as usize);
        for &(a, b) in &norm {
            if !dsu.union(a as usize - 1, b as usize - 1) {
                return Err(Error::NotAForest);
            }
        }
        Ok(Forest { n, edges: norm })
    }

    pub fn vertex_count(&self) -> u32 {
        self.n
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn degree(&self, v: u32) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn neighbors(&self, v: u32) -> Vec<u32> {
        let mut out = Vec::new();
        for &(a, b) in &self.edges {
            if a == v {
                out.push(b);
            } else if b == v {
                out.push(a);
            }
        }
        out
    }

    pub fn has_edge(&self, a: u32, b: u32) -> bool {
        let e = (a.min(b), a.max(b));
        self.edges.binary_search(&e).is_ok()
    }

    /// Unique path between two vertices of the same component, as the vertex
    /// sequence from `a` to `b`; `None` when they are in different components.
    pub fn path(&self, a: u32, b: u32) -> Option<Vec<u32>> {
        if a == b {
            return Some(vec![a]);
        }
        let n = self.n as usize;
        let mut parent = vec![0u32; n];
        let mut seen = vec![false; n];
        let mut queue = std::collections::VecDeque::new();
        seen[a as usize - 1] = true;
        queue.push_back(a);
        while let Some(v) = queue.pop_front() {
            if v == b {
                let mut path = vec![b];
                let mut cur = b;
                while cur != a {
                    cur = parent[cur as usize - 1];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for w in self.neighbors(v) {
                if !seen[w as usize - 1] {
                    seen[w as usize - 1] = true;
                    parent[w as usize - 1] = v;
                    queue.push_back(w);
                }
            }
        }
        None
    }

    pub fn same_component(&self, a: u32, b: u32) -> bool {
        self.path(a, b).is_some()
    }

    /// Induced subgraph after deleting `removed`, keeping the labels.
    pub fn delete_vertices(&self, removed: Subset) -> Forest {
        Forest {
            n: self.n,
            edges: self
                .edges
                .iter()
                .filter(|&&(a, b)| !removed.contains(a) && !removed.contains(b))
                .copied()
                .collect(),
        }
    }

    /// All 2-paths (paths on three vertices) as vertex sets.
    pub fn two_paths(&self) -> Vec<Subset> {
        let mut out = Vec::new();
        for mid in 1..=self.n {
            let nbrs = self.neighbors(mid);
            for i in 0..nbrs.len() {
                for j in (i + 1)..nbrs.len() {
                    out.push(Subset::from_labels(&[nbrs[i], mid, nbrs[j]]));
                }
            }
        }
        out
    }
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    /// Returns false if `a` and `b` were already connected.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            false
        } else {
            self.parent[ra] = rb;
            true
        }
    }
}

/// Parameters of the grid hypergraph `Δ^{s,t}` on the `k × ℓ` index grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GridShape {
    pub k: u32,
    pub l: u32,
    pub s: u32,
    pub t: u32,
}

impl GridShape {
    pub fn new(k: u32, l: u32, s: u32, t: u32) -> Result<Self> {
        if k == 0 || l == 0 || s < 2 || t < 2 || s > k || t > l {
            return Err(Error::ParameterRange(format!(
                "grid shape needs 2 <= s <= k and 2 <= t <= l, got k={k}, l={l}, s={s}, t={t}"
            )));
        }
        Ok(GridShape { k, l, s, t })
    }

    pub fn cells(&self) -> u32 {
        self.k * self.l
    }

    /// The label in cell `(i, j)` (1-based): `(j-1)k + i`.
    pub fn cell(&self, i: u32, j: u32) -> u32 {
        (j - 1) * self.k + i
    }
}

/// The index matrix `Y` with its rows and columns.
#[derive(Debug, Clone)]
pub struct GridCoordinates {
    pub matrix: Vec<Vec<u32>>,
    pub rows: Vec<Subset>,
    pub cols: Vec<Subset>,
}

/// `Y_{i,j} = (j-1)k + i`, with `R_i` and `C_j` the row and column sets.
pub fn grid_coordinates(shape: GridShape) -> GridCoordinates {
    let (k, l) = (shape.k, shape.l);
    let mut matrix = vec![vec![0u32; l as usize]; k as usize];
    for i in 1..=k {
        for j in 1..=l {
            matrix[(i - 1) as usize][(j - 1) as usize] = shape.cell(i, j);
        }
    }
    let rows = (1..=k)
        .map(|i| Subset::from_labels(&(1..=l).map(|j| shape.cell(i, j)).collect::<Vec<_>>()))
        .collect();
    let cols = (1..=l)
        .map(|j| Subset::from_labels(&(1..=k).map(|i| shape.cell(i, j)).collect::<Vec<_>>()))
        .collect();
    GridCoordinates { matrix, rows, cols }
}

/// The consecutive forest hypergraph `min(P2(G) ∪ C([n], 4))`, with the
/// 4-subset layer kept implicit. Ambient dimension is 3.
pub fn delta_forest(g: &Forest) -> Clutter {
    let ground = GroundSet::new_extended(g.vertex_count()).expect("forest ground fits");
    Clutter::with_implicit_top(ground, 3, g.two_paths()).expect("2-paths have size 3")
}

/// The grid hypergraph: `t`-subsets of each row and `s`-subsets of each
/// column. Row and column edges intersect in at most one cell, so for
/// `s, t >= 2` the union is already an antichain (min is applied anyway).
pub fn delta_grid(shape: GridShape) -> Clutter {
    let coords = grid_coordinates(shape);
    let mut edges = Vec::new();
    for r in &coords.rows {
        edges.extend(crate::subset::k_subsets(*r, shape.t));
    }
    for c in &coords.cols {
        edges.extend(crate::subset::k_subsets(*c, shape.s));
    }
    let ground = GroundSet::new_extended(shape.cells()).expect("grid ground fits");
    Clutter::from_family(ground, shape.s.max(shape.t), edges)
}

/// `min(Δ ∪ C([n], d+1))` with the top layer implicit. Errors when some edge
/// of `Δ` is larger than `d`.
pub fn pad_with_big_circuits(delta: &Clutter, d: u32) -> Result<Clutter> {
    let ground = delta.ground();
    Clutter::with_implicit_top(ground, d, delta.explicit_edges().to_vec())
}

/// A conditional-independence model with hidden variables, presented as a
/// grid hypergraph together with the two defining statements.
#[derive(Debug, Clone)]
pub struct CiModel {
    pub clutter: Clutter,
    pub statements: [String; 2],
    pub cardinalities: String,
    pub notes: Vec<String>,
}

/// The CI model `X ⊥ Y1 | {Y2, H1}` and `X ⊥ Y2 | {Y1, H2}` on state spaces
/// of sizes `d, k, ℓ` with hidden variables of sizes `s-1` and `t-1`; its
/// vanishing ideal is the grid hypergraph ideal.
pub fn ci_model_to_hypergraph(d: u32, k: u32, l: u32, s: u32, t: u32) -> Result<CiModel> {
    if d == 0 || k == 0 || l == 0 || s < 2 || t < 2 {
        return Err(Error::ParameterRange(format!(
            "CI model needs d,k,l >= 1 and s,t >= 2, got d={d}, k={k}, l={l}, s={s}, t={t}"
        )));
    }
    let shape = GridShape::new(k, l, s, t)?;
    let clutter = delta_grid(shape).with_ambient_d(d);
    let mut notes = Vec::new();
    if s == 2 {
        notes.push(
            "H1 is constant: the distinguished component encodes a hidden-variable intersection axiom"
                .to_string(),
        );
    }
    if t == l {
        notes.push("t = l: the row edges are whole rows".to_string());
    }
    if d < s.max(t) {
        notes.push(format!(
            "ambient d={d} is below max(s,t)={}; the usual setting assumes d >= max(s,t)",
            s.max(t)
        ));
    }
    Ok(CiModel {
        clutter,
        statements: [
            "X _||_ Y1 | {Y2, H1}".to_string(),
            "X _||_ Y2 | {Y1, H2}".to_string(),
        ],
        cardinalities: format!("|X|={d}, |Y1|={k}, |Y2|={l}, |H1|={}, |H2|={}", s - 1, t - 1),
        notes,
    })
}
