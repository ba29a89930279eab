//! Exact rational matrices: the realization witnesses.
//!
//! Ranks are computed by fraction-free (Bareiss) elimination over integers
//! after clearing denominators column by column; clearing a column rescales
//! it by a nonzero factor, which preserves the column matroid.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::subset::{GroundSet, Subset};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rat_frac(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// A `d × n` matrix of exact rationals, columns indexed by `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    d: usize,
    n: usize,
    entries: Vec<Rational>, // row-major
}

impl RationalMatrix {
    pub fn zero(d: usize, n: usize) -> Self {
        RationalMatrix {
            d,
            n,
            entries: vec![Rational::zero(); d * n],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let d = rows.len();
        let n = rows.first().map(|r| r.len()).unwrap_or(0);
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::ShapeMismatch("ragged rows".to_string()));
        }
        Ok(RationalMatrix {
            d,
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat(x)).collect())
                .collect(),
        )
        .expect("literal rows are rectangular")
    }

    pub fn rows(&self) -> usize {
        self.d
    }

    pub fn cols(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> &Rational {
        &self.entries[row * self.n + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Rational) {
        self.entries[row * self.n + col] = value;
    }

    /// Column as a vector (0-based index).
    pub fn column(&self, col: usize) -> Vec<Rational> {
        (0..self.d).map(|r| self.get(r, col).clone()).collect()
    }

    pub fn set_column(&mut self, col: usize, values: &[Rational]) {
        assert_eq!(values.len(), self.d);
        for (r, v) in values.iter().enumerate() {
            self.set(r, col, v.clone());
        }
    }

    pub fn push_column(&mut self, values: &[Rational]) {
        assert_eq!(values.len(), self.d);
        let mut next = RationalMatrix::zero(self.d, self.n + 1);
        for r in 0..self.d {
            for c in 0..self.n {
                next.set(r, c, self.get(r, c).clone());
            }
            next.set(r, self.n, values[r].clone());
        }
        *self = next;
    }

    /// Rank of the submatrix on the given 0-based columns.
    pub fn rank_of_columns(&self, cols: &[usize]) -> usize {
        // integer matrix: clear denominators per column (nonzero scaling)
        let mut m: Vec<Vec<BigInt>> = cols
            .iter()
            .map(|&c| {
                let mut lcm = BigInt::one();
                for r in 0..self.d {
                    lcm = lcm.lcm(self.get(r, c).denom());
                }
                (0..self.d)
                    .map(|r| {
                        let q = self.get(r, c);
                        q.numer() * (&lcm / q.denom())
                    })
                    .collect()
            })
            .collect();
        // Bareiss on the (cols × d) layout: columns of self become rows here
        let rows = m.len();
        let cols_inner = self.d;
        let mut rank = 0usize;
        let mut prev = BigInt::one();
        let mut r = 0usize;
        for c in 0..cols_inner {
            // find pivot
            let pivot = (r..rows).find(|&i| !m[i][c].is_zero());
            let Some(p) = pivot else { continue };
            m.swap(r, p);
            for i in 0..rows {
                if i == r {
                    continue;
                }
                for j in 0..cols_inner {
                    if j == c {
                        continue;
                    }
                    let num = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                    m[i][j] = &num / &prev;
                }
                m[i][c] = BigInt::zero();
            }
            prev = m[r][c].clone();
            r += 1;
            rank += 1;
            if r == rows {
                break;
            }
        }
        rank
    }

    pub fn rank(&self) -> usize {
        self.rank_of_columns(&(0..self.n).collect::<Vec<_>>())
    }

    /// Exact squared Euclidean distance to another matrix of the same shape.
    pub fn distance_sq(&self, other: &RationalMatrix) -> Result<Rational> {
        if self.d != other.d || self.n != other.n {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} vs {}x{}",
                self.d, self.n, other.d, other.n
            )));
        }
        let mut acc = Rational::zero();
        for (a, b) in self.entries.iter().zip(&other.entries) {
            let diff = a - b;
            acc += &diff * &diff;
        }
        Ok(acc)
    }
}

/// The column matroid: circuits are the minimal column sets (of size at most
/// `max_circuit`) whose submatrix rank is below their size.
pub fn matroid_of_matrix(a: &RationalMatrix, max_circuit: u32) -> Matroid {
    let n = a.cols() as u32;
    let mut circuits: Vec<Subset> = Vec::new();
    // grow independent sets level by level; a candidate whose proper subsets
    // are all independent is either independent or a circuit
    let mut independent: Vec<Subset> = vec![Subset::empty()];
    for size in 1..=max_circuit.min(n) {
        let mut next: Vec<Subset> = Vec::new();
        let prev: std::collections::HashSet<Subset> = independent.iter().copied().collect();
        for base in &independent {
            let start = base.labels().last().copied().unwrap_or(0);
            for x in (start + 1)..=n {
                let cand = base.with(x);
                if cand.iter().any(|y| !prev.contains(&cand.without(y))) {
                    continue; // contains a dependent subset: not a circuit, skip
                }
                let cols: Vec<usize> = cand.iter().map(|l| (l - 1) as usize).collect();
                if a.rank_of_columns(&cols) == size as usize {
                    next.push(cand);
                } else {
                    circuits.push(cand);
                }
            }
        }
        independent = next;
    }
    Matroid::from_certified_circuits(n, circuits)
}

/// Does the matrix realize the matroid exactly?
pub fn verify_realization(a: &RationalMatrix, m: &Matroid) -> Result<bool> {
    if a.cols() as u32 != m.ground_size() {
        return Err(Error::ShapeMismatch(format!(
            "matrix has {} columns, matroid has ground size {}",
            a.cols(),
            m.ground_size()
        )));
    }
    let computed = matroid_of_matrix(a, m.rank_full() + 1);
    Ok(&computed == m)
}

fn det3(a: &[Rational; 3], b: &[Rational; 3], c: &[Rational; 3]) -> Rational {
    &a[0] * (&b[1] * &c[2] - &b[2] * &c[1]) - &a[1] * (&b[0] * &c[2] - &b[2] * &c[0])
        + &a[2] * (&b[0] * &c[1] - &b[1] * &c[0])
}

/// The meet of the planes spanned by `(a1, a2)` and `(b1, b2)` in 3-space:
/// `q = [a1, b1, b2]·a2 − [a2, b1, b2]·a1`, a nonzero vector in both planes.
/// Errors when either pair is dependent or the planes coincide.
pub fn line_meet(
    a1: &[Rational; 3],
    a2: &[Rational; 3],
    b1: &[Rational; 3],
    b2: &[Rational; 3],
) -> Result<[Rational; 3]> {
    let c1 = det3(a1, b1, b2);
    let c2 = det3(a2, b1, b2);
    let q = [
        &c1 * &a2[0] - &c2 * &a1[0],
        &c1 * &a2[1] - &c2 * &a1[1],
        &c1 * &a2[2] - &c2 * &a1[2],
    ];
    if q.iter().all(|x| x.is_zero()) {
        return Err(Error::DegeneratePlanes(
            "spans coincide or are degenerate".to_string(),
        ));
    }
    // membership checks: q must be dependent with each spanning pair
    if !det3(&q, a1, a2).is_zero() || !det3(&q, b1, b2).is_zero() {
        return Err(Error::DegeneratePlanes(
            "meet vector escaped a span (degenerate input)".to_string(),
        ));
    }
    Ok(q)
}

/// Scale a vector so the squared norm drops below `bound_sq` (exact): returns
/// `λ·v` with `λ = bound / (1 + Σ|vᵢ|)`.
pub fn scale_into_ball(v: &[Rational], bound: &Rational) -> Vec<Rational> {
    let norm1: Rational = v.iter().map(|x| x.abs()).sum();
    let lambda = bound / (Rational::one() + norm1);
    v.iter().map(|x| x * &lambda).collect()
}

pub fn ground_of_matrix(a: &RationalMatrix) -> Result<GroundSet> {
    GroundSet::new_extended(a.cols() as u32)
}
