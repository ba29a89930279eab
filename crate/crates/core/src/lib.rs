//! Matroid-level decomposition of determinantal hypergraph varieties.
//!
//! The library computes, for several families of hypergraphs, the data that
//! describes the irreducible decomposition of the associated determinantal
//! variety at the matroid level:
//!
//! - minimal dependent matroids, found both by clutter transformations
//!   ([`alpha`]) and by independent brute-force enumeration ([`oracle`]);
//! - the prime-collection decomposition of consecutive forest hypergraphs
//!   ([`forest`]);
//! - combinatorial-closure component lists of forest-like point-line
//!   configurations ([`config`]);
//! - exact rational realizations and the perturbation procedure
//!   ([`realize`], [`ratmat`]).
//!
//! All arithmetic is exact: subsets are bitmasks, matrices are arbitrary-
//! precision rationals, and every randomized construction is verified before
//! it is returned.

pub mod alpha;
pub mod clutter;
pub mod config;
pub mod error;
pub mod forest;
pub mod hardness;
pub mod hypergraph;
pub mod io;
pub mod matroid;
pub mod oracle;
pub mod ratmat;
pub mod realize;
pub mod subset;

pub use clutter::Clutter;
pub use error::{Error, Result};
pub use hypergraph::{Forest, GridShape};
pub use matroid::Matroid;
pub use subset::{GroundSet, Subset};

/// The Fano plane as a matroid: seven 3-point lines plus the complements of
/// the lines as 4-circuits.
pub fn fano_matroid() -> Matroid {
    let lines = [
        [1u32, 2, 4],
        [1, 3, 6],
        [1, 5, 7],
        [2, 3, 5],
        [2, 6, 7],
        [3, 4, 7],
        [4, 5, 6],
    ];
    let mut circuits: Vec<Subset> = lines.iter().map(|l| Subset::from_labels(l)).collect();
    let full = Subset::full(7);
    for l in &lines {
        circuits.push(full.minus(Subset::from_labels(l)));
    }
    Matroid::new(GroundSet::new(7).expect("7 <= cap"), circuits).expect("Fano circuits are valid")
}
