//! Exact combinatorics of convex polytopes and their Gale diagrams.
//!
//! The crate connects several objects through combinatorial Alexander
//! duality, all over exact rational (or GF(2)) arithmetic:
//!
//! * simplicial complexes on `[m]` with ghost vertices ([`complex`]),
//! * nerve complexes `K(P)` / `K_Q` of convex polytopes ([`polytope`]),
//! * constellation complexes `Δ(X)` of spherical point configurations
//!   and Gale diagrams ([`gale`]),
//! * reduced simplicial homology and bigraded Betti numbers via the
//!   Hochster formula ([`homology`], [`betti`]),
//! * the real Buchstaber invariant by exact GF(2) subgroup search
//!   ([`buchstaber`]) and the related colorings of `Z_2^k \ {0}`
//!   ([`coloring`]).
//!
//! Everything on a decision path is exact: rational pivoting with Bland's
//! rule for feasibility questions, bit-packed elimination over GF(2),
//! never floating point.

pub mod betti;
pub mod buchstaber;
pub mod coloring;
pub mod complex;
pub mod error;
pub mod gale;
pub mod homology;
pub mod io;
pub mod linalg;
pub mod polytope;
pub mod rational;

pub use betti::BettiTable;
pub use complex::{SimplicialComplex, VertexSet};
pub use error::Error;
pub use gale::PointConfiguration;
pub use homology::{BettiVector, Field};
pub use linalg::{GF2Matrix, RationalMatrix};
pub use polytope::Polytope;
pub use rational::Rational;

/// Hard cap on the vertex universe: a `VertexSet` is one machine word.
pub const MAX_VERTICES: usize = 64;
