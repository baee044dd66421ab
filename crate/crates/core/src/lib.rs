//! Binomial extensions of Stanley–Reisner ideals.
//!
//! A simplicial complex whose proper edges are subdivided by new points
//! defines an ideal `B` generated by the 2x2 minors of scroll matrices and
//! the Stanley–Reisner monomials of the extended complex. This crate builds
//! these ideals, checks their decomposition into scroll components with a
//! Gröbner-basis engine, constructs colorations of the reduced graph, and
//! certifies reduction numbers by exact linear algebra.

pub mod color;
pub mod complex;
pub mod extension;
pub mod fixtures;
pub mod oracle;
pub mod poly;
pub mod random;
pub mod reduce;

pub use color::{Coloration, ReductionVectors};
pub use complex::{Graph, ProperStar, SimplicialComplex, Vertex, VertexId};
pub use extension::{ExtensionComplex, ExtensionSpec, IdealPresentation, ScrollMatrix};
pub use poly::{GroebnerBasis, HilbertData, MonomialOrder, OrderKind, PolyRing, PrimeField, Rationals};
pub use reduce::{ReductionReport, RewriteTrace, TheoremReport};
