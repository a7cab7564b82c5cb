//! Homological invariants of edge ideals of small graphs.
//!
//! The crate computes graded Betti tables of `R/I(G)` through Hochster's
//! formula on the independence complex (with an independent Koszul-complex
//! oracle), derives dimension, depth, regularity, projective dimension and
//! the h-polynomial, builds witness graphs for every admissible
//! `(dim, depth, reg)` tuple, and surveys all small connected graphs to
//! compare the achieved tuples with the predicted regions.

pub mod betti;
pub mod complex;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod ideal;
pub mod independence;
pub mod invariants;
pub mod koszul;
pub mod laws;
pub mod linalg;
pub mod region;
pub mod splitting;
pub mod survey;
pub mod vset;
pub mod witness;

pub use betti::{betti_table_hochster, graph_betti_table, BettiTable};
pub use complex::SimplicialComplex;
pub use error::{Error, Result};
pub use graph::Graph;
pub use graph6::{parse_graph6, to_graph6};
pub use ideal::SquarefreeIdeal;
pub use independence::GraphStats;
pub use invariants::{invariant_tuple, HPolynomial, InvariantTuple};
pub use koszul::betti_table_koszul;
pub use linalg::FieldSpec;
pub use region::{Tuple2, Tuple3};
pub use vset::VertexSet;
