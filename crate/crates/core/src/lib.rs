//! Exact computation of Grundy-type domination invariants on small graphs
//! and graph products.

pub mod constructions;
pub mod enumerate;
pub mod formulas;
pub mod graph;
pub mod graph6;
pub mod hypergraph;
pub mod products;
pub mod solver;
pub mod vertex_set;

pub use graph::{Graph, GraphError};
pub use products::{ProductGraph, ProductKind};
pub use solver::{solve, solve_with, SolveError, SolveResult, SolverConfig, Variant, VertexSequence};
pub use vertex_set::VertexSet;
