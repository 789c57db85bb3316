//! Triangle-free graph coloring.
//!
//! A triangle-free `k`-coloring assigns one of `k` colors to every vertex so
//! that no three mutually adjacent vertices share a color. The least such
//! `k` is the triangle-free chromatic number `chi3`. This crate computes it
//! exactly, builds the extremal and forcing gadgets around it, solves the
//! tractable classes, and carries out the NAE-SAT hardness reductions with
//! witness translation in both directions.

pub mod classes;
pub mod coloring;
pub mod dimacs;
pub mod gadgets;
pub mod graph;
pub mod random;
pub mod reductions;
pub mod solvers;
pub mod triangles;

pub use coloring::{standard_recolor, verify_proper, verify_triangle_free, Color, Coloring, ColoringError};
pub use graph::{Edge, Graph, GraphBuilder, GraphError, Vertex};
pub use triangles::{contains_k4, is_triangle_free, list_triangles, TriangleList};

/// The guide's code samples, compiled and run as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/colorings.md")]
    mod colorings {}
    #[doc = include_str!("../../../book/src/solvers.md")]
    mod solvers {}
    #[doc = include_str!("../../../book/src/gadgets.md")]
    mod gadgets {}
    #[doc = include_str!("../../../book/src/classes.md")]
    mod classes {}
    #[doc = include_str!("../../../book/src/reductions.md")]
    mod reductions {}
}
