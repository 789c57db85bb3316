//! Graphs with a designated set of polar edges, which must be
//! bichromatic, and the linear-time decision for maximum degree 2.

use std::fmt::Write as _;

use crate::coloring::{verify_triangle_free, Color, Coloring};
use crate::dimacs::{parse_graph_with_extensions, write_dimacs, ParseError};
use crate::graph::{edge, Edge, Graph, GraphError, Vertex};

use super::ReductionError;

/// A graph together with a set `S` of its edges that every coloring must
/// keep bichromatic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolarInstance {
    graph: Graph,
    polar: Vec<Edge>,
}

impl PolarInstance {
    /// Normalizes, sorts and deduplicates `polar`; every polar pair must be
    /// an edge of `graph`.
    pub fn new(graph: Graph, polar: impl IntoIterator<Item = Edge>) -> Result<PolarInstance, GraphError> {
        let mut polar: Vec<Edge> = polar.into_iter().map(|(u, v)| edge(u, v)).collect();
        polar.sort_unstable();
        polar.dedup();
        for &(u, v) in &polar {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if v >= graph.n() {
                return Err(GraphError::VertexOutOfRange {
                    vertex: v,
                    n: graph.n(),
                });
            }
            if !graph.has_edge(u, v) {
                return Err(GraphError::NotAnEdge(u, v));
            }
        }
        Ok(PolarInstance { graph, polar })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn polar(&self) -> &[Edge] {
        &self.polar
    }

    pub fn is_polar(&self, u: Vertex, v: Vertex) -> bool {
        self.polar.binary_search(&edge(u, v)).is_ok()
    }

    pub fn verify(&self, c: &Coloring) -> Result<bool, crate::ColoringError> {
        verify_triangle_free(&self.graph, c, Some(&self.polar))
    }
}

/// A DIMACS graph followed by `s u v` lines (1-based) naming polar edges.
pub fn parse_polar_instance(text: &str) -> Result<PolarInstance, ParseError> {
    let raw = parse_graph_with_extensions(text, true)?;
    Ok(PolarInstance::new(raw.graph, raw.polar)?)
}

pub fn write_polar_instance(inst: &PolarInstance) -> String {
    let mut out = write_dimacs(&inst.graph);
    for &(u, v) in &inst.polar {
        writeln!(out, "s {} {}", u + 1, v + 1).unwrap();
    }
    out
}

/// Decides polar triangle-free 2-colorability when every vertex has degree
/// at most 2.
///
/// Each component is a path or a cycle. Colors alternate along a walk of
/// the component. A path or even cycle then has every edge bichromatic. An
/// odd cycle with a non-polar edge is walked starting right after that
/// edge, so the only monochromatic edge is non-polar, and a triangle is
/// never monochromatic since two of its edges differ. An odd cycle whose
/// edges are all polar has no valid coloring.
pub fn solve_polar_small_degree(inst: &PolarInstance) -> Result<Option<Coloring>, ReductionError> {
    let g = inst.graph();
    let delta = g.max_degree();
    if delta > 2 {
        return Err(ReductionError::DegreeTooLarge { limit: 2, found: delta });
    }
    let n = g.n();
    let mut colors: Vec<Color> = vec![0; n];
    let mut seen = vec![false; n];

    // Paths first, from an endpoint; then whatever remains lies on cycles.
    let starts = g.vertices().filter(|&v| g.degree(v) <= 1).chain(g.vertices());
    for start in starts {
        if seen[start] {
            continue;
        }
        let mut order = walk(g, start);
        if g.degree(start) == 2 {
            let len = order.len();
            match (0..len).find(|&i| !inst.is_polar(order[i], order[(i + 1) % len])) {
                Some(i) => order.rotate_left(i + 1),
                None if len % 2 == 1 => return Ok(None),
                None => {}
            }
        }
        for (i, v) in order.into_iter().enumerate() {
            seen[v] = true;
            colors[v] = 1 + (i % 2) as Color;
        }
    }
    let c = Coloring::new(2, colors).expect("every vertex is colored 1 or 2");
    assert_eq!(
        inst.verify(&c),
        Ok(true),
        "alternating walk must respect the polar edges"
    );
    Ok(Some(c))
}

/// The vertices of the component of `start` in walk order. `start` must be
/// a path endpoint or lie on a cycle.
fn walk(g: &Graph, start: Vertex) -> Vec<Vertex> {
    let mut order = vec![start];
    let mut prev = None;
    let mut cur = start;
    while let Some(&next) = g.neighbors(cur).iter().find(|&&w| Some(w) != prev && w != start) {
        order.push(next);
        prev = Some(cur);
        cur = next;
    }
    order
}
