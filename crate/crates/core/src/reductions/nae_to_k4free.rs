//! NAE-3-SAT to triangle-free 2-coloring of a `K4`-free graph.
//!
//! Every literal occurrence is a vertex and each clause is a triangle on
//! its three occurrences. Each variable `x` gets an edge `t_x f_x`; `t_x`
//! is joined to the occurrences of `¬x` and `f_x` to the occurrences of
//! `x`. Every edge outside the clause triangles carries its own polar
//! gadget, which forces it to be bichromatic. In a triangle-free
//! 2-coloring every occurrence of `x` then has the color of `t_x` and every
//! occurrence of `¬x` the other color, so reading color 1 as true turns the
//! clause triangles into not-all-equal clauses.

use serde::Serialize;

use crate::coloring::{verify_triangle_free, Color, Coloring};
use crate::gadgets::{attach_polar_gadget, polar_gadget_coloring};
use crate::graph::{Graph, GraphBuilder, Vertex};
use crate::triangles::contains_k4;

use super::cnf::{nae_satisfies, Assignment, CnfFormula};
use super::{two_color_value, ReductionError, WitnessTranslation};

/// One polar gadget sitting on the edge `u v`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GadgetPlacement {
    pub u: Vertex,
    pub v: Vertex,
    /// The ten private vertices, in the order `w1..w4, z1..z3, y1..y3`.
    pub private: [Vertex; 10],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NaeToK4FreeMap {
    /// `occurrence[i][j]` is the vertex of literal `j` of clause `i`.
    pub occurrence: Vec<[Vertex; 3]>,
    pub true_vertex: Vec<Vertex>,
    pub false_vertex: Vec<Vertex>,
    pub gadgets: Vec<GadgetPlacement>,
}

#[derive(Debug, Clone)]
pub struct NaeToK4Free {
    pub source: CnfFormula,
    pub graph: Graph,
    pub map: NaeToK4FreeMap,
}

/// Builds the graph. Clauses made of one literal repeated three times are
/// rejected: they are never NAE-satisfiable and would put a triangle on
/// three copies of the same literal.
pub fn reduce_nae_to_k4free(phi: &CnfFormula) -> Result<NaeToK4Free, ReductionError> {
    if let Some(clause) = phi.clauses().iter().position(|c| c[0] == c[1] && c[1] == c[2]) {
        return Err(ReductionError::RepeatedLiteralClause { clause });
    }
    let m = phi.num_clauses();
    let n = phi.num_vars();
    let mut b = GraphBuilder::new(3 * m + 2 * n);
    let occurrence: Vec<[Vertex; 3]> = (0..m).map(|i| [3 * i, 3 * i + 1, 3 * i + 2]).collect();
    let true_vertex: Vec<Vertex> = (0..n).map(|x| 3 * m + 2 * x).collect();
    let false_vertex: Vec<Vertex> = (0..n).map(|x| 3 * m + 2 * x + 1).collect();
    for occ in &occurrence {
        b.add_clique(occ);
    }

    let mut forced = Vec::with_capacity(n + 3 * m);
    for x in 0..n {
        forced.push((true_vertex[x], false_vertex[x]));
    }
    for (clause, occ) in phi.clauses().iter().zip(&occurrence) {
        for (lit, &o) in clause.iter().zip(occ) {
            let hub = if lit.positive {
                false_vertex[lit.var]
            } else {
                true_vertex[lit.var]
            };
            forced.push((hub, o));
        }
    }
    let mut gadgets = Vec::with_capacity(forced.len());
    for (u, v) in forced {
        b.add_edge(u, v);
        let private = attach_polar_gadget(&mut b, u, v);
        gadgets.push(GadgetPlacement { u, v, private });
    }
    let graph = b.build();
    assert_eq!(graph.n(), 3 * m + 2 * n + 10 * (n + 3 * m));
    assert!(!contains_k4(&graph), "reduction output must be K4-free");
    Ok(NaeToK4Free {
        source: phi.clone(),
        graph,
        map: NaeToK4FreeMap {
            occurrence,
            true_vertex,
            false_vertex,
            gadgets,
        },
    })
}

impl WitnessTranslation for NaeToK4Free {
    type SourceWitness = Assignment;
    type TargetWitness = Coloring;

    /// Color 1 is true: `t_x` gets 1 when `x` is true, `f_x` the other
    /// color, an occurrence gets 1 when its literal is true, and each
    /// gadget takes its standard coloring for the colors of its ends.
    fn lift(&self, a: &Assignment) -> Result<Coloring, ReductionError> {
        if !nae_satisfies(&self.source, a) {
            return Err(ReductionError::InvalidWitness("assignment is not NAE-satisfying"));
        }
        let color = |b: bool| -> Color {
            if b {
                1
            } else {
                2
            }
        };
        let mut colors = vec![0; self.graph.n()];
        for x in 0..self.source.num_vars() {
            colors[self.map.true_vertex[x]] = color(a.value(x));
            colors[self.map.false_vertex[x]] = color(!a.value(x));
        }
        for (clause, occ) in self.source.clauses().iter().zip(&self.map.occurrence) {
            for (lit, &o) in clause.iter().zip(occ) {
                colors[o] = color(lit.eval(a));
            }
        }
        for gadget in &self.map.gadgets {
            let pattern = polar_gadget_coloring(colors[gadget.u], colors[gadget.v]);
            for (&x, &c) in gadget.private.iter().zip(&pattern[2..]) {
                colors[x] = c;
            }
        }
        let c = Coloring::new(2, colors)?;
        if !verify_triangle_free(&self.graph, &c, None)? {
            return Err(ReductionError::TranslationFailed(
                "lifted coloring has a monochromatic triangle",
            ));
        }
        Ok(c)
    }

    /// `x` is true exactly when `t_x` has color 1.
    fn pull(&self, c: &Coloring) -> Result<Assignment, ReductionError> {
        if !verify_triangle_free(&self.graph, c, None)? {
            return Err(ReductionError::InvalidWitness("coloring has a monochromatic triangle"));
        }
        let values = self
            .map
            .true_vertex
            .iter()
            .map(|&t| two_color_value(c.color(t)))
            .collect::<Result<_, _>>()?;
        let a = Assignment::new(values);
        if !nae_satisfies(&self.source, &a) {
            return Err(ReductionError::TranslationFailed(
                "pulled assignment is not NAE-satisfying",
            ));
        }
        Ok(a)
    }
}
