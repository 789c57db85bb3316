//! NAE-3-SAT with at most four occurrences per variable to polar
//! triangle-free 2-coloring on graphs of maximum degree 3.
//!
//! Every literal occurrence is a vertex and each clause is a triangle on
//! its three occurrences. Each variable gets two complete binary trees of
//! height 2, `B^t` and `B^f`, with vertices `α^1..α^7` where `α^i` has the
//! children `α^{2i}` and `α^{2i+1}`, and an edge between the two roots.
//! The `i`-th positive occurrence is joined to leaf `t^{i+3}` and the
//! `i`-th negative occurrence to leaf `f^{i+3}`. All tree edges, the root
//! edge and the occurrence-to-leaf edges are polar. Polar edges alternate
//! along each tree, so all leaves of `B^t` share the root's color and the
//! leaves of `B^f` have the other one. Positive occurrences are then
//! colored unlike `t^1` and negative occurrences like it.

use serde::Serialize;

use crate::coloring::{verify_triangle_free, Color, Coloring};
use crate::graph::{GraphBuilder, Vertex};

use super::cnf::{nae_satisfies, Assignment, CnfFormula};
use super::polar::PolarInstance;
use super::{two_color_value, ReductionError, WitnessTranslation};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NaeToPolarMap {
    /// `occurrence[i][j]` is the vertex of literal `j` of clause `i`.
    pub occurrence: Vec<[Vertex; 3]>,
    /// `true_tree[x][i - 1]` is `t^i_x`, so index 0 is the root.
    pub true_tree: Vec<[Vertex; 7]>,
    pub false_tree: Vec<[Vertex; 7]>,
}

#[derive(Debug, Clone)]
pub struct NaeToPolar {
    pub source: CnfFormula,
    pub instance: PolarInstance,
    pub map: NaeToPolarMap,
}

/// Builds the polar instance. Occurrences of each variable are numbered in
/// clause order, then by position inside the clause.
pub fn reduce_nae4_to_polar(phi: &CnfFormula) -> Result<NaeToPolar, ReductionError> {
    phi.check_max_occurrences(4)?;
    let m = phi.num_clauses();
    let n = phi.num_vars();
    let occurrence: Vec<[Vertex; 3]> = (0..m).map(|i| [3 * i, 3 * i + 1, 3 * i + 2]).collect();
    let tree = |x: usize, side: usize| -> [Vertex; 7] { std::array::from_fn(|i| 3 * m + 14 * x + 7 * side + i) };
    let true_tree: Vec<[Vertex; 7]> = (0..n).map(|x| tree(x, 0)).collect();
    let false_tree: Vec<[Vertex; 7]> = (0..n).map(|x| tree(x, 1)).collect();

    let mut b = GraphBuilder::new(3 * m + 14 * n);
    let mut polar = Vec::new();
    let mut add_polar = |b: &mut GraphBuilder, u: Vertex, v: Vertex| {
        b.add_edge(u, v);
        polar.push((u, v));
    };
    for occ in &occurrence {
        b.add_clique(occ);
    }
    for x in 0..n {
        for t in [&true_tree[x], &false_tree[x]] {
            for i in 1..=3 {
                add_polar(&mut b, t[i - 1], t[2 * i - 1]);
                add_polar(&mut b, t[i - 1], t[2 * i]);
            }
        }
        add_polar(&mut b, true_tree[x][0], false_tree[x][0]);
    }
    let mut used = vec![(0, 0); n];
    for (clause, occ) in phi.clauses().iter().zip(&occurrence) {
        for (lit, &o) in clause.iter().zip(occ) {
            let (slot, tree) = if lit.positive {
                (&mut used[lit.var].0, &true_tree[lit.var])
            } else {
                (&mut used[lit.var].1, &false_tree[lit.var])
            };
            // Leaves are t^4..t^7, at indices 3..=6.
            add_polar(&mut b, o, tree[3 + *slot]);
            *slot += 1;
        }
    }
    let graph = b.build();
    let delta = graph.max_degree();
    assert!(delta <= 3, "reduction output must have maximum degree 3, found {delta}");
    let instance = PolarInstance::new(graph, polar).expect("polar edges were added to the graph");
    Ok(NaeToPolar {
        source: phi.clone(),
        instance,
        map: NaeToPolarMap {
            occurrence,
            true_tree,
            false_tree,
        },
    })
}

/// Colors a height-2 tree with the root color alternating level by level.
fn color_tree(colors: &mut [Color], tree: &[Vertex; 7], root: Color) {
    let other = 3 - root;
    for (i, &v) in tree.iter().enumerate() {
        colors[v] = if i == 1 || i == 2 { other } else { root };
    }
}

impl WitnessTranslation for NaeToPolar {
    type SourceWitness = Assignment;
    type TargetWitness = Coloring;

    /// True literals get color 1. The root `t^1_x` gets 2 when `x` is
    /// true and 1 otherwise; `f^1_x` gets the other color.
    fn lift(&self, a: &Assignment) -> Result<Coloring, ReductionError> {
        if !nae_satisfies(&self.source, a) {
            return Err(ReductionError::InvalidWitness("assignment is not NAE-satisfying"));
        }
        let mut colors = vec![0; self.instance.graph().n()];
        for (clause, occ) in self.source.clauses().iter().zip(&self.map.occurrence) {
            for (lit, &o) in clause.iter().zip(occ) {
                colors[o] = if lit.eval(a) { 1 } else { 2 };
            }
        }
        for x in 0..self.source.num_vars() {
            let root = if a.value(x) { 2 } else { 1 };
            color_tree(&mut colors, &self.map.true_tree[x], root);
            color_tree(&mut colors, &self.map.false_tree[x], 3 - root);
        }
        let c = Coloring::new(2, colors)?;
        if !self.instance.verify(&c)? {
            return Err(ReductionError::TranslationFailed(
                "lifted coloring violates the polar constraints",
            ));
        }
        Ok(c)
    }

    /// `x` is true exactly when `t^1_x` has color 2.
    fn pull(&self, c: &Coloring) -> Result<Assignment, ReductionError> {
        if !verify_triangle_free(self.instance.graph(), c, Some(self.instance.polar()))? {
            return Err(ReductionError::InvalidWitness(
                "coloring violates the polar constraints",
            ));
        }
        let values = self
            .map
            .true_tree
            .iter()
            .map(|t| two_color_value(c.color(t[0])).map(|one| !one))
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
