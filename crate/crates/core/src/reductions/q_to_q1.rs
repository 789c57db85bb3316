//! Triangle-free `q`-coloring to triangle-free `(q+1)`-coloring.
//!
//! Every vertex `v_i` of the input gets its own `(q+1)`-cycle-clique. The
//! first vertex `u_i` of each clique's joint 0 is merged into a single hub
//! `u`, and the second vertex `s_i` of that joint is merged into `v_i`. In
//! a triangle-free `(q+1)`-coloring every joint is rainbow, so `v_i` never
//! shares the hub's color, and the original graph is left with `q` colors.

use serde::Serialize;

use crate::coloring::{verify_triangle_free, Color, Coloring};
use crate::gadgets::gen_cycle_clique;
use crate::graph::{Graph, GraphBuilder, Vertex};

use super::{ReductionError, WitnessTranslation};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QToQPlusOneMap {
    /// Where each input vertex ended up.
    pub vertex: Vec<Vertex>,
    /// The merged vertex `u`.
    pub hub: Vertex,
    /// `cliques[i][j]` lists joint `j` of vertex `i`'s cycle-clique, after
    /// merging. Entry 0 of joint 0 is the hub and entry 1 is `vertex[i]`.
    pub cliques: Vec<[Vec<Vertex>; 5]>,
}

#[derive(Debug, Clone)]
pub struct QToQPlusOne {
    pub source: Graph,
    pub q: Color,
    pub graph: Graph,
    pub map: QToQPlusOneMap,
}

/// Builds the `(q+1)`-instance on `n(5q + 4) + 1` vertices. An empty input
/// gives the single hub vertex.
pub fn reduce_q_to_q1(g: &Graph, q: Color) -> Result<QToQPlusOne, ReductionError> {
    if q < 2 {
        return Err(ReductionError::QTooSmall(q));
    }
    let n = g.n();
    if n == 0 {
        return Ok(QToQPlusOne {
            source: g.clone(),
            q,
            graph: Graph::empty(1),
            map: QToQPlusOneMap {
                vertex: Vec::new(),
                hub: 0,
                cliques: Vec::new(),
            },
        });
    }
    let piece = gen_cycle_clique(q as usize + 1).expect("joint size is at least 3");
    let mut b = GraphBuilder::new(0);
    b.add_graph(g);
    let offsets: Vec<Vertex> = (0..n).map(|_| b.add_graph(&piece.graph)).collect();
    let joints_at = |offset: Vertex| -> [Vec<Vertex>; 5] {
        piece
            .joints
            .clone()
            .map(|j| j.into_iter().map(|x| x + offset).collect())
    };
    let before: Vec<[Vec<Vertex>; 5]> = offsets.iter().map(|&o| joints_at(o)).collect();
    let hub_before = before[0][0][0];
    let mut pairs: Vec<(Vertex, Vertex)> = before[1..].iter().map(|c| (hub_before, c[0][0])).collect();
    pairs.extend(before.iter().enumerate().map(|(i, c)| (i, c[0][1])));
    let (graph, map) = b.build().identify_all(&pairs)?;
    assert_eq!(graph.n(), n * (5 * q as usize + 4) + 1);

    let cliques = before
        .into_iter()
        .map(|c| c.map(|j| j.into_iter().map(|x| map[x]).collect()))
        .collect();
    Ok(QToQPlusOne {
        source: g.clone(),
        q,
        graph,
        map: QToQPlusOneMap {
            vertex: map[..n].to_vec(),
            hub: map[hub_before],
            cliques,
        },
    })
}

impl WitnessTranslation for QToQPlusOne {
    type SourceWitness = Coloring;
    type TargetWitness = Coloring;

    /// Keeps the input colors, gives the hub color `q + 1`, and colors
    /// every joint of clique `i` with the same bijection onto `1..=q+1`:
    /// position 0 gets `q + 1`, position 1 gets `c(v_i)`, the rest take the
    /// remaining colors in increasing order.
    fn lift(&self, c: &Coloring) -> Result<Coloring, ReductionError> {
        if c.colors().iter().any(|&x| x > self.q) {
            return Err(ReductionError::InvalidWitness("coloring uses more than q colors"));
        }
        if !verify_triangle_free(&self.source, c, None)? {
            return Err(ReductionError::InvalidWitness("coloring has a monochromatic triangle"));
        }
        let top = self.q + 1;
        let mut colors = vec![0; self.graph.n()];
        for (i, joints) in self.map.cliques.iter().enumerate() {
            let own = c.color(i);
            let mut palette = vec![top, own];
            palette.extend((1..=self.q).filter(|&x| x != own));
            for joint in joints {
                for (&v, &x) in joint.iter().zip(&palette) {
                    colors[v] = x;
                }
            }
        }
        if self.source.n() == 0 {
            colors[self.map.hub] = top;
        }
        let lifted = Coloring::new(top, colors)?;
        if !verify_triangle_free(&self.graph, &lifted, None)? {
            return Err(ReductionError::TranslationFailed(
                "lifted coloring has a monochromatic triangle",
            ));
        }
        Ok(lifted)
    }

    /// Reads the input vertices and closes the gap left by the hub's color.
    fn pull(&self, c: &Coloring) -> Result<Coloring, ReductionError> {
        if c.colors().iter().any(|&x| x > self.q + 1) {
            return Err(ReductionError::InvalidWitness("coloring uses more than q + 1 colors"));
        }
        if !verify_triangle_free(&self.graph, c, None)? {
            return Err(ReductionError::InvalidWitness("coloring has a monochromatic triangle"));
        }
        let hub = c.color(self.map.hub);
        let colors = self
            .map
            .vertex
            .iter()
            .map(|&v| match c.color(v) {
                x if x == hub => Err(ReductionError::TranslationFailed(
                    "an input vertex shares the hub color",
                )),
                x if x > hub => Ok(x - 1),
                x => Ok(x),
            })
            .collect::<Result<Vec<_>, _>>()?;
        let pulled = Coloring::new(self.q, colors)?;
        if !verify_triangle_free(&self.source, &pulled, None)? {
            return Err(ReductionError::TranslationFailed(
                "pulled coloring has a monochromatic triangle",
            ));
        }
        Ok(pulled)
    }
}
