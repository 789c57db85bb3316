//! Triangle-free `q`-coloring parameterized by the vertex cover number.
//!
//! With a minimum vertex cover `W` of size `k`, the rest of the graph is an
//! independent set `I`. Every triangle has at least two vertices in `W`, so
//! once `W` is colored each vertex of `I` can be colored on its own.
//!
//! * If `q > ceil(k/2)`, pair up `W` into same-colored couples and give all
//!   of `I` one fresh color. This always works.
//! * Otherwise enumerate triangle-free `q`-colorings of `W` and try to
//!   extend each one greedily over `I`.

use crate::coloring::{greedy_extend_independent, Color, Coloring, UNCOLORED};
use crate::graph::{Graph, Vertex};
use crate::solvers::vertex_cover::min_vertex_cover;

pub fn fpt_tf_q_coloring(g: &Graph, q: Color) -> Option<Coloring> {
    let n = g.n();
    if n == 0 {
        return Some(Coloring::from_parts_unchecked(q, Vec::new()));
    }
    if q == 0 {
        return None;
    }
    let cover = min_vertex_cover(g);
    let mut in_cover = vec![false; n];
    for &w in &cover {
        in_cover[w] = true;
    }
    let indep: Vec<Vertex> = g.vertices().filter(|&v| !in_cover[v]).collect();
    let half = cover.len().div_ceil(2) as Color;

    if q > half {
        let mut colors = vec![half + 1; n];
        for (i, &w) in cover.iter().enumerate() {
            colors[w] = (i / 2) as Color + 1;
        }
        return Some(Coloring::from_parts_unchecked(q, colors));
    }

    let mut partial = vec![UNCOLORED; n];
    let mut found = None;
    enumerate_cover(g, &cover, 0, q, &mut partial, &mut |partial| {
        found = greedy_extend_independent(g, partial, &indep, q).expect("cover complement is independent");
        found.is_some()
    });
    found
}

/// Depth-first over colorings of `cover`, skipping any prefix that already
/// holds a monochromatic triangle inside the cover. `visit` returns `true`
/// to stop.
fn enumerate_cover(
    g: &Graph,
    cover: &[Vertex],
    depth: usize,
    q: Color,
    partial: &mut [Color],
    visit: &mut dyn FnMut(&[Color]) -> bool,
) -> bool {
    let Some(&v) = cover.get(depth) else {
        return visit(partial);
    };
    let earlier = &cover[..depth];
    for x in 1..=q {
        let closes_triangle = earlier.iter().enumerate().any(|(i, &a)| {
            partial[a] == x
                && g.has_edge(v, a)
                && earlier[i + 1..]
                    .iter()
                    .any(|&b| partial[b] == x && g.has_edge(v, b) && g.has_edge(a, b))
        });
        if closes_triangle {
            continue;
        }
        partial[v] = x;
        if enumerate_cover(g, cover, depth + 1, q, partial, visit) {
            return true;
        }
    }
    partial[v] = UNCOLORED;
    false
}
