//! Exact proper `k`-coloring by DSATUR-ordered backtracking.
//!
//! Used where a class guarantees a small chromatic number and only a witness
//! is needed.

use crate::coloring::{Color, Coloring, UNCOLORED};
use crate::graph::{Graph, Vertex};

/// A proper coloring with at most `k` colors, or `None`.
pub fn proper_coloring(g: &Graph, k: Color) -> Option<Coloring> {
    let n = g.n();
    if n == 0 {
        return Some(Coloring::from_parts_unchecked(k, Vec::new()));
    }
    if k == 0 {
        return None;
    }
    let mut colors = vec![UNCOLORED; n];
    extend(g, k, &mut colors, 0).then(|| Coloring::from_parts_unchecked(k, colors))
}

/// Picks the uncolored vertex with the most distinct neighbor colors,
/// breaking ties by uncolored degree, then index.
fn pick(g: &Graph, k: Color, colors: &[Color]) -> Option<Vertex> {
    let mut best: Option<(usize, usize, Vertex)> = None;
    let mut seen = vec![false; k as usize + 1];
    for v in g.vertices().filter(|&v| colors[v] == UNCOLORED) {
        seen.iter_mut().for_each(|s| *s = false);
        let mut free = 0;
        for &w in g.neighbors(v) {
            match colors[w] {
                UNCOLORED => free += 1,
                x => seen[x as usize] = true,
            }
        }
        let saturation = seen.iter().filter(|&&s| s).count();
        let key = (saturation, free, v);
        if best.is_none_or(|(s, f, _)| (key.0, key.1) > (s, f)) {
            best = Some(key);
        }
    }
    best.map(|(_, _, v)| v)
}

fn extend(g: &Graph, k: Color, colors: &mut [Color], used: Color) -> bool {
    let Some(v) = pick(g, k, colors) else {
        return true;
    };
    for x in 1..=(used + 1).min(k) {
        if g.neighbors(v).iter().any(|&w| colors[w] == x) {
            continue;
        }
        colors[v] = x;
        if extend(g, k, colors, used.max(x)) {
            return true;
        }
    }
    colors[v] = UNCOLORED;
    false
}
