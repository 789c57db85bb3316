//! Reference oracles.
//!
//! These are deliberately naive: vertices in index order, every color tried,
//! no propagation or symmetry breaking. They share no search code with
//! [`super::search`] so the two can be checked against each other.

use fixedbitset::FixedBitSet;

use crate::coloring::{Color, Coloring};
use crate::graph::{Edge, Graph, Vertex};

/// Enumerates `q`-colorings in lexicographic order, abandoning a prefix as
/// soon as it contains a monochromatic triangle or polar edge. Returns the
/// first complete coloring found.
pub fn oracle_tf_coloring(g: &Graph, q: Color, polar: Option<&[Edge]>) -> Option<Coloring> {
    let n = g.n();
    if n == 0 {
        return Some(Coloring::from_parts_unchecked(q, Vec::new()));
    }
    if q == 0 {
        return None;
    }
    // Constraints owned by their highest-indexed vertex.
    let mut triangles_at: Vec<Vec<(Vertex, Vertex)>> = vec![Vec::new(); n];
    for a in 0..n {
        for b in a + 1..n {
            if !g.has_edge(a, b) {
                continue;
            }
            for (c, owned) in triangles_at.iter_mut().enumerate().skip(b + 1) {
                if g.has_edge(a, c) && g.has_edge(b, c) {
                    owned.push((a, b));
                }
            }
        }
    }
    let mut polar_at: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    for &(a, b) in polar.unwrap_or(&[]) {
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        polar_at[hi].push(lo);
    }

    let consistent = |colors: &[Color], v: Vertex| {
        let x = colors[v];
        polar_at[v].iter().all(|&w| colors[w] != x)
            && triangles_at[v].iter().all(|&(a, b)| colors[a] != x || colors[b] != x)
    };

    let mut colors = vec![1; n];
    let mut v = 0;
    loop {
        if consistent(&colors, v) {
            if v + 1 == n {
                return Some(Coloring::from_parts_unchecked(q, colors));
            }
            v += 1;
            colors[v] = 1;
            continue;
        }
        // Advance the odometer at v, carrying into earlier positions.
        loop {
            if colors[v] < q {
                colors[v] += 1;
                break;
            }
            if v == 0 {
                return None;
            }
            v -= 1;
        }
    }
}

/// Smallest `k` with a triangle-free (polar-respecting) `k`-coloring,
/// with a witness. The empty graph has value 0.
pub fn oracle_chi3(g: &Graph, polar: Option<&[Edge]>) -> (Color, Coloring) {
    if g.n() == 0 {
        return (0, Coloring::monochromatic(0));
    }
    (1..)
        .find_map(|k| oracle_tf_coloring(g, k, polar).map(|c| (k, c)))
        .expect("n colors always suffice")
}

/// Chromatic number by plain backtracking in index order.
pub fn oracle_chi(g: &Graph) -> Color {
    fn extend(g: &Graph, colors: &mut [Color], v: Vertex, k: Color) -> bool {
        if v == colors.len() {
            return true;
        }
        for x in 1..=k {
            if g.neighbors(v).iter().all(|&w| w > v || colors[w] != x) {
                colors[v] = x;
                if extend(g, colors, v + 1, k) {
                    return true;
                }
            }
        }
        colors[v] = 0;
        false
    }
    if g.n() == 0 {
        return 0;
    }
    let mut colors = vec![0; g.n()];
    (1..)
        .find(|&k| extend(g, &mut colors, 0, k))
        .expect("n colors always suffice")
}

/// Clique number by branch and bound over candidate sets.
pub fn oracle_omega(g: &Graph) -> usize {
    max_clique(g).len()
}

/// A maximum clique, vertices in increasing order.
pub fn max_clique(g: &Graph) -> Vec<Vertex> {
    fn expand(g: &Graph, current: &mut Vec<Vertex>, candidates: FixedBitSet, best: &mut Vec<Vertex>) {
        if current.len() > best.len() {
            *best = current.clone();
        }
        let mut remaining = candidates;
        while let Some(v) = remaining.ones().next() {
            if current.len() + remaining.count_ones(..) <= best.len() {
                return;
            }
            remaining.set(v, false);
            let mut next = remaining.clone();
            next.intersect_with(g.adjacency_row(v));
            current.push(v);
            expand(g, current, next, best);
            current.pop();
        }
    }
    let mut all = FixedBitSet::with_capacity(g.n());
    all.insert_range(..);
    let mut best = Vec::new();
    expand(g, &mut Vec::new(), all, &mut best);
    best.sort_unstable();
    best
}
