//! Seeded random graph families for tests and benchmarks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{Graph, GraphBuilder, Vertex};

/// Erdős-Rényi `G(n, p)`.
pub fn gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut b = GraphBuilder::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                b.add_edge(u, v);
            }
        }
    }
    b.build()
}

/// A random `k`-tree on `n >= k` vertices: start from `K_k`, then attach
/// every new vertex to a randomly chosen existing `k`-clique. Vertex labels
/// are shuffled so the construction order is not the index order.
pub fn k_tree<R: Rng + ?Sized>(k: usize, n: usize, rng: &mut R) -> Graph {
    assert!(n >= k, "a {k}-tree needs at least {k} vertices");
    let mut label: Vec<Vertex> = (0..n).collect();
    label.shuffle(rng);
    let mut b = GraphBuilder::new(n);
    let base: Vec<Vertex> = label[..k].to_vec();
    b.add_clique(&base);
    let mut cliques = vec![base];
    for &v in &label[k..] {
        let host = cliques[rng.gen_range(0..cliques.len())].clone();
        for &x in &host {
            b.add_edge(v, x);
        }
        for drop in 0..host.len() {
            let mut c = host.clone();
            c[drop] = v;
            cliques.push(c);
        }
        if k == 0 {
            cliques.push(Vec::new());
        }
    }
    b.build()
}

/// A random planar graph: grow a stacked triangulation by inserting each new
/// vertex into a random triangular face, then keep every edge with
/// probability `keep`.
pub fn planar<R: Rng + ?Sized>(n: usize, keep: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    if n >= 2 {
        edges.push((0, 1));
    }
    if n >= 3 {
        edges.extend([(0, 2), (1, 2)]);
    }
    let mut faces = vec![[0, 1, 2]];
    for v in 3..n {
        let i = rng.gen_range(0..faces.len());
        let [a, b, c] = faces.swap_remove(i);
        edges.extend([(a, v), (b, v), (c, v)]);
        faces.extend([[a, b, v], [b, c, v], [a, c, v]]);
    }
    let mut builder = GraphBuilder::new(n);
    for (u, v) in edges {
        if rng.gen_bool(keep) {
            builder.add_edge(u, v);
        }
    }
    builder.build()
}

/// A random outerplanar graph: grow a maximal outerplanar graph by inserting
/// each new vertex on a random edge of the outer cycle, then keep every edge
/// with probability `keep`.
pub fn outerplanar<R: Rng + ?Sized>(n: usize, keep: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    let mut outer: Vec<Vertex> = (0..n.min(3)).collect();
    for i in 0..outer.len() {
        for j in i + 1..outer.len() {
            edges.push((outer[i], outer[j]));
        }
    }
    for v in 3..n {
        let i = rng.gen_range(0..outer.len());
        let (a, b) = (outer[i], outer[(i + 1) % outer.len()]);
        edges.extend([(a, v), (b, v)]);
        outer.insert(i + 1, v);
    }
    let mut builder = GraphBuilder::new(n);
    for (u, v) in edges {
        if rng.gen_bool(keep) {
            builder.add_edge(u, v);
        }
    }
    builder.build()
}
