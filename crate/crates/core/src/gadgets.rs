//! Graph generators: stock families, cycle-cliques, the clique contraction
//! scheme, clover graphs, the K4-free polar gadget and its triangle
//! composition, and Mycielski iterates.

use thiserror::Error;

use crate::coloring::{Color, Coloring};
use crate::graph::{Graph, GraphBuilder, GraphError, Vertex};
use crate::triangles::contains_k4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GadgetError {
    #[error("parameter {name} must be at least {min}, got {value}")]
    ParameterTooSmall {
        name: &'static str,
        min: usize,
        value: usize,
    },
    #[error("the three vertex tuples must have the same length")]
    LengthMismatch,
    #[error("vertex {0} appears in more than one tuple")]
    NotDisjoint(Vertex),
    #[error("tuple {0} does not induce a clique")]
    NotClique(char),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn at_least(name: &'static str, value: usize, min: usize) -> Result<(), GadgetError> {
    if value < min {
        return Err(GadgetError::ParameterTooSmall { name, min, value });
    }
    Ok(())
}

pub fn complete(n: usize) -> Graph {
    let mut b = GraphBuilder::new(n);
    b.add_clique(&(0..n).collect::<Vec<_>>());
    b.build()
}

/// The cycle `0 - 1 - ... - (n-1) - 0`, for `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph, GadgetError> {
    at_least("n", n, 3)?;
    let mut b = GraphBuilder::new(n);
    for i in 0..n {
        b.add_edge(i, (i + 1) % n);
    }
    Ok(b.build())
}

/// The path `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Graph {
    let mut b = GraphBuilder::new(n);
    for i in 1..n {
        b.add_edge(i - 1, i);
    }
    b.build()
}

/// Five cliques `J_0..J_4` of size `k` arranged in a ring, with every
/// vertex of `J_i` adjacent to every vertex of `J_{i±1 mod 5}`.
///
/// Vertex `v_{i,j}` has index `i * k + j`.
#[derive(Debug, Clone)]
pub struct CycleClique {
    pub graph: Graph,
    pub joints: [Vec<Vertex>; 5],
    pub k: usize,
}

impl CycleClique {
    pub fn vertex(&self, joint: usize, j: usize) -> Vertex {
        joint * self.k + j
    }

    /// Colors every joint `1..=k` in vertex order. Each color then occurs
    /// at most twice in any two adjacent joints, so no triangle is
    /// monochromatic.
    pub fn rainbow_coloring(&self) -> Coloring {
        let colors = (0..5 * self.k).map(|v| (v % self.k) as Color + 1).collect();
        Coloring::from_parts_unchecked(self.k as Color, colors)
    }
}

pub fn gen_cycle_clique(k: usize) -> Result<CycleClique, GadgetError> {
    at_least("k", k, 1)?;
    let joints: [Vec<Vertex>; 5] = std::array::from_fn(|i| (i * k..(i + 1) * k).collect());
    let mut b = GraphBuilder::new(5 * k);
    for i in 0..5 {
        b.add_clique(&joints[i]);
        for &a in &joints[i] {
            for &c in &joints[(i + 1) % 5] {
                b.add_edge(a, c);
            }
        }
    }
    Ok(CycleClique {
        graph: b.build(),
        joints,
        k,
    })
}

/// The ordered identifications that merge three `k`-cliques into one
/// `(k+1)`-clique. Each pair is `(keep, remove)`.
pub fn contraction_pairs(u: &[Vertex], v: &[Vertex], w: &[Vertex]) -> Vec<(Vertex, Vertex)> {
    let k = v.len();
    let mut pairs = Vec::with_capacity(2 * k - 1);
    pairs.extend((0..k - 1).map(|i| (v[i], u[i])));
    pairs.extend((0..k.saturating_sub(2)).map(|i| (v[i], w[i])));
    pairs.push((v[k - 1], w[k - 2]));
    pairs.push((u[k - 1], w[k - 1]));
    pairs
}

/// Runs the clique contraction scheme on the disjoint `k`-cliques `u`,
/// `v`, `w` of `g`:
///
/// 1. `(v_i, u_i)` for `i = 0..=k-2`,
/// 2. `(v_i, w_i)` for `i = 0..=k-3`,
/// 3. `(v_{k-1}, w_{k-2})`, then `(u_{k-1}, w_{k-1})`.
///
/// Returns the contracted graph and the old-to-new vertex map.
pub fn clique_contraction(
    g: &Graph,
    u: &[Vertex],
    v: &[Vertex],
    w: &[Vertex],
) -> Result<(Graph, Vec<Vertex>), GadgetError> {
    let k = v.len();
    if u.len() != k || w.len() != k {
        return Err(GadgetError::LengthMismatch);
    }
    at_least("k", k, 2)?;
    for &x in u.iter().chain(v).chain(w) {
        if x >= g.n() {
            return Err(GraphError::VertexOutOfRange { vertex: x, n: g.n() }.into());
        }
    }
    let mut seen = vec![false; g.n()];
    for &x in u.iter().chain(v).chain(w) {
        if std::mem::replace(&mut seen[x], true) {
            return Err(GadgetError::NotDisjoint(x));
        }
    }
    for (name, tuple) in [('U', u), ('V', v), ('W', w)] {
        if !g.is_clique(tuple) {
            return Err(GadgetError::NotClique(name));
        }
    }
    Ok(g.identify_all(&contraction_pairs(u, v, w))?)
}

/// Three `k`-cycle-cliques glued by the clique contraction scheme on one
/// joint of each.
#[derive(Debug, Clone)]
pub struct Clover {
    pub graph: Graph,
    pub k: usize,
    /// The `k + 1` vertices produced by the contraction, which form a clique.
    pub center: Vec<Vertex>,
    /// For each of the three cycle-cliques, where its `5k` vertices ended up.
    pub parts: [Vec<Vertex>; 3],
}

impl Clover {
    /// The `(k+1)`-coloring that is rainbow on the center: center vertices
    /// get `1..=k+1` in order, and every joint of each cycle-clique copies
    /// the colors of that copy's contracted joint, position by position.
    pub fn rainbow_witness(&self) -> Coloring {
        let k = self.k;
        let mut colors = vec![0; self.graph.n()];
        for (x, &v) in self.center.iter().enumerate() {
            colors[v] = x as Color + 1;
        }
        for part in &self.parts {
            for (i, &v) in part.iter().enumerate() {
                colors[v] = colors[part[i % k]];
            }
        }
        Coloring::from_parts_unchecked(k as Color + 1, colors)
    }
}

/// Builds the `k`-clover graph on `13k + 1` vertices.
///
/// The scheme's `V`, `U`, `W` are joint 0 of the first, second and third
/// cycle-clique respectively, each in vertex order.
pub fn gen_clover(k: usize) -> Result<Clover, GadgetError> {
    at_least("k", k, 2)?;
    let piece = gen_cycle_clique(k)?;
    let mut b = GraphBuilder::new(0);
    let offsets = [0, 1, 2].map(|_| b.add_graph(&piece.graph));
    let joint0 = |offset: Vertex| -> Vec<Vertex> { piece.joints[0].iter().map(|&x| x + offset).collect() };
    let (v, u, w) = (joint0(offsets[0]), joint0(offsets[1]), joint0(offsets[2]));
    let disjoint = b.build();
    let (graph, map) = clique_contraction(&disjoint, &u, &v, &w)?;
    assert_eq!(graph.n(), 13 * k + 1, "clover must have 13k + 1 vertices");

    let mut center: Vec<Vertex> = u.iter().chain(&v).chain(&w).map(|&x| map[x]).collect();
    center.sort_unstable();
    center.dedup();
    debug_assert_eq!(center.len(), k + 1);
    let parts = offsets.map(|offset| (offset..offset + 5 * k).map(|x| map[x]).collect());
    Ok(Clover {
        graph,
        k,
        center,
        parts,
    })
}

/// Twelve-vertex triangle-free-2-colorable graph in which the edge `u v`
/// is bichromatic in every triangle-free 2-coloring, and which contains
/// no `K4`.
#[derive(Debug, Clone)]
pub struct PolarGadget {
    pub graph: Graph,
    pub u: Vertex,
    pub v: Vertex,
}

/// Vertex names of the polar gadget, in index order.
pub mod polar_vertex {
    use crate::graph::Vertex;

    pub const U: Vertex = 0;
    pub const V: Vertex = 1;
    pub const W: [Vertex; 4] = [2, 3, 4, 5];
    pub const Z: [Vertex; 3] = [6, 7, 8];
    pub const Y: [Vertex; 3] = [9, 10, 11];
    pub const NAMES: [&str; 12] = ["u", "v", "w1", "w2", "w3", "w4", "z1", "z2", "z3", "y1", "y2", "y3"];
}

/// The 30 edges of the polar gadget.
pub fn polar_gadget_edges() -> Vec<(Vertex, Vertex)> {
    use polar_vertex::{U, V, W, Y, Z};
    let mut edges = vec![(U, V)];
    for w in W {
        edges.push((U, w));
        edges.push((V, w));
    }
    edges.extend([(V, Z[0]), (V, Y[0]), (Z[0], Y[0])]);
    // One side hangs off w1, w2 through z1..z3; the other mirrors it on
    // w3, w4 through y1..y3.
    for (w, s) in [([W[0], W[1]], Z), ([W[2], W[3]], Y)] {
        edges.extend([
            (w[0], s[0]),
            (w[0], s[1]),
            (s[0], s[1]),
            (U, s[1]),
            (U, s[2]),
            (s[1], s[2]),
            (w[1], s[0]),
            (w[1], s[2]),
            (s[0], s[2]),
        ]);
    }
    edges
}

/// Witness 2-coloring of the gadget with `c(u) = cu`, `c(v) = cv`:
/// `{u, z1, y1}` take `cu`, everything else `cv`.
pub fn polar_gadget_coloring(cu: Color, cv: Color) -> [Color; 12] {
    use polar_vertex::{U, Y, Z};
    let mut colors = [cv; 12];
    for x in [U, Z[0], Y[0]] {
        colors[x] = cu;
    }
    colors
}

/// Outcome of exhaustively checking the three gadget properties.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GadgetCertificate {
    /// Number of triangle-free 2-colorings out of all `2^12`.
    pub triangle_free_colorings: usize,
    /// How many of those color `u` and `v` alike.
    pub with_equal_poles: usize,
    pub contains_k4: bool,
}

impl GadgetCertificate {
    pub fn holds(&self) -> bool {
        self.triangle_free_colorings > 0 && self.with_equal_poles == 0 && !self.contains_k4
    }
}

/// Scans every 2-coloring of `gadget` and its 4-subsets.
pub fn certify_polar_gadget(gadget: &PolarGadget) -> GadgetCertificate {
    let g = &gadget.graph;
    let n = g.n();
    let mut triangles = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if g.is_clique(&[a, b, c]) {
                    triangles.push((1u32 << a) | (1 << b) | (1 << c));
                }
            }
        }
    }
    let mut triangle_free_colorings = 0;
    let mut with_equal_poles = 0;
    for mask in 0u32..1 << n {
        // bit set = color 2
        let ok = triangles.iter().all(|&t| mask & t != 0 && mask & t != t);
        if ok {
            triangle_free_colorings += 1;
            if (mask >> gadget.u & 1) == (mask >> gadget.v & 1) {
                with_equal_poles += 1;
            }
        }
    }
    GadgetCertificate {
        triangle_free_colorings,
        with_equal_poles,
        contains_k4: contains_k4(g),
    }
}

/// Builds the polar gadget and certifies it.
///
/// # Panics
///
/// If the exhaustive certification fails, which would be a bug in the edge
/// list rather than a user error.
pub fn gen_polar_gadget() -> PolarGadget {
    let graph = Graph::new(12, polar_gadget_edges()).expect("gadget edge list is simple");
    let gadget = PolarGadget {
        graph,
        u: polar_vertex::U,
        v: polar_vertex::V,
    };
    let cert = certify_polar_gadget(&gadget);
    assert!(cert.holds(), "polar gadget failed certification: {cert:?}");
    gadget
}

/// Adds a copy of the polar gadget whose `u` and `v` are the existing
/// vertices `a` and `b`. Returns the ten new vertices in gadget order
/// (`w1..w4, z1..z3, y1..y3`).
pub fn attach_polar_gadget(b: &mut GraphBuilder, a: Vertex, bv: Vertex) -> [Vertex; 10] {
    let fresh = b.add_vertices(10);
    let mut map = [0; 12];
    map[polar_vertex::U] = a;
    map[polar_vertex::V] = bv;
    for (slot, x) in map[2..].iter_mut().zip(fresh) {
        *slot = x;
    }
    for (x, y) in polar_gadget_edges() {
        b.add_edge(map[x], map[y]);
    }
    std::array::from_fn(|i| map[i + 2])
}

/// Three polar gadgets whose polar edges form the triangle `{0, 1, 2}`:
/// the gadgets sit on `(0, 1)`, `(1, 2)` and `(2, 0)`. The result has
/// `3 + 3 * 10 = 33` vertices, clique number 3, and needs three colors.
pub fn gen_polar_triangle() -> Graph {
    let mut b = GraphBuilder::new(3);
    for (a, c) in [(0, 1), (1, 2), (2, 0)] {
        attach_polar_gadget(&mut b, a, c);
    }
    b.build()
}

/// The Mycielskian: for each vertex `v_i` a shadow `u_i` adjacent to the
/// neighbors of `v_i`, plus an apex adjacent to every shadow.
pub fn mycielskian(g: &Graph) -> Graph {
    let n = g.n();
    let mut b = GraphBuilder::new(2 * n + 1);
    for (x, y) in g.edges() {
        b.add_edge(x, y);
        b.add_edge(x, n + y);
        b.add_edge(n + x, y);
    }
    for i in 0..n {
        b.add_edge(n + i, 2 * n);
    }
    b.build()
}

/// `t` Mycielskian steps starting from `K2`: triangle-free with chromatic
/// number `t + 2`.
pub fn gen_mycielski(t: usize) -> Graph {
    (0..t).fold(complete(2), |g, _| mycielskian(&g))
}
