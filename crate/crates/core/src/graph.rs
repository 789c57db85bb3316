//! Simple undirected graphs on dense `0..n` vertex indices.
//!
//! A [`Graph`] is immutable once built. Every vertex keeps both a sorted
//! neighbor list (for iteration) and a bitset row (for constant-time
//! adjacency queries), which is what the backtracking solvers lean on.

use std::collections::BTreeSet;
use std::fmt;

use fixedbitset::FixedBitSet;
use thiserror::Error;

/// Vertex index. Vertices of a graph on `n` vertices are `0..n`.
pub type Vertex = usize;

/// Unordered edge, stored with the smaller endpoint first.
pub type Edge = (Vertex, Vertex);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("cannot identify vertex {0} with itself")]
    IdentifySameVertex(Vertex),
    #[error("{{{0}, {1}}} is not an edge")]
    NotAnEdge(Vertex, Vertex),
}

/// Normalizes an unordered pair so that the smaller endpoint comes first.
#[inline]
pub fn edge(u: Vertex, v: Vertex) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<FixedBitSet>,
    neighbors: Vec<Vec<Vertex>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph on `n` vertices with exactly the given edges.
    ///
    /// Self-loops, repeated edges (in either orientation) and out-of-range
    /// endpoints are rejected, each with its own error.
    pub fn new<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut adjacency = vec![FixedBitSet::with_capacity(n); n];
        let mut neighbors = vec![Vec::new(); n];
        let mut edge_count = 0;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if adjacency[u].contains(v) {
                let (a, b) = edge(u, v);
                return Err(GraphError::DuplicateEdge(a, b));
            }
            adjacency[u].insert(v);
            adjacency[v].insert(u);
            neighbors[u].push(v);
            neighbors[v].push(u);
            edge_count += 1;
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }
        Ok(Graph {
            adjacency,
            neighbors,
            edge_count,
        })
    }

    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Graph {
        Graph::new(n, std::iter::empty()).expect("edgeless graph is always valid")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.neighbors.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edge_count
    }

    pub fn is_empty(&self) -> bool {
        self.n() == 0
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && self.adjacency[u].contains(v)
    }

    /// Sorted neighbor list of `v`.
    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.neighbors[v]
    }

    /// Bitset row of `v`'s neighborhood.
    #[inline]
    pub fn adjacency_row(&self, v: Vertex) -> &FixedBitSet {
        &self.adjacency[v]
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors[v].len()
    }

    /// Maximum degree, `0` for the empty graph.
    pub fn max_degree(&self) -> usize {
        self.neighbors.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    /// All edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.neighbors
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().copied().filter(move |&v| u < v).map(move |v| (u, v)))
    }

    /// Returns `true` if `vertices` are pairwise adjacent.
    pub fn is_clique(&self, vertices: &[Vertex]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &a)| vertices[i + 1..].iter().all(|&b| a != b && self.has_edge(a, b)))
    }

    /// Returns `true` if no two of `vertices` are adjacent.
    pub fn is_independent(&self, vertices: &[Vertex]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &a)| vertices[i + 1..].iter().all(|&b| !self.has_edge(a, b)))
    }

    /// The common degree if every vertex has the same degree.
    pub fn is_regular(&self) -> Option<usize> {
        let d = self.neighbors.first().map_or(0, Vec::len);
        self.neighbors.iter().all(|l| l.len() == d).then_some(d)
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.m() == n * n.saturating_sub(1) / 2
    }

    /// Identifies the ordered pair `(keep, remove)`.
    ///
    /// `remove` disappears and each of its neighbors becomes adjacent to
    /// `keep`; the loop and any parallel edges this would create are dropped.
    /// Vertices above `remove` shift down by one. The returned map sends
    /// every old vertex to its new index, with `remove` sent to the new
    /// index of `keep`.
    pub fn identify(&self, keep: Vertex, remove: Vertex) -> Result<(Graph, Vec<Vertex>), GraphError> {
        let n = self.n();
        for w in [keep, remove] {
            if w >= n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n });
            }
        }
        if keep == remove {
            return Err(GraphError::IdentifySameVertex(keep));
        }
        let renumber = |w: Vertex| if w > remove { w - 1 } else { w };
        let map: Vec<Vertex> = (0..n)
            .map(|w| if w == remove { renumber(keep) } else { renumber(w) })
            .collect();
        let mut edges = BTreeSet::new();
        for (a, b) in self.edges() {
            let (a, b) = (map[a], map[b]);
            if a != b {
                edges.insert(edge(a, b));
            }
        }
        let graph = Graph::new(n - 1, edges).expect("quotient of a simple graph is simple");
        Ok((graph, map))
    }

    /// Applies a sequence of identifications in order.
    ///
    /// Pairs refer to vertices of `self`; the returned map composes all the
    /// intermediate renamings.
    pub fn identify_all(&self, pairs: &[(Vertex, Vertex)]) -> Result<(Graph, Vec<Vertex>), GraphError> {
        let mut graph = self.clone();
        let mut map: Vec<Vertex> = self.vertices().collect();
        for &(keep, remove) in pairs {
            let (next, step) = graph.identify(map[keep], map[remove])?;
            for slot in &mut map {
                *slot = step[*slot];
            }
            graph = next;
        }
        Ok((graph, map))
    }

    /// Subgraph induced by `vertices`, renumbered in the given order.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> Graph {
        let mut position = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            position[v] = i;
        }
        let edges = vertices.iter().enumerate().flat_map(|(i, &v)| {
            let position = &position;
            self.neighbors(v)
                .iter()
                .filter(move |&&w| position[w] != usize::MAX && i < position[w])
                .map(move |&w| (i, position[w]))
        });
        Graph::new(vertices.len(), edges.collect::<Vec<_>>()).expect("induced subgraph is simple")
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in self.vertices() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                for &w in self.neighbors(comp[i]) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
                i += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Incremental construction for generators that compose pieces.
///
/// Unlike [`Graph::new`], repeated edges are merged silently. Self-loops
/// still panic since no generator should ever produce one.
#[derive(Debug, Clone, Default)]
pub struct GraphBuilder {
    n: usize,
    edges: BTreeSet<Edge>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        GraphBuilder {
            n,
            edges: BTreeSet::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_vertex(&mut self) -> Vertex {
        self.n += 1;
        self.n - 1
    }

    pub fn add_vertices(&mut self, count: usize) -> std::ops::Range<Vertex> {
        let start = self.n;
        self.n += count;
        start..self.n
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) {
        assert!(u != v, "generator produced a self-loop at {u}");
        assert!(u < self.n && v < self.n, "edge {{{u}, {v}}} out of range");
        self.edges.insert(edge(u, v));
    }

    pub fn add_clique(&mut self, vertices: &[Vertex]) {
        for (i, &a) in vertices.iter().enumerate() {
            for &b in &vertices[i + 1..] {
                self.add_edge(a, b);
            }
        }
    }

    /// Copies `graph` in as fresh vertices; returns the offset of vertex 0.
    pub fn add_graph(&mut self, graph: &Graph) -> Vertex {
        let offset = self.add_vertices(graph.n()).start;
        for (u, v) in graph.edges() {
            self.add_edge(offset + u, offset + v);
        }
        offset
    }

    pub fn build(self) -> Graph {
        Graph::new(self.n, self.edges).expect("builder edges are deduplicated and in range")
    }
}
