//! Minimum vertex cover by bounded branching.
//!
//! Branch on a maximum-degree vertex `v`: either `v` joins the cover, or
//! all of its remaining neighbors do. Degree-one vertices are resolved by
//! taking their neighbor. A branch is cut once its size plus a simple
//! lower bound reaches the best cover found so far.

use crate::graph::{Graph, Vertex};

/// A minimum-cardinality vertex cover, sorted.
pub fn min_vertex_cover(g: &Graph) -> Vec<Vertex> {
    let n = g.n();
    let mut state = State {
        graph: g,
        removed: vec![false; n],
        degree: g.vertices().map(|v| g.degree(v)).collect(),
        edges: g.m(),
        chosen: Vec::new(),
        best: g.vertices().collect(),
    };
    // Start from a greedy cover so pruning bites immediately.
    state.best = greedy_cover(g);
    state.branch();
    let mut best = state.best;
    best.sort_unstable();
    best
}

fn greedy_cover(g: &Graph) -> Vec<Vertex> {
    let mut covered = vec![false; g.n()];
    let mut cover = Vec::new();
    for (u, v) in g.edges() {
        if !covered[u] && !covered[v] {
            covered[u] = true;
            covered[v] = true;
            cover.push(u);
            cover.push(v);
        }
    }
    cover
}

struct State<'a> {
    graph: &'a Graph,
    removed: Vec<bool>,
    degree: Vec<usize>,
    edges: usize,
    chosen: Vec<Vertex>,
    best: Vec<Vertex>,
}

impl State<'_> {
    fn take(&mut self, v: Vertex) {
        debug_assert!(!self.removed[v]);
        self.removed[v] = true;
        self.chosen.push(v);
        for &w in self.graph.neighbors(v) {
            if !self.removed[w] {
                self.degree[w] -= 1;
                self.edges -= 1;
            }
        }
    }

    fn untake(&mut self) {
        let v = self.chosen.pop().expect("something to undo");
        self.removed[v] = false;
        for &w in self.graph.neighbors(v) {
            if !self.removed[w] {
                self.degree[w] += 1;
                self.edges += 1;
            }
        }
    }

    fn branch(&mut self) {
        if self.edges == 0 {
            if self.chosen.len() < self.best.len() {
                self.best = self.chosen.clone();
            }
            return;
        }
        let live = || {
            self.graph
                .vertices()
                .filter(|&v| !self.removed[v] && self.degree[v] > 0)
        };
        let (max_deg, v) = live()
            .map(|v| (self.degree[v], v))
            .max_by_key(|&(d, v)| (d, std::cmp::Reverse(v)))
            .unwrap();
        // Each further cover vertex removes at most `max_deg` edges.
        let bound = self.chosen.len() + self.edges.div_ceil(max_deg);
        if bound >= self.best.len() {
            return;
        }
        if let Some(leaf) = live().find(|&u| self.degree[u] == 1) {
            let w = self
                .graph
                .neighbors(leaf)
                .iter()
                .copied()
                .find(|&w| !self.removed[w])
                .unwrap();
            self.take(w);
            self.branch();
            self.untake();
            return;
        }

        self.take(v);
        self.branch();
        self.untake();

        let nbrs: Vec<Vertex> = self
            .graph
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| !self.removed[w])
            .collect();
        if self.chosen.len() + nbrs.len() < self.best.len() {
            for &w in &nbrs {
                self.take(w);
            }
            self.branch();
            for _ in &nbrs {
                self.untake();
            }
        }
    }
}
