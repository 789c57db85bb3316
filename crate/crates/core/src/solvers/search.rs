//! Backtracking search for triangle-free `q`-colorings.
//!
//! Every vertex carries a bitmask of colors still available to it. The next
//! vertex to color is one with the fewest available colors, ties going to
//! higher degree, then to the smaller index (or a seeded random key).
//! Coloring `v` with `x` removes `x` from each uncolored `z` that closes a
//! triangle with `v` and an `x`-colored neighbor of `v`, and from each
//! uncolored polar neighbor of `v`. A wiped-out domain triggers an immediate backtrack. Color labels are
//! interchangeable, so a vertex may take any color already in use or the
//! single smallest unused one, never a second fresh label.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::coloring::{Color, Coloring, UNCOLORED};
use crate::graph::{Edge, Graph, Vertex};

/// Largest palette the bitmask domains can represent.
pub const MAX_SEARCH_COLORS: Color = 64;

#[derive(Debug, Clone, Default)]
pub struct SearchOptions {
    /// Shuffles tie-breaking in the vertex order and the order in which
    /// colors are tried. `None` keeps the search fully deterministic.
    pub seed: Option<u64>,
    /// Worker threads for splitting the top of the search tree. `0` and `1`
    /// both mean sequential.
    pub jobs: usize,
}

/// Triangle-free `q`-coloring of `g` avoiding monochromatic polar edges,
/// or `None` if none exists.
pub fn decide_tf_q(g: &Graph, q: Color, polar: Option<&[Edge]>) -> Option<Coloring> {
    decide_tf_q_with(g, q, polar, &SearchOptions::default())
}

/// [`decide_tf_q`] with explicit search options.
///
/// # Panics
///
/// If the instance needs a real search over more than
/// [`MAX_SEARCH_COLORS`] colors. Palettes of at least `ceil(n / 2)` colors
/// (or `n` with polar edges) are answered directly and never panic.
pub fn decide_tf_q_with(g: &Graph, q: Color, polar: Option<&[Edge]>, options: &SearchOptions) -> Option<Coloring> {
    let n = g.n();
    let polar = polar.unwrap_or(&[]);
    if n == 0 {
        return Some(Coloring::from_parts_unchecked(q, Vec::new()));
    }
    if q == 0 {
        return None;
    }
    // Each color on at most two vertices leaves no room for a monochromatic
    // triangle; with polar edges fall back to all-distinct colors.
    let spread = if polar.is_empty() { n.div_ceil(2) } else { n };
    if q as usize >= spread {
        let width = if polar.is_empty() { 2 } else { 1 };
        let colors = (0..n).map(|v| (v / width) as Color + 1).collect();
        return Some(Coloring::from_parts_unchecked(q, colors));
    }
    assert!(
        q <= MAX_SEARCH_COLORS,
        "search over {q} colors exceeds the supported {MAX_SEARCH_COLORS}"
    );

    let mut search = Search::new(g, q, polar, options.seed);
    let jobs = options.jobs.max(1);
    let found = if jobs == 1 {
        search.run(0).then(|| search.colors.clone())
    } else {
        let depth = split_depth(n, jobs);
        let mut prefixes = Vec::new();
        search.collect_prefixes(0, depth, &mut Vec::new(), &mut prefixes);
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool");
        pool.install(|| {
            prefixes.par_iter().find_map_first(|prefix| {
                let mut worker = Search::new(g, q, polar, options.seed.map(|s| s ^ prefix.len() as u64));
                let mut used = 0;
                for &(v, x) in prefix {
                    let ok = worker.assign(v, x);
                    debug_assert!(ok, "prefix replay must succeed");
                    used = used.max(x);
                }
                worker.run(used).then(|| worker.colors.clone())
            })
        })
    };
    found.map(|colors| Coloring::from_parts_unchecked(q, colors))
}

/// Smallest `q` admitting a triangle-free (polar-respecting) `q`-coloring,
/// found by running [`decide_tf_q_with`] for `q = 1, 2, ...`.
pub fn exact_chi3(g: &Graph, polar: Option<&[Edge]>, options: &SearchOptions) -> (Color, Coloring) {
    if g.n() == 0 {
        return (0, Coloring::monochromatic(0));
    }
    (1..)
        .find_map(|q| decide_tf_q_with(g, q, polar, options).map(|c| (q, c)))
        .expect("n colors always suffice")
}

fn split_depth(n: usize, jobs: usize) -> usize {
    // Enough prefixes to keep every worker busy without replaying much.
    let want = (jobs * 8).next_power_of_two().trailing_zeros() as usize + 1;
    want.min(n)
}

struct Search<'a> {
    graph: &'a Graph,
    q: Color,
    /// Static part of the selection key: higher degree first, then the
    /// tie-break value.
    rank: Vec<(std::cmp::Reverse<usize>, u64)>,
    colors: Vec<Color>,
    uncolored: usize,
    domains: Vec<u64>,
    trail: Vec<(Vertex, u64)>,
    polar: Vec<Vec<Vertex>>,
    rng: Option<ChaCha8Rng>,
}

impl<'a> Search<'a> {
    fn new(graph: &'a Graph, q: Color, polar_edges: &[Edge], seed: Option<u64>) -> Self {
        let n = graph.n();
        let mut rng = seed.map(ChaCha8Rng::seed_from_u64);
        let tiebreak: Vec<u64> = match rng.as_mut() {
            Some(rng) => (0..n).map(|_| rng.gen()).collect(),
            None => (0..n as u64).collect(),
        };
        let rank = graph
            .vertices()
            .map(|v| (std::cmp::Reverse(graph.degree(v)), tiebreak[v]))
            .collect();
        let mut polar = vec![Vec::new(); n];
        for &(a, b) in polar_edges {
            polar[a].push(b);
            polar[b].push(a);
        }
        let full = if q == 64 { u64::MAX } else { (1u64 << q) - 1 };
        Search {
            graph,
            q,
            rank,
            colors: vec![UNCOLORED; n],
            uncolored: n,
            domains: vec![full; n],
            trail: Vec::new(),
            polar,
            rng,
        }
    }

    fn restrict(&mut self, z: Vertex, bit: u64) -> bool {
        let d = self.domains[z];
        if d & bit != 0 {
            self.trail.push((z, d));
            self.domains[z] = d & !bit;
        }
        self.domains[z] != 0
    }

    /// Colors `v` with `x` and propagates. On `false` the caller must undo.
    fn assign(&mut self, v: Vertex, x: Color) -> bool {
        self.colors[v] = x;
        self.uncolored -= 1;
        let bit = 1u64 << (x - 1);
        for i in 0..self.polar[v].len() {
            let w = self.polar[v][i];
            if self.colors[w] == UNCOLORED && !self.restrict(w, bit) {
                return false;
            }
        }
        let graph = self.graph;
        let nbrs = graph.neighbors(v);
        for &w in nbrs {
            if self.colors[w] != x {
                continue;
            }
            for &z in nbrs {
                if self.colors[z] == UNCOLORED && graph.has_edge(w, z) && !self.restrict(z, bit) {
                    return false;
                }
            }
        }
        true
    }

    fn undo(&mut self, v: Vertex, mark: usize) {
        for (z, d) in self.trail.drain(mark..).rev() {
            self.domains[z] = d;
        }
        self.colors[v] = UNCOLORED;
        self.uncolored += 1;
    }

    /// The uncolored vertex with the smallest domain.
    fn select(&self) -> Option<Vertex> {
        if self.uncolored == 0 {
            return None;
        }
        (0..self.colors.len())
            .filter(|&v| self.colors[v] == UNCOLORED)
            .min_by_key(|&v| (self.domains[v].count_ones(), self.rank[v]))
    }

    /// Candidate colors for `v`, in trial order.
    fn candidates(&mut self, v: Vertex, used: Color) -> Vec<Color> {
        let limit = (used + 1).min(self.q);
        let mask = if limit == 64 { u64::MAX } else { (1u64 << limit) - 1 };
        let allowed = self.domains[v] & mask;
        let mut list: Vec<Color> = (0..limit).filter(|b| allowed >> b & 1 == 1).map(|b| b + 1).collect();
        if let Some(rng) = self.rng.as_mut() {
            list.shuffle(rng);
        }
        list
    }

    fn run(&mut self, used: Color) -> bool {
        let Some(v) = self.select() else {
            return true;
        };
        for x in self.candidates(v, used) {
            let mark = self.trail.len();
            if self.assign(v, x) && self.run(used.max(x)) {
                return true;
            }
            self.undo(v, mark);
        }
        false
    }

    fn collect_prefixes(
        &mut self,
        used: Color,
        limit: usize,
        prefix: &mut Vec<(Vertex, Color)>,
        out: &mut Vec<Vec<(Vertex, Color)>>,
    ) {
        let v = match self.select() {
            Some(v) if prefix.len() < limit => v,
            _ => {
                out.push(prefix.clone());
                return;
            }
        };
        for x in self.candidates(v, used) {
            let mark = self.trail.len();
            if self.assign(v, x) {
                prefix.push((v, x));
                self.collect_prefixes(used.max(x), limit, prefix, out);
                prefix.pop();
            }
            self.undo(v, mark);
        }
    }
}
