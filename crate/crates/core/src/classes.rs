//! Graph classes on which `chi3` is easy.
//!
//! Chordal graphs are perfect, so `chi3 = ceil(omega / 2)` and an optimal
//! coloring along a perfect elimination ordering gives the witness. On
//! classes with `chi <= 4` the value is 0, 1 or 2 and only depends on
//! whether the graph is empty or has a triangle; the witness path needs an
//! actual small proper coloring, found here by exact backtracking.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::{standard_recolor, verify_triangle_free, Color, Coloring, UNCOLORED};
use crate::graph::{Graph, Vertex};
use crate::solvers::{exact_chi3, proper_coloring, SearchOptions};
use crate::triangles::is_triangle_free;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassError {
    #[error("graph is not chordal")]
    NotChordal,
    #[error("graph is not regular")]
    NotRegular,
    #[error("regular graph has degree {0}, at most 4 is supported")]
    DegreeTooLarge(usize),
    #[error("no proper {colors}-coloring exists, so the graph is not {class}")]
    HintViolated { class: GraphClass, colors: Color },
    #[error("graph has {m} edges, more than any {class} graph on {n} vertices")]
    TooManyEdges { class: GraphClass, n: usize, m: usize },
    #[error("class {0} has no bounded-chromatic pipeline")]
    UnsupportedClass(GraphClass),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphClass {
    Chordal,
    Planar,
    Outerplanar,
    Regular4,
    General,
}

impl GraphClass {
    pub const ALL: [GraphClass; 5] = [
        GraphClass::Chordal,
        GraphClass::Planar,
        GraphClass::Outerplanar,
        GraphClass::Regular4,
        GraphClass::General,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GraphClass::Chordal => "chordal",
            GraphClass::Planar => "planar",
            GraphClass::Outerplanar => "outerplanar",
            GraphClass::Regular4 => "regular4",
            GraphClass::General => "general",
        }
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GraphClass {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GraphClass::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown graph class `{s}`"))
    }
}

/// A claimed graph class.
///
/// `Chordal` and `Regular4` are always checked. Planarity and
/// outerplanarity are not recognized; when `trusted` is false only the edge
/// count bound is checked before the claim is used. A false claim can never
/// produce a wrong answer, only an error, because every witness is verified.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassHint {
    pub tag: GraphClass,
    pub trusted: bool,
}

impl ClassHint {
    pub fn new(tag: GraphClass) -> ClassHint {
        ClassHint { tag, trusted: false }
    }

    pub fn trusted(tag: GraphClass) -> ClassHint {
        ClassHint { tag, trusted: true }
    }
}

/// Lexicographic breadth-first search by partition refinement.
///
/// Returns the visiting order. Its reverse is a perfect elimination
/// ordering exactly when the graph is chordal.
pub fn lex_bfs(g: &Graph) -> Vec<Vertex> {
    let n = g.n();
    // Ordered partition of the unvisited vertices; the first class holds
    // the lexicographically largest labels.
    let mut classes: Vec<Vec<Vertex>> = if n == 0 { Vec::new() } else { vec![(0..n).collect()] };
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    while let Some(first) = classes.first_mut() {
        let v = first.remove(0);
        if first.is_empty() {
            classes.remove(0);
        }
        visited[v] = true;
        order.push(v);
        let row = g.adjacency_row(v);
        let mut refined = Vec::with_capacity(classes.len() + 1);
        for class in classes.drain(..) {
            let (inside, outside): (Vec<_>, Vec<_>) = class.into_iter().partition(|&w| row.contains(w));
            if !inside.is_empty() {
                refined.push(inside);
            }
            if !outside.is_empty() {
                refined.push(outside);
            }
        }
        classes = refined;
    }
    order
}

/// Checks that `order` is a perfect elimination ordering: for each vertex,
/// its neighbors that come later form a clique.
pub fn is_perfect_elimination_order(g: &Graph, order: &[Vertex]) -> bool {
    let n = g.n();
    if order.len() != n {
        return false;
    }
    let mut position = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if v >= n || position[v] != usize::MAX {
            return false;
        }
        position[v] = i;
    }
    // Standard linear check: the earliest later neighbor must be adjacent
    // to all other later neighbors.
    order.iter().all(|&v| {
        let later: Vec<Vertex> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| position[w] > position[v])
            .collect();
        match later.iter().min_by_key(|&&w| position[w]) {
            None => true,
            Some(&parent) => later.iter().all(|&w| w == parent || g.has_edge(parent, w)),
        }
    })
}

/// A perfect elimination ordering of `g`, or `None` if `g` is not chordal.
pub fn recognize_chordal(g: &Graph) -> Option<Vec<Vertex>> {
    let mut order = lex_bfs(g);
    order.reverse();
    is_perfect_elimination_order(g, &order).then_some(order)
}

/// Exact `chi3` of a chordal graph.
///
/// Greedy coloring in reverse elimination order is optimal on chordal
/// graphs and uses `omega` colors; merging classes pairwise then gives
/// `ceil(omega / 2)`.
pub fn chordal_chi3(g: &Graph) -> Result<(Color, Coloring), ClassError> {
    let peo = recognize_chordal(g).ok_or(ClassError::NotChordal)?;
    if g.n() == 0 {
        return Ok((0, Coloring::monochromatic(0)));
    }
    let mut colors = vec![UNCOLORED; g.n()];
    let mut omega = 0;
    for &v in peo.iter().rev() {
        let mut taken: Vec<Color> = g
            .neighbors(v)
            .iter()
            .map(|&w| colors[w])
            .filter(|&c| c != UNCOLORED)
            .collect();
        taken.sort_unstable();
        let mut c = 1;
        for t in taken {
            if t == c {
                c += 1;
            } else if t > c {
                break;
            }
        }
        colors[v] = c;
        omega = omega.max(c);
    }
    if omega <= 2 {
        return Ok((1, Coloring::monochromatic(g.n())));
    }
    let witness = standard_recolor(&Coloring::from_parts_unchecked(omega, colors));
    debug_assert_eq!(verify_triangle_free(g, &witness, None), Ok(true));
    Ok((omega.div_ceil(2), witness))
}

/// `chi3` on a class whose chromatic number is at most 4.
///
/// The value is 0 for the empty graph, 1 without triangles and 2 otherwise.
/// The witness for 2 is a proper coloring with at most 4 colors (3 for
/// outerplanar graphs), merged pairwise.
///
/// For regular graphs of degree at most 4 the class bound on `chi` fails
/// only for `K_5` components. Complete graphs get the pairing coloring
/// directly. Otherwise, if no 4-coloring exists, the graph has a `K_5`
/// component and the answer is 3.
pub fn bounded_chi_chi3(g: &Graph, hint: ClassHint) -> Result<(Color, Coloring), ClassError> {
    let n = g.n();
    let m = g.m();
    let colors = match hint.tag {
        GraphClass::Planar => {
            if !hint.trusted && n >= 3 && m > 3 * n - 6 {
                return Err(ClassError::TooManyEdges { class: hint.tag, n, m });
            }
            4
        }
        GraphClass::Outerplanar => {
            if !hint.trusted && n >= 2 && m > 2 * n - 3 {
                return Err(ClassError::TooManyEdges { class: hint.tag, n, m });
            }
            3
        }
        GraphClass::Regular4 => {
            let d = g.is_regular().ok_or(ClassError::NotRegular)?;
            if d > 4 {
                return Err(ClassError::DegreeTooLarge(d));
            }
            4
        }
        other => return Err(ClassError::UnsupportedClass(other)),
    };
    if n == 0 {
        return Ok((0, Coloring::monochromatic(0)));
    }
    if is_triangle_free(g) {
        return Ok((1, Coloring::monochromatic(n)));
    }
    if hint.tag == GraphClass::Regular4 && g.is_complete() {
        let k = (n as Color).div_ceil(2);
        let pairing = (0..n).map(|v| (v / 2) as Color + 1).collect();
        return Ok((k, Coloring::from_parts_unchecked(k, pairing)));
    }
    let proper = match proper_coloring(g, colors) {
        Some(c) => c,
        None if hint.tag == GraphClass::Regular4 => proper_coloring(g, 5).ok_or(ClassError::HintViolated {
            class: hint.tag,
            colors: 5,
        })?,
        None => {
            return Err(ClassError::HintViolated {
                class: hint.tag,
                colors,
            })
        }
    };
    let witness = standard_recolor(&proper);
    assert_eq!(
        verify_triangle_free(g, &witness, None),
        Ok(true),
        "merged proper coloring must be triangle-free"
    );
    Ok((witness.k(), witness))
}

/// Triangle detection on a regular graph by scanning neighbor pairs of
/// every vertex: `O(n * d^2)` for degree `d`.
pub fn regular_triangle_check(g: &Graph) -> Result<bool, ClassError> {
    g.is_regular().ok_or(ClassError::NotRegular)?;
    Ok(g.vertices().any(|v| {
        let nb = g.neighbors(v);
        nb.iter()
            .enumerate()
            .any(|(i, &a)| nb[i + 1..].iter().any(|&b| g.has_edge(a, b)))
    }))
}

/// Dispatches on the class hint; `General` falls back to exact search.
pub fn class_chi3(g: &Graph, hint: ClassHint, options: &SearchOptions) -> Result<(Color, Coloring), ClassError> {
    match hint.tag {
        GraphClass::Chordal => chordal_chi3(g),
        GraphClass::General => Ok(exact_chi3(g, None, options)),
        _ => bounded_chi_chi3(g, hint),
    }
}
