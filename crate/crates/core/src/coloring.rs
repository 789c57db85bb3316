//! Colorings and their verifiers.
//!
//! Colors are `1..=k`. Inside solvers a partial state uses `0` for
//! "uncolored"; a [`Coloring`] never contains `0`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Edge, Graph, Vertex};

pub type Color = u32;

/// Marker for an uncolored vertex in partial assignments.
pub const UNCOLORED: Color = 0;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("color {color} of vertex {vertex} is outside 1..={k}")]
    ColorOutOfRange { vertex: Vertex, color: Color, k: Color },
    #[error("coloring covers {coloring} vertices but the graph has {graph}")]
    SizeMismatch { coloring: usize, graph: usize },
    #[error("polar edge {{{0}, {1}}} is not an edge of the graph")]
    PolarEdgeMissing(Vertex, Vertex),
    #[error("vertices {0} and {1} of the extension set are adjacent")]
    NotIndependent(Vertex, Vertex),
    #[error("vertex {0} lies outside the extension set but is uncolored")]
    UncoloredOutsideSet(Vertex),
}

/// A total map from vertices to colors `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawColoring")]
pub struct Coloring {
    k: Color,
    colors: Vec<Color>,
}

#[derive(Deserialize)]
struct RawColoring {
    k: Color,
    colors: Vec<Color>,
}

impl TryFrom<RawColoring> for Coloring {
    type Error = ColoringError;

    fn try_from(raw: RawColoring) -> Result<Self, Self::Error> {
        Coloring::new(raw.k, raw.colors)
    }
}

impl Coloring {
    pub fn new(k: Color, colors: Vec<Color>) -> Result<Coloring, ColoringError> {
        if let Some((vertex, &color)) = colors.iter().enumerate().find(|(_, &c)| c == 0 || c > k) {
            return Err(ColoringError::ColorOutOfRange { vertex, color, k });
        }
        Ok(Coloring { k, colors })
    }

    /// Every vertex gets color 1. For `n == 0` this is the empty coloring
    /// with `k == 0`.
    pub fn monochromatic(n: usize) -> Coloring {
        Coloring {
            k: u32::from(n > 0),
            colors: vec![1; n],
        }
    }

    pub(crate) fn from_parts_unchecked(k: Color, colors: Vec<Color>) -> Coloring {
        debug_assert!(colors.iter().all(|&c| c >= 1 && c <= k));
        Coloring { k, colors }
    }

    #[inline]
    pub fn color(&self, v: Vertex) -> Color {
        self.colors[v]
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn into_colors(self) -> Vec<Color> {
        self.colors
    }

    /// Number of colors available, not necessarily all used.
    pub fn k(&self) -> Color {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Number of distinct colors that actually occur.
    pub fn used_colors(&self) -> usize {
        let mut seen = vec![false; self.k as usize + 1];
        self.colors
            .iter()
            .filter(|&&c| !std::mem::replace(&mut seen[c as usize], true))
            .count()
    }

    /// Same assignment with a larger palette.
    pub fn with_budget(mut self, k: Color) -> Coloring {
        assert!(self.colors.iter().all(|&c| c <= k), "budget {k} is below a used color");
        self.k = k;
        self
    }

    /// Renames colors in order of first appearance, so the result uses
    /// exactly `1..=used_colors()`.
    pub fn canonical(&self) -> Coloring {
        let mut rename = vec![0; self.k as usize + 1];
        let mut next = 0;
        let colors = self
            .colors
            .iter()
            .map(|&c| {
                if rename[c as usize] == 0 {
                    next += 1;
                    rename[c as usize] = next;
                }
                rename[c as usize]
            })
            .collect();
        Coloring { k: next, colors }
    }

    fn check_size(&self, g: &Graph) -> Result<(), ColoringError> {
        if self.len() != g.n() {
            return Err(ColoringError::SizeMismatch {
                coloring: self.len(),
                graph: g.n(),
            });
        }
        Ok(())
    }
}

/// `true` iff no edge of `g` is monochromatic.
pub fn verify_proper(g: &Graph, c: &Coloring) -> Result<bool, ColoringError> {
    c.check_size(g)?;
    Ok(g.edges().all(|(u, v)| c.color(u) != c.color(v)))
}

/// `true` iff no triangle of `g` is monochromatic and, when `polar` is
/// given, no polar edge is monochromatic.
pub fn verify_triangle_free(g: &Graph, c: &Coloring, polar: Option<&[Edge]>) -> Result<bool, ColoringError> {
    c.check_size(g)?;
    let polar = polar.unwrap_or(&[]);
    if let Some(&(u, v)) = polar.iter().find(|&&(u, v)| !g.has_edge(u, v)) {
        return Err(ColoringError::PolarEdgeMissing(u, v));
    }
    if polar.iter().any(|&(u, v)| c.color(u) == c.color(v)) {
        return Ok(false);
    }
    Ok(first_monochromatic_triangle(g, c.colors()).is_none())
}

/// First monochromatic triangle `(u, v, w)` with `u < v < w`, if any.
/// Uncolored (`0`) vertices never count.
pub(crate) fn first_monochromatic_triangle(g: &Graph, colors: &[Color]) -> Option<[Vertex; 3]> {
    for (u, v) in g.edges() {
        let x = colors[u];
        if x == UNCOLORED || colors[v] != x {
            continue;
        }
        for &w in g.neighbors(v) {
            if w > v && colors[w] == x && g.has_edge(u, w) {
                return Some([u, v, w]);
            }
        }
    }
    None
}

/// Merges color classes pairwise: `1,2 -> 1`, `3,4 -> 2`, and so on.
///
/// On a proper coloring every merged class induces a bipartite graph, so
/// the result has no monochromatic triangle and uses `ceil(k / 2)` labels.
pub fn standard_recolor(c: &Coloring) -> Coloring {
    Coloring {
        k: c.k.div_ceil(2),
        colors: c.colors.iter().map(|&x| x.div_ceil(2)).collect(),
    }
}

/// Colors the independent set `indep` on top of a partial coloring.
///
/// `partial[v]` must be a color in `1..=q` for every `v` outside `indep`
/// and is ignored on `indep`. Because `indep` is independent, each of its
/// vertices only sees colored neighbors, so a color `x` is available to
/// `v` exactly when no two adjacent neighbors of `v` both have color `x`.
/// Vertices are scanned in increasing order, colors smallest first.
///
/// Returns `Ok(None)` when some vertex of `indep` has no available color.
pub fn greedy_extend_independent(
    g: &Graph,
    partial: &[Color],
    indep: &[Vertex],
    q: Color,
) -> Result<Option<Coloring>, ColoringError> {
    if partial.len() != g.n() {
        return Err(ColoringError::SizeMismatch {
            coloring: partial.len(),
            graph: g.n(),
        });
    }
    let mut in_set = vec![false; g.n()];
    for &v in indep {
        in_set[v] = true;
    }
    for (i, &a) in indep.iter().enumerate() {
        if let Some(&b) = indep[i + 1..].iter().find(|&&b| g.has_edge(a, b)) {
            return Err(ColoringError::NotIndependent(a, b));
        }
    }
    for v in g.vertices().filter(|&v| !in_set[v]) {
        match partial[v] {
            UNCOLORED => return Err(ColoringError::UncoloredOutsideSet(v)),
            color if color > q => return Err(ColoringError::ColorOutOfRange { vertex: v, color, k: q }),
            _ => {}
        }
    }

    let mut colors = partial.to_vec();
    let mut order = indep.to_vec();
    order.sort_unstable();
    let mut blocked = vec![false; q as usize + 1];
    for v in order {
        blocked.iter_mut().for_each(|b| *b = false);
        let nbrs = g.neighbors(v);
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                if colors[a] == colors[b] && g.has_edge(a, b) {
                    blocked[colors[a] as usize] = true;
                }
            }
        }
        match (1..=q).find(|&x| !blocked[x as usize]) {
            Some(x) => colors[v] = x,
            None => return Ok(None),
        }
    }
    Ok(Some(Coloring { k: q, colors }))
}
