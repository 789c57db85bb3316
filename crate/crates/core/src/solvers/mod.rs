//! Exact solvers and the reference oracles used to check them.

mod fpt;
pub mod oracle;
mod proper;
mod search;
mod vertex_cover;

use serde::{Deserialize, Serialize};

pub use fpt::fpt_tf_q_coloring;
pub use oracle::{max_clique, oracle_chi, oracle_chi3, oracle_omega, oracle_tf_coloring};
pub use proper::proper_coloring;
pub use search::{decide_tf_q, decide_tf_q_with, exact_chi3, SearchOptions, MAX_SEARCH_COLORS};
pub use vertex_cover::min_vertex_cover;

use crate::coloring::Color;
use crate::graph::Graph;

/// The parameters that bound the triangle-free chromatic number.
///
/// For every graph `ceil(omega/2) <= chi3 <= ceil(chi/2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuralParams {
    pub omega: usize,
    pub chi: Color,
    pub chi3: Color,
    pub vc: usize,
    pub delta: usize,
}

impl StructuralParams {
    /// Computes every parameter exactly. Exponential; meant for small graphs.
    pub fn compute(g: &Graph) -> StructuralParams {
        StructuralParams {
            omega: oracle_omega(g),
            chi: oracle_chi(g),
            chi3: exact_chi3(g, None, &SearchOptions::default()).0,
            vc: min_vertex_cover(g).len(),
            delta: g.max_degree(),
        }
    }

    /// Lower bound on `chi3` from the clique number.
    pub fn clique_bound(&self) -> Color {
        (self.omega as Color).div_ceil(2)
    }

    /// Upper bound on `chi3` from the chromatic number.
    pub fn chromatic_bound(&self) -> Color {
        self.chi.div_ceil(2)
    }
}
