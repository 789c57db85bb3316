//! Polynomial reductions between NAE-SAT variants and triangle-free
//! coloring problems, each with witness translation in both directions.
//!
//! | reduction | source | target |
//! |---|---|---|
//! | [`reduce_sat4_to_nae4`] | 3-SAT, each variable at most 4 times | NAE-3-SAT, same bound |
//! | [`reduce_nae_to_k4free`] | NAE-3-SAT | triangle-free 2-coloring of a `K4`-free graph |
//! | [`reduce_nae4_to_polar`] | NAE-3-SAT, each variable at most 4 times | polar 2-coloring, max degree 3 |
//! | [`reduce_q_to_q1`] | triangle-free `q`-coloring | triangle-free `(q+1)`-coloring |
//!
//! Every translated witness is verified before it is returned.

pub mod cnf;
mod nae_to_k4free;
mod nae_to_polar;
pub mod polar;
mod q_to_q1;
mod sat_to_nae;

use thiserror::Error;

use crate::coloring::{Color, ColoringError};
use crate::graph::GraphError;

pub use cnf::{
    nae_satisfies, oracle_nae, oracle_sat, parse_dimacs_cnf, sat_satisfies, write_dimacs_cnf, Assignment, Clause,
    CnfError, CnfFormula, Literal,
};
pub use nae_to_k4free::{reduce_nae_to_k4free, GadgetPlacement, NaeToK4Free, NaeToK4FreeMap};
pub use nae_to_polar::{reduce_nae4_to_polar, NaeToPolar, NaeToPolarMap};
pub use polar::{parse_polar_instance, solve_polar_small_degree, write_polar_instance, PolarInstance};
pub use q_to_q1::{reduce_q_to_q1, QToQPlusOne, QToQPlusOneMap};
pub use sat_to_nae::{reduce_sat4_to_nae4, SatToNae, SatToNaeMap};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error(transparent)]
    Cnf(#[from] CnfError),
    #[error("clause {clause} repeats one literal three times")]
    RepeatedLiteralClause { clause: usize },
    #[error("q must be at least 2, got {0}")]
    QTooSmall(Color),
    #[error("maximum degree {found} exceeds {limit}")]
    DegreeTooLarge { limit: usize, found: usize },
    #[error("input witness is invalid: {0}")]
    InvalidWitness(&'static str),
    #[error("translated witness failed verification: {0}")]
    TranslationFailed(&'static str),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Moves witnesses across a reduction.
///
/// `lift` maps a witness of the source instance to one of the target;
/// `pull` maps back. Both check their input and their output.
pub trait WitnessTranslation {
    type SourceWitness;
    type TargetWitness;

    fn lift(&self, witness: &Self::SourceWitness) -> Result<Self::TargetWitness, ReductionError>;
    fn pull(&self, witness: &Self::TargetWitness) -> Result<Self::SourceWitness, ReductionError>;
}

/// Two-coloring colors of the target side, read back as truth values:
/// color 1 means true.
pub(crate) fn two_color_value(c: Color) -> Result<bool, ReductionError> {
    match c {
        1 => Ok(true),
        2 => Ok(false),
        _ => Err(ReductionError::InvalidWitness(
            "expected a coloring with colors 1 and 2",
        )),
    }
}
