//! 3-SAT with at most four occurrences per variable to NAE-3-SAT with the
//! same bound.
//!
//! Clause `C_i = (l1 ∨ l2 ∨ l3)` becomes `(l1 ∨ l2 ∨ c_i)` and
//! `(l3 ∨ ¬c_i ∨ f_i)`. The clauses `(¬f_i ∨ ¬f_i ∨ f_{i+1})`, closed into a
//! cycle, force all `f_i` equal. Since NAE solutions are closed under
//! negation, some solution has every `f_i` false, and that solution
//! satisfies the original clauses.

use serde::Serialize;

use super::cnf::{nae_satisfies, sat_satisfies, Assignment, CnfFormula, Literal};
use super::{ReductionError, WitnessTranslation};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SatToNaeMap {
    /// Variables `0..original_vars` are the source variables, unchanged.
    pub original_vars: usize,
    /// `clause_vars[i]` splits source clause `i`.
    pub clause_vars: Vec<usize>,
    /// `chain_vars[i]` is the shared variable of clause `i`'s second half.
    pub chain_vars: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct SatToNae {
    pub source: CnfFormula,
    pub instance: CnfFormula,
    pub map: SatToNaeMap,
}

pub fn reduce_sat4_to_nae4(phi: &CnfFormula) -> Result<SatToNae, ReductionError> {
    phi.check_max_occurrences(4)?;
    let n = phi.num_vars();
    let m = phi.num_clauses();
    let clause_vars: Vec<usize> = (n..n + m).collect();
    let chain_vars: Vec<usize> = (n + m..n + 2 * m).collect();
    let mut clauses = Vec::with_capacity(3 * m);
    for (i, &[l1, l2, l3]) in phi.clauses().iter().enumerate() {
        let (c, f) = (clause_vars[i], chain_vars[i]);
        clauses.push([l1, l2, Literal::pos(c)]);
        clauses.push([l3, Literal::neg(c), Literal::pos(f)]);
    }
    for i in 0..m {
        let (f, next) = (chain_vars[i], chain_vars[(i + 1) % m]);
        clauses.push([Literal::neg(f), Literal::neg(f), Literal::pos(next)]);
    }
    let instance = CnfFormula::new(n + 2 * m, clauses)?;
    instance.check_max_occurrences(4)?;
    Ok(SatToNae {
        source: phi.clone(),
        instance,
        map: SatToNaeMap {
            original_vars: n,
            clause_vars,
            chain_vars,
        },
    })
}

impl WitnessTranslation for SatToNae {
    type SourceWitness = Assignment;
    type TargetWitness = Assignment;

    /// `c_i` is true exactly when `l1` and `l2` are both false; every `f_i`
    /// is false.
    fn lift(&self, a: &Assignment) -> Result<Assignment, ReductionError> {
        if !sat_satisfies(&self.source, a) {
            return Err(ReductionError::InvalidWitness(
                "assignment does not satisfy the source formula",
            ));
        }
        let mut values = a.values().to_vec();
        for c in self.source.clauses() {
            values.push(!c[0].eval(a) && !c[1].eval(a));
        }
        values.extend(std::iter::repeat_n(false, self.source.num_clauses()));
        let lifted = Assignment::new(values);
        if !nae_satisfies(&self.instance, &lifted) {
            return Err(ReductionError::TranslationFailed(
                "lifted assignment is not NAE-satisfying",
            ));
        }
        Ok(lifted)
    }

    /// Negates the whole assignment if the chain variables are true, then
    /// keeps the source variables.
    fn pull(&self, b: &Assignment) -> Result<Assignment, ReductionError> {
        if !nae_satisfies(&self.instance, b) {
            return Err(ReductionError::InvalidWitness("assignment is not NAE-satisfying"));
        }
        let flip = self.map.chain_vars.first().is_some_and(|&f| b.value(f));
        let values = b.values()[..self.map.original_vars].iter().map(|&x| x ^ flip).collect();
        let pulled = Assignment::new(values);
        if !sat_satisfies(&self.source, &pulled) {
            return Err(ReductionError::TranslationFailed(
                "pulled assignment does not satisfy the source",
            ));
        }
        Ok(pulled)
    }
}
