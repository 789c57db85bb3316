//! Formula samplers and reduction checks shared by the integration tests
//! and the acceptance runner.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;

use trifree::reductions::{
    nae_satisfies, oracle_nae, oracle_sat, reduce_nae4_to_polar, reduce_nae_to_k4free, reduce_sat4_to_nae4,
    sat_satisfies, Clause, CnfFormula, Literal, ReductionError, WitnessTranslation,
};
use trifree::solvers::decide_tf_q;
use trifree::{contains_k4, verify_triangle_free};

/// Random width-3 formula on at most `max_vars` variables and at most
/// `max_clauses` clauses. With `max_occ`, no variable occurs more often;
/// the clause count is capped so that the bound can always be met.
pub fn random_formula<R: Rng>(rng: &mut R, max_vars: usize, max_clauses: usize, max_occ: Option<usize>) -> CnfFormula {
    let n = rng.gen_range(1..=max_vars);
    let cap = max_occ.map_or(max_clauses, |k| max_clauses.min(k * n / 3));
    let m = rng.gen_range(1..=cap.max(1));
    let mut used = vec![0; n];
    let clauses = (0..m)
        .map(|_| {
            [(); 3].map(|_| {
                let open: Vec<usize> = (0..n).filter(|&x| max_occ.is_none_or(|k| used[x] < k)).collect();
                let var = open[rng.gen_range(0..open.len())];
                used[var] += 1;
                Literal {
                    var,
                    positive: rng.gen(),
                }
            })
        })
        .collect();
    CnfFormula::new(n, clauses).expect("literals are in range")
}

/// An unsatisfiable formula with every variable occurring at most four
/// times: the chain `x1`, `x1 -> x2`, ..., `x_{c-1} -> x_c`, closed by
/// `¬x_c ∨ ¬x_{c-1}`, on `c >= 3` variables. Variables are relabelled, each
/// one's polarity is flipped at random, and random clauses on fresh
/// variables are mixed in; none of this changes satisfiability.
pub fn planted_unsatisfiable<R: Rng>(rng: &mut R, chain: usize, fresh: usize, extra: usize) -> CnfFormula {
    assert!(chain >= 3);
    let n = chain + fresh;
    let mut label: Vec<usize> = (0..n).collect();
    label.shuffle(rng);
    let flip: Vec<bool> = (0..n).map(|_| rng.gen()).collect();
    let lit = |x: usize, positive: bool| Literal {
        var: label[x],
        positive: positive ^ flip[x],
    };
    let mut clauses = vec![[lit(0, true); 3]];
    for i in 0..chain - 1 {
        clauses.push([lit(i, false), lit(i + 1, true), lit(i + 1, true)]);
    }
    clauses.push([lit(chain - 1, false), lit(chain - 1, false), lit(chain - 2, false)]);
    let mut used = vec![0; fresh];
    for _ in 0..extra.min(4 * fresh / 3) {
        clauses.push([(); 3].map(|_| {
            let open: Vec<usize> = (0..fresh).filter(|&x| used[x] < 4).collect();
            let x = open[rng.gen_range(0..open.len())];
            used[x] += 1;
            lit(chain + x, rng.gen())
        }));
    }
    clauses.shuffle(rng);
    CnfFormula::new(n, clauses).expect("literals are in range")
}

/// Every formula on `n <= 3` variables with at most three clauses, each
/// clause a multiset of literals and the formula a multiset of clauses,
/// keeping only those where every variable occurs at most four times.
pub fn small_formula_family() -> Vec<CnfFormula> {
    let mut out = Vec::new();
    for n in 1..=3 {
        let lits: Vec<Literal> = (0..n).flat_map(|v| [Literal::pos(v), Literal::neg(v)]).collect();
        let mut clauses: Vec<Clause> = Vec::new();
        for a in 0..lits.len() {
            for b in a..lits.len() {
                for c in b..lits.len() {
                    clauses.push([lits[a], lits[b], lits[c]]);
                }
            }
        }
        let k = clauses.len();
        let mut push = |idx: &[usize]| {
            let phi = CnfFormula::new(n, idx.iter().map(|&i| clauses[i]).collect()).unwrap();
            if phi.check_max_occurrences(4).is_ok() {
                out.push(phi);
            }
        };
        for a in 0..k {
            push(&[a]);
            for b in a..k {
                push(&[a, b]);
                for c in b..k {
                    push(&[a, b, c]);
                }
            }
        }
    }
    out
}

fn fail(phi: &CnfFormula, what: impl std::fmt::Display) -> String {
    format!(
        "{what} on {:?}",
        phi.clauses()
            .iter()
            .map(|c| c.map(Literal::to_dimacs))
            .collect::<Vec<_>>()
    )
}

/// 3-SAT-4 to NAE-3-SAT-4: occurrence bound, equivalence and witness
/// round trips. Returns whether the source is satisfiable.
pub fn check_sat_to_nae(phi: &CnfFormula) -> Result<bool, String> {
    let r = reduce_sat4_to_nae4(phi).map_err(|e| fail(phi, e))?;
    r.instance.check_max_occurrences(4).map_err(|e| fail(phi, e))?;
    let source = oracle_sat(phi);
    let target = oracle_nae(&r.instance);
    if source.is_some() != target.is_some() {
        return Err(fail(phi, "satisfiability differs across sat4 -> nae4"));
    }
    if let (Some(a), Some(b)) = (source, target) {
        let lifted = r.lift(&a).map_err(|e| fail(phi, e))?;
        if !nae_satisfies(&r.instance, &lifted) {
            return Err(fail(phi, "lifted assignment is not NAE-satisfying"));
        }
        for w in [lifted, b] {
            let pulled = r.pull(&w).map_err(|e| fail(phi, e))?;
            if !sat_satisfies(phi, &pulled) {
                return Err(fail(phi, "pulled assignment does not satisfy the source"));
            }
        }
        return Ok(true);
    }
    Ok(false)
}

/// NAE-3-SAT to triangle-free 2-coloring: `K4`-freeness, equivalence and
/// witness round trips. Formulas with a clause repeating one literal three
/// times are rejected by the reduction; they must be unsatisfiable.
pub fn check_nae_to_k4free(phi: &CnfFormula) -> Result<bool, String> {
    let source = oracle_nae(phi);
    let r = match reduce_nae_to_k4free(phi) {
        Err(ReductionError::RepeatedLiteralClause { .. }) if source.is_none() => return Ok(false),
        other => other.map_err(|e| fail(phi, e))?,
    };
    if contains_k4(&r.graph) {
        return Err(fail(phi, "nae -> k4free output contains K4"));
    }
    let target = decide_tf_q(&r.graph, 2, None);
    if source.is_some() != target.is_some() {
        return Err(fail(phi, "feasibility differs across nae -> k4free"));
    }
    if let (Some(a), Some(c)) = (source, target) {
        let lifted = r.lift(&a).map_err(|e| fail(phi, e))?;
        if !verify_triangle_free(&r.graph, &lifted, None).unwrap() {
            return Err(fail(phi, "lifted coloring has a monochromatic triangle"));
        }
        for w in [lifted, c] {
            let pulled = r.pull(&w).map_err(|e| fail(phi, e))?;
            if !nae_satisfies(phi, &pulled) {
                return Err(fail(phi, "pulled assignment is not NAE-satisfying"));
            }
        }
        return Ok(true);
    }
    Ok(false)
}

/// NAE-3-SAT-4 to polar 2-coloring: degree bound, equivalence and witness
/// round trips.
pub fn check_nae_to_polar(phi: &CnfFormula) -> Result<bool, String> {
    let r = reduce_nae4_to_polar(phi).map_err(|e| fail(phi, e))?;
    let g = r.instance.graph();
    if g.max_degree() > 3 {
        return Err(fail(phi, format!("nae4 -> polar output has degree {}", g.max_degree())));
    }
    let source = oracle_nae(phi);
    let target = decide_tf_q(g, 2, Some(r.instance.polar()));
    if source.is_some() != target.is_some() {
        return Err(fail(phi, "feasibility differs across nae4 -> polar"));
    }
    if let (Some(a), Some(c)) = (source, target) {
        let lifted = r.lift(&a).map_err(|e| fail(phi, e))?;
        if !r.instance.verify(&lifted).unwrap() {
            return Err(fail(phi, "lifted coloring violates the polar constraints"));
        }
        for w in [lifted, c] {
            let pulled = r.pull(&w).map_err(|e| fail(phi, e))?;
            if !nae_satisfies(phi, &pulled) {
                return Err(fail(phi, "pulled assignment is not NAE-satisfying"));
            }
        }
        return Ok(true);
    }
    Ok(false)
}
