//! Width-3 CNF formulas, DIMACS CNF I/O, assignments and brute-force
//! SAT / NAE-SAT oracles.

use std::fmt;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dimacs::{content_lines, parse_number};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CnfError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing `p cnf` header line")]
    MissingHeader,
    #[error("header declares {declared} clauses but {found} were given")]
    ClauseCountMismatch { declared: usize, found: usize },
    #[error("clause {clause} has {width} literals, expected exactly 3")]
    Width { clause: usize, width: usize },
    #[error("clause {clause} mentions variable {var} but the formula has {num_vars}")]
    VariableOutOfRange { clause: usize, var: usize, num_vars: usize },
    #[error("variable {var} occurs {count} times, at most {limit} allowed")]
    TooManyOccurrences { var: usize, count: usize, limit: usize },
}

fn syntax(line: usize, message: impl Into<String>) -> CnfError {
    CnfError::Syntax {
        line,
        message: message.into(),
    }
}

/// A variable (0-based) with a sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Literal {
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Literal {
        Literal { var, positive: true }
    }

    pub fn neg(var: usize) -> Literal {
        Literal { var, positive: false }
    }

    pub fn negate(self) -> Literal {
        Literal {
            var: self.var,
            positive: !self.positive,
        }
    }

    pub fn eval(self, a: &Assignment) -> bool {
        a.value(self.var) == self.positive
    }

    /// The signed, 1-based DIMACS form.
    pub fn to_dimacs(self) -> i64 {
        let v = self.var as i64 + 1;
        if self.positive {
            v
        } else {
            -v
        }
    }

    /// Inverse of [`Literal::to_dimacs`]; `None` for 0.
    pub fn from_dimacs(x: i64) -> Option<Literal> {
        let var = usize::try_from(x.unsigned_abs()).ok()?.checked_sub(1)?;
        Some(Literal { var, positive: x > 0 })
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.positive {
            f.write_str("¬")?;
        }
        write!(f, "x{}", self.var + 1)
    }
}

pub type Clause = [Literal; 3];

/// A CNF formula whose clauses have exactly three literals. Literals may
/// repeat inside a clause.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<Clause>,
}

impl CnfFormula {
    pub fn new(num_vars: usize, clauses: Vec<Clause>) -> Result<CnfFormula, CnfError> {
        for (clause, lits) in clauses.iter().enumerate() {
            if let Some(l) = lits.iter().find(|l| l.var >= num_vars) {
                return Err(CnfError::VariableOutOfRange {
                    clause,
                    var: l.var,
                    num_vars,
                });
            }
        }
        Ok(CnfFormula { num_vars, clauses })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    /// Positive and negative occurrence counts of every variable.
    pub fn occurrences(&self) -> Vec<(usize, usize)> {
        let mut counts = vec![(0, 0); self.num_vars];
        for l in self.clauses.iter().flatten() {
            if l.positive {
                counts[l.var].0 += 1;
            } else {
                counts[l.var].1 += 1;
            }
        }
        counts
    }

    /// Fails if some variable occurs more than `limit` times in total.
    pub fn check_max_occurrences(&self, limit: usize) -> Result<(), CnfError> {
        match self.occurrences().iter().enumerate().find(|(_, (p, q))| p + q > limit) {
            Some((var, (p, q))) => Err(CnfError::TooManyOccurrences {
                var,
                count: p + q,
                limit,
            }),
            None => Ok(()),
        }
    }
}

/// A total truth assignment, indexed by variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Assignment(Vec<bool>);

impl Assignment {
    pub fn new(values: Vec<bool>) -> Assignment {
        Assignment(values)
    }

    pub fn value(&self, var: usize) -> bool {
        self.0[var]
    }

    pub fn values(&self) -> &[bool] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn negated(&self) -> Assignment {
        Assignment(self.0.iter().map(|b| !b).collect())
    }
}

/// Every clause has a true and a false literal value. Repeated literals
/// count as separate values, so `(x ∨ x ∨ x)` is never satisfied.
pub fn nae_satisfies(phi: &CnfFormula, a: &Assignment) -> bool {
    a.len() == phi.num_vars
        && phi.clauses.iter().all(|c| {
            let t = c.iter().filter(|l| l.eval(a)).count();
            t == 1 || t == 2
        })
}

pub fn sat_satisfies(phi: &CnfFormula, a: &Assignment) -> bool {
    a.len() == phi.num_vars && phi.clauses.iter().all(|c| c.iter().any(|l| l.eval(a)))
}

/// Backtracking over variables in index order. A clause is checked once
/// its largest variable is set.
fn brute_force(phi: &CnfFormula, accept: fn(&Clause, &[bool]) -> bool) -> Option<Assignment> {
    let n = phi.num_vars;
    let mut due: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, c) in phi.clauses.iter().enumerate() {
        let last = c.iter().map(|l| l.var).max().expect("clause has three literals");
        due[last].push(i);
    }
    let mut values = vec![false; n];
    fn go(
        depth: usize,
        values: &mut [bool],
        due: &[Vec<usize>],
        phi: &CnfFormula,
        accept: fn(&Clause, &[bool]) -> bool,
    ) -> bool {
        if depth == values.len() {
            return true;
        }
        for b in [false, true] {
            values[depth] = b;
            if due[depth].iter().all(|&i| accept(&phi.clauses[i], values)) && go(depth + 1, values, due, phi, accept) {
                return true;
            }
        }
        false
    }
    go(0, &mut values, &due, phi, accept).then_some(Assignment(values))
}

fn literal_value(l: &Literal, values: &[bool]) -> bool {
    values[l.var] == l.positive
}

/// An NAE-satisfying assignment, or `None`. Exponential in `num_vars`.
pub fn oracle_nae(phi: &CnfFormula) -> Option<Assignment> {
    brute_force(phi, |c, v| {
        let t = c.iter().filter(|l| literal_value(l, v)).count();
        t == 1 || t == 2
    })
}

/// A satisfying assignment, or `None`. Exponential in `num_vars`.
pub fn oracle_sat(phi: &CnfFormula) -> Option<Assignment> {
    brute_force(phi, |c, v| c.iter().any(|l| literal_value(l, v)))
}

/// Parses `p cnf N M` followed by clauses of three nonzero integers, each
/// terminated by `0`. A clause may span several lines.
pub fn parse_dimacs_cnf(text: &str) -> Result<CnfFormula, CnfError> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut current: Vec<Literal> = Vec::new();
    for (line, fields) in content_lines(text) {
        if fields[0] == "p" {
            if header.is_some() {
                return Err(syntax(line, "second `p` header"));
            }
            if fields.len() != 4 || fields[1] != "cnf" {
                return Err(syntax(line, "expected `p cnf N M`"));
            }
            let parse = |t: &str| parse_number(line, t).map_err(|e| syntax(line, e.to_string()));
            header = Some((parse(fields[2])?, parse(fields[3])?));
            continue;
        }
        if fields[0] == "%" {
            // Some benchmark files end with `%` and `0`.
            break;
        }
        let (n, _) = header.ok_or(CnfError::MissingHeader)?;
        for tok in fields {
            let x: i64 = tok
                .parse()
                .map_err(|_| syntax(line, format!("expected a literal, found `{tok}`")))?;
            match Literal::from_dimacs(x) {
                None => {
                    if current.len() != 3 {
                        return Err(CnfError::Width {
                            clause: clauses.len(),
                            width: current.len(),
                        });
                    }
                    clauses.push([current[0], current[1], current[2]]);
                    current.clear();
                }
                Some(l) if l.var >= n => {
                    return Err(syntax(line, format!("variable {} outside 1..={n}", l.var + 1)));
                }
                Some(l) => current.push(l),
            }
        }
    }
    let (n, m) = header.ok_or(CnfError::MissingHeader)?;
    if !current.is_empty() {
        return Err(CnfError::Width {
            clause: clauses.len(),
            width: current.len(),
        });
    }
    if clauses.len() != m {
        return Err(CnfError::ClauseCountMismatch {
            declared: m,
            found: clauses.len(),
        });
    }
    CnfFormula::new(n, clauses)
}

pub fn write_dimacs_cnf(phi: &CnfFormula) -> String {
    let mut out = format!("p cnf {} {}\n", phi.num_vars, phi.clauses.len());
    for c in &phi.clauses {
        writeln!(out, "{} {} {} 0", c[0].to_dimacs(), c[1].to_dimacs(), c[2].to_dimacs()).unwrap();
    }
    out
}
