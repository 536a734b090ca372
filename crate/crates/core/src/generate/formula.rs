//! 3-CNF formulas in which every literal occurs exactly twice.

use std::fmt;

use crate::error::{Error, Result};

/// Signed 1-based variable index, DIMACS style.
pub type Lit = i32;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CnfB2Formula {
    num_vars: usize,
    clauses: Vec<[Lit; 3]>,
}

impl CnfB2Formula {
    /// Checks that every clause has three literals over `1..=num_vars` and
    /// that `x_i` and `¬x_i` each occur exactly twice.
    pub fn new(num_vars: usize, clauses: Vec<[Lit; 3]>) -> Result<CnfB2Formula> {
        let mut count = vec![[0usize; 2]; num_vars + 1];
        for (j, clause) in clauses.iter().enumerate() {
            for &lit in clause {
                let var = lit.unsigned_abs() as usize;
                if lit == 0 || var > num_vars {
                    return Err(Error::MalformedFormula(format!(
                        "clause {} has literal {lit}",
                        j + 1
                    )));
                }
                count[var][(lit < 0) as usize] += 1;
            }
        }
        for (var, c) in count.iter().enumerate().skip(1) {
            if c[0] != 2 || c[1] != 2 {
                return Err(Error::MalformedFormula(format!(
                    "x{var} occurs {} times and ¬x{var} {} times, expected 2 and 2",
                    c[0], c[1]
                )));
            }
        }
        Ok(CnfB2Formula { num_vars, clauses })
    }

    /// η
    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    /// μ
    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[[Lit; 3]] {
        &self.clauses
    }

    /// For literal `lit`, its two occurrences as `(clause, position)`, both
    /// 0-based, in reading order.
    pub fn occurrences(&self, lit: Lit) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (j, clause) in self.clauses.iter().enumerate() {
            for (p, &l) in clause.iter().enumerate() {
                if l == lit {
                    out.push((j, p));
                }
            }
        }
        out
    }

    /// For each clause position, which occurrence (0 or 1) of its literal it
    /// is.
    pub fn occurrence_index(&self) -> Vec<[usize; 3]> {
        let mut seen = vec![[0usize; 2]; self.num_vars + 1];
        self.clauses
            .iter()
            .map(|clause| {
                let mut out = [0; 3];
                for (p, &l) in clause.iter().enumerate() {
                    let slot = &mut seen[l.unsigned_abs() as usize][(l < 0) as usize];
                    out[p] = *slot;
                    *slot += 1;
                }
                out
            })
            .collect()
    }

    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|c| {
            c.iter()
                .any(|&l| assignment[l.unsigned_abs() as usize - 1] == (l > 0))
        })
    }

    /// A satisfying assignment, indexed by variable − 1.
    pub fn satisfying_assignment(&self) -> Result<Option<Vec<bool>>> {
        if self.num_vars > 20 {
            return Err(Error::ResourceLimit(format!(
                "{} variables exceed the oracle bound of 20",
                self.num_vars
            )));
        }
        for bits in 0u32..(1 << self.num_vars) {
            let a: Vec<bool> = (0..self.num_vars).map(|i| bits >> i & 1 == 1).collect();
            if self.is_satisfied_by(&a) {
                return Ok(Some(a));
            }
        }
        Ok(None)
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.num_vars, self.clauses.len());
        for c in &self.clauses {
            out.push_str(&format!("{} {} {} 0\n", c[0], c[1], c[2]));
        }
        out
    }
}

impl fmt::Display for CnfB2Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, c) in self.clauses.iter().enumerate() {
            if j > 0 {
                write!(f, " ∧ ")?;
            }
            let lits: Vec<String> = c
                .iter()
                .map(|&l| {
                    if l > 0 {
                        format!("x{l}")
                    } else {
                        format!("¬x{}", -l)
                    }
                })
                .collect();
            write!(f, "({})", lits.join(" ∨ "))?;
        }
        Ok(())
    }
}

/// Exhaustive satisfiability check for at most 20 variables.
pub fn sat_b2_brute(phi: &CnfB2Formula) -> Result<bool> {
    Ok(phi.satisfying_assignment()?.is_some())
}

/// Parses DIMACS CNF; clauses end with `0` and may span lines.
pub fn parse_dimacs(text: &str) -> Result<CnfB2Formula> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut current: Vec<Lit> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
            continue;
        }
        if line.starts_with('p') {
            let t: Vec<&str> = line.split_whitespace().collect();
            let parsed = (t.len() == 4 && t[1] == "cnf")
                .then(|| Some((t[2].parse().ok()?, t[3].parse().ok()?)))
                .flatten();
            match (parsed, header) {
                (Some(h), None) => header = Some(h),
                _ => {
                    return Err(Error::MalformedFormula(format!(
                        "line {}: bad or repeated header",
                        idx + 1
                    )))
                }
            }
            continue;
        }
        if header.is_none() {
            return Err(Error::MalformedFormula(format!(
                "line {}: clause before header",
                idx + 1
            )));
        }
        for tok in line.split_whitespace() {
            let lit: Lit = tok.parse().map_err(|_| {
                Error::MalformedFormula(format!("line {}: bad literal `{tok}`", idx + 1))
            })?;
            if lit == 0 {
                let clause: [Lit; 3] = current.as_slice().try_into().map_err(|_| {
                    Error::MalformedFormula(format!(
                        "line {}: clause with {} literals",
                        idx + 1,
                        current.len()
                    ))
                })?;
                clauses.push(clause);
                current.clear();
            } else {
                current.push(lit);
            }
        }
    }
    let Some((vars, m)) = header else {
        return Err(Error::MalformedFormula("missing `p cnf` header".into()));
    };
    if !current.is_empty() {
        return Err(Error::MalformedFormula(
            "last clause is not terminated by 0".into(),
        ));
    }
    if clauses.len() != m {
        return Err(Error::MalformedFormula(format!(
            "header declares {m} clauses, found {}",
            clauses.len()
        )));
    }
    CnfB2Formula::new(vars, clauses)
}

/// Every formula over `num_vars` variables up to reordering of clauses and of
/// literals within a clause, each in sorted form, in lexicographic order.
pub fn b2_catalog(num_vars: usize) -> Vec<CnfB2Formula> {
    let mut lits: Vec<Lit> = (1..=num_vars as Lit).flat_map(|v| [-v, v]).collect();
    lits.sort_unstable();
    let mut remaining = vec![2usize; lits.len()];
    let total = 4 * num_vars / 3;
    let mut out = Vec::new();
    let mut clauses: Vec<[Lit; 3]> = Vec::new();
    fn rec(
        lits: &[Lit],
        remaining: &mut [usize],
        clauses: &mut Vec<[Lit; 3]>,
        total: usize,
        num_vars: usize,
        out: &mut Vec<CnfB2Formula>,
    ) {
        if clauses.len() == total {
            if remaining.iter().all(|&r| r == 0) {
                out.push(CnfB2Formula::new(num_vars, clauses.clone()).expect("catalog formula"));
            }
            return;
        }
        let n = lits.len();
        for a in 0..n {
            for b in a..n {
                for c in b..n {
                    let idx = [a, b, c];
                    let clause = [lits[a], lits[b], lits[c]];
                    if clauses.last().is_some_and(|last| *last > clause) {
                        continue;
                    }
                    let ok = idx
                        .iter()
                        .all(|&i| remaining[i] >= idx.iter().filter(|&&j| j == i).count());
                    if !ok {
                        continue;
                    }
                    idx.iter().for_each(|&i| remaining[i] -= 1);
                    clauses.push(clause);
                    rec(lits, remaining, clauses, total, num_vars, out);
                    clauses.pop();
                    idx.iter().for_each(|&i| remaining[i] += 1);
                }
            }
        }
    }
    if num_vars.is_multiple_of(3) {
        rec(
            &lits,
            &mut remaining,
            &mut clauses,
            total,
            num_vars,
            &mut out,
        );
    }
    out
}
