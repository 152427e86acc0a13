//! Search for a Mal'tsev term in the variety generated by a finite algebra.
//!
//! A term `t(x,y,z)` is Mal'tsev in the variety generated by `A` iff the two
//! binary term operations `(a,b) ↦ t(a,b,b)` and `(a,b) ↦ t(b,b,a)` are both
//! the first projection on `A`. Both are computed coordinatewise, so the pair
//! ranges over the subalgebra of `A^(2n²)` generated by the images of
//! `x`, `y`, `z`. A breadth-first closure of that subalgebra either reaches
//! `(π₁, π₁)` or proves that no such term exists.

use std::collections::HashMap;
use std::fmt;

use crate::algebra::{is_maltsev_table, AlgebraError, FiniteAlgebra};
use crate::congruence::{all_congruences, permutability_violation, quotient, CongruenceError};
use crate::term::{next_tuple, Term};

pub const DEFAULT_SEARCH_BUDGET: usize = 10_000_000;

/// Values of `t(a,b,b)` followed by values of `t(b,b,a)`, each indexed by
/// `a * n + b`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PairVector(Vec<usize>);

impl PairVector {
    fn generator(n: usize, which: Generator) -> Self {
        let mut v = Vec::with_capacity(2 * n * n);
        // (left, right) = (π₁,π₂) for x, (π₂,π₂) for y, (π₂,π₁) for z
        let (left_first, right_first) = match which {
            Generator::X => (true, false),
            Generator::Y => (false, false),
            Generator::Z => (false, true),
        };
        for first in [left_first, right_first] {
            for a in 0..n {
                for b in 0..n {
                    v.push(if first { a } else { b });
                }
            }
        }
        PairVector(v)
    }

    fn target(n: usize) -> Self {
        let mut v = Vec::with_capacity(2 * n * n);
        for _ in 0..2 {
            for a in 0..n {
                v.extend(std::iter::repeat_n(a, n));
            }
        }
        PairVector(v)
    }

    pub fn left(&self) -> &[usize] {
        &self.0[..self.0.len() / 2]
    }

    pub fn right(&self) -> &[usize] {
        &self.0[self.0.len() / 2..]
    }

    /// True for `(π₁, π₁)`.
    pub fn is_target(&self, n: usize) -> bool {
        *self == PairVector::target(n)
    }
}

impl fmt::Debug for PairVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PairVector({:?} | {:?})", self.left(), self.right())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    X,
    Y,
    Z,
}

impl Generator {
    fn name(self) -> &'static str {
        match self {
            Generator::X => "x",
            Generator::Y => "y",
            Generator::Z => "z",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Parent {
    Generator(Generator),
    Apply { symbol: String, args: Vec<Witness> },
}

/// A derivation of a pair vector from the generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub vector: PairVector,
    pub parent: Parent,
}

impl Witness {
    pub fn term(&self) -> Term {
        match &self.parent {
            Parent::Generator(g) => Term::var(g.name()),
            Parent::Apply { symbol, args } => Term::app(symbol, args.iter().map(Witness::term).collect()),
        }
    }

    /// Recomputes the vector from the parents and compares it with the
    /// stored one at every node.
    pub fn replay(&self, alg: &FiniteAlgebra) -> bool {
        self.recompute(alg).is_some_and(|v| v == self.vector)
    }

    fn recompute(&self, alg: &FiniteAlgebra) -> Option<PairVector> {
        match &self.parent {
            Parent::Generator(g) => Some(PairVector::generator(alg.size(), *g)),
            Parent::Apply { symbol, args } => {
                let table = alg.op(symbol)?;
                if table.arity() != args.len() {
                    return None;
                }
                let mut vs = Vec::with_capacity(args.len());
                for a in args {
                    let v = a.recompute(alg)?;
                    if v != a.vector {
                        return None;
                    }
                    vs.push(v);
                }
                let len = 2 * alg.size() * alg.size();
                let mut out = Vec::with_capacity(len);
                let mut buf = vec![0usize; args.len()];
                for i in 0..len {
                    for (slot, v) in buf.iter_mut().zip(&vs) {
                        *slot = v.0[i];
                    }
                    out.push(table.get(&buf));
                }
                Some(PairVector(out))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found {
        term: Term,
        witness: Witness,
        /// Pointwise re-verification of the induced ternary operation.
        verified: bool,
    },
    /// The closure completed without reaching the target.
    NoTerm,
    BudgetExhausted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchReport {
    pub outcome: SearchOutcome,
    /// Distinct pair vectors visited.
    pub explored: usize,
    /// Breadth-first levels expanded.
    pub levels: usize,
}

enum Origin {
    Generator(Generator),
    Apply { symbol: usize, args: Vec<usize> },
}

struct Node {
    vector: PairVector,
    origin: Origin,
}

fn witness_of(nodes: &[Node], alg: &FiniteAlgebra, i: usize) -> Witness {
    let node = &nodes[i];
    let parent = match &node.origin {
        Origin::Generator(g) => Parent::Generator(*g),
        Origin::Apply { symbol, args } => Parent::Apply {
            symbol: alg.signature().symbols().nth(*symbol).expect("symbol index").0.to_string(),
            args: args.iter().map(|&a| witness_of(nodes, alg, a)).collect(),
        },
    };
    Witness {
        vector: node.vector.clone(),
        parent,
    }
}

/// Breadth-first search over pair vectors. Within a level, symbols are tried
/// in signature order and argument tuples lexicographically, so the witness
/// is deterministic and of minimal height.
pub fn find_maltsev_term(alg: &FiniteAlgebra, budget: usize) -> SearchReport {
    let n = alg.size();
    let target = PairVector::target(n);
    let mut nodes: Vec<Node> = Vec::new();
    let mut index: HashMap<PairVector, usize> = HashMap::new();

    let found = |nodes: &[Node], i: usize, levels: usize| {
        let witness = witness_of(nodes, alg, i);
        let term = witness.term();
        let verified = verify_maltsev_term(alg, &term).unwrap_or(false);
        SearchReport {
            outcome: SearchOutcome::Found { term, witness, verified },
            explored: nodes.len(),
            levels,
        }
    };

    for g in [Generator::X, Generator::Y, Generator::Z] {
        let v = PairVector::generator(n, g);
        if index.contains_key(&v) {
            continue;
        }
        if nodes.len() >= budget {
            return SearchReport {
                outcome: SearchOutcome::BudgetExhausted,
                explored: nodes.len(),
                levels: 0,
            };
        }
        index.insert(v.clone(), nodes.len());
        nodes.push(Node {
            vector: v,
            origin: Origin::Generator(g),
        });
        if nodes.last().unwrap().vector == target {
            return found(&nodes, nodes.len() - 1, 0);
        }
    }

    let len = 2 * n * n;
    let mut level_start = 0;
    let mut levels = 0;
    loop {
        let prev_end = nodes.len();
        if level_start == prev_end {
            return SearchReport {
                outcome: SearchOutcome::NoTerm,
                explored: nodes.len(),
                levels,
            };
        }
        levels += 1;
        for (si, table) in alg.tables().iter().enumerate() {
            let k = table.arity();
            if k == 0 && level_start > 0 {
                continue;
            }
            let mut idx = vec![0usize; k];
            let mut buf = vec![0usize; k];
            loop {
                if k == 0 || idx.iter().any(|&i| i >= level_start) {
                    let mut out = Vec::with_capacity(len);
                    for c in 0..len {
                        for (slot, &i) in buf.iter_mut().zip(&idx) {
                            *slot = nodes[i].vector.0[c];
                        }
                        out.push(table.get(&buf));
                    }
                    let v = PairVector(out);
                    if !index.contains_key(&v) {
                        if nodes.len() >= budget {
                            return SearchReport {
                                outcome: SearchOutcome::BudgetExhausted,
                                explored: nodes.len(),
                                levels,
                            };
                        }
                        let is_target = v == target;
                        index.insert(v.clone(), nodes.len());
                        nodes.push(Node {
                            vector: v,
                            origin: Origin::Apply {
                                symbol: si,
                                args: idx.clone(),
                            },
                        });
                        if is_target {
                            return found(&nodes, nodes.len() - 1, levels);
                        }
                    }
                }
                if k == 0 || !next_tuple(&mut idx, prev_end) {
                    break;
                }
            }
        }
        level_start = prev_end;
    }
}

/// Tabulates `t(x,y,z)` on the algebra and checks both Mal'tsev identities.
pub fn verify_maltsev_term(alg: &FiniteAlgebra, t: &Term) -> Result<bool, AlgebraError> {
    t.check(alg.signature())?;
    let table = alg.term_table(t, &["x", "y", "z"])?;
    Ok(is_maltsev_table(&table))
}

/// Congruence permutability of an algebra, each of its quotients, and its
/// square.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutabilityAudit {
    pub algebra: bool,
    pub quotients_checked: usize,
    pub quotients: bool,
    pub square: bool,
    /// First non-permuting pair found, rendered with the algebra it lives in.
    pub violation: Option<String>,
}

impl PermutabilityAudit {
    pub fn passed(&self) -> bool {
        self.algebra && self.quotients && self.square
    }
}

/// Runs the audit; `limit` bounds the carrier of every lattice computed
/// (the square has `n²` elements).
pub fn permutability_audit(alg: &FiniteAlgebra, limit: usize) -> Result<PermutabilityAudit, CongruenceError> {
    let mut violation = None;
    let mut note = |name: &str, v: Option<(crate::congruence::Congruence, crate::congruence::Congruence)>| match v {
        Some((a, b)) => {
            violation.get_or_insert_with(|| format!("{name}: {a} and {b} do not permute"));
            false
        }
        None => true,
    };
    let cons = all_congruences(alg, limit)?;
    let algebra = note(&alg.name, permutability_violation(&cons));
    let mut quotients = true;
    for c in &cons {
        let q = quotient(alg, c);
        let qc = all_congruences(&q, limit)?;
        quotients &= note(&q.name, permutability_violation(&qc));
    }
    let sq = alg
        .product(alg)
        .map_err(|e| CongruenceError::SignatureMismatch(e.to_string()))?;
    let square = note(&sq.name, permutability_violation(&all_congruences(&sq, limit)?));
    Ok(PermutabilityAudit {
        algebra,
        quotients_checked: cons.len(),
        quotients,
        square,
        violation,
    })
}
