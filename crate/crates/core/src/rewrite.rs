//! Rewriting modulo the Mal'tsev identities `mu(x,y,y) = x = mu(y,y,x)`.
//!
//! Oriented left to right the two identities form a size-decreasing, hence
//! terminating, rewrite system. [`check_confluence`] certifies that all
//! critical pairs are joinable, so normal forms are unique and structural
//! equality of normal forms decides equality in the free Mal'tsev algebra.

use std::collections::{BTreeMap, HashSet};
use std::sync::Arc;

use num_bigint::BigUint;
use thiserror::Error;

use crate::term::{enumerate_levels, generator_names, Signature, Term, MU};

pub const DEFAULT_ENUMERATION_BUDGET: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RewriteError {
    #[error("enumeration budget of {0} terms exceeded")]
    BudgetExceeded(usize),
    #[error("rule {index} is not size decreasing or introduces variables: {lhs} -> {rhs}")]
    InvalidRule { index: usize, lhs: Term, rhs: Term },
    #[error("generator count must be at least 1")]
    NoGenerators,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rule {
    pub lhs: Term,
    pub rhs: Term,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    LeftmostInnermost,
    LeftmostOutermost,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteSystem {
    pub rules: Vec<Rule>,
}

impl RewriteSystem {
    /// `{ mu(x,y,y) -> x, mu(y,y,x) -> x }`.
    pub fn maltsev() -> Self {
        let (x, y) = (Term::var("x"), Term::var("y"));
        RewriteSystem {
            rules: vec![
                Rule {
                    lhs: Term::mu(x.clone(), y.clone(), y.clone()),
                    rhs: x.clone(),
                },
                Rule {
                    lhs: Term::mu(y.clone(), y, x.clone()),
                    rhs: x,
                },
            ],
        }
    }

    /// Rejects rules that could break termination.
    pub fn validate(&self) -> Result<(), RewriteError> {
        for (index, r) in self.rules.iter().enumerate() {
            let lv = r.lhs.variables();
            let ok = !r.lhs.is_var()
                && r.rhs.size() < r.lhs.size()
                && r.rhs.variables().iter().all(|v| lv.contains(v));
            if !ok {
                return Err(RewriteError::InvalidRule {
                    index,
                    lhs: r.lhs.clone(),
                    rhs: r.rhs.clone(),
                });
            }
        }
        Ok(())
    }

    /// One step at the root, trying rules in order.
    fn rewrite_root(&self, t: &Term) -> Option<Term> {
        self.rules.iter().find_map(|r| {
            let mut subst = BTreeMap::new();
            match_pattern(&r.lhs, t, &mut subst).then(|| crate::term::substitute(&r.rhs, &subst))
        })
    }

    /// One rewrite step under `strategy`; `None` iff `t` is irreducible.
    pub fn rewrite_once(&self, t: &Term, strategy: Strategy) -> Option<Term> {
        match strategy {
            Strategy::LeftmostOutermost => {
                if let Some(r) = self.rewrite_root(t) {
                    return Some(r);
                }
                self.rewrite_in_args(t, strategy)
            }
            Strategy::LeftmostInnermost => self
                .rewrite_in_args(t, strategy)
                .or_else(|| self.rewrite_root(t)),
        }
    }

    fn rewrite_in_args(&self, t: &Term, strategy: Strategy) -> Option<Term> {
        let Term::App(f, args) = t else { return None };
        for (i, a) in args.iter().enumerate() {
            if let Some(new) = self.rewrite_once(a, strategy) {
                let mut args = args.to_vec();
                args[i] = new;
                return Some(Term::App(f.clone(), args.into()));
            }
        }
        None
    }

    /// Iterates [`RewriteSystem::rewrite_once`] to a fixpoint. The system must
    /// pass [`RewriteSystem::validate`] for this to terminate.
    pub fn normalize_with(&self, t: &Term, strategy: Strategy) -> Term {
        let mut cur = t.clone();
        while let Some(next) = self.rewrite_once(&cur, strategy) {
            cur = next;
        }
        cur
    }
}

/// First-order matching of a possibly non-linear pattern. Repeated pattern
/// variables must bind structurally equal subterms.
pub fn match_pattern(pattern: &Term, t: &Term, subst: &mut BTreeMap<Arc<str>, Term>) -> bool {
    match pattern {
        Term::Var(v) => match subst.get(v) {
            Some(bound) => bound == t,
            None => {
                subst.insert(v.clone(), t.clone());
                true
            }
        },
        Term::App(f, pargs) => match t {
            Term::App(g, targs) if f == g && pargs.len() == targs.len() => pargs
                .iter()
                .zip(targs.iter())
                .all(|(p, a)| match_pattern(p, a, subst)),
            _ => false,
        },
    }
}

/// A term irreducible under the Mal'tsev rules.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalForm(Term);

impl NormalForm {
    pub fn term(&self) -> &Term {
        &self.0
    }

    pub fn into_term(self) -> Term {
        self.0
    }

    pub fn depth(&self) -> usize {
        self.0.depth()
    }
}

impl std::fmt::Display for NormalForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

fn is_mu(f: &str, args: &[Term]) -> bool {
    f == MU && args.len() == 3
}

/// True iff no subterm is a redex of either Mal'tsev rule.
pub fn is_normal(t: &Term) -> bool {
    match t {
        Term::Var(_) => true,
        Term::App(f, args) => {
            if is_mu(f, args) && (args[1] == args[2] || args[0] == args[1]) {
                return false;
            }
            args.iter().all(is_normal)
        }
    }
}

/// Leftmost-innermost single step.
pub fn rewrite_once(t: &Term) -> Option<Term> {
    RewriteSystem::maltsev().rewrite_once(t, Strategy::LeftmostInnermost)
}

/// Bottom-up normalization: arguments are normalized first, after which a
/// root redex collapses to one of its (already normal) arguments. This
/// computes the same term as iterating leftmost-innermost steps.
pub fn normalize(t: &Term) -> NormalForm {
    NormalForm(normalize_term(t))
}

fn normalize_term(t: &Term) -> Term {
    match t {
        Term::Var(_) => t.clone(),
        Term::App(f, args) => {
            let nargs: Vec<Term> = args.iter().map(normalize_term).collect();
            if is_mu(f, &nargs) {
                if nargs[1] == nargs[2] {
                    return nargs[0].clone();
                }
                if nargs[0] == nargs[1] {
                    return nargs[2].clone();
                }
            }
            Term::App(f.clone(), nargs.into())
        }
    }
}

pub fn equal_in_free(t: &Term, s: &Term) -> bool {
    normalize(t) == normalize(s)
}

/// Least `k` with the class of `t` in the `k`-th stratum.
pub fn level(t: &Term) -> usize {
    normalize(t).depth()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountMode {
    /// Count irreducible terms directly.
    Fast,
    /// Enumerate every term, normalize, deduplicate.
    Oracle,
}

/// Number of elements of the free Mal'tsev algebra on `m` generators
/// representable by terms of depth at most `n`.
pub fn count_m(m: usize, n: usize, mode: CountMode, budget: usize) -> Result<BigUint, RewriteError> {
    if m == 0 {
        return Err(RewriteError::NoGenerators);
    }
    match mode {
        CountMode::Fast => {
            // Irreducible terms of depth <= d+1 are the generators together
            // with mu(a,b,c) over irreducible a,b,c of depth <= d where
            // a != b and b != c.
            let gens = BigUint::from(m);
            let one = BigUint::from(1u32);
            let mut count = gens.clone();
            for _ in 0..n {
                let others = &count - &one;
                count = &gens + &count * &others * &others;
            }
            Ok(count)
        }
        CountMode::Oracle => {
            let names = generator_names(m);
            let vars: Vec<&str> = names.iter().map(String::as_str).collect();
            let levels = enumerate_levels(&Signature::maltsev(), &vars, n, budget)
                .map_err(|e| RewriteError::BudgetExceeded(e.budget))?;
            let classes: HashSet<NormalForm> = levels.iter().flatten().map(normalize).collect();
            Ok(BigUint::from(classes.len()))
        }
    }
}

/// Two one-step reducts of an overlap peak.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalPair {
    pub peak: Term,
    pub left_result: Term,
    pub right_result: Term,
    /// Position in the outer rule's left-hand side where the inner rule applies.
    pub position: Vec<usize>,
    pub outer_rule: usize,
    pub inner_rule: usize,
    pub joinable: bool,
    pub left_normal: Term,
    pub right_normal: Term,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfluenceReport {
    pub pairs: Vec<CriticalPair>,
    pub locally_confluent: bool,
}

/// Enumerates the critical pairs of `rs` and joins each by normalization.
///
/// An overlap of a rule with itself at the root is trivial and skipped, as is
/// the mirror image of a root overlap already reported.
pub fn check_confluence(rs: &RewriteSystem) -> Result<ConfluenceReport, RewriteError> {
    rs.validate()?;
    let mut pairs = Vec::new();
    for (i, outer) in rs.rules.iter().enumerate() {
        for (j, inner) in rs.rules.iter().enumerate() {
            let inner = rename(inner, "_r");
            for pos in outer.lhs.positions() {
                let sub = outer.lhs.at(&pos).expect("position from positions()");
                if sub.is_var() || (pos.is_empty() && j <= i) {
                    continue;
                }
                let Some(mgu) = unify(sub, &inner.lhs) else { continue };
                let peak = apply(&outer.lhs, &mgu);
                let left = apply(&outer.lhs.replace_at(&pos, inner.rhs.clone()), &mgu);
                let right = apply(&outer.rhs, &mgu);
                let names = canonical_names(&peak);
                let (peak, left, right) = (
                    crate::term::substitute(&peak, &names),
                    crate::term::substitute(&left, &names),
                    crate::term::substitute(&right, &names),
                );
                let left_normal = rs.normalize_with(&left, Strategy::LeftmostInnermost);
                let right_normal = rs.normalize_with(&right, Strategy::LeftmostInnermost);
                pairs.push(CriticalPair {
                    joinable: left_normal == right_normal,
                    peak,
                    left_result: left,
                    right_result: right,
                    position: pos,
                    outer_rule: i,
                    inner_rule: j,
                    left_normal,
                    right_normal,
                });
            }
        }
    }
    let locally_confluent = pairs.iter().all(|p| p.joinable);
    Ok(ConfluenceReport {
        pairs,
        locally_confluent,
    })
}

fn rename(r: &Rule, suffix: &str) -> Rule {
    let map: BTreeMap<Arc<str>, Term> = r
        .lhs
        .variables()
        .into_iter()
        .map(|v| {
            let fresh = Term::var(&format!("{v}{suffix}"));
            (v, fresh)
        })
        .collect();
    Rule {
        lhs: crate::term::substitute(&r.lhs, &map),
        rhs: crate::term::substitute(&r.rhs, &map),
    }
}

/// Renames variables to `x, y, z, w, …` in order of first occurrence.
fn canonical_names(t: &Term) -> BTreeMap<Arc<str>, Term> {
    let vars = t.variables();
    let names = generator_names(vars.len());
    vars.into_iter()
        .zip(names)
        .map(|(v, n)| (v, Term::var(&n)))
        .collect()
}

type Unifier = BTreeMap<Arc<str>, Term>;

fn resolve(t: &Term, s: &Unifier) -> Term {
    match t {
        Term::Var(v) => match s.get(v) {
            Some(b) => resolve(b, s),
            None => t.clone(),
        },
        Term::App(f, args) => Term::App(f.clone(), args.iter().map(|a| resolve(a, s)).collect()),
    }
}

fn apply(t: &Term, s: &Unifier) -> Term {
    resolve(t, s)
}

fn occurs(v: &str, t: &Term) -> bool {
    match t {
        Term::Var(w) => &**w == v,
        Term::App(_, args) => args.iter().any(|a| occurs(v, a)),
    }
}

/// Syntactic most general unifier, in triangular form.
fn unify(a: &Term, b: &Term) -> Option<Unifier> {
    let mut s = Unifier::new();
    let mut stack = vec![(a.clone(), b.clone())];
    while let Some((l, r)) = stack.pop() {
        let (l, r) = (resolve(&l, &s), resolve(&r, &s));
        if l == r {
            continue;
        }
        match (&l, &r) {
            (Term::Var(v), _) => {
                if occurs(v, &r) {
                    return None;
                }
                s.insert(v.clone(), r.clone());
            }
            (_, Term::Var(v)) => {
                if occurs(v, &l) {
                    return None;
                }
                s.insert(v.clone(), l.clone());
            }
            (Term::App(f, fa), Term::App(g, ga)) => {
                if f != g || fa.len() != ga.len() {
                    return None;
                }
                stack.extend(fa.iter().cloned().zip(ga.iter().cloned()));
            }
        }
    }
    Some(s)
}
