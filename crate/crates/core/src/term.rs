//! Signatures and first-order terms.
//!
//! A [`Term`] is an element of the absolutely free algebra over a
//! [`Signature`] and a set of variables. Identifiers that are declared in the
//! signature are operation symbols; every other identifier is a variable.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use thiserror::Error;

/// Name of the ternary Mal'tsev symbol.
pub const MU: &str = "mu";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TermError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("symbol `{symbol}` at byte {pos} expects {expected} argument(s), found {found}")]
    Arity {
        symbol: String,
        expected: usize,
        found: usize,
        pos: usize,
    },
    #[error("`{name}` at byte {pos} is applied to arguments but is not a declared symbol")]
    UnknownSymbol { name: String, pos: usize },
    #[error("variable `{0}` collides with a declared symbol")]
    NameCollision(String),
    #[error("invalid signature: {0}")]
    InvalidSignature(String),
}

/// An ordered list of operation symbols with their arities.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Signature {
    symbols: Vec<(Arc<str>, usize)>,
}

impl Signature {
    pub fn new<S: AsRef<str>>(symbols: &[(S, usize)]) -> Result<Self, TermError> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::with_capacity(symbols.len());
        for (name, arity) in symbols {
            let name = name.as_ref();
            if !is_ident(name) {
                return Err(TermError::InvalidSignature(format!(
                    "`{name}` is not a valid identifier"
                )));
            }
            if !seen.insert(name.to_string()) {
                return Err(TermError::InvalidSignature(format!(
                    "duplicate symbol `{name}`"
                )));
            }
            out.push((Arc::from(name), *arity));
        }
        Ok(Signature { symbols: out })
    }

    /// The signature `{mu/3}`.
    pub fn maltsev() -> Self {
        Signature {
            symbols: vec![(Arc::from(MU), 3)],
        }
    }

    pub fn arity(&self, name: &str) -> Option<usize> {
        self.symbols
            .iter()
            .find(|(n, _)| &**n == name)
            .map(|(_, a)| *a)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.arity(name).is_some()
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.symbols.iter().position(|(n, _)| &**n == name)
    }

    pub fn symbols(&self) -> impl Iterator<Item = (&str, usize)> + '_ {
        self.symbols.iter().map(|(n, a)| (&**n, *a))
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub(crate) fn symbol_arc(&self, index: usize) -> Arc<str> {
        self.symbols[index].0.clone()
    }
}

/// A first-order term. Equality is structural; subterms are shared behind
/// `Arc` so clones are cheap.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Var(Arc<str>),
    App(Arc<str>, Arc<[Term]>),
}

impl Term {
    pub fn var(name: &str) -> Term {
        Term::Var(Arc::from(name))
    }

    pub fn app(symbol: &str, args: Vec<Term>) -> Term {
        Term::App(Arc::from(symbol), args.into())
    }

    /// `mu(a, b, c)`.
    pub fn mu(a: Term, b: Term, c: Term) -> Term {
        Term::App(Arc::from(MU), vec![a, b, c].into())
    }

    pub fn is_var(&self) -> bool {
        matches!(self, Term::Var(_))
    }

    pub fn args(&self) -> &[Term] {
        match self {
            Term::Var(_) => &[],
            Term::App(_, args) => args,
        }
    }

    /// Depth of the syntax tree. Variables and constants have depth 0.
    pub fn depth(&self) -> usize {
        match self {
            Term::Var(_) => 0,
            Term::App(_, args) => args.iter().map(|a| a.depth() + 1).max().unwrap_or(0),
        }
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        match self {
            Term::Var(_) => 1,
            Term::App(_, args) => 1 + args.iter().map(Term::size).sum::<usize>(),
        }
    }

    /// Variables in order of first occurrence.
    pub fn variables(&self) -> Vec<Arc<str>> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut Vec<Arc<str>>) {
        match self {
            Term::Var(v) => {
                if !out.contains(v) {
                    out.push(v.clone());
                }
            }
            Term::App(_, args) => args.iter().for_each(|a| a.collect_vars(out)),
        }
    }

    /// Subterm at a path of argument indices.
    pub fn at(&self, path: &[usize]) -> Option<&Term> {
        path.iter().try_fold(self, |t, &i| t.args().get(i))
    }

    /// Replaces the subterm at `path`. Panics if the path does not exist.
    pub fn replace_at(&self, path: &[usize], new: Term) -> Term {
        match path.split_first() {
            None => new,
            Some((&i, rest)) => match self {
                Term::App(f, args) => {
                    let mut args = args.to_vec();
                    args[i] = args[i].replace_at(rest, new);
                    Term::App(f.clone(), args.into())
                }
                Term::Var(_) => panic!("path runs through a variable"),
            },
        }
    }

    /// All positions in pre-order (root first, then arguments left to right).
    pub fn positions(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut path = Vec::new();
        self.walk_positions(&mut path, &mut out);
        out
    }

    fn walk_positions(&self, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(path.clone());
        for (i, a) in self.args().iter().enumerate() {
            path.push(i);
            a.walk_positions(path, out);
            path.pop();
        }
    }

    /// Checks arities against `sig` and that no variable shadows a symbol.
    pub fn check(&self, sig: &Signature) -> Result<(), TermError> {
        match self {
            Term::Var(v) => {
                if sig.contains(v) {
                    Err(TermError::NameCollision(v.to_string()))
                } else {
                    Ok(())
                }
            }
            Term::App(f, args) => {
                match sig.arity(f) {
                    None => {
                        return Err(TermError::UnknownSymbol {
                            name: f.to_string(),
                            pos: 0,
                        })
                    }
                    Some(a) if a != args.len() => {
                        return Err(TermError::Arity {
                            symbol: f.to_string(),
                            expected: a,
                            found: args.len(),
                            pos: 0,
                        })
                    }
                    Some(_) => {}
                }
                args.iter().try_for_each(|a| a.check(sig))
            }
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => f.write_str(v),
            Term::App(s, args) if args.is_empty() => f.write_str(s),
            Term::App(s, args) => {
                write!(f, "{s}(")?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
        }
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn is_ident(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Canonical rendering; `parse_term(&format_term(t), sig) == Ok(t)` for
/// every term well formed over `sig`.
pub fn format_term(t: &Term) -> String {
    t.to_string()
}

pub fn parse_term(text: &str, sig: &Signature) -> Result<Term, TermError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        sig,
    };
    p.skip_ws();
    if p.pos == p.src.len() {
        return Err(TermError::Syntax {
            pos: 0,
            msg: "empty input".into(),
        });
    }
    let t = p.term()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("trailing input"));
    }
    Ok(t)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    sig: &'a Signature,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> TermError {
        TermError::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn ident(&mut self) -> Result<&str, TermError> {
        let start = self.pos;
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => self.pos += 1,
            _ => return Err(self.error("expected identifier")),
        }
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == b'_') {
            self.pos += 1;
        }
        // Only ASCII bytes were consumed.
        Ok(std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn term(&mut self) -> Result<Term, TermError> {
        self.skip_ws();
        let start = self.pos;
        let name = self.ident()?.to_string();
        self.skip_ws();
        let mut args = Vec::new();
        let has_parens = self.peek() == Some(b'(');
        if has_parens {
            self.pos += 1;
            loop {
                args.push(self.term()?);
                self.skip_ws();
                match self.peek() {
                    Some(b',') => self.pos += 1,
                    Some(b')') => {
                        self.pos += 1;
                        break;
                    }
                    _ => return Err(self.error("expected `,` or `)`")),
                }
            }
        }
        match self.sig.arity(&name) {
            Some(arity) if arity == args.len() => Ok(Term::App(Arc::from(name), args.into())),
            Some(arity) => Err(TermError::Arity {
                symbol: name,
                expected: arity,
                found: args.len(),
                pos: start,
            }),
            None if has_parens => Err(TermError::UnknownSymbol { name, pos: start }),
            None => Ok(Term::Var(Arc::from(name))),
        }
    }
}

/// Simultaneous substitution; unmapped variables stay fixed.
pub fn substitute(t: &Term, assignment: &BTreeMap<Arc<str>, Term>) -> Term {
    match t {
        Term::Var(v) => assignment.get(v).cloned().unwrap_or_else(|| t.clone()),
        Term::App(f, args) => Term::App(
            f.clone(),
            args.iter().map(|a| substitute(a, assignment)).collect(),
        ),
    }
}

pub fn term_depth(t: &Term) -> usize {
    t.depth()
}

/// Default generator names: `x, y, z, w` for up to four generators,
/// `x0, x1, …` beyond that.
pub fn generator_names(m: usize) -> Vec<String> {
    const SHORT: [&str; 4] = ["x", "y", "z", "w"];
    if m <= SHORT.len() {
        SHORT[..m].iter().map(|s| s.to_string()).collect()
    } else {
        (0..m).map(|i| format!("x{i}")).collect()
    }
}

/// `|W_n|` for the `{mu}` signature over `m` generators.
///
/// With cumulative counts `C_k = |W_0| + … + |W_k|`, the triples whose
/// maximal component depth is exactly `n - 1` number `C_{n-1}^3 - C_{n-2}^3`.
pub fn count_w(m: u64, n: usize) -> BigUint {
    let m = BigUint::from(m);
    if n == 0 {
        return m;
    }
    let mut cumulative = vec![m.clone()];
    let mut level = m;
    for k in 1..=n {
        let upper = cumulative[k - 1].pow(3);
        let lower = if k >= 2 {
            cumulative[k - 2].pow(3)
        } else {
            BigUint::from(0u32)
        };
        level = upper - lower;
        let next = &cumulative[k - 1] + &level;
        cumulative.push(next);
    }
    level
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("enumeration budget of {budget} terms exceeded")]
pub struct BudgetExceeded {
    pub budget: usize,
}

/// Terms over `sig` and `vars` grouped by exact depth, `levels[d]` for
/// `d <= max_depth`.
///
/// Level 0 lists the variables in the given order followed by the constants
/// in signature order. Level `n` lists, for each symbol in signature order,
/// the argument tuples drawn from depths `< n` with at least one argument of
/// depth `n - 1`, in lexicographic order of the earlier enumeration.
pub fn enumerate_levels(
    sig: &Signature,
    vars: &[&str],
    max_depth: usize,
    budget: usize,
) -> Result<Vec<Vec<Term>>, BudgetExceeded> {
    let mut all: Vec<Term> = Vec::new();
    let mut depth_of: Vec<usize> = Vec::new();
    let mut levels = Vec::new();

    let mut level0: Vec<Term> = vars.iter().map(|v| Term::var(v)).collect();
    for (i, (_, a)) in sig.symbols.iter().enumerate() {
        if *a == 0 {
            level0.push(Term::App(sig.symbol_arc(i), Vec::new().into()));
        }
    }
    if level0.len() > budget {
        return Err(BudgetExceeded { budget });
    }
    let mut total = level0.len();
    depth_of.extend(std::iter::repeat_n(0, level0.len()));
    all.extend(level0.iter().cloned());
    levels.push(level0);

    for n in 1..=max_depth {
        let mut level = Vec::new();
        let prefix = all.len();
        for (si, (_, arity)) in sig.symbols.iter().enumerate() {
            let arity = *arity;
            if arity == 0 || prefix == 0 {
                continue;
            }
            let mut idx = vec![0usize; arity];
            loop {
                if idx.iter().any(|&i| depth_of[i] == n - 1) {
                    total += 1;
                    if total > budget {
                        return Err(BudgetExceeded { budget });
                    }
                    let args: Vec<Term> = idx.iter().map(|&i| all[i].clone()).collect();
                    level.push(Term::App(sig.symbol_arc(si), args.into()));
                }
                if !next_tuple(&mut idx, prefix) {
                    break;
                }
            }
        }
        depth_of.extend(std::iter::repeat_n(n, level.len()));
        all.extend(level.iter().cloned());
        levels.push(level);
    }
    Ok(levels)
}

/// Advances `idx` as an odometer over `0..base` with the last position
/// fastest. Returns `false` after the final tuple.
pub(crate) fn next_tuple(idx: &mut [usize], base: usize) -> bool {
    for k in (0..idx.len()).rev() {
        idx[k] += 1;
        if idx[k] < base {
            return true;
        }
        idx[k] = 0;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig() -> Signature {
        Signature::maltsev()
    }

    fn p(s: &str) -> Term {
        parse_term(s, &sig()).unwrap()
    }

    #[test]
    fn parses_maltsev_application() {
        let t = p("mu(x,y,y)");
        assert_eq!(t, Term::mu(Term::var("x"), Term::var("y"), Term::var("y")));
        assert_eq!(p("x"), Term::var("x"));
    }

    #[test]
    fn whitespace_is_ignored() {
        assert_eq!(p("  mu ( x ,\ty , mu(z,z, z) ) "), p("mu(x,y,mu(z,z,z))"));
    }

    #[test]
    fn arity_mismatch_is_reported() {
        let err = parse_term("mu(x,y)", &sig()).unwrap_err();
        assert!(matches!(err, TermError::Arity { expected: 3, found: 2, .. }));
        let err = parse_term("mu", &sig()).unwrap_err();
        assert!(matches!(err, TermError::Arity { found: 0, .. }));
    }

    #[test]
    fn syntax_errors_carry_position() {
        assert_eq!(
            parse_term("mu(x,y,", &sig()),
            Err(TermError::Syntax {
                pos: 7,
                msg: "expected identifier".into()
            })
        );
        assert!(matches!(
            parse_term("", &sig()),
            Err(TermError::Syntax { pos: 0, .. })
        ));
        assert!(matches!(
            parse_term("x y", &sig()),
            Err(TermError::Syntax { pos: 2, .. })
        ));
        assert!(matches!(
            parse_term("f(x)", &sig()),
            Err(TermError::UnknownSymbol { pos: 0, .. })
        ));
    }

    #[test]
    fn constants_render_without_parens() {
        let s = Signature::new(&[("mul", 2), ("e", 0)]).unwrap();
        let t = parse_term("mul(e, x)", &s).unwrap();
        assert_eq!(format_term(&t), "mul(e,x)");
        assert_eq!(t.depth(), 1);
        assert!(parse_term("e()", &s).is_err());
    }

    #[test]
    fn collision_detected_on_constructed_terms() {
        let t = Term::var("mu");
        assert_eq!(t.check(&sig()), Err(TermError::NameCollision("mu".into())));
    }

    #[test]
    fn format_examples() {
        assert_eq!(format_term(&p("mu(x,y,z)")), "mu(x,y,z)");
        assert_eq!(format_term(&p("x")), "x");
        assert_eq!(format_term(&p("mu(mu(x,y,z),x,x)")), "mu(mu(x,y,z),x,x)");
    }

    #[test]
    fn substitution_examples() {
        let mut a = BTreeMap::new();
        a.insert(Arc::from("x"), Term::var("a"));
        a.insert(Arc::from("y"), Term::var("b"));
        assert_eq!(substitute(&p("mu(x,y,y)"), &a), p("mu(a,b,b)"));
        assert_eq!(substitute(&p("x"), &BTreeMap::new()), p("x"));
        let mut a = BTreeMap::new();
        a.insert(Arc::from("y"), p("mu(x,x,x)"));
        assert_eq!(substitute(&p("mu(x,y,z)"), &a), p("mu(x,mu(x,x,x),z)"));
    }

    #[test]
    fn depth_examples() {
        assert_eq!(term_depth(&p("x")), 0);
        assert_eq!(term_depth(&p("mu(x,y,z)")), 1);
        assert_eq!(term_depth(&p("mu(mu(x,y,z),x,x)")), 2);
    }

    #[test]
    fn count_w_examples() {
        assert_eq!(count_w(2, 1), BigUint::from(8u32));
        assert_eq!(count_w(2, 2), BigUint::from(992u32));
        assert_eq!(count_w(1, 1), BigUint::from(1u32));
        assert_eq!(count_w(3, 0), BigUint::from(3u32));
    }

    #[test]
    fn count_w_matches_enumeration() {
        for m in 1..=2 {
            let names = generator_names(m);
            let vars: Vec<&str> = names.iter().map(String::as_str).collect();
            let levels = enumerate_levels(&sig(), &vars, 2, 1_000_000).unwrap();
            for (n, level) in levels.iter().enumerate() {
                assert_eq!(BigUint::from(level.len()), count_w(m as u64, n));
                assert!(level.iter().all(|t| t.depth() == n));
                let distinct: BTreeSet<&Term> = level.iter().collect();
                assert_eq!(distinct.len(), level.len());
            }
        }
    }

    #[test]
    fn enumeration_order_is_lexicographic() {
        let levels = enumerate_levels(&sig(), &["x", "y"], 1, 100).unwrap();
        let rendered: Vec<String> = levels[1].iter().map(format_term).collect();
        assert_eq!(rendered[0], "mu(x,x,x)");
        assert_eq!(rendered[1], "mu(x,x,y)");
        assert_eq!(rendered[7], "mu(y,y,y)");
    }

    #[test]
    fn enumeration_respects_budget() {
        assert_eq!(
            enumerate_levels(&sig(), &["x", "y"], 2, 500),
            Err(BudgetExceeded { budget: 500 })
        );
    }

    #[test]
    fn replace_and_positions() {
        let t = p("mu(x,mu(y,z,z),w)");
        assert_eq!(t.positions().len(), 7);
        assert_eq!(t.at(&[1, 0]), Some(&Term::var("y")));
        assert_eq!(t.replace_at(&[1], Term::var("q")), p("mu(x,q,w)"));
    }

    #[test]
    fn invalid_signatures_rejected() {
        assert!(Signature::new(&[("f", 1), ("f", 2)]).is_err());
        assert!(Signature::new(&[("", 1)]).is_err());
        assert!(Signature::new(&[("1f", 1)]).is_err());
    }
}
