//! Finite algebras given by operation tables.
//!
//! The carrier is always `{0, …, n-1}`. Tables are flat and row-major with
//! the last argument varying fastest.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rewrite::normalize;
use crate::term::{next_tuple, parse_term, Signature, Term, TermError, MU};

/// Conventional symbol names for derived structures.
pub mod symbols {
    pub const MUL: &str = "mul";
    pub const INV: &str = "inv";
    pub const UNIT: &str = "e";
    pub const LDIV: &str = "ldiv";
    pub const RDIV: &str = "rdiv";
}
use symbols::*;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("malformed algebra document: {0}")]
    Schema(String),
    #[error("operation `{symbol}`: entry {index} is {value}, outside the carrier 0..{size}")]
    Range {
        symbol: String,
        index: usize,
        value: usize,
        size: usize,
    },
    #[error("operation `{symbol}`: table has {found} entries, expected {expected}")]
    SizeMismatch {
        symbol: String,
        expected: usize,
        found: usize,
    },
    #[error("algebra has no operation `{0}`")]
    MissingSymbol(String),
    #[error("operation `{symbol}` has arity {found}, expected {expected}")]
    Arity {
        symbol: String,
        expected: usize,
        found: usize,
    },
    #[error(transparent)]
    Term(#[from] TermError),
    #[error("variable `{0}` is not allowed here")]
    ForeignVariable(String),
    #[error("{structure} axiom `{identity}` fails at {counterexample}")]
    AxiomFailure {
        structure: &'static str,
        identity: String,
        counterexample: String,
    },
    #[error("operation `{0}` is not a Latin square")]
    NotLatin(String),
    #[error("retraction does not fix generator {0}")]
    NotRetraction(usize),
    #[error("carrier must be nonempty")]
    EmptyCarrier,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OperationTable {
    arity: usize,
    size: usize,
    entries: Vec<usize>,
}

impl OperationTable {
    pub fn new(symbol: &str, arity: usize, size: usize, entries: Vec<usize>) -> Result<Self, AlgebraError> {
        let expected = size.pow(arity as u32);
        if entries.len() != expected {
            return Err(AlgebraError::SizeMismatch {
                symbol: symbol.to_string(),
                expected,
                found: entries.len(),
            });
        }
        if let Some((index, &value)) = entries.iter().enumerate().find(|(_, &v)| v >= size) {
            return Err(AlgebraError::Range {
                symbol: symbol.to_string(),
                index,
                value,
                size,
            });
        }
        Ok(OperationTable { arity, size, entries })
    }

    /// Tabulates `f` over all argument tuples.
    pub fn from_fn(arity: usize, size: usize, mut f: impl FnMut(&[usize]) -> usize) -> Self {
        let mut entries = Vec::with_capacity(size.pow(arity as u32));
        let mut args = vec![0usize; arity];
        if size > 0 || arity == 0 {
            loop {
                entries.push(f(&args));
                if !next_tuple(&mut args, size) {
                    break;
                }
            }
        }
        OperationTable { arity, size, entries }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn index(&self, args: &[usize]) -> usize {
        debug_assert_eq!(args.len(), self.arity);
        args.iter().fold(0, |acc, &a| acc * self.size + a)
    }

    pub fn get(&self, args: &[usize]) -> usize {
        self.entries[self.index(args)]
    }
}

/// Ternary lookup helper.
impl OperationTable {
    pub fn get3(&self, a: usize, b: usize, c: usize) -> usize {
        self.entries[(a * self.size + b) * self.size + c]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteAlgebra {
    pub name: String,
    size: usize,
    signature: Signature,
    tables: Vec<OperationTable>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OperationDocument {
    pub symbol: String,
    pub arity: usize,
    pub table: Vec<usize>,
}

/// The JSON interchange format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    pub name: String,
    pub size: usize,
    pub operations: Vec<OperationDocument>,
}

pub fn load_algebra(json: &str) -> Result<FiniteAlgebra, AlgebraError> {
    let doc: AlgebraDocument =
        serde_json::from_str(json).map_err(|e| AlgebraError::Schema(e.to_string()))?;
    FiniteAlgebra::from_document(doc)
}

impl FiniteAlgebra {
    pub fn new(name: &str, size: usize, ops: Vec<(String, OperationTable)>) -> Result<Self, AlgebraError> {
        if size == 0 {
            return Err(AlgebraError::EmptyCarrier);
        }
        let sig: Vec<(&str, usize)> = ops.iter().map(|(s, t)| (s.as_str(), t.arity)).collect();
        let signature = Signature::new(&sig)?;
        for (symbol, t) in &ops {
            if t.size != size {
                return Err(AlgebraError::SizeMismatch {
                    symbol: symbol.clone(),
                    expected: size.pow(t.arity as u32),
                    found: t.entries.len(),
                });
            }
        }
        Ok(FiniteAlgebra {
            name: name.to_string(),
            size,
            signature,
            tables: ops.into_iter().map(|(_, t)| t).collect(),
        })
    }

    pub fn from_document(doc: AlgebraDocument) -> Result<Self, AlgebraError> {
        if doc.size == 0 {
            return Err(AlgebraError::EmptyCarrier);
        }
        let ops = doc
            .operations
            .into_iter()
            .map(|op| {
                let t = OperationTable::new(&op.symbol, op.arity, doc.size, op.table)?;
                Ok((op.symbol, t))
            })
            .collect::<Result<Vec<_>, AlgebraError>>()?;
        FiniteAlgebra::new(&doc.name, doc.size, ops)
    }

    pub fn to_document(&self) -> AlgebraDocument {
        AlgebraDocument {
            name: self.name.clone(),
            size: self.size,
            operations: self
                .signature
                .symbols()
                .zip(&self.tables)
                .map(|((s, a), t)| OperationDocument {
                    symbol: s.to_string(),
                    arity: a,
                    table: t.entries.clone(),
                })
                .collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    pub fn tables(&self) -> &[OperationTable] {
        &self.tables
    }

    pub fn operations(&self) -> impl Iterator<Item = (&str, &OperationTable)> + '_ {
        self.signature.symbols().map(|(s, _)| s).zip(&self.tables)
    }

    pub fn op(&self, symbol: &str) -> Option<&OperationTable> {
        self.signature.position(symbol).map(|i| &self.tables[i])
    }

    fn op_checked(&self, symbol: &str, arity: usize) -> Result<&OperationTable, AlgebraError> {
        let t = self
            .op(symbol)
            .ok_or_else(|| AlgebraError::MissingSymbol(symbol.to_string()))?;
        if t.arity != arity {
            return Err(AlgebraError::Arity {
                symbol: symbol.to_string(),
                expected: arity,
                found: t.arity,
            });
        }
        Ok(t)
    }

    /// Same algebra with `symbol` added, or replaced if already present.
    pub fn with_operation(&self, symbol: &str, table: OperationTable) -> Result<Self, AlgebraError> {
        let mut ops: Vec<(String, OperationTable)> = self
            .operations()
            .filter(|(s, _)| *s != symbol)
            .map(|(s, t)| (s.to_string(), t.clone()))
            .collect();
        ops.push((symbol.to_string(), table));
        FiniteAlgebra::new(&self.name, self.size, ops)
    }

    /// Evaluates `t`, looking variables up in `vars` / `values`.
    pub fn eval(&self, t: &Term, vars: &[Arc<str>], values: &[usize]) -> Result<usize, AlgebraError> {
        match t {
            Term::Var(v) => vars
                .iter()
                .position(|w| w == v)
                .map(|i| values[i])
                .ok_or_else(|| AlgebraError::ForeignVariable(v.to_string())),
            Term::App(f, args) => {
                let table = self.op_checked(f, args.len())?;
                let mut vals = [0usize; 8];
                if args.len() <= vals.len() {
                    for (slot, a) in vals.iter_mut().zip(args.iter()) {
                        *slot = self.eval(a, vars, values)?;
                    }
                    Ok(table.get(&vals[..args.len()]))
                } else {
                    let vals = args
                        .iter()
                        .map(|a| self.eval(a, vars, values))
                        .collect::<Result<Vec<_>, _>>()?;
                    Ok(table.get(&vals))
                }
            }
        }
    }

    /// The `vars.len()`-ary term operation induced by `t`.
    pub fn term_table(&self, t: &Term, vars: &[&str]) -> Result<OperationTable, AlgebraError> {
        let vars: Vec<Arc<str>> = vars.iter().map(|v| Arc::from(*v)).collect();
        for v in t.variables() {
            if !vars.contains(&v) {
                return Err(AlgebraError::ForeignVariable(v.to_string()));
            }
        }
        let mut err = None;
        let table = OperationTable::from_fn(vars.len(), self.size, |vals| {
            self.eval(t, &vars, vals).unwrap_or_else(|e| {
                err.get_or_insert(e);
                0
            })
        });
        match err {
            Some(e) => Err(e),
            None => Ok(table),
        }
    }

    /// Direct product; the pair `(a, b)` is encoded as `a * other.size + b`.
    pub fn product(&self, other: &FiniteAlgebra) -> Result<FiniteAlgebra, AlgebraError> {
        let n = self.size * other.size;
        let mut ops = Vec::new();
        for (symbol, t) in self.operations() {
            let u = other.op_checked(symbol, t.arity)?;
            let k = other.size;
            let table = OperationTable::from_fn(t.arity, n, |args| {
                let left: Vec<usize> = args.iter().map(|a| a / k).collect();
                let right: Vec<usize> = args.iter().map(|a| a % k).collect();
                t.get(&left) * k + u.get(&right)
            });
            ops.push((symbol.to_string(), table));
        }
        FiniteAlgebra::new(&format!("{}x{}", self.name, other.name), n, ops)
    }
}

/// A universally quantified equation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Identity {
    pub lhs: Term,
    pub rhs: Term,
    pub variables: Vec<Arc<str>>,
}

impl Identity {
    pub fn new(lhs: Term, rhs: Term) -> Self {
        let mut variables = lhs.variables();
        for v in rhs.variables() {
            if !variables.contains(&v) {
                variables.push(v);
            }
        }
        Identity { lhs, rhs, variables }
    }

    /// Parses `lhs = rhs`.
    pub fn parse(text: &str, sig: &Signature) -> Result<Self, TermError> {
        let Some((l, r)) = text.split_once('=') else {
            return Err(TermError::Syntax {
                pos: text.len(),
                msg: "expected `lhs = rhs`".into(),
            });
        };
        let lhs = parse_term(l, sig)?;
        let rhs = parse_term(r, sig).map_err(|e| match e {
            TermError::Syntax { pos, msg } => TermError::Syntax {
                pos: pos + l.len() + 1,
                msg,
            },
            other => other,
        })?;
        Ok(Identity::new(lhs, rhs))
    }
}

impl std::fmt::Display for Identity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdentityCheck {
    Holds,
    /// The lexicographically first failing assignment.
    Counterexample(Vec<(String, usize)>),
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        matches!(self, IdentityCheck::Holds)
    }
}

pub fn check_identity(alg: &FiniteAlgebra, id: &Identity) -> Result<IdentityCheck, AlgebraError> {
    id.lhs.check(alg.signature())?;
    id.rhs.check(alg.signature())?;
    let mut values = vec![0usize; id.variables.len()];
    loop {
        if alg.eval(&id.lhs, &id.variables, &values)? != alg.eval(&id.rhs, &id.variables, &values)? {
            return Ok(IdentityCheck::Counterexample(
                id.variables.iter().map(|v| v.to_string()).zip(values).collect(),
            ));
        }
        if !next_tuple(&mut values, alg.size) {
            return Ok(IdentityCheck::Holds);
        }
    }
}

/// Both halves of `mu(x,y,y) = x = mu(y,y,x)`, checked pointwise.
pub fn is_maltsev_table(t: &OperationTable) -> bool {
    t.arity == 3
        && (0..t.size).all(|x| (0..t.size).all(|y| t.get3(x, y, y) == x && t.get3(y, y, x) == x))
}

pub fn is_maltsev_operation(alg: &FiniteAlgebra, symbol: &str) -> Result<bool, AlgebraError> {
    Ok(is_maltsev_table(alg.op_checked(symbol, 3)?))
}

fn require_axioms(alg: &FiniteAlgebra, structure: &'static str, axioms: &[&str]) -> Result<(), AlgebraError> {
    for text in axioms {
        let id = Identity::parse(text, alg.signature())?;
        if let IdentityCheck::Counterexample(cx) = check_identity(alg, &id)? {
            let counterexample = cx
                .iter()
                .map(|(v, x)| format!("{v}={x}"))
                .collect::<Vec<_>>()
                .join(",");
            return Err(AlgebraError::AxiomFailure {
                structure,
                identity: text.to_string(),
                counterexample,
            });
        }
    }
    Ok(())
}

fn maltsev_term_table(alg: &FiniteAlgebra, term: &str) -> Result<OperationTable, AlgebraError> {
    let t = parse_term(term, alg.signature())?;
    alg.term_table(&t, &["x", "y", "z"])
}

/// Group Mal'tsev term, over `mul`, `inv`, `e`.
pub const GROUP_MALTSEV_TERM: &str = "mul(mul(x,inv(y)),z)";
/// Left-loop Mal'tsev term, over `mul`, `ldiv`.
pub const LEFT_LOOP_MALTSEV_TERM: &str = "mul(x,ldiv(y,z))";
/// Quasigroup Mal'tsev term, over `mul`, `rdiv`, `ldiv`.
pub const QUASIGROUP_MALTSEV_TERM: &str = "mul(rdiv(x,ldiv(y,y)),ldiv(y,z))";

/// `x · y^-1 · z` for a group with operations `mul`, `inv`, `e`.
pub fn maltsev_from_group(alg: &FiniteAlgebra) -> Result<OperationTable, AlgebraError> {
    alg.op_checked(MUL, 2)?;
    alg.op_checked(INV, 1)?;
    alg.op_checked(UNIT, 0)?;
    require_axioms(
        alg,
        "group",
        &[
            "mul(mul(x,y),z) = mul(x,mul(y,z))",
            "mul(e,x) = x",
            "mul(x,e) = x",
            "mul(inv(x),x) = e",
            "mul(x,inv(x)) = e",
        ],
    )?;
    maltsev_term_table(alg, GROUP_MALTSEV_TERM)
}

/// Left division solved from the rows of `mul`: `ldiv(x,y)` is the unique
/// `z` with `mul(x,z) = y`.
fn solve_ldiv(alg: &FiniteAlgebra) -> Result<OperationTable, AlgebraError> {
    let mul = alg.op_checked(MUL, 2)?;
    let n = alg.size;
    let mut entries = vec![usize::MAX; n * n];
    for x in 0..n {
        for z in 0..n {
            let y = mul.get(&[x, z]);
            if entries[x * n + y] != usize::MAX {
                return Err(AlgebraError::NotLatin(MUL.to_string()));
            }
            entries[x * n + y] = z;
        }
    }
    OperationTable::new(LDIV, 2, n, entries)
}

/// `rdiv(y,x)` is the unique `z` with `mul(z,x) = y`.
fn solve_rdiv(alg: &FiniteAlgebra) -> Result<OperationTable, AlgebraError> {
    let mul = alg.op_checked(MUL, 2)?;
    let n = alg.size;
    let mut entries = vec![usize::MAX; n * n];
    for x in 0..n {
        for z in 0..n {
            let y = mul.get(&[z, x]);
            if entries[y * n + x] != usize::MAX {
                return Err(AlgebraError::NotLatin(MUL.to_string()));
            }
            entries[y * n + x] = z;
        }
    }
    OperationTable::new(RDIV, 2, n, entries)
}

/// Adds the missing division tables of a quasigroup given by its `mul`
/// Latin square.
pub fn complete_quasigroup(alg: &FiniteAlgebra) -> Result<FiniteAlgebra, AlgebraError> {
    let mut out = alg.clone();
    if out.op(LDIV).is_none() {
        out = out.with_operation(LDIV, solve_ldiv(alg)?)?;
    }
    if out.op(RDIV).is_none() {
        out = out.with_operation(RDIV, solve_rdiv(alg)?)?;
    }
    Ok(out)
}

/// `x * (y \ z)` for a left loop with `mul`, `ldiv`, `e`; `ldiv` is solved
/// from `mul` when absent.
pub fn maltsev_from_left_loop(alg: &FiniteAlgebra) -> Result<OperationTable, AlgebraError> {
    alg.op_checked(MUL, 2)?;
    alg.op_checked(UNIT, 0)?;
    let alg = if alg.op(LDIV).is_none() {
        alg.with_operation(LDIV, solve_ldiv(alg)?)?
    } else {
        alg.clone()
    };
    require_axioms(
        &alg,
        "left loop",
        &["mul(x,ldiv(x,y)) = y", "ldiv(x,mul(x,y)) = y", "mul(x,e) = x"],
    )?;
    maltsev_term_table(&alg, LEFT_LOOP_MALTSEV_TERM)
}

/// `(x / (y \ y)) * (y \ z)` for a quasigroup; divisions are solved from the
/// Latin square of `mul` when absent.
pub fn maltsev_from_quasigroup(alg: &FiniteAlgebra) -> Result<OperationTable, AlgebraError> {
    let alg = complete_quasigroup(alg)?;
    require_axioms(
        &alg,
        "quasigroup",
        &[
            "mul(rdiv(y,x),x) = y",
            "rdiv(mul(y,x),x) = y",
            "mul(x,ldiv(x,y)) = y",
            "ldiv(x,mul(x,y)) = y",
        ],
    )?;
    maltsev_term_table(&alg, QUASIGROUP_MALTSEV_TERM)
}

/// Ternary table `t(a,b,c) = r(normalize(mu(g_a, g_b, g_c)))` from a map `r`
/// on normal forms of depth at most one that must fix every generator.
pub fn maltsev_from_retraction(
    generators: &[&str],
    r: impl Fn(&Term) -> usize,
) -> Result<OperationTable, AlgebraError> {
    let gens: Vec<Term> = generators.iter().map(|g| Term::var(g)).collect();
    let m = gens.len();
    if m == 0 {
        return Err(AlgebraError::EmptyCarrier);
    }
    for (i, g) in gens.iter().enumerate() {
        if r(g) != i {
            return Err(AlgebraError::NotRetraction(i));
        }
    }
    let mut bad = None;
    let table = OperationTable::from_fn(3, m, |a| {
        let nf = normalize(&Term::mu(gens[a[0]].clone(), gens[a[1]].clone(), gens[a[2]].clone()));
        let v = r(nf.term());
        if v >= m {
            bad.get_or_insert(v);
            0
        } else {
            v
        }
    });
    if let Some(value) = bad {
        return Err(AlgebraError::Range {
            symbol: MU.to_string(),
            index: 0,
            value,
            size: m,
        });
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bundled;

    #[test]
    fn loads_cyclic_group_document() {
        let alg = bundled::by_name("z2").unwrap();
        assert_eq!(alg.size(), 2);
        assert_eq!(alg.op("mul").unwrap().get(&[1, 1]), 0);
        let json = serde_json::to_string(&alg.to_document()).unwrap();
        assert_eq!(load_algebra(&json).unwrap(), alg);
    }

    #[test]
    fn load_errors_locate_problem() {
        let range = r#"{"name":"bad","size":2,"operations":[{"symbol":"f","arity":1,"table":[0,2]}]}"#;
        assert!(matches!(
            load_algebra(range),
            Err(AlgebraError::Range { index: 1, value: 2, .. })
        ));
        let short = r#"{"name":"bad","size":2,"operations":[{"symbol":"f","arity":2,"table":[0,1,1]}]}"#;
        assert!(matches!(
            load_algebra(short),
            Err(AlgebraError::SizeMismatch { expected: 4, found: 3, .. })
        ));
        let schema = r#"{"name":"bad","size":2}"#;
        assert!(matches!(load_algebra(schema), Err(AlgebraError::Schema(_))));
        let empty = r#"{"name":"bad","size":0,"operations":[]}"#;
        assert_eq!(load_algebra(empty), Err(AlgebraError::EmptyCarrier));
    }

    #[test]
    fn constants_use_single_entry_tables() {
        let doc = r#"{"name":"c","size":3,"operations":[{"symbol":"c","arity":0,"table":[2]}]}"#;
        let alg = load_algebra(doc).unwrap();
        assert_eq!(alg.op("c").unwrap().get(&[]), 2);
    }

    #[test]
    fn identity_checks() {
        let z3 = bundled::by_name("z3").unwrap();
        let comm = Identity::parse("mul(x,y) = mul(y,x)", z3.signature()).unwrap();
        assert_eq!(check_identity(&z3, &comm), Ok(IdentityCheck::Holds));

        let s3 = bundled::by_name("s3").unwrap();
        match check_identity(&s3, &comm).unwrap() {
            IdentityCheck::Counterexample(cx) => {
                let (x, y) = (cx[0].1, cx[1].1);
                let mul = s3.op("mul").unwrap();
                assert_ne!(mul.get(&[x, y]), mul.get(&[y, x]));
                // lexicographically first: no earlier pair fails
                for a in 0..6 {
                    for b in 0..6 {
                        if (a, b) < (x, y) {
                            assert_eq!(mul.get(&[a, b]), mul.get(&[b, a]));
                        }
                    }
                }
            }
            IdentityCheck::Holds => panic!("S3 is not abelian"),
        }

        let refl = Identity::parse("x = x", s3.signature()).unwrap();
        assert!(check_identity(&s3, &refl).unwrap().holds());
        let bad = Identity::parse("mu(x,x,x) = x", &Signature::maltsev()).unwrap();
        assert!(check_identity(&s3, &bad).is_err());
    }

    #[test]
    fn maltsev_operation_examples() {
        let z4 = bundled::by_name("z4").unwrap();
        let z4 = z4.with_operation("mu", maltsev_from_group(&z4).unwrap()).unwrap();
        assert_eq!(is_maltsev_operation(&z4, "mu"), Ok(true));
        assert_eq!(z4.op("mu").unwrap().get3(1, 3, 0), 2);

        let proj = OperationTable::from_fn(3, 3, |a| a[0]);
        assert!(!is_maltsev_table(&proj));

        let xor = OperationTable::from_fn(3, 2, |a| a[0] ^ a[1] ^ a[2]);
        assert!(is_maltsev_table(&xor));
        assert!(matches!(
            is_maltsev_operation(&z4, "mul"),
            Err(AlgebraError::Arity { expected: 3, found: 2, .. })
        ));
    }

    #[test]
    fn group_derivation() {
        let z2 = bundled::by_name("z2").unwrap();
        let xor = OperationTable::from_fn(3, 2, |a| a[0] ^ a[1] ^ a[2]);
        assert_eq!(maltsev_from_group(&z2).unwrap(), xor);
        let z3 = bundled::by_name("z3").unwrap();
        let sub = OperationTable::from_fn(3, 3, |a| (a[0] + 3 - a[1] + a[2]) % 3);
        assert_eq!(maltsev_from_group(&z3).unwrap(), sub);
        let z1 = bundled::by_name("z1").unwrap();
        assert_eq!(maltsev_from_group(&z1).unwrap().entries(), &[0]);
    }

    #[test]
    fn non_group_rejected() {
        let chain = bundled::by_name("chain3").unwrap();
        assert!(matches!(maltsev_from_group(&chain), Err(AlgebraError::MissingSymbol(_))));
        let loop5 = bundled::by_name("loop5").unwrap();
        let with_inv = loop5
            .with_operation("inv", OperationTable::from_fn(1, 5, |a| a[0]))
            .unwrap();
        assert!(matches!(
            maltsev_from_group(&with_inv),
            Err(AlgebraError::AxiomFailure { structure: "group", .. })
        ));
    }

    #[test]
    fn left_loop_derivation() {
        for name in ["z2", "z3", "z4", "s3"] {
            let g = bundled::by_name(name).unwrap();
            assert_eq!(maltsev_from_left_loop(&g).unwrap(), maltsev_from_group(&g).unwrap());
        }
        let z1 = bundled::by_name("z1").unwrap();
        assert_eq!(maltsev_from_left_loop(&z1).unwrap().entries(), &[0]);
        let loop5 = bundled::by_name("loop5").unwrap();
        assert!(is_maltsev_table(&maltsev_from_left_loop(&loop5).unwrap()));
    }

    #[test]
    fn order_five_loop_is_not_associative() {
        let loop5 = bundled::by_name("loop5").unwrap();
        let assoc = Identity::parse("mul(mul(x,y),z) = mul(x,mul(y,z))", loop5.signature()).unwrap();
        assert!(!check_identity(&loop5, &assoc).unwrap().holds());
    }

    #[test]
    fn quasigroup_derivation() {
        let q = bundled::by_name("z3sub").unwrap();
        let table = maltsev_from_quasigroup(&q).unwrap();
        assert!(is_maltsev_table(&table));
        let full = complete_quasigroup(&q).unwrap();
        // x*y = x - y, so y/x = y + x and x\y = x - y
        assert_eq!(full.op("rdiv").unwrap().get(&[1, 2]), 0);
        assert_eq!(full.op("ldiv").unwrap().get(&[1, 2]), 2);
        for name in ["z2", "z3", "s3"] {
            let g = bundled::by_name(name).unwrap();
            assert_eq!(maltsev_from_quasigroup(&g).unwrap(), maltsev_from_group(&g).unwrap());
        }
        assert_eq!(maltsev_from_quasigroup(&bundled::by_name("z1").unwrap()).unwrap().entries(), &[0]);
        let chain = bundled::by_name("chain3").unwrap();
        let chain = FiniteAlgebra::new(
            "chain",
            3,
            vec![("mul".into(), chain.op("meet").unwrap().clone())],
        )
        .unwrap();
        assert_eq!(maltsev_from_quasigroup(&chain), Err(AlgebraError::NotLatin("mul".into())));
    }

    #[test]
    fn retraction_derivation() {
        let keep_outer = |t: &Term| match t {
            Term::Var(v) if &**v == "x" => 0,
            Term::Var(_) => 1,
            Term::App(_, args) => usize::from(args[0] != Term::var("x")),
        };
        let table = maltsev_from_retraction(&["x", "y"], keep_outer).unwrap();
        assert!(is_maltsev_table(&table));

        let one = maltsev_from_retraction(&["x"], |_| 0).unwrap();
        assert_eq!(one.entries(), &[0]);

        // classes evaluated in Z2
        let parity = |t: &Term| {
            let a = [("x".to_string(), 0usize), ("y".to_string(), 1)].into_iter().collect();
            crate::homomorphism::eval_term(t, &a, |p, q, r| p ^ q ^ r).unwrap()
        };
        let xor = OperationTable::from_fn(3, 2, |a| a[0] ^ a[1] ^ a[2]);
        assert_eq!(maltsev_from_retraction(&["x", "y"], parity).unwrap(), xor);

        assert_eq!(
            maltsev_from_retraction(&["x", "y"], |_| 0),
            Err(AlgebraError::NotRetraction(1))
        );
    }

    #[test]
    fn product_is_componentwise() {
        let z2 = bundled::by_name("z2").unwrap();
        let z3 = bundled::by_name("z3").unwrap();
        let p = z2.product(&z3).unwrap();
        assert_eq!(p.size(), 6);
        // (1,2) + (1,2) = (0,1)
        assert_eq!(p.op("mul").unwrap().get(&[5, 5]), 1);
        assert!(maltsev_from_group(&p).is_ok());
    }
}
