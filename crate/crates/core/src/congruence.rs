//! Partitions, congruences and the congruence lattice of a finite algebra.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::algebra::{FiniteAlgebra, OperationTable};
use crate::term::next_tuple;

/// Default carrier bound for [`all_congruences`].
pub const DEFAULT_LATTICE_LIMIT: usize = 8;
/// Carrier bound for exhaustive isomorphism search.
pub const ISOMORPHISM_LIMIT: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CongruenceError {
    #[error("partition covers {found} elements, algebra has {expected}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("malformed partition: {0}")]
    Parse(String),
    #[error("element {0} is outside the carrier")]
    OutOfRange(usize),
    #[error("partition is not compatible with `{symbol}` at {args:?}")]
    NotCompatible { symbol: String, args: Vec<usize> },
    #[error("map is not a homomorphism: `{symbol}` at {args:?}")]
    NotHomomorphism { symbol: String, args: Vec<usize> },
    #[error("algebras differ in signature at `{0}`")]
    SignatureMismatch(String),
    #[error("carrier of size {size} exceeds the limit {limit}")]
    BudgetExceeded { size: usize, limit: usize },
}

/// Block index per element, blocks numbered by least element.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    blocks: Vec<usize>,
}

impl Partition {
    /// Canonicalizes an arbitrary labelling.
    pub fn from_labels<T: Eq + std::hash::Hash + Clone>(labels: &[T]) -> Self {
        let mut seen: Vec<T> = Vec::new();
        let blocks = labels
            .iter()
            .map(|l| match seen.iter().position(|s| s == l) {
                Some(i) => i,
                None => {
                    seen.push(l.clone());
                    seen.len() - 1
                }
            })
            .collect();
        Partition { blocks }
    }

    pub fn identity(n: usize) -> Self {
        Partition {
            blocks: (0..n).collect(),
        }
    }

    pub fn total(n: usize) -> Self {
        Partition { blocks: vec![0; n] }
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn block_of(&self, x: usize) -> usize {
        self.blocks[x]
    }

    pub fn block_indices(&self) -> &[usize] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.iter().max().map_or(0, |m| m + 1)
    }

    pub fn related(&self, a: usize, b: usize) -> bool {
        self.blocks[a] == self.blocks[b]
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.num_blocks()];
        for (x, &b) in self.blocks.iter().enumerate() {
            out[b].push(x);
        }
        out
    }

    /// Least element of each block.
    pub fn representatives(&self) -> Vec<usize> {
        self.blocks().iter().map(|b| b[0]).collect()
    }

    pub fn join(&self, other: &Partition) -> Partition {
        let mut uf = UnionFind::new(self.len());
        for p in [self, other] {
            let reps = p.representatives();
            for (x, &b) in p.blocks.iter().enumerate() {
                uf.union(x, reps[b]);
            }
        }
        uf.partition()
    }

    pub fn meet(&self, other: &Partition) -> Partition {
        let labels: Vec<(usize, usize)> = self.blocks.iter().copied().zip(other.blocks.iter().copied()).collect();
        Partition::from_labels(&labels)
    }

    /// `self ⊆ other` as equivalence relations.
    pub fn refines(&self, other: &Partition) -> bool {
        (0..self.len()).all(|a| (0..self.len()).all(|b| !self.related(a, b) || other.related(a, b)))
    }

    pub fn relation(&self) -> BinaryRelation {
        let n = self.len();
        let mut r = BinaryRelation::empty(n);
        for a in 0..n {
            for b in 0..n {
                if self.related(a, b) {
                    r.insert(a, b);
                }
            }
        }
        r
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self
            .blocks()
            .iter()
            .map(|b| b.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        f.write_str(&blocks.join("|"))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({self})")
    }
}

impl FromStr for Partition {
    type Err = CongruenceError;

    /// Parses `0,2|1,3`. Every element `0..n` must occur exactly once.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut labels: Vec<Option<usize>> = Vec::new();
        for (bi, block) in s.split('|').enumerate() {
            for item in block.split(',') {
                let item = item.trim();
                let x: usize = item
                    .parse()
                    .map_err(|_| CongruenceError::Parse(format!("`{item}` is not an element")))?;
                if x >= labels.len() {
                    labels.resize(x + 1, None);
                }
                if labels[x].replace(bi).is_some() {
                    return Err(CongruenceError::Parse(format!("element {x} listed twice")));
                }
            }
        }
        if let Some(missing) = labels.iter().position(Option::is_none) {
            return Err(CongruenceError::Parse(format!("element {missing} missing")));
        }
        let labels: Vec<usize> = labels.into_iter().map(Option::unwrap).collect();
        Ok(Partition::from_labels(&labels))
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns `true` if two distinct classes were merged.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }

    pub(crate) fn partition(&mut self) -> Partition {
        let labels: Vec<usize> = (0..self.parent.len()).map(|x| self.find(x)).collect();
        Partition::from_labels(&labels)
    }
}

/// A set of ordered pairs over `{0..n-1}`, stored as a bit matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryRelation {
    n: usize,
    bits: Vec<bool>,
}

impl BinaryRelation {
    pub fn empty(n: usize) -> Self {
        BinaryRelation {
            n,
            bits: vec![false; n * n],
        }
    }

    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self, CongruenceError> {
        let mut r = BinaryRelation::empty(n);
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(CongruenceError::OutOfRange(a.max(b)));
            }
            r.insert(a, b);
        }
        Ok(r)
    }

    pub fn insert(&mut self, a: usize, b: usize) {
        self.bits[a * self.n + b] = true;
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.bits[a * self.n + b]
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|a| (0..self.n).map(move |b| (a, b)))
            .filter(|&(a, b)| self.contains(a, b))
            .collect()
    }
}

impl fmt::Debug for BinaryRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.pairs()).finish()
    }
}

/// `r ∘ s = {(a,c) : a r b and b s c for some b}`.
pub fn compose(r: &BinaryRelation, s: &BinaryRelation) -> BinaryRelation {
    assert_eq!(r.n, s.n, "relations over different carriers");
    let n = r.n;
    let mut out = BinaryRelation::empty(n);
    for a in 0..n {
        for b in 0..n {
            if r.contains(a, b) {
                for c in 0..n {
                    if s.contains(b, c) {
                        out.insert(a, c);
                    }
                }
            }
        }
    }
    out
}

/// A partition verified compatible with every operation of its algebra.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Congruence {
    partition: Partition,
}

impl Congruence {
    pub fn new(alg: &FiniteAlgebra, partition: Partition) -> Result<Self, CongruenceError> {
        match compatibility_violation(alg, &partition)? {
            None => Ok(Congruence { partition }),
            Some((symbol, args)) => Err(CongruenceError::NotCompatible { symbol, args }),
        }
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn relation(&self) -> BinaryRelation {
        self.partition.relation()
    }
}

impl fmt::Display for Congruence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.partition.fmt(f)
    }
}

impl fmt::Debug for Congruence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Congruence({})", self.partition)
    }
}

/// Calls `f(args, i)` for every argument tuple of `table` and every position
/// `i`; used to range over principal translations `c ↦ op(…, c, …)`.
fn for_each_translation_slot(table: &OperationTable, n: usize, mut f: impl FnMut(&mut [usize], usize) -> bool) -> bool {
    let k = table.arity();
    if k == 0 {
        return true;
    }
    let mut args = vec![0usize; k];
    loop {
        for i in 0..k {
            if !f(&mut args, i) {
                return false;
            }
        }
        if !next_tuple(&mut args, n) {
            return true;
        }
    }
}

/// First tuple witnessing incompatibility: `args` with position `i` replaced
/// by a related element gives an unrelated result.
fn compatibility_violation(
    alg: &FiniteAlgebra,
    p: &Partition,
) -> Result<Option<(String, Vec<usize>)>, CongruenceError> {
    let n = alg.size();
    if p.len() != n {
        return Err(CongruenceError::SizeMismatch {
            expected: n,
            found: p.len(),
        });
    }
    let reps = p.representatives();
    for (symbol, table) in alg.operations() {
        let mut bad = None;
        for_each_translation_slot(table, n, |args, i| {
            let c = args[i];
            let rep = reps[p.block_of(c)];
            if rep == c {
                return true;
            }
            let v = table.get(args);
            args[i] = rep;
            let w = table.get(args);
            args[i] = c;
            if p.related(v, w) {
                true
            } else {
                bad = Some(args.to_vec());
                false
            }
        });
        if let Some(args) = bad {
            return Ok(Some((symbol.to_string(), args)));
        }
    }
    Ok(None)
}

pub fn is_congruence(alg: &FiniteAlgebra, p: &Partition) -> Result<bool, CongruenceError> {
    Ok(compatibility_violation(alg, p)?.is_none())
}

/// Least congruence identifying `a` and `b`.
///
/// Every pair merged into the union-find is pushed through every principal
/// translation; the resulting images are merged in turn until nothing new is
/// identified. Compositions of translations are reached by the iteration.
pub fn principal_congruence(alg: &FiniteAlgebra, a: usize, b: usize) -> Result<Congruence, CongruenceError> {
    let n = alg.size();
    if a >= n || b >= n {
        return Err(CongruenceError::OutOfRange(a.max(b)));
    }
    Ok(generated_congruence(alg, &[(a, b)]))
}

fn generated_congruence(alg: &FiniteAlgebra, seeds: &[(usize, usize)]) -> Congruence {
    let n = alg.size();
    let mut uf = UnionFind::new(n);
    let mut work: Vec<(usize, usize)> = Vec::new();
    for &(a, b) in seeds {
        if uf.union(a, b) {
            work.push((a, b));
        }
    }
    while let Some((c, d)) = work.pop() {
        for table in alg.tables() {
            for_each_translation_slot(table, n, |args, i| {
                let saved = args[i];
                args[i] = c;
                let u = table.get(args);
                args[i] = d;
                let v = table.get(args);
                args[i] = saved;
                if uf.union(u, v) {
                    work.push((u, v));
                }
                true
            });
        }
    }
    Congruence {
        partition: uf.partition(),
    }
}

/// Join in the congruence lattice: transitive closure of the union.
pub fn join(alg: &FiniteAlgebra, a: &Congruence, b: &Congruence) -> Congruence {
    let p = a.partition.join(&b.partition);
    debug_assert!(is_congruence(alg, &p).unwrap_or(false));
    Congruence { partition: p }
}

pub fn meet(a: &Congruence, b: &Congruence) -> Congruence {
    Congruence {
        partition: a.partition.meet(&b.partition),
    }
}

/// Every congruence, ordered by decreasing number of blocks and then by the
/// canonical block vector.
pub fn all_congruences(alg: &FiniteAlgebra, limit: usize) -> Result<Vec<Congruence>, CongruenceError> {
    let n = alg.size();
    if n > limit {
        return Err(CongruenceError::BudgetExceeded { size: n, limit });
    }
    let mut principals: BTreeSet<Congruence> = BTreeSet::new();
    for a in 0..n {
        for b in a + 1..n {
            principals.insert(generated_congruence(alg, &[(a, b)]));
        }
    }
    let principals: Vec<Congruence> = principals.into_iter().collect();
    let mut seen: HashSet<Congruence> = HashSet::new();
    seen.insert(Congruence {
        partition: Partition::identity(n),
    });
    let mut work: Vec<Congruence> = Vec::new();
    for c in &principals {
        if seen.insert(c.clone()) {
            work.push(c.clone());
        }
    }
    while let Some(c) = work.pop() {
        for p in &principals {
            let j = join(alg, &c, p);
            if seen.insert(j.clone()) {
                work.push(j);
            }
        }
    }
    let mut out: Vec<Congruence> = seen.into_iter().collect();
    out.sort_by(|x, y| {
        y.partition
            .num_blocks()
            .cmp(&x.partition.num_blocks())
            .then_with(|| x.partition.cmp(&y.partition))
    });
    Ok(out)
}

pub fn permute(theta: &Congruence, phi: &Congruence) -> bool {
    let (t, f) = (theta.relation(), phi.relation());
    compose(&t, &f) == compose(&f, &t)
}

/// First pair of congruences that fails to permute, if any.
pub fn permutability_violation(congruences: &[Congruence]) -> Option<(Congruence, Congruence)> {
    for (i, a) in congruences.iter().enumerate() {
        for b in &congruences[i + 1..] {
            if !permute(a, b) {
                return Some((a.clone(), b.clone()));
            }
        }
    }
    None
}

/// `alg / theta`, with blocks as elements in canonical order.
pub fn quotient(alg: &FiniteAlgebra, theta: &Congruence) -> FiniteAlgebra {
    quotient_with_representatives(alg, theta, &theta.partition.representatives())
}

/// Quotient tables computed through the given representative of each block
/// (indexed by block). Any choice yields the same algebra.
pub fn quotient_with_representatives(alg: &FiniteAlgebra, theta: &Congruence, reps: &[usize]) -> FiniteAlgebra {
    let p = &theta.partition;
    let m = p.num_blocks();
    assert_eq!(reps.len(), m, "one representative per block");
    debug_assert!(reps.iter().enumerate().all(|(b, &r)| p.block_of(r) == b));
    let ops = alg
        .operations()
        .map(|(symbol, table)| {
            let induced = OperationTable::from_fn(table.arity(), m, |blocks| {
                let args: Vec<usize> = blocks.iter().map(|&b| reps[b]).collect();
                p.block_of(table.get(&args))
            });
            (symbol.to_string(), induced)
        })
        .collect();
    FiniteAlgebra::new(&format!("{}/[{}]", alg.name, p), m, ops).expect("quotient of a valid algebra")
}

fn same_signature(a: &FiniteAlgebra, b: &FiniteAlgebra) -> Result<(), CongruenceError> {
    for (symbol, arity) in a.signature().symbols() {
        if b.signature().arity(symbol) != Some(arity) {
            return Err(CongruenceError::SignatureMismatch(symbol.to_string()));
        }
    }
    if a.signature().len() != b.signature().len() {
        let extra = b
            .signature()
            .symbols()
            .find(|(s, _)| !a.signature().contains(s))
            .map(|(s, _)| s.to_string())
            .unwrap_or_default();
        return Err(CongruenceError::SignatureMismatch(extra));
    }
    Ok(())
}

/// First tuple where `f` fails to commute with an operation.
pub fn homomorphism_violation(
    src: &FiniteAlgebra,
    dst: &FiniteAlgebra,
    f: &[usize],
) -> Result<Option<(String, Vec<usize>)>, CongruenceError> {
    same_signature(src, dst)?;
    if f.len() != src.size() {
        return Err(CongruenceError::SizeMismatch {
            expected: src.size(),
            found: f.len(),
        });
    }
    if let Some(&bad) = f.iter().find(|&&y| y >= dst.size()) {
        return Err(CongruenceError::OutOfRange(bad));
    }
    for (symbol, table) in src.operations() {
        let target = dst.op(symbol).expect("signatures agree");
        let mut args = vec![0usize; table.arity()];
        loop {
            let image: Vec<usize> = args.iter().map(|&a| f[a]).collect();
            if f[table.get(&args)] != target.get(&image) {
                return Ok(Some((symbol.to_string(), args)));
            }
            if !next_tuple(&mut args, src.size()) {
                break;
            }
        }
    }
    Ok(None)
}

pub fn kernel(src: &FiniteAlgebra, dst: &FiniteAlgebra, f: &[usize]) -> Result<Congruence, CongruenceError> {
    if let Some((symbol, args)) = homomorphism_violation(src, dst, f)? {
        return Err(CongruenceError::NotHomomorphism { symbol, args });
    }
    Ok(Congruence {
        partition: Partition::from_labels(f),
    })
}

/// Exhaustive isomorphism search between algebras of equal signature.
pub fn find_isomorphism(a: &FiniteAlgebra, b: &FiniteAlgebra, limit: usize) -> Result<Option<Vec<usize>>, CongruenceError> {
    same_signature(a, b)?;
    if a.size() > limit {
        return Err(CongruenceError::BudgetExceeded { size: a.size(), limit });
    }
    if a.size() != b.size() {
        return Ok(None);
    }
    let n = a.size();
    let mut map = Vec::with_capacity(n);
    let mut used = vec![false; n];
    Ok(extend_isomorphism(a, b, &mut map, &mut used).then_some(map))
}

fn extend_isomorphism(a: &FiniteAlgebra, b: &FiniteAlgebra, map: &mut Vec<usize>, used: &mut [bool]) -> bool {
    let n = a.size();
    if map.len() == n {
        return matches!(homomorphism_violation(a, b, map), Ok(None));
    }
    for y in 0..n {
        if used[y] {
            continue;
        }
        used[y] = true;
        map.push(y);
        if partial_consistent(a, b, map) && extend_isomorphism(a, b, map, used) {
            return true;
        }
        map.pop();
        used[y] = false;
    }
    false
}

/// Checks the homomorphism condition on tuples entirely inside the mapped
/// prefix whose result is also mapped.
fn partial_consistent(a: &FiniteAlgebra, b: &FiniteAlgebra, map: &[usize]) -> bool {
    let k = map.len();
    for (symbol, table) in a.operations() {
        let target = b.op(symbol).expect("signatures agree");
        let mut args = vec![0usize; table.arity()];
        loop {
            let v = table.get(&args);
            if v < k {
                let image: Vec<usize> = args.iter().map(|&x| map[x]).collect();
                if map[v] != target.get(&image) {
                    return false;
                }
            }
            if !next_tuple(&mut args, k) {
                break;
            }
        }
    }
    true
}

/// `src / ker f ≅ dst` for a surjective homomorphism `f`.
pub fn first_iso_check(src: &FiniteAlgebra, dst: &FiniteAlgebra, f: &[usize]) -> Result<bool, CongruenceError> {
    let ker = kernel(src, dst, f)?;
    let q = quotient(src, &ker);
    Ok(find_isomorphism(&q, dst, ISOMORPHISM_LIMIT)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bundled;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn partition_syntax() {
        let p = part("1,3|0,2");
        assert_eq!(p.block_indices(), &[0, 1, 0, 1]);
        assert_eq!(p.to_string(), "0,2|1,3");
        assert!("0,1|1".parse::<Partition>().is_err());
        assert!("0,2".parse::<Partition>().is_err());
        assert!("0,a".parse::<Partition>().is_err());
    }

    #[test]
    fn congruence_examples() {
        let z4 = bundled::by_name("z4").unwrap();
        assert!(is_congruence(&z4, &Partition::identity(4)).unwrap());
        assert!(is_congruence(&z4, &Partition::total(4)).unwrap());
        assert!(is_congruence(&z4, &part("0,2|1,3")).unwrap());
        assert!(!is_congruence(&z4, &part("0,1|2,3")).unwrap());
        assert!(matches!(
            Congruence::new(&z4, part("0,1|2,3")),
            Err(CongruenceError::NotCompatible { .. })
        ));
        assert!(matches!(
            is_congruence(&z4, &part("0,1|2")),
            Err(CongruenceError::SizeMismatch { .. })
        ));
    }

    #[test]
    fn principal_examples() {
        let z4 = bundled::by_name("z4").unwrap();
        assert_eq!(principal_congruence(&z4, 1, 1).unwrap().partition(), &Partition::identity(4));
        assert_eq!(principal_congruence(&z4, 0, 2).unwrap().partition(), &part("0,2|1,3"));
        let chain = bundled::by_name("chain3").unwrap();
        assert_eq!(principal_congruence(&chain, 0, 1).unwrap().partition(), &part("0,1|2"));
        assert!(principal_congruence(&chain, 0, 3).is_err());
    }

    #[test]
    fn lattice_sizes() {
        let count = |name: &str| all_congruences(&bundled::by_name(name).unwrap(), 8).unwrap().len();
        assert_eq!(count("z4"), 3);
        assert_eq!(count("z3"), 2);
        assert_eq!(count("z1"), 1);
        assert_eq!(count("z6"), 4);
        assert_eq!(count("s3"), 3);
        // every equivalence on the chain whose blocks are intervals
        assert_eq!(count("chain3"), 4);
        let z4 = bundled::by_name("z4").unwrap();
        let all = all_congruences(&z4, 8).unwrap();
        assert_eq!(all[0].partition(), &Partition::identity(4));
        assert_eq!(all[2].partition(), &Partition::total(4));
        assert!(matches!(
            all_congruences(&z4, 3),
            Err(CongruenceError::BudgetExceeded { size: 4, limit: 3 })
        ));
    }

    #[test]
    fn composition_and_permutability() {
        let z4 = bundled::by_name("z4").unwrap();
        let all = all_congruences(&z4, 8).unwrap();
        let theta = &all[1];
        let id = &all[0];
        assert_eq!(compose(&theta.relation(), &id.relation()), theta.relation());
        assert!(permutability_violation(&all).is_none());

        let chain = bundled::by_name("chain3").unwrap();
        let t1 = Congruence::new(&chain, part("0,1|2")).unwrap();
        let t2 = Congruence::new(&chain, part("0|1,2")).unwrap();
        assert!(!permute(&t1, &t2));
        assert!(compose(&t1.relation(), &t2.relation()).contains(0, 2));
        assert!(!compose(&t2.relation(), &t1.relation()).contains(0, 2));
    }

    #[test]
    fn quotient_examples() {
        let z4 = bundled::by_name("z4").unwrap();
        let z2 = bundled::by_name("z2").unwrap();
        let theta = Congruence::new(&z4, part("0,2|1,3")).unwrap();
        let q = quotient(&z4, &theta);
        assert_eq!(find_isomorphism(&q, &z2, 6).unwrap(), Some(vec![0, 1]));
        let id = Congruence::new(&z4, Partition::identity(4)).unwrap();
        assert!(find_isomorphism(&quotient(&z4, &id), &z4, 6).unwrap().is_some());
        let total = Congruence::new(&z4, Partition::total(4)).unwrap();
        assert_eq!(quotient(&z4, &total).size(), 1);
        let alt = quotient_with_representatives(&z4, &theta, &[2, 3]);
        assert_eq!(alt.tables(), q.tables());
    }

    #[test]
    fn kernel_examples() {
        let z4 = bundled::by_name("z4").unwrap();
        let z2 = bundled::by_name("z2").unwrap();
        let z1 = bundled::by_name("z1").unwrap();
        assert_eq!(kernel(&z4, &z2, &[0, 1, 0, 1]).unwrap().partition(), &part("0,2|1,3"));
        assert_eq!(kernel(&z4, &z4, &[0, 1, 2, 3]).unwrap().partition(), &Partition::identity(4));
        assert_eq!(kernel(&z4, &z1, &[0, 0, 0, 0]).unwrap().partition(), &Partition::total(4));
        assert!(matches!(
            kernel(&z4, &z2, &[0, 1, 1, 0]),
            Err(CongruenceError::NotHomomorphism { .. })
        ));
        let chain = bundled::by_name("chain3").unwrap();
        assert!(matches!(
            kernel(&z4, &chain, &[0, 0, 0, 0]),
            Err(CongruenceError::SignatureMismatch(_))
        ));
    }

    #[test]
    fn first_isomorphism_examples() {
        let z4 = bundled::by_name("z4").unwrap();
        let z2 = bundled::by_name("z2").unwrap();
        let z6 = bundled::by_name("z6").unwrap();
        let z3 = bundled::by_name("z3").unwrap();
        assert_eq!(first_iso_check(&z4, &z2, &[0, 1, 0, 1]), Ok(true));
        assert_eq!(first_iso_check(&z4, &z4, &[0, 1, 2, 3]), Ok(true));
        assert_eq!(first_iso_check(&z6, &z3, &[0, 1, 2, 0, 1, 2]), Ok(true));
    }

    #[test]
    fn lattice_closed_under_meet_and_join() {
        for alg in bundled::all() {
            if alg.size() > 6 {
                continue;
            }
            let all = all_congruences(&alg, 8).unwrap();
            let set: HashSet<&Congruence> = all.iter().collect();
            for a in &all {
                for b in &all {
                    assert!(set.contains(&join(&alg, a, b)));
                    assert!(set.contains(&meet(a, b)));
                }
            }
        }
    }
}
