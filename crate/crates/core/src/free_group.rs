//! Free groups as reduced words, and the free heap inside them.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("malformed letter `{0}`; expected `x` or `x^-1`")]
    BadLetter(String),
    #[error("`{0}` is not a heap word (odd length, signs alternating +,-,...,+)")]
    NotHeapWord(String),
}

/// A generator or its formal inverse.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: Arc<str>,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: &str) -> Self {
        Letter {
            generator: Arc::from(generator),
            inverse: false,
        }
    }

    pub fn inv(generator: &str) -> Self {
        Letter {
            generator: Arc::from(generator),
            inverse: true,
        }
    }

    pub fn inverted(&self) -> Self {
        Letter {
            generator: self.generator.clone(),
            inverse: !self.inverse,
        }
    }

    pub fn cancels(&self, other: &Letter) -> bool {
        self.generator == other.generator && self.inverse != other.inverse
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverse {
            write!(f, "{}^-1", self.generator)
        } else {
            f.write_str(&self.generator)
        }
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Letter {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (name, inverse) = match s.strip_suffix("^-1") {
            Some(n) => (n, true),
            None => (s, false),
        };
        let mut chars = name.chars();
        let ok = matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
            && chars.all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !ok {
            return Err(WordError::BadLetter(s.to_string()));
        }
        Ok(Letter {
            generator: Arc::from(name),
            inverse,
        })
    }
}

/// Parses whitespace-separated letters without reducing them.
pub fn parse_letters(s: &str) -> Result<Vec<Letter>, WordError> {
    s.split_whitespace().map(str::parse).collect()
}

/// An element of the free group: no adjacent pair `x x^-1` or `x^-1 x`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReducedWord(Vec<Letter>);

impl ReducedWord {
    pub fn identity() -> Self {
        ReducedWord(Vec::new())
    }

    pub fn generator(name: &str) -> Self {
        ReducedWord(vec![Letter::new(name)])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            f.write_str("e")
        } else {
            fmt::Display::fmt(self, f)
        }
    }
}

impl FromStr for ReducedWord {
    type Err = WordError;

    /// Parses and reduces.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(reduce(parse_letters(s)?))
    }
}

/// Free reduction in one left-to-right stack pass.
pub fn reduce<I: IntoIterator<Item = Letter>>(raw: I) -> ReducedWord {
    let mut stack: Vec<Letter> = Vec::new();
    for l in raw {
        if stack.last().is_some_and(|top| top.cancels(&l)) {
            stack.pop();
        } else {
            stack.push(l);
        }
    }
    ReducedWord(stack)
}

pub fn fg_mul(a: &ReducedWord, b: &ReducedWord) -> ReducedWord {
    // Only the seam between a and b can cancel.
    let common = a
        .0
        .iter()
        .rev()
        .zip(b.0.iter())
        .take_while(|(l, r)| l.cancels(r))
        .count();
    let mut out = Vec::with_capacity(a.len() + b.len() - 2 * common);
    out.extend_from_slice(&a.0[..a.len() - common]);
    out.extend_from_slice(&b.0[common..]);
    ReducedWord(out)
}

pub fn fg_inv(a: &ReducedWord) -> ReducedWord {
    ReducedWord(a.0.iter().rev().map(Letter::inverted).collect())
}

/// Membership in the length-`k` ball.
pub fn in_f_k(a: &ReducedWord, k: usize) -> bool {
    a.len() <= k
}

/// Odd length with signs `+,-,+,…,+`.
pub fn is_heap_word(a: &ReducedWord) -> bool {
    a.len() % 2 == 1 && a.0.iter().enumerate().all(|(i, l)| l.inverse == (i % 2 == 1))
}

/// An element of the free heap `x1 x2^-1 x3 ⋯ x2n^-1 x2n+1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HeapWord(ReducedWord);

impl HeapWord {
    pub fn generator(name: &str) -> Self {
        HeapWord(ReducedWord::generator(name))
    }

    pub fn word(&self) -> &ReducedWord {
        &self.0
    }

    pub fn into_word(self) -> ReducedWord {
        self.0
    }

    /// The stratum index `n` for a word of length `2n + 1`.
    pub fn stratum(&self) -> usize {
        self.0.len() / 2
    }
}

impl TryFrom<ReducedWord> for HeapWord {
    type Error = WordError;

    fn try_from(w: ReducedWord) -> Result<Self, Self::Error> {
        if is_heap_word(&w) {
            Ok(HeapWord(w))
        } else {
            Err(WordError::NotHeapWord(w.to_string()))
        }
    }
}

impl FromStr for HeapWord {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        HeapWord::try_from(s.parse::<ReducedWord>()?)
    }
}

impl fmt::Display for HeapWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for HeapWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// `a · b^-1 · c`, reduced.
pub fn word_mu(a: &ReducedWord, b: &ReducedWord, c: &ReducedWord) -> ReducedWord {
    fg_mul(&fg_mul(a, &fg_inv(b)), c)
}

/// The heap operation. Closure: the reduced product of three alternating
/// words of odd length is again alternating of odd length.
pub fn heap_mu(a: &HeapWord, b: &HeapWord, c: &HeapWord) -> HeapWord {
    let w = word_mu(&a.0, &b.0, &c.0);
    debug_assert!(is_heap_word(&w), "heap closure violated: {w}");
    HeapWord(w)
}

/// The group obtained from the heap by fixing a basepoint:
/// `u * v = mu(u, base, v)`, identity `base`, inverse `mu(base, u, base)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeapGroup {
    base: HeapWord,
}

pub fn heap_group_ops(base: HeapWord) -> HeapGroup {
    HeapGroup { base }
}

impl HeapGroup {
    pub fn identity(&self) -> &HeapWord {
        &self.base
    }

    pub fn mul(&self, u: &HeapWord, v: &HeapWord) -> HeapWord {
        heap_mu(u, &self.base, v)
    }

    pub fn inv(&self, u: &HeapWord) -> HeapWord {
        heap_mu(&self.base, u, &self.base)
    }
}

/// All reduced words of length at most `max_len` over `generators`, by
/// length and then lexicographically (`x` before `x^-1`, generators in the
/// given order).
pub fn enumerate_reduced(generators: &[&str], max_len: usize) -> Vec<ReducedWord> {
    let alphabet: Vec<Letter> = generators
        .iter()
        .flat_map(|g| [Letter::new(g), Letter::inv(g)])
        .collect();
    let mut out = vec![ReducedWord::identity()];
    let mut frontier = vec![ReducedWord::identity()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for l in &alphabet {
                if w.0.last().is_some_and(|t| t.cancels(l)) {
                    continue;
                }
                let mut v = w.0.clone();
                v.push(l.clone());
                next.push(ReducedWord(v));
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}
