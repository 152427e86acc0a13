//! Seeded generators for random terms, words, and axiom walks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::free_group::{reduce, HeapWord, Letter, ReducedWord};
use crate::term::Term;

/// A random `mu`-term of depth at most `max_depth`. Each node below the depth
/// bound is a leaf with probability `leaf_prob`.
pub fn random_term<R: Rng + ?Sized>(rng: &mut R, vars: &[&str], max_depth: usize, leaf_prob: f64) -> Term {
    if max_depth == 0 || rng.gen_bool(leaf_prob) {
        return Term::var(vars.choose(rng).expect("at least one variable"));
    }
    Term::mu(
        random_term(rng, vars, max_depth - 1, leaf_prob),
        random_term(rng, vars, max_depth - 1, leaf_prob),
        random_term(rng, vars, max_depth - 1, leaf_prob),
    )
}

/// Applies the Mal'tsev identities `steps` times at random positions, each
/// step either contracting a redex or expanding a subterm `s` to
/// `mu(s,r,r)` or `mu(r,r,s)` for a random `r`.
pub fn axiom_walk<R: Rng + ?Sized>(rng: &mut R, t: &Term, vars: &[&str], steps: usize) -> Term {
    let mut cur = t.clone();
    for _ in 0..steps {
        let positions = cur.positions();
        let redexes: Vec<&Vec<usize>> = positions
            .iter()
            .filter(|p| {
                let s = cur.at(p).expect("valid position");
                let a = s.args();
                a.len() == 3 && (a[1] == a[2] || a[0] == a[1])
            })
            .collect();
        if !redexes.is_empty() && rng.gen_bool(0.5) {
            let p = (*redexes.choose(rng).unwrap()).clone();
            let s = cur.at(&p).unwrap();
            let a = s.args();
            let mut options = Vec::new();
            if a[1] == a[2] {
                options.push(a[0].clone());
            }
            if a[0] == a[1] {
                options.push(a[2].clone());
            }
            let replacement = options.choose(rng).unwrap().clone();
            cur = cur.replace_at(&p, replacement);
        } else {
            let p = positions.choose(rng).unwrap().clone();
            let s = cur.at(&p).unwrap().clone();
            let r = random_term(rng, vars, 2, 0.5);
            let expanded = if rng.gen_bool(0.5) {
                Term::mu(s, r.clone(), r)
            } else {
                Term::mu(r.clone(), r, s)
            };
            cur = cur.replace_at(&p, expanded);
        }
    }
    cur
}

pub fn random_letters<R: Rng + ?Sized>(rng: &mut R, generators: &[&str], len: usize) -> Vec<Letter> {
    (0..len)
        .map(|_| {
            let g = generators.choose(rng).unwrap();
            if rng.gen_bool(0.5) {
                Letter::inv(g)
            } else {
                Letter::new(g)
            }
        })
        .collect()
}

pub fn random_word<R: Rng + ?Sized>(rng: &mut R, generators: &[&str], max_len: usize) -> ReducedWord {
    let len = rng.gen_range(0..=max_len);
    reduce(random_letters(rng, generators, len))
}

/// A random heap word built from `2k + 1` random generators.
pub fn random_heap_word<R: Rng + ?Sized>(rng: &mut R, generators: &[&str], max_stratum: usize) -> HeapWord {
    let k = rng.gen_range(0..=max_stratum);
    let letters: Vec<Letter> = (0..2 * k + 1)
        .map(|i| {
            let g = generators.choose(rng).unwrap();
            if i % 2 == 1 {
                Letter::inv(g)
            } else {
                Letter::new(g)
            }
        })
        .collect();
    HeapWord::try_from(reduce(letters)).expect("alternating product of generators")
}
