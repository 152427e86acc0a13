//! Independent oracles shared by the integration suites. None of these call
//! into the library's own decision procedures.
#![allow(dead_code)]

use std::collections::BTreeSet;

use maltsev::algebra::FiniteAlgebra;
use maltsev::free_group::Letter;
use maltsev::Term;
use rand::Rng;

/// Rewrites the rightmost-outermost redex until none is left.
pub fn naive_normalize(t: &Term) -> Term {
    let mut cur = t.clone();
    while let Some(next) = step(&cur) {
        cur = next;
    }
    cur
}

fn step(t: &Term) -> Option<Term> {
    let args = t.args();
    if args.len() == 3 {
        if args[1] == args[2] {
            return Some(args[0].clone());
        }
        if args[0] == args[1] {
            return Some(args[2].clone());
        }
        for i in (0..3).rev() {
            if let Some(r) = step(&args[i]) {
                let mut v = args.to_vec();
                v[i] = r;
                return Some(Term::mu(v[0].clone(), v[1].clone(), v[2].clone()));
            }
        }
    }
    None
}

/// All `mu`-terms of depth at most `d`, built by plain recursion.
pub fn all_terms(vars: &[&str], d: usize) -> Vec<Term> {
    let mut terms: Vec<Term> = vars.iter().map(|v| Term::var(v)).collect();
    for _ in 0..d {
        let prev = terms.clone();
        terms = vars.iter().map(|v| Term::var(v)).collect();
        for a in &prev {
            for b in &prev {
                for c in &prev {
                    terms.push(Term::mu(a.clone(), b.clone(), c.clone()));
                }
            }
        }
    }
    terms
}

pub fn distinct_classes(terms: &[Term]) -> usize {
    terms.iter().map(naive_normalize).collect::<BTreeSet<_>>().len()
}

/// Free reduction deleting a randomly chosen cancelling pair each time.
pub fn reduce_random_order<R: Rng>(rng: &mut R, letters: &[Letter]) -> Vec<Letter> {
    let mut w = letters.to_vec();
    loop {
        let spots: Vec<usize> = (0..w.len().saturating_sub(1))
            .filter(|&i| w[i].generator == w[i + 1].generator && w[i].inverse != w[i + 1].inverse)
            .collect();
        if spots.is_empty() {
            return w;
        }
        let i = spots[rng.gen_range(0..spots.len())];
        w.drain(i..i + 2);
    }
}

/// Set partitions of `0..n` as restricted growth strings.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(i: usize, n: usize, cur: &mut Vec<usize>, max: usize, out: &mut Vec<Vec<usize>>) {
        if i == n {
            out.push(cur.clone());
            return;
        }
        for b in 0..=max + 1 {
            cur.push(b);
            go(i + 1, n, cur, max.max(b), out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        return vec![vec![]];
    }
    let mut cur = vec![0];
    go(1, n, &mut cur, 0, &mut out);
    out
}

pub fn tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..n).map(move |x| {
                    let mut t = t.clone();
                    t.push(x);
                    t
                })
            })
            .collect();
    }
    out
}

/// Whether the labelling is compatible with every operation, checked over all
/// pairs of related argument tuples.
pub fn compatible(alg: &FiniteAlgebra, labels: &[usize]) -> bool {
    let n = alg.size();
    alg.operations().all(|(_, table)| {
        let all = tuples(n, table.arity());
        all.iter().all(|a| {
            all.iter().all(|b| {
                !a.iter().zip(b).all(|(x, y)| labels[*x] == labels[*y])
                    || labels[table.get(a)] == labels[table.get(b)]
            })
        })
    })
}

/// The least compatible equivalence relating `a` and `b`, as a relation matrix.
pub fn brute_principal(alg: &FiniteAlgebra, a: usize, b: usize) -> Vec<Vec<bool>> {
    let n = alg.size();
    let mut rel = vec![vec![true; n]; n];
    for p in partitions(n) {
        if p[a] == p[b] && compatible(alg, &p) {
            for i in 0..n {
                for j in 0..n {
                    rel[i][j] &= p[i] == p[j];
                }
            }
        }
    }
    rel
}

pub fn brute_congruence_count(alg: &FiniteAlgebra) -> usize {
    partitions(alg.size()).iter().filter(|p| compatible(alg, p)).count()
}
