//! Homomorphisms out of the free Mal'tsev algebra: evaluation in an arbitrary
//! Mal'tsev carrier, the canonical map into the free group, and the
//! two-element separating homomorphism.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::free_group::{enumerate_reduced, is_heap_word, word_mu, ReducedWord};
use crate::rewrite::normalize;
use crate::term::{enumerate_levels, generator_names, Signature, Term, MU};

/// Terms deeper than this are rejected by evaluation.
pub const MAX_EVAL_DEPTH: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomError {
    #[error("variable `{0}` is not assigned")]
    Unassigned(String),
    #[error("symbol `{0}` is not the ternary mu")]
    ForeignSymbol(String),
    #[error("term depth {0} exceeds the evaluation limit {MAX_EVAL_DEPTH}")]
    TooDeep(usize),
    #[error("injectivity check supports at most 4 generators, got {0}")]
    BudgetExceeded(usize),
}

pub type Assignment<T> = BTreeMap<String, T>;

/// Interprets `mu` as `mu_impl` and variables through `a`.
pub fn eval_term<T, F>(t: &Term, a: &Assignment<T>, mu_impl: F) -> Result<T, HomError>
where
    T: Clone,
    F: Fn(&T, &T, &T) -> T,
{
    let depth = t.depth();
    if depth > MAX_EVAL_DEPTH {
        return Err(HomError::TooDeep(depth));
    }
    eval_rec(t, a, &mu_impl)
}

fn eval_rec<T: Clone, F: Fn(&T, &T, &T) -> T>(
    t: &Term,
    a: &Assignment<T>,
    mu_impl: &F,
) -> Result<T, HomError> {
    match t {
        Term::Var(v) => a.get(&**v).cloned().ok_or_else(|| HomError::Unassigned(v.to_string())),
        Term::App(f, args) if &**f == MU && args.len() == 3 => {
            let p = eval_rec(&args[0], a, mu_impl)?;
            let q = eval_rec(&args[1], a, mu_impl)?;
            let r = eval_rec(&args[2], a, mu_impl)?;
            Ok(mu_impl(&p, &q, &r))
        }
        Term::App(f, _) => Err(HomError::ForeignSymbol(f.to_string())),
    }
}

/// The canonical map into the free group, `mu(a,b,c) ↦ a · b^-1 · c`.
/// Variables missing from `gen_map` are an error; pass the identity map to
/// send each variable to the generator of the same name.
pub fn hom_to_group(t: &Term, gen_map: &BTreeMap<String, String>) -> Result<ReducedWord, HomError> {
    let a: Assignment<ReducedWord> = gen_map
        .iter()
        .map(|(v, g)| (v.clone(), ReducedWord::generator(g)))
        .collect();
    eval_term(t, &a, word_mu)
}

/// `hom_to_group` with every variable sent to the generator of the same name.
pub fn hom_to_group_identity(t: &Term) -> Result<ReducedWord, HomError> {
    let map = t
        .variables()
        .into_iter()
        .map(|v| (v.to_string(), v.to_string()))
        .collect();
    hom_to_group(t, &map)
}

/// Value of `t` in the two-element group `{0,1}` with `mu(p,q,r) = p ⊕ q ⊕ r`
/// under the indicator assignment of `witness`.
pub fn separating_hom(t: &Term, witness: &str) -> Result<u8, HomError> {
    let a: Assignment<u8> = t
        .variables()
        .into_iter()
        .map(|v| {
            let bit = u8::from(&*v == witness);
            (v.to_string(), bit)
        })
        .collect();
    eval_term(t, &a, |p, q, r| p ^ q ^ r)
}

/// Searches `Z_2` and then `Z_3`, both with `mu(p,q,r) = p - q + r`, for an
/// assignment of the variables of `t` and `s` on which they differ.
/// Returns the modulus and the assignment.
pub fn find_cyclic_separation(t: &Term, s: &Term) -> Option<(u32, Assignment<u32>)> {
    let mut vars = t.variables();
    for v in s.variables() {
        if !vars.contains(&v) {
            vars.push(v);
        }
    }
    for n in [2u32, 3] {
        let mu = |p: &u32, q: &u32, r: &u32| (p + n - q + r) % n;
        let mut values = vec![0usize; vars.len()];
        loop {
            let a: Assignment<u32> = vars
                .iter()
                .zip(&values)
                .map(|(v, &x)| (v.to_string(), x as u32))
                .collect();
            if eval_term(t, &a, mu).ok() != eval_term(s, &a, mu).ok() {
                return Some((n, a));
            }
            if !crate::term::next_tuple(&mut values, n as usize) {
                break;
            }
        }
    }
    None
}

/// Checks that the canonical map restricted to normal forms of depth at most
/// one is a bijection onto the heap words of length at most three.
pub fn check_injectivity_on_m1(m: usize) -> Result<bool, HomError> {
    if m > 4 {
        return Err(HomError::BudgetExceeded(m));
    }
    if m == 0 {
        return Ok(true);
    }
    let names = generator_names(m);
    let vars: Vec<&str> = names.iter().map(String::as_str).collect();
    let levels = enumerate_levels(&Signature::maltsev(), &vars, 1, usize::MAX)
        .expect("unbounded budget");
    let classes: BTreeSet<Term> = levels
        .iter()
        .flatten()
        .map(|t| normalize(t).into_term())
        .collect();
    let mut images = BTreeSet::new();
    for nf in &classes {
        let img = hom_to_group_identity(nf)?;
        if !images.insert(img) {
            return Ok(false);
        }
    }
    let g1: BTreeSet<ReducedWord> = enumerate_reduced(&vars, 3)
        .into_iter()
        .filter(is_heap_word)
        .collect();
    Ok(images == g1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::parse_term;

    fn p(s: &str) -> Term {
        parse_term(s, &Signature::maltsev()).unwrap()
    }

    fn group_mu(n: u32) -> impl Fn(&u32, &u32, &u32) -> u32 {
        move |p, q, r| (p + n - q + r) % n
    }

    #[test]
    fn eval_examples() {
        let a: Assignment<u32> = [("x", 1), ("y", 2), ("z", 0)]
            .into_iter()
            .map(|(k, v)| (k.to_string(), v))
            .collect();
        assert_eq!(eval_term(&p("mu(x,y,y)"), &a, group_mu(3)), Ok(1));
        let seven: Assignment<u32> = [("x".to_string(), 7)].into_iter().collect();
        assert_eq!(eval_term(&p("x"), &seven, group_mu(11)), Ok(7));
        assert_eq!(eval_term(&p("mu(x,y,z)"), &a, group_mu(3)), Ok(2));
    }

    #[test]
    fn eval_errors() {
        let a: Assignment<u32> = Assignment::new();
        assert_eq!(
            eval_term(&p("mu(x,y,z)"), &a, group_mu(2)),
            Err(HomError::Unassigned("x".into()))
        );
        let mut deep = p("x");
        for _ in 0..=MAX_EVAL_DEPTH {
            deep = Term::mu(deep, p("x"), p("y"));
        }
        let a: Assignment<u32> = [("x".to_string(), 0), ("y".to_string(), 1)].into_iter().collect();
        assert!(matches!(eval_term(&deep, &a, group_mu(2)), Err(HomError::TooDeep(_))));
    }

    #[test]
    fn group_image_examples() {
        let h = |s: &str| hom_to_group_identity(&p(s)).unwrap().to_string();
        assert_eq!(h("mu(x,y,z)"), "x y^-1 z");
        assert_eq!(h("mu(x,y,y)"), "x");
        assert_eq!(h("mu(mu(x,y,z),x,y)"), "x y^-1 z x^-1 y");
    }

    #[test]
    fn group_image_with_map() {
        let map: BTreeMap<String, String> = [("x", "a"), ("y", "a")]
            .into_iter()
            .map(|(k, v)| (k.to_string(), v.to_string()))
            .collect();
        assert_eq!(hom_to_group(&p("mu(x,y,x)"), &map).unwrap().to_string(), "a");
        assert_eq!(
            hom_to_group(&p("mu(x,y,z)"), &map),
            Err(HomError::Unassigned("z".into()))
        );
    }

    #[test]
    fn separation_examples() {
        assert_eq!(separating_hom(&p("x"), "x"), Ok(1));
        assert_eq!(separating_hom(&p("mu(x,y,y)"), "x"), Ok(1));
        assert_eq!(separating_hom(&p("mu(x,y,z)"), "y"), Ok(1));
        assert_eq!(separating_hom(&p("y"), "x"), Ok(0));
    }

    #[test]
    fn cyclic_separation() {
        assert!(find_cyclic_separation(&p("x"), &p("y")).is_some());
        assert!(find_cyclic_separation(&p("mu(x,y,y)"), &p("x")).is_none());
        // Affine operations over abelian groups cannot swap the outer arguments.
        assert!(find_cyclic_separation(&p("mu(x,y,z)"), &p("mu(z,y,x)")).is_none());
        let (n, _) = find_cyclic_separation(&p("mu(x,y,z)"), &p("mu(x,z,y)")).unwrap();
        assert_eq!(n, 3);
    }

    #[test]
    fn injectivity_on_first_stratum() {
        for m in 1..=3 {
            assert_eq!(check_injectivity_on_m1(m), Ok(true), "m = {m}");
        }
        assert_eq!(check_injectivity_on_m1(5), Err(HomError::BudgetExceeded(5)));
    }
}
