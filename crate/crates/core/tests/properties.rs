mod common;

use maltsev::algebra::{check_identity, FiniteAlgebra, Identity, IdentityCheck, OperationTable};
use maltsev::bundled;
use maltsev::congruence::{self, Partition};
use maltsev::free_group::{self, enumerate_reduced, Letter, ReducedWord};
use maltsev::homomorphism::{eval_term, Assignment};
use maltsev::rewrite::{self, RewriteSystem, Strategy as RewriteStrategy};
use maltsev::search::{self, SearchOutcome};
use maltsev::term::{parse_term, Signature};
use maltsev::Term;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;

fn term_strategy() -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![Just("x"), Just("y"), Just("z")].prop_map(Term::var);
    leaf.prop_recursive(5, 120, 3, |inner| {
        (inner.clone(), inner.clone(), inner).prop_map(|(a, b, c)| Term::mu(a, b, c))
    })
}

fn letters_strategy() -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec(
        (prop_oneof![Just("x"), Just("y")], any::<bool>())
            .prop_map(|(g, inv)| if inv { Letter::inv(g) } else { Letter::new(g) }),
        0..14,
    )
}

proptest! {
    #[test]
    fn normal_forms_are_normal_and_stable(t in term_strategy()) {
        let nf = rewrite::normalize(&t);
        prop_assert!(rewrite::is_normal(nf.term()));
        prop_assert_eq!(rewrite::normalize(nf.term()), nf.clone());
        prop_assert_eq!(nf.term(), &naive_normalize(&t));
        prop_assert!(nf.term().size() <= t.size());
    }

    #[test]
    fn strategies_agree(t in term_strategy()) {
        let rs = RewriteSystem::maltsev();
        prop_assert_eq!(
            rs.normalize_with(&t, RewriteStrategy::LeftmostInnermost),
            rs.normalize_with(&t, RewriteStrategy::LeftmostOutermost)
        );
    }

    #[test]
    fn printing_round_trips(t in term_strategy()) {
        prop_assert_eq!(parse_term(&t.to_string(), &Signature::maltsev()).unwrap(), t);
    }

    #[test]
    fn reduction_is_order_independent(raw in letters_strategy(), seed in any::<u64>()) {
        let w = free_group::reduce(raw.clone());
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        prop_assert_eq!(reduce_random_order(&mut rng, &raw), w.letters().to_vec());
    }

    #[test]
    fn free_group_axioms(a in letters_strategy(), b in letters_strategy(), c in letters_strategy()) {
        let (a, b, c) = (free_group::reduce(a), free_group::reduce(b), free_group::reduce(c));
        let e = ReducedWord::identity();
        prop_assert_eq!(free_group::fg_mul(&free_group::fg_mul(&a, &b), &c), free_group::fg_mul(&a, &free_group::fg_mul(&b, &c)));
        prop_assert_eq!(free_group::fg_mul(&a, &free_group::fg_inv(&a)), e.clone());
        prop_assert_eq!(free_group::fg_mul(&e, &a), a);
    }

    #[test]
    fn homomorphism_respects_normalization(t in term_strategy(), vals in prop::collection::vec(0usize..5, 3)) {
        let l = bundled::by_name("loop5").unwrap();
        let mu = maltsev::algebra::maltsev_from_left_loop(&l).unwrap();
        let a: Assignment<usize> = ["x", "y", "z"].iter().zip(&vals).map(|(v, &x)| (v.to_string(), x)).collect();
        let f = |p: &usize, q: &usize, r: &usize| mu.get(&[*p, *q, *r]);
        prop_assert_eq!(eval_term(&t, &a, f), eval_term(rewrite::normalize(&t).term(), &a, f));
    }
}

/// Closure of the generators under `a b^-1 c` within words of bounded length,
/// compared with the alternating-sign characterization.
#[test]
fn heap_membership_matches_closure() {
    let bound = 7;
    let gens = ["x", "y"];
    let mut closure: std::collections::BTreeSet<ReducedWord> =
        gens.iter().map(|g| ReducedWord::generator(g)).collect();
    loop {
        let current: Vec<ReducedWord> = closure.iter().cloned().collect();
        let mut grew = false;
        for a in &current {
            for b in &current {
                for c in &current {
                    let w = free_group::word_mu(a, b, c);
                    if w.len() <= bound && closure.insert(w) {
                        grew = true;
                    }
                }
            }
        }
        if !grew {
            break;
        }
    }
    for w in enumerate_reduced(&gens, bound) {
        assert_eq!(free_group::is_heap_word(&w), closure.contains(&w), "{w}");
    }
}

#[test]
fn principal_congruences_match_oracle_on_random_algebras() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for round in 0..40 {
        let n = rng.gen_range(2..=4);
        let entries: Vec<usize> = (0..n * n).map(|_| rng.gen_range(0..n)).collect();
        let un: Vec<usize> = (0..n).map(|_| rng.gen_range(0..n)).collect();
        let alg = FiniteAlgebra::new(
            &format!("random{round}"),
            n,
            vec![
                ("f".into(), OperationTable::new("f", 2, n, entries).unwrap()),
                ("g".into(), OperationTable::new("g", 1, n, un).unwrap()),
            ],
        )
        .unwrap();
        for a in 0..n {
            for b in 0..n {
                let got = congruence::principal_congruence(&alg, a, b).unwrap();
                let want = brute_principal(&alg, a, b);
                for (i, row) in want.iter().enumerate() {
                    for (j, &rel) in row.iter().enumerate() {
                        assert_eq!(got.partition().related(i, j), rel, "{round}: Cg({a},{b})");
                    }
                }
            }
        }
        let all = congruence::all_congruences(&alg, 8).unwrap();
        assert_eq!(all.len(), brute_congruence_count(&alg), "{round}");
    }
}

fn naive_identity(alg: &FiniteAlgebra, lhs: &Term, rhs: &Term) -> bool {
    let vars = ["x", "y", "z"];
    tuples(alg.size(), 3).iter().all(|vals| {
        let ev = |t: &Term| naive_eval(alg, t, &vars, vals);
        ev(lhs) == ev(rhs)
    })
}

fn naive_eval(alg: &FiniteAlgebra, t: &Term, vars: &[&str], vals: &[usize]) -> usize {
    match t {
        Term::Var(v) => vals[vars.iter().position(|x| **x == **v).unwrap()],
        Term::App(f, args) => {
            let a: Vec<usize> = args.iter().map(|s| naive_eval(alg, s, vars, vals)).collect();
            alg.op(f).unwrap().get(&a)
        }
    }
}

#[test]
fn check_identity_matches_naive_evaluation() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let sig = Signature::new(&[("m", 2)]).unwrap();
    let identities = ["m(x,y)=m(y,x)", "m(m(x,y),z)=m(x,m(y,z))", "m(x,x)=x", "m(x,m(x,y))=y", "m(m(x,y),y)=x"];
    let mut holds = 0;
    for round in 0..20 {
        let n = rng.gen_range(1..=3);
        let entries: Vec<usize> = (0..n * n).map(|_| rng.gen_range(0..n)).collect();
        let alg = FiniteAlgebra::new(
            &format!("magma{round}"),
            n,
            vec![("m".into(), OperationTable::new("m", 2, n, entries).unwrap())],
        )
        .unwrap();
        for text in identities {
            let id = Identity::parse(text, &sig).unwrap();
            let (l, r) = text.split_once('=').unwrap();
            let (l, r) = (parse_term(l, &sig).unwrap(), parse_term(r, &sig).unwrap());
            let expected = naive_identity(&alg, &l, &r);
            let got = check_identity(&alg, &id).unwrap();
            assert_eq!(got.holds(), expected, "{round}: {text}");
            holds += usize::from(expected);
            if let IdentityCheck::Counterexample(cx) = got {
                let vals: Vec<usize> = ["x", "y", "z"]
                    .iter()
                    .map(|v| cx.iter().find(|(n, _)| n == v).map_or(0, |(_, x)| *x))
                    .collect();
                assert_ne!(naive_eval(&alg, &l, &["x", "y", "z"], &vals), naive_eval(&alg, &r, &["x", "y", "z"], &vals));
            }
        }
    }
    assert!(holds > 0 && holds < 100);
}

#[test]
fn search_decision_is_independent_of_operation_order() {
    for name in ["z3", "s3", "chain3", "loop5"] {
        let alg = bundled::by_name(name).unwrap();
        let mut ops: Vec<(String, OperationTable)> =
            alg.operations().map(|(s, t)| (s.to_string(), t.clone())).collect();
        ops.reverse();
        let reversed = FiniteAlgebra::new(name, alg.size(), ops).unwrap();
        let a = search::find_maltsev_term(&alg, 1_000_000);
        let b = search::find_maltsev_term(&reversed, 1_000_000);
        let found = |o: &SearchOutcome| matches!(o, SearchOutcome::Found { verified: true, .. });
        assert_eq!(found(&a.outcome), found(&b.outcome), "{name}");
        if a.outcome == SearchOutcome::NoTerm {
            assert_eq!(a.explored, b.explored, "{name}");
        }
    }
}

#[test]
fn quotients_by_congruences_are_homomorphic_images() {
    for alg in bundled::all().into_iter().filter(|a| a.size() <= 6) {
        for theta in congruence::all_congruences(&alg, 8).unwrap() {
            let q = congruence::quotient(&alg, &theta);
            assert_eq!(q.size(), theta.partition().num_blocks());
            let proj: Vec<usize> = (0..alg.size()).map(|x| theta.partition().block_of(x)).collect();
            assert_eq!(congruence::first_iso_check(&alg, &q, &proj), Ok(true), "{} / {theta}", alg.name);
        }
        assert!(congruence::Congruence::new(&alg, Partition::total(alg.size())).is_ok());
    }
}
