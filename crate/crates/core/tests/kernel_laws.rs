mod common;

use peano_core::kernel::{
    check_proof, discover, is_instance, recognize_scheme, Justification, Proof, ProofLine, SchemeId, Theory,
};
use peano_core::syntax::{is_free_for, substitute, Term, VarIndex, Wff};
use proptest::prelude::*;

fn k1(a: &Wff, b: &Wff) -> Wff {
    Wff::implies(a.clone(), Wff::implies(b.clone(), a.clone()))
}

fn k2(a: &Wff, b: &Wff, c: &Wff) -> Wff {
    Wff::implies(
        Wff::implies(a.clone(), Wff::implies(b.clone(), c.clone())),
        Wff::implies(Wff::implies(a.clone(), b.clone()), Wff::implies(a.clone(), c.clone())),
    )
}

fn k3(a: &Wff, b: &Wff) -> Wff {
    Wff::implies(Wff::implies(Wff::not(a.clone()), Wff::not(b.clone())), Wff::implies(b.clone(), a.clone()))
}

fn k6(x: VarIndex, a: &Wff, b: &Wff) -> Wff {
    Wff::implies(Wff::forall(x, Wff::implies(a.clone(), b.clone())), Wff::implies(a.clone(), Wff::forall(x, b.clone())))
}

/// Replaces free occurrences of `x` without checking for capture.
fn naive_subst(w: &Wff, x: VarIndex, t: &Term) -> Wff {
    match w {
        Wff::Atom(p, args) => Wff::Atom(*p, args.iter().map(|a| a.replace_var(x, t)).collect()),
        Wff::Not(a) => Wff::not(naive_subst(a, x, t)),
        Wff::Implies(a, b) => Wff::implies(naive_subst(a, x, t), naive_subst(b, x, t)),
        Wff::ForAll(v, _) if *v == x => w.clone(),
        Wff::ForAll(v, b) => Wff::forall(*v, naive_subst(b, x, t)),
    }
}

fn induction(a: &Wff) -> Wff {
    let base = substitute(a, 1, &Term::zero()).unwrap();
    let step = substitute(a, 1, &Term::succ(Term::Var(1))).unwrap();
    Wff::implies(base, Wff::implies(Wff::forall(1, Wff::implies(a.clone(), step)), Wff::forall(1, a.clone())))
}

fn line(wff: Wff, justification: Justification) -> ProofLine {
    ProofLine { wff, justification }
}

/// Axiom instances followed by one layer of modus ponens: for each pair
/// `A`, `A → (B → A)` the conclusion `B → A`.
fn layered_corpus(parts: &[(Wff, Wff)]) -> Vec<ProofLine> {
    let mut lines = Vec::new();
    for (a, b) in parts {
        let start = lines.len();
        lines.push(line(
            Wff::forall(1, Wff::equals(Term::add(Term::Var(1), Term::zero()), Term::Var(1))),
            Justification::ProperAxiom("N3".into()),
        ));
        let ax = lines[start].wff.clone();
        lines.push(line(k1(&ax, b), Justification::Scheme(SchemeId::K1)));
        lines.push(line(
            Wff::implies(b.clone(), ax.clone()),
            Justification::ModusPonens { minor: start + 1, major: start + 2 },
        ));
        lines.push(line(k3(a, b), Justification::Scheme(SchemeId::K3)));
    }
    lines
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn propositional_instances_are_recognized(a in common::wff(3), b in common::wff(3), c in common::wff(3)) {
        let k = Theory::base_calculus();
        prop_assert!(is_instance(&k, SchemeId::K1, &k1(&a, &b)));
        prop_assert!(is_instance(&k, SchemeId::K2, &k2(&a, &b, &c)));
        prop_assert!(is_instance(&k, SchemeId::K3, &k3(&a, &b)));
        prop_assert!(recognize_scheme(&k, &k2(&a, &b, &c)).is_some());
    }

    #[test]
    fn k4_side_condition(a in common::wff(3), x in 1u32..=3) {
        let k = Theory::base_calculus();
        let cand = Wff::implies(Wff::forall(x, a.clone()), a.clone());
        prop_assert_eq!(is_instance(&k, SchemeId::K4, &cand), !a.is_free(x));
    }

    #[test]
    fn k5_side_condition(a in common::wff(3), x in 1u32..=3, t in common::term(3)) {
        let k = Theory::base_calculus();
        prop_assume!(a.is_free(x));
        let cand = Wff::implies(Wff::forall(x, a.clone()), naive_subst(&a, x, &t));
        prop_assert_eq!(is_instance(&k, SchemeId::K5, &cand), is_free_for(&t, x, &a));
    }

    #[test]
    fn k6_side_condition(a in common::wff(3), b in common::wff(3), x in 1u32..=3) {
        let k = Theory::base_calculus();
        prop_assert_eq!(is_instance(&k, SchemeId::K6, &k6(x, &a, &b)), !a.is_free(x));
    }

    #[test]
    fn induction_instances(a in common::wff(3)) {
        prop_assume!(a.is_free(1));
        prop_assume!(is_free_for(&Term::succ(Term::Var(1)), 1, &a));
        let n = Theory::peano();
        prop_assert!(is_instance(&n, SchemeId::N7, &induction(&a)));
        prop_assert!(!is_instance(&Theory::base_calculus(), SchemeId::N7, &induction(&a)));
    }

    #[test]
    fn accepted_proofs_are_prefix_closed_and_monotone(parts in prop::collection::vec((common::wff(3), common::wff(3)), 1..4)) {
        let n = Theory::peano();
        let p = Proof::new(n.clone(), layered_corpus(&parts));
        prop_assert!(check_proof(&p).accepted());
        for len in 1..p.lines.len() {
            let prefix = Proof::new(n.clone(), p.lines[..len].to_vec());
            prop_assert!(check_proof(&prefix).accepted());
        }
        let star = n.extend("Nstar", vec![("E".to_string(), Wff::forall(1, Wff::equals(Term::Var(1), Term::Var(1))))]).unwrap();
        prop_assert!(check_proof(&p.under(star)).accepted());
        prop_assert!(check_proof(&p.under(Theory::peano_with_equality())).accepted());
    }

    #[test]
    fn discovery_is_sound(parts in prop::collection::vec((common::wff(3), common::wff(3)), 1..4)) {
        let n = Theory::peano();
        let wffs: Vec<Wff> = layered_corpus(&parts).into_iter().map(|l| l.wff).collect();
        let found = discover(&n, wffs).unwrap();
        prop_assert!(check_proof(&found).accepted());
    }

    #[test]
    fn discovery_on_noise_is_sound_when_it_succeeds(ws in prop::collection::vec(common::wff(2), 1..5)) {
        let n = Theory::peano();
        if let Ok(p) = discover(&n, ws) {
            prop_assert!(check_proof(&p).accepted());
        }
    }

    #[test]
    fn generalization_lines_equal_forall_of_premise(a in common::wff(3), x in 1u32..=4) {
        let n = Theory::peano();
        let lines = vec![
            line(k1(&a, &a), Justification::Scheme(SchemeId::K1)),
            line(Wff::forall(x, k1(&a, &a)), Justification::Generalization { premise: 1, var: x }),
        ];
        let p = Proof::new(n, lines);
        prop_assert!(check_proof(&p).accepted());
        prop_assert_eq!(&p.lines[1].wff, &Wff::forall(x, p.lines[0].wff.clone()));
    }
}
