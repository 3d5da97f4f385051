use super::fixtures::*;
use super::*;
use crate::containers::{FiniteSet, LinComb, Sets};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Arc;

fn a(n: usize) -> Vec<char> {
    vec!['a'; n]
}

#[test]
fn modular_combination() {
    let p = a4_products();
    let c = a4_combination();
    for (n, expected) in [(2, true), (4, false), (8, true)] {
        assert_eq!(p.recognizes(&a(n)).unwrap(), expected);
        assert_eq!(c.recognizes(&a(n)).unwrap(), expected);
    }
    for n in 0..40 {
        let oracle = (n % 2 == 0 && n % 4 != 0) || n % 8 == 0;
        assert_eq!(c.recognizes(&a(n)).unwrap(), oracle);
    }
}

#[test]
fn lcm_and_k_dfa() {
    let auts = [modular_dfa(3, &[0]), modular_dfa(7, &[0]), modular_dfa(11, &[0])];
    let all = bool_combination(|b| b.iter().all(|x| *x), &auts);
    for n in 0..=462 {
        assert_eq!(all.recognizes(&a(n)).unwrap(), n % 231 == 0);
    }
    let k = to_k_dfa(vec![2, 5], &modular_dfa(11, &[0]));
    for n in 0..=22 {
        assert_eq!(k.recognizes(&a(n)).unwrap(), n % 11 == 9 || n % 11 == 6);
    }
}

#[test]
fn weighted_config_and_weight() {
    let w = weighted_pqr();
    let expected: LinComb<i64, Pqr> = [(16, Pqr::P), (6, Pqr::Q), (7, Pqr::R)].into_iter().collect();
    assert_eq!(w.get_config(&['A']).unwrap(), expected);
    assert_eq!(w.weight(&['A']).unwrap(), 92);
    assert_eq!(w.get_config(&[]).unwrap(), w.initial);
}

#[test]
fn exponential_family() {
    let nfa = exponential_nfa(3);
    assert_eq!(nfa.get_config(&a(3)).unwrap(), nfa.initial);
    for n in 3..=6 {
        let dfa = determinize(&exponential_nfa(n));
        let ex = explore(&dfa, &['a', 'b'], Caps::default()).unwrap();
        assert_eq!(ex.states.len(), 1 << n);
    }
}

#[test]
fn empty_nfa_determinizes_to_sink() {
    let empty: Nfa<char, u8> = WordAutomaton::new(FiniteSet::new(), |_, _| Ok(FiniteSet::new()), |_| Ok(true));
    let d = determinize(&empty);
    assert!(d.initial.is_empty());
    assert!(!d.recognizes(&['a']).unwrap());
}

#[test]
fn alternating_letters() {
    let letters = ['A', 'B', 'C', 'D', 'E'];
    let afa = afa_all_letters(&letters);
    let ex = explore(&afa, &letters, Caps::default()).unwrap();
    assert_eq!(ex.states.len(), 6);
    let nfa = afa_to_nfa(&afa).unwrap();
    let nex = explore(&nfa, &letters, Caps::default()).unwrap();
    assert!(nex.states.len() >= 32);
    assert!(nfa.recognizes(&['E', 'D', 'C', 'B', 'A']).unwrap());
    assert!(!nfa.recognizes(&['E', 'D', 'B', 'A']).unwrap());
    let dfa = afa_to_complete_dfa(&afa);
    assert!(dfa.recognizes(&['A', 'B', 'C', 'D', 'E', 'A']).unwrap());
}

#[test]
fn pushdown() {
    let d = dpda();
    assert!(d.empty_stack_recognizes(&chars("AABBB")).unwrap());
    assert!(!d.empty_stack_recognizes(&chars("AABB")).unwrap());
    let n = npda();
    assert!(n.empty_stack_recognizes(&chars("ABBB")).unwrap());
    assert!(n.empty_stack_recognizes(&chars("ABB")).unwrap());
    assert!(!n.empty_stack_recognizes(&chars("ABBBB")).unwrap());
}

#[test]
fn sequential_counter() {
    let w = sequential_pair_automaton(is_vowel);
    let (n, s) = w.weight(&chars("automate")).unwrap();
    assert_eq!((n.0, s.as_str()), (5, "auoae"));
    let (n, s) = w.weight(&[]).unwrap();
    assert_eq!((n.0, s.as_str()), (0, ""));
}

#[test]
fn product_with_counter() {
    let p = parallel_product(&afa_all_letters(&['a', 'b']), &sequential_pair_automaton(is_vowel));
    let (reco, (count, sub)) = p.weight(&chars("abbe")).unwrap();
    assert!(reco);
    assert_eq!((count.0, sub.as_str()), (2, "ae"));
}

#[test]
fn memoization_counts_once() {
    let counter = Arc::new(AtomicUsize::new(0));
    let m = determinize(&exponential_nfa(4)).memoized(Some(counter.clone()));
    for _ in 0..3 {
        m.recognizes(&chars("abab")).unwrap();
    }
    assert_eq!(counter.load(Ordering::SeqCst), 4);
}

#[test]
fn dot_of_mod2() {
    let ex = explore(&modular_dfa::<char>(2, &[0]), &['a'], Caps::default()).unwrap();
    let dot = ex.to_dot();
    assert_eq!(dot.matches("->").count(), 3);
    assert!(dot.contains("n0 [label=\"0\", shape=doublecircle"));
    assert_eq!(ex.dump(), "0 --a--> {1}\n1 --a--> {0}\n");
}

#[test]
fn caps_truncate() {
    let dfa = determinize(&exponential_nfa(5));
    match explore(&dfa, &['a', 'b'], Caps::states(10)) {
        Err(ExploreError::Truncated { partial, .. }) => assert_eq!(partial.states.len(), 10),
        other => panic!("expected truncation, got {:?}", other.map(|e| e.states.len())),
    }
}

#[test]
fn sum_and_concat_of_sets() {
    let single = |c: char| -> Nfa<char, bool> {
        WordAutomaton::new(
            FiniteSet::singleton(false),
            move |x: &char, s: &bool| Ok(if *x == c && !*s { FiniteSet::singleton(true) } else { FiniteSet::new() }),
            |s| Ok(*s),
        )
    };
    let ab = concatenate::<Sets, _, _, _>(&single('a'), &single('b')).unwrap();
    assert!(ab.recognizes(&['a', 'b']).unwrap());
    assert!(!ab.recognizes(&['a']).unwrap());
    let star = kleene_star(&ab).unwrap();
    assert!(star.recognizes(&[]).unwrap());
    assert!(star.recognizes(&chars("abab")).unwrap());
    assert!(!star.recognizes(&chars("aba")).unwrap());
    let u = union(&single('a'), &single('b'));
    assert!(u.recognizes(&['b']).unwrap());
    let i = intersection(&single('a'), &single('b')).unwrap();
    assert!(!i.recognizes(&['a']).unwrap());
}
