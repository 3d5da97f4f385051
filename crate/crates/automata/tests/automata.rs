use kleisli_automata::algebra::{enumerate_trees, random_tree, RankedSymbol};
use kleisli_automata::containers::{FiniteSet, Sets};
use kleisli_automata::tree_automata::{bu_determinize, tree_explore, BottomUpContainerTA};
use kleisli_automata::word_automata::{complement, determinize, explore, Caps, Nfa, WordAutomaton};
use kleisli_automata::word_expressions::random_word;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

type Table = BTreeMap<(u8, char), Vec<u8>>;

fn arb_nfa() -> impl Strategy<Value = (Vec<u8>, Table, Vec<u8>)> {
    let states = 0u8..5;
    (
        prop::collection::vec(states.clone(), 0..3),
        prop::collection::btree_map((states.clone(), prop_oneof![Just('a'), Just('b')]), prop::collection::vec(states.clone(), 0..3), 0..12),
        prop::collection::vec(states, 0..3),
    )
}

fn nfa(init: &[u8], table: Table, finals: Vec<u8>) -> Nfa<char, u8> {
    WordAutomaton::new(
        init.iter().copied().collect(),
        move |a: &char, q: &u8| Ok(table.get(&(*q, *a)).map(|v| v.iter().copied().collect()).unwrap_or_default()),
        move |q: &u8| Ok(finals.contains(q)),
    )
}

proptest! {
    #[test]
    fn subset_construction_preserves_language((init, table, finals) in arb_nfa(), seed in any::<u64>()) {
        let n = nfa(&init, table, finals);
        let d = determinize(&n);
        let c = complement(&d);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..30 {
            let w = random_word(&mut rng, &['a', 'b'], 8);
            let r = n.recognizes(&w).unwrap();
            prop_assert_eq!(d.recognizes(&w).unwrap(), r);
            prop_assert_eq!(c.recognizes(&w).unwrap(), !r);
        }
        let ex = explore(&d, &['a', 'b'], Caps::default()).unwrap();
        prop_assert!(ex.states.len() <= 32);
        prop_assert_eq!(ex.to_dot(), explore(&d, &['a', 'b'], Caps::default()).unwrap().to_dot());
    }

    #[test]
    fn tree_determinization_preserves_language(seed in any::<u64>(), rules in prop::collection::vec((0u8..3, 0u8..3, 0u8..3), 1..10)) {
        // rules (p, q, r): g(p, q) and f(p) may reach r; leaves reach 0
        let aut = BottomUpContainerTA::<Sets, (), u8>::closed(
            move |f: &RankedSymbol, qs: &[u8]| {
                Ok(match f.arity {
                    0 => FiniteSet::singleton(0),
                    1 => rules.iter().filter(|r| r.0 == qs[0]).map(|r| r.2).collect(),
                    _ => rules.iter().filter(|r| r.0 == qs[0] && r.1 == qs[1]).map(|r| r.2).collect(),
                })
            },
            |q| Ok(*q == 2),
        );
        let det = bu_determinize(&aut);
        let alphabet = vec![RankedSymbol::new("a", 0), RankedSymbol::new("f", 1), RankedSymbol::new("g", 2)];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..30 {
            let t = random_tree(&mut rng, &alphabet, 5);
            prop_assert_eq!(det.recognizes(&t).unwrap(), aut.weight(&t).unwrap());
        }
        let ex = tree_explore(&det, &alphabet, Caps::default()).unwrap();
        prop_assert!(ex.states.len() <= 8);
    }
}

#[test]
fn small_trees_are_enumerated_once() {
    let alphabet = vec![RankedSymbol::new("a", 0), RankedSymbol::new("f", 1), RankedSymbol::new("g", 2)];
    let trees = enumerate_trees(&alphabet, 3);
    let unique: std::collections::BTreeSet<_> = trees.iter().collect();
    assert_eq!(unique.len(), trees.len());
    // depth 1: a; depth <= 2: a, f(a), g(a,a); depth <= 3 adds f over 3 and g over 3x3
    assert_eq!(trees.len(), 1 + 3 + 9);
}
