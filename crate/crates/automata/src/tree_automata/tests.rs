use super::fixtures::*;
use super::*;
use crate::algebra::{enumerate_trees, random_tree, Product, RankedSymbol, RankedTree};
use crate::containers::{FiniteSet, Linear, Sets};
use crate::word_automata::Caps;
use crate::Error;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

fn t(s: &str) -> RankedTree {
    RankedTree::parse(s).unwrap()
}

fn modulo(x: i64, n: i64) -> i64 {
    x.rem_euclid(n)
}

#[test]
fn modular_tree_weight() {
    let aut = modular_rwta(19);
    let expected = modulo(modulo(-(513 + 838), 19) * 37, 19);
    assert_eq!(aut.weight(&t("*(-(+(513,838)),37)")).unwrap(), Some(expected));
    assert_eq!(expected, 2);
    assert!(modular_even(19).recognizes(&t("*(-(+(513,838)),37)")).unwrap());
}

#[test]
fn modular_error_state() {
    let ko = t("*(-(+(KO,838)),37)");
    assert_eq!(modular_rwta(19).weight(&ko).unwrap(), None);
    assert!(!modular_even(19).recognizes(&ko).unwrap());
}

#[test]
fn modular_with_variables() {
    let aut = modular_rwta(19);
    let tp = t("*(+(_,_),37)");
    let w = aut.weight_fn(&tp);
    assert_eq!(w(&[ModVar::X1, ModVar::X2]).unwrap(), Some(modulo((65 + 9) * 37, 19)));
    assert_eq!(w(&[ModVar::X1, ModVar::X3]).unwrap(), None);
    assert!(matches!(w(&[ModVar::X1]), Err(Error::Arity { expected: 2, found: 1 })));
}

#[test]
fn hole_is_final_after_init() {
    let aut = modular_rwta(19);
    for v in [ModVar::X1, ModVar::X2, ModVar::X3] {
        assert_eq!(aut.weight_with_vars(&RankedTree::Hole, &[v]).unwrap(), (aut.finality)(&(aut.init)(&v).unwrap()).unwrap());
    }
}

#[test]
fn complement_flips_and_is_involutive() {
    let even = modular_even(19);
    let co = even.complement();
    for s in ["*(-(+(513,838)),37)", "*(-(+(KO,838)),37)", "3", "+(1,2)"] {
        let tr = t(s);
        assert_eq!(co.recognizes(&tr).unwrap(), !even.recognizes(&tr).unwrap());
        assert_eq!(co.complement().recognizes(&tr).unwrap(), even.recognizes(&tr).unwrap());
    }
    let all = BottomUpDetTA::<(), (), bool>::new(|_| (), |_, _| Ok(()), |_| true);
    for tr in enumerate_trees(&example_alphabet(), 3) {
        assert!(!all.complement().recognizes(&tr).unwrap());
    }
}

#[test]
fn height_width_values() {
    let aut = height_width_automaton();
    let ([a1, a2, a3], var) = height_width_trees();
    assert_eq!(a1, t("g(a,f(b))"));
    assert_eq!(aut.weight(&a1).unwrap(), Product(12));
    assert_eq!(aut.weight(&a2).unwrap(), Product(50));
    let vars = [var];
    let f = aut.weight_fn(&a3, &vars);
    assert_eq!(f(&[Product(0)]).unwrap(), Product(138));
}

fn height(t: &RankedTree) -> i64 {
    match t {
        RankedTree::Hole => 1,
        RankedTree::Node(_, ts) => 1 + ts.iter().map(height).max().unwrap_or(0),
    }
}

#[test]
fn height_width_components_match_measures() {
    let aut = height_width_automaton();
    let only = |keep: Measure| {
        aut.with_finality(move |s| match s {
            Some(m) if *m == keep => std::sync::Arc::new(|ms: &[Product]| ms[0]),
            _ => std::sync::Arc::new(|_: &[Product]| Product(1)),
        })
    };
    let (h, w) = (only(Measure::Height), only(Measure::Width));
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..100 {
        let tr = random_tree(&mut rng, &example_alphabet(), 6);
        assert_eq!(h.weight(&tr).unwrap(), Product(height(&tr)));
        assert_eq!(w.weight(&tr).unwrap(), Product(tr.size() as i64));
    }
}

#[test]
fn occurrence_counts() {
    let (a3, patterns) = occurrence_trees().unwrap();
    let aut = occurrence_automaton(&a3).unwrap();
    let got: Vec<i64> = patterns.iter().map(|p| aut.weight(p).unwrap()).collect();
    assert_eq!(got, vec![1, 3, 5]);
}

fn matches_at(p: &RankedTree, s: &RankedTree) -> bool {
    match (p, s) {
        (RankedTree::Hole, _) => true,
        (RankedTree::Node(f, ps), RankedTree::Node(g, ss)) => {
            f == g && ps.len() == ss.len() && ps.iter().zip(ss).all(|(a, b)| matches_at(a, b))
        }
        _ => false,
    }
}

#[test]
fn occurrences_agree_with_matching() {
    let alphabet = example_alphabet();
    let subjects = enumerate_trees(&alphabet, 3);
    let mut patterns = subjects.clone();
    patterns.extend(["_", "g(_,_)", "f(_)", "g(a,_)", "h(_)", "g(_,f(_))"].map(t));
    for s in subjects.iter().filter(|s| s.size() <= 6) {
        let aut = occurrence_automaton(s).unwrap();
        for p in patterns.iter().filter(|p| p.size() <= 6) {
            let oracle = s.subtrees().into_iter().filter(|x| matches_at(p, x)).count() as i64;
            assert_eq!(aut.weight(p).unwrap(), oracle, "{p} in {s}");
        }
    }
}

#[test]
fn top_down_variables_are_assigned_left_to_right() {
    // one state per variable name, reading g into (x, y)
    let aut = TopDownContainerTA::<Linear<i64>, char, char>::new(
        crate::containers::LinComb::single(1, 's'),
        |f, s: &char| {
            Ok(match (f.name.as_str(), s) {
                ("g", 's') => crate::containers::LinComb::single(2, vec!['x', 'y']),
                _ => crate::containers::LinComb::zero(),
            })
        },
        |s: &char| Ok(crate::containers::LinComb::single(1, *s)),
    );
    let p = t("g(_,_)");
    assert_eq!(aut.weight_with_vars(&p, &['x', 'y']).unwrap(), 2);
    assert_eq!(aut.weight_with_vars(&p, &['y', 'x']).unwrap(), 0);
    assert_eq!(aut.weight(&p).unwrap(), 2);
}

#[test]
fn nondeterministic_simulation() {
    let aut = nondeterministic_example();
    assert_eq!(aut.config_with_vars(&t("f(a)"), &[]).unwrap(), FiniteSet::from_iter([1u8, 2]));
    assert!(aut.weight(&t("f(a)")).unwrap());
    assert!(!aut.weight(&t("a")).unwrap());
    assert!(aut.weight(&t("h(f(g(a,b)))")).unwrap());
    assert!(!aut.weight(&t("g(f(a),b)")).unwrap());
}

#[test]
fn single_leaf_weight() {
    let aut = BottomUpContainerTA::<Sets, (), u8>::closed(|_, _| Ok(FiniteSet::singleton(7)), |q| Ok(*q == 7));
    assert!(aut.weight(&t("a")).unwrap());
}

// reachable states computed straight from the transition table
fn reachable(t: &RankedTree) -> BTreeSet<u8> {
    let RankedTree::Node(f, ts) = t else { return BTreeSet::new() };
    let kids: Vec<BTreeSet<u8>> = ts.iter().map(reachable).collect();
    let mut out = BTreeSet::new();
    match (f.name.as_str(), kids.as_slice()) {
        ("a" | "b", []) => {
            out.insert(1);
        }
        ("f", [k]) if k.contains(&1) => {
            out.extend([1, 2]);
        }
        ("h", [k]) if k.contains(&2) => {
            out.insert(2);
        }
        ("g", [k1, k2]) if k1.contains(&1) && k2.contains(&1) => {
            out.insert(1);
        }
        _ => {}
    }
    out
}

#[test]
fn determinization_preserves_recognition() {
    let aut = nondeterministic_example();
    let det = bu_determinize(&aut);
    for tr in enumerate_trees(&example_alphabet(), 4) {
        let oracle = reachable(&tr).contains(&2);
        assert_eq!(aut.weight(&tr).unwrap(), oracle, "{tr}");
        assert_eq!(det.recognizes(&tr).unwrap(), oracle, "{tr}");
        assert_eq!(det.state_with_vars(&tr, &[]).unwrap().0, reachable(&tr));
    }
}

#[test]
fn determinizing_deterministic_gives_singletons() {
    let aut = BottomUpContainerTA::<Sets, (), u8>::closed(
        |f, qs: &[u8]| Ok(FiniteSet::singleton(((f.arity as u8) + qs.iter().sum::<u8>()) % 3)),
        |q| Ok(*q == 0),
    );
    let det = bu_determinize(&aut);
    for tr in enumerate_trees(&example_alphabet(), 3) {
        let q = det.state_with_vars(&tr, &[]).unwrap();
        assert_eq!(q.len(), 1);
        assert_eq!(det.recognizes(&tr).unwrap(), aut.weight(&tr).unwrap());
    }
}

#[test]
fn explore_example() {
    let aut = nondeterministic_example();
    let ex = tree_explore(&aut, &example_alphabet(), Caps::default()).unwrap();
    assert_eq!(ex.states.iter().copied().collect::<BTreeSet<u8>>(), BTreeSet::from([1, 2]));
    let empty = tree_explore(&aut, &[], Caps::default()).unwrap();
    assert!(empty.states.is_empty() && empty.transitions.is_empty());
}

#[test]
fn explore_determinized_dump() {
    let det = bu_determinize(&nondeterministic_example());
    let ex = tree_explore(&det, &example_alphabet(), Caps::default()).unwrap();
    assert_eq!(ex.states.len(), 4);
    let dump = ex.dump();
    let expected = "\
() --a--> {{1}}
() --b--> {{1}}
({1,2}) --f--> {{1,2}}
({1,2}) --h--> {{2}}
({1,2},{1,2}) --g--> {{1}}
({1,2},{1}) --g--> {{1}}
({1,2},{2}) --g--> {{}}
({1,2},{}) --g--> {{}}
({1}) --f--> {{1,2}}
({1}) --h--> {{}}
({1},{1,2}) --g--> {{1}}
({1},{1}) --g--> {{1}}
({1},{2}) --g--> {{}}
({1},{}) --g--> {{}}
({2}) --f--> {{}}
({2}) --h--> {{2}}
({2},{1,2}) --g--> {{}}
({2},{1}) --g--> {{}}
({2},{2}) --g--> {{}}
({2},{}) --g--> {{}}
({}) --f--> {{}}
({}) --h--> {{}}
({},{1,2}) --g--> {{}}
({},{1}) --g--> {{}}
({},{2}) --g--> {{}}
({},{}) --g--> {{}}
";
    assert_eq!(dump, expected);
}

#[test]
fn explore_fixpoint_and_cap() {
    let det = bu_determinize(&nondeterministic_example());
    let alphabet = example_alphabet();
    let ex = tree_explore(&det, &alphabet, Caps::default()).unwrap();
    let known: BTreeSet<_> = ex.states.iter().cloned().collect();
    for f in &alphabet {
        let mut tuples = vec![vec![]];
        for _ in 0..f.arity {
            tuples = tuples
                .into_iter()
                .flat_map(|tu: Vec<FiniteSet<u8>>| {
                    known.iter().map(move |q| {
                        let mut v = tu.clone();
                        v.push(q.clone());
                        v
                    })
                })
                .collect();
        }
        for tu in tuples {
            assert!(known.contains(&(det.delta)(f, &tu).unwrap()));
        }
    }
    assert!(tree_explore(&det, &alphabet, Caps::states(2)).is_err());
}

#[test]
fn dot_uses_fan_nodes() {
    let aut = nondeterministic_example();
    let dot = tree_to_dot(&aut, &example_alphabet(), Caps::default()).unwrap();
    assert!(dot.contains("[shape=box, label=\"g\"]"));
    assert!(dot.contains("-> t") && dot.contains("[label=\"2\"]"));
    assert_eq!(dot, tree_to_dot(&aut, &example_alphabet(), Caps::default()).unwrap());
}

#[test]
fn container_weight_matches_determinized_on_random_trees() {
    let aut = nondeterministic_example();
    let det = bu_determinize(&aut);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let alphabet: Vec<RankedSymbol> = example_alphabet();
    for _ in 0..200 {
        let tr = random_tree(&mut rng, &alphabet, 7);
        assert_eq!(aut.weight(&tr).unwrap(), det.recognizes(&tr).unwrap());
    }
}

#[test]
fn top_down_exploration_of_occurrences() {
    let aut = occurrence_automaton(&t("g(a,f(b))")).unwrap();
    let ex = top_down_explore(&aut, &example_alphabet(), Caps::default()).unwrap();
    assert_eq!(ex.states.len(), 4);
    assert_eq!(ex.edge_count(), 4);
    assert!(ex.holes.iter().all(|h| h.is_some()));
    let dump = ex.dump();
    assert_eq!(
        dump,
        "a --a/1--> ()\na stops at 1·()\nb --b/1--> ()\nb stops at 1·()\nf(b) --f/1--> (b)\nf(b) stops at 1·()\n\
         g(a,f(b)) --g/1--> (a,f(b))\ng(a,f(b)) stops at 1·()\ninit --1--> a\ninit --1--> b\ninit --1--> f(b)\n\
         init --1--> g(a,f(b))\n"
    );
    let dot = ex.to_dot();
    assert!(dot.contains("shape=box, label=\"g/1\""), "{dot}");
    assert_eq!(dot.matches("shape=point").count(), 3);
    let err = top_down_explore(&aut, &example_alphabet(), Caps::states(2)).unwrap_err();
    assert!(matches!(err, crate::word_automata::ExploreError::Truncated { limit: 2, .. }));
}
