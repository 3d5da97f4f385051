use super::*;
use crate::algebra::Positioned;
use crate::containers::{BoolExprs, FiniteSet, FunExprs, Identity, LinComb, Linear, Optional, Sets};
use crate::word_automata::{chars, explore, Caps};
use crate::Error;

type BExpr = WordExpr<bool, char>;
type IExpr = WordExpr<i64, char>;

fn s(c: char) -> BExpr {
    WordExpr::sym(c)
}

fn pb(t: &str) -> BExpr {
    parse_expression(t).unwrap()
}

fn pi(t: &str) -> IExpr {
    parse_expression(t).unwrap()
}

#[test]
fn precedence() {
    assert_eq!(pb("a+b.c*"), WordExpr::plus(s('a'), WordExpr::concat(s('b'), WordExpr::star(s('c')))));
    assert_eq!(pi("[5]:a"), WordExpr::mult_l(5, WordExpr::sym('a')));
    assert_eq!(pb("~(a&b)"), WordExpr::not(WordExpr::inter(s('a'), s('b'))));
    assert_eq!(pb("a+b+c"), WordExpr::plus(WordExpr::plus(s('a'), s('b')), s('c')));
    assert_eq!(pb(" a . b "), WordExpr::concat(s('a'), s('b')));
    assert_eq!(pi("a:[2]:[3]"), WordExpr::mult_r(WordExpr::mult_r(WordExpr::sym('a'), 2), 3));
    assert_eq!(pb("a & b + c"), WordExpr::plus(WordExpr::inter(s('a'), s('b')), s('c')));
}

#[test]
fn parse_errors_carry_positions() {
    for (text, at) in [("a+", 2), ("(a", 2), ("a b", 2), ("[x]:a", 1), ("a)", 1)] {
        match parse_expression::<bool>(text) {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, at, "{text}"),
            other => panic!("{text}: {other:?}"),
        }
    }
}

#[test]
fn custom_operators() {
    let e = pb("a -> b");
    let WordExpr::Op(Operator::Function(f), args) = &e else { panic!("{e:?}") };
    assert_eq!((f.label(), args.len()), ("->", 2));
    // right associative, below sums
    let e = pb("a -> b -> c+a");
    let printed = print_expression(&e);
    assert_eq!(printed, "(a->(b->(c+a)))");
    assert_eq!(pb(&printed), e);
    let p = pi("(a+b)^2");
    assert_eq!(nullable(&p).unwrap(), 0);
    assert_eq!(print_expression(&p), "(a+b)^2");
}

#[test]
fn printing_round_trips() {
    for t in ["a+b.c*", "[5]:a", "~(a&b)", "~a*", "(~a)*", "([2]:a)*", "1+0.a", "a:[3].[2]:(b+c)", "~~a", "[2]:a:[3]"] {
        let e = pi(t);
        assert_eq!(pi(&print_expression(&e)), e, "{t}");
    }
    for seed in 0..200 {
        let pal = Palette { simple: true, scalars: true, boolean: true };
        let e: IExpr = random_expression(seed, 8, &['a', 'b', 'c'], pal);
        assert_eq!(pi(&e.to_string()), e);
    }
}

#[test]
fn nullable_cases() {
    assert!(nullable(&BExpr::Epsilon).unwrap());
    assert!(nullable(&WordExpr::star(s('a'))).unwrap());
    assert!(!nullable(&s('a')).unwrap());
    // 5·(1+1)* needs star(2), which integers do not have
    let e = pi("[5]:(1+1)*");
    assert!(matches!(nullable(&e), Err(Error::NotStarrable(_))));
    assert_eq!(nullable(&pi("[5]:(1+a)")).unwrap(), 5);
    assert_eq!(nullable(&pi("(1+1).(1+[3]:1)")).unwrap(), 8);
}

#[test]
fn linearization() {
    let lin = linearize(&pb("a.a"));
    assert_eq!(
        lin,
        WordExpr::concat(WordExpr::sym(Positioned::new(1, 'a')), WordExpr::sym(Positioned::new(2, 'a')))
    );
    assert_eq!(linearize(&BExpr::Epsilon), WordExpr::Epsilon);
    let e = pb("(a+b)*.a.(c+a)");
    let (lin, next) = linearize_from(&e, 1);
    assert_eq!(next, 1 + e.symbol_count());
    assert_eq!(lin.delinearize(), e);
}

#[test]
fn glushkov_clauses() {
    let a1 = WordExpr::<bool, _>::sym(Positioned::new(1, 'a'));
    let g = glushkov_functions::<Sets, _>(&a1).unwrap().unwrap();
    assert_eq!(g.first, FiniteSet::singleton(Positioned::new(1, 'a')));
    assert!(g.last_weight(&Positioned::new(1, 'a')));
    assert!(g.follow_of(&Positioned::new(1, 'a')).is_empty());
    assert!(!g.null);

    let g = glushkov_functions::<Sets, _>(&WordExpr::star(a1.clone())).unwrap().unwrap();
    assert_eq!(g.follow_of(&Positioned::new(1, 'a')), FiniteSet::singleton(Positioned::new(1, 'a')));
    assert!(g.null);

    let ab = linearize(&pi("[3]:(a.b)"));
    let g = glushkov_functions::<Linear<i64>, _>(&ab).unwrap().unwrap();
    assert_eq!(g.first, LinComb::single(3, Positioned::new(1, 'a')));
    assert_eq!(g.follow_of(&Positioned::new(1, 'a')), LinComb::single(1, Positioned::new(2, 'b')));

    assert!(glushkov_functions::<Sets, _>(&linearize(&pb("~a"))).unwrap().is_none());
}

#[test]
fn position_automaton_of_one_symbol() {
    let (aut, sigma) = position_automaton::<Sets, char>(&pb("a")).unwrap().unwrap();
    assert_eq!(sigma, vec!['a']);
    let ex = explore(&aut, &sigma, Caps::default()).unwrap();
    assert_eq!((ex.states.len(), ex.edge_count()), (2, 1));
    assert!(aut.weight(&['a']).unwrap());
}

#[test]
fn position_automaton_size_and_universality() {
    let e = pb("(a+b)*");
    let (aut, sigma) = position_automaton::<Sets, char>(&e).unwrap().unwrap();
    let ex = explore(&aut, &sigma, Caps::default()).unwrap();
    assert_eq!(ex.states.len(), e.symbol_count() + 1);
    for w in all_words(&['a', 'b'], 5) {
        assert!(aut.weight(&w).unwrap());
    }
}

#[test]
fn derivative_examples() {
    let d = derive::<Sets, char>(&'a', &s('a')).unwrap();
    assert_eq!(d, FiniteSet::singleton(BExpr::Epsilon));
    let astar = WordExpr::star(s('a'));
    let d = derive::<Sets, char>(&'a', &astar).unwrap();
    assert_eq!(d, FiniteSet::singleton(WordExpr::concat(BExpr::Epsilon, astar.clone())));
    let d = derive::<Optional, char>(&'a', &WordExpr::not(s('a'))).unwrap();
    assert_eq!(d, Some(WordExpr::not(BExpr::Epsilon)));
    assert_eq!(derive_by_word::<Sets, char>(&[], &astar).unwrap(), FiniteSet::singleton(astar.clone()));
}

#[test]
fn derive_by_word_is_a_fold() {
    let e = pb("(a.b+a)*.b");
    let ab = derive_by_word::<Sets, char>(&chars("ab"), &e).unwrap();
    let mut expected = FiniteSet::new();
    for x in derive::<Sets, char>(&'a', &e).unwrap().iter() {
        expected.0.extend(derive::<Sets, char>(&'b', x).unwrap().0);
    }
    assert_eq!(ab, expected);
}

#[test]
fn derivation_states_of_a_star() {
    let aut = derivation_automaton::<Optional, char>(&pb("a*"));
    let ex = explore(&aut, &['a'], Caps::default()).unwrap();
    let astar = WordExpr::star(s('a'));
    let states: Vec<BExpr> = ex.states.clone();
    assert_eq!(states.len(), 2);
    assert!(states.contains(&astar));
    assert!(states.contains(&WordExpr::concat(WordExpr::Epsilon, astar)));
}

#[test]
fn complement_of_a_star() {
    let e = pb("~(a*)");
    let b = derivation_automaton::<BoolExprs, char>(&e);
    assert!(!b.weight(&chars("aa")).unwrap());
    assert!(b.weight(&chars("ab")).unwrap());
    let d = derivation_automaton::<Identity, char>(&e);
    assert!(!d.weight(&chars("aa")).unwrap());
    let i = inductive_automaton::<Sets, char>(&e).unwrap().unwrap();
    assert!(!i.weight(&chars("aa")).unwrap());
    assert!(i.weight(&chars("ba")).unwrap());
}

#[test]
fn inductive_atoms() {
    let eps = inductive_automaton::<Sets, char>(&BExpr::Epsilon).unwrap().unwrap();
    let ex = explore(&eps, &['a', 'b'], Caps::default()).unwrap();
    assert_eq!(ex.states, vec![InductiveState::Pure(false)]);
    assert!(eps.weight(&[]).unwrap());
    let empty = inductive_automaton::<Sets, char>(&BExpr::Empty).unwrap().unwrap();
    for w in all_words(&['a', 'b'], 3) {
        assert!(!empty.weight(&w).unwrap());
        assert_eq!(eps.weight(&w).unwrap(), w.is_empty());
    }
    let f = inductive_automaton::<Sets, char>(&pb("a -> b")).unwrap();
    assert!(f.is_none());
}

#[test]
fn oracle_examples() {
    let m = brute_force_language(&pb("a.b"), &['a', 'b'], 3).unwrap();
    assert_eq!(m.len(), 1);
    assert!(m[&chars("ab")]);
    let m = brute_force_language(&pb("(a+b)*"), &['a', 'b'], 2).unwrap();
    assert_eq!(m.len(), 7);
    let m = brute_force_language(&pi("([2]:a)*"), &['a'], 3).unwrap();
    assert_eq!(m[&chars("aaa")], 8);
    let m = brute_force_language(&pi("(a+a)*"), &['a'], 2).unwrap();
    assert_eq!(m[&chars("aa")], 4);
}

#[test]
fn random_expressions() {
    let e1: BExpr = random_expression(7, 10, &['a', 'b', 'c'], Palette::SIMPLE);
    let e2: BExpr = random_expression(7, 10, &['a', 'b', 'c'], Palette::SIMPLE);
    assert_eq!(e1, e2);
    assert_eq!(e1.op_count(), 10);
    let atom: BExpr = random_expression(3, 0, &['a'], Palette::SIMPLE);
    assert_eq!(atom, s('a'));
    for seed in 0..50 {
        let e: BExpr = random_expression(seed, 6, &['a', 'b'], Palette::SIMPLE);
        assert!(e.all_ops(&|op| op.is_simple()));
        let e: IExpr = random_expression(seed, 6, &['a', 'b'], Palette::WEIGHTED);
        assert!(e.all_ops(&|op| match op {
            Operator::MultL(k) | Operator::MultR(k) => (1..=10).contains(k),
            op => op.is_simple(),
        }));
    }
}

fn agree_bool(e: &BExpr, alphabet: &[char], len: usize) {
    let oracle = brute_force_language(e, alphabet, len).unwrap();
    let ind = inductive_automaton::<Sets, char>(e).unwrap().unwrap();
    let der_s = derivation_automaton::<Sets, char>(e);
    let der_b = derivation_automaton::<BoolExprs, char>(e);
    let der_i = derivation_automaton::<Identity, char>(e);
    let der_f = derivation_automaton::<FunExprs<bool>, char>(e);
    let pos = position_automaton::<Sets, char>(e).unwrap();
    for w in all_words(alphabet, len) {
        let want = oracle_weight(&oracle, &w);
        assert_eq!(ind.weight(&w).unwrap(), want, "inductive {e} on {w:?}");
        assert_eq!(der_s.weight(&w).unwrap(), want, "sets derivation {e} on {w:?}");
        assert_eq!(der_b.weight(&w).unwrap(), want, "alternating derivation {e} on {w:?}");
        assert_eq!(der_i.weight(&w).unwrap(), want, "brzozowski {e} on {w:?}");
        assert_eq!(der_f.weight(&w).unwrap(), want, "generalized derivation {e} on {w:?}");
        if let Some((p, _)) = &pos {
            assert_eq!(p.weight(&w).unwrap(), want, "positions {e} on {w:?}");
        }
    }
}

#[test]
fn boolean_constructions_match_the_oracle() {
    for seed in 0..60 {
        let e: BExpr = random_expression(seed, 5, &['a', 'b'], Palette::SIMPLE);
        agree_bool(&e, &['a', 'b'], 5);
        let e: BExpr = random_expression(seed + 1000, 5, &['a', 'b'], Palette::BOOLEAN);
        agree_bool(&e, &['a', 'b'], 4);
    }
}

#[test]
fn integer_constructions_match_the_oracle() {
    let mut checked = 0;
    for seed in 0..300 {
        let e: IExpr = random_expression(seed, 5, &['a', 'b'], Palette::WEIGHTED);
        let Ok(oracle) = brute_force_language(&e, &['a', 'b'], 4) else { continue };
        checked += 1;
        let ind = inductive_automaton::<Linear<i64>, char>(&e).unwrap().unwrap();
        let (pos, _) = position_automaton::<Linear<i64>, char>(&e).unwrap().unwrap();
        let der = derivation_automaton::<Linear<i64>, char>(&e);
        let gen = derivation_automaton::<FunExprs<i64>, char>(&e);
        for w in all_words(&['a', 'b'], 4) {
            let want = oracle_weight(&oracle, &w);
            assert_eq!(ind.weight(&w).unwrap(), want, "inductive {e} on {w:?}");
            assert_eq!(pos.weight(&w).unwrap(), want, "positions {e} on {w:?}");
            assert_eq!(der.weight(&w).unwrap(), want, "derivation {e} on {w:?}");
            assert_eq!(gen.weight(&w).unwrap(), want, "generalized derivation {e} on {w:?}");
        }
    }
    assert!(checked > 100);
}

#[test]
fn functions_through_generalized_derivation() {
    let e = pi("(a+a+b)^2");
    let oracle = brute_force_language(&e, &['a', 'b'], 3).unwrap();
    let gen = derivation_automaton::<FunExprs<i64>, char>(&e);
    for w in all_words(&['a', 'b'], 3) {
        assert_eq!(gen.weight(&w).unwrap(), oracle_weight(&oracle, &w), "{w:?}");
    }
    assert_eq!(gen.weight(&['a']).unwrap(), 4);
    let b = pb("(a.b*) -> (a.b)");
    let oracle = brute_force_language(&b, &['a', 'b'], 4).unwrap();
    let alt = derivation_automaton::<BoolExprs, char>(&b);
    let sets = derivation_automaton::<Sets, char>(&b);
    for w in all_words(&['a', 'b'], 4) {
        let want = oracle_weight(&oracle, &w);
        assert_eq!(alt.weight(&w).unwrap(), want, "{w:?}");
        assert_eq!(sets.weight(&w).unwrap(), want, "{w:?}");
    }
    assert!(!alt.weight(&chars("abb")).unwrap());
    assert!(alt.weight(&chars("ab")).unwrap());
}

#[test]
fn antimirov_bound() {
    for seed in 0..100 {
        let e: BExpr = random_expression(seed, 7, &['a', 'b'], Palette::SIMPLE);
        let aut = derivation_automaton::<Sets, char>(&e);
        let ex = explore(&aut, &['a', 'b'], Caps::states(10_000)).unwrap();
        assert!(ex.states.len() <= e.symbol_count() + 1, "{e}: {} states", ex.states.len());
    }
}

#[test]
fn reversal_coherence() {
    for seed in 0..40 {
        let e: BExpr = random_expression(seed, 6, &['a', 'b'], Palette::SIMPLE);
        let fwd = brute_force_language(&e, &['a', 'b'], 5).unwrap();
        let (rev, _) = position_automaton::<Sets, char>(&e.reversed()).unwrap().unwrap();
        for w in all_words(&['a', 'b'], 5) {
            let mut r = w.clone();
            r.reverse();
            assert_eq!(rev.weight(&r).unwrap(), oracle_weight(&fwd, &w));
        }
    }
}
