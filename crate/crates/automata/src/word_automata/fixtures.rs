//! Automata used throughout the examples and tests.

use super::algorithms::{bool_combination, complement, dfa_and, dfa_or, modular_dfa, Afa, Dfa, Nfa};
use super::pda::{make_pda, PushdownAutomaton};
use super::WordAutomaton;
use crate::containers::{BoolExpr, FiniteSet, LinComb, Linear, Optional, Sets};
use crate::{Error, Result};

/// Mod-2 and not mod-4, or mod-8, as nested binary products.
pub fn a4_products() -> Dfa<char, ((usize, usize), usize)> {
    let (a1, a2, a3) = (modular_dfa(2, &[0]), modular_dfa(4, &[0]), modular_dfa(8, &[0]));
    dfa_or(&dfa_and(&a1, &complement(&a2)), &a3)
}

/// The same language through an n-ary boolean combination.
pub fn a4_combination() -> Dfa<char, Vec<usize>> {
    let auts = [modular_dfa(2, &[0]), modular_dfa(4, &[0]), modular_dfa(8, &[0])];
    bool_combination(|b| (b[0] && !b[1]) || b[2], &auts)
}

/// Family whose subset construction reaches all `2^n` subsets: every state
/// initial, `0` final, `a` rotates, `b` loops everywhere but on `0`.
pub fn exponential_nfa(n: usize) -> Nfa<char, usize> {
    WordAutomaton::new(
        (0..n).collect(),
        move |sym, p| match sym {
            'a' => Ok(FiniteSet::singleton((p + 1) % n)),
            'b' if *p != 0 => Ok(FiniteSet::singleton(*p)),
            'b' => Ok(FiniteSet::new()),
            c => Err(Error::UnknownSymbol(c.to_string())),
        },
        |p| Ok(*p == 0),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Pqr {
    P,
    Q,
    R,
}

impl crate::algebra::Label for Pqr {
    fn label(&self) -> String {
        format!("{self:?}")
    }
}

/// Weighted automaton over the integers with states P, Q, R and symbols
/// A, B, C.
pub fn weighted_pqr() -> WordAutomaton<Linear<i64>, char, Pqr> {
    use Pqr::*;
    let f1: LinComb<i64, Pqr> = [(2, P), (3, Q), (5, R)].into_iter().collect();
    let f2: LinComb<i64, Pqr> = [(4, P), (-1, R)].into_iter().collect();
    let f3: LinComb<i64, Pqr> = [(3, Q), (5, R)].into_iter().collect();
    let start = f1.clone();
    WordAutomaton::new(
        start,
        move |sym, s| match (sym, s) {
            ('A', P) => Ok(f1.clone()),
            ('B', P) | ('A', Q) => Ok(f2.clone()),
            ('B', R) => Ok(f3.clone()),
            ('A' | 'B' | 'C', _) => Ok(LinComb::zero()),
            (c, _) => Err(Error::UnknownSymbol(c.to_string())),
        },
        |s| Ok(match s {
            P => 5,
            Q => 2,
            R => 0,
        }),
    )
}

/// Alternating automaton accepting the words containing every letter of
/// `letters`. States are `Some(letter)` (still waiting) and `None` (seen).
pub fn afa_all_letters(letters: &[char]) -> Afa<char, Option<char>> {
    let initial = BoolExpr::and_all(letters.iter().map(|c| BoolExpr::var(Some(*c))).collect());
    WordAutomaton::new(
        initial,
        |x, s| Ok(match s {
            Some(y) if y == x => BoolExpr::var(None),
            other => BoolExpr::var(*other),
        }),
        |s| Ok(s.is_none()),
    )
}

/// Deterministic pushdown automaton accepting `A^n B^(n+1)` by empty stack.
pub fn dpda() -> PushdownAutomaton<Optional, (), char, u8> {
    make_pda(Some(0u8), (), |sym, s, _| {
        Ok(Some(match (sym, s) {
            ('A', 0) => (vec![(), ()], 0),
            ('B', 0) | ('B', 1) => (vec![], 1),
            ('A' | 'B', _) => (vec![()], 2),
            (c, _) => return Err(Error::UnknownSymbol(c.to_string())),
        }))
    }, |_| true)
}

/// Nondeterministic pushdown automaton accepting `A^n B^(n+1)` and
/// `A^n B^(2n+1)` by empty stack.
pub fn npda() -> PushdownAutomaton<Sets, (), char, u8> {
    make_pda(FiniteSet::singleton(0u8), (), |sym, s, _| {
        let moves: Vec<(Vec<()>, u8)> = match (sym, s) {
            ('A', 0) => vec![(vec![(), ()], 1), (vec![(), (), ()], 2)],
            ('B', 0..=3) => vec![(vec![], 3)],
            ('A', 1) => vec![(vec![(), ()], 1)],
            ('A', 2) => vec![(vec![(), (), ()], 2)],
            ('A' | 'B', _) => vec![],
            (c, _) => return Err(Error::UnknownSymbol(c.to_string())),
        };
        Ok(moves.into_iter().collect())
    }, |s| *s == 0)
}

/// Membership oracles for the pushdown languages.
pub fn is_an_bm(word: &[char], k: usize) -> bool {
    let n = word.iter().take_while(|c| **c == 'A').count();
    let rest = &word[n..];
    rest.iter().all(|c| *c == 'B') && rest.len() == k * n + 1
}

pub fn parse_word(text: &str, alphabet: &[char]) -> Result<Vec<char>> {
    text.chars()
        .enumerate()
        .map(|(i, c)| if alphabet.contains(&c) { Ok(c) } else { Err(Error::parse(i, format!("unknown symbol {c:?}"))) })
        .collect()
}
