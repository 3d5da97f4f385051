use super::WordAutomaton;
use crate::algebra::Elem;
use crate::containers::{
    bool_expr_to_clauses, BoolExpr, BoolExprs, Clause, Effect, FiniteSet, Identity, Optional, Sets,
};
use crate::Result;
use std::sync::Arc;

pub type Dfa<Sym, S> = WordAutomaton<Identity, Sym, S>;
pub type Nfa<Sym, S> = WordAutomaton<Sets, Sym, S>;
pub type PartialDfa<Sym, S> = WordAutomaton<Optional, Sym, S>;
pub type Afa<Sym, S> = WordAutomaton<BoolExprs, Sym, S>;

/// Subset construction. The empty subset stays as an explicit sink.
pub fn determinize<Sym: Elem, S: Elem>(a: &Nfa<Sym, S>) -> Dfa<Sym, FiniteSet<S>> {
    let (d, f) = (a.delta.clone(), a.finality.clone());
    WordAutomaton::new(
        a.initial.clone(),
        move |sym, set: &FiniteSet<S>| Sets::bind(set, &mut |s| d(sym, s)),
        move |set| Sets::weigh(set, &mut |s| f(s)),
    )
}

/// Adds an absorbing, non-final sink (`None`) for missing transitions.
pub fn complete<Sym: Elem, S: Elem>(a: &PartialDfa<Sym, S>) -> Dfa<Sym, Option<S>> {
    let (d, f) = (a.delta.clone(), a.finality.clone());
    WordAutomaton::new(
        a.initial.clone(),
        move |sym, s: &Option<S>| match s {
            Some(s) => d(sym, s),
            None => Ok(None),
        },
        move |s| match s {
            Some(s) => f(s),
            None => Ok(false),
        },
    )
}

/// Subset construction where the empty subset is absence.
pub fn nfa_to_partial_dfa<Sym: Elem, S: Elem>(a: &Nfa<Sym, S>) -> PartialDfa<Sym, FiniteSet<S>> {
    let (d, f) = (a.delta.clone(), a.finality.clone());
    let nonempty = |s: FiniteSet<S>| if s.is_empty() { None } else { Some(s) };
    WordAutomaton::new(
        nonempty(a.initial.clone()),
        move |sym, set: &FiniteSet<S>| Ok(nonempty(Sets::bind(set, &mut |s| d(sym, s))?)),
        move |set| Sets::weigh(set, &mut |s| f(s)),
    )
}

/// Clause construction: states are conjunctions of AFA states, a clause
/// stepping to the DNF of the conjunction of its members' images.
pub fn afa_to_nfa<Sym: Elem, S: Elem>(a: &Afa<Sym, S>) -> Result<Nfa<Sym, Clause<S>>> {
    let (d, f) = (a.delta.clone(), a.finality.clone());
    let initial = bool_expr_to_clauses(&a.initial)?;
    Ok(WordAutomaton::new(
        initial,
        move |sym, c: &Clause<S>| {
            let parts = c.0.iter().map(|s| d(sym, s)).collect::<Result<Vec<_>>>()?;
            bool_expr_to_clauses(&BoolExpr::and_all(parts))
        },
        move |c| {
            for s in &c.0 {
                if !f(s)? {
                    return Ok(false);
                }
            }
            Ok(true)
        },
    ))
}

/// Deterministic automaton whose states are normalized formulas.
pub fn afa_to_complete_dfa<Sym: Elem, S: Elem>(a: &Afa<Sym, S>) -> Dfa<Sym, BoolExpr<S>> {
    let (d, f) = (a.delta.clone(), a.finality.clone());
    WordAutomaton::new(
        a.initial.normalize(),
        move |sym, e: &BoolExpr<S>| Ok(e.substitute(&mut |s| d(sym, s))?.normalize()),
        move |e| e.eval(&mut |s| f(s)),
    )
}

pub fn complement<Sym: Elem, S: Elem>(a: &Dfa<Sym, S>) -> Dfa<Sym, S> {
    let f = a.finality.clone();
    WordAutomaton { initial: a.initial.clone(), delta: a.delta.clone(), finality: Arc::new(move |s| Ok(!f(s)?)) }
}

/// Synchronized product of complete DFAs, accepting when `f` holds on the
/// component acceptances.
pub fn bool_combination<Sym: Elem, S: Elem>(
    f: impl Fn(&[bool]) -> bool + Send + Sync + 'static,
    auts: &[Dfa<Sym, S>],
) -> Dfa<Sym, Vec<S>> {
    let auts: Vec<Dfa<Sym, S>> = auts.to_vec();
    let initial: Vec<S> = auts.iter().map(|a| a.initial.clone()).collect();
    let auts2 = auts.clone();
    WordAutomaton::new(
        initial,
        move |sym, ss: &Vec<S>| auts.iter().zip(ss).map(|(a, s)| a.step(sym, s)).collect(),
        move |ss| {
            let bits = auts2.iter().zip(ss).map(|(a, s)| a.final_weight(s)).collect::<Result<Vec<_>>>()?;
            Ok(f(&bits))
        },
    )
}

/// Runs copies of `a` from each given state; accepts when any copy does.
pub fn to_k_dfa<Sym: Elem, S: Elem>(inits: Vec<S>, a: &Dfa<Sym, S>) -> Dfa<Sym, Vec<S>> {
    let copies = vec![a.clone(); inits.len()];
    let mut k = bool_combination(|bits| bits.iter().any(|b| *b), &copies);
    k.initial = inits;
    k
}

/// Length-modulo recognizer ignoring the symbols read: accepts words whose
/// length mod `m` is one of `accept`.
pub fn modular_dfa<Sym: Elem>(m: usize, accept: &[usize]) -> Dfa<Sym, usize> {
    let accept: Vec<usize> = accept.to_vec();
    WordAutomaton::new(0, move |_, s| Ok((s + 1) % m), move |s| Ok(accept.contains(s)))
}

/// Synchronized product of two complete DFAs with a binary acceptance rule.
pub fn dfa_product<Sym: Elem, S1: Elem, S2: Elem>(
    a: &Dfa<Sym, S1>,
    b: &Dfa<Sym, S2>,
    op: impl Fn(bool, bool) -> bool + Send + Sync + 'static,
) -> Dfa<Sym, (S1, S2)> {
    let (d1, d2, f1, f2) = (a.delta.clone(), b.delta.clone(), a.finality.clone(), b.finality.clone());
    WordAutomaton::new(
        (a.initial.clone(), b.initial.clone()),
        move |sym, (p, q)| Ok((d1(sym, p)?, d2(sym, q)?)),
        move |(p, q)| Ok(op(f1(p)?, f2(q)?)),
    )
}

pub fn dfa_and<Sym: Elem, S1: Elem, S2: Elem>(a: &Dfa<Sym, S1>, b: &Dfa<Sym, S2>) -> Dfa<Sym, (S1, S2)> {
    dfa_product(a, b, |x, y| x && y)
}

pub fn dfa_or<Sym: Elem, S1: Elem, S2: Elem>(a: &Dfa<Sym, S1>, b: &Dfa<Sym, S2>) -> Dfa<Sym, (S1, S2)> {
    dfa_product(a, b, |x, y| x || y)
}
