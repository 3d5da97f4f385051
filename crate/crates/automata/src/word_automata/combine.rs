use super::WordAutomaton;
use crate::algebra::{Either, Elem, StarSemiring};
use crate::containers::{pair, Effect, Semimodule};
use crate::{Error, Result};

/// Sum of two automata over disjoint states: weights are added.
pub fn union<E: Semimodule, Sym: Elem, S1: Elem, S2: Elem>(
    a: &WordAutomaton<E, Sym, S1>,
    b: &WordAutomaton<E, Sym, S2>,
) -> WordAutomaton<E, Sym, Either<S1, S2>> {
    let (d1, d2, f1, f2) = (a.delta.clone(), b.delta.clone(), a.finality.clone(), b.finality.clone());
    let initial = E::combine(
        E::map(&a.initial, &mut |s| Either::Left(s.clone())),
        E::map(&b.initial, &mut |s| Either::Right(s.clone())),
    );
    WordAutomaton::new(
        initial,
        move |sym, s| match s {
            Either::Left(p) => Ok(E::map(&d1(sym, p)?, &mut |q| Either::Left(q.clone()))),
            Either::Right(p) => Ok(E::map(&d2(sym, p)?, &mut |q| Either::Right(q.clone()))),
        },
        move |s| match s {
            Either::Left(p) => f1(p),
            Either::Right(p) => f2(p),
        },
    )
}

/// Weighted sum; the same construction as [`union`].
pub fn sum_weighted<E: Semimodule, Sym: Elem, S1: Elem, S2: Elem>(
    a: &WordAutomaton<E, Sym, S1>,
    b: &WordAutomaton<E, Sym, S2>,
) -> WordAutomaton<E, Sym, Either<S1, S2>> {
    union(a, b)
}

/// Product automaton: weights are multiplied. Only for containers where
/// pairing multiplies weights.
pub fn hadamard<E: Semimodule, Sym: Elem, S1: Elem, S2: Elem>(
    a: &WordAutomaton<E, Sym, S1>,
    b: &WordAutomaton<E, Sym, S2>,
) -> Result<WordAutomaton<E, Sym, (S1, S2)>> {
    if !E::COMMUTATIVE {
        return Err(Error::Unsupported(format!("product of {} automata", E::name())));
    }
    let (d1, d2, f1, f2) = (a.delta.clone(), b.delta.clone(), a.finality.clone(), b.finality.clone());
    Ok(WordAutomaton::new(
        pair::<E, S1, S2>(&a.initial, &b.initial),
        move |sym, (p, q)| Ok(pair::<E, S1, S2>(&d1(sym, p)?, &d2(sym, q)?)),
        move |(p, q)| Ok(f1(p)?.times(&f2(q)?)),
    ))
}

/// Boolean intersection; the same construction as [`hadamard`].
pub fn intersection<E: Semimodule, Sym: Elem, S1: Elem, S2: Elem>(
    a: &WordAutomaton<E, Sym, S1>,
    b: &WordAutomaton<E, Sym, S2>,
) -> Result<WordAutomaton<E, Sym, (S1, S2)>> {
    hadamard(a, b)
}

/// Empty-word weight.
pub fn epsilon_weight<E: Effect, Sym: Elem, S: Elem>(a: &WordAutomaton<E, Sym, S>) -> Result<E::Out> {
    a.weight(&[])
}

/// Concatenation. States of `a` gain `b`'s one-letter configuration
/// scaled by their finality, and their finality is scaled by `b`'s
/// empty-word weight.
pub fn concatenate<E: Semimodule, Sym: Elem, S1: Elem, S2: Elem>(
    a: &WordAutomaton<E, Sym, S1>,
    b: &WordAutomaton<E, Sym, S2>,
) -> Result<WordAutomaton<E, Sym, Either<S1, S2>>> {
    let eps2 = epsilon_weight(b)?;
    let (d1, d2, f1, f2) = (a.delta.clone(), b.delta.clone(), a.finality.clone(), b.finality.clone());
    let b2 = b.clone();
    let f1b = f1.clone();
    Ok(WordAutomaton::new(
        E::map(&a.initial, &mut |s| Either::Left(s.clone())),
        move |sym, s| match s {
            Either::Left(p) => {
                let own = E::map(&d1(sym, p)?, &mut |q| Either::Left(q.clone()));
                let jump = E::map(&b2.get_config(std::slice::from_ref(sym))?, &mut |q| Either::Right(q.clone()));
                Ok(E::combine(own, E::act(&f1(p)?, jump)))
            }
            Either::Right(q) => Ok(E::map(&d2(sym, q)?, &mut |r| Either::Right(r.clone()))),
        },
        move |s| match s {
            Either::Left(p) => Ok(f1b(p)?.times(&eps2)),
            Either::Right(q) => f2(q),
        },
    ))
}

/// Kleene star with a fresh initial state `None`.
pub fn kleene_star<E: Semimodule, Sym: Elem, S: Elem>(
    a: &WordAutomaton<E, Sym, S>,
) -> Result<WordAutomaton<E, Sym, Option<S>>> {
    let s = epsilon_weight(a)?.star()?;
    let (d, f) = (a.delta.clone(), a.finality.clone());
    let a2 = a.clone();
    let inits_by = move |sym: &Sym| -> Result<E::C<Option<S>>> {
        Ok(E::map(&a2.get_config(std::slice::from_ref(sym))?, &mut |q| Some(q.clone())))
    };
    let f2 = f.clone();
    let s2 = s.clone();
    Ok(WordAutomaton::new(
        E::act(&s, E::unit(None)),
        move |sym, st| match st {
            None => inits_by(sym),
            Some(p) => {
                let restart = E::act(&f(p)?, inits_by(sym)?);
                Ok(E::combine(restart, E::map(&d(sym, p)?, &mut |q| Some(q.clone()))))
            }
        },
        move |st| match st {
            None => Ok(E::Out::one()),
            Some(p) => Ok(f2(p)?.times(&s2)),
        },
    ))
}

/// Left scalar on the initial configuration.
pub fn scale_left<E: Semimodule, Sym: Elem, S: Elem>(k: &E::Out, a: &WordAutomaton<E, Sym, S>) -> WordAutomaton<E, Sym, S> {
    WordAutomaton { initial: E::act(k, a.initial.clone()), ..a.clone() }
}

/// Right scalar on the final weights.
pub fn scale_right<E: Semimodule, Sym: Elem, S: Elem>(a: &WordAutomaton<E, Sym, S>, k: &E::Out) -> WordAutomaton<E, Sym, S> {
    let f = a.finality.clone();
    let k = k.clone();
    WordAutomaton { finality: std::sync::Arc::new(move |s| Ok(f(s)?.times(&k))), ..a.clone() }
}

/// Two automata over possibly different containers read in lockstep.
pub struct ParallelProduct<E1: Effect, E2: Effect, Sym: Elem, S1: Elem, S2: Elem> {
    pub first: WordAutomaton<E1, Sym, S1>,
    pub second: WordAutomaton<E2, Sym, S2>,
}

pub fn parallel_product<E1: Effect, E2: Effect, Sym: Elem, S1: Elem, S2: Elem>(
    first: &WordAutomaton<E1, Sym, S1>,
    second: &WordAutomaton<E2, Sym, S2>,
) -> ParallelProduct<E1, E2, Sym, S1, S2> {
    ParallelProduct { first: first.clone(), second: second.clone() }
}

impl<E1: Effect, E2: Effect, Sym: Elem, S1: Elem, S2: Elem> ParallelProduct<E1, E2, Sym, S1, S2> {
    pub fn get_config(&self, word: &[Sym]) -> Result<(E1::C<S1>, E2::C<S2>)> {
        Ok((self.first.get_config(word)?, self.second.get_config(word)?))
    }

    pub fn weight(&self, word: &[Sym]) -> Result<(E1::Out, E2::Out)> {
        Ok((self.first.weight(word)?, self.second.weight(word)?))
    }
}
