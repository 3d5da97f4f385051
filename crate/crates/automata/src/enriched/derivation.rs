use super::analysis::{nullable_var, variables_of};
use super::ast::{AtomOps, EnrichedExpr, TreeExp, WordExp};
use crate::algebra::{Elem, RankedSymbol, StarSemiring};
use crate::containers::{Effect, Semimodule};
use crate::tree_automata::TopDownContainerTA;
use crate::word_automata::WordAutomaton;
use crate::Result;

/// Derivative by a symbol: the vectors of expressions left for the
/// arguments once a symbol ending the runs is removed.
pub fn enriched_derive<E: Semimodule, A: AtomOps>(x: &A::Sym, e: &EnrichedExpr<A>) -> Result<E::C<Vec<EnrichedExpr<A>>>> {
    Ok(match e {
        EnrichedExpr::Empty | EnrichedExpr::Var(_) => E::neutral(),
        EnrichedExpr::Tensor(a) => {
            if a.symbol() == x {
                E::unit(a.vars().into_iter().map(EnrichedExpr::Var).collect())
            } else {
                E::neutral()
            }
        }
        EnrichedExpr::Sum(a, b) => E::combine(enriched_derive::<E, A>(x, a)?, enriched_derive::<E, A>(x, b)?),
        EnrichedExpr::Sub(v, a, b) => {
            let k = nullable_var::<E::Out, A>(v, b)?;
            let left = E::act(&k, enriched_derive::<E, A>(x, a)?);
            let right = concat_expr::<E, A>(v, a, &enriched_derive::<E, A>(x, b)?);
            E::combine(left, right)
        }
        EnrichedExpr::Star(v, a) => {
            let k = nullable_var::<E::Out, A>(v, a)?.star()?;
            E::act(&k, concat_expr::<E, A>(v, e, &enriched_derive::<E, A>(x, a)?))
        }
    })
}

fn concat_expr<E: Effect, A: AtomOps>(
    v: &A::Var,
    e1: &EnrichedExpr<A>,
    c: &E::C<Vec<EnrichedExpr<A>>>,
) -> E::C<Vec<EnrichedExpr<A>>> {
    E::map(c, &mut |vect: &Vec<EnrichedExpr<A>>| {
        vect.iter().map(|x| EnrichedExpr::sub(v.clone(), e1.clone(), x.clone())).collect()
    })
}

/// State simplification for derivation automata: sums are flattened and
/// sorted (and deduplicated for idempotent weights); unless `strict`,
/// substitutions into a lone variable or into an expression without that
/// variable are resolved, and a star of nothing becomes its variable.
pub fn simplify<A: AtomOps>(e: &EnrichedExpr<A>, idempotent: bool, strict: bool) -> EnrichedExpr<A> {
    let rec = |x: &EnrichedExpr<A>| simplify(x, idempotent, strict);
    let e = match e {
        EnrichedExpr::Sum(a, b) => EnrichedExpr::sum(rec(a), rec(b)),
        EnrichedExpr::Sub(v, a, b) => {
            let (a, b) = (rec(a), rec(b));
            if strict {
                EnrichedExpr::sub(v.clone(), a, b)
            } else if b == EnrichedExpr::Var(v.clone()) {
                a
            } else if a == EnrichedExpr::Var(v.clone()) || !b.mentions(v) {
                b
            } else {
                EnrichedExpr::sub(v.clone(), a, b)
            }
        }
        EnrichedExpr::Star(v, a) => {
            let a = rec(a);
            if !strict && a == EnrichedExpr::Empty {
                EnrichedExpr::Var(v.clone())
            } else {
                EnrichedExpr::star(v.clone(), a)
            }
        }
        e => e.clone(),
    };
    e.normalize_with(idempotent)
}

fn norm<W: StarSemiring, A: AtomOps>(e: &EnrichedExpr<A>) -> EnrichedExpr<A> {
    simplify(e, W::idempotent(), false)
}

fn first<A: AtomOps>(v: &[EnrichedExpr<A>]) -> EnrichedExpr<A> {
    v.first().cloned().unwrap_or(EnrichedExpr::Empty)
}

/// Word automaton of derivatives taken at the end of the runs of the
/// mirror expression, so that words are read left to right.
pub fn word_derivation_automaton<E: Semimodule, S: Elem>(e: &WordExp<S>) -> WordAutomaton<E, S, WordExp<S>> {
    WordAutomaton::new(
        E::unit(norm::<E::Out, _>(&e.reversed())),
        |x: &S, st: &WordExp<S>| {
            let c = enriched_derive::<E, _>(x, st)?;
            Ok(E::map(&c, &mut |v| norm::<E::Out, _>(&first(v))))
        },
        |st: &WordExp<S>| nullable_var::<E::Out, _>(&(), st),
    )
}

/// Derivative of a word expression by its first symbol.
pub fn left_derive<E: Semimodule, S: Elem>(x: &S, e: &WordExp<S>) -> Result<E::C<WordExp<S>>> {
    Ok(match e {
        EnrichedExpr::Empty | EnrichedExpr::Var(_) => E::neutral(),
        EnrichedExpr::Tensor(a) => {
            if a.0 == *x {
                E::unit(WordExp::epsilon())
            } else {
                E::neutral()
            }
        }
        EnrichedExpr::Sum(a, b) => E::combine(left_derive::<E, S>(x, a)?, left_derive::<E, S>(x, b)?),
        EnrichedExpr::Sub(v, a, b) => {
            let first = E::map(&left_derive::<E, S>(x, a)?, &mut |r| WordExp::sub((), r.clone(), (**b).clone()));
            let k = nullable_var::<E::Out, _>(v, a)?;
            E::combine(first, E::act(&k, left_derive::<E, S>(x, b)?))
        }
        EnrichedExpr::Star(v, a) => {
            let k = nullable_var::<E::Out, _>(v, a)?.star()?;
            E::act(&k, E::map(&left_derive::<E, S>(x, a)?, &mut |r| WordExp::sub((), r.clone(), e.clone())))
        }
    })
}

/// Word automaton of left derivatives of the expression itself.
pub fn word_left_derivation_automaton<E: Semimodule, S: Elem>(e: &WordExp<S>) -> WordAutomaton<E, S, WordExp<S>> {
    WordAutomaton::new(
        E::unit(norm::<E::Out, _>(e)),
        |x: &S, st: &WordExp<S>| {
            let c = left_derive::<E, S>(x, st)?;
            Ok(E::map(&c, &mut |r| norm::<E::Out, _>(r)))
        },
        |st: &WordExp<S>| nullable_var::<E::Out, _>(&(), st),
    )
}

/// Top-down tree automaton whose states are expressions: a state reads a
/// symbol into the vector of its derivatives, and pays its variables at
/// the holes.
pub fn tree_derivation_automaton<E: Semimodule, V: Elem>(e: &TreeExp<V>) -> TopDownContainerTA<E, V, TreeExp<V>> {
    TopDownContainerTA::new(
        E::unit(norm::<E::Out, _>(e)),
        |x: &RankedSymbol, st: &TreeExp<V>| {
            let c = enriched_derive::<E, _>(x, st)?;
            Ok(E::map(&c, &mut |v: &Vec<TreeExp<V>>| v.iter().map(norm::<E::Out, _>).collect()))
        },
        |st: &TreeExp<V>| variables_of::<E, _>(st),
    )
}
