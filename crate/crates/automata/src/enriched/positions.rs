use super::analysis::{final_symbols, final_weight, nullable_var, predecessors, variables_of};
use super::ast::{AtomOps, EnrichedExpr, TreeExp, WordAtom, WordExp};
use crate::algebra::{Either, Elem, Positioned, RankedSymbol};
use crate::containers::{Effect, Semimodule};
use crate::tree_automata::TopDownContainerTA;
use crate::word_automata::WordAutomaton;
use crate::Result;
use std::collections::BTreeMap;
use std::sync::Arc;

pub type WordPositionState<S> = Either<(), Positioned<S>>;
pub type TreePositionState<V> = Either<V, Positioned<RankedSymbol>>;

type PredTable<E, A> = BTreeMap<
    <A as AtomOps>::Sym,
    <E as Effect>::C<Vec<Either<<A as AtomOps>::Var, <A as AtomOps>::Sym>>>,
>;

fn predecessor_table<E: Semimodule, A: AtomOps>(e: &EnrichedExpr<A>) -> Result<PredTable<E, A>> {
    e.symbols().into_iter().map(|p| Ok((p.clone(), predecessors::<E, A>(&p, e)?))).collect()
}

fn initial<E: Semimodule, A: AtomOps>(e: &EnrichedExpr<A>) -> Result<E::C<Either<A::Var, A::Sym>>> {
    Ok(E::combine(
        E::map(&final_symbols::<E, A>(e)?, &mut |s| Either::Right(s.clone())),
        E::map(&variables_of::<E, A>(e)?, &mut |v| Either::Left(v.clone())),
    ))
}

/// Position automaton of a word expression built on its mirror image:
/// the predecessors there are the successors in the expression. A state
/// `p` is about to read the symbol of `p`, and `Left(())` is the end.
pub fn word_position_automaton<E: Semimodule, S: Elem>(
    e: &WordExp<S>,
) -> Result<WordAutomaton<E, S, WordPositionState<S>>> {
    let lin = e.reversed().linearize();
    let table = Arc::new(predecessor_table::<E, WordAtom<Positioned<S>>>(&lin)?);
    let init = initial::<E, WordAtom<Positioned<S>>>(&lin)?;
    Ok(WordAutomaton::new(
        init,
        move |x: &S, st: &WordPositionState<S>| {
            Ok(match st {
                Either::Right(p) if p.base == *x => match table.get(p) {
                    Some(c) => E::map(c, &mut |v| v[0].clone()),
                    None => E::neutral(),
                },
                _ => E::neutral(),
            })
        },
        |st: &WordPositionState<S>| Ok(end_weight::<E, S>(st)),
    ))
}

fn end_weight<E: Semimodule, S>(st: &WordPositionState<S>) -> E::Out {
    use crate::algebra::StarSemiring;
    match st {
        Either::Left(()) => E::Out::one(),
        Either::Right(_) => E::Out::zero(),
    }
}

/// Position automaton read forward: successors are recovered by
/// inverting the predecessor relation of the expression itself.
pub fn word_position_automaton_forward<E: Semimodule, S: Elem>(
    e: &WordExp<S>,
) -> Result<WordAutomaton<E, S, WordPositionState<S>>> {
    let lin = e.linearize();
    let table = predecessor_table::<E, WordAtom<Positioned<S>>>(&lin)?;
    let succs_of = |p: &WordPositionState<S>| -> Result<E::C<WordPositionState<S>>> {
        let mut acc = E::neutral();
        for (q, preds) in &table {
            let c = E::bind(preds, &mut |v: &Vec<WordPositionState<S>>| {
                Ok(if v[0] == *p { E::unit(Either::Right(q.clone())) } else { E::neutral() })
            })?;
            acc = E::combine(acc, c);
        }
        Ok(acc)
    };
    let null = nullable_var::<E::Out, WordAtom<Positioned<S>>>(&(), &lin)?;
    let init = E::combine(succs_of(&Either::Left(()))?, E::act(&null, E::unit(Either::Left(()))));
    let mut next: BTreeMap<Positioned<S>, E::C<WordPositionState<S>>> = BTreeMap::new();
    for q in lin.symbols() {
        let w = final_weight::<E::Out, WordAtom<Positioned<S>>>(&q, &lin)?;
        let c = E::combine(E::act(&w, E::unit(Either::Left(()))), succs_of(&Either::Right(q.clone()))?);
        next.insert(q, c);
    }
    let next = Arc::new(next);
    Ok(WordAutomaton::new(
        init,
        move |x: &S, st: &WordPositionState<S>| {
            Ok(match st {
                Either::Right(p) if p.base == *x => next.get(p).cloned().unwrap_or_else(E::neutral),
                _ => E::neutral(),
            })
        },
        |st: &WordPositionState<S>| Ok(end_weight::<E, S>(st)),
    ))
}

/// Top-down position automaton: it starts from the root symbols and the
/// variables of the expression, a position reads its symbol into the
/// vectors of its predecessors, and a variable state pays its variable.
pub fn tree_position_automaton<E: Semimodule, V: Elem>(
    e: &TreeExp<V>,
) -> Result<TopDownContainerTA<E, V, TreePositionState<V>>> {
    let lin = e.linearize();
    let table = Arc::new(predecessor_table::<E, _>(&lin)?);
    let init = initial::<E, _>(&lin)?;
    Ok(TopDownContainerTA::new(
        init,
        move |x: &RankedSymbol, st: &TreePositionState<V>| {
            Ok(match st {
                Either::Right(p) if p.base == *x => table.get(p).cloned().unwrap_or_else(E::neutral),
                _ => E::neutral(),
            })
        },
        |st: &TreePositionState<V>| {
            Ok(match st {
                Either::Left(v) => E::unit(v.clone()),
                Either::Right(_) => E::neutral(),
            })
        },
    ))
}
