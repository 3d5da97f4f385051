use super::ast::{AtomOps, EnrichedExpr};
use crate::algebra::{Either, Elem, StarSemiring};
use crate::containers::{sequence, Effect, Semimodule};
use crate::Result;

/// Weight of the runs of `e` that consist of the variable `v` alone.
pub fn nullable_var<W: StarSemiring, A: AtomOps>(v: &A::Var, e: &EnrichedExpr<A>) -> Result<W> {
    Ok(match e {
        EnrichedExpr::Tensor(_) | EnrichedExpr::Empty => W::zero(),
        EnrichedExpr::Var(w) => {
            if w == v {
                W::one()
            } else {
                W::zero()
            }
        }
        EnrichedExpr::Sum(a, b) => nullable_var::<W, A>(v, a)?.plus(&nullable_var(v, b)?),
        EnrichedExpr::Sub(w, a, b) => {
            if w == v {
                nullable_var::<W, A>(v, a)?.times(&nullable_var(v, b)?)
            } else {
                nullable_var::<W, A>(v, b)?.plus(&nullable_var::<W, A>(v, a)?.times(&nullable_var(w, b)?))
            }
        }
        EnrichedExpr::Star(w, a) => {
            if w == v {
                nullable_var::<W, A>(v, a)?.star()?
            } else {
                nullable_var::<W, A>(v, a)?.times(&nullable_var::<W, A>(w, a)?.star()?)
            }
        }
    })
}

/// Variables at which the runs of `e` start.
pub fn variables_of<E: Semimodule, A: AtomOps>(e: &EnrichedExpr<A>) -> Result<E::C<A::Var>> {
    Ok(match e {
        EnrichedExpr::Empty | EnrichedExpr::Tensor(_) => E::neutral(),
        EnrichedExpr::Var(v) => E::unit(v.clone()),
        EnrichedExpr::Sum(a, b) => E::combine(variables_of::<E, A>(a)?, variables_of::<E, A>(b)?),
        EnrichedExpr::Sub(v, a, b) => {
            let inner = variables_of::<E, A>(a)?;
            E::bind(&variables_of::<E, A>(b)?, &mut |w| Ok(if w == v { inner.clone() } else { E::unit(w.clone()) }))?
        }
        EnrichedExpr::Star(v, a) => {
            let k = nullable_var::<E::Out, A>(v, a)?.star()?;
            E::act_right(E::combine(E::unit(v.clone()), variables_of::<E, A>(a)?), &k)
        }
    })
}

/// Symbols ending the runs of `e`.
pub fn final_symbols<E: Semimodule, A: AtomOps>(e: &EnrichedExpr<A>) -> Result<E::C<A::Sym>> {
    Ok(match e {
        EnrichedExpr::Empty | EnrichedExpr::Var(_) => E::neutral(),
        EnrichedExpr::Tensor(a) => a.extract_final::<E>(),
        EnrichedExpr::Sum(a, b) => E::combine(final_symbols::<E, A>(a)?, final_symbols::<E, A>(b)?),
        EnrichedExpr::Sub(v, a, b) => {
            let k = nullable_var::<E::Out, A>(v, b)?;
            E::combine(E::act_right(final_symbols::<E, A>(a)?, &k), final_symbols::<E, A>(b)?)
        }
        EnrichedExpr::Star(v, a) => {
            let k = nullable_var::<E::Out, A>(v, a)?.star()?;
            E::act_right(final_symbols::<E, A>(a)?, &k)
        }
    })
}

/// Weight with which the runs of `e` end at `s`.
pub fn final_weight<W: StarSemiring, A: AtomOps>(s: &A::Sym, e: &EnrichedExpr<A>) -> Result<W> {
    Ok(match e {
        EnrichedExpr::Empty | EnrichedExpr::Var(_) => W::zero(),
        EnrichedExpr::Tensor(a) => a.final_weight(s),
        EnrichedExpr::Sum(a, b) => final_weight::<W, A>(s, a)?.plus(&final_weight(s, b)?),
        EnrichedExpr::Sub(v, a, b) => final_weight::<W, A>(s, a)?.times(&nullable_var(v, b)?).plus(&final_weight(s, b)?),
        EnrichedExpr::Star(v, a) => final_weight::<W, A>(s, a)?.times(&nullable_var::<W, A>(v, a)?.star()?),
    })
}

/// Replaces every `Left(v)` in the vectors of `c` by the elements of
/// `to_add`.
pub fn substitute<E: Effect, V: Elem, S: Elem>(
    v: &V,
    to_add: &E::C<Either<V, S>>,
    c: &E::C<Vec<Either<V, S>>>,
) -> Result<E::C<Vec<Either<V, S>>>> {
    E::bind(c, &mut |vect: &Vec<Either<V, S>>| {
        let parts: Vec<E::C<Either<V, S>>> = vect
            .iter()
            .map(|x| match x {
                Either::Left(w) if w == v => to_add.clone(),
                other => E::unit(other.clone()),
            })
            .collect();
        sequence::<E, Either<V, S>>(&parts)
    })
}

type Predecessors<E, A> = <E as Effect>::C<Vec<Either<<A as AtomOps>::Var, <A as AtomOps>::Sym>>>;

fn finals_and_vars<E: Semimodule, A: AtomOps>(e: &EnrichedExpr<A>) -> Result<E::C<Either<A::Var, A::Sym>>> {
    Ok(E::combine(
        E::map(&final_symbols::<E, A>(e)?, &mut |s| Either::Right(s.clone())),
        E::map(&variables_of::<E, A>(e)?, &mut |v| Either::Left(v.clone())),
    ))
}

/// Vectors of what may sit under the symbol `p` in the runs of a linear
/// expression: one entry per argument, a variable or a symbol.
pub fn predecessors<E: Semimodule, A: AtomOps>(p: &A::Sym, e: &EnrichedExpr<A>) -> Result<Predecessors<E, A>> {
    Ok(match e {
        EnrichedExpr::Empty | EnrichedExpr::Var(_) => E::neutral(),
        EnrichedExpr::Tensor(a) => {
            if a.symbol() == p {
                E::unit(a.vars().into_iter().map(Either::Left).collect())
            } else {
                E::neutral()
            }
        }
        EnrichedExpr::Sum(a, b) => E::combine(predecessors::<E, A>(p, a)?, predecessors::<E, A>(p, b)?),
        EnrichedExpr::Sub(v, a, b) => {
            let to_add = finals_and_vars::<E, A>(a)?;
            E::combine(predecessors::<E, A>(p, a)?, substitute::<E, _, _>(v, &to_add, &predecessors::<E, A>(p, b)?)?)
        }
        EnrichedExpr::Star(v, a) => {
            let k = nullable_var::<E::Out, A>(v, a)?.star()?;
            let to_add = E::combine(
                E::map(&final_symbols::<E, A>(a)?, &mut |s| Either::Right(s.clone())),
                E::map(&E::combine(E::unit(v.clone()), variables_of::<E, A>(a)?), &mut |w| Either::Left(w.clone())),
            );
            substitute::<E, _, _>(v, &E::act_right(to_add, &k), &predecessors::<E, A>(p, a)?)?
        }
    })
}
