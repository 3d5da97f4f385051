use super::fold_holes;
use crate::algebra::{Elem, RankedSymbol, RankedTree, StarSemiring};
use crate::containers::{Effect, LinComb, Linear};
use crate::{Error, Result};
use std::sync::Arc;

type TopDownStep<E, S> = Arc<dyn Fn(&RankedSymbol, &S) -> Result<<E as Effect>::C<Vec<S>>> + Send + Sync>;

/// Top-down automaton: a state reading a symbol of arity n produces a
/// container of n-tuples of states, and a state at a hole pays its weight
/// toward the variable there.
pub struct TopDownContainerTA<E: Effect, Var: Elem, S: Elem> {
    pub initial: E::C<S>,
    pub delta: TopDownStep<E, S>,
    pub var_weight: Arc<dyn Fn(&S) -> Result<E::C<Var>> + Send + Sync>,
}

impl<E: Effect, Var: Elem, S: Elem> Clone for TopDownContainerTA<E, Var, S> {
    fn clone(&self) -> Self {
        TopDownContainerTA { initial: self.initial.clone(), delta: self.delta.clone(), var_weight: self.var_weight.clone() }
    }
}

impl<E, Var, S> TopDownContainerTA<E, Var, S>
where
    E: Effect<Out: StarSemiring>,
    Var: Elem,
    S: Elem,
{
    pub fn new(
        initial: E::C<S>,
        delta: impl Fn(&RankedSymbol, &S) -> Result<E::C<Vec<S>>> + Send + Sync + 'static,
        var_weight: impl Fn(&S) -> Result<E::C<Var>> + Send + Sync + 'static,
    ) -> Self {
        TopDownContainerTA { initial, delta: Arc::new(delta), var_weight: Arc::new(var_weight) }
    }

    /// Sum over runs of the product of transition and hole weights, the
    /// i-th hole being assigned `vars[i]`.
    pub fn weight_with_vars(&self, t: &RankedTree, vars: &[Var]) -> Result<E::Out> {
        let k = t.arity();
        if vars.len() != k {
            return Err(Error::Arity { expected: k, found: vars.len() });
        }
        self.run_all(t, Some(vars))
    }

    /// Weight with every hole accepting any variable; a plain scalar for
    /// nullary trees.
    pub fn weight(&self, t: &RankedTree) -> Result<E::Out> {
        self.run_all(t, None)
    }

    pub fn recognizes(&self, t: &RankedTree) -> Result<bool> {
        Ok(!self.weight(t)?.is_zero())
    }

    fn run_all(&self, t: &RankedTree, vars: Option<&[Var]>) -> Result<E::Out> {
        // the fold only numbers the holes: each subtree keeps its offset
        let holes: Vec<()> = vec![(); t.arity()];
        let numbered = fold_holes(t, &holes, &mut |i, _| Ok(Numbered::Hole(i)), &mut |f, cs| {
            Ok(Numbered::Node(f.clone(), cs))
        })?;
        E::weigh(&self.initial, &mut |s| self.run(&numbered, s, vars))
    }

    fn run(&self, t: &Numbered, s: &S, vars: Option<&[Var]>) -> Result<E::Out> {
        match t {
            Numbered::Hole(i) => {
                let c = (self.var_weight)(s)?;
                E::weigh(&c, &mut |v| {
                    Ok(match vars {
                        Some(vs) if vs[*i] != *v => E::Out::zero(),
                        _ => E::Out::one(),
                    })
                })
            }
            Numbered::Node(f, ts) => {
                let c = (self.delta)(f, s)?;
                E::weigh(&c, &mut |qs: &Vec<S>| {
                    if qs.len() != ts.len() {
                        return Err(Error::Arity { expected: ts.len(), found: qs.len() });
                    }
                    let mut acc = E::Out::one();
                    for (child, q) in ts.iter().zip(qs) {
                        if acc.is_zero() {
                            break;
                        }
                        acc = acc.times(&self.run(child, q, vars)?);
                    }
                    Ok(acc)
                })
            }
        }
    }
}

enum Numbered {
    Hole(usize),
    Node(RankedSymbol, Vec<Numbered>),
}

/// Counts occurrences of a pattern in `subject`: the states are the
/// subtrees of the subject, each starting with its number of occurrences,
/// a state `f(t1..tn)` reads `f` into `(t1..tn)`, and a hole matches
/// anything.
pub fn occurrence_automaton(subject: &RankedTree) -> Result<TopDownContainerTA<Linear<i64>, (), RankedTree>> {
    if !subject.is_nullary() {
        return Err(Error::NotNullary);
    }
    let initial: LinComb<i64, RankedTree> = subject.subtrees().into_iter().map(|s| (1, s.clone())).collect();
    Ok(TopDownContainerTA::new(
        initial,
        |f, s: &RankedTree| {
            Ok(match s {
                RankedTree::Node(g, ts) if g == f => LinComb::single(1, ts.clone()),
                _ => LinComb::zero(),
            })
        },
        |_| Ok(LinComb::single(1, ())),
    ))
}
