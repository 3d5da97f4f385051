use super::{fold_holes, BottomUpDetTA, BottomUpStep};
use crate::algebra::{Elem, RankedSymbol, RankedTree};
use crate::containers::{sequence, Effect, FiniteSet, HasNeutral, Sets};
use crate::Result;
use std::collections::BTreeSet;
use std::sync::Arc;

/// Bottom-up automaton whose transitions produce containers of states.
pub struct BottomUpContainerTA<E: Effect, Var, S: Elem> {
    pub init: Arc<dyn Fn(&Var) -> Result<E::C<S>> + Send + Sync>,
    pub delta: BottomUpStep<S, E::C<S>>,
    pub finality: Arc<dyn Fn(&S) -> Result<E::Out> + Send + Sync>,
}

impl<E: Effect, Var, S: Elem> Clone for BottomUpContainerTA<E, Var, S> {
    fn clone(&self) -> Self {
        BottomUpContainerTA { init: self.init.clone(), delta: self.delta.clone(), finality: self.finality.clone() }
    }
}

impl<E: Effect, Var: 'static, S: Elem> BottomUpContainerTA<E, Var, S> {
    pub fn new(
        init: impl Fn(&Var) -> Result<E::C<S>> + Send + Sync + 'static,
        delta: impl Fn(&RankedSymbol, &[S]) -> Result<E::C<S>> + Send + Sync + 'static,
        finality: impl Fn(&S) -> Result<E::Out> + Send + Sync + 'static,
    ) -> Self {
        BottomUpContainerTA { init: Arc::new(init), delta: Arc::new(delta), finality: Arc::new(finality) }
    }

    /// Every child configuration is expanded into all tuples of states
    /// before the transition fires.
    pub fn config_with_vars(&self, t: &RankedTree, vars: &[Var]) -> Result<E::C<S>> {
        fold_holes(t, vars, &mut |_, v| (self.init)(v), &mut |f, cs: Vec<E::C<S>>| {
            let tuples = sequence::<E, S>(&cs)?;
            E::bind(&tuples, &mut |qs: &Vec<S>| (self.delta)(f, qs))
        })
    }

    pub fn weight_with_vars(&self, t: &RankedTree, vars: &[Var]) -> Result<E::Out> {
        let c = self.config_with_vars(t, vars)?;
        E::weigh(&c, &mut |s| (self.finality)(s))
    }

    pub fn weight(&self, t: &RankedTree) -> Result<E::Out> {
        self.weight_with_vars(t, &[])
    }
}

impl<E: HasNeutral, Var: 'static, S: Elem> BottomUpContainerTA<E, Var, S> {
    /// Automaton whose variables start from the empty configuration.
    pub fn closed(
        delta: impl Fn(&RankedSymbol, &[S]) -> Result<E::C<S>> + Send + Sync + 'static,
        finality: impl Fn(&S) -> Result<E::Out> + Send + Sync + 'static,
    ) -> Self {
        Self::new(|_| Ok(E::neutral()), delta, finality)
    }
}

/// Subset construction: a tuple of subsets goes to the union of the
/// targets of all member tuples, and a subset is final when one of its
/// members is. A variable starts from the subset of its initial states.
pub fn bu_determinize<Var: 'static, S: Elem>(
    a: &BottomUpContainerTA<Sets, Var, S>,
) -> BottomUpDetTA<Var, FiniteSet<S>, bool> {
    let init = a.init.clone();
    let delta = a.delta.clone();
    let fin = a.finality.clone();
    BottomUpDetTA {
        init: Arc::new(move |v| init(v)),
        delta: Arc::new(move |f, qs: &[FiniteSet<S>]| {
            let tuples = sequence::<Sets, S>(qs)?;
            let mut out = BTreeSet::new();
            for t in tuples.iter() {
                out.extend(delta(f, t)?.0);
            }
            Ok(FiniteSet(out))
        }),
        finality: Arc::new(move |q: &FiniteSet<S>| {
            for s in q.iter() {
                if fin(s)? {
                    return Ok(true);
                }
            }
            Ok(false)
        }),
    }
}
