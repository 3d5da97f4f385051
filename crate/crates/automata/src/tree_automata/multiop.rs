use super::fold_holes;
use crate::algebra::{Elem, Monoid, RankedSymbol, RankedTree};
use crate::{Error, Result};
use std::collections::BTreeMap;
use std::sync::Arc;

/// An n-ary operation on the weight monoid.
pub type MultiFun<M> = Arc<dyn Fn(&[M]) -> M + Send + Sync>;

/// Targets of a transition, each with the operation its run applies.
pub type StateFuns<S, M> = BTreeMap<S, MultiFun<M>>;

/// Bottom-up automaton whose transitions carry operations instead of
/// scalars: the weight of a run composes the operations met along it, and
/// the weight of a tree combines all runs in the monoid.
pub struct MultiOpBUTA<Var, S: Elem, M> {
    pub init: Arc<dyn Fn(&Var) -> StateFuns<S, M> + Send + Sync>,
    pub delta: Arc<dyn Fn(&RankedSymbol, &[S]) -> Result<StateFuns<S, M>> + Send + Sync>,
    pub finality: Arc<dyn Fn(&S) -> MultiFun<M> + Send + Sync>,
}

impl<Var, S: Elem, M> Clone for MultiOpBUTA<Var, S, M> {
    fn clone(&self) -> Self {
        MultiOpBUTA { init: self.init.clone(), delta: self.delta.clone(), finality: self.finality.clone() }
    }
}

impl<Var: 'static, S: Elem, M: Monoid + 'static> MultiOpBUTA<Var, S, M> {
    pub fn new(
        init: impl Fn(&Var) -> StateFuns<S, M> + Send + Sync + 'static,
        delta: impl Fn(&RankedSymbol, &[S]) -> Result<StateFuns<S, M>> + Send + Sync + 'static,
        finality: impl Fn(&S) -> MultiFun<M> + Send + Sync + 'static,
    ) -> Self {
        MultiOpBUTA { init: Arc::new(init), delta: Arc::new(delta), finality: Arc::new(finality) }
    }

    pub fn with_finality(&self, finality: impl Fn(&S) -> MultiFun<M> + Send + Sync + 'static) -> Self {
        MultiOpBUTA { init: self.init.clone(), delta: self.delta.clone(), finality: Arc::new(finality) }
    }

    /// Weight of `t` with its holes bound to `vars`, evaluated on the
    /// per-hole arguments `args`.
    pub fn weight_apply(&self, t: &RankedTree, vars: &[Var], args: &[M]) -> Result<M> {
        if args.len() != vars.len() {
            return Err(Error::Arity { expected: vars.len(), found: args.len() });
        }
        let values = fold_holes(
            t,
            vars,
            &mut |i, v| {
                Ok((self.init)(v).into_iter().map(|(s, g)| (s, g(std::slice::from_ref(&args[i])))).collect())
            },
            &mut |f, children: Vec<BTreeMap<S, M>>| self.fire(f, &children),
        )?;
        Ok(values.iter().fold(M::neutral(), |acc, (s, m)| acc.combine(&(self.finality)(s)(std::slice::from_ref(m)))))
    }

    /// Weight of a nullary tree.
    pub fn weight(&self, t: &RankedTree) -> Result<M> {
        self.weight_apply(t, &[], &[])
    }

    /// The weight of `t` with bound variables, as a function of one
    /// argument per hole.
    pub fn weight_fn<'a>(&'a self, t: &'a RankedTree, vars: &'a [Var]) -> impl Fn(&[M]) -> Result<M> + 'a {
        move |args| self.weight_apply(t, vars, args)
    }

    fn fire(&self, f: &RankedSymbol, children: &[BTreeMap<S, M>]) -> Result<BTreeMap<S, M>> {
        let mut tuples: Vec<(Vec<S>, Vec<M>)> = vec![(Vec::new(), Vec::new())];
        for c in children {
            let mut grown = Vec::new();
            for (qs, ms) in &tuples {
                for (q, m) in c {
                    let mut qs = qs.clone();
                    let mut ms = ms.clone();
                    qs.push(q.clone());
                    ms.push(m.clone());
                    grown.push((qs, ms));
                }
            }
            tuples = grown;
        }
        let mut out: BTreeMap<S, M> = BTreeMap::new();
        for (qs, ms) in tuples {
            for (s, g) in (self.delta)(f, &qs)? {
                let v = g(&ms);
                let merged = match out.remove(&s) {
                    Some(old) => old.combine(&v),
                    None => v,
                };
                out.insert(s, merged);
            }
        }
        Ok(out)
    }
}
