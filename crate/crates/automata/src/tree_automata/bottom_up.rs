use super::{fold_holes, BottomUpStep};
use crate::algebra::{RankedSymbol, RankedTree};
use crate::Result;
use std::sync::Arc;

/// Deterministic bottom-up automaton: every tuple of child states yields
/// one state.
pub struct BottomUpDetTA<Var, S, W> {
    pub init: Arc<dyn Fn(&Var) -> Result<S> + Send + Sync>,
    pub delta: BottomUpStep<S, S>,
    pub finality: Arc<dyn Fn(&S) -> Result<W> + Send + Sync>,
}

impl<Var, S, W> Clone for BottomUpDetTA<Var, S, W> {
    fn clone(&self) -> Self {
        BottomUpDetTA { init: self.init.clone(), delta: self.delta.clone(), finality: self.finality.clone() }
    }
}

impl<Var: 'static, S: Clone + 'static, W: 'static> BottomUpDetTA<Var, S, W> {
    pub fn new(
        init: impl Fn(&Var) -> S + Send + Sync + 'static,
        delta: impl Fn(&RankedSymbol, &[S]) -> Result<S> + Send + Sync + 'static,
        finality: impl Fn(&S) -> W + Send + Sync + 'static,
    ) -> Self {
        BottomUpDetTA { init: Arc::new(move |v| Ok(init(v))), delta: Arc::new(delta), finality: Arc::new(move |s| Ok(finality(s))) }
    }

    /// State reached at the root, holes reading `vars` in leaf order.
    pub fn state_with_vars(&self, t: &RankedTree, vars: &[Var]) -> Result<S> {
        fold_holes(t, vars, &mut |_, v| (self.init)(v), &mut |f, qs| (self.delta)(f, &qs))
    }

    pub fn weight_with_vars(&self, t: &RankedTree, vars: &[Var]) -> Result<W> {
        (self.finality)(&self.state_with_vars(t, vars)?)
    }

    /// Weight of a nullary tree.
    pub fn weight(&self, t: &RankedTree) -> Result<W> {
        self.weight_with_vars(t, &[])
    }

    /// The weight of `t` as a function of its k variables.
    pub fn weight_fn<'a>(&'a self, t: &'a RankedTree) -> impl Fn(&[Var]) -> Result<W> + 'a {
        move |vars| self.weight_with_vars(t, vars)
    }

    /// Same transitions, new finality.
    pub fn with_finality<W2>(&self, finality: impl Fn(&S) -> Result<W2> + Send + Sync + 'static) -> BottomUpDetTA<Var, S, W2> {
        BottomUpDetTA { init: self.init.clone(), delta: self.delta.clone(), finality: Arc::new(finality) }
    }
}

impl<Var: 'static, S: Clone + 'static> BottomUpDetTA<Var, S, bool> {
    pub fn recognizes(&self, t: &RankedTree) -> Result<bool> {
        self.weight(t)
    }

    /// Same automaton with negated finality.
    pub fn complement(&self) -> Self {
        let fin = self.finality.clone();
        self.with_finality(move |s| Ok(!fin(s)?))
    }
}
