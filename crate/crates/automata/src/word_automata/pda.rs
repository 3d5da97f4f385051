use crate::algebra::Elem;
use crate::containers::{Effect, HasNeutral, StackContext};
use crate::Result;
use std::sync::Arc;

pub type StackTrans<C, Sym, S, G> =
    Arc<dyn Fn(&Sym, &S, &G) -> Result<<C as Effect>::C<(Vec<G>, S)>> + Send + Sync>;

/// Pushdown automaton: a word automaton whose configurations are stack
/// computations with effects in `C` (`Optional` for deterministic machines,
/// `Sets` for nondeterministic ones).
pub struct PushdownAutomaton<C: Effect, G: Elem, Sym: Elem, S: Elem> {
    pub initial: C::C<S>,
    pub start_symbol: G,
    pub trans: StackTrans<C, Sym, S, G>,
    pub finality: Arc<dyn Fn(&S) -> bool + Send + Sync>,
}

pub fn make_pda<C: Effect + HasNeutral, G: Elem, Sym: Elem, S: Elem>(
    initial: C::C<S>,
    start_symbol: G,
    trans: impl Fn(&Sym, &S, &G) -> Result<C::C<(Vec<G>, S)>> + Send + Sync + 'static,
    finality: impl Fn(&S) -> bool + Send + Sync + 'static,
) -> PushdownAutomaton<C, G, Sym, S> {
    PushdownAutomaton { initial, start_symbol, trans: Arc::new(trans), finality: Arc::new(finality) }
}

impl<C: Effect<Out = bool> + HasNeutral, G: Elem, Sym: Elem, S: Elem> PushdownAutomaton<C, G, Sym, S> {
    /// The stack computation reached by reading `word`.
    pub fn get_config(&self, word: &[Sym]) -> StackContext<C, G, S> {
        let mut ctx = StackContext::<C, G, S>::start(self.initial.clone(), vec![self.start_symbol.clone()]);
        for sym in word {
            let trans = self.trans.clone();
            let sym = sym.clone();
            ctx = ctx.bind(move |s| {
                let (trans, sym, s) = (trans.clone(), sym.clone(), s.clone());
                StackContext::rewrite_top(move |g| trans(&sym, &s, g))
            });
        }
        ctx
    }

    /// Runs on the empty stack (the start configuration ignores it) and
    /// returns the reachable (state, stack) pairs.
    pub fn run(&self, word: &[Sym]) -> Result<C::C<(S, Vec<G>)>> {
        self.get_config(word).run(&[])
    }

    /// Acceptance by empty stack.
    pub fn empty_stack_recognizes(&self, word: &[Sym]) -> Result<bool> {
        C::weigh(&self.run(word)?, &mut |(_, st)| Ok(st.is_empty()))
    }

    /// Acceptance by final state.
    pub fn final_state_recognizes(&self, word: &[Sym]) -> Result<bool> {
        let f = self.finality.clone();
        C::weigh(&self.run(word)?, &mut |(s, _)| Ok(f(s)))
    }
}
