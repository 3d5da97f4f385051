use crate::algebra::Elem;
use crate::containers::Effect;
use crate::Result;
use std::collections::HashMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, Mutex};

pub type Delta<E, Sym, S> =
    Arc<dyn Fn(&Sym, &S) -> Result<<E as Effect>::C<S>> + Send + Sync>;
pub type Finality<E, S> = Arc<dyn Fn(&S) -> Result<<E as Effect>::Out> + Send + Sync>;

/// A word automaton whose transitions land in the container `E`.
pub struct WordAutomaton<E: Effect, Sym: Elem, S: Elem> {
    pub initial: E::C<S>,
    pub delta: Delta<E, Sym, S>,
    pub finality: Finality<E, S>,
}

impl<E: Effect, Sym: Elem, S: Elem> Clone for WordAutomaton<E, Sym, S> {
    fn clone(&self) -> Self {
        WordAutomaton {
            initial: self.initial.clone(),
            delta: self.delta.clone(),
            finality: self.finality.clone(),
        }
    }
}

impl<E: Effect, Sym: Elem, S: Elem> WordAutomaton<E, Sym, S> {
    pub fn new(
        initial: E::C<S>,
        delta: impl Fn(&Sym, &S) -> Result<E::C<S>> + Send + Sync + 'static,
        finality: impl Fn(&S) -> Result<E::Out> + Send + Sync + 'static,
    ) -> Self {
        WordAutomaton { initial, delta: Arc::new(delta), finality: Arc::new(finality) }
    }

    pub fn step(&self, sym: &Sym, s: &S) -> Result<E::C<S>> {
        (self.delta)(sym, s)
    }

    pub fn final_weight(&self, s: &S) -> Result<E::Out> {
        (self.finality)(s)
    }

    /// Extends a configuration by reading a word.
    pub fn read(&self, from: &E::C<S>, word: &[Sym]) -> Result<E::C<S>> {
        let mut c = from.clone();
        for sym in word {
            c = E::bind(&c, &mut |s| (self.delta)(sym, s))?;
        }
        Ok(c)
    }

    pub fn get_config(&self, word: &[Sym]) -> Result<E::C<S>> {
        self.read(&self.initial, word)
    }

    pub fn config_weight(&self, c: &E::C<S>) -> Result<E::Out> {
        E::weigh(c, &mut |s| (self.finality)(s))
    }

    pub fn weight(&self, word: &[Sym]) -> Result<E::Out> {
        self.config_weight(&self.get_config(word)?)
    }

    /// Caches every computed transition; `counter` (when given) is bumped
    /// once per actual computation.
    pub fn memoized(&self, counter: Option<Arc<AtomicUsize>>) -> Self {
        let cache: Mutex<HashMap<(Sym, S), E::C<S>>> = Mutex::new(HashMap::new());
        let delta = self.delta.clone();
        WordAutomaton {
            initial: self.initial.clone(),
            delta: Arc::new(move |sym: &Sym, s: &S| {
                let key = (sym.clone(), s.clone());
                if let Some(c) = cache.lock().unwrap().get(&key) {
                    return Ok(c.clone());
                }
                let c = delta(sym, s)?;
                if let Some(n) = &counter {
                    n.fetch_add(1, Ordering::SeqCst);
                }
                cache.lock().unwrap().entry(key).or_insert(c.clone());
                Ok(c)
            }),
            finality: self.finality.clone(),
        }
    }

    /// Relabels states through a bijection (or at least an injection on the
    /// accessible part).
    pub fn map_states<T: Elem>(
        &self,
        to: impl Fn(&S) -> T + Send + Sync + 'static,
        from: impl Fn(&T) -> S + Send + Sync + 'static,
    ) -> WordAutomaton<E, Sym, T> {
        let to = Arc::new(to);
        let from = Arc::new(from);
        let (d, f) = (self.delta.clone(), self.finality.clone());
        let (to2, from2) = (to.clone(), from.clone());
        WordAutomaton::new(
            E::map(&self.initial, &mut |s| to(s)),
            move |sym, t| Ok(E::map(&d(sym, &from(t))?, &mut |s| to2(s))),
            move |t| f(&from2(t)),
        )
    }
}

impl<E: Effect<Out = bool>, Sym: Elem, S: Elem> WordAutomaton<E, Sym, S> {
    pub fn recognizes(&self, word: &[Sym]) -> Result<bool> {
        self.weight(word)
    }
}

/// Splits a text into single-character symbols.
pub fn chars(word: &str) -> Vec<char> {
    word.chars().collect()
}
