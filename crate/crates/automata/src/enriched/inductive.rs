use super::ast::{AtomOps, EnrichedExpr, TreeExp, WordExp};
use crate::algebra::{Either, Elem, Label, RankedSymbol, StarSemiring};
use crate::containers::{Effect, Semimodule};
use crate::tree_automata::BottomUpContainerTA;
use crate::word_automata::WordAutomaton;
use crate::Result;
use std::sync::Arc;

/// States of the inductive construction: variables, atom states (a start
/// variable or the symbol read), and the two sides of a sum or a
/// substitution.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EnrichedInductiveState<V, S> {
    V(V),
    A(Either<V, S>),
    L(Box<EnrichedInductiveState<V, S>>),
    R(Box<EnrichedInductiveState<V, S>>),
}

impl<V: Label, S: Label> Label for EnrichedInductiveState<V, S> {
    fn label(&self) -> String {
        match self {
            EnrichedInductiveState::V(v) => format!("V({})", v.label()),
            EnrichedInductiveState::A(Either::Left(v)) => format!("A({})", v.label()),
            EnrichedInductiveState::A(Either::Right(s)) => format!("A({})", s.label()),
            EnrichedInductiveState::L(s) => format!("L({})", s.label()),
            EnrichedInductiveState::R(s) => format!("R({})", s.label()),
        }
    }
}

type St<A> = EnrichedInductiveState<<A as AtomOps>::Var, <A as AtomOps>::Sym>;
type Init<E, A> = Arc<dyn Fn(&<A as AtomOps>::Var) -> Result<<E as Effect>::C<St<A>>> + Send + Sync>;
type Step<E, A> = Arc<dyn Fn(&<A as AtomOps>::Sym, &[St<A>]) -> Result<<E as Effect>::C<St<A>>> + Send + Sync>;
type Fin<E, A> = Arc<dyn Fn(&St<A>) -> Result<<E as Effect>::Out> + Send + Sync>;

/// Bottom-up automaton with a configuration per start variable. Words are
/// the case where every symbol has one argument.
struct Built<E: Effect, A: AtomOps> {
    init: Init<E, A>,
    delta: Step<E, A>,
    fin: Fin<E, A>,
}

impl<E: Effect, A: AtomOps> Clone for Built<E, A> {
    fn clone(&self) -> Self {
        Built { init: self.init.clone(), delta: self.delta.clone(), fin: self.fin.clone() }
    }
}

fn left<V: Elem, S: Elem>(s: &EnrichedInductiveState<V, S>) -> EnrichedInductiveState<V, S> {
    EnrichedInductiveState::L(Box::new(s.clone()))
}

fn right<V: Elem, S: Elem>(s: &EnrichedInductiveState<V, S>) -> EnrichedInductiveState<V, S> {
    EnrichedInductiveState::R(Box::new(s.clone()))
}

/// Weight of the runs starting at `v` that are already complete.
fn start_weight<E: Semimodule, A: AtomOps>(b: &Built<E, A>, v: &A::Var) -> Result<E::Out> {
    let fin = b.fin.clone();
    E::weigh(&(b.init)(v)?, &mut |s| fin(s))
}

fn empty<E: Semimodule, A: AtomOps>() -> Built<E, A> {
    Built {
        init: Arc::new(|_| Ok(E::neutral())),
        delta: Arc::new(|_, _| Ok(E::neutral())),
        fin: Arc::new(|_| Ok(E::Out::zero())),
    }
}

fn from_var<E: Semimodule, A: AtomOps>(v: &A::Var) -> Built<E, A> {
    let v = v.clone();
    Built {
        init: Arc::new(|w| Ok(E::unit(EnrichedInductiveState::V(w.clone())))),
        delta: Arc::new(|_, _| Ok(E::neutral())),
        fin: Arc::new(move |s| {
            Ok(match s {
                EnrichedInductiveState::V(w) if *w == v => E::Out::one(),
                _ => E::Out::zero(),
            })
        }),
    }
}

fn from_tensor<E: Semimodule, A: AtomOps>(a: &A) -> Built<E, A> {
    let a = a.clone();
    Built {
        init: Arc::new(|w| Ok(E::unit(EnrichedInductiveState::A(Either::Left(w.clone()))))),
        delta: Arc::new(move |x, qs| {
            let args: Option<Vec<A::Var>> = qs
                .iter()
                .map(|q| match q {
                    EnrichedInductiveState::A(Either::Left(v)) => Some(v.clone()),
                    _ => None,
                })
                .collect();
            Ok(match args {
                Some(args) if a.fires(x, &args) => E::unit(EnrichedInductiveState::A(Either::Right(x.clone()))),
                _ => E::neutral(),
            })
        }),
        fin: Arc::new(|s| {
            Ok(match s {
                EnrichedInductiveState::A(Either::Right(_)) => E::Out::one(),
                _ => E::Out::zero(),
            })
        }),
    }
}

/// Splits a tuple of sum states: all left, all right, or mixed (`None`).
#[allow(clippy::type_complexity)]
fn split<V: Elem, S: Elem>(qs: &[EnrichedInductiveState<V, S>]) -> Option<(bool, Vec<EnrichedInductiveState<V, S>>)> {
    let mut side = None;
    let mut inner = Vec::with_capacity(qs.len());
    for q in qs {
        let (is_left, s) = match q {
            EnrichedInductiveState::L(s) => (true, s),
            EnrichedInductiveState::R(s) => (false, s),
            _ => return None,
        };
        if side.is_some_and(|l| l != is_left) {
            return None;
        }
        side = Some(is_left);
        inner.push((**s).clone());
    }
    side.map(|l| (l, inner))
}

/// Transitions of the disjoint sum: nullary symbols fire on both sides,
/// other tuples go to the side all their states come from.
fn sum_delta<E: Semimodule, A: AtomOps>(b1: &Built<E, A>, b2: &Built<E, A>) -> Step<E, A> {
    let (d1, d2) = (b1.delta.clone(), b2.delta.clone());
    Arc::new(move |x, qs| {
        if qs.is_empty() {
            let l = E::map(&d1(x, &[])?, &mut |s| left(s));
            let r = E::map(&d2(x, &[])?, &mut |s| right(s));
            return Ok(E::combine(l, r));
        }
        Ok(match split(qs) {
            Some((true, inner)) => E::map(&d1(x, &inner)?, &mut |s| left(s)),
            Some((false, inner)) => E::map(&d2(x, &inner)?, &mut |s| right(s)),
            None => E::neutral(),
        })
    })
}

fn sum_fin<E: Semimodule, A: AtomOps>(f1: Fin<E, A>, f2: Fin<E, A>) -> Fin<E, A> {
    Arc::new(move |s| match s {
        EnrichedInductiveState::L(q) => f1(q),
        EnrichedInductiveState::R(q) => f2(q),
        _ => Ok(E::Out::zero()),
    })
}

fn auto_sum<E: Semimodule, A: AtomOps>(b1: Built<E, A>, b2: Built<E, A>) -> Built<E, A> {
    let (i1, i2) = (b1.init.clone(), b2.init.clone());
    Built {
        init: Arc::new(move |v| Ok(E::combine(E::map(&i1(v)?, &mut |s| left(s)), E::map(&i2(v)?, &mut |s| right(s))))),
        delta: sum_delta(&b1, &b2),
        fin: sum_fin::<E, A>(b1.fin.clone(), b2.fin.clone()),
    }
}

/// Substitution of `v`: a complete run of the first automaton may go on
/// in the second one from its `v` configuration.
fn auto_cat<E: Semimodule, A: AtomOps>(v: &A::Var, b1: Built<E, A>, b2: Built<E, A>) -> Built<E, A> {
    let deltas = sum_delta(&b1, &b2);
    let (i1, i2, f1) = (b1.init.clone(), b2.init.clone(), b1.fin.clone());
    let jump = {
        let (i2, f1, v) = (i2.clone(), f1.clone(), v.clone());
        move |s: &St<A>| -> Result<E::C<St<A>>> {
            Ok(match s {
                EnrichedInductiveState::L(q) => {
                    let k = f1(q)?;
                    E::combine(E::unit(s.clone()), E::act(&k, E::map(&i2(&v)?, &mut |t| right(t))))
                }
                _ => E::unit(s.clone()),
            })
        }
    };
    let jump = Arc::new(jump);
    let delta: Step<E, A> = {
        let jump = jump.clone();
        Arc::new(move |x, qs| E::bind(&deltas(x, qs)?, &mut |s| jump(s)))
    };
    let b1c = b1.clone();
    let v0 = v.clone();
    let init: Init<E, A> = Arc::new(move |w| {
        let mut c = E::combine(
            E::map(&i1(w)?, &mut |s| left(s)),
            E::act(&start_weight(&b1c, w)?, E::map(&i2(&v0)?, &mut |s| right(s))),
        );
        if *w != v0 {
            c = E::combine(c, E::map(&i2(w)?, &mut |s| right(s)));
        }
        Ok(c)
    });
    let f2 = b2.fin.clone();
    Built { init, delta, fin: sum_fin::<E, A>(Arc::new(|_| Ok(E::Out::zero())), f2) }
}

/// Nonempty iteration of the substitution of `v`.
fn auto_positive_star<E: Semimodule, A: AtomOps>(v: &A::Var, b: Built<E, A>) -> Result<Built<E, A>> {
    let eps = start_weight(&b, v)?.star()?;
    let (i, d, f) = (b.init.clone(), b.delta.clone(), b.fin.clone());
    let v0 = v.clone();
    let init: Init<E, A> = {
        let (i, b, eps, v0) = (i.clone(), b.clone(), eps.clone(), v0.clone());
        Arc::new(move |w| {
            if *w == v0 {
                Ok(E::act(&eps, i(w)?))
            } else {
                let k = start_weight(&b, w)?.times(&eps);
                Ok(E::combine(i(w)?, E::act(&k, i(&v0)?)))
            }
        })
    };
    let delta: Step<E, A> = {
        let (i, f, v0) = (i.clone(), f.clone(), v0.clone());
        Arc::new(move |x, qs| {
            E::bind(&d(x, qs)?, &mut |p| {
                let k = f(p)?;
                Ok(E::combine(E::unit(p.clone()), E::act(&k, i(&v0)?)))
            })
        })
    };
    let fin: Fin<E, A> = Arc::new(move |p| Ok(f(p)?.times(&eps)));
    Ok(Built { init, delta, fin })
}

fn build<E: Semimodule, A: AtomOps>(e: &EnrichedExpr<A>) -> Result<Built<E, A>> {
    Ok(match e {
        EnrichedExpr::Empty => empty(),
        EnrichedExpr::Var(v) => from_var(v),
        EnrichedExpr::Tensor(a) => from_tensor(a),
        EnrichedExpr::Sum(a, b) => auto_sum(build(a)?, build(b)?),
        EnrichedExpr::Sub(v, a, b) => auto_cat(v, build(a)?, build(b)?),
        EnrichedExpr::Star(v, a) => auto_sum(auto_positive_star(v, build(a)?)?, from_var(v)),
    })
}

pub type WordInductiveAutomaton<E, S> = WordAutomaton<E, S, EnrichedInductiveState<(), S>>;
pub type TreeInductiveAutomaton<E, V> = BottomUpContainerTA<E, V, EnrichedInductiveState<V, RankedSymbol>>;

/// Inductive word automaton, started from the configuration of `()`.
pub fn word_inductive_automaton<E: Semimodule, S: Elem>(e: &WordExp<S>) -> Result<WordInductiveAutomaton<E, S>> {
    let b = build::<E, _>(e)?;
    let (d, f) = (b.delta.clone(), b.fin.clone());
    Ok(WordAutomaton::new(
        (b.init)(&())?,
        move |x: &S, s: &EnrichedInductiveState<(), S>| d(x, std::slice::from_ref(s)),
        move |s: &EnrichedInductiveState<(), S>| f(s),
    ))
}

/// Inductive bottom-up tree automaton; a hole assigned `v` starts from the
/// configuration of `v`.
pub fn tree_inductive_automaton<E: Semimodule, V: Elem>(e: &TreeExp<V>) -> Result<TreeInductiveAutomaton<E, V>> {
    let b = build::<E, _>(e)?;
    Ok(BottomUpContainerTA { init: b.init, delta: b.delta, finality: b.fin })
}
