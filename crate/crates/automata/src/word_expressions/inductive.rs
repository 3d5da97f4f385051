use super::ast::{Operator, WordExpr};
use crate::algebra::{Either, Elem, Label, StarSemiring};
use crate::containers::{HasNeutral, Semimodule};
use crate::word_automata::{concatenate, hadamard, kleene_star, scale_left, scale_right, union, WordAutomaton};
use crate::{Error, Result};
use std::collections::BTreeSet;

/// States of inductively built automata. Each construction step wraps the
/// states of its operands.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum InductiveState {
    /// Atom states: `false` before reading, `true` after the symbol.
    Pure(bool),
    /// Star: `None` is the fresh initial state.
    Opt(Option<Box<InductiveState>>),
    /// Complement: a subset of the operand's states.
    Set(BTreeSet<InductiveState>),
    SumL(Box<InductiveState>),
    SumR(Box<InductiveState>),
    ProdPair(Box<InductiveState>, Box<InductiveState>),
}

impl Label for InductiveState {
    fn label(&self) -> String {
        match self {
            InductiveState::Pure(b) => if *b { "T" } else { "F" }.into(),
            InductiveState::Opt(None) => "I".into(),
            InductiveState::Opt(Some(s)) => format!("O({})", s.label()),
            InductiveState::Set(xs) => {
                let parts: Vec<String> = xs.iter().map(|x| x.label()).collect();
                format!("{{{}}}", parts.join(","))
            }
            InductiveState::SumL(s) => format!("L({})", s.label()),
            InductiveState::SumR(s) => format!("R({})", s.label()),
            InductiveState::ProdPair(a, b) => format!("({},{})", a.label(), b.label()),
        }
    }
}

pub type InductiveAutomaton<E, Sym> = WordAutomaton<E, Sym, InductiveState>;

fn boxed(s: &InductiveState) -> Box<InductiveState> {
    Box::new(s.clone())
}

// Used on the inverse maps: states outside a wrapper's image never show up
// in configurations.
fn misplaced() -> InductiveState {
    InductiveState::Pure(false)
}

fn inject_either<E: Semimodule, Sym: Elem>(
    a: WordAutomaton<E, Sym, Either<InductiveState, InductiveState>>,
) -> InductiveAutomaton<E, Sym> {
    a.map_states(
        |s| match s {
            Either::Left(p) => InductiveState::SumL(boxed(p)),
            Either::Right(q) => InductiveState::SumR(boxed(q)),
        },
        |t| match t {
            InductiveState::SumL(p) => Either::Left((**p).clone()),
            InductiveState::SumR(q) => Either::Right((**q).clone()),
            _ => Either::Left(misplaced()),
        },
    )
}

/// Builds an automaton by structural recursion on the expression.
/// `Ok(None)` for expressions containing custom functions. Complement needs a
/// container that can be read as a set; intersection needs a commutative one.
pub fn inductive_automaton<E: Semimodule, Sym: Elem>(
    e: &WordExpr<E::Out, Sym>,
) -> Result<Option<InductiveAutomaton<E, Sym>>> {
    if e.has_function() {
        return Ok(None);
    }
    build::<E, Sym>(e).map(Some)
}

fn build<E: Semimodule, Sym: Elem>(e: &WordExpr<E::Out, Sym>) -> Result<InductiveAutomaton<E, Sym>> {
    Ok(match e {
        WordExpr::Empty => WordAutomaton::new(
            <E as HasNeutral>::neutral(),
            |_, _| Ok(<E as HasNeutral>::neutral()),
            |_| Ok(E::Out::zero()),
        ),
        WordExpr::Epsilon => WordAutomaton::new(
            E::unit(InductiveState::Pure(false)),
            |_, _| Ok(<E as HasNeutral>::neutral()),
            |_| Ok(E::Out::one()),
        ),
        WordExpr::Symbol(a) => {
            let a = a.clone();
            WordAutomaton::new(
                E::unit(InductiveState::Pure(false)),
                move |b: &Sym, s: &InductiveState| {
                    Ok(if *s == InductiveState::Pure(false) && *b == a {
                        E::unit(InductiveState::Pure(true))
                    } else {
                        <E as HasNeutral>::neutral()
                    })
                },
                |s| Ok(if *s == InductiveState::Pure(true) { E::Out::one() } else { E::Out::zero() }),
            )
        }
        WordExpr::Op(op, es) => match op {
            Operator::Plus => inject_either(union(&build::<E, Sym>(&es[0])?, &build::<E, Sym>(&es[1])?)),
            Operator::Concat => inject_either(concatenate(&build::<E, Sym>(&es[0])?, &build::<E, Sym>(&es[1])?)?),
            Operator::Star => kleene_star(&build::<E, Sym>(&es[0])?)?.map_states(
                |s| InductiveState::Opt(s.as_ref().map(boxed)),
                |t| match t {
                    InductiveState::Opt(s) => s.as_ref().map(|b| (**b).clone()),
                    _ => None,
                },
            ),
            Operator::MultL(k) => scale_left(k, &build::<E, Sym>(&es[0])?),
            Operator::MultR(k) => scale_right(&build::<E, Sym>(&es[0])?, k),
            Operator::Inter => hadamard(&build::<E, Sym>(&es[0])?, &build::<E, Sym>(&es[1])?)?.map_states(
                |(p, q)| InductiveState::ProdPair(boxed(p), boxed(q)),
                |t| match t {
                    InductiveState::ProdPair(p, q) => ((**p).clone(), (**q).clone()),
                    _ => (misplaced(), misplaced()),
                },
            ),
            Operator::Not => complemented(build::<E, Sym>(&es[0])?)?,
            Operator::Function(_) => return Err(Error::Unsupported("function operator".into())),
        },
    })
}

/// Subset construction followed by complement, when configurations are sets.
fn complemented<E: Semimodule, Sym: Elem>(a: InductiveAutomaton<E, Sym>) -> Result<InductiveAutomaton<E, Sym>> {
    let as_set = |c: &E::C<InductiveState>| -> Result<BTreeSet<InductiveState>> {
        E::as_set(c)
            .map(|s| s.0)
            .ok_or_else(|| Error::Unsupported(format!("complement over {}", E::name())))
    };
    let start = as_set(&a.initial)?;
    let (d, f) = (a.delta.clone(), a.finality.clone());
    Ok(WordAutomaton::new(
        E::unit(InductiveState::Set(start)),
        move |sym: &Sym, s: &InductiveState| {
            let InductiveState::Set(xs) = s else {
                return Ok(<E as HasNeutral>::neutral());
            };
            let mut next = BTreeSet::new();
            for x in xs {
                next.extend(as_set(&d(sym, x)?)?);
            }
            Ok(E::unit(InductiveState::Set(next)))
        },
        move |s| {
            let InductiveState::Set(xs) = s else {
                return Ok(E::Out::zero());
            };
            for x in xs {
                if !f(x)?.is_zero() {
                    return Ok(E::Out::zero());
                }
            }
            Ok(E::Out::one())
        },
    ))
}
