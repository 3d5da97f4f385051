use super::ast::{Operator, WordExpr};
use crate::algebra::{Elem, Label, Positioned, StarSemiring};
use crate::containers::{HasNeutral, Semimodule};
use crate::word_automata::WordAutomaton;
use crate::Result;
use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

/// Indexes symbol leaves left to right from `start`; returns the next free
/// index too.
pub fn linearize_from<W: StarSemiring, Sym: Elem>(
    e: &WordExpr<W, Sym>,
    start: usize,
) -> (WordExpr<W, Positioned<Sym>>, usize) {
    fn go<W: StarSemiring, Sym: Elem>(e: &WordExpr<W, Sym>, n: &mut usize) -> WordExpr<W, Positioned<Sym>> {
        match e {
            WordExpr::Epsilon => WordExpr::Epsilon,
            WordExpr::Empty => WordExpr::Empty,
            WordExpr::Symbol(c) => {
                let p = Positioned::new(*n, c.clone());
                *n += 1;
                WordExpr::Symbol(p)
            }
            WordExpr::Op(op, es) => WordExpr::Op(op.clone(), es.iter().map(|x| go(x, n)).collect()),
        }
    }
    let mut n = start;
    let out = go(e, &mut n);
    (out, n)
}

/// Linearization starting at 1.
pub fn linearize<W: StarSemiring, Sym: Elem>(e: &WordExpr<W, Sym>) -> WordExpr<W, Positioned<Sym>> {
    linearize_from(e, 1).0
}

/// Null, positions, First, Last and Follow of a linear expression, computed
/// in the container `E`.
pub struct GlushkovData<E: Semimodule, P: Elem> {
    pub null: E::Out,
    pub positions: BTreeSet<P>,
    pub first: E::C<P>,
    pub last: BTreeMap<P, E::Out>,
    pub follow: BTreeMap<P, E::C<P>>,
}

impl<E: Semimodule, P: Elem> Clone for GlushkovData<E, P> {
    fn clone(&self) -> Self {
        GlushkovData {
            null: self.null.clone(),
            positions: self.positions.clone(),
            first: self.first.clone(),
            last: self.last.clone(),
            follow: self.follow.clone(),
        }
    }
}

impl<E: Semimodule, P: Elem> GlushkovData<E, P> {
    pub fn last_weight(&self, p: &P) -> E::Out {
        self.last.get(p).cloned().unwrap_or_else(E::Out::zero)
    }

    pub fn follow_of(&self, p: &P) -> E::C<P> {
        self.follow.get(p).cloned().unwrap_or_else(E::neutral)
    }

    fn constant(null: E::Out) -> Self {
        GlushkovData {
            null,
            positions: BTreeSet::new(),
            first: E::neutral(),
            last: BTreeMap::new(),
            follow: BTreeMap::new(),
        }
    }
}

/// Position functions; `Ok(None)` when the expression uses an operator
/// without a positional reading (complement, intersection, functions).
pub fn glushkov_functions<E: Semimodule, P: Elem>(
    e: &WordExpr<E::Out, P>,
) -> Result<Option<GlushkovData<E, P>>> {
    Ok(Some(match e {
        WordExpr::Epsilon => GlushkovData::constant(E::Out::one()),
        WordExpr::Empty => GlushkovData::constant(E::Out::zero()),
        WordExpr::Symbol(p) => GlushkovData {
            null: E::Out::zero(),
            positions: BTreeSet::from([p.clone()]),
            first: E::unit(p.clone()),
            last: BTreeMap::from([(p.clone(), E::Out::one())]),
            follow: BTreeMap::new(),
        },
        WordExpr::Op(op, es) => {
            let mut parts = Vec::with_capacity(es.len());
            for x in es {
                match glushkov_functions::<E, P>(x)? {
                    Some(g) => parts.push(g),
                    None => return Ok(None),
                }
            }
            match op {
                Operator::Plus => {
                    let g2 = parts.pop().unwrap();
                    let g1 = parts.pop().unwrap();
                    let mut follow = g1.follow;
                    follow.extend(g2.follow);
                    let mut last = g1.last;
                    last.extend(g2.last);
                    let mut positions = g1.positions;
                    positions.extend(g2.positions);
                    GlushkovData {
                        null: g1.null.plus(&g2.null),
                        positions,
                        first: E::combine(g1.first, g2.first),
                        last,
                        follow,
                    }
                }
                Operator::Concat => {
                    let g2 = parts.pop().unwrap();
                    let g1 = parts.pop().unwrap();
                    let mut follow = BTreeMap::new();
                    for p in &g1.positions {
                        let f = E::combine(g1.follow_of(p), E::act(&g1.last_weight(p), g2.first.clone()));
                        follow.insert(p.clone(), f);
                    }
                    follow.extend(g2.follow.clone());
                    let mut last: BTreeMap<P, E::Out> =
                        g1.last.iter().map(|(p, w)| (p.clone(), w.times(&g2.null))).collect();
                    last.extend(g2.last.clone());
                    let mut positions = g1.positions.clone();
                    positions.extend(g2.positions);
                    GlushkovData {
                        null: g1.null.times(&g2.null),
                        positions,
                        first: E::combine(g1.first, E::act(&g1.null, g2.first)),
                        last,
                        follow,
                    }
                }
                Operator::Star => {
                    let g = parts.pop().unwrap();
                    let s = g.null.star()?;
                    let mut follow = BTreeMap::new();
                    for p in &g.positions {
                        let back = E::act(&g.last_weight(p).times(&s), g.first.clone());
                        follow.insert(p.clone(), E::combine(g.follow_of(p), back));
                    }
                    let last = g.last.iter().map(|(p, w)| (p.clone(), w.times(&s))).collect();
                    GlushkovData {
                        null: s.clone(),
                        positions: g.positions,
                        first: E::act(&s, g.first),
                        last,
                        follow,
                    }
                }
                Operator::MultL(x) => {
                    let g = parts.pop().unwrap();
                    GlushkovData { null: x.times(&g.null), first: E::act(x, g.first), ..g }
                }
                Operator::MultR(x) => {
                    let g = parts.pop().unwrap();
                    let last = g.last.iter().map(|(p, w)| (p.clone(), w.times(x))).collect();
                    GlushkovData { null: g.null.times(x), last, ..g }
                }
                Operator::Not | Operator::Inter | Operator::Function(_) => return Ok(None),
            }
        }
    }))
}

/// States of a position automaton.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GlushkovState<P> {
    Init,
    Pos(P),
}

impl<P: Label> Label for GlushkovState<P> {
    fn label(&self) -> String {
        match self {
            GlushkovState::Init => "init".into(),
            GlushkovState::Pos(p) => p.label(),
        }
    }
}

pub type PositionAutomaton<E, Sym> = WordAutomaton<E, Sym, GlushkovState<Positioned<Sym>>>;

/// Position automaton of an expression, with the symbols it mentions.
/// `Ok(None)` when the expression has no positional reading.
pub fn position_automaton<E: Semimodule, Sym: Elem>(
    e: &WordExpr<E::Out, Sym>,
) -> Result<Option<(PositionAutomaton<E, Sym>, Vec<Sym>)>> {
    let lin = linearize(e);
    let Some(g) = glushkov_functions::<E, Positioned<Sym>>(&lin)? else {
        return Ok(None);
    };
    let sigma: Vec<Sym> = g.positions.iter().map(|p| p.base.clone()).collect::<BTreeSet<_>>().into_iter().collect();
    let g = Arc::new(g);
    let g2 = g.clone();
    let pos_of = |a: &Sym, c: &E::C<Positioned<Sym>>| -> Result<E::C<GlushkovState<Positioned<Sym>>>> {
        E::bind(c, &mut |p: &Positioned<Sym>| {
            Ok(if p.base == *a { E::unit(GlushkovState::Pos(p.clone())) } else { <E as HasNeutral>::neutral() })
        })
    };
    let aut = WordAutomaton::new(
        E::unit(GlushkovState::Init),
        move |a: &Sym, s: &GlushkovState<Positioned<Sym>>| match s {
            GlushkovState::Init => pos_of(a, &g.first),
            GlushkovState::Pos(p) => pos_of(a, &g.follow_of(p)),
        },
        move |s| {
            Ok(match s {
                GlushkovState::Init => g2.null.clone(),
                GlushkovState::Pos(p) => g2.last_weight(p),
            })
        },
    );
    Ok(Some((aut, sigma)))
}

/// Whether `e` could go through [`position_automaton`].
pub fn has_positions<W: StarSemiring, Sym: Elem>(e: &WordExpr<W, Sym>) -> bool {
    e.is_positional()
}
