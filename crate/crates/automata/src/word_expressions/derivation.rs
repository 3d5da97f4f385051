use super::ast::{FunOp, Operator, WordExpr};
use super::nullable::nullable;
use crate::algebra::{Elem, StarSemiring};
use crate::containers::{
    BoolExpr, BoolExprs, Effect, FiniteSet, FunExpr, FunExprs, FunNode, HasNeutral, Identity, LinComb,
    Linear, Optional, Semimodule, Sets,
};
use crate::word_automata::WordAutomaton;
use crate::Result;

pub type Expr<E, Sym> = WordExpr<<E as Effect>::Out, Sym>;
pub type DerivConfig<E, Sym> = <E as Effect>::C<Expr<E, Sym>>;

/// Containers in which expressions can be derived.
///
/// The first three methods give the monoid and the left weight action used
/// by the simple operators. `collapse` reads a container back as one
/// expression; the remaining hooks default to collapsing and wrapping.
pub trait Derivable<Sym: Elem>: Effect<Out: StarSemiring> {
    fn d_zero() -> DerivConfig<Self, Sym>;
    fn d_plus(x: DerivConfig<Self, Sym>, y: DerivConfig<Self, Sym>) -> DerivConfig<Self, Sym>;
    fn d_scale(k: &Self::Out, c: DerivConfig<Self, Sym>) -> DerivConfig<Self, Sym>;

    /// A single expression with the same weights as the container.
    fn collapse(c: &DerivConfig<Self, Sym>) -> Expr<Self, Sym>;

    /// Applies a right context (`x ↦ x.f`, `x ↦ x:[k]`) to every element.
    /// Containers whose structure does not commute with such contexts
    /// collapse first.
    fn right_context(c: DerivConfig<Self, Sym>, ctx: &dyn Fn(Expr<Self, Sym>) -> Expr<Self, Sym>) -> DerivConfig<Self, Sym> {
        Self::map(&c, &mut |x| ctx(x.clone()))
    }

    fn negation(c: DerivConfig<Self, Sym>) -> Result<DerivConfig<Self, Sym>> {
        Ok(Self::unit(WordExpr::not(Self::collapse(&c))))
    }

    fn intersection(x: DerivConfig<Self, Sym>, y: DerivConfig<Self, Sym>) -> Result<DerivConfig<Self, Sym>> {
        Ok(Self::unit(WordExpr::inter(Self::collapse(&x), Self::collapse(&y))))
    }

    fn function(op: &FunOp<Self::Out>, cs: Vec<DerivConfig<Self, Sym>>) -> Result<DerivConfig<Self, Sym>> {
        let args = cs.iter().map(Self::collapse).collect();
        Ok(Self::unit(WordExpr::Op(Operator::Function(op.clone()), args)))
    }
}

/// Derivative of `e` by the symbol `a`, in the container `E`.
pub fn derive<E: Derivable<Sym>, Sym: Elem>(a: &Sym, e: &Expr<E, Sym>) -> Result<DerivConfig<E, Sym>> {
    Ok(match e {
        WordExpr::Epsilon | WordExpr::Empty => E::d_zero(),
        WordExpr::Symbol(b) => {
            if a == b {
                E::unit(WordExpr::Epsilon)
            } else {
                E::d_zero()
            }
        }
        WordExpr::Op(op, es) => match op {
            Operator::Plus => E::d_plus(derive::<E, Sym>(a, &es[0])?, derive::<E, Sym>(a, &es[1])?),
            Operator::Concat => {
                let e2 = &es[1];
                let left = E::right_context(derive::<E, Sym>(a, &es[0])?, &|x| WordExpr::concat(x, e2.clone()));
                let right = E::d_scale(&nullable(&es[0])?, derive::<E, Sym>(a, &es[1])?);
                E::d_plus(left, right)
            }
            Operator::Star => {
                let s = nullable(&es[0])?.star()?;
                let inner = E::right_context(derive::<E, Sym>(a, &es[0])?, &|x| WordExpr::concat(x, e.clone()));
                E::d_scale(&s, inner)
            }
            Operator::MultL(k) => E::d_scale(k, derive::<E, Sym>(a, &es[0])?),
            Operator::MultR(k) => E::right_context(derive::<E, Sym>(a, &es[0])?, &|x| WordExpr::mult_r(x, k.clone())),
            Operator::Not => E::negation(derive::<E, Sym>(a, &es[0])?)?,
            Operator::Inter => E::intersection(derive::<E, Sym>(a, &es[0])?, derive::<E, Sym>(a, &es[1])?)?,
            Operator::Function(f) => {
                let cs = es.iter().map(|x| derive::<E, Sym>(a, x)).collect::<Result<Vec<_>>>()?;
                E::function(f, cs)?
            }
        },
    })
}

/// Derivative by a word: derivatives chained through `bind`.
pub fn derive_by_word<E: Derivable<Sym>, Sym: Elem>(w: &[Sym], e: &Expr<E, Sym>) -> Result<DerivConfig<E, Sym>> {
    let mut c = E::unit(e.clone());
    for a in w {
        c = E::bind(&c, &mut |x| derive::<E, Sym>(a, x))?;
    }
    Ok(c)
}

/// Canonical form used to identify derivatives: sums are flattened,
/// sorted and (for idempotent weights) deduplicated; `0` is absorbed by
/// products and scalars and is neutral in sums; `e.1` and scalings by one
/// reduce to `e`. A left `1.e` is kept.
pub fn normalize<W: StarSemiring, Sym: Elem>(e: &WordExpr<W, Sym>) -> WordExpr<W, Sym> {
    match e {
        WordExpr::Op(op, es) => {
            let es: Vec<WordExpr<W, Sym>> = es.iter().map(normalize).collect();
            match op {
                Operator::Plus => {
                    let mut terms = Vec::new();
                    for x in es {
                        flatten_sum(x, &mut terms);
                    }
                    terms.retain(|t| *t != WordExpr::Empty);
                    terms.sort();
                    if W::idempotent() {
                        terms.dedup();
                    }
                    WordExpr::sum_of(terms)
                }
                Operator::Concat => {
                    let mut it = es.into_iter();
                    let (x, y) = (it.next().unwrap(), it.next().unwrap());
                    match (x, y) {
                        (WordExpr::Empty, _) | (_, WordExpr::Empty) => WordExpr::Empty,
                        (x, WordExpr::Epsilon) => x,
                        (x, y) => WordExpr::concat(x, y),
                    }
                }
                Operator::MultL(k) | Operator::MultR(k) => {
                    let x = es.into_iter().next().unwrap();
                    if k.is_zero() || x == WordExpr::Empty {
                        WordExpr::Empty
                    } else if k.is_one() {
                        x
                    } else {
                        WordExpr::Op(op.clone(), vec![x])
                    }
                }
                Operator::Inter if es.contains(&WordExpr::Empty) => WordExpr::Empty,
                _ => WordExpr::Op(op.clone(), es),
            }
        }
        other => other.clone(),
    }
}

fn flatten_sum<W: StarSemiring, Sym: Elem>(e: WordExpr<W, Sym>, out: &mut Vec<WordExpr<W, Sym>>) {
    match e {
        WordExpr::Op(Operator::Plus, es) => es.into_iter().for_each(|x| flatten_sum(x, out)),
        other => out.push(other),
    }
}

/// Automaton whose states are normalized derivatives and whose final
/// weights are the empty-word weights.
pub fn derivation_automaton<E: Derivable<Sym>, Sym: Elem>(e: &Expr<E, Sym>) -> WordAutomaton<E, Sym, Expr<E, Sym>> {
    WordAutomaton::new(
        E::unit(normalize(e)),
        |a, s| Ok(E::map(&derive::<E, Sym>(a, s)?, &mut |x| normalize(x))),
        |s| nullable(s),
    )
}

/// Brzozowski derivation: the container is the expression itself.
impl<Sym: Elem> Derivable<Sym> for Identity {
    fn d_zero() -> Expr<Self, Sym> {
        WordExpr::Empty
    }
    fn d_plus(x: Expr<Self, Sym>, y: Expr<Self, Sym>) -> Expr<Self, Sym> {
        WordExpr::plus(x, y)
    }
    fn d_scale(k: &bool, c: Expr<Self, Sym>) -> Expr<Self, Sym> {
        if *k { c } else { WordExpr::Empty }
    }
    fn collapse(c: &Expr<Self, Sym>) -> Expr<Self, Sym> {
        c.clone()
    }
}

/// Brzozowski derivation with `none` for the empty expression.
impl<Sym: Elem> Derivable<Sym> for Optional {
    fn d_zero() -> Option<Expr<Self, Sym>> {
        None
    }
    fn d_plus(x: Option<Expr<Self, Sym>>, y: Option<Expr<Self, Sym>>) -> Option<Expr<Self, Sym>> {
        match (x, y) {
            (None, y) => y,
            (x, None) => x,
            (Some(x), Some(y)) => Some(WordExpr::plus(x, y)),
        }
    }
    fn d_scale(k: &bool, c: Option<Expr<Self, Sym>>) -> Option<Expr<Self, Sym>> {
        if *k { c } else { None }
    }
    fn collapse(c: &Option<Expr<Self, Sym>>) -> Expr<Self, Sym> {
        c.clone().unwrap_or(WordExpr::Empty)
    }
}

/// Partial derivation.
impl<Sym: Elem> Derivable<Sym> for Sets {
    fn d_zero() -> FiniteSet<Expr<Self, Sym>> {
        Sets::neutral()
    }
    fn d_plus(x: FiniteSet<Expr<Self, Sym>>, y: FiniteSet<Expr<Self, Sym>>) -> FiniteSet<Expr<Self, Sym>> {
        Sets::combine(x, y)
    }
    fn d_scale(k: &bool, c: FiniteSet<Expr<Self, Sym>>) -> FiniteSet<Expr<Self, Sym>> {
        Sets::act(k, c)
    }
    fn collapse(c: &FiniteSet<Expr<Self, Sym>>) -> Expr<Self, Sym> {
        WordExpr::sum_of(c.iter().cloned().collect())
    }
}

/// Weighted partial derivation.
impl<W: StarSemiring, Sym: Elem> Derivable<Sym> for Linear<W> {
    fn d_zero() -> LinComb<W, Expr<Self, Sym>> {
        LinComb::zero()
    }
    fn d_plus(x: LinComb<W, Expr<Self, Sym>>, y: LinComb<W, Expr<Self, Sym>>) -> LinComb<W, Expr<Self, Sym>> {
        Linear::<W>::combine(x, y)
    }
    fn d_scale(k: &W, c: LinComb<W, Expr<Self, Sym>>) -> LinComb<W, Expr<Self, Sym>> {
        Linear::<W>::act(k, c)
    }
    fn collapse(c: &LinComb<W, Expr<Self, Sym>>) -> Expr<Self, Sym> {
        let terms = c
            .iter()
            .map(|(e, k)| if k.is_one() { e.clone() } else { WordExpr::mult_l(k.clone(), e.clone()) })
            .collect();
        WordExpr::sum_of(terms)
    }
}

/// Alternating derivation: complement and intersection stay in the formula.
impl<Sym: Elem> Derivable<Sym> for BoolExprs {
    fn d_zero() -> BoolExpr<Expr<Self, Sym>> {
        BoolExprs::neutral()
    }
    fn d_plus(x: BoolExpr<Expr<Self, Sym>>, y: BoolExpr<Expr<Self, Sym>>) -> BoolExpr<Expr<Self, Sym>> {
        BoolExprs::combine(x, y)
    }
    fn d_scale(k: &bool, c: BoolExpr<Expr<Self, Sym>>) -> BoolExpr<Expr<Self, Sym>> {
        BoolExprs::act(k, c)
    }
    fn collapse(c: &BoolExpr<Expr<Self, Sym>>) -> Expr<Self, Sym> {
        match c {
            BoolExpr::Var(e) => e.clone(),
            BoolExpr::Const(true) => WordExpr::not(WordExpr::Empty),
            BoolExpr::Const(false) => WordExpr::Empty,
            BoolExpr::Not(x) => WordExpr::not(Self::collapse(x)),
            BoolExpr::Or(xs) => WordExpr::sum_of(xs.iter().map(Self::collapse).collect()),
            BoolExpr::And(xs) => {
                let mut it = xs.iter().map(Self::collapse);
                let first = it.next().unwrap_or_else(|| WordExpr::not(WordExpr::Empty));
                it.fold(first, WordExpr::inter)
            }
        }
    }
    fn right_context(
        c: BoolExpr<Expr<Self, Sym>>,
        ctx: &dyn Fn(Expr<Self, Sym>) -> Expr<Self, Sym>,
    ) -> BoolExpr<Expr<Self, Sym>> {
        if c.is_positive_disjunction() {
            BoolExprs::map(&c, &mut |x| ctx(x.clone()))
        } else {
            BoolExpr::var(ctx(Self::collapse(&c)))
        }
    }
    fn negation(c: BoolExpr<Expr<Self, Sym>>) -> Result<BoolExpr<Expr<Self, Sym>>> {
        Ok(BoolExpr::not(c))
    }
    fn intersection(x: BoolExpr<Expr<Self, Sym>>, y: BoolExpr<Expr<Self, Sym>>) -> Result<BoolExpr<Expr<Self, Sym>>> {
        Ok(BoolExpr::and(x, y))
    }
}

/// Generalized alternating derivation: every extended operator becomes a
/// function node of the container.
impl<W: StarSemiring, Sym: Elem> Derivable<Sym> for FunExprs<W> {
    fn d_zero() -> FunExpr<W, Expr<Self, Sym>> {
        FunExprs::<W>::neutral()
    }
    fn d_plus(x: FunExpr<W, Expr<Self, Sym>>, y: FunExpr<W, Expr<Self, Sym>>) -> FunExpr<W, Expr<Self, Sym>> {
        FunExprs::<W>::combine(x, y)
    }
    fn d_scale(k: &W, c: FunExpr<W, Expr<Self, Sym>>) -> FunExpr<W, Expr<Self, Sym>> {
        FunExprs::<W>::act(k, c)
    }
    fn collapse(c: &FunExpr<W, Expr<Self, Sym>>) -> Expr<Self, Sym> {
        match c {
            FunExpr::Var(e) => e.clone(),
            FunExpr::Const(w) if w.is_zero() => WordExpr::Empty,
            FunExpr::Const(w) => WordExpr::Op(Operator::Function(FunOp::constant(w.clone())), vec![]),
            FunExpr::Fun(node, xs) => WordExpr::Op(
                Operator::Function(FunOp::from_node(node.clone())),
                xs.iter().map(Self::collapse).collect(),
            ),
        }
    }
    fn right_context(
        c: FunExpr<W, Expr<Self, Sym>>,
        ctx: &dyn Fn(Expr<Self, Sym>) -> Expr<Self, Sym>,
    ) -> FunExpr<W, Expr<Self, Sym>> {
        if c.is_linear() {
            FunExprs::<W>::map(&c, &mut |x| ctx(x.clone()))
        } else {
            FunExpr::Var(ctx(Self::collapse(&c)))
        }
    }
    fn negation(c: FunExpr<W, Expr<Self, Sym>>) -> Result<FunExpr<W, Expr<Self, Sym>>> {
        Ok(FunExpr::apply(FunNode::new("~", 1, |ws: &[W]| ws[0].try_not()), vec![c]))
    }
    fn intersection(
        x: FunExpr<W, Expr<Self, Sym>>,
        y: FunExpr<W, Expr<Self, Sym>>,
    ) -> Result<FunExpr<W, Expr<Self, Sym>>> {
        Ok(FunExpr::apply(FunNode::new("&", 2, |ws: &[W]| Ok(ws[0].times(&ws[1]))), vec![x, y]))
    }
    fn function(op: &FunOp<W>, cs: Vec<FunExpr<W, Expr<Self, Sym>>>) -> Result<FunExpr<W, Expr<Self, Sym>>> {
        Ok(FunExpr::apply(op.node.clone(), cs))
    }
}
