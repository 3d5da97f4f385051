//! Effect containers: the monads that parameterize every automaton.
//!
//! Rust has no higher-kinded types, so each container is named by a zero-sized
//! marker implementing [`Effect`], whose generic associated type `C<A>` is the
//! container applied to `A`.

mod bool_expr;
mod convert;
mod fun_expr;
mod linear;
mod set;
mod simple;
mod stack;

pub use bool_expr::{bool_expr_to_clauses, eval_bool_expr, BoolExpr, BoolExprs, Clause};
pub use convert::{bool_to_clauses, lin_to_set, opt_to_set, set_to_lin};
pub use fun_expr::{FunExpr, FunExprs, FunNode, WeightFn};
pub use linear::{LinComb, Linear};
pub use set::{FiniteSet, Sets};
pub use simple::{Identity, Optional, Writer};
pub use stack::StackContext;

use crate::algebra::{Elem, StarSemiring};
use crate::Result;
use std::fmt::Debug;

/// A container with unit and bind, plus the weight read off a configuration.
pub trait Effect: 'static {
    type C<A: Elem>: Clone + Debug + PartialEq + Send + Sync;
    /// Weight type of a configuration (the image of `C<()>`).
    type Out: Clone + Debug + PartialEq + Send + Sync + 'static;

    fn name() -> &'static str;

    fn unit<A: Elem>(a: A) -> Self::C<A>;

    fn bind<A: Elem, B: Elem>(
        c: &Self::C<A>,
        f: &mut dyn FnMut(&A) -> Result<Self::C<B>>,
    ) -> Result<Self::C<B>>;

    fn map<A: Elem, B: Elem>(c: &Self::C<A>, f: &mut dyn FnMut(&A) -> B) -> Self::C<B> {
        match Self::bind(c, &mut |a| Ok(Self::unit(f(a)))) {
            Ok(c) => c,
            Err(_) => unreachable!("map cannot fail"),
        }
    }

    /// `cast(bind(c, cast⁻¹ ∘ f))`: the weight of `c` when each element
    /// carries the weight `f(element)`.
    fn weigh<A: Elem>(c: &Self::C<A>, f: &mut dyn FnMut(&A) -> Result<Self::Out>) -> Result<Self::Out>;

    /// Elements occurring in the container, in canonical order, deduplicated.
    fn support<A: Elem>(c: &Self::C<A>) -> Vec<A>;

    /// Canonical text of the container.
    fn render<A: Elem>(c: &Self::C<A>, show: &dyn Fn(&A) -> String) -> String;

    /// Targets with an optional weight label, for transition listings.
    fn edges<A: Elem>(c: &Self::C<A>) -> Vec<(A, Option<String>)> {
        Self::support(c).into_iter().map(|a| (a, None)).collect()
    }

    /// Transition listing groups: an optional weight label and the rendered
    /// targets carrying it.
    fn dump_groups<A: Elem>(c: &Self::C<A>, show: &dyn Fn(&A) -> String) -> Vec<(Option<String>, String)> {
        let mut groups: Vec<(Option<String>, Vec<String>)> = Vec::new();
        for (a, w) in Self::edges(c) {
            match groups.iter_mut().find(|(k, _)| *k == w) {
                Some((_, v)) => v.push(show(&a)),
                None => groups.push((w, vec![show(&a)])),
            }
        }
        groups.sort();
        groups.into_iter().map(|(w, v)| (w, format!("{{{}}}", v.join(",")))).collect()
    }

    fn out_label(o: &Self::Out) -> String {
        format!("{o:?}")
    }

    /// Whether a final weight means "not final" (omitted from DOT markings).
    fn out_is_zero(o: &Self::Out) -> bool;
}

/// Containers with an empty value.
pub trait HasNeutral: Effect {
    fn neutral<A: Elem>() -> Self::C<A>;
}

/// Containers forming a semimodule over their weight type, with
/// `weigh(combine(x, y)) = weigh(x) + weigh(y)`.
pub trait Semimodule: HasNeutral<Out: StarSemiring> {
    /// Whether pairing two containers through `bind` computes the product
    /// of their weights (sets and linear combinations; not expression trees).
    const COMMUTATIVE: bool;

    fn combine<A: Elem>(x: Self::C<A>, y: Self::C<A>) -> Self::C<A>;
    fn act<A: Elem>(k: &Self::Out, c: Self::C<A>) -> Self::C<A>;
    fn act_right<A: Elem>(c: Self::C<A>, k: &Self::Out) -> Self::C<A>;

    fn weight_cast(c: &Self::C<()>) -> Self::Out {
        match Self::weigh(c, &mut |_| Ok(Self::Out::one())) {
            Ok(w) => w,
            Err(_) => unreachable!("constant weighting cannot fail"),
        }
    }

    fn weight_uncast(w: &Self::Out) -> Self::C<()> {
        Self::act(w, Self::unit(()))
    }

    fn combine_all<A: Elem>(items: impl IntoIterator<Item = Self::C<A>>) -> Self::C<A> {
        items.into_iter().fold(Self::neutral(), Self::combine)
    }

    /// The container as a plain set, when its weights are only presence.
    fn as_set<A: Elem>(_c: &Self::C<A>) -> Option<FiniteSet<A>> {
        None
    }
}

/// Pairs two containers: `bind(x, a -> map(y, b -> (a, b)))`.
pub fn pair<E: Effect, A: Elem, B: Elem>(x: &E::C<A>, y: &E::C<B>) -> E::C<(A, B)> {
    let r = E::bind(x, &mut |a| {
        let a = a.clone();
        Ok(E::map(y, &mut |b| (a.clone(), b.clone())))
    });
    match r {
        Ok(c) => c,
        Err(_) => unreachable!("pairing cannot fail"),
    }
}

/// Cartesian sequencing of a vector of containers into a container of vectors.
pub fn sequence<E: Effect, A: Elem>(cs: &[E::C<A>]) -> Result<E::C<Vec<A>>> {
    let mut acc: E::C<Vec<A>> = E::unit(Vec::new());
    for c in cs {
        acc = E::bind(&acc, &mut |prefix: &Vec<A>| {
            let prefix = prefix.clone();
            Ok(E::map(c, &mut |a| {
                let mut v = prefix.clone();
                v.push(a.clone());
                v
            }))
        })?;
    }
    Ok(acc)
}
