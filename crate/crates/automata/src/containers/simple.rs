use super::{Effect, HasNeutral};
use crate::algebra::{Elem, Monoid};
use crate::Result;
use std::marker::PhantomData;

/// The identity container: complete deterministic automata.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Identity;

impl Effect for Identity {
    type C<A: Elem> = A;
    type Out = bool;

    fn name() -> &'static str {
        "identity"
    }
    fn out_label(o: &bool) -> String {
        o.to_string()
    }
    fn out_is_zero(o: &bool) -> bool {
        !*o
    }
    fn unit<A: Elem>(a: A) -> A {
        a
    }
    fn bind<A: Elem, B: Elem>(c: &A, f: &mut dyn FnMut(&A) -> Result<B>) -> Result<B> {
        f(c)
    }
    fn weigh<A: Elem>(c: &A, f: &mut dyn FnMut(&A) -> Result<bool>) -> Result<bool> {
        f(c)
    }
    fn support<A: Elem>(c: &A) -> Vec<A> {
        vec![c.clone()]
    }
    fn render<A: Elem>(c: &A, show: &dyn Fn(&A) -> String) -> String {
        show(c)
    }
}

/// Zero or one element: partial deterministic automata.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Optional;

impl Effect for Optional {
    type C<A: Elem> = Option<A>;
    type Out = bool;

    fn name() -> &'static str {
        "optional"
    }
    fn out_label(o: &bool) -> String {
        o.to_string()
    }
    fn out_is_zero(o: &bool) -> bool {
        !*o
    }
    fn unit<A: Elem>(a: A) -> Option<A> {
        Some(a)
    }
    fn bind<A: Elem, B: Elem>(
        c: &Option<A>,
        f: &mut dyn FnMut(&A) -> Result<Option<B>>,
    ) -> Result<Option<B>> {
        match c {
            Some(a) => f(a),
            None => Ok(None),
        }
    }
    fn weigh<A: Elem>(c: &Option<A>, f: &mut dyn FnMut(&A) -> Result<bool>) -> Result<bool> {
        match c {
            Some(a) => f(a),
            None => Ok(false),
        }
    }
    fn support<A: Elem>(c: &Option<A>) -> Vec<A> {
        c.iter().cloned().collect()
    }
    fn render<A: Elem>(c: &Option<A>, show: &dyn Fn(&A) -> String) -> String {
        match c {
            Some(a) => show(a),
            None => "none".into(),
        }
    }
}

impl HasNeutral for Optional {
    fn neutral<A: Elem>() -> Option<A> {
        None
    }
}

/// A value paired with a monoid element: sequential output automata.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Writer<M>(PhantomData<M>);

impl<M: Monoid + Elem + PartialEq> Effect for Writer<M> {
    type C<A: Elem> = (A, M);
    type Out = M;

    fn name() -> &'static str {
        "writer"
    }
    fn out_is_zero(_o: &M) -> bool {
        false
    }
    fn unit<A: Elem>(a: A) -> (A, M) {
        (a, M::neutral())
    }
    fn bind<A: Elem, B: Elem>(
        c: &(A, M),
        f: &mut dyn FnMut(&A) -> Result<(B, M)>,
    ) -> Result<(B, M)> {
        let (b, m2) = f(&c.0)?;
        Ok((b, c.1.combine(&m2)))
    }
    fn weigh<A: Elem>(c: &(A, M), f: &mut dyn FnMut(&A) -> Result<M>) -> Result<M> {
        Ok(c.1.combine(&f(&c.0)?))
    }
    fn support<A: Elem>(c: &(A, M)) -> Vec<A> {
        vec![c.0.clone()]
    }
    fn render<A: Elem>(c: &(A, M), show: &dyn Fn(&A) -> String) -> String {
        format!("({}, {:?})", show(&c.0), c.1)
    }
    fn edges<A: Elem>(c: &(A, M)) -> Vec<(A, Option<String>)> {
        vec![(c.0.clone(), Some(format!("{:?}", c.1)))]
    }
}
