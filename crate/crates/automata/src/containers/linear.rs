use super::{Effect, HasNeutral, Semimodule};
use crate::algebra::{Elem, StarSemiring};
use crate::Result;
use std::collections::BTreeMap;
use std::fmt;
use std::marker::PhantomData;

/// Finite linear combination with nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinComb<W: Ord, A: Ord>(BTreeMap<A, W>);

impl<W: StarSemiring, A: Elem> LinComb<W, A> {
    pub fn zero() -> Self {
        LinComb(BTreeMap::new())
    }
    pub fn single(k: W, a: A) -> Self {
        let mut c = Self::zero();
        c.add(k, a);
        c
    }
    pub fn add(&mut self, k: W, a: A) {
        if k.is_zero() {
            return;
        }
        let v = match self.0.remove(&a) {
            Some(old) => old.plus(&k),
            None => k,
        };
        if !v.is_zero() {
            self.0.insert(a, v);
        }
    }
    pub fn coeff(&self, a: &A) -> W {
        self.0.get(a).cloned().unwrap_or_else(W::zero)
    }
    pub fn iter(&self) -> impl Iterator<Item = (&A, &W)> {
        self.0.iter()
    }
    pub fn len(&self) -> usize {
        self.0.len()
    }
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
    pub fn scale(&self, k: &W, left: bool) -> Self {
        let mut out = Self::zero();
        for (a, w) in self.iter() {
            out.add(if left { k.times(w) } else { w.times(k) }, a.clone());
        }
        out
    }
}

impl<W: StarSemiring, A: Elem> FromIterator<(W, A)> for LinComb<W, A> {
    fn from_iter<I: IntoIterator<Item = (W, A)>>(iter: I) -> Self {
        let mut c = Self::zero();
        for (k, a) in iter {
            c.add(k, a);
        }
        c
    }
}

impl<W: StarSemiring, A: Elem + fmt::Display> fmt::Display for LinComb<W, A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "0");
        }
        for (i, (a, w)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{w}·{a}")?;
        }
        Ok(())
    }
}

/// Linear combinations over a semiring: weighted automata.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Linear<W>(PhantomData<W>);

impl<W: StarSemiring> Effect for Linear<W> {
    type C<A: Elem> = LinComb<W, A>;
    type Out = W;

    fn name() -> &'static str {
        "linear"
    }
    fn out_label(o: &W) -> String {
        o.to_string()
    }
    fn out_is_zero(o: &W) -> bool {
        o.is_zero()
    }
    fn unit<A: Elem>(a: A) -> LinComb<W, A> {
        LinComb::single(W::one(), a)
    }
    fn bind<A: Elem, B: Elem>(
        c: &LinComb<W, A>,
        f: &mut dyn FnMut(&A) -> Result<LinComb<W, B>>,
    ) -> Result<LinComb<W, B>> {
        let mut out = LinComb::zero();
        for (a, w) in c.iter() {
            for (b, v) in f(a)?.iter() {
                out.add(w.times(v), b.clone());
            }
        }
        Ok(out)
    }
    fn weigh<A: Elem>(c: &LinComb<W, A>, f: &mut dyn FnMut(&A) -> Result<W>) -> Result<W> {
        let mut acc = W::zero();
        for (a, w) in c.iter() {
            acc = acc.plus(&w.times(&f(a)?));
        }
        Ok(acc)
    }
    fn support<A: Elem>(c: &LinComb<W, A>) -> Vec<A> {
        c.0.keys().cloned().collect()
    }
    fn render<A: Elem>(c: &LinComb<W, A>, show: &dyn Fn(&A) -> String) -> String {
        if c.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = c.iter().map(|(a, w)| format!("{w}·{}", show(a))).collect();
        parts.join(" + ")
    }
    fn edges<A: Elem>(c: &LinComb<W, A>) -> Vec<(A, Option<String>)> {
        c.iter().map(|(a, w)| (a.clone(), Some(w.to_string()))).collect()
    }
}

impl<W: StarSemiring> HasNeutral for Linear<W> {
    fn neutral<A: Elem>() -> LinComb<W, A> {
        LinComb::zero()
    }
}

impl<W: StarSemiring> Semimodule for Linear<W> {
    const COMMUTATIVE: bool = true;

    fn combine<A: Elem>(mut x: LinComb<W, A>, y: LinComb<W, A>) -> LinComb<W, A> {
        for (a, w) in y.0 {
            x.add(w, a);
        }
        x
    }
    fn act<A: Elem>(k: &W, c: LinComb<W, A>) -> LinComb<W, A> {
        c.scale(k, true)
    }
    fn act_right<A: Elem>(c: LinComb<W, A>, k: &W) -> LinComb<W, A> {
        c.scale(k, false)
    }
    fn as_set<A: Elem>(c: &LinComb<W, A>) -> Option<super::FiniteSet<A>> {
        // only meaningful when the weights are booleans
        if W::idempotent() && W::one().plus(&W::one()).is_one() && W::from_int(2).is_one() {
            Some(c.0.keys().cloned().collect())
        } else {
            None
        }
    }
}
