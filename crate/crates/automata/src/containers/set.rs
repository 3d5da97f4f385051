use super::{Effect, HasNeutral, Semimodule};
use crate::algebra::Elem;
use crate::Result;
use std::collections::BTreeSet;
use std::fmt;

/// Canonical finite set (sorted, deduplicated).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FiniteSet<A: Ord>(pub BTreeSet<A>);

impl<A: Ord> FiniteSet<A> {
    pub fn new() -> Self {
        FiniteSet(BTreeSet::new())
    }
    pub fn singleton(a: A) -> Self {
        FiniteSet(BTreeSet::from([a]))
    }
    pub fn len(&self) -> usize {
        self.0.len()
    }
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
    pub fn contains(&self, a: &A) -> bool {
        self.0.contains(a)
    }
    pub fn iter(&self) -> impl Iterator<Item = &A> {
        self.0.iter()
    }
}

impl<A: Ord> FromIterator<A> for FiniteSet<A> {
    fn from_iter<I: IntoIterator<Item = A>>(iter: I) -> Self {
        FiniteSet(iter.into_iter().collect())
    }
}

impl<A: Ord + fmt::Display> fmt::Display for FiniteSet<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "}}")
    }
}

/// Finite sets: nondeterministic automata.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sets;

impl Effect for Sets {
    type C<A: Elem> = FiniteSet<A>;
    type Out = bool;

    fn name() -> &'static str {
        "set"
    }
    fn out_label(o: &bool) -> String {
        o.to_string()
    }
    fn out_is_zero(o: &bool) -> bool {
        !*o
    }
    fn unit<A: Elem>(a: A) -> FiniteSet<A> {
        FiniteSet::singleton(a)
    }
    fn bind<A: Elem, B: Elem>(
        c: &FiniteSet<A>,
        f: &mut dyn FnMut(&A) -> Result<FiniteSet<B>>,
    ) -> Result<FiniteSet<B>> {
        let mut out = BTreeSet::new();
        for a in c.iter() {
            out.extend(f(a)?.0);
        }
        Ok(FiniteSet(out))
    }
    fn weigh<A: Elem>(c: &FiniteSet<A>, f: &mut dyn FnMut(&A) -> Result<bool>) -> Result<bool> {
        for a in c.iter() {
            if f(a)? {
                return Ok(true);
            }
        }
        Ok(false)
    }
    fn support<A: Elem>(c: &FiniteSet<A>) -> Vec<A> {
        c.iter().cloned().collect()
    }
    fn render<A: Elem>(c: &FiniteSet<A>, show: &dyn Fn(&A) -> String) -> String {
        let items: Vec<String> = c.iter().map(show).collect();
        format!("{{{}}}", items.join(","))
    }
}

impl HasNeutral for Sets {
    fn neutral<A: Elem>() -> FiniteSet<A> {
        FiniteSet::new()
    }
}

impl Semimodule for Sets {
    const COMMUTATIVE: bool = true;

    fn combine<A: Elem>(mut x: FiniteSet<A>, y: FiniteSet<A>) -> FiniteSet<A> {
        x.0.extend(y.0);
        x
    }
    fn act<A: Elem>(k: &bool, c: FiniteSet<A>) -> FiniteSet<A> {
        if *k {
            c
        } else {
            FiniteSet::new()
        }
    }
    fn act_right<A: Elem>(c: FiniteSet<A>, k: &bool) -> FiniteSet<A> {
        Self::act(k, c)
    }
    fn as_set<A: Elem>(c: &FiniteSet<A>) -> Option<FiniteSet<A>> {
        Some(c.clone())
    }
}

impl<A: Ord + crate::algebra::Label> crate::algebra::Label for FiniteSet<A> {
    fn label(&self) -> String {
        let parts: Vec<String> = self.iter().map(|a| a.label()).collect();
        format!("{{{}}}", parts.join(","))
    }
}
