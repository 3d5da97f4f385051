use super::{Effect, HasNeutral, Semimodule};
use crate::algebra::{Elem, StarSemiring};
use crate::Result;
use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::marker::PhantomData;
use std::sync::Arc;

pub type WeightFn<W> = Arc<dyn Fn(&[W]) -> Result<W> + Send + Sync>;

/// A labelled n-ary function on weights. Identity is the label and arity.
#[derive(Clone)]
pub struct FunNode<W> {
    pub label: String,
    pub arity: usize,
    pub f: WeightFn<W>,
    /// Sums and scalings: nodes that commute with right concatenation.
    pub linear: bool,
}

impl<W> FunNode<W> {
    pub fn new(
        label: impl Into<String>,
        arity: usize,
        f: impl Fn(&[W]) -> Result<W> + Send + Sync + 'static,
    ) -> Self {
        FunNode { label: label.into(), arity, f: Arc::new(f), linear: false }
    }

    fn key(&self) -> (&str, usize) {
        (&self.label, self.arity)
    }
}

impl<W> fmt::Debug for FunNode<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.label, self.arity)
    }
}

impl<W> PartialEq for FunNode<W> {
    fn eq(&self, other: &Self) -> bool {
        self.key() == other.key()
    }
}
impl<W> Eq for FunNode<W> {}
impl<W> PartialOrd for FunNode<W> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl<W> Ord for FunNode<W> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}
impl<W> Hash for FunNode<W> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.key().hash(state)
    }
}

/// Operator tree with weight functions at internal nodes.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FunExpr<W, A> {
    Var(A),
    Const(W),
    Fun(FunNode<W>, Vec<FunExpr<W, A>>),
}

impl<W: StarSemiring, A: Elem> FunExpr<W, A> {
    pub fn apply(node: FunNode<W>, children: Vec<Self>) -> Self {
        FunExpr::Fun(node, children)
    }

    pub fn plus(x: Self, y: Self) -> Self {
        match (x, y) {
            (FunExpr::Const(z), y) if z.is_zero() => y,
            (x, FunExpr::Const(z)) if z.is_zero() => x,
            (x, y) => {
                let node = FunNode { linear: true, ..FunNode::new("+", 2, |ws: &[W]| Ok(ws[0].plus(&ws[1]))) };
                FunExpr::Fun(node, vec![x, y])
            }
        }
    }

    pub fn scale(k: &W, c: Self, left: bool) -> Self {
        if k.is_one() {
            return c;
        }
        if k.is_zero() {
            return FunExpr::Const(W::zero());
        }
        let kk = k.clone();
        let (label, node) = if left {
            (format!("{k}·_"), FunNode::new("", 1, move |ws: &[W]| Ok(kk.times(&ws[0]))))
        } else {
            (format!("_·{k}"), FunNode::new("", 1, move |ws: &[W]| Ok(ws[0].times(&kk))))
        };
        FunExpr::Fun(FunNode { label, linear: true, ..node }, vec![c])
    }

    /// Built from variables, zero, sums and scalings only.
    pub fn is_linear(&self) -> bool {
        match self {
            FunExpr::Var(_) => true,
            FunExpr::Const(w) => w.is_zero(),
            FunExpr::Fun(node, xs) => node.linear && xs.iter().all(|x| x.is_linear()),
        }
    }

    pub fn eval(&self, f: &mut dyn FnMut(&A) -> Result<W>) -> Result<W> {
        match self {
            FunExpr::Var(a) => f(a),
            FunExpr::Const(w) => Ok(w.clone()),
            FunExpr::Fun(node, xs) => {
                let vals = xs.iter().map(|x| x.eval(f)).collect::<Result<Vec<W>>>()?;
                (node.f)(&vals)
            }
        }
    }

    pub fn substitute<B: Elem>(
        &self,
        f: &mut dyn FnMut(&A) -> Result<FunExpr<W, B>>,
    ) -> Result<FunExpr<W, B>> {
        Ok(match self {
            FunExpr::Var(a) => f(a)?,
            FunExpr::Const(w) => FunExpr::Const(w.clone()),
            FunExpr::Fun(node, xs) => {
                let ys = xs.iter().map(|x| x.substitute(f)).collect::<Result<_>>()?;
                FunExpr::Fun(node.clone(), ys)
            }
        })
    }

    fn collect_vars(&self, out: &mut std::collections::BTreeSet<A>) {
        match self {
            FunExpr::Var(a) => {
                out.insert(a.clone());
            }
            FunExpr::Const(_) => {}
            FunExpr::Fun(_, xs) => xs.iter().for_each(|x| x.collect_vars(out)),
        }
    }

    pub fn render(&self, show: &dyn Fn(&A) -> String) -> String {
        match self {
            FunExpr::Var(a) => show(a),
            FunExpr::Const(w) => w.to_string(),
            FunExpr::Fun(node, xs) => {
                let parts: Vec<String> = xs.iter().map(|x| x.render(show)).collect();
                format!("{}({})", node.label, parts.join(","))
            }
        }
    }
}

/// Function expressions over a semiring: generalized alternating automata.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunExprs<W>(PhantomData<W>);

impl<W: StarSemiring> Effect for FunExprs<W> {
    type C<A: Elem> = FunExpr<W, A>;
    type Out = W;

    fn name() -> &'static str {
        "funexpr"
    }
    fn out_label(o: &W) -> String {
        o.to_string()
    }
    fn out_is_zero(o: &W) -> bool {
        o.is_zero()
    }
    fn dump_groups<A: Elem>(c: &FunExpr<W, A>, show: &dyn Fn(&A) -> String) -> Vec<(Option<String>, String)> {
        vec![(None, c.render(show))]
    }
    fn unit<A: Elem>(a: A) -> FunExpr<W, A> {
        FunExpr::Var(a)
    }
    fn bind<A: Elem, B: Elem>(
        c: &FunExpr<W, A>,
        f: &mut dyn FnMut(&A) -> Result<FunExpr<W, B>>,
    ) -> Result<FunExpr<W, B>> {
        c.substitute(f)
    }
    fn weigh<A: Elem>(c: &FunExpr<W, A>, f: &mut dyn FnMut(&A) -> Result<W>) -> Result<W> {
        c.eval(f)
    }
    fn support<A: Elem>(c: &FunExpr<W, A>) -> Vec<A> {
        let mut out = std::collections::BTreeSet::new();
        c.collect_vars(&mut out);
        out.into_iter().collect()
    }
    fn render<A: Elem>(c: &FunExpr<W, A>, show: &dyn Fn(&A) -> String) -> String {
        c.render(show)
    }
}

impl<W: StarSemiring> HasNeutral for FunExprs<W> {
    fn neutral<A: Elem>() -> FunExpr<W, A> {
        FunExpr::Const(W::zero())
    }
}

impl<W: StarSemiring> Semimodule for FunExprs<W> {
    const COMMUTATIVE: bool = false;

    fn combine<A: Elem>(x: FunExpr<W, A>, y: FunExpr<W, A>) -> FunExpr<W, A> {
        FunExpr::plus(x, y)
    }
    fn act<A: Elem>(k: &W, c: FunExpr<W, A>) -> FunExpr<W, A> {
        FunExpr::scale(k, c, true)
    }
    fn act_right<A: Elem>(c: FunExpr<W, A>, k: &W) -> FunExpr<W, A> {
        FunExpr::scale(k, c, false)
    }
}
