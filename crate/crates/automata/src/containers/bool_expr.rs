use super::{Effect, FiniteSet, HasNeutral, Semimodule};
use crate::algebra::Elem;
use crate::{Error, Result};
use std::collections::BTreeSet;
use std::fmt;

/// Boolean formula over variables: the alternating container.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BoolExpr<A> {
    Var(A),
    Const(bool),
    Not(Box<BoolExpr<A>>),
    And(Vec<BoolExpr<A>>),
    Or(Vec<BoolExpr<A>>),
}

impl<A: Elem> BoolExpr<A> {
    pub fn var(a: A) -> Self {
        BoolExpr::Var(a)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(e: Self) -> Self {
        match e {
            BoolExpr::Const(b) => BoolExpr::Const(!b),
            BoolExpr::Not(inner) => *inner,
            e => BoolExpr::Not(Box::new(e)),
        }
    }

    pub fn and(x: Self, y: Self) -> Self {
        Self::and_all(vec![x, y])
    }

    pub fn or(x: Self, y: Self) -> Self {
        Self::or_all(vec![x, y])
    }

    pub fn and_all(items: Vec<Self>) -> Self {
        Self::junction(items, true)
    }

    pub fn or_all(items: Vec<Self>) -> Self {
        Self::junction(items, false)
    }

    // flattens, folds constants, sorts and deduplicates
    fn junction(items: Vec<Self>, conj: bool) -> Self {
        let mut set = BTreeSet::new();
        for e in items {
            match e {
                BoolExpr::Const(b) if b == conj => {}
                BoolExpr::Const(b) => return BoolExpr::Const(b),
                BoolExpr::And(xs) if conj => set.extend(xs),
                BoolExpr::Or(xs) if !conj => set.extend(xs),
                e => {
                    set.insert(e);
                }
            }
        }
        let mut v: Vec<Self> = set.into_iter().collect();
        match v.len() {
            0 => BoolExpr::Const(conj),
            1 => v.pop().unwrap(),
            _ if conj => BoolExpr::And(v),
            _ => BoolExpr::Or(v),
        }
    }

    /// A disjunction of variables (or `false`).
    pub fn is_positive_disjunction(&self) -> bool {
        match self {
            BoolExpr::Var(_) | BoolExpr::Const(false) => true,
            BoolExpr::Or(xs) => xs.iter().all(|x| matches!(x, BoolExpr::Var(_))),
            _ => false,
        }
    }

    /// ACI normal form, bottom-up through the smart constructors.
    pub fn normalize(&self) -> Self {
        match self {
            BoolExpr::Var(_) | BoolExpr::Const(_) => self.clone(),
            BoolExpr::Not(e) => Self::not(e.normalize()),
            BoolExpr::And(xs) => Self::and_all(xs.iter().map(|x| x.normalize()).collect()),
            BoolExpr::Or(xs) => Self::or_all(xs.iter().map(|x| x.normalize()).collect()),
        }
    }

    pub fn eval(&self, f: &mut dyn FnMut(&A) -> Result<bool>) -> Result<bool> {
        Ok(match self {
            BoolExpr::Var(a) => f(a)?,
            BoolExpr::Const(b) => *b,
            BoolExpr::Not(e) => !e.eval(f)?,
            BoolExpr::And(xs) => {
                let mut acc = true;
                for x in xs {
                    acc &= x.eval(f)?;
                }
                acc
            }
            BoolExpr::Or(xs) => {
                let mut acc = false;
                for x in xs {
                    acc |= x.eval(f)?;
                }
                acc
            }
        })
    }

    pub fn substitute<B: Elem>(
        &self,
        f: &mut dyn FnMut(&A) -> Result<BoolExpr<B>>,
    ) -> Result<BoolExpr<B>> {
        Ok(match self {
            BoolExpr::Var(a) => f(a)?,
            BoolExpr::Const(b) => BoolExpr::Const(*b),
            BoolExpr::Not(e) => BoolExpr::not(e.substitute(f)?),
            BoolExpr::And(xs) => {
                let v = xs.iter().map(|x| x.substitute(f)).collect::<Result<_>>()?;
                BoolExpr::and_all(v)
            }
            BoolExpr::Or(xs) => {
                let v = xs.iter().map(|x| x.substitute(f)).collect::<Result<_>>()?;
                BoolExpr::or_all(v)
            }
        })
    }

    pub fn variables(&self) -> BTreeSet<A> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<A>) {
        match self {
            BoolExpr::Var(a) => {
                out.insert(a.clone());
            }
            BoolExpr::Const(_) => {}
            BoolExpr::Not(e) => e.collect_vars(out),
            BoolExpr::And(xs) | BoolExpr::Or(xs) => xs.iter().for_each(|x| x.collect_vars(out)),
        }
    }

    pub fn render(&self, show: &dyn Fn(&A) -> String) -> String {
        match self {
            BoolExpr::Var(a) => show(a),
            BoolExpr::Const(b) => b.to_string(),
            BoolExpr::Not(e) => format!("not({})", e.render(show)),
            BoolExpr::And(xs) | BoolExpr::Or(xs) => {
                let op = if matches!(self, BoolExpr::And(_)) { "and" } else { "or" };
                let parts: Vec<String> = xs.iter().map(|x| x.render(show)).collect();
                format!("{op}({})", parts.join(","))
            }
        }
    }
}

/// Evaluates a closed formula.
pub fn eval_bool_expr<A: Elem>(e: &BoolExpr<A>) -> Result<bool> {
    e.eval(&mut |_| Err(Error::FreeVariable))
}

impl<A: Elem + fmt::Display> fmt::Display for BoolExpr<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(&|a| a.to_string()))
    }
}

/// A conjunction of state atoms.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Clause<A: Ord>(pub BTreeSet<A>);

impl<A: Ord> Default for Clause<A> {
    fn default() -> Self {
        Clause(BTreeSet::new())
    }
}

impl<A: Ord + fmt::Display> fmt::Display for Clause<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
        write!(f, "[{}]", parts.join("&"))
    }
}

/// Disjunctive normal form of a positive formula.
///
/// Clauses are not reduced by absorption: `or(p, and(p,q))` keeps both.
pub fn bool_expr_to_clauses<A: Elem>(e: &BoolExpr<A>) -> Result<FiniteSet<Clause<A>>> {
    Ok(match e {
        BoolExpr::Var(a) => FiniteSet::singleton(Clause(BTreeSet::from([a.clone()]))),
        BoolExpr::Const(true) => FiniteSet::singleton(Clause::default()),
        BoolExpr::Const(false) => FiniteSet::new(),
        BoolExpr::Not(inner) => match eval_bool_expr(inner) {
            Ok(b) => bool_expr_to_clauses(&BoolExpr::Const(!b))?,
            Err(_) => return Err(Error::NonPositive),
        },
        BoolExpr::Or(xs) => {
            let mut out = BTreeSet::new();
            for x in xs {
                out.extend(bool_expr_to_clauses(x)?.0);
            }
            FiniteSet(out)
        }
        BoolExpr::And(xs) => {
            let mut acc: BTreeSet<Clause<A>> = BTreeSet::from([Clause::default()]);
            for x in xs {
                let cs = bool_expr_to_clauses(x)?;
                let mut next = BTreeSet::new();
                for a in &acc {
                    for c in cs.iter() {
                        let mut merged = a.0.clone();
                        merged.extend(c.0.iter().cloned());
                        next.insert(Clause(merged));
                    }
                }
                acc = next;
            }
            FiniteSet(acc)
        }
    })
}

/// Boolean formulas: alternating automata.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoolExprs;

impl Effect for BoolExprs {
    type C<A: Elem> = BoolExpr<A>;
    type Out = bool;

    fn name() -> &'static str {
        "boolexpr"
    }
    fn out_label(o: &bool) -> String {
        o.to_string()
    }
    fn out_is_zero(o: &bool) -> bool {
        !*o
    }
    fn dump_groups<A: Elem>(c: &BoolExpr<A>, show: &dyn Fn(&A) -> String) -> Vec<(Option<String>, String)> {
        vec![(None, c.render(show))]
    }
    fn unit<A: Elem>(a: A) -> BoolExpr<A> {
        BoolExpr::Var(a)
    }
    fn bind<A: Elem, B: Elem>(
        c: &BoolExpr<A>,
        f: &mut dyn FnMut(&A) -> Result<BoolExpr<B>>,
    ) -> Result<BoolExpr<B>> {
        c.substitute(f)
    }
    fn weigh<A: Elem>(c: &BoolExpr<A>, f: &mut dyn FnMut(&A) -> Result<bool>) -> Result<bool> {
        c.eval(f)
    }
    fn support<A: Elem>(c: &BoolExpr<A>) -> Vec<A> {
        c.variables().into_iter().collect()
    }
    fn render<A: Elem>(c: &BoolExpr<A>, show: &dyn Fn(&A) -> String) -> String {
        c.render(show)
    }
}

impl HasNeutral for BoolExprs {
    fn neutral<A: Elem>() -> BoolExpr<A> {
        BoolExpr::Const(false)
    }
}

impl Semimodule for BoolExprs {
    const COMMUTATIVE: bool = false;

    fn combine<A: Elem>(x: BoolExpr<A>, y: BoolExpr<A>) -> BoolExpr<A> {
        BoolExpr::or(x, y)
    }
    fn act<A: Elem>(k: &bool, c: BoolExpr<A>) -> BoolExpr<A> {
        BoolExpr::and(BoolExpr::Const(*k), c)
    }
    fn act_right<A: Elem>(c: BoolExpr<A>, k: &bool) -> BoolExpr<A> {
        Self::act(k, c)
    }
}

impl<A: Elem + crate::algebra::Label> crate::algebra::Label for BoolExpr<A> {
    fn label(&self) -> String {
        self.render(&|a| a.label())
    }
}

impl<A: Ord + crate::algebra::Label> crate::algebra::Label for Clause<A> {
    fn label(&self) -> String {
        let parts: Vec<String> = self.0.iter().map(|a| a.label()).collect();
        format!("[{}]", parts.join("&"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &'static str) -> BoolExpr<&'static str> {
        BoolExpr::Var(s)
    }

    fn clauses(cs: &[&[&'static str]]) -> FiniteSet<Clause<&'static str>> {
        cs.iter().map(|c| Clause(c.iter().copied().collect())).collect()
    }

    #[test]
    fn evaluation() {
        assert!(!eval_bool_expr(&BoolExpr::<u8>::not(BoolExpr::Const(true))).unwrap());
        let e = BoolExpr::<u8>::And(vec![BoolExpr::Const(true), BoolExpr::Const(false)]);
        assert!(!eval_bool_expr(&e).unwrap());
        assert_eq!(eval_bool_expr(&v("p")), Err(Error::FreeVariable));
    }

    #[test]
    fn dnf() {
        assert_eq!(bool_expr_to_clauses(&v("p")).unwrap(), clauses(&[&["p"]]));
        let e = BoolExpr::and(v("p"), BoolExpr::or(v("q"), v("r")));
        assert_eq!(bool_expr_to_clauses(&e).unwrap(), clauses(&[&["p", "q"], &["p", "r"]]));
        let e = BoolExpr::<u8>::Const(false);
        assert!(bool_expr_to_clauses(&e).unwrap().is_empty());
        let e = BoolExpr::Not(Box::new(v("p")));
        assert_eq!(bool_expr_to_clauses(&e), Err(Error::NonPositive));
    }

    #[test]
    fn normal_form_is_aci() {
        let a = BoolExpr::or(v("q"), BoolExpr::or(v("p"), v("q")));
        let b = BoolExpr::or(v("p"), v("q"));
        assert_eq!(a, b);
        assert_eq!(BoolExpr::and(v("p"), BoolExpr::Const(false)), BoolExpr::Const(false));
        assert_eq!(b.to_string(), "or(p,q)");
    }
}
