use crate::algebra::{Elem, Label, Positioned, StarSemiring};
use crate::containers::{FunNode, WeightFn};
use crate::{Error, Result};
use std::fmt;
use std::sync::Arc;

/// How a custom operator is written.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Fixity {
    /// `label(e1,...,en)`
    Prefix,
    /// `e label`, unary only.
    Postfix,
    /// `e1 label e2`, binary only. Higher priorities bind tighter; sums sit
    /// at 6 and concatenation at 7.
    Infix { left_assoc: bool, priority: u8 },
}

/// A custom n-ary operator: a weight function plus its notation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FunOp<W> {
    pub node: FunNode<W>,
    pub fixity: Fixity,
}

impl<W: StarSemiring> FunOp<W> {
    pub fn new(
        label: impl Into<String>,
        arity: usize,
        fixity: Fixity,
        f: impl Fn(&[W]) -> Result<W> + Send + Sync + 'static,
    ) -> Self {
        FunOp { node: FunNode::new(label, arity, f), fixity }
    }

    pub fn from_node(node: FunNode<W>) -> Self {
        FunOp { node, fixity: Fixity::Prefix }
    }

    pub fn label(&self) -> &str {
        &self.node.label
    }

    pub fn arity(&self) -> usize {
        self.node.arity
    }

    pub fn apply(&self, ws: &[W]) -> Result<W> {
        if ws.len() != self.node.arity {
            return Err(Error::Arity { expected: self.node.arity, found: ws.len() });
        }
        (self.node.f)(ws)
    }

    pub fn function(&self) -> WeightFn<W> {
        self.node.f.clone()
    }

    /// Implication `x -> y`, computed as `not(x) + y`; boolean weights only.
    pub fn implication() -> Self {
        FunOp::new("->", 2, Fixity::Infix { left_assoc: false, priority: 4 }, |ws: &[W]| {
            Ok(ws[0].try_not()?.plus(&ws[1]))
        })
    }

    /// Postfix power `e^n`.
    pub fn power(n: u32) -> Self {
        FunOp::new(format!("^{n}"), 1, Fixity::Postfix, move |ws: &[W]| {
            Ok((0..n).fold(W::one(), |acc, _| acc.times(&ws[0])))
        })
    }

    /// Prefix constant function of arity 0.
    pub fn constant(w: W) -> Self {
        let label = format!("const{w}");
        FunOp::new(label, 0, Fixity::Prefix, move |_: &[W]| Ok(w.clone()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Operator<W> {
    Concat,
    Star,
    Plus,
    MultL(W),
    MultR(W),
    Not,
    Inter,
    Function(FunOp<W>),
}

impl<W> Operator<W> {
    pub fn arity(&self) -> usize {
        match self {
            Operator::Concat | Operator::Plus | Operator::Inter => 2,
            Operator::Star | Operator::MultL(_) | Operator::MultR(_) | Operator::Not => 1,
            Operator::Function(op) => op.node.arity,
        }
    }

    /// Sum, concatenation and star.
    pub fn is_simple(&self) -> bool {
        matches!(self, Operator::Concat | Operator::Plus | Operator::Star)
    }

    pub fn is_scalar(&self) -> bool {
        matches!(self, Operator::MultL(_) | Operator::MultR(_))
    }

    pub fn is_boolean(&self) -> bool {
        matches!(self, Operator::Not | Operator::Inter)
    }
}

/// Rational word expression with generic operators.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WordExpr<W, Sym> {
    Epsilon,
    Empty,
    Symbol(Sym),
    Op(Operator<W>, Vec<WordExpr<W, Sym>>),
}

pub type PositionedExpr<W, Sym> = WordExpr<W, Positioned<Sym>>;

impl<W: StarSemiring, Sym: Elem> WordExpr<W, Sym> {
    pub fn sym(s: Sym) -> Self {
        WordExpr::Symbol(s)
    }

    pub fn plus(x: Self, y: Self) -> Self {
        WordExpr::Op(Operator::Plus, vec![x, y])
    }

    pub fn concat(x: Self, y: Self) -> Self {
        WordExpr::Op(Operator::Concat, vec![x, y])
    }

    pub fn star(x: Self) -> Self {
        WordExpr::Op(Operator::Star, vec![x])
    }

    pub fn mult_l(k: W, x: Self) -> Self {
        WordExpr::Op(Operator::MultL(k), vec![x])
    }

    pub fn mult_r(x: Self, k: W) -> Self {
        WordExpr::Op(Operator::MultR(k), vec![x])
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(x: Self) -> Self {
        WordExpr::Op(Operator::Not, vec![x])
    }

    pub fn inter(x: Self, y: Self) -> Self {
        WordExpr::Op(Operator::Inter, vec![x, y])
    }

    /// Applies a custom operator, checking its arity.
    pub fn function(op: FunOp<W>, args: Vec<Self>) -> Result<Self> {
        if args.len() != op.arity() {
            return Err(Error::Arity { expected: op.arity(), found: args.len() });
        }
        Ok(WordExpr::Op(Operator::Function(op), args))
    }

    /// Left-nested sum of a list; `Empty` when the list is empty.
    pub fn sum_of(items: Vec<Self>) -> Self {
        let mut it = items.into_iter();
        match it.next() {
            None => WordExpr::Empty,
            Some(first) => it.fold(first, WordExpr::plus),
        }
    }

    /// Number of operator nodes.
    pub fn op_count(&self) -> usize {
        match self {
            WordExpr::Op(_, es) => 1 + es.iter().map(|e| e.op_count()).sum::<usize>(),
            _ => 0,
        }
    }

    /// Number of symbol leaves.
    pub fn symbol_count(&self) -> usize {
        match self {
            WordExpr::Symbol(_) => 1,
            WordExpr::Op(_, es) => es.iter().map(|e| e.symbol_count()).sum(),
            _ => 0,
        }
    }

    /// Whether every node satisfies `ok`.
    pub fn all_ops(&self, ok: &dyn Fn(&Operator<W>) -> bool) -> bool {
        match self {
            WordExpr::Op(op, es) => ok(op) && es.iter().all(|e| e.all_ops(ok)),
            _ => true,
        }
    }

    /// Only sums, concatenations, stars and scalars.
    pub fn is_positional(&self) -> bool {
        self.all_ops(&|op| op.is_simple() || op.is_scalar())
    }

    pub fn has_function(&self) -> bool {
        !self.all_ops(&|op| !matches!(op, Operator::Function(_)))
    }

    /// Symbols occurring in the expression, sorted and deduplicated.
    pub fn alphabet(&self) -> Vec<Sym> {
        let mut out = std::collections::BTreeSet::new();
        self.collect_symbols(&mut out);
        out.into_iter().collect()
    }

    fn collect_symbols(&self, out: &mut std::collections::BTreeSet<Sym>) {
        match self {
            WordExpr::Symbol(s) => {
                out.insert(s.clone());
            }
            WordExpr::Op(_, es) => es.iter().for_each(|e| e.collect_symbols(out)),
            _ => {}
        }
    }

    /// Renames symbols.
    pub fn map_symbols<T: Elem>(&self, f: &dyn Fn(&Sym) -> T) -> WordExpr<W, T> {
        match self {
            WordExpr::Epsilon => WordExpr::Epsilon,
            WordExpr::Empty => WordExpr::Empty,
            WordExpr::Symbol(s) => WordExpr::Symbol(f(s)),
            WordExpr::Op(op, es) => WordExpr::Op(op.clone(), es.iter().map(|e| e.map_symbols(f)).collect()),
        }
    }

    /// Mirror expression: concatenations swapped, scalars moved to the
    /// other side.
    pub fn reversed(&self) -> Self {
        match self {
            WordExpr::Op(op, es) => {
                let mut rs: Vec<Self> = es.iter().map(|e| e.reversed()).collect();
                let op = match op {
                    Operator::Concat => {
                        rs.reverse();
                        Operator::Concat
                    }
                    Operator::MultL(k) => Operator::MultR(k.clone()),
                    Operator::MultR(k) => Operator::MultL(k.clone()),
                    other => other.clone(),
                };
                WordExpr::Op(op, rs)
            }
            other => other.clone(),
        }
    }

    /// Checks that each node has as many operands as its operator's arity.
    pub fn well_formed(&self) -> bool {
        match self {
            WordExpr::Op(op, es) => op.arity() == es.len() && es.iter().all(|e| e.well_formed()),
            _ => true,
        }
    }
}

impl<W: StarSemiring, Sym: Elem> WordExpr<W, Positioned<Sym>> {
    pub fn delinearize(&self) -> WordExpr<W, Sym> {
        self.map_symbols(&|p| p.base.clone())
    }
}

/// Symbols print as their label; the text is re-parsable when symbols are
/// lowercase letters.
impl<W: StarSemiring, Sym: Elem + Label> fmt::Display for WordExpr<W, Sym> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::parse::print_expression(self))
    }
}

impl<W: StarSemiring, Sym: Elem + Label> Label for WordExpr<W, Sym> {
    fn label(&self) -> String {
        super::parse::print_expression(self)
    }
}

/// Shared operator table used by the parser.
pub type OperatorTable<W> = Arc<Vec<FunOp<W>>>;
