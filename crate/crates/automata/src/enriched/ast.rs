use crate::algebra::{Elem, Label, Positioned, RankedSymbol, StarSemiring};
use crate::containers::{Effect, LinComb};
use std::collections::BTreeSet;
use std::fmt;

/// What an expression needs from its atoms. An atom pairs a symbol with
/// the variables it reads, one per argument.
pub trait AtomOps: Elem {
    type Var: Elem;
    type Sym: Elem;
    /// The atom with an indexed symbol.
    type Lin: AtomOps<Var = Self::Var, Sym = Positioned<Self::Sym>>;

    fn symbol(&self) -> &Self::Sym;

    fn vars(&self) -> Vec<Self::Var>;

    /// Indexes the symbol with `counter` and returns the next counter.
    fn linearize(&self, counter: usize) -> (Self::Lin, usize);

    fn delinearize(lin: &Self::Lin) -> Self;

    fn extract_final<E: Effect>(&self) -> E::C<Self::Sym> {
        E::unit(self.symbol().clone())
    }

    fn final_weight<W: StarSemiring>(&self, s: &Self::Sym) -> W {
        if self.symbol() == s {
            W::one()
        } else {
            W::zero()
        }
    }

    /// The atom read as a transition: reading `input` from the start
    /// states of `args` reaches the symbol state.
    fn fires(&self, input: &Self::Sym, args: &[Self::Var]) -> bool {
        self.symbol() == input && self.vars() == args
    }
}

/// Word atom: a symbol read after the unique variable `()`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WordAtom<S>(pub S);

impl<S: Elem> AtomOps for WordAtom<S> {
    type Var = ();
    type Sym = S;
    type Lin = WordAtom<Positioned<S>>;

    fn symbol(&self) -> &S {
        &self.0
    }
    fn vars(&self) -> Vec<()> {
        vec![()]
    }
    fn linearize(&self, counter: usize) -> (Self::Lin, usize) {
        (WordAtom(Positioned::new(counter, self.0.clone())), counter + 1)
    }
    fn delinearize(lin: &Self::Lin) -> Self {
        WordAtom(lin.0.base.clone())
    }
}

/// Tree atom `f(v1,...,vn)`: a symbol of arity n over n variables.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TreeAtom<S, V> {
    pub symbol: S,
    pub vars: Vec<V>,
}

impl<S: Elem, V: Elem> AtomOps for TreeAtom<S, V> {
    type Var = V;
    type Sym = S;
    type Lin = TreeAtom<Positioned<S>, V>;

    fn symbol(&self) -> &S {
        &self.symbol
    }
    fn vars(&self) -> Vec<V> {
        self.vars.clone()
    }
    fn linearize(&self, counter: usize) -> (Self::Lin, usize) {
        (TreeAtom { symbol: Positioned::new(counter, self.symbol.clone()), vars: self.vars.clone() }, counter + 1)
    }
    fn delinearize(lin: &Self::Lin) -> Self {
        TreeAtom { symbol: lin.symbol.base.clone(), vars: lin.vars.clone() }
    }
}

/// Expressions over a tensor atom. `Sub(v, e1, e2)` replaces the
/// occurrences of `v` at the start of the runs of `e2` by runs of `e1`,
/// and `Star(v, e)` iterates that substitution.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EnrichedExpr<A: AtomOps> {
    Empty,
    Var(A::Var),
    Tensor(A),
    Sum(Box<EnrichedExpr<A>>, Box<EnrichedExpr<A>>),
    Sub(A::Var, Box<EnrichedExpr<A>>, Box<EnrichedExpr<A>>),
    Star(A::Var, Box<EnrichedExpr<A>>),
}

pub type WordExp<S> = EnrichedExpr<WordAtom<S>>;
pub type TreeExp<V> = EnrichedExpr<TreeAtom<RankedSymbol, V>>;

impl<A: AtomOps> EnrichedExpr<A> {
    pub fn sum(a: Self, b: Self) -> Self {
        EnrichedExpr::Sum(Box::new(a), Box::new(b))
    }

    pub fn sub(v: A::Var, e1: Self, e2: Self) -> Self {
        EnrichedExpr::Sub(v, Box::new(e1), Box::new(e2))
    }

    pub fn star(v: A::Var, e: Self) -> Self {
        EnrichedExpr::Star(v, Box::new(e))
    }

    /// Conventional substitution order: `concat_var(v, e1, e2)` plugs `e2`
    /// into the `v` leaves of `e1`.
    pub fn concat_var(v: A::Var, e1: Self, e2: Self) -> Self {
        Self::sub(v, e2, e1)
    }

    pub fn size(&self) -> usize {
        match self {
            EnrichedExpr::Empty | EnrichedExpr::Var(_) | EnrichedExpr::Tensor(_) => 1,
            EnrichedExpr::Sum(a, b) | EnrichedExpr::Sub(_, a, b) => 1 + a.size() + b.size(),
            EnrichedExpr::Star(_, e) => 1 + e.size(),
        }
    }

    pub fn atoms(&self) -> Vec<&A> {
        let mut out = Vec::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms<'a>(&'a self, out: &mut Vec<&'a A>) {
        match self {
            EnrichedExpr::Tensor(a) => out.push(a),
            EnrichedExpr::Sum(a, b) | EnrichedExpr::Sub(_, a, b) => {
                a.collect_atoms(out);
                b.collect_atoms(out);
            }
            EnrichedExpr::Star(_, e) => e.collect_atoms(out),
            _ => {}
        }
    }

    pub fn symbols(&self) -> BTreeSet<A::Sym> {
        self.atoms().into_iter().map(|a| a.symbol().clone()).collect()
    }

    /// Whether a run may start at `v`: it occurs as a variable, in an
    /// atom, or as the variable of a star (which always denotes it).
    pub fn mentions(&self, v: &A::Var) -> bool {
        match self {
            EnrichedExpr::Empty => false,
            EnrichedExpr::Var(w) => w == v,
            EnrichedExpr::Tensor(a) => a.vars().contains(v),
            EnrichedExpr::Sum(a, b) | EnrichedExpr::Sub(_, a, b) => a.mentions(v) || b.mentions(v),
            EnrichedExpr::Star(w, e) => w == v || e.mentions(v),
        }
    }

    pub fn map_atoms<B: AtomOps<Var = A::Var>>(&self, f: &mut dyn FnMut(&A) -> B) -> EnrichedExpr<B> {
        match self {
            EnrichedExpr::Empty => EnrichedExpr::Empty,
            EnrichedExpr::Var(v) => EnrichedExpr::Var(v.clone()),
            EnrichedExpr::Tensor(a) => EnrichedExpr::Tensor(f(a)),
            EnrichedExpr::Sum(a, b) => EnrichedExpr::sum(a.map_atoms(f), b.map_atoms(f)),
            EnrichedExpr::Sub(v, a, b) => EnrichedExpr::sub(v.clone(), a.map_atoms(f), b.map_atoms(f)),
            EnrichedExpr::Star(v, e) => EnrichedExpr::star(v.clone(), e.map_atoms(f)),
        }
    }

    /// Operands of a top-level sum, flattened, without `Empty` ones.
    pub fn summands(&self) -> Vec<&Self> {
        match self {
            EnrichedExpr::Sum(a, b) => {
                let mut v = a.summands();
                v.extend(b.summands());
                v
            }
            EnrichedExpr::Empty => Vec::new(),
            e => vec![e],
        }
    }

    /// Flattens, sorts and deduplicates every sum, dropping `Empty`
    /// operands.
    pub fn aci_normalize(&self) -> Self {
        self.normalize_with(true)
    }

    /// Like [`aci_normalize`](Self::aci_normalize), but keeps duplicates
    /// unless `idempotent`.
    pub fn normalize_with(&self, idempotent: bool) -> Self {
        match self {
            EnrichedExpr::Sum(..) => {
                let mut parts: Vec<Self> = Vec::new();
                for p in self.flat_parts() {
                    let p = p.normalize_with(idempotent);
                    match p {
                        EnrichedExpr::Empty => {}
                        EnrichedExpr::Sum(..) => parts.extend(p.summands().into_iter().cloned()),
                        p => parts.push(p),
                    }
                }
                parts.sort();
                if idempotent {
                    parts.dedup();
                }
                Self::sum_of(parts)
            }
            EnrichedExpr::Sub(v, a, b) => EnrichedExpr::sub(v.clone(), a.normalize_with(idempotent), b.normalize_with(idempotent)),
            EnrichedExpr::Star(v, e) => EnrichedExpr::star(v.clone(), e.normalize_with(idempotent)),
            e => e.clone(),
        }
    }

    fn flat_parts(&self) -> Vec<&Self> {
        match self {
            EnrichedExpr::Sum(a, b) => {
                let mut v = a.flat_parts();
                v.extend(b.flat_parts());
                v
            }
            e => vec![e],
        }
    }

    /// Right-nested sum; `Empty` for no operand.
    pub fn sum_of(parts: Vec<Self>) -> Self {
        let mut it = parts.into_iter().rev();
        match it.next() {
            None => EnrichedExpr::Empty,
            Some(last) => it.fold(last, |acc, p| Self::sum(p, acc)),
        }
    }

    /// Multiplicities of the operands of a top-level sum.
    pub fn weighted_sum_decomposition<W: StarSemiring>(&self) -> LinComb<W, Self> {
        self.summands().into_iter().map(|e| (W::one(), e.clone())).collect()
    }

    /// Indexes the atoms from `start` on, left to right.
    pub fn linearize_from(&self, start: usize) -> (EnrichedExpr<A::Lin>, usize) {
        match self {
            EnrichedExpr::Empty => (EnrichedExpr::Empty, start),
            EnrichedExpr::Var(v) => (EnrichedExpr::Var(v.clone()), start),
            EnrichedExpr::Tensor(a) => {
                let (l, n) = a.linearize(start);
                (EnrichedExpr::Tensor(l), n)
            }
            EnrichedExpr::Sum(a, b) => {
                let (la, n) = a.linearize_from(start);
                let (lb, n) = b.linearize_from(n);
                (EnrichedExpr::sum(la, lb), n)
            }
            EnrichedExpr::Sub(v, a, b) => {
                let (la, n) = a.linearize_from(start);
                let (lb, n) = b.linearize_from(n);
                (EnrichedExpr::sub(v.clone(), la, lb), n)
            }
            EnrichedExpr::Star(v, e) => {
                let (le, n) = e.linearize_from(start);
                (EnrichedExpr::star(v.clone(), le), n)
            }
        }
    }

    pub fn linearize(&self) -> EnrichedExpr<A::Lin> {
        self.linearize_from(1).0
    }

    pub fn delinearize(lin: &EnrichedExpr<A::Lin>) -> Self {
        lin.map_atoms(&mut |a| A::delinearize(a))
    }
}

impl<S: Elem> WordExp<S> {
    pub fn atom(s: S) -> Self {
        EnrichedExpr::Tensor(WordAtom(s))
    }

    pub fn epsilon() -> Self {
        EnrichedExpr::Var(())
    }

    /// Conventional concatenation: `e1` is read first.
    pub fn concat(e1: Self, e2: Self) -> Self {
        Self::sub((), e1, e2)
    }

    /// Mirror image: substitutions swap their operands.
    pub fn reversed(&self) -> Self {
        match self {
            EnrichedExpr::Sum(a, b) => Self::sum(a.reversed(), b.reversed()),
            EnrichedExpr::Sub(_, a, b) => Self::sub((), b.reversed(), a.reversed()),
            EnrichedExpr::Star(_, e) => Self::star((), e.reversed()),
            e => e.clone(),
        }
    }
}

impl<V: Elem> TreeExp<V> {
    /// Atom `f(vars)`, the arity being the number of variables.
    pub fn atom(name: &str, vars: Vec<V>) -> Self {
        EnrichedExpr::Tensor(TreeAtom { symbol: RankedSymbol::new(name, vars.len()), vars })
    }

    /// Every atom has as many variables as its symbol's arity.
    pub fn well_formed(&self) -> bool {
        self.atoms().iter().all(|a| a.symbol.arity == a.vars.len())
    }
}

impl<A: AtomOps + fmt::Display> fmt::Display for EnrichedExpr<A>
where
    A::Var: Label,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnrichedExpr::Empty => write!(f, "0"),
            EnrichedExpr::Var(v) => write!(f, "${}", v.label()),
            EnrichedExpr::Tensor(a) => write!(f, "{a}"),
            EnrichedExpr::Sum(a, b) => write!(f, "({a} + {b})"),
            EnrichedExpr::Sub(v, a, b) => write!(f, "({a} .{} {b})", v.label()),
            EnrichedExpr::Star(v, e) => write!(f, "({e})*{}", v.label()),
        }
    }
}

impl<S: fmt::Display> fmt::Display for WordAtom<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<S: fmt::Display, V: Label> fmt::Display for TreeAtom<S, V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "@{}", self.symbol)?;
        if !self.vars.is_empty() {
            let vs: Vec<String> = self.vars.iter().map(|v| v.label()).collect();
            write!(f, "({})", vs.join(","))?;
        }
        Ok(())
    }
}

impl<A: AtomOps + fmt::Display> Label for EnrichedExpr<A>
where
    A::Var: Label,
{
    fn label(&self) -> String {
        self.to_string()
    }
}

impl<S: fmt::Display> Label for WordAtom<S> {
    fn label(&self) -> String {
        self.to_string()
    }
}
