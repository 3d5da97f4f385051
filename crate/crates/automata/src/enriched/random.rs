use super::ast::{EnrichedExpr, TreeAtom, TreeExp, WordExp};
use super::parse::from_word_expression;
use crate::algebra::{Elem, RankedSymbol, RankedTree};
use crate::word_expressions::{random_expression, Palette};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// `a`, `b`, `c` nullary, `f`, `h` unary and `g` binary.
pub fn default_tree_palette() -> Vec<RankedSymbol> {
    vec![
        RankedSymbol::new("a", 0),
        RankedSymbol::new("b", 0),
        RankedSymbol::new("c", 0),
        RankedSymbol::new("f", 1),
        RankedSymbol::new("h", 1),
        RankedSymbol::new("g", 2),
    ]
}

/// Random tree expression with `size` nodes, deterministic in `seed`.
/// Closed expressions of size 2 do not exist; those requests get a leaf.
///
/// Each substitution `e1 .v e2` and each star `e *v` actually uses `v`
/// in its body. With `nullary_only` every variable is bound, so the
/// expression only denotes trees without holes.
pub fn random_tree_expression<V: Elem>(
    seed: u64,
    size: usize,
    palette: &[RankedSymbol],
    vars: &[V],
    nullary_only: bool,
) -> TreeExp<V> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_tree_expression_with(&mut rng, size, palette, vars, nullary_only)
}

pub fn random_tree_expression_with<V: Elem>(
    rng: &mut impl Rng,
    size: usize,
    palette: &[RankedSymbol],
    vars: &[V],
    nullary_only: bool,
) -> TreeExp<V> {
    assert!(!vars.is_empty(), "random tree expressions need a variable");
    let g = Gen { palette, vars };
    let free: Vec<V> = if nullary_only { Vec::new() } else { vars.to_vec() };
    g.gen(rng, size.max(1), &free)
}

/// Random word expression over sums, products and stars with `ops`
/// operators.
pub fn random_word_expression<S: Elem>(seed: u64, ops: usize, symbols: &[S]) -> WordExp<S> {
    let e = random_expression::<bool, S>(seed, ops, symbols, Palette::SIMPLE);
    from_word_expression(&e).expect("simple operators always translate")
}

struct Gen<'a, V> {
    palette: &'a [RankedSymbol],
    vars: &'a [V],
}

impl<V: Elem> Gen<'_, V> {
    fn pick<'b, T>(rng: &mut impl Rng, xs: &'b [T]) -> &'b T {
        &xs[rng.gen_range(0..xs.len())]
    }

    fn leaf(&self, rng: &mut impl Rng, free: &[V]) -> TreeExp<V> {
        let usable: Vec<&RankedSymbol> = self.palette.iter().filter(|s| s.arity == 0 || !free.is_empty()).collect();
        let var_ok = !free.is_empty();
        if usable.is_empty() && !var_ok {
            return EnrichedExpr::Empty;
        }
        if var_ok && (usable.is_empty() || rng.gen_bool(0.25)) {
            return EnrichedExpr::Var(Self::pick(rng, free).clone());
        }
        let s = *Self::pick(rng, &usable);
        let vars = (0..s.arity).map(|_| Self::pick(rng, free).clone()).collect();
        EnrichedExpr::Tensor(TreeAtom { symbol: s.clone(), vars })
    }

    fn gen(&self, rng: &mut impl Rng, n: usize, free: &[V]) -> TreeExp<V> {
        if n <= 1 {
            return self.leaf(rng, free);
        }
        let mut kinds = Vec::new();
        if !free.is_empty() {
            kinds.push(0);
        }
        if n >= 3 {
            kinds.extend([1, 2, 2]);
        }
        if kinds.is_empty() {
            // a closed expression of size 2 must be a star, needing a free variable
            return self.leaf(rng, free);
        }
        match *Self::pick(rng, &kinds) {
            0 => {
                let v = Self::pick(rng, free).clone();
                EnrichedExpr::star(v.clone(), self.mentioning(rng, n - 1, free, &v))
            }
            1 => {
                let k = rng.gen_range(1..=n - 2);
                EnrichedExpr::sum(self.gen(rng, k, free), self.gen(rng, n - 1 - k, free))
            }
            _ => {
                let v = Self::pick(rng, self.vars).clone();
                let k = rng.gen_range(1..=n - 2);
                let e1 = self.gen(rng, k, free);
                let mut inner = free.to_vec();
                if !inner.contains(&v) {
                    inner.push(v.clone());
                }
                EnrichedExpr::sub(v.clone(), e1, self.mentioning(rng, n - 1 - k, &inner, &v))
            }
        }
    }

    /// An expression of size `n` over `free` in which `v` occurs.
    fn mentioning(&self, rng: &mut impl Rng, n: usize, free: &[V], v: &V) -> TreeExp<V> {
        for _ in 0..16 {
            let e = self.gen(rng, n, free);
            if e.mentions(v) {
                return e;
            }
        }
        match n {
            0 | 1 => EnrichedExpr::Var(v.clone()),
            2 => EnrichedExpr::star(v.clone(), EnrichedExpr::Var(v.clone())),
            _ => EnrichedExpr::sum(self.gen(rng, n - 2, free), EnrichedExpr::Var(v.clone())),
        }
    }
}

enum Labeled<V> {
    Hole(V),
    Node(RankedSymbol, Vec<Labeled<V>>),
}

impl<V: Elem> Labeled<V> {
    fn plug(self, v: &V, f: &mut dyn FnMut() -> Option<Labeled<V>>) -> Option<Labeled<V>> {
        Some(match self {
            Labeled::Hole(w) if w == *v => f()?,
            Labeled::Hole(w) => Labeled::Hole(w),
            Labeled::Node(s, kids) => {
                Labeled::Node(s, kids.into_iter().map(|k| k.plug(v, f)).collect::<Option<Vec<_>>>()?)
            }
        })
    }

    fn into_tree(self, sigma: &mut Vec<V>) -> RankedTree {
        match self {
            Labeled::Hole(v) => {
                sigma.push(v);
                RankedTree::Hole
            }
            Labeled::Node(s, kids) => RankedTree::Node(s, kids.into_iter().map(|k| k.into_tree(sigma)).collect()),
        }
    }
}

/// A tree of the language of `e`, with the variables of its holes from
/// left to right, and depth at most `max_depth`. `None` when no attempt
/// succeeds (always for an empty language).
pub fn random_member<V: Elem>(rng: &mut impl Rng, e: &TreeExp<V>, max_depth: usize) -> Option<(RankedTree, Vec<V>)> {
    for _ in 0..10 {
        if let Some(l) = sample(rng, e, 6) {
            let mut sigma = Vec::new();
            let t = l.into_tree(&mut sigma);
            if t.depth() <= max_depth {
                return Some((t, sigma));
            }
        }
    }
    None
}

fn sample<V: Elem>(rng: &mut impl Rng, e: &TreeExp<V>, fuel: usize) -> Option<Labeled<V>> {
    match e {
        EnrichedExpr::Empty => None,
        EnrichedExpr::Var(v) => Some(Labeled::Hole(v.clone())),
        EnrichedExpr::Tensor(a) => {
            Some(Labeled::Node(a.symbol.clone(), a.vars.iter().map(|v| Labeled::Hole(v.clone())).collect()))
        }
        EnrichedExpr::Sum(a, b) => {
            let (x, y) = if rng.gen_bool(0.5) { (a, b) } else { (b, a) };
            sample(rng, x, fuel).or_else(|| sample(rng, y, fuel))
        }
        EnrichedExpr::Sub(v, e1, e2) => {
            let top = sample(rng, e2, fuel)?;
            top.plug(v, &mut || sample(rng, e1, fuel.saturating_sub(1)))
        }
        EnrichedExpr::Star(v, body) => {
            if fuel == 0 || rng.gen_bool(0.4) {
                return Some(Labeled::Hole(v.clone()));
            }
            let top = sample(rng, body, fuel - 1)?;
            top.plug(v, &mut || sample(rng, e, fuel - 1))
        }
    }
}
