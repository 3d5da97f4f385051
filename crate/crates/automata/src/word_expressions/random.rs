use super::ast::{Operator, WordExpr};
use crate::algebra::{Elem, StarSemiring};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Operators a random expression may use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Palette {
    /// Sum, concatenation, star.
    pub simple: bool,
    /// Left and right scalars drawn from 1..=10.
    pub scalars: bool,
    /// Complement and intersection.
    pub boolean: bool,
}

impl Palette {
    pub const SIMPLE: Palette = Palette { simple: true, scalars: false, boolean: false };
    pub const WEIGHTED: Palette = Palette { simple: true, scalars: true, boolean: false };
    pub const BOOLEAN: Palette = Palette { simple: true, scalars: false, boolean: true };

    fn kinds(&self) -> Vec<Kind> {
        let mut v = Vec::new();
        if self.simple {
            v.extend([Kind::Plus, Kind::Concat, Kind::Star]);
        }
        if self.scalars {
            v.extend([Kind::MultL, Kind::MultR]);
        }
        if self.boolean {
            v.extend([Kind::Not, Kind::Inter]);
        }
        v
    }
}

#[derive(Clone, Copy)]
enum Kind {
    Plus,
    Concat,
    Star,
    MultL,
    MultR,
    Not,
    Inter,
}

/// Expression with exactly `ops` operator nodes, deterministic in `seed`.
/// An empty palette only yields atoms.
pub fn random_expression<W: StarSemiring, Sym: Elem>(
    seed: u64,
    ops: usize,
    symbols: &[Sym],
    palette: Palette,
) -> WordExpr<W, Sym> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_expression_with(&mut rng, ops, symbols, palette)
}

pub fn random_expression_with<W: StarSemiring, Sym: Elem>(
    rng: &mut impl Rng,
    ops: usize,
    symbols: &[Sym],
    palette: Palette,
) -> WordExpr<W, Sym> {
    assert!(!symbols.is_empty(), "random expressions need at least one symbol");
    let kinds = palette.kinds();
    gen(rng, if kinds.is_empty() { 0 } else { ops }, symbols, &kinds)
}

fn gen<W: StarSemiring, Sym: Elem>(rng: &mut impl Rng, ops: usize, symbols: &[Sym], kinds: &[Kind]) -> WordExpr<W, Sym> {
    if ops == 0 {
        return WordExpr::Symbol(symbols[rng.gen_range(0..symbols.len())].clone());
    }
    let kind = kinds[rng.gen_range(0..kinds.len())];
    let rest = ops - 1;
    let scalar = |rng: &mut dyn rand::RngCore| W::from_int(rng.gen_range(1..=10));
    match kind {
        Kind::Plus | Kind::Concat | Kind::Inter => {
            let k = rng.gen_range(0..=rest);
            let l = gen(rng, k, symbols, kinds);
            let r = gen(rng, rest - k, symbols, kinds);
            let op = match kind {
                Kind::Plus => Operator::Plus,
                Kind::Concat => Operator::Concat,
                _ => Operator::Inter,
            };
            WordExpr::Op(op, vec![l, r])
        }
        Kind::Star => WordExpr::star(gen(rng, rest, symbols, kinds)),
        Kind::Not => WordExpr::not(gen(rng, rest, symbols, kinds)),
        Kind::MultL => {
            let k = scalar(rng);
            WordExpr::mult_l(k, gen(rng, rest, symbols, kinds))
        }
        Kind::MultR => {
            let k = scalar(rng);
            WordExpr::mult_r(gen(rng, rest, symbols, kinds), k)
        }
    }
}

/// Random word with a length drawn uniformly from `0..=max_len`.
pub fn random_word<Sym: Elem>(rng: &mut impl Rng, symbols: &[Sym], max_len: usize) -> Vec<Sym> {
    let n = rng.gen_range(0..=max_len);
    (0..n).map(|_| symbols[rng.gen_range(0..symbols.len())].clone()).collect()
}

/// All words of length at most `max_len`, shortest first.
pub fn all_words<Sym: Elem>(symbols: &[Sym], max_len: usize) -> Vec<Vec<Sym>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for s in symbols {
                let mut v: Vec<Sym> = w.clone();
                v.push(s.clone());
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}
