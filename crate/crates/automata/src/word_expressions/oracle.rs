use super::ast::{Operator, WordExpr};
use super::random::all_words;
use crate::algebra::{Elem, StarSemiring};
use crate::Result;
use std::collections::{BTreeMap, HashMap};

/// Weights of every word up to a length, computed from the semantics of
/// the operators on formal series truncated at `max_len` (no automaton
/// involved). Only nonzero weights are kept.
pub fn brute_force_language<W: StarSemiring, Sym: Elem>(
    e: &WordExpr<W, Sym>,
    alphabet: &[Sym],
    max_len: usize,
) -> Result<BTreeMap<Vec<Sym>, W>> {
    let words = all_words(alphabet, max_len);
    let series = eval(e, &words)?;
    Ok(series.into_iter().filter(|(_, w)| !w.is_zero()).collect())
}

/// Looks a word up in an oracle map.
pub fn oracle_weight<W: StarSemiring, Sym: Elem>(map: &BTreeMap<Vec<Sym>, W>, w: &[Sym]) -> W {
    map.get(w).cloned().unwrap_or_else(W::zero)
}

type Series<W, Sym> = HashMap<Vec<Sym>, W>;

fn get<W: StarSemiring, Sym: Elem>(s: &Series<W, Sym>, w: &[Sym]) -> W {
    s.get(w).cloned().unwrap_or_else(W::zero)
}

fn pointwise<W: StarSemiring, Sym: Elem>(
    words: &[Vec<Sym>],
    f: &mut dyn FnMut(&[Sym]) -> Result<W>,
) -> Result<Series<W, Sym>> {
    words.iter().map(|w| Ok((w.clone(), f(w)?))).collect()
}

fn eval<W: StarSemiring, Sym: Elem>(e: &WordExpr<W, Sym>, words: &[Vec<Sym>]) -> Result<Series<W, Sym>> {
    Ok(match e {
        WordExpr::Epsilon => pointwise(words, &mut |w| Ok(if w.is_empty() { W::one() } else { W::zero() }))?,
        WordExpr::Empty => pointwise(words, &mut |_| Ok(W::zero()))?,
        WordExpr::Symbol(a) => pointwise(words, &mut |w| Ok(if w.len() == 1 && w[0] == *a { W::one() } else { W::zero() }))?,
        WordExpr::Op(op, es) => {
            let subs = es.iter().map(|x| eval(x, words)).collect::<Result<Vec<_>>>()?;
            match op {
                Operator::Plus => pointwise(words, &mut |w| Ok(get(&subs[0], w).plus(&get(&subs[1], w))))?,
                Operator::Inter => pointwise(words, &mut |w| Ok(get(&subs[0], w).times(&get(&subs[1], w))))?,
                Operator::Not => pointwise(words, &mut |w| get(&subs[0], w).try_not())?,
                Operator::MultL(k) => pointwise(words, &mut |w| Ok(k.times(&get(&subs[0], w))))?,
                Operator::MultR(k) => pointwise(words, &mut |w| Ok(get(&subs[0], w).times(k)))?,
                Operator::Function(f) => pointwise(words, &mut |w| {
                    let args: Vec<W> = subs.iter().map(|s| get(s, w)).collect();
                    f.apply(&args)
                })?,
                Operator::Concat => pointwise(words, &mut |w| {
                    let mut acc = W::zero();
                    for i in 0..=w.len() {
                        acc = acc.plus(&get(&subs[0], &w[..i]).times(&get(&subs[1], &w[i..])));
                    }
                    Ok(acc)
                })?,
                Operator::Star => {
                    let x = &subs[0];
                    let s = get(x, &[]).star()?;
                    // words come shortest first, so every proper suffix is ready
                    let mut y: Series<W, Sym> = HashMap::new();
                    for w in words {
                        let v = if w.is_empty() {
                            s.clone()
                        } else {
                            let mut acc = W::zero();
                            for i in 1..=w.len() {
                                acc = acc.plus(&get(x, &w[..i]).times(&get(&y, &w[i..])));
                            }
                            s.times(&acc)
                        };
                        y.insert(w.clone(), v);
                    }
                    y
                }
            }
        }
    })
}
