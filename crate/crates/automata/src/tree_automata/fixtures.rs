//! Ready-made tree automata used by the examples, the tests and the CLI.

use super::{BottomUpContainerTA, BottomUpDetTA, MultiFun, MultiOpBUTA, StateFuns};
use crate::algebra::{Label, Product, RankedSymbol, RankedTree};
use crate::containers::{FiniteSet, Sets};
use crate::Result;
use std::collections::BTreeMap;
use std::sync::Arc;

/// Variables of the modular arithmetic automaton.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ModVar {
    X1,
    X2,
    X3,
}

/// Evaluates arithmetic trees modulo `n`: numeric leaves, unary `-`,
/// binary `+`, `-` and `*`. Anything else, including an unassigned
/// variable, falls into the error state `None`. X1 is 65, X2 is 9 and X3
/// is unassigned.
pub fn modular_rwta(n: i64) -> BottomUpDetTA<ModVar, Option<i64>, Option<i64>> {
    BottomUpDetTA::new(
        move |v| match v {
            ModVar::X1 => Some(65i64.rem_euclid(n)),
            ModVar::X2 => Some(9i64.rem_euclid(n)),
            ModVar::X3 => None,
        },
        move |f, qs: &[Option<i64>]| {
            let args: Option<Vec<i64>> = qs.iter().copied().collect();
            let Some(args) = args else { return Ok(None) };
            Ok(match (f.name.as_str(), args.as_slice()) {
                (name, []) => name.parse::<i64>().ok().map(|k| k.rem_euclid(n)),
                ("-", [x]) => Some((-x).rem_euclid(n)),
                ("+", [x, y]) => Some((x + y).rem_euclid(n)),
                ("-", [x, y]) => Some((x - y).rem_euclid(n)),
                ("*", [x, y]) => Some((x * y).rem_euclid(n)),
                _ => None,
            })
        },
        |s| *s,
    )
}

/// The modular evaluator recognizing trees whose value is even.
pub fn modular_even(n: i64) -> BottomUpDetTA<ModVar, Option<i64>, bool> {
    modular_rwta(n).with_finality(|s| Ok(matches!(s, Some(v) if v % 2 == 0)))
}

/// Component of the height and width automaton.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Measure {
    Height,
    Width,
}

impl Label for Measure {
    fn label(&self) -> String {
        match self {
            Measure::Height => "H".into(),
            Measure::Width => "W".into(),
        }
    }
}

fn constant(k: i64) -> MultiFun<Product> {
    Arc::new(move |_| Product(k))
}

/// Multiplies the height of a tree by its number of nodes. A variable
/// (a string) counts for height 1 and width its length; runs mixing the
/// two measures collapse into `None` and weigh nothing.
pub fn height_width_automaton() -> MultiOpBUTA<String, Option<Measure>, Product> {
    MultiOpBUTA::new(
        |v: &String| {
            let len = v.chars().count() as i64;
            StateFuns::from([(Some(Measure::Height), constant(1)), (Some(Measure::Width), constant(len))])
        },
        |f, qs: &[Option<Measure>]| {
            let mut out: StateFuns<Option<Measure>, Product> = BTreeMap::new();
            if f.arity == 0 {
                out.insert(Some(Measure::Height), constant(1));
                out.insert(Some(Measure::Width), constant(1));
            } else if qs.iter().all(|q| *q == Some(Measure::Height)) {
                out.insert(Some(Measure::Height), Arc::new(|ms: &[Product]| Product(1 + ms.iter().map(|m| m.0).max().unwrap_or(0))));
            } else if qs.iter().all(|q| *q == Some(Measure::Width)) {
                out.insert(Some(Measure::Width), Arc::new(|ms: &[Product]| Product(1 + ms.iter().map(|m| m.0).sum::<i64>())));
            } else {
                out.insert(None, constant(1));
            }
            Ok(out)
        },
        |s| match s {
            Some(_) => Arc::new(|ms: &[Product]| ms[0]),
            None => constant(1),
        },
    )
}

/// The three trees weighed by [`height_width_automaton`] (12, 50 and 138),
/// and the variable filling the hole of the third one.
pub fn height_width_trees() -> ([RankedTree; 3], String) {
    let a1 = RankedTree::node("g", vec![RankedTree::leaf("a"), RankedTree::node("f", vec![RankedTree::leaf("b")])]);
    let a2 = RankedTree::node("g", vec![a1.clone(), RankedTree::node("h", vec![a1.clone()])]);
    let a3 = RankedTree::node("g", vec![a2.clone(), RankedTree::Hole]);
    ([a1, a2, a3], "operade plus".to_string())
}

/// Nondeterministic bottom-up automaton over `a, b, f, h, g`: leaves reach
/// 1, `f` sends 1 to 1 or 2, `h` keeps 2, `g` sends (1,1) to 1. State 2 is
/// final.
pub fn nondeterministic_example() -> BottomUpContainerTA<Sets, (), u8> {
    BottomUpContainerTA::closed(
        |f, qs: &[u8]| {
            let targets: Vec<u8> = match (f.name.as_str(), qs) {
                ("a" | "b", []) => vec![1],
                ("f", [1]) => vec![1, 2],
                ("h", [2]) => vec![2],
                ("g", [1, 1]) => vec![1],
                _ => vec![],
            };
            Ok(targets.into_iter().collect::<FiniteSet<u8>>())
        },
        |q| Ok(*q == 2),
    )
}

/// `a, b` nullary, `f, h` unary, `g` binary.
pub fn example_alphabet() -> Vec<RankedSymbol> {
    vec![
        RankedSymbol::new("a", 0),
        RankedSymbol::new("b", 0),
        RankedSymbol::new("f", 1),
        RankedSymbol::new("h", 1),
        RankedSymbol::new("g", 2),
    ]
}

/// Trees for the occurrence-counting example: the subject and three
/// patterns.
pub fn occurrence_trees() -> Result<(RankedTree, Vec<RankedTree>)> {
    let a1 = RankedTree::parse("g(a,f(b))")?;
    let a2 = RankedTree::parse(&format!("g({a1},h({a1}))"))?;
    let a3 = RankedTree::parse(&format!("g({a2},{a1})"))?;
    let patterns = vec![a3.clone(), RankedTree::parse("g(_,f(_))")?, RankedTree::parse("g(_,_)")?];
    Ok((a3, patterns))
}
