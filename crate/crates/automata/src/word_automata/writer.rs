use super::WordAutomaton;
use crate::algebra::{Monoid, Sum};
use crate::containers::Writer;

/// Output monoid of the sequential counter: (occurrences, filtered subword).
pub type CountOut = (Sum, String);

/// One-state automaton emitting `(1, c)` for each symbol `c` satisfying the
/// predicate.
pub fn sequential_pair_automaton(
    pred: impl Fn(char) -> bool + Send + Sync + 'static,
) -> WordAutomaton<Writer<CountOut>, char, ()> {
    WordAutomaton::new(
        ((), CountOut::neutral()),
        move |c, _| Ok(((), if pred(*c) { (Sum(1), c.to_string()) } else { CountOut::neutral() })),
        |_| Ok(CountOut::neutral()),
    )
}

pub fn is_vowel(c: char) -> bool {
    "aeiouy".contains(c.to_ascii_lowercase())
}
