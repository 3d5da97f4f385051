//! Integer weights, a writer output and the weighted combinators.

use kleisli_automata::word_automata::fixtures::weighted_pqr;
use kleisli_automata::word_automata::{explore, is_vowel, scale_left, sequential_pair_automaton, union, Caps};

fn main() -> kleisli_automata::Result<()> {
    let aut = weighted_pqr();
    for w in ["", "A", "AB", "ABB", "BAB"] {
        let word: Vec<char> = w.chars().collect();
        println!("weight of {w:?}: {}", aut.weight(&word)?);
    }
    print!("{}", explore(&aut, &['A', 'B', 'C'], Caps::default())?.dump());

    let both = union(&aut, &scale_left(&10, &aut));
    println!("aut + 10 aut on \"AB\": {}", both.weight(&['A', 'B'])?);

    let vowels = sequential_pair_automaton(is_vowel);
    let (count, kept) = vowels.weight(&"automaton".chars().collect::<Vec<_>>())?;
    println!("vowels of \"automaton\": {} ({kept})", count.0);
    Ok(())
}
