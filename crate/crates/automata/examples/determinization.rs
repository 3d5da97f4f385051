//! Subset construction on a family that reaches every subset.

use kleisli_automata::word_automata::fixtures::exponential_nfa;
use kleisli_automata::word_automata::{determinize, explore, Caps};

fn main() -> kleisli_automata::Result<()> {
    for n in 3..=8 {
        let dfa = determinize(&exponential_nfa(n));
        let ex = explore(&dfa, &['a', 'b'], Caps::default())?;
        println!("n = {n}: {} subsets (2^n = {})", ex.states.len(), 1 << n);
    }
    let dfa = determinize(&exponential_nfa(3));
    print!("{}", explore(&dfa, &['a', 'b'], Caps::default())?.dump());
    Ok(())
}
