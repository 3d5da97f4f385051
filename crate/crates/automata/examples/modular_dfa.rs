//! Boolean combination of length-counting DFAs: (mod 2 and not mod 4) or mod 8.

use kleisli_automata::word_automata::fixtures::a4_combination;
use kleisli_automata::word_automata::{explore, Caps};

fn main() -> kleisli_automata::Result<()> {
    let a4 = a4_combination();
    for n in [0, 2, 4, 6, 8, 10] {
        let w: Vec<char> = "a".repeat(n).chars().collect();
        println!("a^{n}: {}", a4.recognizes(&w)?);
    }
    let ex = explore(&a4, &['a'], Caps::default())?;
    println!("{} accessible states", ex.states.len());
    print!("{}", ex.to_dot());
    Ok(())
}
