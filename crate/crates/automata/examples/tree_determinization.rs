//! Subset construction for a nondeterministic bottom-up tree automaton.

use kleisli_automata::algebra::RankedTree;
use kleisli_automata::tree_automata::fixtures::{example_alphabet, nondeterministic_example};
use kleisli_automata::tree_automata::{bu_determinize, tree_explore};
use kleisli_automata::word_automata::Caps;

fn main() -> kleisli_automata::Result<()> {
    let nd = nondeterministic_example();
    let det = bu_determinize(&nd);
    for t in ["f(a)", "h(f(a))", "g(a,b)", "h(g(a,f(b)))", "h(a)"] {
        let t = RankedTree::parse(t)?;
        println!("{t}: {} / {}", nd.weight(&t)?, det.weight(&t)?);
    }
    let ex = tree_explore(&det, &example_alphabet(), Caps::default())?;
    println!("{} subsets", ex.states.len());
    print!("{}", ex.to_dot());
    Ok(())
}
