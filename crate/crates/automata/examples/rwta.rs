//! A deterministic bottom-up automaton evaluating arithmetic modulo 19.

use kleisli_automata::algebra::RankedTree;
use kleisli_automata::tree_automata::fixtures::{modular_even, modular_rwta, ModVar};

fn main() -> kleisli_automata::Result<()> {
    let n = 19;
    let eval = modular_rwta(n);
    let tree = RankedTree::parse("*(-(+(513,838)),37)")?;
    let ko = RankedTree::parse("*(-(+(KO,838)),37)")?;
    println!("{tree} = {:?} mod {n}", eval.weight(&tree)?);
    println!("{ko} = {:?}", eval.weight(&ko)?);

    let with_vars = RankedTree::parse("+(_,*(2,_))")?;
    println!("{with_vars} with x1, x2 = {:?}", eval.weight_with_vars(&with_vars, &[ModVar::X1, ModVar::X2])?);

    let even = modular_even(n);
    let odd = even.complement();
    for t in [&tree, &ko] {
        println!("{t}: even {} complement {}", even.recognizes(t)?, odd.recognizes(t)?);
    }
    Ok(())
}
