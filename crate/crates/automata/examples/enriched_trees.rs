//! Tree expressions with named variables: the three constructions agree,
//! and the top-down ones can be drawn.

use kleisli_automata::algebra::RankedTree;
use kleisli_automata::containers::Linear;
use kleisli_automata::enriched::{
    default_tree_palette, parse_tree_expression, tree_derivation_automaton, tree_inductive_automaton,
    tree_position_automaton,
};
use kleisli_automata::tree_automata::top_down_explore;
use kleisli_automata::word_automata::Caps;

fn main() -> kleisli_automata::Result<()> {
    // trees f(...f(g(a|b, a|b))...)
    let e = parse_tree_expression("(@a + @b) .x (@g(x,x) .y (@f(y))*y)")?;
    let pos = tree_position_automaton::<Linear<i64>, String>(&e)?;
    let der = tree_derivation_automaton::<Linear<i64>, String>(&e);
    let ind = tree_inductive_automaton::<Linear<i64>, String>(&e)?;
    for t in ["g(a,b)", "f(f(g(b,b)))", "f(a)", "g(f(a),a)"] {
        let t = RankedTree::parse(t)?;
        println!("{t}: {} {} {}", pos.weight_with_vars(&t, &[])?, der.weight_with_vars(&t, &[])?, ind.weight_with_vars(&t, &[])?);
    }

    // an open expression weighs trees with holes
    let open = parse_tree_expression("@g(x,y) + @g(y,x)")?;
    let der = tree_derivation_automaton::<Linear<i64>, String>(&open);
    let t = RankedTree::parse("g(_,_)")?;
    println!("g(_,_) as (x, y): {}", der.weight_with_vars(&t, &["x".into(), "y".into()])?);

    let ex = top_down_explore(&tree_derivation_automaton::<Linear<i64>, String>(&e), &default_tree_palette(), Caps::default())?;
    print!("{}", ex.to_dot());
    Ok(())
}
