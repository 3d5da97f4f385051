use super::{bool_expr_to_clauses, BoolExpr, Clause, FiniteSet, LinComb};
use crate::algebra::Elem;
use crate::Result;

pub fn set_to_lin<A: Elem>(s: &FiniteSet<A>) -> LinComb<bool, A> {
    s.iter().map(|a| (true, a.clone())).collect()
}

pub fn lin_to_set<A: Elem>(c: &LinComb<bool, A>) -> FiniteSet<A> {
    c.iter().map(|(a, _)| a.clone()).collect()
}

pub fn opt_to_set<A: Elem>(o: &Option<A>) -> FiniteSet<A> {
    o.iter().cloned().collect()
}

pub fn bool_to_clauses<A: Elem>(e: &BoolExpr<A>) -> Result<FiniteSet<Clause<A>>> {
    bool_expr_to_clauses(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips() {
        let s: FiniteSet<char> = ['p', 'q'].into_iter().collect();
        let l = set_to_lin(&s);
        assert!(l.coeff(&'p'));
        assert_eq!(lin_to_set(&l), s);
        assert_eq!(opt_to_set(&Some(1)), FiniteSet::singleton(1));
        let e = BoolExpr::or(BoolExpr::Var('p'), BoolExpr::and(BoolExpr::Var('q'), BoolExpr::Var('r')));
        let cs = bool_to_clauses(&e).unwrap();
        assert_eq!(cs.len(), 2);
        assert!(cs.contains(&Clause(['q', 'r'].into_iter().collect())));
    }
}
