use super::ast::{Operator, WordExpr};
use crate::algebra::{Elem, StarSemiring};
use crate::Result;

/// Weight of the empty word.
pub fn nullable<W: StarSemiring, Sym: Elem>(e: &WordExpr<W, Sym>) -> Result<W> {
    Ok(match e {
        WordExpr::Epsilon => W::one(),
        WordExpr::Empty | WordExpr::Symbol(_) => W::zero(),
        WordExpr::Op(op, es) => match op {
            Operator::Concat => nullable(&es[0])?.times(&nullable(&es[1])?),
            Operator::Plus => nullable(&es[0])?.plus(&nullable(&es[1])?),
            Operator::Star => nullable(&es[0])?.star()?,
            Operator::MultL(k) => k.times(&nullable(&es[0])?),
            Operator::MultR(k) => nullable(&es[0])?.times(k),
            Operator::Not => nullable(&es[0])?.try_not()?,
            Operator::Inter => nullable(&es[0])?.times(&nullable(&es[1])?),
            Operator::Function(f) => {
                let ws = es.iter().map(nullable).collect::<Result<Vec<W>>>()?;
                f.apply(&ws)?
            }
        },
    })
}
