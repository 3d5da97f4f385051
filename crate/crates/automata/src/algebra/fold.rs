use super::{RankedSymbol, RankedTree};
use crate::{Error, Result};
use std::rc::Rc;

type Endo<X> = Rc<dyn Fn(X) -> X>;

/// Promotes a symbol map to words: `word_fold(m, ab) = m(b) ∘ m(a)`.
pub fn word_fold<S, X: 'static>(symbol_map: impl Fn(&S) -> Endo<X>, word: &[S]) -> Endo<X> {
    let maps: Vec<Endo<X>> = word.iter().map(symbol_map).collect();
    Rc::new(move |x| maps.iter().fold(x, |acc, m| m(acc)))
}

/// Direct left-to-right application of a symbol step.
pub fn word_fold_apply<S, X>(word: &[S], init: X, mut step: impl FnMut(&S, X) -> X) -> X {
    word.iter().fold(init, |acc, s| step(s, acc))
}

/// Bottom-up evaluation of a nullary tree.
pub fn tree_fold<T>(
    t: &RankedTree,
    op: &mut dyn FnMut(&RankedSymbol, Vec<T>) -> Result<T>,
) -> Result<T> {
    match t {
        RankedTree::Hole => Err(Error::NotNullary),
        RankedTree::Node(f, ts) => {
            if f.arity != ts.len() {
                return Err(Error::Arity { expected: f.arity, found: ts.len() });
            }
            let vals = ts.iter().map(|c| tree_fold(c, op)).collect::<Result<Vec<_>>>()?;
            op(f, vals)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_word_is_identity() {
        let f = word_fold(|_: &char| Rc::new(|x: i32| x + 1) as Endo<i32>, &[]);
        assert_eq!(f(7), 7);
    }

    #[test]
    fn fold_order_is_left_to_right() {
        let m = |c: &char| -> Endo<String> {
            let c = *c;
            Rc::new(move |s: String| format!("{c}({s})"))
        };
        assert_eq!(word_fold(m, &['a', 'b'])("x".into()), "b(a(x))");
    }

    #[test]
    fn boolean_expression_tree() {
        let t = RankedTree::parse("and(true,false)").unwrap();
        let v = tree_fold(&t, &mut |f, xs: Vec<bool>| match f.name.as_str() {
            "and" => Ok(xs.iter().all(|x| *x)),
            "true" => Ok(true),
            "false" => Ok(false),
            other => Err(Error::UnknownSymbol(other.into())),
        });
        assert_eq!(v, Ok(false));
        let bad = tree_fold(&RankedTree::leaf("zz"), &mut |f, _: Vec<bool>| {
            Err(Error::UnknownSymbol(f.name.clone()))
        });
        assert!(bad.is_err());
    }
}
