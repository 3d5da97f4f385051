use super::ast::{EnrichedExpr, TreeExp, WordAtom, WordExp};
use crate::algebra::{Elem, StarSemiring};
use crate::word_expressions::{Operator, WordExpr};
use crate::{Error, Result};

/// Parses the tree expression syntax: atoms `@f(v1,...,vn)` (or `@a` when
/// nullary), variables `$v`, `0` for the empty expression, `e1 + e2`,
/// `e1 .v e2` for the substitution of `v` in `e2` by `e1`, and the
/// postfix star `e *v`. Sums bind loosest, stars tightest; both binary
/// operators associate to the left.
pub fn parse_tree_expression(text: &str) -> Result<TreeExp<String>> {
    let mut p = Parser { chars: text.chars().collect(), pos: 0 };
    let e = p.sum()?;
    p.ws();
    if p.pos != p.chars.len() {
        return Err(Error::parse(p.pos, "trailing input"));
    }
    Ok(e)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn name(&mut self, what: &str) -> Result<String> {
        self.ws();
        let start = self.pos;
        while self.pos < self.chars.len() && (self.chars[self.pos].is_alphanumeric() || self.chars[self.pos] == '_') {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::parse(start, format!("expected {what}")));
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }

    fn sum(&mut self) -> Result<TreeExp<String>> {
        let mut e = self.sub()?;
        while self.eat('+') {
            e = EnrichedExpr::sum(e, self.sub()?);
        }
        Ok(e)
    }

    fn sub(&mut self) -> Result<TreeExp<String>> {
        let mut e = self.postfix()?;
        while self.eat('.') {
            let v = self.name("a variable after `.`")?;
            e = EnrichedExpr::sub(v, e, self.postfix()?);
        }
        Ok(e)
    }

    fn postfix(&mut self) -> Result<TreeExp<String>> {
        let mut e = self.atom()?;
        while self.eat('*') {
            let v = self.name("a variable after `*`")?;
            e = EnrichedExpr::star(v, e);
        }
        Ok(e)
    }

    fn atom(&mut self) -> Result<TreeExp<String>> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.sum()?;
                if !self.eat(')') {
                    return Err(Error::parse(self.pos, "expected `)`"));
                }
                Ok(e)
            }
            Some('0') => {
                self.pos += 1;
                Ok(EnrichedExpr::Empty)
            }
            Some('$') => {
                self.pos += 1;
                Ok(EnrichedExpr::Var(self.name("a variable after `$`")?))
            }
            Some('@') => {
                self.pos += 1;
                let f = self.name("a symbol after `@`")?;
                let mut vars = Vec::new();
                if self.eat('(') && !self.eat(')') {
                    loop {
                        vars.push(self.name("a variable")?);
                        if self.eat(')') {
                            break;
                        }
                        if !self.eat(',') {
                            return Err(Error::parse(self.pos, "expected `,` or `)`"));
                        }
                    }
                }
                Ok(TreeExp::atom(&f, vars))
            }
            Some(c) => Err(Error::parse(self.pos, format!("unexpected `{c}`"))),
            None => Err(Error::parse(self.pos, "unexpected end of input")),
        }
    }
}

/// Fully parenthesized text accepted back by [`parse_tree_expression`].
pub fn print_tree_expression(e: &TreeExp<String>) -> String {
    e.to_string()
}

/// Translation of a word expression built from sums, concatenations and
/// stars: `e1.e2` becomes the substitution of `()` in `e2` by `e1`.
pub fn from_word_expression<W: StarSemiring, S: Elem>(e: &WordExpr<W, S>) -> Result<WordExp<S>> {
    Ok(match e {
        WordExpr::Epsilon => WordExp::epsilon(),
        WordExpr::Empty => EnrichedExpr::Empty,
        WordExpr::Symbol(a) => WordExp::atom(a.clone()),
        WordExpr::Op(op, es) => {
            let sub = |i: usize| from_word_expression(&es[i]);
            match op {
                Operator::Plus => EnrichedExpr::sum(sub(0)?, sub(1)?),
                Operator::Concat => WordExp::concat(sub(0)?, sub(1)?),
                Operator::Star => EnrichedExpr::star((), sub(0)?),
                other => {
                    return Err(Error::Unsupported(format!("{} operator has no enriched counterpart", op_name(other))))
                }
            }
        }
    })
}

fn op_name<W>(op: &Operator<W>) -> &'static str {
    match op {
        Operator::MultL(_) | Operator::MultR(_) => "scalar",
        Operator::Not => "complement",
        Operator::Inter => "intersection",
        Operator::Function(_) => "function",
        _ => "simple",
    }
}

/// Back to the word syntax.
pub fn to_word_expression<W: StarSemiring, S: Elem>(e: &WordExp<S>) -> WordExpr<W, S> {
    match e {
        EnrichedExpr::Empty => WordExpr::Empty,
        EnrichedExpr::Var(()) => WordExpr::Epsilon,
        EnrichedExpr::Tensor(WordAtom(a)) => WordExpr::Symbol(a.clone()),
        EnrichedExpr::Sum(a, b) => WordExpr::plus(to_word_expression(a), to_word_expression(b)),
        EnrichedExpr::Sub((), a, b) => WordExpr::concat(to_word_expression(a), to_word_expression(b)),
        EnrichedExpr::Star((), a) => WordExpr::star(to_word_expression(a)),
    }
}
