use super::ast::{Fixity, FunOp, Operator, WordExpr};
use crate::algebra::{Elem, Label, StarSemiring};
use crate::{Error, Result};

const SUM_PRIORITY: u8 = 6;
const CONCAT_PRIORITY: u8 = 7;

/// Custom operators available to the parser: implication `->`. Postfix
/// powers `^n` are always recognized.
pub fn default_operators<W: StarSemiring>() -> Vec<FunOp<W>> {
    vec![FunOp::implication()]
}

/// Parses a word expression over single-letter symbols.
///
/// ```text
/// expr    := term (('+' | '&') term)*
/// term    := factor ('.' factor)*
/// factor  := '[' int ']' ':' factor | factor0 (':' '[' int ']')*
/// factor0 := atom ('*' | '^' int)* | '~' factor0
/// atom    := letter | '1' | '0' | '(' expr ')' | name '(' expr,* ')'
/// ```
///
/// `1` is the empty word and `0` the empty expression.
pub fn parse_expression<W: StarSemiring>(text: &str) -> Result<WordExpr<W, char>> {
    parse_with(text, &default_operators())
}

pub fn parse_with<W: StarSemiring>(text: &str, ops: &[FunOp<W>]) -> Result<WordExpr<W, char>> {
    let mut p = Parser { chars: text.chars().collect(), pos: 0, ops };
    let e = p.expr(0)?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(Error::parse(p.pos, format!("unexpected '{}'", p.chars[p.pos])));
    }
    Ok(e)
}

struct Parser<'a, W> {
    chars: Vec<char>,
    pos: usize,
    ops: &'a [FunOp<W>],
}

impl<W: StarSemiring> Parser<'_, W> {
    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expect(&mut self, c: char) -> Result<()> {
        match self.peek() {
            Some(d) if d == c => {
                self.pos += 1;
                Ok(())
            }
            Some(d) => Err(Error::parse(self.pos, format!("expected '{c}', found '{d}'"))),
            None => Err(Error::parse(self.pos, format!("expected '{c}', found end of input"))),
        }
    }

    fn starts_with(&self, s: &str) -> bool {
        s.chars().enumerate().all(|(k, c)| self.chars.get(self.pos + k) == Some(&c))
    }

    /// Longest custom operator of the given kind starting here.
    fn custom(&mut self, want: &dyn Fn(&Fixity) -> bool) -> Option<FunOp<W>> {
        self.skip_ws();
        self.ops
            .iter()
            .filter(|op| want(&op.fixity) && !op.label().is_empty() && self.starts_with(op.label()))
            .max_by_key(|op| op.label().len())
            .cloned()
    }

    fn expr(&mut self, min: u8) -> Result<WordExpr<W, char>> {
        let mut lhs = self.factor()?;
        loop {
            let (op, priority, left) = match self.peek() {
                Some('+') => (Operator::Plus, SUM_PRIORITY, true),
                Some('&') => (Operator::Inter, SUM_PRIORITY, true),
                Some('.') => (Operator::Concat, CONCAT_PRIORITY, true),
                Some(_) => match self.custom(&|f| matches!(f, Fixity::Infix { .. })) {
                    Some(op) => {
                        let Fixity::Infix { left_assoc, priority } = op.fixity else { unreachable!() };
                        (Operator::Function(op), priority, left_assoc)
                    }
                    None => break,
                },
                None => break,
            };
            if priority < min {
                break;
            }
            self.pos += match &op {
                Operator::Function(f) => f.label().chars().count(),
                _ => 1,
            };
            let rhs = self.expr(if left { priority + 1 } else { priority })?;
            lhs = WordExpr::Op(op, vec![lhs, rhs]);
        }
        Ok(lhs)
    }

    fn scalar(&mut self) -> Result<W> {
        self.expect('[')?;
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos] != ']' {
            self.pos += 1;
        }
        let body: String = self.chars[start..self.pos].iter().collect::<String>().trim().to_string();
        let w = match body.as_str() {
            "true" => W::one(),
            "false" => W::zero(),
            _ => body
                .parse::<i64>()
                .map(W::from_int)
                .map_err(|_| Error::parse(start, format!("bad scalar '{body}'")))?,
        };
        self.expect(']')?;
        Ok(w)
    }

    fn factor(&mut self) -> Result<WordExpr<W, char>> {
        if self.peek() == Some('[') {
            let k = self.scalar()?;
            self.expect(':')?;
            let f = self.factor()?;
            return Ok(WordExpr::mult_l(k, f));
        }
        let mut f = self.factor0()?;
        loop {
            self.skip_ws();
            let save = self.pos;
            if self.peek() == Some(':') {
                self.pos += 1;
                if self.peek() == Some('[') {
                    let k = self.scalar()?;
                    f = WordExpr::mult_r(f, k);
                    continue;
                }
                self.pos = save;
            }
            break;
        }
        Ok(f)
    }

    fn factor0(&mut self) -> Result<WordExpr<W, char>> {
        if self.peek() == Some('~') {
            self.pos += 1;
            return Ok(WordExpr::not(self.factor0()?));
        }
        let mut e = self.atom()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    e = WordExpr::star(e);
                }
                Some('^') => {
                    let at = self.pos;
                    self.pos += 1;
                    let start = self.pos;
                    while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
                        self.pos += 1;
                    }
                    let digits: String = self.chars[start..self.pos].iter().collect();
                    let n = digits.parse::<u32>().map_err(|_| Error::parse(at, "expected exponent after '^'"))?;
                    e = WordExpr::Op(Operator::Function(FunOp::power(n)), vec![e]);
                }
                Some(_) => match self.custom(&|f| *f == Fixity::Postfix) {
                    Some(op) => {
                        self.pos += op.label().chars().count();
                        e = WordExpr::Op(Operator::Function(op), vec![e]);
                    }
                    None => break,
                },
                None => break,
            }
        }
        Ok(e)
    }

    fn atom(&mut self) -> Result<WordExpr<W, char>> {
        let at = self.pos;
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr(0)?;
                self.expect(')')?;
                Ok(e)
            }
            Some('1') | Some('ε') => {
                self.pos += 1;
                Ok(WordExpr::Epsilon)
            }
            Some('0') | Some('∅') => {
                self.pos += 1;
                Ok(WordExpr::Empty)
            }
            Some(c) if c.is_ascii_lowercase() => {
                let start = self.pos;
                let mut end = start;
                while end < self.chars.len() && self.chars[end].is_ascii_alphanumeric() {
                    end += 1;
                }
                let name: String = self.chars[start..end].iter().collect();
                let mut look = end;
                while look < self.chars.len() && self.chars[look].is_whitespace() {
                    look += 1;
                }
                if self.chars.get(look) == Some(&'(') {
                    if let Some(op) = self.ops.iter().find(|op| op.fixity == Fixity::Prefix && op.label() == name) {
                        let op = op.clone();
                        self.pos = look + 1;
                        let mut args = Vec::new();
                        if self.peek() != Some(')') {
                            args.push(self.expr(0)?);
                            while self.peek() == Some(',') {
                                self.pos += 1;
                                args.push(self.expr(0)?);
                            }
                        }
                        self.expect(')')?;
                        return WordExpr::function(op, args).map_err(|e| Error::parse(start, e.to_string()));
                    }
                    if end - start > 1 {
                        return Err(Error::parse(start, format!("unknown operator '{name}'")));
                    }
                }
                self.pos += 1;
                Ok(WordExpr::Symbol(c))
            }
            Some(c) => Err(Error::parse(at.max(self.pos), format!("unexpected '{c}'"))),
            None => Err(Error::parse(self.pos, "unexpected end of input")),
        }
    }
}

/// Fully parenthesized text that parses back to the same tree.
pub fn print_expression<W: StarSemiring, Sym: Elem + Label>(e: &WordExpr<W, Sym>) -> String {
    match e {
        WordExpr::Epsilon => "1".into(),
        WordExpr::Empty => "0".into(),
        WordExpr::Symbol(s) => s.label(),
        WordExpr::Op(op, es) => match op {
            Operator::Plus => format!("({}+{})", print_expression(&es[0]), print_expression(&es[1])),
            Operator::Concat => format!("({}.{})", print_expression(&es[0]), print_expression(&es[1])),
            Operator::Inter => format!("({}&{})", print_expression(&es[0]), print_expression(&es[1])),
            Operator::Star => format!("{}*", postfix_operand(&es[0])),
            Operator::Not => format!("~{}", prefix_operand(&es[0])),
            Operator::MultL(k) => format!("[{k}]:{}", print_expression(&es[0])),
            Operator::MultR(k) => format!("{}:[{k}]", prefix_operand(&es[0])),
            Operator::Function(f) => match f.fixity {
                Fixity::Postfix if es.len() == 1 => format!("{}{}", postfix_operand(&es[0]), f.label()),
                Fixity::Infix { .. } if es.len() == 2 => {
                    format!("({}{}{})", print_expression(&es[0]), f.label(), print_expression(&es[1]))
                }
                _ => {
                    let parts: Vec<String> = es.iter().map(print_expression).collect();
                    format!("{}({})", f.label(), parts.join(","))
                }
            },
        },
    }
}

/// Operand position of `~` and `:[k]`: anything but scalars.
fn prefix_operand<W: StarSemiring, Sym: Elem + Label>(e: &WordExpr<W, Sym>) -> String {
    match e {
        WordExpr::Op(Operator::MultL(_) | Operator::MultR(_), _) => format!("({})", print_expression(e)),
        _ => print_expression(e),
    }
}

/// Operand position of postfix operators: negations must be wrapped too.
fn postfix_operand<W: StarSemiring, Sym: Elem + Label>(e: &WordExpr<W, Sym>) -> String {
    match e {
        WordExpr::Op(Operator::MultL(_) | Operator::MultR(_) | Operator::Not, _) => {
            format!("({})", print_expression(e))
        }
        _ => print_expression(e),
    }
}
