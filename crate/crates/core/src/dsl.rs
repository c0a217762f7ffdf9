//! Text syntax for scalars and algebra elements.
//!
//! Scalars: integers, `r`, `s`, `^` with integer exponents, `+ - * /` and
//! parentheses. Elements additionally use `e[i]`, `E[i]` (`e''`), `f[i]`,
//! `P[i]` (`f'`), `w[i]` (`ω`), `v[i]` (`ω'`), with 1-based indices.
//! Juxtaposition means multiplication.

use num_bigint::BigInt;

use crate::algebra::{Element, Engine, Letter, Parent};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(char),
    LBracket,
    RBracket,
    LParen,
    RParen,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Eof,
}

fn syntax(column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        column,
        message: message.into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        let col = k + 1;
        if c.is_whitespace() {
            k += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = k;
            while k < chars.len() && chars[k].is_ascii_digit() {
                k += 1;
            }
            let digits: String = chars[start..k].iter().collect();
            out.push((Tok::Int(digits.parse().expect("digits")), col));
            continue;
        }
        let tok = match c {
            'r' | 's' | 'e' | 'E' | 'f' | 'P' | 'w' | 'v' => Tok::Ident(c),
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            _ => return Err(syntax(col, format!("unexpected character '{c}'"))),
        };
        out.push((tok, col));
        k += 1;
    }
    let end = chars.len() + 1;
    out.push((Tok::Eof, end));
    Ok(out)
}

#[derive(Clone, Debug)]
enum Ast {
    Int(BigInt),
    Param(char),
    Letter(char, usize, usize),
    Add(Box<Ast>, Box<Ast>),
    Sub(Box<Ast>, Box<Ast>),
    Mul(Box<Ast>, Box<Ast>),
    Div(Box<Ast>, Box<Ast>, usize),
    Neg(Box<Ast>),
    Pow(Box<Ast>, i64, usize),
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn col(&self) -> usize {
        self.toks[self.pos].1
    }

    /// Column for an error at the current token; at end of input, blame the
    /// last real token.
    fn err_col(&self) -> usize {
        if *self.peek() == Tok::Eof && self.pos > 0 {
            self.toks[self.pos - 1].1
        } else {
            self.col()
        }
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if t != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<()> {
        if *self.peek() == t {
            self.bump();
            Ok(())
        } else {
            Err(syntax(self.err_col(), format!("expected {what}")))
        }
    }

    fn expr(&mut self) -> Result<Ast> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = Ast::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = Ast::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(self.peek(), Tok::Int(_) | Tok::Ident(_) | Tok::LParen)
    }

    fn term(&mut self) -> Result<Ast> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    lhs = Ast::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Tok::Slash => {
                    let col = self.col();
                    self.bump();
                    lhs = Ast::Div(Box::new(lhs), Box::new(self.unary()?), col);
                }
                _ if self.starts_atom() => {
                    lhs = Ast::Mul(Box::new(lhs), Box::new(self.power()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Ast> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(Ast::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Ast> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        let col = self.col();
        self.bump();
        let neg = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        match self.bump() {
            Tok::Int(n) => {
                let n: i64 = n
                    .try_into()
                    .map_err(|_| syntax(col, "exponent too large"))?;
                Ok(Ast::Pow(Box::new(base), if neg { -n } else { n }, col))
            }
            _ => Err(syntax(self.err_col(), "expected integer exponent")),
        }
    }

    fn atom(&mut self) -> Result<Ast> {
        let col = self.col();
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(Ast::Int(n))
            }
            Tok::Ident(c @ ('r' | 's')) => {
                self.bump();
                Ok(Ast::Param(c))
            }
            Tok::Ident(c) => {
                self.bump();
                self.expect(Tok::LBracket, "'['")?;
                let idx = match self.bump() {
                    Tok::Int(n) => usize::try_from(n).map_err(|_| syntax(col, "bad index"))?,
                    _ => return Err(syntax(self.err_col(), "expected index")),
                };
                self.expect(Tok::RBracket, "']'")?;
                Ok(Ast::Letter(c, idx, col))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(inner)
            }
            _ => Err(syntax(self.err_col(), "expected operand")),
        }
    }
}

fn parse(text: &str) -> Result<Ast> {
    let mut p = Parser {
        toks: tokenize(text)?,
        pos: 0,
    };
    let ast = p.expr()?;
    if *p.peek() != Tok::Eof {
        return Err(syntax(p.col(), "unexpected trailing input"));
    }
    Ok(ast)
}

fn eval_scalar(ast: &Ast) -> Result<Scalar> {
    Ok(match ast {
        Ast::Int(n) => Scalar::from_bigint(n.clone()),
        Ast::Param('r') => Scalar::r(),
        Ast::Param(_) => Scalar::s(),
        Ast::Letter(_, _, col) => return Err(syntax(*col, "generator in a scalar expression")),
        Ast::Add(a, b) => eval_scalar(a)? + eval_scalar(b)?,
        Ast::Sub(a, b) => eval_scalar(a)? - eval_scalar(b)?,
        Ast::Mul(a, b) => eval_scalar(a)? * eval_scalar(b)?,
        Ast::Div(a, b, _) => eval_scalar(a)?.checked_div(&eval_scalar(b)?)?,
        Ast::Neg(a) => -eval_scalar(a)?,
        Ast::Pow(a, n, _) => eval_scalar(a)?.pow(*n)?,
    })
}

pub fn parse_scalar(text: &str) -> Result<Scalar> {
    eval_scalar(&parse(text)?)
}

enum Value {
    S(Scalar),
    E(Element),
}

impl Value {
    fn into_element(self, engine: &Engine, parent: Parent) -> Element {
        match self {
            Value::S(c) => engine.scalar(parent, c),
            Value::E(e) => e,
        }
    }
}

fn letter_of(c: char, idx: usize, col: usize, k: i64) -> Result<Letter> {
    if idx == 0 {
        return Err(Error::BadIndex(format!("index 0 at column {col}; indices start at 1")));
    }
    let i = idx - 1;
    Ok(match c {
        'e' => Letter::E(i),
        'E' => Letter::Epp(i),
        'f' => Letter::F(i),
        'P' => Letter::Fp(i),
        'w' => Letter::W(i, k),
        _ => Letter::Wp(i, k),
    })
}

fn eval_element(ast: &Ast, engine: &Engine, parent: Parent) -> Result<Value> {
    let binary = |a: &Ast, b: &Ast| -> Result<(Value, Value)> {
        Ok((eval_element(a, engine, parent)?, eval_element(b, engine, parent)?))
    };
    Ok(match ast {
        Ast::Int(_) | Ast::Param(_) => Value::S(eval_scalar(ast)?),
        Ast::Letter(c, idx, col) => Value::E(engine.letter(letter_of(*c, *idx, *col, 1)?, parent)?),
        Ast::Add(a, b) | Ast::Sub(a, b) => {
            let negate = matches!(ast, Ast::Sub(..));
            match binary(a, b)? {
                (Value::S(x), Value::S(y)) => Value::S(if negate { x - y } else { x + y }),
                (x, y) => {
                    let x = x.into_element(engine, parent);
                    let y = y.into_element(engine, parent);
                    Value::E(if negate { x.sub(&y)? } else { x.add(&y)? })
                }
            }
        }
        Ast::Mul(a, b) => match binary(a, b)? {
            (Value::S(x), Value::S(y)) => Value::S(x * y),
            (Value::S(x), Value::E(y)) | (Value::E(y), Value::S(x)) => Value::E(y.scale(&x)),
            (Value::E(x), Value::E(y)) => Value::E(engine.mul(&x, &y)?),
        },
        Ast::Div(a, b, col) => {
            let d = match eval_element(b, engine, parent)? {
                Value::S(d) => d,
                Value::E(_) => return Err(syntax(*col, "division by an algebra element")),
            };
            match eval_element(a, engine, parent)? {
                Value::S(x) => Value::S(x.checked_div(&d)?),
                Value::E(x) => Value::E(x.scale(&d.inv()?)),
            }
        }
        Ast::Neg(a) => match eval_element(a, engine, parent)? {
            Value::S(x) => Value::S(-x),
            Value::E(x) => Value::E(x.neg()),
        },
        Ast::Pow(base, n, col) => match base.as_ref() {
            Ast::Letter(c @ ('w' | 'v'), idx, lcol) => {
                Value::E(engine.letter(letter_of(*c, *idx, *lcol, *n)?, parent)?)
            }
            _ => match eval_element(base, engine, parent)? {
                Value::S(x) => Value::S(x.pow(*n)?),
                Value::E(x) => {
                    if *n < 0 {
                        return Err(syntax(*col, "negative power of a non-toral element"));
                    }
                    Value::E(engine.pow(&x, *n as usize)?)
                }
            },
        },
    })
}

/// Parse and normalize an element of `parent`.
pub fn parse_element(text: &str, engine: &Engine, parent: Parent) -> Result<Element> {
    let ast = parse(text)?;
    Ok(eval_element(&ast, engine, parent)?.into_element(engine, parent))
}

impl std::str::FromStr for Scalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_scalar(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::CartanType;

    #[test]
    fn scalar_round_trip() {
        for text in ["r*s^-1 + 1", "(r^2 - s)/(r - s)", "-1/(r - s)", "3/7", "r/2"] {
            let x = parse_scalar(text).unwrap();
            assert_eq!(parse_scalar(&x.to_string()).unwrap(), x, "{text}");
        }
    }

    #[test]
    fn juxtaposition_multiplies() {
        assert_eq!(parse_scalar("r s^-1").unwrap(), Scalar::monomial(1, -1));
        assert_eq!(parse_scalar("2(r + s)").unwrap(), parse_scalar("2*r + 2*s").unwrap());
    }

    #[test]
    fn dangling_operator_reports_its_column() {
        let engine = Engine::new(CartanType::a(1));
        match parse_element("e[1]+", &engine, Parent::U) {
            Err(Error::Syntax { column, .. }) => assert_eq!(column, 5),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn toral_inverse_cancels() {
        let engine = Engine::new(CartanType::a(1));
        let x = parse_element("w[1]^-1*w[1]", &engine, Parent::U).unwrap();
        assert_eq!(x, engine.one(Parent::U));
    }

    #[test]
    fn illegal_letter_for_parent() {
        let engine = Engine::new(CartanType::a(1));
        assert!(matches!(
            parse_element("E[1]", &engine, Parent::U),
            Err(Error::IllegalLetter(_))
        ));
    }
}
