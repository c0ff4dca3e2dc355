use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::arith::{NumberField, Rational};
use crate::error::{Error, Result};
use crate::poly::Polynomial;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
    End,
}

/// Recursive-descent parser producing a [`Polynomial`] over a fixed field.
pub struct Parser<'a> {
    text: &'a str,
    toks: Vec<(Tok, usize)>,
    pos: usize,
    field: &'a NumberField,
    var: Option<&'a str>,
    field_var: bool,
}

impl<'a> Parser<'a> {
    pub fn new(text: &'a str, field: &'a NumberField, var: Option<&'a str>) -> Self {
        Parser {
            text,
            toks: Vec::new(),
            pos: 0,
            field,
            var,
            field_var: true,
        }
    }

    /// Disallow the field variable (used when the field is plain `Q`).
    pub fn without_field_variable(mut self) -> Self {
        self.field_var = false;
        self
    }

    pub fn parse(mut self) -> Result<Polynomial> {
        self.toks = tokenize(self.text)?;
        if self.toks.len() == 1 {
            return Err(Error::parse_at(self.text, 0, "empty expression"));
        }
        let p = self.sum()?;
        match self.peek() {
            Tok::End => Ok(p),
            t => Err(self.err(format!("unexpected {}", describe(t)))),
        }
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::parse_at(self.text, self.offset(), msg)
    }

    fn sum(&mut self) -> Result<Polynomial> {
        let mut acc = self.product()?;
        loop {
            match self.peek() {
                Tok::Op('+') => {
                    self.bump();
                    acc = &acc + &self.product()?;
                }
                Tok::Op('-') => {
                    self.bump();
                    acc = &acc - &self.product()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn product(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Tok::Op('*') => {
                    self.bump();
                    acc = &acc * &self.unary()?;
                }
                Tok::Op('/') => {
                    self.bump();
                    let at = self.offset();
                    let rhs = self.unary()?;
                    acc = self.divide(acc, rhs, at)?;
                }
                // juxtaposition
                Tok::Num(_) | Tok::Ident(_) | Tok::Op('(') => {
                    acc = &acc * &self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn divide(&self, num: Polynomial, den: Polynomial, at: usize) -> Result<Polynomial> {
        if !den.is_constant() {
            return Err(Error::parse_at(self.text, at, "division is only defined by constants"));
        }
        let c = den.coeff(0);
        let inv = c
            .inverse()
            .map_err(|_| Error::parse_at(self.text, at, "division by zero"))?;
        Ok(num.scale(&inv))
    }

    fn unary(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Tok::Op('-') => {
                self.bump();
                Ok(-self.unary()?)
            }
            Tok::Op('+') => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if !matches!(self.peek(), Tok::Op('^')) {
            return Ok(base);
        }
        self.bump();
        let at = self.offset();
        let negative = if matches!(self.peek(), Tok::Op('-')) {
            self.bump();
            true
        } else {
            false
        };
        let e = match self.bump() {
            Tok::Num(n) => n
                .to_u32()
                .ok_or_else(|| Error::parse_at(self.text, at, "exponent too large"))?,
            t => {
                return Err(Error::parse_at(
                    self.text,
                    at,
                    format!("expected integer exponent, found {}", describe(&t)),
                ))
            }
        };
        let p = base.pow(e);
        if negative {
            let one = Polynomial::one(self.field);
            self.divide(one, p, at)
        } else {
            Ok(p)
        }
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let at = self.offset();
        match self.bump() {
            Tok::Num(n) => Ok(Polynomial::constant(
                self.field.from_rational(Rational::from_integer(n)),
            )),
            Tok::Ident(name) => {
                if Some(name.as_str()) == self.var {
                    Ok(Polynomial::t(self.field))
                } else if self.field_var && name == self.field.variable() {
                    Ok(Polynomial::constant(self.field.generator()))
                } else {
                    Err(Error::parse_at(self.text, at, format!("unknown symbol `{name}`")))
                }
            }
            Tok::Op('(') => {
                let inner = self.sum()?;
                match self.bump() {
                    Tok::Op(')') => Ok(inner),
                    t => Err(Error::parse_at(
                        self.text,
                        self.toks[self.pos.saturating_sub(1)].1,
                        format!("expected `)`, found {}", describe(&t)),
                    )),
                }
            }
            t => Err(Error::parse_at(
                self.text,
                at,
                format!("expected a number, variable or `(`, found {}", describe(&t)),
            )),
        }
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Num(n) => format!("number `{n}`"),
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Op(c) => format!("`{c}`"),
        Tok::End => "end of input".into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(i, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
        } else if c.is_ascii_digit() {
            let mut end = i;
            while let Some(&(j, d)) = chars.peek() {
                if d.is_ascii_digit() {
                    end = j + 1;
                    chars.next();
                } else {
                    break;
                }
            }
            let n: BigInt = text[i..end].parse().expect("digits");
            out.push((Tok::Num(n), i));
        } else if c.is_alphabetic() || c == '_' {
            let mut end = i;
            while let Some(&(j, d)) = chars.peek() {
                if d.is_alphanumeric() || d == '_' {
                    end = j + d.len_utf8();
                    chars.next();
                } else {
                    break;
                }
            }
            out.push((Tok::Ident(text[i..end].to_string()), i));
        } else if c == '*' {
            chars.next();
            // `**` is accepted as exponentiation
            if matches!(chars.peek(), Some(&(_, '*'))) {
                chars.next();
                out.push((Tok::Op('^'), i));
            } else {
                out.push((Tok::Op('*'), i));
            }
        } else if "+-/^()".contains(c) {
            chars.next();
            out.push((Tok::Op(c), i));
        } else {
            return Err(Error::parse_at(text, i, format!("unexpected character `{c}`")));
        }
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}
