//! Expression syntax shared by all dialects.
//!
//! ```text
//! element  := term (('+' | '-') term)*
//! term     := sign? coeff* slotlist?
//! coeff    := nat ('/' nat)? 'i'? | 'i' | 'h' ('^' nat)?
//! slotlist := '[' word ('|' word)* ']' | word
//! word     := atom (('.' | '*')? atom)*
//! atom     := var ('^' nat)? | nat | 'E' '[' nat ';' nats '->' nat ';' nats ']'
//! ```

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use polya_core::GaussRat;

/// A 1-based source position.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}", self.line, self.column)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{message} at {pos}")]
pub struct ParseError {
    pub pos: Pos,
    pub message: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dialect {
    Weyl,
    Qsym,
    Odd,
    Boolean,
    Schur,
}

impl Dialect {
    fn allows(&self, var: &str) -> bool {
        let (stem, idx) = split_var(var);
        match self {
            Dialect::Weyl => idx.is_none() && matches!(stem, "x" | "y"),
            Dialect::Qsym => matches!(stem, "x" | "y" | "z" | "zb"),
            Dialect::Odd => stem == "th" && idx.is_some_and(|i| i >= 1),
            Dialect::Boolean | Dialect::Schur => false,
        }
    }
}

/// Splits `x12` into `("x", Some(12))`.
pub fn split_var(v: &str) -> (&str, Option<u32>) {
    let cut = v.find(|c: char| c.is_ascii_digit()).unwrap_or(v.len());
    let (stem, digits) = v.split_at(cut);
    (stem, if digits.is_empty() { None } else { digits.parse().ok() })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Atom {
    Var { name: String, exp: u32, pos: Pos },
    Nat { value: u64, pos: Pos },
    Elem { r: u64, s: Vec<u32>, t: u64, u: Vec<u32>, pos: Pos },
    /// An explicit `.` or `*` between factors.
    Break { pos: Pos },
}

pub type Word = Vec<Atom>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: GaussRat,
    pub hbar: u32,
    /// `None` for a bare word, `Some` for a bracketed slot list.
    pub slots: Option<Vec<Word>>,
    pub word: Word,
    pub pos: Pos,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expr {
    pub terms: Vec<Term>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Nat(BigInt),
    Ident(String),
    Caret,
    Dot,
    Star,
    Plus,
    Minus,
    Slash,
    LBr,
    RBr,
    Bar,
    Semi,
    Comma,
    Arrow,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Nat(n) => write!(f, "`{n}`"),
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Caret => write!(f, "`^`"),
            Tok::Dot => write!(f, "`.`"),
            Tok::Star => write!(f, "`*`"),
            Tok::Plus => write!(f, "`+`"),
            Tok::Minus => write!(f, "`-`"),
            Tok::Slash => write!(f, "`/`"),
            Tok::LBr => write!(f, "`[`"),
            Tok::RBr => write!(f, "`]`"),
            Tok::Bar => write!(f, "`|`"),
            Tok::Semi => write!(f, "`;`"),
            Tok::Comma => write!(f, "`,`"),
            Tok::Arrow => write!(f, "`->`"),
            Tok::End => write!(f, "end of input"),
        }
    }
}

fn lex(src: &str) -> Result<Vec<(Tok, Pos)>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let (mut line, mut col) = (1, 1);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line, column: col };
        let start = i;
        let tok = match c {
            '\n' => {
                i += 1;
                line += 1;
                col = 1;
                continue;
            }
            c if c.is_whitespace() => {
                i += 1;
                col += 1;
                continue;
            }
            '0'..='9' => {
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                Tok::Nat(s.parse().expect("digits"))
            }
            'a'..='z' | 'A'..='Z' => {
                while i < chars.len() && chars[i].is_ascii_alphabetic() {
                    i += 1;
                }
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                Tok::Ident(chars[start..i].iter().collect())
            }
            '-' if chars.get(i + 1) == Some(&'>') => {
                i += 2;
                Tok::Arrow
            }
            '^' | '.' | '*' | '+' | '-' | '/' | '[' | ']' | '|' | ';' | ',' => {
                i += 1;
                match c {
                    '^' => Tok::Caret,
                    '.' => Tok::Dot,
                    '*' => Tok::Star,
                    '+' => Tok::Plus,
                    '-' => Tok::Minus,
                    '/' => Tok::Slash,
                    '[' => Tok::LBr,
                    ']' => Tok::RBr,
                    '|' => Tok::Bar,
                    ';' => Tok::Semi,
                    _ => Tok::Comma,
                }
            }
            '\u{2212}' => {
                i += 1;
                Tok::Minus
            }
            _ => return Err(ParseError { pos, message: format!("unexpected character `{c}`") }),
        };
        col += i - start;
        out.push((tok, pos));
    }
    out.push((Tok::End, Pos { line, column: col }));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
    dialect: Dialect,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { pos: self.pos(), message: message.into() })
    }

    fn expect(&mut self, want: Tok) -> Result<Pos, ParseError> {
        if *self.peek() == want {
            Ok(self.bump().1)
        } else {
            self.err(format!("expected {want}, found {}", self.peek()))
        }
    }

    fn nat(&mut self) -> Result<BigInt, ParseError> {
        match self.peek().clone() {
            Tok::Nat(n) => {
                self.bump();
                Ok(n)
            }
            t => self.err(format!("expected a natural number, found {t}")),
        }
    }

    fn small(&mut self) -> Result<u32, ParseError> {
        let pos = self.pos();
        let n = self.nat()?;
        u32::try_from(n).map_err(|_| ParseError { pos, message: "number too large".into() })
    }

    fn element(&mut self) -> Result<Expr, ParseError> {
        let mut terms = vec![self.term(false)?];
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    terms.push(self.term(false)?);
                }
                Tok::Minus => {
                    self.bump();
                    terms.push(self.term(true)?);
                }
                Tok::End => break,
                t => return self.err(format!("expected `+`, `-` or end of input, found {t}")),
            }
        }
        Ok(Expr { terms })
    }

    fn is_coeff_start(&self) -> bool {
        match self.peek() {
            Tok::Nat(_) => true,
            Tok::Ident(s) => s == "i" || s == "h",
            _ => false,
        }
    }

    fn term(&mut self, negated: bool) -> Result<Term, ParseError> {
        let pos = self.pos();
        let mut coeff = if negated { -GaussRat::one() } else { GaussRat::one() };
        let mut hbar = 0;
        while matches!(self.peek(), Tok::Minus | Tok::Plus) {
            if self.bump().0 == Tok::Minus {
                coeff = -coeff;
            }
        }
        let mut saw_coeff = false;
        while self.is_coeff_start() {
            saw_coeff = true;
            match self.bump().0 {
                Tok::Nat(num) => {
                    let mut q = BigRational::from_integer(num);
                    if *self.peek() == Tok::Slash {
                        self.bump();
                        let p = self.pos();
                        let den = self.nat()?;
                        if den.is_zero() {
                            return Err(ParseError { pos: p, message: "zero denominator".into() });
                        }
                        q /= BigRational::from_integer(den);
                    }
                    let mut c = GaussRat::real(q);
                    if matches!(self.peek(), Tok::Ident(s) if s == "i") {
                        self.bump();
                        c = &c * &GaussRat::i();
                    }
                    coeff = &coeff * &c;
                }
                Tok::Ident(s) if s == "i" => coeff = &coeff * &GaussRat::i(),
                _ => {
                    // `h`, optionally `h^k`
                    hbar += if *self.peek() == Tok::Caret {
                        self.bump();
                        self.small()?
                    } else {
                        1
                    };
                }
            }
        }
        let (slots, word) = match self.peek() {
            Tok::LBr => {
                self.bump();
                let mut slots = vec![self.word(true)?];
                while *self.peek() == Tok::Bar {
                    self.bump();
                    slots.push(self.word(true)?);
                }
                self.expect(Tok::RBr)?;
                (Some(slots), Vec::new())
            }
            Tok::Ident(_) => (None, self.word(false)?),
            t if !saw_coeff => return self.err(format!("expected a term, found {t}")),
            _ => (None, Vec::new()),
        };
        Ok(Term { coeff, hbar, slots, word, pos })
    }

    fn word(&mut self, in_slot: bool) -> Result<Word, ParseError> {
        let mut out = Vec::new();
        loop {
            match self.peek().clone() {
                Tok::Ident(name) if name == "E" && self.dialect == Dialect::Schur => out.push(self.elem()?),
                Tok::Ident(name) if name == "i" || name == "h" => {
                    return self.err(format!("`{name}` is reserved for coefficients"));
                }
                Tok::Ident(name) => {
                    let pos = self.pos();
                    if !self.dialect.allows(&name) {
                        return Err(ParseError {
                            pos,
                            message: format!("unknown variable `{name}` for the {:?} dialect", self.dialect),
                        });
                    }
                    self.bump();
                    let exp = if *self.peek() == Tok::Caret {
                        self.bump();
                        self.small()?
                    } else {
                        1
                    };
                    out.push(Atom::Var { name, exp, pos });
                }
                Tok::Nat(_) if in_slot => {
                    let pos = self.pos();
                    let value = u64::try_from(self.nat()?)
                        .map_err(|_| ParseError { pos, message: "number too large".into() })?;
                    out.push(Atom::Nat { value, pos });
                }
                Tok::Dot | Tok::Star if !out.is_empty() => {
                    let pos = self.bump().1;
                    out.push(Atom::Break { pos });
                    if !matches!(self.peek(), Tok::Ident(_) | Tok::Nat(_)) {
                        return self.err(format!("expected a factor, found {}", self.peek()));
                    }
                }
                _ => break,
            }
        }
        if out.is_empty() {
            return self.err(format!("expected a factor, found {}", self.peek()));
        }
        Ok(out)
    }

    fn index_list(&mut self) -> Result<Vec<u32>, ParseError> {
        let mut v = vec![self.small()?];
        while *self.peek() == Tok::Comma {
            self.bump();
            v.push(self.small()?);
        }
        Ok(v)
    }

    fn elem(&mut self) -> Result<Atom, ParseError> {
        let pos = self.bump().1;
        self.expect(Tok::LBr)?;
        let r = self.small()? as u64;
        self.expect(Tok::Semi)?;
        let s = self.index_list()?;
        self.expect(Tok::Arrow)?;
        let t = self.small()? as u64;
        self.expect(Tok::Semi)?;
        let u = self.index_list()?;
        self.expect(Tok::RBr)?;
        Ok(Atom::Elem { r, s, t, u, pos })
    }
}

pub fn parse(src: &str, dialect: Dialect) -> Result<Expr, ParseError> {
    let mut p = Parser { toks: lex(src)?, at: 0, dialect };
    p.element()
}

impl Term {
    /// The slot words, with a bare word read as a single slot.
    pub fn slot_words(&self) -> Vec<&Word> {
        match &self.slots {
            Some(s) => s.iter().collect(),
            None if self.word.is_empty() => Vec::new(),
            None => vec![&self.word],
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weyl_word() {
        let e = parse("x^2 y . x", Dialect::Weyl).unwrap();
        assert_eq!(e.terms.len(), 1);
        assert_eq!(e.terms[0].word.len(), 4);
    }

    #[test]
    fn dangling_caret_column() {
        let err = parse("x^", Dialect::Weyl).unwrap_err();
        assert_eq!(err.pos, Pos { line: 1, column: 3 });
    }

    #[test]
    fn coefficients() {
        let e = parse("-3/2 h^2 x + 2i y - i", Dialect::Weyl).unwrap();
        assert_eq!(e.terms[0].coeff, GaussRat::ratio(-3, 2));
        assert_eq!(e.terms[0].hbar, 2);
        assert_eq!(e.terms[1].coeff, &GaussRat::i() * &GaussRat::from_int(2));
        assert_eq!(e.terms[2].coeff, -GaussRat::i());
        assert!(e.terms[2].word.is_empty());
    }

    #[test]
    fn unknown_variable() {
        let err = parse("x + q", Dialect::Weyl).unwrap_err();
        assert_eq!(err.pos.column, 5);
        assert!(parse("[th1 | th0]", Dialect::Odd).is_err());
    }

    #[test]
    fn schur_slots() {
        let e = parse("2 [E[1;0,1 -> 2;1] | E[2;0,0 -> 1;0]]", Dialect::Schur).unwrap();
        assert_eq!(e.terms[0].slot_words().len(), 2);
    }
}
