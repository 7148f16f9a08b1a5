//! Recursive-descent parser for ad hoc relations.
//!
//! Grammar (ASCII):
//!
//! ```text
//! relation  := expr "==" expr [ "for" pred ]
//! expr      := term { ("+"|"-") term }
//! term      := [ rational "*" ] atom | rational
//! atom      := ("N"|"t"|"t'") "(" int "," int "," int "," int ";" affine ")"
//! affine    := [int "*"] "n" [("+"|"-") int] | int
//! pred      := "n" "%" int "in" "{" int {"," int} "}"
//! rational  := int [ "/" int ]
//! ```
//!
//! The affine multiplier also parses juxtaposed (`2n+3`); the canonical
//! printer always emits the starred form (`2*n+3`).

use super::expr::{Affine, Atom, CountExpr, CountKind, Predicate, RelationSpec, RelationStatus};
use crate::error::{Error, Result};
use crate::form::FormTuple;
use num_rational::Rational64;
use num_traits::Zero;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tok {
    Int(u64),
    Kind(CountKind),
    VarN,
    For,
    In,
    EqEq,
    Plus,
    Minus,
    Star,
    Slash,
    Percent,
    LParen,
    RParen,
    LBrace,
    RBrace,
    Comma,
    Semi,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(v) => format!("integer {v}"),
            Tok::Kind(k) => format!("count kind `{}`", k.symbol()),
            Tok::VarN => "`n`".to_string(),
            Tok::For => "`for`".to_string(),
            Tok::In => "`in`".to_string(),
            Tok::EqEq => "`==`".to_string(),
            Tok::Plus => "`+`".to_string(),
            Tok::Minus => "`-`".to_string(),
            Tok::Star => "`*`".to_string(),
            Tok::Slash => "`/`".to_string(),
            Tok::Percent => "`%`".to_string(),
            Tok::LParen => "`(`".to_string(),
            Tok::RParen => "`)`".to_string(),
            Tok::LBrace => "`{`".to_string(),
            Tok::RBrace => "`}`".to_string(),
            Tok::Comma => "`,`".to_string(),
            Tok::Semi => "`;`".to_string(),
        }
    }
}

fn err(position: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        position,
        message: message.into(),
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0usize;
    while i < bytes.len() {
        let b = bytes[i];
        match b {
            b' ' | b'\t' | b'\n' | b'\r' => i += 1,
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let v: u64 = text[start..i]
                    .parse()
                    .map_err(|_| err(start, "integer literal too large"))?;
                toks.push((Tok::Int(v), start));
            }
            b'=' => {
                if bytes.get(i + 1) == Some(&b'=') {
                    toks.push((Tok::EqEq, i));
                    i += 2;
                } else {
                    return Err(err(i, "expected `==`"));
                }
            }
            b'+' => {
                toks.push((Tok::Plus, i));
                i += 1;
            }
            b'-' => {
                toks.push((Tok::Minus, i));
                i += 1;
            }
            b'*' => {
                toks.push((Tok::Star, i));
                i += 1;
            }
            b'/' => {
                toks.push((Tok::Slash, i));
                i += 1;
            }
            b'%' => {
                toks.push((Tok::Percent, i));
                i += 1;
            }
            b'(' => {
                toks.push((Tok::LParen, i));
                i += 1;
            }
            b')' => {
                toks.push((Tok::RParen, i));
                i += 1;
            }
            b'{' => {
                toks.push((Tok::LBrace, i));
                i += 1;
            }
            b'}' => {
                toks.push((Tok::RBrace, i));
                i += 1;
            }
            b',' => {
                toks.push((Tok::Comma, i));
                i += 1;
            }
            b';' => {
                toks.push((Tok::Semi, i));
                i += 1;
            }
            _ if b.is_ascii_alphabetic() => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_alphabetic() {
                    i += 1;
                }
                let word = &text[start..i];
                let tok = match word {
                    "N" => Tok::Kind(CountKind::N),
                    "t" => {
                        if bytes.get(i) == Some(&b'\'') {
                            i += 1;
                            Tok::Kind(CountKind::TPrime)
                        } else {
                            Tok::Kind(CountKind::T)
                        }
                    }
                    "n" => Tok::VarN,
                    "for" => Tok::For,
                    "in" => Tok::In,
                    other => return Err(err(start, format!("unknown word `{other}`"))),
                };
                toks.push((tok, start));
            }
            other => {
                return Err(err(i, format!("unexpected character `{}`", other as char)));
            }
        }
    }
    Ok(toks)
}

struct Parser<'a> {
    toks: &'a [(Tok, usize)],
    pos: usize,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<Tok> {
        self.toks.get(self.pos).map(|&(t, _)| t)
    }

    fn here(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|&(_, p)| p)
            .unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.peek();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok) -> Result<()> {
        match self.peek() {
            Some(t) if t == want => {
                self.pos += 1;
                Ok(())
            }
            Some(t) => Err(err(
                self.here(),
                format!("expected {}, found {}", want.describe(), t.describe()),
            )),
            None => Err(err(
                self.here(),
                format!("expected {}, found end of input", want.describe()),
            )),
        }
    }

    fn expect_int(&mut self) -> Result<u64> {
        match self.peek() {
            Some(Tok::Int(v)) => {
                self.pos += 1;
                Ok(v)
            }
            Some(t) => Err(err(
                self.here(),
                format!("expected integer, found {}", t.describe()),
            )),
            None => Err(err(self.here(), "expected integer, found end of input")),
        }
    }

    /// rational := int [ "/" int ]
    fn rational(&mut self) -> Result<Rational64> {
        let at = self.here();
        let num = self.expect_int()? as i64;
        if self.peek() == Some(Tok::Slash) {
            self.pos += 1;
            let den = self.expect_int()? as i64;
            if den == 0 {
                return Err(err(at, "zero denominator"));
            }
            Ok(Rational64::new(num, den))
        } else {
            Ok(Rational64::from_integer(num))
        }
    }

    /// affine := [int "*"] "n" [("+"|"-") int] | int
    fn affine(&mut self) -> Result<Affine> {
        let mul: u64;
        match self.peek() {
            Some(Tok::Int(v)) => {
                self.pos += 1;
                match self.peek() {
                    Some(Tok::Star) => {
                        self.pos += 1;
                        self.expect(Tok::VarN)?;
                        mul = v;
                    }
                    Some(Tok::VarN) => {
                        self.pos += 1;
                        mul = v;
                    }
                    // bare integer index
                    _ => return Ok(Affine::new(0, v as i64)),
                }
            }
            Some(Tok::VarN) => {
                self.pos += 1;
                mul = 1;
            }
            _ => {
                return Err(err(
                    self.here(),
                    "expected an index expression (`n`, `2*n+3`, or an integer)",
                ))
            }
        }
        let add = match self.peek() {
            Some(Tok::Plus) => {
                self.pos += 1;
                self.expect_int()? as i64
            }
            Some(Tok::Minus) => {
                self.pos += 1;
                -(self.expect_int()? as i64)
            }
            _ => 0,
        };
        Ok(Affine::new(mul, add))
    }

    /// atom := kind "(" int "," int "," int "," int ";" affine ")"
    fn atom(&mut self, kind: CountKind) -> Result<Atom> {
        self.expect(Tok::LParen)?;
        let mut entries = [0u64; 4];
        for (i, slot) in entries.iter_mut().enumerate() {
            let at = self.here();
            *slot = self.expect_int()?;
            if *slot == 0 {
                return Err(err(at, "form entries must be >= 1"));
            }
            if i < 3 {
                self.expect(Tok::Comma)?;
            }
        }
        self.expect(Tok::Semi)?;
        let index = self.affine()?;
        self.expect(Tok::RParen)?;
        let [a, b, c, d] = entries;
        Ok(Atom {
            kind,
            form: FormTuple::new(a, b, c, d).expect("entries checked").canonical(),
            index,
        })
    }

    /// term := [ rational "*" ] atom | rational ; sign applied by caller
    fn term(&mut self, expr: &mut CountExpr, sign: i64) -> Result<()> {
        match self.peek() {
            Some(Tok::Int(_)) => {
                let r = self.rational()? * Rational64::from_integer(sign);
                if self.peek() == Some(Tok::Star) {
                    self.pos += 1;
                    match self.bump() {
                        Some(Tok::Kind(kind)) => {
                            let atom = self.atom(kind)?;
                            expr.terms.push((r, atom));
                        }
                        _ => {
                            return Err(err(
                                self.here(),
                                "expected a count atom after `*`",
                            ))
                        }
                    }
                } else {
                    expr.constant += r;
                }
                Ok(())
            }
            Some(Tok::Kind(kind)) => {
                self.pos += 1;
                let atom = self.atom(kind)?;
                expr.terms.push((Rational64::from_integer(sign), atom));
                Ok(())
            }
            Some(t) => Err(err(
                self.here(),
                format!("expected a term, found {}", t.describe()),
            )),
            None => Err(err(self.here(), "expected a term, found end of input")),
        }
    }

    /// expr := term { ("+"|"-") term }
    fn expr(&mut self) -> Result<CountExpr> {
        let mut out = CountExpr {
            terms: Vec::new(),
            constant: Rational64::zero(),
        };
        let sign = if self.peek() == Some(Tok::Minus) {
            self.pos += 1;
            -1
        } else {
            1
        };
        self.term(&mut out, sign)?;
        loop {
            let sign = match self.peek() {
                Some(Tok::Plus) => 1,
                Some(Tok::Minus) => -1,
                _ => break,
            };
            self.pos += 1;
            self.term(&mut out, sign)?;
        }
        Ok(out)
    }

    /// pred := "n" "%" int "in" "{" int {"," int} "}"
    fn predicate(&mut self) -> Result<Predicate> {
        self.expect(Tok::VarN)?;
        self.expect(Tok::Percent)?;
        let at = self.here();
        let modulus = self.expect_int()?;
        if modulus == 0 {
            return Err(err(at, "modulus must be >= 1"));
        }
        self.expect(Tok::In)?;
        self.expect(Tok::LBrace)?;
        let mut classes = vec![self.expect_int()?];
        while self.peek() == Some(Tok::Comma) {
            self.pos += 1;
            classes.push(self.expect_int()?);
        }
        self.expect(Tok::RBrace)?;
        Ok(Predicate::residues(modulus, classes))
    }
}

/// Parse one relation in the grammar above into a checkable spec.
///
/// Parsed relations carry the id `adhoc` and `Conjectured` status; they
/// are claims to test, not statements from the proved registry.
pub fn parse_relation(text: &str) -> Result<RelationSpec> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks: &toks,
        pos: 0,
        end: text.len(),
    };
    let lhs = p.expr()?;
    p.expect(Tok::EqEq)?;
    let rhs = p.expr()?;
    let predicate = if p.peek() == Some(Tok::For) {
        p.pos += 1;
        p.predicate()?
    } else {
        Predicate::All
    };
    if let Some(t) = p.peek() {
        return Err(err(
            p.here(),
            format!("trailing input: found {}", t.describe()),
        ));
    }
    Ok(RelationSpec {
        id: "adhoc".to_string(),
        lhs,
        rhs,
        predicate,
        status: RelationStatus::Conjectured,
    })
}
