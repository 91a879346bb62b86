//! The expression language: lexer, recursive-descent parser, and the
//! canonical printer that the round-trip tests pin down.
//!
//! Grammar:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' nat)?
//! atom   := '(' expr ')' | '-' atom | rational | param
//!         | PREFIX '[' int (',' int)* ']'
//! ```
//!
//! Identifiers lex by maximal munch, so `YY` is one prefix rather than two
//! `Y`s. A `^` glued to a letter starts a hat prefix (`^K[1,2]`); before
//! anything else it is the power operator, whose exponent is always a bare
//! number.

use std::fmt;

use mbpoly::Rational;
use num::BigInt;

/// Maps display prefixes to basis names and lists the declared parameters.
/// The first entry for a basis is its canonical printing prefix.
#[derive(Debug, Clone, Default)]
pub struct Syntax {
    prefixes: Vec<(String, String)>,
    params: Vec<String>,
}

impl Syntax {
    pub fn new(
        prefixes: impl IntoIterator<Item = (String, String)>,
        params: impl IntoIterator<Item = String>,
    ) -> Self {
        Syntax {
            prefixes: prefixes.into_iter().collect(),
            params: params.into_iter().collect(),
        }
    }

    pub fn basis_for(&self, prefix: &str) -> Option<&str> {
        self.prefixes
            .iter()
            .find(|(p, _)| p == prefix)
            .map(|(_, b)| b.as_str())
    }

    pub fn prefix_for(&self, basis: &str) -> Option<&str> {
        self.prefixes
            .iter()
            .find(|(_, b)| b == basis)
            .map(|(p, _)| p.as_str())
    }

    pub fn is_param(&self, name: &str) -> bool {
        self.params.iter().any(|p| p == name)
    }

    pub fn params(&self) -> &[String] {
        &self.params
    }
}

/// A syntax diagnostic anchored to a source position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, col: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            col,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.col, self.message)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Nat(String),
    Ident(String),
    End,
}

impl Tok {
    fn name(&self) -> String {
        match self {
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Caret => "`^`".into(),
            Tok::Slash => "`/`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::LBracket => "`[`".into(),
            Tok::RBracket => "`]`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Nat(s) => format!("`{s}`"),
            Tok::Ident(s) => format!("`{s}`"),
            Tok::End => "end of input".into(),
        }
    }
}

struct Lexed {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(input: &str) -> Result<Vec<Lexed>, ParseError> {
    let chars: Vec<char> = input.chars().collect();
    let mut out = Vec::new();
    let (mut line, mut col) = (1usize, 1usize);
    let mut i = 0;
    while i < chars.len() {
        let (l, c) = (line, col);
        let ch = chars[i];
        let mut take = |tok: Tok, n: usize| {
            out.push(Lexed { tok, line: l, col: c });
            n
        };
        let consumed = match ch {
            '\n' => {
                line += 1;
                col = 0;
                1
            }
            _ if ch.is_whitespace() => 1,
            '+' => take(Tok::Plus, 1),
            '-' => take(Tok::Minus, 1),
            '*' => take(Tok::Star, 1),
            '/' => take(Tok::Slash, 1),
            '(' => take(Tok::LParen, 1),
            ')' => take(Tok::RParen, 1),
            '[' => take(Tok::LBracket, 1),
            ']' => take(Tok::RBracket, 1),
            ',' => take(Tok::Comma, 1),
            '^' => {
                if chars.get(i + 1).is_some_and(|c| c.is_ascii_alphabetic()) {
                    let mut j = i + 1;
                    while chars.get(j).is_some_and(|c| c.is_ascii_alphanumeric()) {
                        j += 1;
                    }
                    take(Tok::Ident(chars[i..j].iter().collect()), j - i)
                } else {
                    take(Tok::Caret, 1)
                }
            }
            _ if ch.is_ascii_digit() => {
                let mut j = i;
                while chars.get(j).is_some_and(|c| c.is_ascii_digit()) {
                    j += 1;
                }
                take(Tok::Nat(chars[i..j].iter().collect()), j - i)
            }
            _ if ch.is_ascii_alphabetic() => {
                let mut j = i;
                while chars.get(j).is_some_and(|c| c.is_ascii_alphanumeric()) {
                    j += 1;
                }
                take(Tok::Ident(chars[i..j].iter().collect()), j - i)
            }
            _ => {
                return Err(ParseError::new(l, c, format!("unexpected character `{ch}`")));
            }
        };
        i += consumed;
        col += consumed;
    }
    out.push(Lexed {
        tok: Tok::End,
        line,
        col,
    });
    Ok(out)
}

/// Abstract syntax; basis literals carry the resolved basis name, never the
/// surface prefix, so `m[1]` and `x[1]` parse to the same tree.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Rational(Rational),
    Param(String),
    Literal { basis: String, vector: Vec<i64> },
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

/// Largest accepted power; keeps a well-formed but hostile exponent from
/// stalling evaluation.
pub const MAX_EXPONENT: u32 = 9999;

pub fn parse(input: &str, syntax: &Syntax) -> Result<Expr, ParseError> {
    let toks = lex(input)?;
    let mut p = Parser {
        toks,
        pos: 0,
        syntax,
    };
    let e = p.expr()?;
    match p.peek().tok {
        Tok::End => Ok(e),
        _ => Err(p.error_here("expected `+`, `-`, `*`, or end of input")),
    }
}

struct Parser<'a> {
    toks: Vec<Lexed>,
    pos: usize,
    syntax: &'a Syntax,
}

impl Parser<'_> {
    fn peek(&self) -> &Lexed {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn error_here(&self, expected: &str) -> ParseError {
        let at = self.peek();
        ParseError::new(
            at.line,
            at.col,
            format!("{expected}; found {}", at.tok.name()),
        )
    }

    fn eat(&mut self, want: Tok, expected: &str) -> Result<(), ParseError> {
        if self.peek().tok == want {
            self.bump();
            Ok(())
        } else {
            Err(self.error_here(expected))
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek().tok {
                Tok::Plus => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        while self.peek().tok == Tok::Star {
            self.bump();
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if self.peek().tok != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let digits = match self.peek().tok.clone() {
            Tok::Nat(s) => {
                self.bump();
                s
            }
            _ => return Err(self.error_here("expected a non-negative integer exponent")),
        };
        let n: u32 = digits
            .parse()
            .ok()
            .filter(|&n| n <= MAX_EXPONENT)
            .ok_or_else(|| self.error_here(&format!("exponent exceeds {MAX_EXPONENT}")))?;
        Ok(Expr::Pow(Box::new(base), n))
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek().tok.clone() {
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                self.eat(Tok::RParen, "expected `+`, `-`, `*`, or `)`")?;
                Ok(inner)
            }
            Tok::Minus => {
                self.bump();
                Ok(Expr::Neg(Box::new(self.atom()?)))
            }
            Tok::Nat(_) => self.rational(),
            Tok::Ident(name) => {
                self.bump();
                if self.peek().tok == Tok::LBracket {
                    let Some(basis) = self.syntax.basis_for(&name) else {
                        self.pos -= 1;
                        return Err(self.error_here(&format!("unknown basis prefix `{name}`")));
                    };
                    let basis = basis.to_string();
                    self.bump();
                    let vector = self.vector()?;
                    Ok(Expr::Literal { basis, vector })
                } else if self.syntax.is_param(&name) {
                    Ok(Expr::Param(name))
                } else if self.syntax.basis_for(&name).is_some() {
                    Err(self.error_here(&format!("expected `[` after basis prefix `{name}`")))
                } else {
                    self.pos -= 1;
                    Err(self.error_here(&format!("unknown parameter `{name}`")))
                }
            }
            _ => Err(self.error_here(
                "expected `(`, `-`, a number, a parameter, or a basis element `PREFIX[...]`",
            )),
        }
    }

    // nat ('/' nat)? with a nonzero denominator
    fn rational(&mut self) -> Result<Expr, ParseError> {
        let numer = match self.bump() {
            Tok::Nat(s) => s,
            _ => unreachable!("caller peeked a number"),
        };
        let numer: BigInt = numer.parse().expect("digit runs parse");
        if self.peek().tok != Tok::Slash {
            return Ok(Expr::Rational(Rational::from_integer(numer)));
        }
        self.bump();
        let denom = match self.peek().tok.clone() {
            Tok::Nat(s) => {
                self.bump();
                s
            }
            _ => return Err(self.error_here("expected a denominator after `/`")),
        };
        let denom: BigInt = denom.parse().expect("digit runs parse");
        if denom == BigInt::from(0) {
            return Err(self.error_here("denominator must be nonzero"));
        }
        Ok(Expr::Rational(Rational::new(numer, denom)))
    }

    // '-'? nat entries between the brackets, at least one
    fn vector(&mut self) -> Result<Vec<i64>, ParseError> {
        let mut entries = vec![self.int_entry()?];
        loop {
            match self.peek().tok {
                Tok::Comma => {
                    self.bump();
                    entries.push(self.int_entry()?);
                }
                Tok::RBracket => {
                    self.bump();
                    return Ok(entries);
                }
                _ => return Err(self.error_here("expected `,` or `]` in an index vector")),
            }
        }
    }

    fn int_entry(&mut self) -> Result<i64, ParseError> {
        let negative = if self.peek().tok == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let digits = match self.peek().tok.clone() {
            Tok::Nat(s) => {
                self.bump();
                s
            }
            _ => return Err(self.error_here("expected an integer vector entry")),
        };
        let magnitude: i64 = digits
            .parse()
            .map_err(|_| self.error_here("vector entry out of range"))?;
        Ok(if negative { -magnitude } else { magnitude })
    }
}

impl Expr {
    fn prec(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) => 2,
            Expr::Neg(_) => 3,
            Expr::Pow(..) => 4,
            _ => 5,
        }
    }

    /// Canonical form: minimal parentheses, `*` and vectors tight, additive
    /// operators spaced. `parse(print(e)) == e` for every tree.
    pub fn print(&self, syntax: &Syntax) -> String {
        self.print_prec(syntax, 0)
    }

    fn print_prec(&self, syntax: &Syntax, min: u8) -> String {
        let bare = match self {
            Expr::Rational(r) => r.to_string(),
            Expr::Param(p) => p.clone(),
            Expr::Literal { basis, vector } => format!(
                "{}[{}]",
                syntax.prefix_for(basis).unwrap_or(basis),
                vector
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            ),
            // a pow never prints bare under `-`: `-a^2` reads as `(-a)^2`
            Expr::Neg(a) => match a.as_ref() {
                Expr::Pow(..) => format!("-({})", a.print_prec(syntax, 0)),
                _ => format!("-{}", a.print_prec(syntax, 3)),
            },
            // `-a` may sit bare as a pow base: `-a^2` parses to Pow(Neg(a), 2)
            Expr::Pow(a, n) => match a.as_ref() {
                Expr::Neg(_) => format!("{}^{n}", a.print_prec(syntax, 3)),
                _ => format!("{}^{n}", a.print_prec(syntax, 5)),
            },
            Expr::Mul(a, b) => format!(
                "{}*{}",
                a.print_prec(syntax, 2),
                b.print_prec(syntax, 3)
            ),
            Expr::Add(a, b) => format!(
                "{} + {}",
                a.print_prec(syntax, 1),
                b.print_prec(syntax, 2)
            ),
            Expr::Sub(a, b) => format!(
                "{} - {}",
                a.print_prec(syntax, 1),
                b.print_prec(syntax, 2)
            ),
        };
        if self.prec() < min {
            format!("({bare})")
        } else {
            bare
        }
    }

    /// Basis names referenced by literals, in no particular order.
    pub fn literal_bases(&self, out: &mut Vec<String>) {
        match self {
            Expr::Literal { basis, .. } => {
                if !out.contains(basis) {
                    out.push(basis.clone());
                }
            }
            Expr::Neg(a) => a.literal_bases(out),
            Expr::Pow(a, _) => a.literal_bases(out),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => {
                a.literal_bases(out);
                b.literal_bases(out);
            }
            _ => {}
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn syntax() -> Syntax {
        Syntax::new(
            [
                ("m".into(), "monomial".into()),
                ("x".into(), "monomial".into()),
                ("Y".into(), "schubert".into()),
                ("YY".into(), "double-schubert".into()),
                ("K".into(), "key-A".into()),
                ("^K".into(), "key-hat".into()),
            ],
            ["q".into(), "t1".into()],
        )
    }

    fn lit(basis: &str, v: &[i64]) -> Expr {
        Expr::Literal {
            basis: basis.into(),
            vector: v.to_vec(),
        }
    }

    #[test]
    fn test_parse_literals_and_precedence() {
        let s = syntax();
        let e = parse("m[1,1,2] + m[2,3]*q^2", &s).unwrap();
        assert_eq!(
            e,
            Expr::Add(
                Box::new(lit("monomial", &[1, 1, 2])),
                Box::new(Expr::Mul(
                    Box::new(lit("monomial", &[2, 3])),
                    Box::new(Expr::Pow(Box::new(Expr::Param("q".into())), 2)),
                )),
            )
        );
    }

    #[test]
    fn test_maximal_munch_and_hat_prefix() {
        let s = syntax();
        assert_eq!(parse("YY[1,2]", &s).unwrap(), lit("double-schubert", &[1, 2]));
        assert_eq!(parse("^K[0,-2]", &s).unwrap(), lit("key-hat", &[0, -2]));
        // caret before a digit stays the power operator
        assert_eq!(
            parse("K[1]^2", &s).unwrap(),
            Expr::Pow(Box::new(lit("key-A", &[1])), 2)
        );
    }

    #[test]
    fn test_error_positions() {
        let s = syntax();
        let e = parse("m[1] + Z[2]", &s).unwrap_err();
        assert_eq!((e.line, e.col), (1, 8));
        assert!(e.message.contains("unknown basis prefix `Z`"));
        let e = parse("m[1,]", &s).unwrap_err();
        assert_eq!(e.col, 5);
        let e = parse("(m[1]", &s).unwrap_err();
        assert!(e.message.contains("expected `+`, `-`, `*`, or `)`"));
    }

    #[test]
    fn test_print_parses_back() {
        let s = syntax();
        for (src, canonical) in [
            ("m[1, 2]  * ( q + 3/4 )", "m[1,2]*(q + 3/4)"),
            ("-(m[1]^2)", "-(m[1]^2)"),
            ("-m[1]^2", "-m[1]^2"),
            ("q - (t1 - 1)", "q - (t1 - 1)"),
            ("x[0,1]", "m[0,1]"),
        ] {
            let e = parse(src, &s).unwrap();
            let printed = e.print(&s);
            assert_eq!(printed, canonical);
            assert_eq!(parse(&printed, &s).unwrap(), e);
        }
    }
}
