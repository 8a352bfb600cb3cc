//! Polynomial expressions.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := base ('^' uint)?
//! base   := int | var | '(' expr ')'
//! ```
//!
//! Multiplication is always explicit. Ring expressions use `h` and `c` (for `ȟ`), web
//! expressions use `x`, `y` and `p`.

use std::fmt;

use polarweb_core::{AmbientDim, BigInt, MultiPoly, RingElement, Var};

/// Largest total degree a web expression may expand to.
pub const MAX_WEB_DEGREE: u32 = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Position {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}", self.line, self.column)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseErrorKind {
    #[error("unexpected character '{0}'")]
    UnexpectedChar(char),
    #[error("expected {expected}, found {found}")]
    Unexpected {
        expected: &'static str,
        found: String,
    },
    #[error("unknown variable '{name}' (allowed: {allowed})")]
    UnknownVariable { name: String, allowed: &'static str },
    #[error("negative exponent")]
    NegativeExponent,
    #[error("exponent {0} is too large")]
    ExponentTooLarge(String),
    #[error("expression has degree above {MAX_WEB_DEGREE}")]
    DegreeTooLarge,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{kind} at {position}")]
pub struct ParseError {
    pub position: Position,
    pub kind: ParseErrorKind,
}

impl ParseError {
    /// The offending source line with a caret under the error column.
    pub fn snippet(&self, source: &str) -> String {
        let line = source.lines().nth(self.position.line - 1).unwrap_or("");
        format!("  {line}\n  {}^", " ".repeat(self.position.column - 1))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Vocabulary {
    /// `h`, `c`.
    Ring,
    /// `x`, `y`, `p`.
    Web,
}

impl Vocabulary {
    fn allows(self, name: &str) -> bool {
        match self {
            Vocabulary::Ring => matches!(name, "h" | "c"),
            Vocabulary::Web => matches!(name, "x" | "y" | "p"),
        }
    }

    fn allowed(self) -> &'static str {
        match self {
            Vocabulary::Ring => "h, c",
            Vocabulary::Web => "x, y, p",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Var(char),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(s) => format!("integer {s}"),
            Tok::Ident(s) => format!("'{s}'"),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn lex(source: &str) -> Result<Vec<(Tok, Position)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = source.chars().peekable();
    let (mut line, mut column) = (1, 1);
    while let Some(&ch) = chars.peek() {
        let position = Position { line, column };
        if ch == '\n' {
            chars.next();
            line += 1;
            column = 1;
            continue;
        }
        if ch.is_whitespace() {
            chars.next();
            column += 1;
            continue;
        }
        let mut run = |pred: fn(char) -> bool| {
            let mut s = String::new();
            while let Some(&c) = chars.peek() {
                if !pred(c) {
                    break;
                }
                s.push(c);
                chars.next();
                column += 1;
            }
            s
        };
        let tok = if ch.is_ascii_digit() {
            Tok::Int(run(|c| c.is_ascii_digit()))
        } else if ch.is_ascii_alphabetic() || ch == '_' {
            Tok::Ident(run(|c| c.is_ascii_alphanumeric() || c == '_'))
        } else {
            let tok = match ch {
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                '*' => Tok::Star,
                '^' => Tok::Caret,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                other => {
                    return Err(ParseError {
                        position,
                        kind: ParseErrorKind::UnexpectedChar(other),
                    })
                }
            };
            chars.next();
            column += 1;
            tok
        };
        out.push((tok, position));
    }
    out.push((Tok::End, Position { line, column }));
    Ok(out)
}

struct Parser {
    tokens: Vec<(Tok, Position)>,
    pos: usize,
    vocabulary: Vocabulary,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.tokens[self.pos].0
    }

    fn position(&self) -> Position {
        self.tokens[self.pos].1
    }

    fn bump(&mut self) -> (Tok, Position) {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, expected: &'static str) -> ParseError {
        ParseError {
            position: self.position(),
            kind: ParseErrorKind::Unexpected {
                expected,
                found: self.peek().describe(),
            },
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = if *self.peek() == Tok::Minus {
            self.bump();
            Expr::Neg(Box::new(self.term()?))
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
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
        while *self.peek() == Tok::Star {
            self.bump();
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let base = self.base()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        match self.peek().clone() {
            Tok::Int(digits) => {
                let position = self.position();
                self.bump();
                let e = digits.parse::<u32>().map_err(|_| ParseError {
                    position,
                    kind: ParseErrorKind::ExponentTooLarge(digits),
                })?;
                Ok(Expr::Pow(Box::new(base), e))
            }
            Tok::Minus => Err(ParseError {
                position: self.position(),
                kind: ParseErrorKind::NegativeExponent,
            }),
            _ => Err(self.unexpected("an exponent")),
        }
    }

    fn base(&mut self) -> Result<Expr, ParseError> {
        match self.peek().clone() {
            Tok::Int(digits) => {
                self.bump();
                Ok(Expr::Int(digits.parse().expect("lexer yields digits")))
            }
            Tok::Ident(name) => {
                if !self.vocabulary.allows(&name) {
                    return Err(ParseError {
                        position: self.position(),
                        kind: ParseErrorKind::UnknownVariable {
                            name,
                            allowed: self.vocabulary.allowed(),
                        },
                    });
                }
                self.bump();
                Ok(Expr::Var(name.chars().next().expect("nonempty identifier")))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.unexpected("')'"));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.unexpected("a number, variable or '('")),
        }
    }
}

pub fn parse_expr(source: &str, vocabulary: Vocabulary) -> Result<Expr, ParseError> {
    let mut parser = Parser {
        tokens: lex(source)?,
        pos: 0,
        vocabulary,
    };
    let expr = parser.expr()?;
    if *parser.peek() != Tok::End {
        return Err(parser.unexpected("an operator or end of input"));
    }
    Ok(expr)
}

impl Expr {
    pub fn to_ring(&self, n: AmbientDim) -> RingElement {
        match self {
            Expr::Int(v) => RingElement::constant(n, v.clone()),
            Expr::Var('h') => RingElement::h(n),
            Expr::Var(_) => RingElement::check_h(n),
            Expr::Neg(a) => -a.to_ring(n),
            Expr::Add(a, b) => &a.to_ring(n) + &b.to_ring(n),
            Expr::Sub(a, b) => &a.to_ring(n) - &b.to_ring(n),
            Expr::Mul(a, b) => &a.to_ring(n) * &b.to_ring(n),
            Expr::Pow(a, e) => {
                // powers beyond 2n - 1 of a class without constant term vanish
                let base = a.to_ring(n);
                if *e >= 2 * n.get() && base.coefficient(0, 0) == BigInt::from(0) {
                    RingElement::zero(n)
                } else {
                    base.pow(*e)
                }
            }
        }
    }

    /// Expands to a polynomial, refusing anything of total degree above [`MAX_WEB_DEGREE`].
    pub fn to_poly(&self) -> Result<MultiPoly, ParseErrorKind> {
        let out = match self {
            Expr::Int(v) => MultiPoly::constant(v.clone()),
            Expr::Var(c) => MultiPoly::var(Var::from_name(*c).expect("vocabulary checked")),
            Expr::Neg(a) => -&a.to_poly()?,
            Expr::Add(a, b) => &a.to_poly()? + &b.to_poly()?,
            Expr::Sub(a, b) => &a.to_poly()? - &b.to_poly()?,
            Expr::Mul(a, b) => {
                let (a, b) = (a.to_poly()?, b.to_poly()?);
                if a.total_degree() + b.total_degree() > MAX_WEB_DEGREE {
                    return Err(ParseErrorKind::DegreeTooLarge);
                }
                &a * &b
            }
            Expr::Pow(a, e) => {
                let a = a.to_poly()?;
                if u64::from(a.total_degree()) * u64::from(*e) > u64::from(MAX_WEB_DEGREE) {
                    return Err(ParseErrorKind::DegreeTooLarge);
                }
                a.pow(*e)
            }
        };
        Ok(out)
    }
}

/// Parses and reduces a ring expression in `H*(M)` for the given `n`.
pub fn parse_ring(source: &str, n: AmbientDim) -> Result<RingElement, ParseError> {
    Ok(parse_expr(source, Vocabulary::Ring)?.to_ring(n))
}

/// Parses and expands a web expression in `x, y, p`.
pub fn parse_poly(source: &str) -> Result<MultiPoly, ParseError> {
    parse_expr(source, Vocabulary::Web)?
        .to_poly()
        .map_err(|kind| ParseError {
            position: Position { line: 1, column: 1 },
            kind,
        })
}
