//! Input language for polynomials and rational functions.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | factor
//! factor := base ('^' integer)?
//! base   := integer | variable | '(' expr ')'
//! ```
//!
//! `^` is non-associative and takes a nonnegative integer literal, so
//! `2^3^2` is rejected. Rational constants are written as quotients, e.g.
//! `3/2`. Each expression uses a single declared variable; the only
//! exception is [`parse_coeff_poly`], which reads a polynomial in `y` with
//! coefficients in `Q(x)`.

use num_bigint::BigInt;
use thiserror::Error;

use crate::algebra::{CoeffPoly, Poly, Rat, RatFunc, Var};

/// Largest exponent accepted after `^`.
pub const MAX_EXPONENT: u32 = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("illegal character {ch:?} at offset {offset}")]
    IllegalCharacter { ch: char, offset: usize },
    #[error("unexpected {found} at offset {offset}")]
    UnexpectedToken { found: String, offset: usize },
    #[error("variable '{name}' at offset {offset} is not allowed here (expected {expected})")]
    WrongVariable { name: String, offset: usize, expected: String },
    #[error("division by an expression equal to zero at offset {offset}")]
    DivisionByZero { offset: usize },
    #[error("trailing input at offset {offset}")]
    TrailingInput { offset: usize },
    #[error("exponent at offset {offset} exceeds {MAX_EXPONENT}")]
    ExponentTooLarge { offset: usize },
    #[error("expression at offset {offset} is not polynomial in y")]
    NotPolynomial { offset: usize },
}

impl ParseError {
    pub fn offset(&self) -> usize {
        match self {
            ParseError::IllegalCharacter { offset, .. }
            | ParseError::UnexpectedToken { offset, .. }
            | ParseError::WrongVariable { offset, .. }
            | ParseError::DivisionByZero { offset }
            | ParseError::TrailingInput { offset }
            | ParseError::ExponentTooLarge { offset }
            | ParseError::NotPolynomial { offset } => *offset,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TokenKind {
    Integer,
    Identifier,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub lexeme: String,
    /// Byte offset of the first character.
    pub offset: usize,
}

pub fn tokenize(input: &str) -> Result<Vec<Token>, ParseError> {
    let mut tokens = Vec::new();
    let mut chars = input.char_indices().peekable();
    while let Some((offset, ch)) = chars.next() {
        let single = match ch {
            c if c.is_whitespace() => continue,
            '+' => Some(TokenKind::Plus),
            '-' | '\u{2212}' => Some(TokenKind::Minus),
            '*' => Some(TokenKind::Star),
            '/' => Some(TokenKind::Slash),
            '^' => Some(TokenKind::Caret),
            '(' => Some(TokenKind::LParen),
            ')' => Some(TokenKind::RParen),
            _ => None,
        };
        if let Some(kind) = single {
            tokens.push(Token { kind, lexeme: ch.to_string(), offset });
            continue;
        }
        let kind = if ch.is_ascii_digit() {
            TokenKind::Integer
        } else if ch.is_ascii_alphabetic() || ch == '_' {
            TokenKind::Identifier
        } else {
            return Err(ParseError::IllegalCharacter { ch, offset });
        };
        let mut lexeme = ch.to_string();
        while let Some(&(_, c)) = chars.peek() {
            let continues = match kind {
                TokenKind::Integer => c.is_ascii_digit(),
                _ => c.is_ascii_alphanumeric() || c == '_',
            };
            if !continues {
                break;
            }
            lexeme.push(c);
            chars.next();
        }
        tokens.push(Token { kind, lexeme, offset });
    }
    Ok(tokens)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NodeKind {
    Number(BigInt),
    Variable(Var),
    Negate(Box<SyntaxTree>),
    Add(Box<SyntaxTree>, Box<SyntaxTree>),
    Sub(Box<SyntaxTree>, Box<SyntaxTree>),
    Mul(Box<SyntaxTree>, Box<SyntaxTree>),
    Div(Box<SyntaxTree>, Box<SyntaxTree>),
    Pow(Box<SyntaxTree>, u32),
}

/// Parsed expression; `offset` is the byte offset of the node's operator or
/// leading token.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyntaxTree {
    pub kind: NodeKind,
    pub offset: usize,
}

struct Parser<'a> {
    tokens: &'a [Token],
    pos: usize,
    end: usize,
    vars: &'a [Var],
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn peek_kind(&self) -> Option<TokenKind> {
        self.peek().map(|t| t.kind)
    }

    fn unexpected(&self) -> ParseError {
        match self.peek() {
            Some(t) => ParseError::UnexpectedToken { found: format!("'{}'", t.lexeme), offset: t.offset },
            None => ParseError::UnexpectedToken { found: "end of input".into(), offset: self.end },
        }
    }

    fn expr(&mut self) -> Result<SyntaxTree, ParseError> {
        let mut lhs = self.term()?;
        while let Some(kind @ (TokenKind::Plus | TokenKind::Minus)) = self.peek_kind() {
            let offset = self.tokens[self.pos].offset;
            self.pos += 1;
            let rhs = Box::new(self.term()?);
            let lhs_box = Box::new(lhs);
            let kind = if kind == TokenKind::Plus { NodeKind::Add(lhs_box, rhs) } else { NodeKind::Sub(lhs_box, rhs) };
            lhs = SyntaxTree { kind, offset };
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<SyntaxTree, ParseError> {
        let mut lhs = self.unary()?;
        while let Some(kind @ (TokenKind::Star | TokenKind::Slash)) = self.peek_kind() {
            let offset = self.tokens[self.pos].offset;
            self.pos += 1;
            let rhs = Box::new(self.unary()?);
            let lhs_box = Box::new(lhs);
            let kind = if kind == TokenKind::Star { NodeKind::Mul(lhs_box, rhs) } else { NodeKind::Div(lhs_box, rhs) };
            lhs = SyntaxTree { kind, offset };
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<SyntaxTree, ParseError> {
        if self.peek_kind() == Some(TokenKind::Minus) {
            let offset = self.tokens[self.pos].offset;
            self.pos += 1;
            let inner = self.unary()?;
            return Ok(SyntaxTree { kind: NodeKind::Negate(Box::new(inner)), offset });
        }
        self.factor()
    }

    fn factor(&mut self) -> Result<SyntaxTree, ParseError> {
        let base = self.base()?;
        if self.peek_kind() != Some(TokenKind::Caret) {
            return Ok(base);
        }
        let offset = self.tokens[self.pos].offset;
        self.pos += 1;
        let Some(tok) = self.peek().filter(|t| t.kind == TokenKind::Integer) else {
            return Err(self.unexpected());
        };
        let e = tok
            .lexeme
            .parse::<u64>()
            .ok()
            .and_then(|e| u32::try_from(e).ok())
            .filter(|&e| e <= MAX_EXPONENT)
            .ok_or(ParseError::ExponentTooLarge { offset: tok.offset })?;
        self.pos += 1;
        if self.peek_kind() == Some(TokenKind::Caret) {
            return Err(self.unexpected());
        }
        Ok(SyntaxTree { kind: NodeKind::Pow(Box::new(base), e), offset })
    }

    fn base(&mut self) -> Result<SyntaxTree, ParseError> {
        let Some(tok) = self.peek().cloned() else {
            return Err(self.unexpected());
        };
        let kind = match tok.kind {
            TokenKind::Integer => NodeKind::Number(tok.lexeme.parse().expect("digits form an integer")),
            TokenKind::Identifier => {
                let var = self.vars.iter().copied().find(|v| v.name() == tok.lexeme).ok_or_else(|| {
                    ParseError::WrongVariable {
                        name: tok.lexeme.clone(),
                        offset: tok.offset,
                        expected: self.vars.iter().map(|v| v.name()).collect::<Vec<_>>().join(" or "),
                    }
                })?;
                NodeKind::Variable(var)
            }
            TokenKind::LParen => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek_kind() != Some(TokenKind::RParen) {
                    return Err(self.unexpected());
                }
                self.pos += 1;
                return Ok(inner);
            }
            _ => return Err(self.unexpected()),
        };
        self.pos += 1;
        Ok(SyntaxTree { kind, offset: tok.offset })
    }
}

/// Builds the syntax tree; identifiers must name one of `vars`.
pub fn parse_tree(tokens: &[Token], vars: &[Var], input_len: usize) -> Result<SyntaxTree, ParseError> {
    let mut p = Parser { tokens, pos: 0, end: input_len, vars };
    let tree = p.expr()?;
    match p.peek() {
        None => Ok(tree),
        Some(t) if t.kind == TokenKind::RParen => Err(p.unexpected()),
        Some(t) => Err(ParseError::TrailingInput { offset: t.offset }),
    }
}

/// Evaluates `tokens` to a canonical rational function in `var`.
pub fn parse(tokens: &[Token], var: Var) -> Result<RatFunc, ParseError> {
    let end = tokens.last().map_or(0, |t| t.offset + t.lexeme.len());
    parse_tree(tokens, &[var], end)?.eval(var)
}

/// Tokenizes and evaluates `input` as a rational function in `var`.
pub fn parse_ratfunc(input: &str, var: Var) -> Result<RatFunc, ParseError> {
    let tokens = tokenize(input)?;
    parse_tree(&tokens, &[var], input.len())?.eval(var)
}

/// Tokenizes and evaluates `input` as a polynomial in `var` over `Q`.
pub fn parse_poly(input: &str, var: Var) -> Result<Poly, ParseError> {
    let f = parse_ratfunc(input, var)?;
    if !f.is_polynomial() {
        return Err(ParseError::NotPolynomial { offset: 0 });
    }
    Ok(f.num().clone())
}

/// Reads a polynomial in `y` whose coefficients are rational functions in
/// `x`. Division is allowed only by `y`-free expressions.
pub fn parse_coeff_poly(input: &str) -> Result<CoeffPoly, ParseError> {
    let tokens = tokenize(input)?;
    let tree = parse_tree(&tokens, &[Var::Y, Var::X], input.len())?;
    Ok(CoeffPoly::new(Var::X, tree.eval_coeff()?))
}

impl SyntaxTree {
    /// Exact value as a rational function in `var`.
    pub fn eval(&self, var: Var) -> Result<RatFunc, ParseError> {
        Ok(match &self.kind {
            NodeKind::Number(n) => RatFunc::constant(var, Rat::from_integer(n.clone())),
            NodeKind::Variable(v) => {
                debug_assert_eq!(*v, var);
                RatFunc::var(var)
            }
            NodeKind::Negate(a) => -a.eval(var)?,
            NodeKind::Add(a, b) => a.eval(var)? + b.eval(var)?,
            NodeKind::Sub(a, b) => a.eval(var)? - b.eval(var)?,
            NodeKind::Mul(a, b) => a.eval(var)? * b.eval(var)?,
            NodeKind::Div(a, b) => {
                let d = b.eval(var)?;
                a.eval(var)?.checked_div(&d).map_err(|_| ParseError::DivisionByZero { offset: self.offset })?
            }
            NodeKind::Pow(a, e) => a.eval(var)?.pow(i64::from(*e)).expect("nonnegative power"),
        })
    }

    /// Coefficient list in `y` over `Q(x)`, lowest degree first, untrimmed.
    fn eval_coeff(&self) -> Result<Vec<RatFunc>, ParseError> {
        let x = Var::X;
        Ok(match &self.kind {
            NodeKind::Number(n) => vec![RatFunc::constant(x, Rat::from_integer(n.clone()))],
            NodeKind::Variable(Var::Y) => vec![RatFunc::zero(x), RatFunc::one(x)],
            NodeKind::Variable(_) => vec![RatFunc::var(x)],
            NodeKind::Negate(a) => a.eval_coeff()?.iter().map(|c| -c).collect(),
            NodeKind::Add(a, b) => cp_add(&a.eval_coeff()?, &b.eval_coeff()?, false),
            NodeKind::Sub(a, b) => cp_add(&a.eval_coeff()?, &b.eval_coeff()?, true),
            NodeKind::Mul(a, b) => cp_mul(&a.eval_coeff()?, &b.eval_coeff()?),
            NodeKind::Div(a, b) => {
                let d = cp_trim(b.eval_coeff()?);
                match d.as_slice() {
                    [] => return Err(ParseError::DivisionByZero { offset: self.offset }),
                    [c] => a.eval_coeff()?.iter().map(|t| t.checked_div(c).expect("nonzero divisor")).collect(),
                    _ => return Err(ParseError::NotPolynomial { offset: self.offset }),
                }
            }
            NodeKind::Pow(a, e) => {
                let base = a.eval_coeff()?;
                let mut acc = vec![RatFunc::one(x)];
                for _ in 0..*e {
                    acc = cp_mul(&acc, &base);
                }
                acc
            }
        })
    }
}

fn cp_trim(mut v: Vec<RatFunc>) -> Vec<RatFunc> {
    while v.last().is_some_and(RatFunc::is_zero) {
        v.pop();
    }
    v
}

fn cp_add(a: &[RatFunc], b: &[RatFunc], negate_b: bool) -> Vec<RatFunc> {
    let zero = RatFunc::zero(Var::X);
    (0..a.len().max(b.len()))
        .map(|k| {
            let (p, q) = (a.get(k).unwrap_or(&zero), b.get(k).unwrap_or(&zero));
            if negate_b {
                p - q
            } else {
                p + q
            }
        })
        .collect()
}

fn cp_mul(a: &[RatFunc], b: &[RatFunc]) -> Vec<RatFunc> {
    let (a, b) = (cp_trim(a.to_vec()), cp_trim(b.to_vec()));
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![RatFunc::zero(Var::X); a.len() + b.len() - 1];
    for (i, p) in a.iter().enumerate() {
        for (j, q) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(p * q);
        }
    }
    out
}
