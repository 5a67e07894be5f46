//! Text grammar for polynomials.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' integer)?
//! atom   := integer ('/' integer)? | variable | '(' expr ')'
//! ```
//!
//! Variables are `x1, x2, ...` (facet variables) or `y1, y2, ...`
//! (parameters, with `u` and `v` as aliases for `y1` and `y2`). A single
//! polynomial may not mix the two families.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{format_rational, Monomial, MultiPoly, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VarFamily {
    Facet,
    Param,
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Var(VarFamily, usize),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

fn syntax(pos: usize, msg: impl Into<String>) -> Error {
    Error::Syntax { pos, msg: msg.into() }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '/' => Tok::Slash,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            d if d.is_ascii_digit() => {
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                out.push((start, Tok::Int(BigInt::from_str(&s).expect("digits"))));
                continue;
            }
            a if a.is_ascii_alphabetic() => {
                while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                out.push((start, parse_var(&s).ok_or_else(|| syntax(start, format!("unknown variable {s:?}")))?));
                continue;
            }
            other => return Err(syntax(start, format!("unexpected character {other:?}"))),
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

fn parse_var(s: &str) -> Option<Tok> {
    match s {
        "u" => return Some(Tok::Var(VarFamily::Param, 0)),
        "v" => return Some(Tok::Var(VarFamily::Param, 1)),
        _ => {}
    }
    let (fam, rest) = match s.as_bytes().first()? {
        b'x' => (VarFamily::Facet, &s[1..]),
        b'y' => (VarFamily::Param, &s[1..]),
        _ => return None,
    };
    if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) || rest.starts_with('0') {
        return None;
    }
    let idx: usize = rest.parse().ok()?;
    Some(Tok::Var(fam, idx - 1))
}

/// Intermediate polynomial over a growing variable count.
#[derive(Clone, Debug)]
struct Expr(Vec<(Vec<u32>, Rational)>);

impl Expr {
    fn constant(c: Rational) -> Expr {
        Expr(vec![(Vec::new(), c)])
    }

    fn into_poly(self, nvars: usize) -> MultiPoly {
        MultiPoly::from_terms(
            nvars,
            self.0.into_iter().map(|(mut e, c)| {
                e.resize(nvars, 0);
                (e, c)
            }),
        )
    }
}

fn pad(a: &[u32], b: &[u32]) -> Vec<u32> {
    let n = a.len().max(b.len());
    (0..n).map(|i| a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)).collect()
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    family: Option<VarFamily>,
    nvars: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc.0.extend(self.term()?.0);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc.0.extend(self.term()?.0.into_iter().map(|(e, c)| (e, -c)));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut acc = self.unary()?;
        while let Some(Tok::Star) = self.peek() {
            self.pos += 1;
            let rhs = self.unary()?;
            acc = mul(&acc, &rhs);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                let e = self.unary()?;
                Ok(Expr(e.0.into_iter().map(|(e, c)| (e, -c)).collect()))
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            let at = self.here();
            let k = match self.peek() {
                Some(Tok::Int(k)) => k.clone(),
                _ => return Err(syntax(at, "expected a nonnegative integer exponent")),
            };
            self.pos += 1;
            let k: u32 = k.try_into().map_err(|_| syntax(at, "exponent too large"))?;
            let mut acc = Expr::constant(Rational::one());
            for _ in 0..k {
                acc = mul(&acc, &base);
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        let at = self.here();
        let Some(tok) = self.peek().cloned() else {
            return Err(syntax(at, "unexpected end of input"));
        };
        self.pos += 1;
        match tok {
            Tok::Int(n) => {
                if let Some(Tok::Slash) = self.peek() {
                    self.pos += 1;
                    let dpos = self.here();
                    let Some(Tok::Int(d)) = self.peek().cloned() else {
                        return Err(syntax(dpos, "expected an integer denominator"));
                    };
                    self.pos += 1;
                    if d.is_zero() {
                        return Err(syntax(dpos, "zero denominator"));
                    }
                    return Ok(Expr::constant(Rational::new(n, d)));
                }
                Ok(Expr::constant(Rational::from_integer(n)))
            }
            Tok::Var(fam, idx) => {
                match self.family {
                    Some(f) if f != fam => return Err(syntax(at, "facet and parameter variables cannot be mixed")),
                    _ => self.family = Some(fam),
                }
                self.nvars = self.nvars.max(idx + 1);
                let mut e = vec![0; idx + 1];
                e[idx] = 1;
                Ok(Expr(vec![(e, Rational::one())]))
            }
            Tok::LParen => {
                let e = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok(e)
                    }
                    _ => Err(syntax(self.here(), "expected ')'")),
                }
            }
            _ => Err(syntax(at, "expected a number, variable or '('")),
        }
    }
}

fn mul(a: &Expr, b: &Expr) -> Expr {
    let mut out = Vec::with_capacity(a.0.len() * b.0.len());
    for (ea, ca) in &a.0 {
        for (eb, cb) in &b.0 {
            out.push((pad(ea, eb), ca * cb));
        }
    }
    // Collapse early so repeated powers stay small.
    let n = out.iter().map(|(e, _)| e.len()).max().unwrap_or(0);
    let p = Expr(out).into_poly(n);
    Expr(p.terms().map(|(m, c)| (m.0.clone(), c.clone())).collect())
}

/// Parses a polynomial, returning the variable family it uses (`None` for
/// constants) and the polynomial in as many variables as its highest index.
pub fn parse_poly(text: &str) -> Result<(Option<VarFamily>, MultiPoly)> {
    let toks = tokenize(text)?;
    let mut p = Parser { toks, pos: 0, end: text.chars().count(), family: None, nvars: 0 };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(syntax(p.here(), "unexpected trailing input"));
    }
    Ok((p.family, e.into_poly(p.nvars)))
}

/// Parses a polynomial that must use `family` (or be constant) in exactly
/// `nvars` variables.
pub fn parse_poly_in(text: &str, family: VarFamily, nvars: usize) -> Result<MultiPoly> {
    let (fam, p) = parse_poly(text)?;
    if let Some(f) = fam {
        if f != family {
            let want = match family {
                VarFamily::Facet => "facet variables x1, x2, ...",
                VarFamily::Param => "parameter variables y1, y2, ... (or u, v)",
            };
            return Err(syntax(0, format!("expected {want}")));
        }
    }
    if p.nvars() > nvars {
        return Err(Error::VariableCountMismatch(nvars, p.nvars()));
    }
    p.with_nvars(nvars)
}

fn var_name(family: VarFamily, nvars: usize, i: usize) -> String {
    match family {
        VarFamily::Facet => format!("x{}", i + 1),
        VarFamily::Param if nvars <= 2 => ["u", "v"][i].to_string(),
        VarFamily::Param => format!("y{}", i + 1),
    }
}

fn render_monomial(m: &Monomial, family: VarFamily, nvars: usize) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.0.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(var_name(family, nvars, i)),
            _ => parts.push(format!("{}^{}", var_name(family, nvars, i), e)),
        }
    }
    parts.join("*")
}

/// Renders in graded-lex descending order, e.g. `x1^2*x2 + 3/2`.
pub fn render(p: &MultiPoly, family: VarFamily) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (m, c)) in p.terms().rev().enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mono = render_monomial(m, family, p.nvars());
        if mono.is_empty() {
            out.push_str(&format_rational(&abs));
        } else if abs.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format_rational(&abs));
            out.push('*');
            out.push_str(&mono);
        }
    }
    out
}
