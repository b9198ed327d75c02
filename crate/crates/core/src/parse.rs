//! Text format for ring/ideal input and its canonical emission.
//!
//! Grammar (UTF-8, `#` starts a line comment):
//!
//! ```text
//! ring x,y,z,t;  char 32003;  ideal x^3 - y*z^2, z^3 - x*y^2;
//! label twisted_example;  expect reg=2, saturated=true;
//! ```
//!
//! Statements may appear in any order except that `ring` and `char` must
//! precede `ideal`. Expressions use `+ - * ^ ( )` with integer
//! coefficients and must be homogeneous. `ideal 0;` declares the zero
//! ideal. `label` takes an identifier or quoted string; `expect` records
//! key=value pairs for corpus checks, with quoted strings for values
//! containing commas.

use crate::field::Field;
use crate::monomial::Monomial;
use crate::poly::{Polynomial, Ring};
use crate::{Error, Result};
use std::collections::BTreeMap;

#[derive(Debug, Clone)]
pub struct IdealSource {
    pub ring: Ring,
    pub gens: Vec<Polynomial>,
    pub label: Option<String>,
    pub expect: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(i64),
    Str(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Comma,
    Semi,
    Eq,
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn err(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        col,
        msg: msg.into(),
    }
}

fn lex(text: &str) -> Result<Vec<Spanned>> {
    let mut out = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (tline, tcol) = (line, col);
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next().unwrap();
            if c == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
            c
        };
        match c {
            ' ' | '\t' | '\r' | '\n' => {
                bump(&mut chars);
            }
            '#' => {
                while let Some(&c) = chars.peek() {
                    bump(&mut chars);
                    if c == '\n' {
                        break;
                    }
                }
            }
            '"' => {
                bump(&mut chars);
                let mut s = String::new();
                loop {
                    match chars.peek() {
                        None => return Err(err(tline, tcol, "unterminated string")),
                        Some('"') => {
                            bump(&mut chars);
                            break;
                        }
                        Some(_) => s.push(bump(&mut chars)),
                    }
                }
                out.push(Spanned {
                    tok: Tok::Str(s),
                    line: tline,
                    col: tcol,
                });
            }
            c if c.is_ascii_digit() => {
                let mut v: i64 = 0;
                while let Some(&c) = chars.peek() {
                    if !c.is_ascii_digit() {
                        break;
                    }
                    let d = bump(&mut chars) as i64 - '0' as i64;
                    v = v
                        .checked_mul(10)
                        .and_then(|v| v.checked_add(d))
                        .ok_or_else(|| err(tline, tcol, "integer literal too large"))?;
                }
                out.push(Spanned {
                    tok: Tok::Int(v),
                    line: tline,
                    col: tcol,
                });
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut s = String::new();
                while let Some(&c) = chars.peek() {
                    if !(c.is_ascii_alphanumeric() || c == '_') {
                        break;
                    }
                    s.push(bump(&mut chars));
                }
                out.push(Spanned {
                    tok: Tok::Ident(s),
                    line: tline,
                    col: tcol,
                });
            }
            _ => {
                let tok = match bump(&mut chars) {
                    '+' => Tok::Plus,
                    '-' => Tok::Minus,
                    '*' => Tok::Star,
                    '^' => Tok::Caret,
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    ',' => Tok::Comma,
                    ';' => Tok::Semi,
                    '=' => Tok::Eq,
                    other => return Err(err(tline, tcol, format!("unexpected character '{other}'"))),
                };
                out.push(Spanned {
                    tok,
                    line: tline,
                    col: tcol,
                });
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: &'a [Spanned],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Spanned> {
        self.toks.get(self.pos)
    }

    fn here(&self) -> (usize, usize) {
        match self.peek() {
            Some(s) => (s.line, s.col),
            None => self
                .toks
                .last()
                .map(|s| (s.line, s.col + 1))
                .unwrap_or((1, 1)),
        }
    }

    fn next(&mut self) -> Option<&Spanned> {
        let t = self.toks.get(self.pos);
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect_tok(&mut self, want: &Tok, what: &str) -> Result<()> {
        let (line, col) = self.here();
        match self.next() {
            Some(s) if &s.tok == want => Ok(()),
            Some(s) => Err(err(s.line, s.col, format!("expected {what}"))),
            None => Err(err(line, col, format!("expected {what}, found end of input"))),
        }
    }

    fn ident(&mut self, what: &str) -> Result<(String, usize, usize)> {
        let (line, col) = self.here();
        match self.next() {
            Some(Spanned {
                tok: Tok::Ident(s),
                line,
                col,
            }) => Ok((s.clone(), *line, *col)),
            Some(s) => Err(err(s.line, s.col, format!("expected {what}"))),
            None => Err(err(line, col, format!("expected {what}, found end of input"))),
        }
    }
}

/// Sparse integer polynomial under construction: exponent vector keyed
/// terms with i64 coefficients reduced into the field only at the end.
type RawPoly = BTreeMap<Vec<u16>, i64>;

fn raw_add(a: &mut RawPoly, b: RawPoly) {
    for (m, c) in b {
        *a.entry(m).or_insert(0) += c;
    }
    a.retain(|_, c| *c != 0);
}

fn raw_scale(a: &mut RawPoly, k: i64) {
    a.retain(|_, c| {
        *c = c.wrapping_mul(k);
        *c != 0
    });
}

fn raw_mul(nvars: usize, a: &RawPoly, b: &RawPoly) -> RawPoly {
    let mut out = RawPoly::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let mut m = vec![0u16; nvars];
            for i in 0..nvars {
                m[i] = ma[i] + mb[i];
            }
            let e = out.entry(m).or_insert(0);
            *e = e.wrapping_add(ca.wrapping_mul(*cb));
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

struct ExprParser<'a, 'b> {
    p: &'b mut Parser<'a>,
    vars: &'b [String],
}

impl ExprParser<'_, '_> {
    fn nvars(&self) -> usize {
        self.vars.len()
    }

    fn expr(&mut self) -> Result<RawPoly> {
        let mut acc = if matches!(self.p.peek().map(|s| &s.tok), Some(Tok::Minus)) {
            self.p.next();
            let mut t = self.term()?;
            raw_scale(&mut t, -1);
            t
        } else {
            self.term()?
        };
        loop {
            match self.p.peek().map(|s| &s.tok) {
                Some(Tok::Plus) => {
                    self.p.next();
                    let t = self.term()?;
                    raw_add(&mut acc, t);
                }
                Some(Tok::Minus) => {
                    self.p.next();
                    let mut t = self.term()?;
                    raw_scale(&mut t, -1);
                    raw_add(&mut acc, t);
                }
                _ => break,
            }
        }
        acc.retain(|_, c| *c != 0);
        Ok(acc)
    }

    fn term(&mut self) -> Result<RawPoly> {
        let mut acc = self.factor()?;
        while matches!(self.p.peek().map(|s| &s.tok), Some(Tok::Star)) {
            self.p.next();
            let f = self.factor()?;
            acc = raw_mul(self.nvars(), &acc, &f);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<RawPoly> {
        let base = self.base()?;
        if matches!(self.p.peek().map(|s| &s.tok), Some(Tok::Caret)) {
            self.p.next();
            let (line, col) = self.p.here();
            let e = match self.p.next() {
                Some(Spanned {
                    tok: Tok::Int(v), ..
                }) if (0..=u16::MAX as i64).contains(v) => *v as u32,
                _ => return Err(err(line, col, "expected exponent")),
            };
            let mut acc: RawPoly = [(vec![0u16; self.nvars()], 1i64)].into_iter().collect();
            for _ in 0..e {
                acc = raw_mul(self.nvars(), &acc, &base);
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<RawPoly> {
        let (line, col) = self.p.here();
        match self.p.next().cloned() {
            Some(Spanned {
                tok: Tok::Int(v), ..
            }) => Ok(if v == 0 {
                RawPoly::new()
            } else {
                [(vec![0u16; self.nvars()], v)].into_iter().collect()
            }),
            Some(Spanned {
                tok: Tok::Ident(name),
                line,
                col,
            }) => {
                let i = self
                    .vars
                    .iter()
                    .position(|v| *v == name)
                    .ok_or_else(|| err(line, col, format!("unknown variable '{name}'")))?;
                let mut m = vec![0u16; self.nvars()];
                m[i] = 1;
                Ok([(m, 1i64)].into_iter().collect())
            }
            Some(Spanned { tok: Tok::Minus, .. }) => {
                let mut f = self.factor()?;
                raw_scale(&mut f, -1);
                Ok(f)
            }
            Some(Spanned {
                tok: Tok::LParen, ..
            }) => {
                let e = self.expr()?;
                self.p.expect_tok(&Tok::RParen, "')'")?;
                Ok(e)
            }
            Some(s) => Err(err(s.line, s.col, "expected term")),
            None => Err(err(line, col, "expected term, found end of input")),
        }
    }
}

/// Parses the full input format into a ring and generator list.
pub fn parse_ideal(text: &str) -> Result<IdealSource> {
    parse_ideal_in(text, None)
}

/// Same as [`parse_ideal`], but an explicit field replaces the declared
/// characteristic before coefficients are reduced.
pub fn parse_ideal_in(text: &str, override_field: Option<Field>) -> Result<IdealSource> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks: &toks,
        pos: 0,
    };
    let mut vars: Option<Vec<String>> = None;
    let mut field: Option<Field> = None;
    let mut gens_raw: Option<Vec<(RawPoly, usize, usize)>> = None;
    let mut label: Option<String> = None;
    let mut expect: BTreeMap<String, String> = BTreeMap::new();

    while p.peek().is_some() {
        let (kw, kline, kcol) = p.ident("statement keyword")?;
        match kw.as_str() {
            "ring" => {
                if vars.is_some() {
                    return Err(err(kline, kcol, "duplicate ring declaration"));
                }
                let mut names = Vec::new();
                loop {
                    let (name, line, col) = p.ident("variable name")?;
                    if names.contains(&name) {
                        return Err(err(line, col, format!("duplicate variable '{name}'")));
                    }
                    names.push(name);
                    match p.next() {
                        Some(Spanned { tok: Tok::Comma, .. }) => continue,
                        Some(Spanned { tok: Tok::Semi, .. }) => break,
                        Some(s) => return Err(err(s.line, s.col, "expected ',' or ';'")),
                        None => return Err(err(kline, kcol, "unterminated ring declaration")),
                    }
                }
                vars = Some(names);
            }
            "char" => {
                if field.is_some() {
                    return Err(err(kline, kcol, "duplicate char declaration"));
                }
                let (line, col) = p.here();
                let v = match p.next() {
                    Some(Spanned {
                        tok: Tok::Int(v), ..
                    }) => *v,
                    _ => return Err(err(line, col, "expected characteristic")),
                };
                field = Some(if v == 0 {
                    Field::Rational
                } else if v > 1 && crate::field::is_prime(v as u64) {
                    Field::Prime(v as u64)
                } else {
                    return Err(err(line, col, format!("characteristic {v} is not prime")));
                });
                p.expect_tok(&Tok::Semi, "';'")?;
            }
            "ideal" => {
                if gens_raw.is_some() {
                    return Err(err(kline, kcol, "duplicate ideal declaration"));
                }
                let vnames = vars
                    .as_ref()
                    .ok_or_else(|| err(kline, kcol, "ideal before ring declaration"))?;
                let mut list = Vec::new();
                loop {
                    let (gline, gcol) = p.here();
                    let raw = ExprParser {
                        p: &mut p,
                        vars: vnames,
                    }
                    .expr()?;
                    list.push((raw, gline, gcol));
                    match p.next() {
                        Some(Spanned { tok: Tok::Comma, .. }) => continue,
                        Some(Spanned { tok: Tok::Semi, .. }) => break,
                        Some(s) => return Err(err(s.line, s.col, "expected ',' or ';'")),
                        None => return Err(err(kline, kcol, "unterminated ideal declaration")),
                    }
                }
                gens_raw = Some(list);
            }
            "label" => {
                let (line, col) = p.here();
                label = Some(match p.next() {
                    Some(Spanned {
                        tok: Tok::Ident(s), ..
                    }) => s.clone(),
                    Some(Spanned {
                        tok: Tok::Str(s), ..
                    }) => s.clone(),
                    _ => return Err(err(line, col, "expected label")),
                });
                p.expect_tok(&Tok::Semi, "';'")?;
            }
            "expect" => loop {
                let (key, _, _) = p.ident("expectation key")?;
                p.expect_tok(&Tok::Eq, "'='")?;
                let (line, col) = p.here();
                let value = match p.next().cloned() {
                    Some(Spanned {
                        tok: Tok::Ident(s), ..
                    }) => s,
                    Some(Spanned {
                        tok: Tok::Str(s), ..
                    }) => s,
                    Some(Spanned {
                        tok: Tok::Int(v), ..
                    }) => v.to_string(),
                    Some(Spanned {
                        tok: Tok::Minus, ..
                    }) => match p.next() {
                        Some(Spanned {
                            tok: Tok::Int(v), ..
                        }) => format!("-{v}"),
                        _ => return Err(err(line, col, "expected value")),
                    },
                    _ => return Err(err(line, col, "expected value")),
                };
                expect.insert(key, value);
                match p.next() {
                    Some(Spanned { tok: Tok::Comma, .. }) => continue,
                    Some(Spanned { tok: Tok::Semi, .. }) => break,
                    Some(s) => return Err(err(s.line, s.col, "expected ',' or ';'")),
                    None => return Err(err(kline, kcol, "unterminated expect declaration")),
                }
            },
            other => {
                return Err(err(
                    kline,
                    kcol,
                    format!("unknown statement '{other}' (expected ring, char, ideal, label, expect)"),
                ))
            }
        }
    }

    let vars = vars.ok_or_else(|| err(1, 1, "missing ring declaration"))?;
    let mut field = field.ok_or_else(|| err(1, 1, "missing char declaration"))?;
    if let Some(f) = override_field {
        field = f;
    }
    let gens_raw = gens_raw.ok_or_else(|| err(1, 1, "missing ideal declaration"))?;
    let ring = Ring::new(vars, field);

    let whole_ideal_zero = gens_raw.len() == 1 && gens_raw[0].0.is_empty();
    let mut gens = Vec::new();
    if !whole_ideal_zero {
        for (raw, line, col) in gens_raw {
            if raw.is_empty() {
                return Err(err(line, col, "zero generator in a nonzero ideal"));
            }
            let deg = raw
                .keys()
                .next()
                .map(|m| m.iter().map(|&e| e as u32).sum::<u32>())
                .unwrap();
            for m in raw.keys() {
                if m.iter().map(|&e| e as u32).sum::<u32>() != deg {
                    return Err(err(line, col, "generator is not homogeneous"));
                }
            }
            let terms: Vec<(Monomial, _)> = raw
                .iter()
                .map(|(m, &c)| (Monomial::from_exps(m), ring.field.from_i64(c)))
                .collect();
            let g = Polynomial::from_terms(&ring, terms);
            if g.is_zero() {
                return Err(err(line, col, "generator vanishes in this characteristic"));
            }
            gens.push(g);
        }
    }

    Ok(IdealSource {
        ring,
        gens,
        label,
        expect,
    })
}

/// Canonical emission; parses back to the same source.
pub fn emit_source(src: &IdealSource) -> String {
    let mut out = String::new();
    out.push_str(&format!("ring {};\n", src.ring.vars.join(",")));
    let characteristic = match src.ring.field {
        Field::Prime(p) => p,
        Field::Rational => 0,
    };
    out.push_str(&format!("char {characteristic};\n"));
    if let Some(label) = &src.label {
        out.push_str(&format!("label \"{label}\";\n"));
    }
    if !src.expect.is_empty() {
        let pairs: Vec<String> = src
            .expect
            .iter()
            .map(|(k, v)| format!("{k}=\"{v}\""))
            .collect();
        out.push_str(&format!("expect {};\n", pairs.join(", ")));
    }
    if src.gens.is_empty() {
        out.push_str("ideal 0;\n");
    } else {
        let rendered: Vec<String> = src.gens.iter().map(|g| g.display(&src.ring)).collect();
        out.push_str(&format!("ideal {};\n", rendered.join(",\n  ")));
    }
    out
}
