//! Text format for ideals and families.
//!
//! Header lines: `field Q` or `field F 32003`; `ring x0..xN`; optional
//! `order lex|grevlex|weight w0,..,wN`. Every following non-comment line is
//! one generator in the polynomial grammar: terms joined by + / -, `^` for
//! powers, `*` optional between symbols, integer or rational coefficients,
//! `t` reserved for the family parameter.

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialOrder, WeightVector};
use crate::poly::Poly;
use crate::scalar::FieldSpec;

#[derive(Clone, Debug)]
pub struct InputFile {
    pub field: FieldSpec,
    /// Number of x-variables (x0..x_{nx-1}).
    pub nx: usize,
    pub order: Option<MonomialOrder>,
    /// True when any generator uses the parameter t; generators then live in
    /// nx+1 variables with t last, otherwise in nx variables.
    pub family: bool,
    pub gens: Vec<Poly>,
}

pub fn parse_input(text: &str) -> Result<InputFile> {
    let mut field: Option<FieldSpec> = None;
    let mut nx: Option<usize> = None;
    let mut order: Option<MonomialOrder> = None;
    let mut raw_gens: Vec<(usize, String)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let mut words = line.split_whitespace();
        match words.next() {
            Some("field") => {
                field = Some(parse_field(&mut words, lineno)?);
            }
            Some("ring") => {
                nx = Some(parse_ring(words.next().unwrap_or(""), lineno)?);
            }
            Some("order") => {
                let rest: Vec<&str> = words.collect();
                order = Some(parse_order(&rest, lineno)?);
            }
            Some(_) => raw_gens.push((lineno, line.to_string())),
            None => {}
        }
    }

    let field = field.ok_or(Error::Parse {
        line: 0,
        msg: "missing `field` header".into(),
    })?;
    let nx = nx.ok_or(Error::Parse {
        line: 0,
        msg: "missing `ring` header".into(),
    })?;

    // two passes: detect the family parameter, then parse in the right ring
    let family = raw_gens
        .iter()
        .any(|(_, s)| uses_t(s));
    let nvars = if family { nx + 1 } else { nx };
    let mut gens = Vec::new();
    for (lineno, s) in &raw_gens {
        gens.push(parse_poly_line(s, nvars, nx, family, field, *lineno)?);
    }
    if let Some(MonomialOrder::Weight { weights, .. }) = &order {
        if weights.len() != nx {
            return Err(Error::Parse {
                line: 0,
                msg: format!(
                    "weight vector has {} entries but the ring has {} variables",
                    weights.len(),
                    nx
                ),
            });
        }
    }
    Ok(InputFile {
        field,
        nx,
        order,
        family,
        gens,
    })
}

fn parse_field(words: &mut std::str::SplitWhitespace, line: usize) -> Result<FieldSpec> {
    match words.next() {
        Some("Q") => Ok(FieldSpec::Q),
        Some("F") => {
            let p: u64 = words
                .next()
                .and_then(|w| w.parse().ok())
                .ok_or(Error::Parse {
                    line,
                    msg: "expected a prime after `field F`".into(),
                })?;
            FieldSpec::prime_field(p)
        }
        other => Err(Error::Parse {
            line,
            msg: format!("unknown field {:?} (expected Q or F <p>)", other),
        }),
    }
}

fn parse_ring(spec: &str, line: usize) -> Result<usize> {
    let bad = || Error::Parse {
        line,
        msg: format!("bad ring spec `{spec}` (expected x0..xN)"),
    };
    if let Some((lo, hi)) = spec.split_once("..") {
        let lo = lo.strip_prefix('x').and_then(|s| s.parse::<usize>().ok());
        let hi = hi.strip_prefix('x').and_then(|s| s.parse::<usize>().ok());
        match (lo, hi) {
            (Some(0), Some(h)) => Ok(h + 1),
            _ => Err(bad()),
        }
    } else if spec == "x0" {
        Ok(1)
    } else {
        Err(bad())
    }
}

fn parse_order(words: &[&str], line: usize) -> Result<MonomialOrder> {
    match words.first() {
        Some(&"lex") => Ok(MonomialOrder::Lex),
        Some(&"grevlex") => Ok(MonomialOrder::GrevLex),
        Some(&"weight") => {
            let rest = words[1..].join("");
            let ws: Result<Vec<i64>> = rest
                .split(',')
                .map(|s| {
                    s.trim().parse::<i64>().map_err(|_| Error::Parse {
                        line,
                        msg: format!("bad weight entry `{s}`"),
                    })
                })
                .collect();
            Ok(MonomialOrder::weight(WeightVector::new(ws?)?))
        }
        other => Err(Error::Parse {
            line,
            msg: format!("unknown order {:?}", other),
        }),
    }
}

fn uses_t(s: &str) -> bool {
    let bytes = s.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        if b == b't' {
            let prev_alnum = i > 0 && (bytes[i - 1].is_ascii_alphanumeric());
            let next_alnum = i + 1 < bytes.len() && bytes[i + 1].is_ascii_alphanumeric();
            if !prev_alnum && !next_alnum {
                return true;
            }
        }
    }
    false
}

/// Parse a single polynomial; when `family` holds the parameter t maps to
/// variable index nx.
pub fn parse_poly_line(
    s: &str,
    nvars: usize,
    nx: usize,
    family: bool,
    field: FieldSpec,
    line: usize,
) -> Result<Poly> {
    let mut p = PolyParser {
        chars: s.chars().peekable(),
        nvars,
        nx,
        family,
        field,
        line,
    };
    let poly = p.parse_sum()?;
    p.skip_ws();
    if p.chars.peek().is_some() {
        return Err(p.err(&format!(
            "unexpected trailing input `{}`",
            p.chars.clone().collect::<String>()
        )));
    }
    Ok(poly)
}

struct PolyParser<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    nvars: usize,
    nx: usize,
    family: bool,
    field: FieldSpec,
    line: usize,
}

const MAX_EXP: u32 = 1 << 20;

impl<'a> PolyParser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            line: self.line,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while matches!(self.chars.peek(), Some(c) if c.is_whitespace()) {
            self.chars.next();
        }
    }

    fn parse_sum(&mut self) -> Result<Poly> {
        let mut acc = Poly::zero(self.nvars, self.field);
        let mut sign = 1i64;
        self.skip_ws();
        if let Some('-') = self.chars.peek() {
            self.chars.next();
            sign = -1;
        } else if let Some('+') = self.chars.peek() {
            self.chars.next();
        }
        loop {
            let term = self.parse_term(sign)?;
            acc = acc.add(&term);
            self.skip_ws();
            match self.chars.peek() {
                Some('+') => {
                    self.chars.next();
                    sign = 1;
                }
                Some('-') => {
                    self.chars.next();
                    sign = -1;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn parse_term(&mut self, sign: i64) -> Result<Poly> {
        self.skip_ws();
        let mut coeff = self.field.from_i64(sign);
        let mut exps = vec![0u32; self.nvars];
        let mut saw_factor = false;
        loop {
            self.skip_ws();
            match self.chars.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let num = self.parse_integer()?;
                    let den = if let Some('/') = self.chars.peek() {
                        self.chars.next();
                        self.parse_integer()?
                    } else {
                        1
                    };
                    coeff = coeff.mul(&self.field.from_ratio(num, den)?);
                    saw_factor = true;
                }
                Some('x') => {
                    self.chars.next();
                    let idx = self.parse_usize()? as usize;
                    if idx >= self.nx {
                        return Err(self.err(&format!(
                            "variable x{idx} outside the declared ring (x0..x{})",
                            self.nx - 1
                        )));
                    }
                    let e = self.parse_power()?;
                    exps[idx] = exps[idx]
                        .checked_add(e)
                        .filter(|&v| v <= MAX_EXP)
                        .ok_or_else(|| self.err("exponent too large"))?;
                    saw_factor = true;
                }
                Some('t') => {
                    self.chars.next();
                    if !self.family {
                        return Err(self.err("parameter t is not allowed here"));
                    }
                    let e = self.parse_power()?;
                    let i = self.nvars - 1;
                    exps[i] = exps[i]
                        .checked_add(e)
                        .filter(|&v| v <= MAX_EXP)
                        .ok_or_else(|| self.err("exponent too large"))?;
                    saw_factor = true;
                }
                Some('*') => {
                    self.chars.next();
                }
                _ => break,
            }
        }
        if !saw_factor {
            return Err(self.err("empty term"));
        }
        Ok(Poly::monomial(self.nvars, coeff, Monomial::from_exps(exps)))
    }

    fn parse_power(&mut self) -> Result<u32> {
        self.skip_ws();
        if let Some('^') = self.chars.peek() {
            self.chars.next();
            let e = self.parse_usize()?;
            if e > MAX_EXP {
                return Err(self.err("exponent too large"));
            }
            Ok(e)
        } else {
            Ok(1)
        }
    }

    fn parse_usize(&mut self) -> Result<u32> {
        self.skip_ws();
        let mut s = String::new();
        while matches!(self.chars.peek(), Some(c) if c.is_ascii_digit()) {
            s.push(self.chars.next().unwrap());
        }
        s.parse().map_err(|_| self.err("expected a number"))
    }

    fn parse_integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let mut s = String::new();
        while matches!(self.chars.peek(), Some(c) if c.is_ascii_digit()) {
            s.push(self.chars.next().unwrap());
        }
        s.parse().map_err(|_| self.err("coefficient too large"))
    }
}
