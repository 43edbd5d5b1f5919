//! Canonical text form of polynomials, shared by cache files and reports.
//!
//! A polynomial is written as its terms in descending degrevlex order joined by
//! `" + "`. Each term is `coeff * X{r}{c}^e * ...`; rational coefficients are bare
//! (`-3/2`), parameter-polynomial coefficients are parenthesized. The zero
//! polynomial is `0`.

use super::coeff::Coeff;
use super::monomial::XMonomial;
use super::param::{ParamExponents, ParamPoly};
use super::poly::Poly;
use super::rational::{format_rat, parse_rat, BigRat};
use super::symbols::{ParamSymbol, VarIndex, NUM_PARAMS, NUM_VARS};
use crate::error::ParseError;

/// Coefficient types with a canonical textual form.
pub trait CoeffText: Coeff {
    fn write_coeff(&self) -> String;
    fn parse_coeff(s: &str) -> Result<Self, ParseError>;
}

impl CoeffText for BigRat {
    fn write_coeff(&self) -> String {
        format_rat(self)
    }

    fn parse_coeff(s: &str) -> Result<Self, ParseError> {
        parse_rat(s)
    }
}

impl CoeffText for ParamPoly {
    fn write_coeff(&self) -> String {
        format!("({self})")
    }

    fn parse_coeff(s: &str) -> Result<Self, ParseError> {
        match s.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
            Some(inner) => parse_param_poly(inner),
            // a bare rational is accepted on input
            None => parse_rat(s).map(ParamPoly::constant),
        }
    }
}

pub fn format_poly<C: CoeffText>(p: &Poly<C>) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (m, c)) in p.terms().iter().enumerate() {
        if k > 0 {
            out.push_str(" + ");
        }
        out.push_str(&c.write_coeff());
        for (v, e) in m.factors() {
            out.push_str(" * ");
            out.push_str(&v.to_string());
            if e > 1 {
                out.push('^');
                out.push_str(&e.to_string());
            }
        }
    }
    out
}

/// Split on `sep` at parenthesis depth zero.
fn split_top_level<'a>(s: &'a str, sep: &str) -> Result<Vec<&'a str>, ParseError> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let bytes = s.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        match bytes[i] {
            b'(' => depth += 1,
            b')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(ParseError::Unbalanced(s.to_string()));
                }
            }
            _ if depth == 0 && s[i..].starts_with(sep) => {
                parts.push(&s[start..i]);
                i += sep.len();
                start = i;
                continue;
            }
            _ => {}
        }
        i += 1;
    }
    if depth != 0 {
        return Err(ParseError::Unbalanced(s.to_string()));
    }
    parts.push(&s[start..]);
    Ok(parts)
}

fn parse_power(factor: &str) -> Result<(&str, u8), ParseError> {
    match factor.split_once('^') {
        None => Ok((factor, 1)),
        Some((base, e)) => {
            let e: u8 = e.parse().map_err(|_| ParseError::BadTerm(factor.to_string()))?;
            Ok((base, e))
        }
    }
}

pub fn parse_poly<C: CoeffText>(s: &str) -> Result<Poly<C>, ParseError> {
    let s = s.trim();
    if s == "0" {
        return Ok(Poly::zero());
    }
    let mut terms = Vec::new();
    for term in split_top_level(s, " + ")? {
        let factors = split_top_level(term.trim(), " * ")?;
        let (coeff, vars) = factors.split_first().ok_or_else(|| ParseError::BadTerm(term.to_string()))?;
        let c = C::parse_coeff(coeff.trim())?;
        let mut exps = [0u8; NUM_VARS];
        for f in vars {
            let (base, e) = parse_power(f.trim())?;
            let v: VarIndex = base.parse()?;
            exps[v.linear()] += e;
        }
        terms.push((XMonomial::from_exponents(exps), c));
    }
    Ok(Poly::from_terms(terms))
}

pub fn parse_param_poly(s: &str) -> Result<ParamPoly, ParseError> {
    let s = s.trim();
    if s == "0" {
        return Ok(ParamPoly::zero());
    }
    // normalize the binary minus so every term is separated by " + "
    let (neg_first, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let body = body.replace(" - ", " + -");
    let mut terms = Vec::new();
    for (k, term) in body.split(" + ").enumerate() {
        let mut term = term.trim().to_string();
        if k == 0 && neg_first {
            term.insert(0, '-');
        }
        let mut pieces = term.split('*');
        let coeff = pieces.next().ok_or_else(|| ParseError::BadTerm(term.clone()))?;
        let c = parse_rat(coeff)?;
        let mut e: ParamExponents = [0; NUM_PARAMS];
        for f in pieces {
            let (base, k) = parse_power(f)?;
            let sym: ParamSymbol = base.parse()?;
            e[sym.index()] += k;
        }
        terms.push((e, c));
    }
    Ok(ParamPoly::from_terms(terms))
}
