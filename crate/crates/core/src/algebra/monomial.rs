//! Monomials in the 36 main variables and the monomial orders on them.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::symbols::{VarIndex, NUM_VARS};

/// Exponent vector over `X11..X66` in the fixed variable order.
///
/// Carries its total degree and a support bitmask so that divisibility tests
/// can reject most candidates without touching the exponents.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct XMonomial {
    exps: [u8; NUM_VARS],
    degree: u16,
    support: u64,
}

impl Default for XMonomial {
    fn default() -> Self {
        Self::one()
    }
}

impl XMonomial {
    pub fn one() -> Self {
        Self { exps: [0; NUM_VARS], degree: 0, support: 0 }
    }

    pub fn from_exponents(exps: [u8; NUM_VARS]) -> Self {
        let mut degree = 0u16;
        let mut support = 0u64;
        for (i, &e) in exps.iter().enumerate() {
            degree += e as u16;
            if e > 0 {
                support |= 1 << i;
            }
        }
        Self { exps, degree, support }
    }

    pub fn var(v: VarIndex) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: VarIndex, e: u8) -> Self {
        let mut exps = [0; NUM_VARS];
        exps[v.linear()] = e;
        Self::from_exponents(exps)
    }

    /// Product of the listed variables (with repetition).
    pub fn from_vars(vars: &[VarIndex]) -> Self {
        let mut exps = [0u8; NUM_VARS];
        for v in vars {
            exps[v.linear()] += 1;
        }
        Self::from_exponents(exps)
    }

    pub fn exponents(&self) -> &[u8; NUM_VARS] {
        &self.exps
    }

    pub fn exponent(&self, v: VarIndex) -> u8 {
        self.exps[v.linear()]
    }

    pub fn degree(&self) -> u32 {
        self.degree as u32
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut exps = self.exps;
        for (e, &o) in exps.iter_mut().zip(other.exps.iter()) {
            *e = e.checked_add(o).expect("exponent overflow");
        }
        Self { exps, degree: self.degree + other.degree, support: self.support | other.support }
    }

    /// Whether `self` divides `other`.
    pub fn divides(&self, other: &Self) -> bool {
        self.support & !other.support == 0
            && self.degree <= other.degree
            && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Self) -> Option<Self> {
        if !self.divides(other) {
            return None;
        }
        let mut exps = other.exps;
        for (e, &s) in exps.iter_mut().zip(self.exps.iter()) {
            *e -= s;
        }
        Some(Self::from_exponents(exps))
    }

    pub fn lcm(&self, other: &Self) -> Self {
        let mut exps = self.exps;
        for (e, &o) in exps.iter_mut().zip(other.exps.iter()) {
            *e = (*e).max(o);
        }
        Self::from_exponents(exps)
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.support & other.support == 0
    }

    /// Variables with nonzero exponent, in the fixed order.
    pub fn factors(&self) -> impl Iterator<Item = (VarIndex, u8)> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (VarIndex::from_linear(i), e))
    }
}

/// Degree-reverse-lexicographic comparison with `X11 > X12 > ... > X66`.
fn degrevlex(a: &XMonomial, b: &XMonomial) -> Ordering {
    match a.degree.cmp(&b.degree) {
        Ordering::Equal => {}
        o => return o,
    }
    for i in (0..NUM_VARS).rev() {
        if a.exps[i] != b.exps[i] {
            // larger exponent in the last differing variable means smaller monomial
            return b.exps[i].cmp(&a.exps[i]);
        }
    }
    Ordering::Equal
}

fn lex(a: &XMonomial, b: &XMonomial) -> Ordering {
    a.exps.cmp(&b.exps)
}

/// The storage order of polynomials is degrevlex; `Ord` on monomials is that order.
impl Ord for XMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        degrevlex(self, other)
    }
}

impl PartialOrd for XMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for XMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for XMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (v, e) in self.factors() {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Monomial order tag; the variable order is always the fixed `X11..X66` listing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    #[default]
    Degrevlex,
    Lex,
}

impl MonomialOrder {
    pub fn cmp(self, a: &XMonomial, b: &XMonomial) -> Ordering {
        match self {
            MonomialOrder::Degrevlex => degrevlex(a, b),
            MonomialOrder::Lex => lex(a, b),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MonomialOrder::Degrevlex => "degrevlex",
            MonomialOrder::Lex => "lex",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "degrevlex" => Some(MonomialOrder::Degrevlex),
            "lex" => Some(MonomialOrder::Lex),
            _ => None,
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
