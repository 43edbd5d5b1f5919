//! Polynomials in the 47 parameter symbols with rational coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::coeff::Coeff;
use super::rational::{format_rat, BigRat};
use super::symbols::{ParamSymbol, NUM_PARAMS};

/// Exponent vector over the parameter symbols in the fixed order.
pub type ParamExponents = [u8; NUM_PARAMS];

/// Sparse polynomial in the parameters. Zero coefficients are never stored, so
/// derived equality is structural equality.
#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct ParamPoly {
    terms: BTreeMap<ParamExponents, BigRat>,
}

impl ParamPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant(q: BigRat) -> Self {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert([0; NUM_PARAMS], q);
        }
        Self { terms }
    }

    pub fn symbol(s: ParamSymbol) -> Self {
        let mut e = [0; NUM_PARAMS];
        e[s.index()] = 1;
        Self::from_terms([(e, BigRat::one())])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (ParamExponents, BigRat)>) -> Self {
        let mut p = Self::default();
        for (e, c) in terms {
            p.add_term(e, &c);
        }
        p
    }

    /// Product of symbols (with repetition) times `q`.
    pub fn monomial(q: BigRat, symbols: &[ParamSymbol]) -> Self {
        let mut e = [0u8; NUM_PARAMS];
        for s in symbols {
            e[s.index()] += 1;
        }
        Self::from_terms([(e, q)])
    }

    fn add_term(&mut self, e: ParamExponents, c: &BigRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending lexicographic order (`d11` most significant).
    pub fn terms(&self) -> impl Iterator<Item = (&ParamExponents, &BigRat)> {
        self.terms.iter().rev()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().map(|&x| x as u32).sum()).max().unwrap_or(0)
    }

    pub fn evaluate(&self, values: &[BigRat; NUM_PARAMS]) -> BigRat {
        let mut acc = BigRat::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    t *= &values[i];
                }
            }
            acc += t;
        }
        acc
    }

    /// Substitute a rational for a single symbol.
    pub fn substitute(&self, s: ParamSymbol, value: &BigRat) -> Self {
        let mut out = Self::default();
        for (e, c) in &self.terms {
            let mut e2 = *e;
            let k = std::mem::take(&mut e2[s.index()]);
            let mut c2 = c.clone();
            for _ in 0..k {
                c2 *= value;
            }
            out.add_term(e2, &c2);
        }
        out
    }

    /// If `self = q * other` for a nonzero rational `q`, return `q`.
    pub fn ratio_to(&self, other: &ParamPoly) -> Option<BigRat> {
        if self.len() != other.len() || other.is_empty() {
            return None;
        }
        let mut q: Option<BigRat> = None;
        for ((e1, c1), (e2, c2)) in self.terms.iter().zip(other.terms.iter()) {
            if e1 != e2 {
                return None;
            }
            let r = c1 / c2;
            match &q {
                None => q = Some(r),
                Some(q0) if *q0 == r => {}
                Some(_) => return None,
            }
        }
        q
    }
}

impl Coeff for ParamPoly {
    fn zero_elem() -> Self {
        Self::default()
    }

    fn one_elem() -> Self {
        Self::constant(BigRat::one())
    }

    fn is_zero_elem(&self) -> bool {
        self.terms.is_empty()
    }

    fn from_rat(q: BigRat) -> Self {
        Self::constant(q)
    }

    fn as_rat(&self) -> Option<BigRat> {
        match self.terms.len() {
            0 => Some(BigRat::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.iter().all(|&k| k == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    fn add_assign_ref(&mut self, other: &Self) {
        for (e, c) in &other.terms {
            self.add_term(*e, c);
        }
    }

    fn sub_assign_ref(&mut self, other: &Self) {
        for (e, c) in &other.terms {
            self.add_term(*e, &-c);
        }
    }

    fn mul_ref(&self, other: &Self) -> Self {
        let mut out = Self::default();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let mut e = *e1;
                for (a, b) in e.iter_mut().zip(e2.iter()) {
                    *a = a.checked_add(*b).expect("parameter exponent overflow");
                }
                out.add_term(e, &(c1 * c2));
            }
        }
        out
    }

    fn scale(&self, q: &BigRat) -> Self {
        if q.is_zero() {
            return Self::default();
        }
        Self { terms: self.terms.iter().map(|(e, c)| (*e, c * q)).collect() }
    }

    fn neg(&self) -> Self {
        Self { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

fn write_param_monomial(f: &mut fmt::Formatter<'_>, e: &ParamExponents) -> fmt::Result {
    let mut first = true;
    for (i, &k) in e.iter().enumerate() {
        if k == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        let s = ParamSymbol::from_index(i);
        if k == 1 {
            write!(f, "{s}")?;
        } else {
            write!(f, "{s}^{k}")?;
        }
    }
    Ok(())
}

/// Canonical form: `c * sym * sym^k + ...` with terms in descending lex order;
/// unit coefficients are written out so the text is uniform and easy to parse.
impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms().enumerate() {
            if k > 0 {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            let c_abs = c.abs();
            let is_const = e.iter().all(|&x| x == 0);
            if is_const {
                f.write_str(&format_rat(&c_abs))?;
            } else {
                write!(f, "{}*", format_rat(&c_abs))?;
                write_param_monomial(f, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ParamPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    fn d(r: usize, c: usize) -> ParamPoly {
        ParamPoly::symbol(ParamSymbol::d(r, c))
    }

    #[test]
    fn arithmetic_prunes_zeros() {
        let a = d(1, 1).mul_ref(&d(3, 2));
        let b = d(1, 2).mul_ref(&d(3, 1));
        let mut m = a.clone();
        m.sub_assign_ref(&b);
        assert_eq!(m.len(), 2);
        m.add_assign_ref(&b);
        assert_eq!(m, a);
        m.sub_assign_ref(&a);
        assert!(m.is_zero());
        assert_eq!(a.scale(&rat(0)), ParamPoly::zero());
    }

    #[test]
    fn ratio_detection() {
        let mut minor = d(1, 1).mul_ref(&d(3, 2));
        minor.sub_assign_ref(&d(1, 2).mul_ref(&d(3, 1)));
        let scaled = minor.scale(&rat(-3));
        assert_eq!(scaled.ratio_to(&minor), Some(rat(-3)));
        let mut other = minor.clone();
        other.add_assign_ref(&d(1, 1));
        assert_eq!(other.ratio_to(&minor), None);
        assert_eq!(ParamPoly::zero().ratio_to(&minor), None);
    }

    #[test]
    fn display_is_sorted() {
        let mut p = d(1, 2).mul_ref(&d(3, 1)).neg();
        p.add_assign_ref(&d(1, 1).mul_ref(&d(3, 2)));
        assert_eq!(p.to_string(), "1*d11*d32 - 1*d12*d31");
        let q = ParamPoly::constant(rat(-2));
        assert_eq!(q.to_string(), "-2");
        assert_eq!(q.as_rat(), Some(rat(-2)));
        assert_eq!(p.as_rat(), None);
    }

    #[test]
    fn substitution_and_evaluation() {
        let p = ParamPoly::symbol(ParamSymbol::D2).mul_ref(&d(1, 1));
        assert!(p.substitute(ParamSymbol::D2, &rat(0)).is_zero());
        let mut vals: [BigRat; NUM_PARAMS] = std::array::from_fn(|_| rat(1));
        vals[ParamSymbol::D2.index()] = rat(5);
        vals[ParamSymbol::d(1, 1).index()] = rat(-2);
        assert_eq!(p.evaluate(&vals), rat(-10));
    }
}
