//! Sparse polynomials in `X11..X66` over a coefficient ring.

use std::cmp::Ordering;
use std::fmt;

use super::coeff::Coeff;
use super::monomial::{MonomialOrder, XMonomial};
use super::param::ParamPoly;
use super::rational::BigRat;
use super::symbols::{VarIndex, NUM_PARAMS};
use crate::error::AlgebraError;

/// Sparse polynomial: terms sorted strictly descending in degrevlex, no zero
/// coefficients. Two polynomials are equal iff their term lists are.
#[derive(Clone, PartialEq)]
pub struct Poly<C> {
    terms: Vec<(XMonomial, C)>,
}

/// Polynomial with parameter-polynomial coefficients.
pub type MPoly = Poly<ParamPoly>;

/// Polynomial with rational coefficients (generators and Gröbner bases).
pub type QPoly = Poly<BigRat>;

impl<C: Coeff> Default for Poly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> Poly<C> {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn constant(c: C) -> Self {
        Self::term(XMonomial::one(), c)
    }

    pub fn one() -> Self {
        Self::constant(C::one_elem())
    }

    pub fn term(m: XMonomial, c: C) -> Self {
        if c.is_zero_elem() {
            Self::zero()
        } else {
            Self { terms: vec![(m, c)] }
        }
    }

    pub fn var(v: VarIndex) -> Self {
        Self::term(XMonomial::var(v), C::one_elem())
    }

    /// Build from arbitrary terms; like terms are merged and zeros dropped.
    pub fn from_terms(terms: impl IntoIterator<Item = (XMonomial, C)>) -> Self {
        let mut v: Vec<(XMonomial, C)> = terms.into_iter().collect();
        v.sort_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(XMonomial, C)> = Vec::with_capacity(v.len());
        for (m, c) in v {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => lc.add_assign_ref(&c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero_elem());
        Self { terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in storage (degrevlex descending) order.
    pub fn terms(&self) -> &[(XMonomial, C)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(XMonomial, C)> {
        self.terms
    }

    pub fn coefficient(&self, m: &XMonomial) -> Option<&C> {
        self.terms
            .binary_search_by(|(t, _)| m.cmp(t))
            .ok()
            .map(|i| &self.terms[i].1)
    }

    /// Maximum total X-degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, |c| c.clone())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, |c| c.neg())
    }

    fn combine(&self, other: &Self, map_other: impl Fn(&C) -> C) -> Self {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0, map_other(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let mut c = a[i].1.clone();
                    c.add_assign_ref(&map_other(&b[j].1));
                    if !c.is_zero_elem() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (*m, map_other(c))));
        Self { terms: out }
    }

    pub fn neg(&self) -> Self {
        Self { terms: self.terms.iter().map(|(m, c)| (*m, c.neg())).collect() }
    }

    pub fn scale(&self, q: &BigRat) -> Self {
        if num_traits::Zero::is_zero(q) {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(m, c)| (*m, c.scale(q))).collect() }
    }

    /// Multiply by a single term `c * m`.
    pub fn mul_term(&self, m: &XMonomial, c: &C) -> Self {
        if c.is_zero_elem() {
            return Self::zero();
        }
        // multiplication by a monomial preserves the order, and the coefficient
        // ring has no zero divisors
        Self { terms: self.terms.iter().map(|(t, d)| (t.mul(m), d.mul_ref(c))).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (small, large) =
            if self.len() <= other.len() { (self, other) } else { (other, self) };
        let mut acc = Self::zero();
        for (m, c) in &small.terms {
            acc = acc.add(&large.mul_term(m, c));
        }
        acc
    }

    pub fn leading_term(&self, ord: MonomialOrder) -> Result<(XMonomial, C), AlgebraError> {
        let t = match ord {
            MonomialOrder::Degrevlex => self.terms.first(),
            _ => self.terms.iter().max_by(|a, b| ord.cmp(&a.0, &b.0)),
        };
        t.cloned().ok_or(AlgebraError::ZeroPolynomial)
    }

    /// All nonzero terms sorted descending by `ord`.
    pub fn coefficient_rules(&self, ord: MonomialOrder) -> Vec<(XMonomial, C)> {
        let mut v = self.terms.clone();
        if ord != MonomialOrder::Degrevlex {
            v.sort_by(|a, b| ord.cmp(&b.0, &a.0));
        }
        v
    }

    /// True iff every stored monomial has total X-degree `d`.
    pub fn is_homogeneous(&self, d: u32) -> bool {
        self.terms.iter().all(|(m, _)| m.degree() == d)
    }

    /// Apply a coefficient map, dropping terms that become zero.
    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        Poly {
            terms: self
                .terms
                .iter()
                .filter_map(|(m, c)| {
                    let d = f(c);
                    (!d.is_zero_elem()).then_some((*m, d))
                })
                .collect(),
        }
    }

    /// Leading coefficient is one (degrevlex).
    pub fn is_monic(&self) -> bool {
        self.terms.first().is_some_and(|(_, c)| c.is_one_elem())
    }
}

impl QPoly {
    /// Divide by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.terms.first() {
            None => Self::zero(),
            Some((_, c)) => {
                let inv = num_traits::Inv::inv(c.clone());
                self.scale(&inv)
            }
        }
    }

    pub fn to_mpoly(&self) -> MPoly {
        self.map_coeffs(|c| ParamPoly::constant(c.clone()))
    }

    /// Evaluate at a 6x6 matrix of rationals.
    pub fn evaluate(&self, xvals: &[[BigRat; 6]; 6]) -> BigRat {
        let mut acc = BigRat::from_integer(0.into());
        for (m, c) in &self.terms {
            acc += c * eval_monomial(m, xvals);
        }
        acc
    }
}

impl MPoly {
    /// Convert to rational coefficients, if no parameter occurs.
    pub fn to_qpoly(&self) -> Option<QPoly> {
        let terms: Option<Vec<_>> =
            self.terms.iter().map(|(m, c)| c.as_rat().map(|q| (*m, q))).collect();
        terms.map(|terms| Poly { terms })
    }

    pub fn param(s: crate::algebra::ParamSymbol) -> Self {
        Self::constant(ParamPoly::symbol(s))
    }

    /// Exact substitution of all 36 variables and all 47 parameters.
    pub fn evaluate(&self, xvals: &[[BigRat; 6]; 6], pvals: &[BigRat; NUM_PARAMS]) -> BigRat {
        let mut acc = BigRat::from_integer(0.into());
        for (m, c) in &self.terms {
            acc += c.evaluate(pvals) * eval_monomial(m, xvals);
        }
        acc
    }

    /// Substitute a rational value for one parameter.
    pub fn substitute_param(&self, s: crate::algebra::ParamSymbol, value: &BigRat) -> Self {
        self.map_coeffs(|c| c.substitute(s, value))
    }
}

fn eval_monomial(m: &XMonomial, xvals: &[[BigRat; 6]; 6]) -> BigRat {
    let mut t = BigRat::from_integer(1.into());
    for (v, e) in m.factors() {
        for _ in 0..e {
            t *= &xvals[v.row() - 1][v.col() - 1];
        }
    }
    t
}

impl<C: super::text::CoeffText> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::algebra::text::format_poly(self))
    }
}

impl<C: Coeff> fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.terms.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;
    use crate::algebra::ParamSymbol;
    use proptest::prelude::*;

    fn x(r: usize, c: usize) -> QPoly {
        QPoly::var(VarIndex::at(r, c))
    }

    fn c(n: i64) -> QPoly {
        QPoly::constant(rat(n))
    }

    #[test]
    fn add_examples() {
        let p = x(1, 1).mul(&x(2, 2)).sub(&c(3));
        assert_eq!(QPoly::zero().add(&p), p);
        assert!(p.add(&p.neg()).is_zero());
        assert_eq!(x(1, 1).add(&x(1, 1)), x(1, 1).scale(&rat(2)));
    }

    #[test]
    fn mul_examples() {
        let p = x(1, 1).mul(&x(2, 2)).sub(&c(3));
        assert_eq!(QPoly::one().mul(&p), p);
        assert_eq!(
            x(1, 1).mul(&x(2, 2)).terms(),
            &[(XMonomial::from_vars(&[VarIndex::at(1, 1), VarIndex::at(2, 2)]), rat(1))]
        );
        // hand expansion: (X11 + X12)(X11 - X12) = X11^2 - X12^2
        let lhs = x(1, 1).add(&x(1, 2)).mul(&x(1, 1).sub(&x(1, 2)));
        let rhs = QPoly::from_terms([
            (XMonomial::var_pow(VarIndex::at(1, 1), 2), rat(1)),
            (XMonomial::var_pow(VarIndex::at(1, 2), 2), rat(-1)),
        ]);
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.degree(), Some(2));
    }

    #[test]
    fn leading_term_examples() {
        let p = x(1, 1).add(&c(1));
        assert_eq!(p.leading_term(MonomialOrder::Degrevlex).unwrap(), (XMonomial::var(VarIndex::at(1, 1)), rat(1)));
        // exhaustive comparison of the two quadratic monomials under degrevlex:
        // X11*X22 < X12*X21 because X22 is the last variable where they differ
        let det = x(1, 1).mul(&x(2, 2)).sub(&x(1, 2).mul(&x(2, 1))).sub(&c(1));
        let (m, k) = det.leading_term(MonomialOrder::Degrevlex).unwrap();
        assert_eq!(m, XMonomial::from_vars(&[VarIndex::at(1, 2), VarIndex::at(2, 1)]));
        assert_eq!(k, rat(-1));
        let (m, k) = det.leading_term(MonomialOrder::Lex).unwrap();
        assert_eq!(m, XMonomial::from_vars(&[VarIndex::at(1, 1), VarIndex::at(2, 2)]));
        assert_eq!(k, rat(1));
        assert_eq!(c(5).leading_term(MonomialOrder::Degrevlex).unwrap(), (XMonomial::one(), rat(5)));
        assert_eq!(QPoly::zero().leading_term(MonomialOrder::Degrevlex), Err(AlgebraError::ZeroPolynomial));
    }

    #[test]
    fn evaluate_examples() {
        let mut id: [[BigRat; 6]; 6] = std::array::from_fn(|_| std::array::from_fn(|_| rat(0)));
        for (i, row) in id.iter_mut().enumerate() {
            row[i] = rat(1);
        }
        let pvals: [BigRat; NUM_PARAMS] = std::array::from_fn(|i| rat(i as i64 + 2));
        assert_eq!(x(1, 1).to_mpoly().evaluate(&id, &pvals), rat(1));
        let mut m = id.clone();
        m[0][0] = rat(2);
        m[0][1] = rat(3);
        m[1][0] = rat(1);
        m[1][1] = rat(2);
        // 2x2 determinant 2*2 - 3*1
        let det = x(1, 1).mul(&x(2, 2)).sub(&x(1, 2).mul(&x(2, 1)));
        assert_eq!(det.evaluate(&m), rat(1));
        let p = MPoly::param(ParamSymbol::d(1, 1)).mul(&x(1, 2).to_mpoly());
        assert_eq!(p.evaluate(&m, &pvals), rat(2 * 3));
    }

    #[test]
    fn coefficient_rules_and_homogeneity() {
        assert!(QPoly::zero().coefficient_rules(MonomialOrder::Degrevlex).is_empty());
        let p = MPoly::param(ParamSymbol::d(1, 1)).mul(&x(1, 1).mul(&x(2, 3)).to_mpoly());
        let rules = p.coefficient_rules(MonomialOrder::Degrevlex);
        assert_eq!(rules.len(), 1);
        assert_eq!(rules[0].0, XMonomial::from_vars(&[VarIndex::at(1, 1), VarIndex::at(2, 3)]));
        assert_eq!(rules[0].1, ParamPoly::symbol(ParamSymbol::d(1, 1)));
        let det = x(1, 1).mul(&x(2, 2)).sub(&x(1, 2).mul(&x(2, 1)));
        assert!(det.is_homogeneous(2));
        assert!(!det.sub(&c(1)).is_homogeneous(2));
    }

    fn arb_qpoly() -> impl Strategy<Value = QPoly> {
        proptest::collection::vec(
            (proptest::collection::vec((0usize..6, 0u8..3), 0..3), -5i64..=5),
            0..5,
        )
        .prop_map(|terms| {
            QPoly::from_terms(terms.into_iter().map(|(vars, k)| {
                let mut exps = [0u8; 36];
                for (v, e) in vars {
                    exps[v * 7 % 36] += e;
                }
                (XMonomial::from_exponents(exps), rat(k))
            }))
        })
    }

    fn arb_matrix() -> impl Strategy<Value = [[BigRat; 6]; 6]> {
        proptest::collection::vec(-4i64..=4, 36).prop_map(|v| {
            std::array::from_fn(|i| std::array::from_fn(|j| rat(v[i * 6 + j])))
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_qpoly(), b in arb_qpoly(), c in arb_qpoly()) {
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            if !a.is_zero() && !b.is_zero() {
                prop_assert_eq!(a.mul(&b).degree().unwrap(), a.degree().unwrap() + b.degree().unwrap());
            }
        }

        #[test]
        fn evaluation_is_a_ring_homomorphism(a in arb_qpoly(), b in arb_qpoly(), m in arb_matrix()) {
            prop_assert_eq!(a.mul(&b).evaluate(&m), a.evaluate(&m) * b.evaluate(&m));
            prop_assert_eq!(a.add(&b).evaluate(&m), a.evaluate(&m) + b.evaluate(&m));
        }

        #[test]
        fn coefficient_rules_round_trip(a in arb_qpoly()) {
            for ord in [MonomialOrder::Degrevlex, MonomialOrder::Lex] {
                let rules = a.coefficient_rules(ord);
                prop_assert!(rules.windows(2).all(|w| ord.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
                prop_assert_eq!(QPoly::from_terms(rules), a.clone());
            }
        }
    }
}
