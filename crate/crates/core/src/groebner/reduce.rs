use std::cmp::Ordering;

use num_traits::Inv;

use super::basis::{Ascending, GroebnerBasis};
use crate::algebra::{BigRat, Coeff, MonomialOrder, Poly, XMonomial};

/// Result of dividing `f` by a basis: `f = sum(quotients[i] * basis[i]) + remainder`.
#[derive(Clone, Debug, PartialEq)]
pub struct ReductionTrace<C: Coeff> {
    pub quotients: Vec<Poly<C>>,
    pub remainder: Poly<C>,
}

/// `p - c * t * g` for ascending term lists. Terms that cancel are dropped.
pub(crate) fn sub_scaled_shifted<C: Coeff>(
    p: &[(XMonomial, C)],
    g: &[(XMonomial, BigRat)],
    t: &XMonomial,
    c: &C,
    ord: MonomialOrder,
) -> Ascending<C> {
    let mut out = Vec::with_capacity(p.len() + g.len());
    let (mut i, mut j) = (0, 0);
    let next_g = |j: usize| -> (XMonomial, C) { (g[j].0.mul(t), c.scale(&g[j].1).neg()) };
    let mut pending: Option<(XMonomial, C)> = if g.is_empty() { None } else { Some(next_g(0)) };
    while i < p.len() {
        let Some((gm, gc)) = pending.as_ref() else { break };
        match ord.cmp(&p[i].0, gm) {
            Ordering::Less => {
                out.push(p[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                out.push(pending.take().unwrap());
                j += 1;
                pending = (j < g.len()).then(|| next_g(j));
            }
            Ordering::Equal => {
                let mut s = p[i].1.clone();
                s.add_assign_ref(gc);
                if !s.is_zero_elem() {
                    out.push((p[i].0, s));
                }
                i += 1;
                j += 1;
                pending = (j < g.len()).then(|| next_g(j));
            }
        }
    }
    out.extend_from_slice(&p[i..]);
    if let Some(t) = pending {
        out.push(t);
        j += 1;
        while j < g.len() {
            out.push(next_g(j));
            j += 1;
        }
    }
    out
}

/// Fully reduce an ascending term list by the given divisors. Returns the remainder
/// (ascending). `record` receives `(divisor index, multiplier monomial, coefficient)`
/// for every reduction step.
pub(crate) fn reduce_terms<C: Coeff>(
    mut p: Ascending<C>,
    divisors: &[&Ascending<BigRat>],
    ord: MonomialOrder,
    mut record: impl FnMut(usize, XMonomial, &C),
) -> Ascending<C> {
    let leads: Vec<(XMonomial, BigRat)> = divisors
        .iter()
        .map(|d| {
            let (m, c) = d.last().expect("divisor must be nonzero");
            (*m, c.clone().inv())
        })
        .collect();
    // remainder terms, collected in descending order
    let mut rem: Vec<(XMonomial, C)> = Vec::new();
    while let Some((m, c)) = p.last() {
        let hit = leads.iter().position(|(l, _)| l.divides(m));
        match hit {
            Some(k) => {
                let t = leads[k].0.quotient_of(m).unwrap();
                let coeff = c.scale(&leads[k].1);
                record(k, t, &coeff);
                let n = p.len();
                // the leading terms cancel exactly; drop both and merge the rest
                p = sub_scaled_shifted(&p[..n - 1], &divisors[k][..divisors[k].len() - 1], &t, &coeff, ord);
            }
            None => rem.push(p.pop().unwrap()),
        }
    }
    rem.reverse();
    rem
}

/// Normal form of `f` modulo `gb` with the full division trace.
///
/// `f` may have parameter-polynomial coefficients; the basis leading coefficients are
/// rational, so every division step is exact.
pub fn normal_form<C: Coeff>(f: &Poly<C>, gb: &GroebnerBasis) -> ReductionTrace<C> {
    let ord = gb.order();
    let divisors: Vec<&Ascending<BigRat>> = gb.sorted.iter().collect();
    let mut qterms: Vec<Vec<(XMonomial, C)>> = vec![Vec::new(); divisors.len()];
    let p = super::basis::to_ascending(f.terms(), ord);
    let rem = reduce_terms(p, &divisors, ord, |k, t, c| qterms[k].push((t, c.clone())));
    ReductionTrace {
        quotients: qterms.into_iter().map(Poly::from_terms).collect(),
        remainder: Poly::from_terms(rem),
    }
}

/// Remainder only.
pub fn remainder<C: Coeff>(f: &Poly<C>, gb: &GroebnerBasis) -> Poly<C> {
    let ord = gb.order();
    let divisors: Vec<&Ascending<BigRat>> = gb.sorted.iter().collect();
    let p = super::basis::to_ascending(f.terms(), ord);
    Poly::from_terms(reduce_terms(p, &divisors, ord, |_, _, _| {}))
}

/// Ideal membership: the normal form modulo a Gröbner basis vanishes.
pub fn is_member<C: Coeff>(f: &Poly<C>, gb: &GroebnerBasis) -> bool {
    remainder(f, gb).is_zero()
}

impl<C: Coeff> ReductionTrace<C> {
    /// `f - sum(q_i * g_i) - r`, which is zero for a correct trace.
    pub fn defect(&self, f: &Poly<C>, gb: &GroebnerBasis) -> Poly<C> {
        let mut acc = f.sub(&self.remainder);
        for (q, g) in self.quotients.iter().zip(gb.elements()) {
            let g = g.map_coeffs(|c| C::from_rat(c.clone()));
            acc = acc.sub(&q.mul(&g));
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_poly, MPoly, QPoly};
    use crate::groebner::buchberger;
    use proptest::prelude::*;

    fn q(s: &str) -> QPoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn ordered_division_example() {
        // x^2 y + x y^2 + y^2 by (xy - 1, y^2 - 1) under lex: remainder x + y + 1
        let divs = vec![q("1 * X11 * X12 + -1"), q("1 * X12^2 + -1")];
        let gb = GroebnerBasis::from_elements(divs, MonomialOrder::Lex, false).unwrap();
        let f = q("1 * X11^2 * X12 + 1 * X11 * X12^2 + 1 * X12^2");
        let tr = normal_form(&f, &gb);
        assert_eq!(tr.remainder, q("1 * X11 + 1 * X12 + 1"));
        assert_eq!(tr.quotients, vec![q("1 * X11 + 1 * X12"), q("1")]);
        assert!(tr.defect(&f, &gb).is_zero());
    }

    #[test]
    fn membership_and_trivial_cases() {
        let gb = buchberger(&[q("1 * X11^2 + -1 * X12"), q("1 * X11 * X12 + -1")], MonomialOrder::Degrevlex).unwrap();
        assert!(normal_form(&QPoly::zero(), &gb).remainder.is_zero());
        assert!(is_member(&q("1 * X11^3 + -1"), &gb));
        assert!(!is_member(&q("1 * X11"), &gb));
        let x = q("1 * X13");
        assert_eq!(remainder(&x, &gb), x);
    }

    #[test]
    fn parametric_coefficients_reduce_exactly() {
        let gb = buchberger(&[q("1 * X11 * X22 + -1")], MonomialOrder::Degrevlex).unwrap();
        let f: MPoly = parse_poly("(1*d11) * X11 * X22 + (1*d12) * X13").unwrap();
        let tr = normal_form(&f, &gb);
        assert_eq!(tr.remainder, parse_poly::<crate::algebra::ParamPoly>("(1*d12) * X13 + (1*d11)").unwrap());
        assert!(tr.defect(&f, &gb).is_zero());
    }

    fn small_poly() -> impl Strategy<Value = QPoly> {
        let term = (0u8..3, 0u8..3, 0u8..2, -5i64..=5).prop_map(|(a, b, c, k)| {
            let mut e = [0u8; crate::algebra::NUM_VARS];
            e[0] = a;
            e[1] = b;
            e[6] = c;
            (XMonomial::from_exponents(e), crate::algebra::rat(k))
        });
        proptest::collection::vec(term, 0..6).prop_map(QPoly::from_terms)
    }

    proptest! {
        #[test]
        fn division_identity(f in small_poly()) {
            let gb = buchberger(&[q("1 * X11^2 + -1 * X12"), q("1 * X11 * X21 + -1"), q("1 * X12 * X21 + 2 * X11")], MonomialOrder::Degrevlex).unwrap();
            let tr = normal_form(&f, &gb);
            prop_assert!(tr.defect(&f, &gb).is_zero());
            prop_assert!(tr.remainder.terms().iter().all(|(m, _)| gb.leading_monomials().all(|l| !l.divides(m))));
            prop_assert_eq!(remainder(&tr.remainder, &gb), tr.remainder.clone());
        }
    }
}
