use std::cmp::Ordering;

use crate::algebra::{BigRat, MonomialOrder, QPoly, XMonomial};
use crate::error::GroebnerError;

/// Term list sorted ascending under a monomial order, so the leading term is last.
pub(crate) type Ascending<C> = Vec<(XMonomial, C)>;

pub(crate) fn to_ascending<C: Clone>(terms: &[(XMonomial, C)], ord: MonomialOrder) -> Ascending<C> {
    let mut v = terms.to_vec();
    v.sort_by(|a, b| ord.cmp(&a.0, &b.0));
    v
}

/// A Gröbner basis together with the order that certifies it.
///
/// Elements have rational coefficients only. When `reduced` is set, every element
/// is monic and no term of any element is divisible by another element's leading
/// monomial, which makes the basis unique for its ideal and order.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    elements: Vec<QPoly>,
    order: MonomialOrder,
    reduced: bool,
    pub(crate) sorted: Vec<Ascending<BigRat>>,
    pub(crate) leads: Vec<(XMonomial, BigRat)>,
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.reduced == other.reduced && self.elements == other.elements
    }
}

impl GroebnerBasis {
    /// Wrap a list of polynomials. No Gröbner property is checked here; see
    /// [`crate::groebner::verify_s_pairs`].
    pub fn from_elements(
        elements: Vec<QPoly>,
        order: MonomialOrder,
        reduced: bool,
    ) -> Result<Self, GroebnerError> {
        let elements: Vec<QPoly> = elements.into_iter().filter(|p| !p.is_zero()).collect();
        if elements.is_empty() {
            return Err(GroebnerError::EmptyInput);
        }
        let sorted: Vec<_> = elements.iter().map(|p| to_ascending(p.terms(), order)).collect();
        let leads = sorted.iter().map(|t| t.last().cloned().unwrap()).collect();
        Ok(Self { elements, order, reduced, sorted, leads })
    }

    pub fn elements(&self) -> &[QPoly] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &XMonomial> {
        self.leads.iter().map(|(m, _)| m)
    }

    /// Maximum total degree over all elements.
    pub fn max_degree(&self) -> u32 {
        self.elements.iter().filter_map(|p| p.degree()).max().unwrap_or(0)
    }

    /// Checks the structural conditions of a reduced basis (not the Gröbner property).
    pub fn check_reduced_shape(&self) -> bool {
        self.sorted.iter().enumerate().all(|(i, terms)| {
            num_traits::One::is_one(&self.leads[i].1)
                && terms.iter().all(|(m, _)| {
                    self.leads.iter().enumerate().all(|(j, (l, _))| j == i || !l.divides(m))
                })
        })
    }
}

/// Sort key for presenting a basis: ascending by leading monomial.
pub(crate) fn lead_cmp(a: &Ascending<BigRat>, b: &Ascending<BigRat>, ord: MonomialOrder) -> Ordering {
    ord.cmp(&a.last().unwrap().0, &b.last().unwrap().0)
}
