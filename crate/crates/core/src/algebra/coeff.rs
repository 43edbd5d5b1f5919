use std::fmt::Debug;

use num_traits::{One, Zero};

use super::rational::BigRat;

/// Coefficient ring of a sparse polynomial: exact, commutative, an integral domain,
/// and a module over the rationals.
pub trait Coeff: Clone + PartialEq + Debug + Send + Sync {
    fn zero_elem() -> Self;
    fn one_elem() -> Self;
    fn is_zero_elem(&self) -> bool;
    fn from_rat(q: BigRat) -> Self;
    /// The value as a rational, if it is a constant.
    fn as_rat(&self) -> Option<BigRat>;
    fn add_assign_ref(&mut self, other: &Self);
    fn sub_assign_ref(&mut self, other: &Self);
    fn mul_ref(&self, other: &Self) -> Self;
    fn scale(&self, q: &BigRat) -> Self;
    fn neg(&self) -> Self;

    fn is_one_elem(&self) -> bool {
        self.as_rat().is_some_and(|q| One::is_one(&q))
    }
}

impl Coeff for BigRat {
    fn zero_elem() -> Self {
        Zero::zero()
    }

    fn one_elem() -> Self {
        One::one()
    }

    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(self)
    }

    fn from_rat(q: BigRat) -> Self {
        q
    }

    fn as_rat(&self) -> Option<BigRat> {
        Some(self.clone())
    }

    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }

    fn sub_assign_ref(&mut self, other: &Self) {
        *self -= other;
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn scale(&self, q: &BigRat) -> Self {
        self * q
    }

    fn neg(&self) -> Self {
        -self
    }

    fn is_one_elem(&self) -> bool {
        One::is_one(self)
    }
}
