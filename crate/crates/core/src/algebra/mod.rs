//! Exact polynomial arithmetic in the 36 matrix variables over parameter polynomials.

mod coeff;
mod monomial;
mod param;
mod poly;
mod rational;
mod symbols;
pub mod text;

pub use coeff::Coeff;
pub use monomial::{MonomialOrder, XMonomial};
pub use param::{ParamExponents, ParamPoly};
pub use poly::{MPoly, Poly, QPoly};
pub use rational::{format_rat, parse_rat, rat, ratio, BigRat};
pub use symbols::{ParamFamily, ParamSymbol, VarIndex, NUM_PARAMS, NUM_VARS};
pub use text::{format_poly, parse_param_poly, parse_poly, CoeffText};
