//! Normal forms, S-polynomials, Buchberger's algorithm and ideal membership.

mod basis;
mod buchberger;
pub mod cache;
mod reduce;

pub use basis::GroebnerBasis;
pub use buchberger::{
    buchberger, buchberger_with, failing_s_pairs, s_polynomial, verify_s_pairs, Buchberger,
    BuchbergerOptions, BuchbergerStats, Progress,
};
pub use reduce::{is_member, normal_form, remainder, ReductionTrace};
