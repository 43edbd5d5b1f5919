//! Exact Gröbner bases for the ideal of `Sp(2g)` (g <= 3), relation polynomials
//! checked against it, and a supersingular prime census for elliptic curves.
//!
//! The runnable examples are the main entry point:
//!
//! ```text
//! examples/
//! ├── ideal_generators.rs      # quadrics cutting out Sp(2g)
//! ├── groebner_sp.rs           # reduced basis under degrevlex
//! ├── membership.rs            # normal forms, on-disk cache
//! ├── relation_identities.rs   # remainder coefficient tables
//! ├── nonmembership.rs         # evaluation at random symplectic points
//! ├── supersingular_census.rs  # single and pair censuses, CSV
//! └── json_report.rs           # the CLI layer in-process
//! ```
//!
//! ```bash
//! cargo run --release --example relation_identities
//! ```

pub mod algebra;
pub mod census;
pub mod cli;
pub mod error;
pub mod forge;
pub mod groebner;
pub mod symplectic;
