//! Reduce the relation polynomials modulo I(Sp6) and check their coefficient tables.
//!
//! cargo run --release --example relation_identities

use sprel::algebra::MonomialOrder;
use sprel::forge::{check_identity, observed_ord_identities, verify_identities, RelationCatalog, RelationKind};
use sprel::groebner::{buchberger, remainder};
use sprel::symplectic::sp_generators;

fn main() {
    let gb = buchberger(&sp_generators(3).unwrap(), MonomialOrder::Degrevlex).unwrap();
    let cat = RelationCatalog::symbolic();
    for k in [RelationKind::Arch, RelationKind::Ssing, RelationKind::Ord, RelationKind::Linear] {
        println!("R_{}: {} terms before reduction", k.name(), cat.get(k).len());
    }

    let report = verify_identities(&cat, &gb, &[RelationKind::Arch, RelationKind::Ssing, RelationKind::Ord]);
    for c in &report.checks {
        let cond = if c.assume_zero.is_empty() { String::new() } else { format!(" given {} = 0", c.assume_zero.join(", ")) };
        println!(
            "{} {:5} c({}){cond} = {}  expected ~ {}",
            if c.pass { "ok  " } else { "FAIL" },
            c.relation.name(),
            c.monomial,
            c.actual,
            c.expected
        );
    }
    println!("remainder sizes: {:?}", report.remainder_terms);

    let rem = remainder(&cat.r_ord1, &gb);
    println!("ordinary coefficients as computed:");
    for id in observed_ord_identities() {
        let c = check_identity(&rem, &id);
        println!("  c({}) = {}", c.monomial, c.actual);
    }
}
