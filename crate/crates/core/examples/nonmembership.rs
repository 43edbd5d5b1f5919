//! Evaluation evidence: relation polynomials are nonzero somewhere on Sp6(Q), while
//! g(X) - 1 vanishes everywhere.
//!
//! cargo run --release --example nonmembership

use sprel::forge::{evaluation_count, nonmembership_evidence, trivial_relation, RelationCatalog, RelationKind};

fn main() {
    let cat = RelationCatalog::symbolic();
    for k in [RelationKind::Arch, RelationKind::Ssing, RelationKind::Ord] {
        let ev = nonmembership_evidence(k.name(), cat.get(k), 50, 1);
        println!("{:6} nonzero at {}/{} points", ev.relation, ev.nonzero, ev.trials);
    }
    let control = evaluation_count("g(X)-1", &trivial_relation(), 1000, 1);
    println!("{} nonzero at {}/{} points", control.relation, control.nonzero, control.trials);
}
