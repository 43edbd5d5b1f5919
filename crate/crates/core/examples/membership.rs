//! Ideal membership through normal forms, using an on-disk basis cache.
//!
//! cargo run --release --example membership

use sprel::algebra::{MonomialOrder, QPoly, VarIndex};
use sprel::forge::trivial_relation;
use sprel::groebner::cache::{load_or_compute, CacheOutcome, CacheStatus};
use sprel::groebner::{normal_form, BuchbergerOptions};
use sprel::symplectic::sp_generators;

fn main() {
    let path = std::env::temp_dir().join("sprel-example-sp6-degrevlex.gb");
    let gens = sp_generators(3).unwrap();
    let gb = match load_or_compute(&path, &gens, MonomialOrder::Degrevlex, BuchbergerOptions::default(), true) {
        Ok(CacheOutcome::Ready(gb, status)) => {
            let how = if status == CacheStatus::Hit { "read from" } else { "computed and written to" };
            println!("basis of {} elements {how} {}", gb.len(), path.display());
            gb
        }
        Ok(CacheOutcome::BudgetExceeded { .. }) => unreachable!("no deadline set"),
        Err(e) => panic!("{e}"),
    };

    let f = trivial_relation();
    let tr = normal_form(&f, &gb);
    let used = tr.quotients.iter().filter(|q| !q.is_zero()).count();
    println!("g(X) - 1 -> {} ({used} basis elements used, defect {})", tr.remainder, tr.defect(&f, &gb));

    let x = |r, c| QPoly::var(VarIndex::at(r, c));
    let h = x(1, 1).mul(&x(2, 2)).sub(&x(1, 2).mul(&x(2, 1)));
    let r = normal_form(&h, &gb).remainder;
    println!("X11 X22 - X12 X21 -> {r}");
    println!("member: {}", r.is_zero());
}
