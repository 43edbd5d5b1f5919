//! Compute the reduced Gröbner basis of I(Sp(2g)) under degrevlex.
//!
//! cargo run --release --example groebner_sp -- 3

use std::time::Instant;

use sprel::algebra::MonomialOrder;
use sprel::groebner::{Buchberger, BuchbergerOptions};
use sprel::symplectic::sp_generators;

fn main() {
    let g: usize = std::env::args().nth(1).map(|s| s.parse().expect("genus")).unwrap_or(2);
    let gens = sp_generators(g).expect("genus in 1..=3");
    let start = Instant::now();
    let mut engine = Buchberger::new(&gens, MonomialOrder::Degrevlex, BuchbergerOptions::default()).unwrap();
    engine.run();
    let stats = engine.stats().clone();
    let gb = engine.into_reduced().unwrap();
    println!("Sp({}) : {} generators -> {} basis elements, max degree {}", 2 * g, gens.len(), gb.len(), gb.max_degree());
    println!("{stats:?}");
    println!("elapsed {:.2?}", start.elapsed());
    for p in gb.elements().iter().take(8) {
        println!("  {p}");
    }
}
