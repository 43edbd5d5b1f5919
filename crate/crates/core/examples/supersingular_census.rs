//! Supersingular primes of y^2 = x^3 + x and y^2 = x^3 + 1, singly and together.
//!
//! cargo run --release --example supersingular_census -- 100000

use sprel::census::{census_pair, heuristic_density, trace_ap, CurveQ};

fn main() {
    let x_max: u64 = std::env::args().nth(1).map(|s| s.parse().expect("x_max")).unwrap_or(10_000);
    let e1 = CurveQ::new(1, 0).unwrap();
    let e2 = CurveQ::new(0, 1).unwrap();
    println!("a_101: {} and {}", trace_ap(&e1, 101).unwrap(), trace_ap(&e2, 101).unwrap());

    let s = census_pair(&e1, &e2, x_max, 12).unwrap();
    print!("{}", s.to_csv());
    println!("first pair primes: {:?}", &s.pair_primes[..s.pair_primes.len().min(10)]);
    println!("invariants hold: {}", s.invariants_hold());
    for p in [101u64, 10_007] {
        let d1 = heuristic_density(p, 1).unwrap();
        let d2 = heuristic_density(p, 2).unwrap();
        println!("density at {p}: f=1 {:.3e}, f=2 {d2}", num_traits::ToPrimitive::to_f64(&d1).unwrap());
    }
}
