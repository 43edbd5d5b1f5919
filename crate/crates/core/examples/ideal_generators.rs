//! Print the defining quadrics of Sp(2g) and check them on random symplectic matrices.
//!
//! cargo run --example ideal_generators -- 3

use sprel::algebra::format_poly;
use sprel::symplectic::{embed6, is_symplectic, random_symplectic, sp_generators, SymplecticForm};

fn main() {
    let g: usize = std::env::args().nth(1).map(|s| s.parse().expect("genus")).unwrap_or(3);
    let gens = sp_generators(g).expect("genus in 1..=3");
    println!("I(Sp({})) has {} generators:", 2 * g, gens.len());
    for p in &gens {
        println!("  {}", format_poly(p));
    }
    let form = SymplecticForm::new(g).unwrap();
    for seed in 0..3 {
        let m = random_symplectic(g, seed, 3).unwrap();
        assert!(is_symplectic(&m, &form));
        let pt = embed6(&m);
        let all_zero = gens.iter().all(|p| p.evaluate(&pt) == num_traits::Zero::zero());
        println!("seed {seed}: generators vanish = {all_zero}");
    }
}
