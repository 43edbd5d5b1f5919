use std::sync::OnceLock;

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use sprel::algebra::{rat, MonomialOrder, QPoly, VarIndex};
use sprel::forge::trivial_relation;
use sprel::groebner::{
    buchberger, buchberger_with, is_member, normal_form, remainder, verify_s_pairs, BuchbergerOptions,
    GroebnerBasis,
};
use sprel::symplectic::{embed6, random_symplectic, sp_generators};

fn sp6() -> &'static GroebnerBasis {
    static GB: OnceLock<GroebnerBasis> = OnceLock::new();
    GB.get_or_init(|| buchberger(&sp_generators(3).unwrap(), MonomialOrder::Degrevlex).unwrap())
}

fn x(r: usize, c: usize) -> QPoly {
    QPoly::var(VarIndex::at(r, c))
}

#[test]
fn sp2_basis_is_the_determinant() {
    let gb = buchberger(&sp_generators(1).unwrap(), MonomialOrder::Degrevlex).unwrap();
    let det_minus_one = x(1, 1).mul(&x(2, 2)).sub(&x(1, 2).mul(&x(2, 1))).sub(&QPoly::one());
    assert_eq!(gb.elements(), &[det_minus_one.neg()]);
}

#[test]
fn criteria_toggle_gives_the_same_basis() {
    for g in [1, 2] {
        let gens = sp_generators(g).unwrap();
        let on = buchberger_with(&gens, MonomialOrder::Degrevlex, BuchbergerOptions { criteria: true, deadline: None });
        let off = buchberger_with(&gens, MonomialOrder::Degrevlex, BuchbergerOptions { criteria: false, deadline: None });
        assert_eq!(on.unwrap(), off.unwrap());
    }
}

#[test]
fn sp4_basis_is_closed_and_order_independent() {
    let gens = sp_generators(2).unwrap();
    let gb = buchberger(&gens, MonomialOrder::Degrevlex).unwrap();
    assert_eq!(gb.len(), 16);
    assert_eq!(gb.max_degree(), 3);
    assert!(verify_s_pairs(&gb));
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..5 {
        let mut g2 = gens.clone();
        g2.shuffle(&mut rng);
        assert_eq!(buchberger(&g2, MonomialOrder::Degrevlex).unwrap(), gb);
    }
}

#[test]
fn sp6_basis_shape_and_members() {
    let gb = sp6();
    assert_eq!(gb.len(), 180);
    assert!(gb.is_reduced() && gb.check_reduced_shape());
    for g in sp_generators(3).unwrap() {
        assert!(is_member(&g, gb));
    }
    let f = trivial_relation();
    let tr = normal_form(&f, gb);
    assert!(tr.remainder.is_zero());
    assert!(tr.defect(&f, gb).is_zero());
    assert_eq!(remainder(&x(1, 1), gb), x(1, 1));
    assert!(normal_form(&QPoly::zero(), gb).remainder.is_zero());
    // a nonzero constant is never in a proper ideal
    assert!(!is_member(&QPoly::constant(rat(3)), gb));
}

/// f and its remainder differ by an ideal element, so they agree on Sp6(Q).
#[test]
fn remainder_agrees_with_evaluation() {
    let gb = sp6();
    let f = x(1, 1).mul(&x(2, 2)).sub(&QPoly::one());
    let r = remainder(&f, gb);
    assert!(!r.is_zero());
    for seed in 0..20 {
        let pt = embed6(&random_symplectic(3, seed, 3).unwrap());
        assert_eq!(f.evaluate(&pt), r.evaluate(&pt));
    }
}

fn quadratic_in_sp6_vars() -> impl Strategy<Value = QPoly> {
    let lin = proptest::collection::vec((1usize..=6, 1usize..=6, -3i64..=3), 1..4).prop_map(|v| {
        v.into_iter()
            .fold(QPoly::zero(), |acc, (r, c, k)| acc.add(&QPoly::var(VarIndex::at(r, c)).scale(&rat(k))))
    });
    (lin.clone(), lin, -3i64..=3).prop_map(|(a, b, k)| a.mul(&b).add(&QPoly::constant(rat(k))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    /// Remainders are canonical: f and f + h * generator reduce to the same thing.
    #[test]
    fn normal_form_is_canonical(f in quadratic_in_sp6_vars(), h in quadratic_in_sp6_vars(), k in 0usize..15) {
        let gb = sp6();
        let gen = &sp_generators(3).unwrap()[k];
        let shifted = f.add(&h.mul(gen));
        prop_assert_eq!(remainder(&f, gb), remainder(&shifted, gb));
    }

    /// The remainder agrees with f on symplectic points.
    #[test]
    fn remainder_preserves_values(f in quadratic_in_sp6_vars(), seed in 0u64..1000) {
        let gb = sp6();
        let pt = embed6(&random_symplectic(3, seed, 2).unwrap());
        prop_assert_eq!(f.evaluate(&pt), remainder(&f, gb).evaluate(&pt));
    }
}
