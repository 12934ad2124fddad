mod common;

use std::sync::Arc;

use proptest::prelude::*;
use rand::SeedableRng;

use common::{brute_force_member, groebner_corpus, membership_queries, polynomial};
use poisson_order::poly::{ideal_member, is_groebner_basis};
use poisson_order::{Ideal, MonomialOrder, Ring};

fn ring3() -> Arc<Ring> {
    Ring::rational(&["x", "y", "z"]).unwrap()
}

#[test]
fn corpus_bases_satisfy_buchberger_in_every_order() {
    for ideal in groebner_corpus() {
        let n = ideal.ring().nvars();
        for order in [MonomialOrder::DegRevLex, MonomialOrder::Lex, MonomialOrder::Block(vec![1, n - 1])] {
            let gb = ideal.with_order(order.clone()).unwrap();
            assert!(is_groebner_basis(gb.groebner_basis(), &order), "{ideal} under {order:?}");
        }
    }
}

#[test]
fn membership_matches_linear_algebra() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(7);
    for ideal in groebner_corpus().iter().take(8) {
        for f in membership_queries(ideal, 4, &mut rng) {
            assert_eq!(ideal_member(&f, ideal).unwrap(), brute_force_member(&f, ideal), "{f} in {ideal}");
        }
    }
}

#[test]
fn reduced_basis_is_independent_of_generators() {
    let r = ring3();
    let a = Ideal::parse(&r, &["y - x^2", "z - x^3"]).unwrap();
    let b = Ideal::parse(&r, &["z - x^3", "y - x^2", "x*y - z", "y^2 - x*z"]).unwrap();
    assert_eq!(a.groebner_basis(), b.groebner_basis());
}

#[test]
fn elimination_gives_the_plane_curve() {
    let r = ring3();
    let twisted = Ideal::parse(&r, &["y - x^2", "z - x^3"]).unwrap();
    let plane = twisted.eliminate_variables(&["x"]).unwrap();
    assert!(plane.same_ideal(&Ideal::parse(&r, &["y^3 - z^2"]).unwrap()));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_axioms(a in polynomial(ring3(), 3, 4), b in polynomial(ring3(), 3, 4), c in polynomial(ring3(), 2, 3)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn products_with_generators_are_members(h in polynomial(ring3(), 2, 3), k in polynomial(ring3(), 2, 3)) {
        let ideal = Ideal::parse(&ring3(), &["x*y - z", "y^2 - x"]).unwrap();
        let f = &(&h * &ideal.generators()[0]) + &(&k * &ideal.generators()[1]);
        prop_assert!(ideal_member(&f, &ideal).unwrap());
        prop_assert!(ideal.normal_form(&f).is_zero());
    }

    #[test]
    fn normal_form_is_idempotent(f in polynomial(ring3(), 4, 5)) {
        let ideal = Ideal::parse(&ring3(), &["x^2 - y*z", "y^2 - x", "z^3 - 1"]).unwrap();
        let nf = ideal.normal_form(&f);
        prop_assert_eq!(ideal.normal_form(&nf), nf.clone());
        prop_assert!(ideal_member(&(&f - &nf), &ideal).unwrap());
    }

    #[test]
    fn intersection_is_contained_in_both(a in polynomial(ring3(), 2, 2), b in polynomial(ring3(), 2, 2)) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let i = Ideal::new(&ring3(), vec![a.clone()]).unwrap();
        let j = Ideal::new(&ring3(), vec![b.clone()]).unwrap();
        let both = i.intersect(&j);
        prop_assert!(i.contains_ideal(&both) && j.contains_ideal(&both));
        prop_assert!(both.contains(&(&a * &b)));
    }
}
