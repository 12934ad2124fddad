mod common;

use rand::SeedableRng;

use common::*;
use poisson_order::envelope::{
    diamond_overlap_check, induced_module, ividealiii_check, module_check, pbw_dimension_check, pbw_prediction,
    ugd_compare, Envelope,
};
use poisson_order::ideals::CoreOptions;
use poisson_order::order::{matrix_order, rank_one_order};
use poisson_order::{LieAlgebra, PoissonAlgebra, Ring};

#[test]
fn pbw_counts_match_the_closed_form() {
    for (name, o) in example_orders().into_iter().take(5) {
        let env = Envelope::new(&o);
        for k in 0..=2 {
            for d in 0..=2 {
                let r = pbw_dimension_check(&env, k, d);
                assert!(r.ok && r.leading_terms_ok, "{name}: {r}");
                assert_eq!(r.predicted, pbw_prediction(o.rank(), o.base().nvars(), k, d));
            }
        }
    }
}

#[test]
fn closed_form_small_values() {
    // one variable: (d + 1)(k + 1)
    assert_eq!(pbw_prediction(1, 1, 3, 2), 12);
    // heisenberg at k = 2, d = 1: 4 * (1 + 3 + 6)
    assert_eq!(pbw_prediction(1, 3, 2, 1), 40);
    assert_eq!(pbw_prediction(4, 2, 0, 0), 4);
}

#[test]
fn rewriting_is_confluent_exactly_for_poisson_tables() {
    for (name, o) in example_orders() {
        assert!(diamond_overlap_check(&o).is_empty(), "{name}");
    }
    let r = Ring::rational(&["x1", "x2", "x3"]).unwrap();
    let skew = PoissonAlgebra::skew(
        &r,
        vec![
            vec![r.zero(), r.var(2), r.var(0)],
            vec![-r.var(2), r.zero(), r.var(0)],
            vec![-r.var(0), -r.var(0), r.zero()],
        ],
    )
    .unwrap();
    assert!(!skew.jacobi_check().is_empty());
    assert!(!diamond_overlap_check(&rank_one_order(&skew)).is_empty());
}

#[test]
fn defining_relations_hold() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(11);
    for (name, o) in example_orders() {
        let env = Envelope::new(&o);
        let ring = o.ring().clone();
        for _ in 0..6 {
            let x = random_poly(&ring, &mut rng, 2, 2);
            let y = random_poly(&ring, &mut rng, 2, 2);
            let a = random_order_element(&o, &mut rng);
            let alpha_a = env.alpha(&a).unwrap();
            let dx = env.delta_of(&x);
            let comm = env.mul(&dx, &alpha_a).unwrap().sub(&env.mul(&alpha_a, &dx).unwrap());
            assert_eq!(comm, env.alpha(&o.hamiltonian(&x, &a)).unwrap(), "{name}: [d({x}), a]");
            let leibniz = env
                .mul(&env.alpha_poly(&x), &env.delta_of(&y))
                .unwrap()
                .add(&env.mul(&env.alpha_poly(&y), &dx).unwrap());
            assert_eq!(env.delta_of(&(&x * &y)), leibniz, "{name}: d({x} {y})");
            let dy = env.delta_of(&y);
            let lie = env.mul(&dx, &dy).unwrap().sub(&env.mul(&dy, &dx).unwrap());
            assert_eq!(lie, env.delta_of(&o.base().bracket(&x, &y)), "{name}: [d({x}), d({y})]");
        }
    }
}

#[test]
fn multiplication_is_associative() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(5);
    for (name, o) in example_orders() {
        let env = Envelope::new(&o);
        for _ in 0..4 {
            let u = random_env_element(&env, &mut rng);
            let v = random_env_element(&env, &mut rng);
            let w = random_env_element(&env, &mut rng);
            let left = env.mul(&env.mul(&u, &v).unwrap(), &w).unwrap();
            let right = env.mul(&u, &env.mul(&v, &w).unwrap()).unwrap();
            assert_eq!(left, right, "{name}");
        }
    }
}

#[test]
fn parse_and_display_round_trip() {
    let env = Envelope::of_algebra(&sl2());
    for text in ["f*d[e] + h", "d[e]*d[f]", "2*e*d[h]^2 - 1", "0"] {
        let u = env.parse(text).unwrap();
        assert_eq!(env.parse(&u.to_string()).unwrap(), u);
    }
    let u = env.parse("d[e]*f").unwrap();
    assert_eq!(u.to_string(), "f*d[e] + h");
}

#[test]
fn double_number_algebras() {
    for g in [
        LieAlgebra::abelian(&["a", "b"]),
        LieAlgebra::heisenberg(),
        LieAlgebra::sl2(),
        LieAlgebra::solvable(),
    ] {
        assert!(ugd_compare(&g).unwrap().is_empty());
    }
}

#[test]
fn simple_modules_satisfy_the_torsion_identity() {
    for (name, p, m) in simple_modules() {
        assert!(module_check(&m, &rank_one_order(&p)).is_empty(), "{name}");
        let r = ividealiii_check(&m, &p, &CoreOptions::default()).unwrap();
        assert!(r.holds, "{name}: P(T) = {}, Ann = {}", r.core, r.annihilator);
    }
}

#[test]
fn non_simple_control_fails() {
    let (p, m) = non_simple_module();
    let r = ividealiii_check(&m, &p, &CoreOptions::default()).unwrap();
    assert!(!r.holds);
    assert!(r.torsion.contains_ideal(&r.annihilator));
    assert_ne!(r.torsion, r.annihilator);
}

#[test]
fn induction_preserves_the_axioms() {
    let h = heis();
    let m = poisson_order::envelope::PoissonModule::point(&coeffs(&[1, 2, 0]));
    for o in [matrix_order(&h, 2).unwrap(), matrix_order(&h, 3).unwrap()] {
        let ind = induced_module(&o, &m).unwrap();
        assert_eq!(ind.dimension(), o.rank());
        assert!(module_check(&ind, &o).is_empty());
    }
}
