mod common;

use std::time::Instant;

use proptest::prelude::*;

use common::*;
use poisson_order::ideals::{is_poisson_stable, poisson_closure, poisson_core, symplectic_core_ideal};
use poisson_order::Ideal;

#[test]
fn symplectic_cores_of_sl2() {
    let s = sl2();
    assert_eq!(symplectic_core_ideal(&coeffs(&[0, 0, 1]), &s).unwrap(), ideal(&s, &["h^2 + 4*e*f"]));
    assert_eq!(symplectic_core_ideal(&coeffs(&[1, 2, 3]), &s).unwrap(), ideal(&s, &["h^2 + 4*e*f - 16"]));
    assert_eq!(symplectic_core_ideal(&coeffs(&[1, 0, 1]), &s).unwrap(), ideal(&s, &["h^2 + 4*e*f - 4"]));
    assert_eq!(symplectic_core_ideal(&coeffs(&[0, 0, 0]), &s).unwrap(), ideal(&s, &["e", "h", "f"]));
}

#[test]
fn symplectic_cores_of_heisenberg() {
    let h = heis();
    assert_eq!(symplectic_core_ideal(&coeffs(&[1, 2, 3]), &h).unwrap(), ideal(&h, &["z - 3"]));
    assert_eq!(symplectic_core_ideal(&coeffs(&[0, 0, -2]), &h).unwrap(), ideal(&h, &["z + 2"]));
    assert_eq!(symplectic_core_ideal(&coeffs(&[1, 2, 0]), &h).unwrap(), point(&h, &[1, 2, 0]));
}

#[test]
fn cores_are_maximal_poisson_subideals() {
    for (p, i, j) in poisson_subideal_cases() {
        assert!(is_poisson_stable(&j, &p).unwrap().is_poisson, "{j}");
        assert!(i.contains_ideal(&j));
        let core = poisson_core(&i, &p).unwrap();
        assert!(is_poisson_stable(&core, &p).unwrap().is_poisson, "{core}");
        assert!(i.contains_ideal(&core));
        assert!(core.contains_ideal(&j), "{j} not inside P({i}) = {core}");
    }
}

#[test]
fn core_commutes_with_intersection() {
    for (p, i, j) in intersection_cases() {
        let start = Instant::now();
        let left = poisson_core(&i.intersect(&j), &p).unwrap();
        let right = poisson_core(&i, &p).unwrap().intersect(&poisson_core(&j, &p).unwrap());
        assert!(left.same_ideal(&right), "P({i} ∩ {j}) = {left}, but the intersection of cores is {right}");
        assert!(start.elapsed().as_secs() < 20);
    }
}

#[test]
fn closure_is_the_smallest_poisson_ideal_above() {
    let s = sl2();
    let c = poisson_closure(&ideal(&s, &["e"]), &s, 16).unwrap();
    assert_eq!(c, ideal(&s, &["e", "h", "f"]));
    let h = heis();
    let c = poisson_closure(&ideal(&h, &["x^2"]), &h, 16).unwrap();
    assert_eq!(c, ideal(&h, &["x^2", "x*z", "z^2"]));
}

#[test]
fn unit_and_zero_ideals_are_fixed() {
    let s = sl2();
    assert!(poisson_core(&Ideal::unit(s.ring()), &s).unwrap().is_unit());
    assert!(poisson_core(&Ideal::zero(s.ring()), &s).unwrap().is_zero());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn bracket_is_antisymmetric_and_leibniz(
        f in polynomial(sl2().ring().clone(), 2, 3),
        g in polynomial(sl2().ring().clone(), 2, 3),
        k in polynomial(sl2().ring().clone(), 2, 3),
    ) {
        let p = sl2();
        prop_assert_eq!(p.bracket(&f, &g), -&p.bracket(&g, &f));
        prop_assert_eq!(p.bracket(&f, &(&g * &k)), &(&p.bracket(&f, &g) * &k) + &(&g * &p.bracket(&f, &k)));
    }

    #[test]
    fn jacobi_holds_on_random_elements(
        f in polynomial(heis().ring().clone(), 2, 3),
        g in polynomial(heis().ring().clone(), 2, 3),
        k in polynomial(heis().ring().clone(), 2, 3),
    ) {
        for p in [heis(), sl2().clone()] {
            let ring = p.ring().clone();
            let (f, g, k) = (
                Polynomial::from_terms(&ring, f.terms().iter().cloned()),
                Polynomial::from_terms(&ring, g.terms().iter().cloned()),
                Polynomial::from_terms(&ring, k.terms().iter().cloned()),
            );
            let total = &(&p.bracket(&f, &p.bracket(&g, &k)) + &p.bracket(&g, &p.bracket(&k, &f))) + &p.bracket(&k, &p.bracket(&f, &g));
            prop_assert!(total.is_zero());
        }
    }

    #[test]
    fn casimir_is_central(f in polynomial(sl2().ring().clone(), 3, 4)) {
        let p = sl2();
        let casimir = p.ring().parse("h^2 + 4*e*f").unwrap();
        prop_assert!(p.bracket(&casimir, &f).is_zero());
    }

    #[test]
    fn cores_of_casimir_levels(level in -5i64..5) {
        let p = sl2();
        let text = format!("h^2 + 4*e*f - ({level})");
        let i = Ideal::parse(p.ring(), &[text.as_str()]).unwrap();
        prop_assert_eq!(poisson_core(&i, &p).unwrap(), i);
    }
}

use poisson_order::Polynomial;
