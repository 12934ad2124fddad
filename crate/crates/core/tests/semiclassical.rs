mod common;

use num_rational::BigRational;

use common::semiclassical_scalar_by_division;
use poisson_order::field::{Coeff, CoefficientField};
use poisson_order::semiclassical::{centrality_check, divide_by_linear, ell_centre_bracket, QuantumAffineSpace};

#[test]
fn commutator_of_squares() {
    let q = QuantumAffineSpace::new(2).unwrap();
    let c = q.commutator(&q.generator_power(0, 2), &q.generator_power(1, 2));
    assert_eq!(c.to_string(), "(1 - q^-4)*X1^2*X2^2");
}

#[test]
fn generators_commute_up_to_q() {
    let q = QuantumAffineSpace::new(2).unwrap();
    let x21 = q.mul(&q.generator(1), &q.generator(0));
    assert_eq!(x21.to_string(), "(q^-1)*X1*X2");
}

#[test]
fn ell_centre_scalars_are_ell_squared_over_zeta() {
    for ell in 2..=6 {
        let q = QuantumAffineSpace::new(3).unwrap();
        let c = ell_centre_bracket(&q, ell).unwrap();
        let zeta = CoefficientField::cyclotomic(ell).unwrap().zeta();
        let want = Coeff::from_int(i64::from(ell * ell)).div(&zeta);
        for (_, s) in &c.scalars {
            assert_eq!(s, &want, "ell = {ell}");
        }
        assert!(c.algebra.jacobi_check().is_empty());
        assert!(centrality_check(&q, ell, true).unwrap());
        assert!(!centrality_check(&q, ell, false).unwrap());
    }
}

#[test]
fn golden_scalar_for_ell_two() {
    let (value, remainder) = semiclassical_scalar_by_division(4, -1);
    assert_eq!(remainder, BigRational::from_integer(0.into()));
    assert_eq!(value, BigRational::from_integer((-4).into()));
    let q = QuantumAffineSpace::new(2).unwrap();
    let c = ell_centre_bracket(&q, 2).unwrap();
    assert_eq!(c.scalars[0].1, Coeff::from_int(-4));
}

#[test]
fn synthetic_division() {
    // q^2 - 1 = (q + 1)(q - 1), lowest degree first
    let p = [Coeff::from_int(-1), Coeff::zero(), Coeff::one()];
    let (quot, rem) = divide_by_linear(&p, &Coeff::from_int(-1));
    assert!(rem.is_zero());
    assert_eq!(quot, vec![Coeff::from_int(-1), Coeff::one()]);
    let (_, rem) = divide_by_linear(&p, &Coeff::from_int(2));
    assert_eq!(rem, Coeff::from_int(3));
}

#[test]
fn bad_roots_are_rejected() {
    let q = QuantumAffineSpace::new(2).unwrap();
    assert!(ell_centre_bracket(&q, 1).is_err());
    assert!(ell_centre_bracket(&q, 13).is_err());
}
