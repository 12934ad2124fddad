//! Exact polynomials over Q and Q(ζ_ℓ), monomial orders and a Gröbner-basis
//! engine for ideals and submodules of free modules.

mod groebner;
mod ideal;
pub mod linalg;
mod module;
mod monomial;
mod parse;
mod polynomial;

use std::sync::Arc;

pub use groebner::{ModuleOrder, ModuleOrderKind};
pub use ideal::Ideal;
pub use linalg::Matrix;
pub use module::{monomials_up_to, preimage, syzygy_kernel, Submodule};
pub use monomial::{Monomial, MonomialOrder};
pub use polynomial::{Polynomial, Ring};


use crate::error::{Error, Result};

/// Remainder of `f` under multivariate division by `divisors`.
pub fn normal_form(f: &Polynomial, divisors: &[Polynomial], order: &MonomialOrder) -> Result<Polynomial> {
    for g in divisors {
        f.ensure_same_ring(g)?;
    }
    order.validate(f.ring().nvars())?;
    let ord = ModuleOrder::pot(order.clone());
    let basis: Vec<groebner::Vector> = divisors
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let mut v = groebner::Vector::from_poly(g, 0, &ord);
            v.make_monic();
            v
        })
        .collect();
    Ok(groebner::reduce(&groebner::Vector::from_poly(f, 0, &ord), &basis, &ord, None).to_poly(f.ring()))
}

/// The ideal with its reduced Gröbner basis under `order` computed.
pub fn groebner_basis(ideal: &Ideal, order: &MonomialOrder) -> Result<Ideal> {
    let out = ideal.with_order(order.clone())?;
    out.groebner_basis();
    Ok(out)
}

/// Buchberger's criterion for an explicit polynomial list.
pub fn is_groebner_basis(polys: &[Polynomial], order: &MonomialOrder) -> bool {
    let ord = ModuleOrder::pot(order.clone());
    let basis: Vec<groebner::Vector> = polys
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| groebner::Vector::from_poly(g, 0, &ord))
        .collect();
    groebner::satisfies_buchberger_criterion(&basis, &ord)
}

pub fn ideal_member(f: &Polynomial, ideal: &Ideal) -> Result<bool> {
    check_ring(f.ring(), ideal.ring())?;
    Ok(ideal.contains(f))
}

pub fn ideal_intersect(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    check_ring(a.ring(), b.ring())?;
    Ok(a.intersect(b))
}

pub fn ideal_quotient(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    check_ring(a.ring(), b.ring())?;
    Ok(a.quotient(b))
}

pub fn eliminate(ideal: &Ideal, vars: &[&str], order: &MonomialOrder) -> Result<Ideal> {
    ideal.eliminate(vars, order)
}

pub fn radical_member(f: &Polynomial, ideal: &Ideal) -> Result<bool> {
    check_ring(f.ring(), ideal.ring())?;
    Ok(ideal.radical_contains(f))
}

pub fn krull_dimension(ideal: &Ideal) -> i64 {
    ideal.krull_dimension()
}

fn check_ring(a: &Arc<Ring>, b: &Arc<Ring>) -> Result<()> {
    if Ring::same(a, b) {
        Ok(())
    } else {
        Err(Error::input(format!(
            "mixed rings: [{}] over {} vs [{}] over {}",
            a.variables().join(","),
            a.field(),
            b.variables().join(","),
            b.field()
        )))
    }
}
