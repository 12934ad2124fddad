//! Two-sided ideals of an order as `Z`-submodules of `Z^m`, and their
//! Poisson cores.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Coeff;
use crate::ideals::{poisson_core_with, CoreCertificate, CoreOptions};
use crate::poly::linalg::{nullspace, vector_span_basis, VectorIndex};
use crate::poly::{preimage, Ideal, Polynomial, Submodule};

use super::{OrderElement, PoissonOrder};

#[derive(Clone, Debug)]
pub struct OrderIdeal {
    parent: PoissonOrder,
    generators: Vec<OrderElement>,
    closure: Submodule,
}

impl OrderIdeal {
    /// The two-sided ideal generated by `generators`.
    pub fn new(parent: &PoissonOrder, generators: Vec<OrderElement>) -> Result<OrderIdeal> {
        let m = parent.rank();
        for g in &generators {
            if g.len() != m {
                return Err(Error::input(format!("order element must have {m} coordinates")));
            }
        }
        let closure = two_sided(parent, &generators)?;
        Ok(OrderIdeal {
            parent: parent.clone(),
            generators,
            closure,
        })
    }

    /// `J·A` for an ideal `J` of the base.
    pub fn extension(parent: &PoissonOrder, ideal: &Ideal) -> Result<OrderIdeal> {
        let gens = ideal
            .generators()
            .iter()
            .map(|g| parent.scalar(g))
            .collect();
        OrderIdeal::new(parent, gens)
    }

    pub fn parent(&self) -> &PoissonOrder {
        &self.parent
    }

    pub fn generators(&self) -> &[OrderElement] {
        &self.generators
    }

    pub fn module(&self) -> &Submodule {
        &self.closure
    }

    pub fn contains(&self, a: &[Polynomial]) -> bool {
        self.closure.contains(a)
    }

    pub fn contains_ideal(&self, other: &OrderIdeal) -> bool {
        self.closure.contains_module(&other.closure)
    }

    pub fn same(&self, other: &OrderIdeal) -> bool {
        self.closure.same(&other.closure)
    }

    pub fn is_zero(&self) -> bool {
        self.closure.groebner_basis().is_empty()
    }

    /// Whether every basis element lies in the ideal.
    pub fn is_whole(&self) -> bool {
        self.contains(self.parent.unit())
    }

    /// `I ∩ Z·1_A`, as an ideal of the base.
    pub fn contraction(&self) -> Result<Ideal> {
        let ring = self.parent.ring();
        let k = preimage(ring, &[self.parent.unit().clone()], &self.closure)?;
        let gens = k.groebner_basis().into_iter().map(|v| v[0].clone()).collect();
        Ok(Ideal::new(ring, gens)?.reduced())
    }

    /// Whether `{x_i, I} ⊆ I` for every generator of the base.
    pub fn is_poisson(&self) -> bool {
        let n = self.parent.base().nvars();
        self.closure
            .groebner_basis()
            .iter()
            .all(|w| (0..n).all(|i| self.contains(&self.parent.ham_var(i, w))))
    }
}

impl PartialEq for OrderIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.same(other)
    }
}

impl fmt::Display for OrderIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self
            .closure
            .groebner_basis()
            .iter()
            .map(|g| self.parent.format_element(g))
            .collect();
        if gens.is_empty() {
            write!(f, "(0)")
        } else {
            write!(f, "({})", gens.join(", "))
        }
    }
}

fn two_sided(order: &PoissonOrder, gens: &[OrderElement]) -> Result<Submodule> {
    let m = order.rank();
    let mut out = Vec::with_capacity(gens.len() * m * m);
    for g in gens {
        if g.iter().all(Polynomial::is_zero) {
            continue;
        }
        for a in 0..m {
            let left = order.mul(&order.basis_element(a), g);
            for b in 0..m {
                let v = order.mul(&left, &order.basis_element(b));
                if v.iter().any(|p| !p.is_zero()) {
                    out.push(v);
                }
            }
        }
    }
    Ok(Submodule::new(order.ring(), m, out)?.reduced())
}

pub fn order_ideal_closure(gens: Vec<OrderElement>, order: &PoissonOrder) -> Result<OrderIdeal> {
    OrderIdeal::new(order, gens)
}

pub fn order_ideal_member(a: &[Polynomial], ideal: &OrderIdeal) -> bool {
    ideal.contains(a)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrderCoreCertificate {
    FixedPoint { rounds: usize },
    Sandwich { rounds: usize, degree: u32 },
    /// Every two-sided ideal is extended from the base, so the core is the
    /// extension of the core of the contraction.
    Central(CoreCertificate),
}

impl OrderCoreCertificate {
    pub fn name(&self) -> &'static str {
        match self {
            OrderCoreCertificate::FixedPoint { .. } => "fixed-point",
            OrderCoreCertificate::Sandwich { .. } => "sandwich",
            OrderCoreCertificate::Central(_) => "central",
        }
    }
}

impl fmt::Display for OrderCoreCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderCoreCertificate::FixedPoint { rounds } => write!(f, "fixed point after {rounds} rounds"),
            OrderCoreCertificate::Sandwich { rounds, degree } => {
                write!(f, "bounds met after {rounds} rounds at degree {degree}")
            }
            OrderCoreCertificate::Central(c) => write!(f, "extended from the base core ({c})"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct OrderCoreResult {
    pub ideal: OrderIdeal,
    pub certificate: OrderCoreCertificate,
}

pub fn order_poisson_core(ideal: &OrderIdeal) -> Result<OrderIdeal> {
    Ok(order_poisson_core_with(ideal, &CoreOptions::default())?.ideal)
}

/// The largest two-sided ideal inside `ideal` stable under every `H(x_i)`.
pub fn order_poisson_core_with(ideal: &OrderIdeal, options: &CoreOptions) -> Result<OrderCoreResult> {
    let order = &ideal.parent;
    if ideal.is_zero() || ideal.is_whole() || ideal.is_poisson() {
        return Ok(OrderCoreResult {
            ideal: ideal.clone(),
            certificate: OrderCoreCertificate::FixedPoint { rounds: 0 },
        });
    }
    if order.ideals_are_central() {
        let c = ideal.contraction()?;
        let base_core = poisson_core_with(&c, order.base(), options)?;
        let ext = OrderIdeal::extension(order, &base_core.ideal)?;
        if ideal.contains_ideal(&ext) && ext.is_poisson() {
            return Ok(OrderCoreResult {
                ideal: ext,
                certificate: OrderCoreCertificate::Central(base_core.certificate),
            });
        }
    }
    let mut upper = ideal.clone();
    let mut lower: Option<OrderIdeal> = None;
    let mut degree = 0u32;
    for round in 1..=options.round_cap {
        if degree < options.degree_cap {
            degree += 1;
            lower = Some(lower_bound(ideal, degree)?);
        }
        let next = upper_step(&upper)?;
        if next.same(&upper) {
            return Ok(OrderCoreResult {
                ideal: upper,
                certificate: OrderCoreCertificate::FixedPoint { rounds: round },
            });
        }
        upper = next;
        if let Some(l) = &lower {
            if l.same(&upper) {
                return Ok(OrderCoreResult {
                    ideal: upper,
                    certificate: OrderCoreCertificate::Sandwich { rounds: round, degree },
                });
            }
        }
    }
    Err(Error::RoundCap {
        rounds: options.round_cap,
    })
}

/// `{w ∈ U : {x_i, w} ∈ U for all i}`, re-closed on both sides.
fn upper_step(current: &OrderIdeal) -> Result<OrderIdeal> {
    let order = &current.parent;
    let ring = order.ring();
    let n = order.base().nvars();
    let m = order.rank();
    let gens = current.closure.groebner_basis();
    let rows: Vec<Vec<Polynomial>> = gens
        .iter()
        .map(|w| (0..n).flat_map(|i| order.ham_var(i, w)).collect())
        .collect();
    let target_gens: Vec<Vec<Polynomial>> = (0..n)
        .flat_map(|i| {
            gens.iter().map(move |g| {
                let mut v = vec![ring.zero(); n * m];
                v[i * m..(i + 1) * m].clone_from_slice(g);
                v
            })
        })
        .collect();
    let target = Submodule::new(ring, n * m, target_gens)?;
    let kernel = preimage(ring, &rows, &target)?;
    let new_gens = kernel
        .groebner_basis()
        .iter()
        .map(|g| {
            g.iter().zip(&gens).fold(order.zero(), |acc, (c, w)| {
                if c.is_zero() {
                    acc
                } else {
                    order.add(&acc, &order.scale(c, w))
                }
            })
        })
        .collect();
    OrderIdeal::new(order, new_gens)
}

/// The two-sided ideal generated by the largest subspace `W` of elements of
/// degree at most `d` in `I` whose brackets land in the ideal generated by `W`.
fn lower_bound(ideal: &OrderIdeal, d: u32) -> Result<OrderIdeal> {
    let order = &ideal.parent;
    let ring = order.ring();
    let n = order.base().nvars();
    let m = order.rank();
    let mut w = vector_span_basis(ring, m, &ideal.closure.span_up_to_degree(d));
    loop {
        if w.is_empty() {
            return OrderIdeal::new(order, Vec::new());
        }
        let generated = OrderIdeal::new(order, w.clone())?;
        let images: Vec<Vec<Polynomial>> = w
            .iter()
            .map(|b| {
                (0..n)
                    .flat_map(|i| generated.closure.normal_form(&order.ham_var(i, b)).expect("same rank"))
                    .collect()
            })
            .collect();
        let idx = VectorIndex::new(ring, n * m, &images);
        let ncols = w.len();
        let mut rows = vec![vec![Coeff::zero(); ncols]; idx.len()];
        for (c, img) in images.iter().enumerate() {
            for (r, v) in idx.coords(img).expect("indexed").into_iter().enumerate() {
                rows[r][c] = v;
            }
        }
        let kernel = nullspace(&rows, ncols);
        if kernel.len() == ncols {
            return Ok(generated);
        }
        let next: Vec<OrderElement> = kernel
            .iter()
            .map(|v| {
                v.iter()
                    .zip(&w)
                    .filter(|(c, _)| !c.is_zero())
                    .fold(order.zero(), |acc, (c, b)| {
                        order.add(&acc, &b.iter().map(|p| p.scale(c)).collect::<Vec<_>>())
                    })
            })
            .collect();
        w = vector_span_basis(ring, m, &next);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::{matrix_order, rank_one_order};
    use crate::poisson::LieAlgebra;

    #[test]
    fn closure_of_z_e11_contains_z_e22() {
        let p = LieAlgebra::heisenberg().poisson_algebra();
        let a = matrix_order(&p, 2).unwrap();
        let z = p.ring().var(2);
        let mut g = a.zero();
        g[0] = z.clone();
        let i = order_ideal_closure(vec![g], &a).unwrap();
        let mut t = a.zero();
        t[3] = z.clone();
        assert!(order_ideal_member(&t, &i));
        assert!(!i.contains(&a.basis_element(3)));
        assert_eq!(i.contraction().unwrap(), Ideal::parse(p.ring(), &["z"]).unwrap());
    }

    #[test]
    fn unit_generates_everything() {
        let p = LieAlgebra::sl2().poisson_algebra();
        let a = matrix_order(&p, 2).unwrap();
        let i = order_ideal_closure(vec![a.unit().clone()], &a).unwrap();
        assert!(i.is_whole());
        assert!(order_ideal_closure(vec![], &a).unwrap().is_zero());
    }

    #[test]
    fn matrix_core_at_nilpotent_point() {
        let p = LieAlgebra::sl2().poisson_algebra();
        let a = matrix_order(&p, 2).unwrap();
        let m = Ideal::parse(p.ring(), &["e", "h", "f - 1"]).unwrap();
        let i = OrderIdeal::extension(&a, &m).unwrap();
        let core = order_poisson_core(&i).unwrap();
        assert_eq!(
            core.contraction().unwrap(),
            Ideal::parse(p.ring(), &["h^2 + 4*e*f"]).unwrap()
        );
    }

    #[test]
    fn generic_iteration_matches_rank_one() {
        // drop the central shortcut to exercise the submodule iteration
        let p = LieAlgebra::heisenberg().poisson_algebra();
        let mut z = rank_one_order(&p);
        z.central_ideals = false;
        let j = Ideal::parse(p.ring(), &["x", "z^2"]).unwrap();
        let i = OrderIdeal::extension(&z, &j).unwrap();
        let res = order_poisson_core_with(&i, &CoreOptions::default()).unwrap();
        assert_eq!(res.certificate.name(), "fixed-point");
        let want = crate::ideals::poisson_core(&j, &p).unwrap();
        assert_eq!(want, Ideal::parse(p.ring(), &["x^2", "x*z", "z^2"]).unwrap());
        assert_eq!(res.ideal.contraction().unwrap(), want);
    }
}
