//! Poisson orders: finite free algebras over a Poisson algebra `Z` with a
//! Hamiltonian action of `Z` by derivations.

mod ideal;

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poisson::PoissonAlgebra;
use crate::poly::{Polynomial, Ring};

pub use ideal::{
    order_ideal_closure, order_ideal_member, order_poisson_core, order_poisson_core_with, OrderCoreCertificate,
    OrderCoreResult, OrderIdeal,
};

/// Coordinates of an element of the order in its `Z`-basis.
pub type OrderElement = Vec<Polynomial>;

#[derive(Clone, Debug, PartialEq)]
pub struct PoissonOrder {
    base: PoissonAlgebra,
    names: Vec<String>,
    mult: Vec<Vec<OrderElement>>,
    unit: OrderElement,
    ham: Vec<Vec<OrderElement>>,
    central_ideals: bool,
}

impl PoissonOrder {
    pub fn base(&self) -> &PoissonAlgebra {
        &self.base
    }

    pub fn ring(&self) -> &Arc<Ring> {
        self.base.ring()
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.names
    }

    /// Coordinates of `e_j e_k`.
    pub fn product_of_basis(&self, j: usize, k: usize) -> &OrderElement {
        &self.mult[j][k]
    }

    pub fn unit(&self) -> &OrderElement {
        &self.unit
    }

    /// Coordinates of `{x_i, e_j}`.
    pub fn ham_entry(&self, i: usize, j: usize) -> &OrderElement {
        &self.ham[i][j]
    }

    /// Whether every two-sided ideal is generated by its contraction to `Z`,
    /// as for matrix algebras; tracked through the constructions.
    pub fn ideals_are_central(&self) -> bool {
        self.central_ideals
    }

    pub fn zero(&self) -> OrderElement {
        vec![self.ring().zero(); self.rank()]
    }

    pub fn basis_element(&self, j: usize) -> OrderElement {
        let mut v = self.zero();
        v[j] = self.ring().one();
        v
    }

    /// `z * 1_A`.
    pub fn scalar(&self, z: &Polynomial) -> OrderElement {
        self.unit.iter().map(|u| u * z).collect()
    }

    pub fn scale(&self, z: &Polynomial, a: &[Polynomial]) -> OrderElement {
        a.iter().map(|c| c * z).collect()
    }

    pub fn add(&self, a: &[Polynomial], b: &[Polynomial]) -> OrderElement {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn sub(&self, a: &[Polynomial], b: &[Polynomial]) -> OrderElement {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    pub fn mul(&self, a: &[Polynomial], b: &[Polynomial]) -> OrderElement {
        let mut out = self.zero();
        for (j, aj) in a.iter().enumerate() {
            if aj.is_zero() {
                continue;
            }
            for (k, bk) in b.iter().enumerate() {
                if bk.is_zero() {
                    continue;
                }
                let c = aj * bk;
                for (l, mu) in self.mult[j][k].iter().enumerate() {
                    if !mu.is_zero() {
                        out[l] = &out[l] + &(&c * mu);
                    }
                }
            }
        }
        out
    }

    /// `{x_i, a}`.
    pub fn ham_var(&self, i: usize, a: &[Polynomial]) -> OrderElement {
        let mut out = self.zero();
        for (j, aj) in a.iter().enumerate() {
            if aj.is_zero() {
                continue;
            }
            out[j] = &out[j] + &self.base.bracket_var(i, aj);
            for (l, h) in self.ham[i][j].iter().enumerate() {
                if !h.is_zero() {
                    out[l] = &out[l] + &(aj * h);
                }
            }
        }
        out
    }

    /// `H(z)(a) = Σ_i ∂_i z · {x_i, a}`.
    pub fn hamiltonian(&self, z: &Polynomial, a: &[Polynomial]) -> OrderElement {
        let mut out = self.zero();
        for i in 0..self.base.nvars() {
            let d = z.derivative(i);
            if d.is_zero() {
                continue;
            }
            out = self.add(&out, &self.scale(&d, &self.ham_var(i, a)));
        }
        out
    }

    fn is_zero_element(a: &[Polynomial]) -> bool {
        a.iter().all(Polynomial::is_zero)
    }

    pub fn format_element(&self, a: &[Polynomial]) -> String {
        let parts: Vec<String> = a
            .iter()
            .zip(&self.names)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, n)| {
                if c.is_one() {
                    n.clone()
                } else if c.len() == 1 {
                    format!("{c}*{n}")
                } else {
                    format!("({c})*{n}")
                }
            })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

impl Polynomial {
    fn is_one(&self) -> bool {
        self.is_constant() && self.constant_term().is_one()
    }
}

impl fmt::Display for PoissonOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Poisson order of rank {} over [{}] with basis [{}]",
            self.rank(),
            self.ring().variables().join(", "),
            self.names.join(", ")
        )
    }
}

/// Builds an order from its tables and verifies the axioms: shapes,
/// associativity, unit, `H(x_i)` a derivation, the product rule in the first
/// slot, and agreement of `H` with the bracket on `Z·1`.
pub fn make_order(
    base: &PoissonAlgebra,
    names: Vec<String>,
    mult: Vec<Vec<OrderElement>>,
    unit: OrderElement,
    ham: Vec<Vec<OrderElement>>,
) -> Result<PoissonOrder> {
    let order = assemble(base, names, mult, unit, ham, false)?;
    verify(&order)?;
    Ok(order)
}

/// Builds an order from its tables checking shapes only.
pub fn unchecked_order(
    base: &PoissonAlgebra,
    names: Vec<String>,
    mult: Vec<Vec<OrderElement>>,
    unit: OrderElement,
    ham: Vec<Vec<OrderElement>>,
) -> Result<PoissonOrder> {
    assemble(base, names, mult, unit, ham, false)
}

fn assemble(
    base: &PoissonAlgebra,
    names: Vec<String>,
    mult: Vec<Vec<OrderElement>>,
    unit: OrderElement,
    ham: Vec<Vec<OrderElement>>,
    central_ideals: bool,
) -> Result<PoissonOrder> {
    let m = names.len();
    let n = base.nvars();
    if m == 0 {
        return Err(Error::input("an order needs at least one basis element"));
    }
    for (i, a) in names.iter().enumerate() {
        if names[..i].contains(a) {
            return Err(Error::input(format!("duplicate basis name `{a}`")));
        }
    }
    let ring = base.ring();
    let shaped = |v: &OrderElement| v.len() == m && v.iter().all(|p| Ring::same(p.ring(), ring));
    if mult.len() != m || mult.iter().any(|r| r.len() != m || !r.iter().all(shaped)) {
        return Err(Error::input(format!("multiplication table must be {m}x{m} vectors of length {m}")));
    }
    if !shaped(&unit) {
        return Err(Error::input(format!("unit must have {m} coordinates")));
    }
    if ham.len() != n || ham.iter().any(|r| r.len() != m || !r.iter().all(shaped)) {
        return Err(Error::input(format!("Hamiltonian table must be {n}x{m} vectors of length {m}")));
    }
    Ok(PoissonOrder {
        base: base.clone(),
        names,
        mult,
        unit,
        ham,
        central_ideals,
    })
}

/// Checks every axiom, returning the first violation.
pub fn verify(order: &PoissonOrder) -> Result<()> {
    let m = order.rank();
    let n = order.base.nvars();
    let vars = order.ring().variables().to_vec();
    let names = &order.names;
    let e = |j: usize| order.basis_element(j);
    for j in 0..m {
        for k in 0..m {
            for l in 0..m {
                let left = order.mul(&order.mul(&e(j), &e(k)), &e(l));
                let right = order.mul(&e(j), &order.mul(&e(k), &e(l)));
                if left != right {
                    return Err(Error::validation(
                        "associativity",
                        format!("({0}*{1})*{2} != {0}*({1}*{2})", names[j], names[k], names[l]),
                    ));
                }
            }
        }
    }
    for j in 0..m {
        if order.mul(&order.unit, &e(j)) != e(j) || order.mul(&e(j), &order.unit) != e(j) {
            return Err(Error::validation("unit", format!("1 * {0} or {0} * 1 differs from {0}", names[j])));
        }
    }
    for i in 0..n {
        for j in 0..m {
            for k in 0..m {
                let prod = order.mul(&e(j), &e(k));
                let lhs = order.ham_var(i, &prod);
                let rhs = order.add(
                    &order.mul(&order.ham_var(i, &e(j)), &e(k)),
                    &order.mul(&e(j), &order.ham_var(i, &e(k))),
                );
                if lhs != rhs {
                    return Err(Error::validation(
                        "derivation (i)",
                        format!(
                            "{{{}, {}*{}}} = {} but the Leibniz expansion gives {}",
                            vars[i],
                            names[j],
                            names[k],
                            order.format_element(&lhs),
                            order.format_element(&rhs)
                        ),
                    ));
                }
            }
        }
    }
    let ring = order.ring().clone();
    for i in 0..n {
        for k in 0..n {
            let xy = &ring.var(i) * &ring.var(k);
            for j in 0..m {
                let lhs = order.hamiltonian(&xy, &e(j));
                let rhs = order.add(
                    &order.scale(&ring.var(i), &order.ham_var(k, &e(j))),
                    &order.scale(&ring.var(k), &order.ham_var(i, &e(j))),
                );
                if lhs != rhs {
                    return Err(Error::validation(
                        "biderivation (ii)",
                        format!("H({}*{}) on {} breaks the product rule", vars[i], vars[k], names[j]),
                    ));
                }
            }
        }
    }
    for i in 0..n {
        let d = order.ham_var(i, &order.unit);
        if !PoissonOrder::is_zero_element(&d) {
            return Err(Error::validation(
                "compatibility",
                format!(
                    "{{{}, 1}} = {} instead of 0, so H does not restrict to the bracket on Z",
                    vars[i],
                    order.format_element(&d)
                ),
            ));
        }
    }
    Ok(())
}

/// `Z` as an order over itself.
pub fn rank_one_order(base: &PoissonAlgebra) -> PoissonOrder {
    let ring = base.ring();
    assemble(
        base,
        vec!["1".into()],
        vec![vec![vec![ring.one()]]],
        vec![ring.one()],
        vec![vec![vec![ring.zero()]]; base.nvars()],
        true,
    )
    .expect("well formed")
}

/// `Mat_n(Z)` with matrix-unit basis `E11, E12, ...` and entrywise action.
pub fn matrix_order(base: &PoissonAlgebra, n: usize) -> Result<PoissonOrder> {
    matrix_over(&rank_one_order(base), n)
}

/// `Mat_n(A)` with basis `E_ab ⊗ e_j` and entrywise action.
pub fn matrix_over(a: &PoissonOrder, n: usize) -> Result<PoissonOrder> {
    if n == 0 {
        return Err(Error::input("matrix size must be positive"));
    }
    let ring = a.ring().clone();
    let m = a.rank();
    let rank = n * n * m;
    let idx = |r: usize, c: usize, j: usize| (r * n + c) * m + j;
    let names: Vec<String> = (0..n)
        .flat_map(|r| (0..n).map(move |c| (r, c)))
        .flat_map(|(r, c)| {
            a.names.iter().map(move |name| {
                if m == 1 {
                    format!("E{}{}", r + 1, c + 1)
                } else {
                    format!("E{}{}_{}", r + 1, c + 1, name)
                }
            })
        })
        .collect();
    let zero = vec![ring.zero(); rank];
    let mut mult = vec![vec![zero.clone(); rank]; rank];
    for r in 0..n {
        for c in 0..n {
            for j in 0..m {
                for c2 in 0..n {
                    for k in 0..m {
                        let mut v = zero.clone();
                        for (l, mu) in a.mult[j][k].iter().enumerate() {
                            v[idx(r, c2, l)] = mu.clone();
                        }
                        mult[idx(r, c, j)][idx(c, c2, k)] = v;
                    }
                }
            }
        }
    }
    let mut unit = zero.clone();
    for r in 0..n {
        for (l, u) in a.unit.iter().enumerate() {
            unit[idx(r, r, l)] = u.clone();
        }
    }
    let ham = (0..a.base.nvars())
        .map(|i| {
            let mut row = vec![zero.clone(); rank];
            for r in 0..n {
                for c in 0..n {
                    for j in 0..m {
                        let mut v = zero.clone();
                        for (l, h) in a.ham[i][j].iter().enumerate() {
                            v[idx(r, c, l)] = h.clone();
                        }
                        row[idx(r, c, j)] = v;
                    }
                }
            }
            row
        })
        .collect();
    let out = assemble(&a.base, names, mult, unit, ham, a.central_ideals)?;
    verify(&out)?;
    Ok(out)
}

/// The opposite algebra, same action.
pub fn opposite_order(a: &PoissonOrder) -> Result<PoissonOrder> {
    let m = a.rank();
    let mult = (0..m)
        .map(|j| (0..m).map(|k| a.mult[k][j].clone()).collect())
        .collect();
    let out = assemble(
        &a.base,
        a.names.clone(),
        mult,
        a.unit.clone(),
        a.ham.clone(),
        a.central_ideals,
    )?;
    verify(&out)?;
    Ok(out)
}

/// `A ⊗_Z B` with `H(z)(a ⊗ b) = {z, a} ⊗ b + a ⊗ {z, b}`.
pub fn tensor_order(a: &PoissonOrder, b: &PoissonOrder) -> Result<PoissonOrder> {
    if a.base != b.base {
        return Err(Error::input("tensor factors must share the base Poisson algebra"));
    }
    let ring = a.ring().clone();
    let (ma, mb) = (a.rank(), b.rank());
    let rank = ma * mb;
    let idx = |j: usize, k: usize| j * mb + k;
    let names = a
        .names
        .iter()
        .flat_map(|x| {
            b.names.iter().map(move |y| match (x.as_str(), y.as_str()) {
                ("1", _) => y.clone(),
                (_, "1") => x.clone(),
                _ => format!("{x}*{y}"),
            })
        })
        .collect::<Vec<_>>();
    let mut dedup = names.clone();
    dedup.sort();
    dedup.dedup();
    let names = if dedup.len() == names.len() {
        names
    } else {
        a.names
            .iter()
            .flat_map(|x| b.names.iter().map(move |y| format!("{x}@{y}")))
            .collect()
    };
    let outer = |u: &[Polynomial], v: &[Polynomial]| -> OrderElement {
        let mut out = vec![ring.zero(); rank];
        for (j, uj) in u.iter().enumerate() {
            if uj.is_zero() {
                continue;
            }
            for (k, vk) in v.iter().enumerate() {
                if !vk.is_zero() {
                    out[idx(j, k)] = uj * vk;
                }
            }
        }
        out
    };
    let mut mult = vec![vec![vec![ring.zero(); rank]; rank]; rank];
    for j in 0..ma {
        for k in 0..mb {
            for j2 in 0..ma {
                for k2 in 0..mb {
                    mult[idx(j, k)][idx(j2, k2)] = outer(&a.mult[j][j2], &b.mult[k][k2]);
                }
            }
        }
    }
    let unit = outer(&a.unit, &b.unit);
    let ham = (0..a.base.nvars())
        .map(|i| {
            (0..rank)
                .map(|t| {
                    let (j, k) = (t / mb, t % mb);
                    let left = outer(&a.ham[i][j], &b.basis_element(k));
                    let right = outer(&a.basis_element(j), &b.ham[i][k]);
                    left.iter().zip(&right).map(|(x, y)| x + y).collect()
                })
                .collect()
        })
        .collect();
    let out = assemble(&a.base, names, mult, unit, ham, a.central_ideals && b.central_ideals)?;
    verify(&out)?;
    Ok(out)
}

/// Replaces the tables of an order without verification, for building
/// deliberately broken examples.
pub fn corrupt_ham(order: &PoissonOrder, i: usize, j: usize, value: OrderElement) -> PoissonOrder {
    let mut out = order.clone();
    out.ham[i][j] = value;
    out.central_ideals = false;
    out
}

pub fn corrupt_mult(order: &PoissonOrder, j: usize, k: usize, value: OrderElement) -> PoissonOrder {
    let mut out = order.clone();
    out.mult[j][k] = value;
    out.central_ideals = false;
    out
}

pub fn corrupt_unit(order: &PoissonOrder, value: OrderElement) -> PoissonOrder {
    let mut out = order.clone();
    out.unit = value;
    out.central_ideals = false;
    out
}

impl PoissonOrder {
    /// Rebuilds through [`make_order`], re-running every check.
    pub fn reverify(&self) -> Result<PoissonOrder> {
        make_order(
            &self.base,
            self.names.clone(),
            self.mult.clone(),
            self.unit.clone(),
            self.ham.clone(),
        )
    }
}
