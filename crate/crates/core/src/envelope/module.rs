//! Finite-dimensional Poisson modules, their annihilators and torsion ideals.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Coeff;
use crate::ideals::{poisson_core_with, CoreOptions};
use crate::order::PoissonOrder;
use crate::poisson::PoissonAlgebra;
use crate::poly::linalg::{nullspace, rank};
use crate::poly::{monomials_up_to, Ideal, Matrix, Monomial, Polynomial, Ring};

/// A module of dimension `dim` given by the action of the generators of `Z`
/// (`x`), the connection on generators (`d`, the action of `∇(x_i)`) and the
/// action of the basis of the order (`a`; a single identity for `Z` itself).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoissonModule {
    dim: usize,
    x: Vec<Matrix>,
    d: Vec<Matrix>,
    a: Vec<Matrix>,
}

impl PoissonModule {
    /// A module over `Z` itself.
    pub fn new(x: Vec<Matrix>, d: Vec<Matrix>) -> Result<PoissonModule> {
        let dim = x.first().or(d.first()).map_or(0, Matrix::nrows);
        PoissonModule::with_basis_action(x, d, vec![Matrix::identity(dim)])
    }

    pub fn with_basis_action(x: Vec<Matrix>, d: Vec<Matrix>, a: Vec<Matrix>) -> Result<PoissonModule> {
        let dim = x.first().or(d.first()).or(a.first()).map_or(0, Matrix::nrows);
        if x.len() != d.len() {
            return Err(Error::input(format!(
                "{} generator matrices but {} connection matrices",
                x.len(),
                d.len()
            )));
        }
        for m in x.iter().chain(&d).chain(&a) {
            if m.nrows() != dim || m.ncols() != dim {
                return Err(Error::input(format!("every matrix must be {dim}x{dim}")));
            }
        }
        Ok(PoissonModule { dim, x, d, a })
    }

    /// The one-dimensional module at `point` with zero connection.
    pub fn point(point: &[Coeff]) -> PoissonModule {
        let x = point.iter().map(|c| Matrix::scalar(1, c)).collect();
        let d = vec![Matrix::zeros(1, 1); point.len()];
        PoissonModule::new(x, d).expect("square")
    }

    /// `Z` acting through the origin and `∇(x_i)` acting by `rep[i]`; a
    /// module over a Lie–Poisson algebra when `rep` is a representation.
    pub fn lie_representation(rep: Vec<Matrix>) -> Result<PoissonModule> {
        let dim = rep.first().map_or(0, Matrix::nrows);
        let x = vec![Matrix::zeros(dim, dim); rep.len()];
        PoissonModule::new(x, rep)
    }

    /// The direct sum, block diagonally.
    pub fn direct_sum(&self, other: &PoissonModule) -> Result<PoissonModule> {
        if self.x.len() != other.x.len() || self.a.len() != other.a.len() {
            return Err(Error::input("summands act through different algebras"));
        }
        let block = |p: &Matrix, q: &Matrix| {
            let mut m = Matrix::zeros(self.dim + other.dim, self.dim + other.dim);
            for i in 0..self.dim {
                for j in 0..self.dim {
                    m.set(i, j, p.get(i, j).clone());
                }
            }
            for i in 0..other.dim {
                for j in 0..other.dim {
                    m.set(self.dim + i, self.dim + j, q.get(i, j).clone());
                }
            }
            m
        };
        PoissonModule::with_basis_action(
            self.x.iter().zip(&other.x).map(|(p, q)| block(p, q)).collect(),
            self.d.iter().zip(&other.d).map(|(p, q)| block(p, q)).collect(),
            self.a.iter().zip(&other.a).map(|(p, q)| block(p, q)).collect(),
        )
    }

    pub fn dimension(&self) -> usize {
        self.dim
    }

    pub fn generator_action(&self) -> &[Matrix] {
        &self.x
    }

    pub fn connection(&self) -> &[Matrix] {
        &self.d
    }

    pub fn basis_action(&self) -> &[Matrix] {
        &self.a
    }

    /// `p(X_1, ..., X_n)`.
    pub fn evaluate(&self, p: &Polynomial) -> Matrix {
        eval_at(p, &self.x, self.dim)
    }

    /// `∇(p) = Σ_k ∂_k p(X) D_k`.
    pub fn nabla(&self, p: &Polynomial) -> Matrix {
        let mut acc = Matrix::zeros(self.dim, self.dim);
        for (k, dk) in self.d.iter().enumerate() {
            let der = p.derivative(k);
            if !der.is_zero() {
                acc = acc.add(&self.evaluate(&der).mul(dk));
            }
        }
        acc
    }

    /// The action of an element of the order.
    pub fn act(&self, element: &[Polynomial]) -> Matrix {
        let mut acc = Matrix::zeros(self.dim, self.dim);
        for (c, e) in element.iter().zip(&self.a) {
            if !c.is_zero() {
                acc = acc.add(&self.evaluate(c).mul(e));
            }
        }
        acc
    }
}

fn monomial_matrix(m: &Monomial, x: &[Matrix], dim: usize) -> Matrix {
    let mut acc = Matrix::identity(dim);
    for (i, xi) in x.iter().enumerate() {
        let e = m.exponent(i);
        if e > 0 {
            acc = acc.mul(&xi.pow(e));
        }
    }
    acc
}

fn eval_at(p: &Polynomial, x: &[Matrix], dim: usize) -> Matrix {
    let mut acc = Matrix::zeros(dim, dim);
    for (m, c) in p.terms() {
        acc = acc.add(&monomial_matrix(m, x, dim).scale(c));
    }
    acc
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleViolation {
    pub axiom: &'static str,
    pub indices: Vec<usize>,
    pub detail: String,
}

impl fmt::Display for ModuleViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {:?}: {}", self.axiom, self.indices, self.detail)
    }
}

/// Every failed axiom, or an empty list when `m` is a Poisson `A`-module.
pub fn module_check(m: &PoissonModule, order: &PoissonOrder) -> Vec<ModuleViolation> {
    let p = order.base();
    let n = p.nvars();
    let vars = p.ring().variables();
    let names = order.basis_names();
    let mut out = Vec::new();
    let mut fail = |axiom, indices: Vec<usize>, detail: String| {
        out.push(ModuleViolation { axiom, indices, detail });
    };
    if m.x.len() != n || m.a.len() != order.rank() {
        fail(
            "shape",
            vec![],
            format!(
                "expected {n} generator and connection matrices and {} basis matrices",
                order.rank()
            ),
        );
        return out;
    }
    let dim = m.dim;
    for i in 0..n {
        for k in i + 1..n {
            if !m.x[i].commutator(&m.x[k]).is_zero() {
                fail("commuting", vec![i, k], format!("{} and {} do not commute", vars[i], vars[k]));
            }
        }
        for (j, e) in m.a.iter().enumerate() {
            if !m.x[i].commutator(e).is_zero() {
                fail("central", vec![i, j], format!("{} does not commute with {}", vars[i], names[j]));
            }
        }
    }
    if m.act(order.unit()) != Matrix::identity(dim) {
        fail("unit", vec![], "1_A does not act as the identity".into());
    }
    for j in 0..order.rank() {
        for k in 0..order.rank() {
            if m.a[j].mul(&m.a[k]) != m.act(order.product_of_basis(j, k)) {
                fail(
                    "multiplication",
                    vec![j, k],
                    format!("{}*{} does not act as the product", names[j], names[k]),
                );
            }
        }
    }
    let ring = p.ring();
    for i in 0..n {
        for k in 0..n {
            let xy = &ring.var(i) * &ring.var(k);
            let leibniz = m.x[i].mul(&m.d[k]).add(&m.x[k].mul(&m.d[i]));
            if m.nabla(&xy) != leibniz {
                fail(
                    "(i)",
                    vec![i, k],
                    format!("∇({}*{}) breaks the product rule", vars[i], vars[k]),
                );
            }
        }
    }
    for i in 0..n {
        for k in 0..n {
            let lhs = m.evaluate(p.entry(i, k));
            if m.d[i].commutator(&m.x[k]) != lhs {
                fail(
                    "(ii)",
                    vec![i, k],
                    format!("[∇({0}), {1}] differs from {{{0}, {1}}}", vars[i], vars[k]),
                );
            }
        }
        for j in 0..order.rank() {
            let lhs = m.act(&order.ham_var(i, &order.basis_element(j)));
            if m.d[i].commutator(&m.a[j]) != lhs {
                fail(
                    "(ii)",
                    vec![i, n + j],
                    format!("[∇({0}), {1}] differs from {{{0}, {1}}}", vars[i], names[j]),
                );
            }
        }
    }
    for i in 0..n {
        for k in i + 1..n {
            if m.d[i].commutator(&m.d[k]) != m.nabla(p.entry(i, k)) {
                fail(
                    "(iii)",
                    vec![i, k],
                    format!("[∇({0}), ∇({1})] differs from ∇({{{0}, {1}}})", vars[i], vars[k]),
                );
            }
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct Annihilator {
    pub ideal: Ideal,
    /// The ideal is provably the whole annihilator, not only the part
    /// generated below the degree reached.
    pub complete: bool,
    pub degree: u32,
}

/// `{p : p(X) v = 0}` for every `v` in the image of `eval`, searched by
/// degree from `start` until the quotient by the kernel maps injectively.
fn kernel_ideal(
    ring: &Arc<Ring>,
    start: u32,
    limit: u32,
    eval: impl Fn(&Monomial) -> Vec<Coeff>,
) -> Annihilator {
    let n = ring.nvars();
    let mut degree = start.max(1);
    loop {
        let monos = monomials_up_to(n, degree);
        let images: Vec<Vec<Coeff>> = monos.iter().map(&eval).collect();
        let len = images.first().map_or(0, Vec::len);
        let rows: Vec<Vec<Coeff>> = (0..len).map(|r| images.iter().map(|v| v[r].clone()).collect()).collect();
        let gens: Vec<Polynomial> = if len == 0 {
            vec![ring.one()]
        } else {
            nullspace(&rows, monos.len())
                .into_iter()
                .map(|v| Polynomial::from_terms(ring, monos.iter().cloned().zip(v)))
                .collect()
        };
        let ideal = Ideal::new(ring, gens).expect("same ring").reduced();
        let exact = match ideal.standard_monomials() {
            Some(sm) => {
                let vecs: Vec<Vec<Coeff>> = sm.iter().map(&eval).collect();
                rank(&vecs) == sm.len()
            }
            None => false,
        };
        if exact || degree >= limit {
            return Annihilator {
                ideal,
                complete: exact,
                degree,
            };
        }
        degree += 1;
    }
}

/// The annihilator of `m` in `Z`, searched from `degree_cap` upwards. The
/// quotient `Z/Ann` embeds in `End(M)`, so the search stops by degree
/// `dim²` at the latest.
pub fn module_annihilator_z(m: &PoissonModule, p: &PoissonAlgebra, degree_cap: u32) -> Annihilator {
    let dim = m.dim;
    let limit = (dim * dim).max(1) as u32;
    kernel_ideal(p.ring(), degree_cap, limit.max(degree_cap), |mono| {
        monomial_matrix(mono, &m.x, dim).entries().to_vec()
    })
}

#[derive(Clone, Debug)]
pub struct Torsion {
    pub ideal: Ideal,
    pub witness: Vec<Coeff>,
    pub complete: bool,
}

/// `Ann_Z(v)` for candidate vectors `v` (basis vectors and their pairwise
/// sums), returning one that is maximal among the candidates.
pub fn torsion_ideal(m: &PoissonModule, p: &PoissonAlgebra) -> Torsion {
    let dim = m.dim;
    let ring = p.ring();
    if dim == 0 {
        return Torsion {
            ideal: Ideal::unit(ring),
            witness: Vec::new(),
            complete: true,
        };
    }
    let unit = |k: usize| (0..dim).map(|i| if i == k { Coeff::one() } else { Coeff::zero() }).collect::<Vec<_>>();
    let mut candidates: Vec<Vec<Coeff>> = (0..dim).map(unit).collect();
    for a in 0..dim {
        for b in a + 1..dim {
            candidates.push(unit(a).iter().zip(unit(b)).map(|(x, y)| x + &y).collect());
        }
    }
    let anns: Vec<Annihilator> = candidates
        .iter()
        .map(|v| {
            kernel_ideal(ring, 1, dim.max(1) as u32, |mono| {
                monomial_matrix(mono, &m.x, dim).mul_vec(v)
            })
        })
        .collect();
    let best = (0..anns.len())
        .find(|&i| {
            !(0..anns.len()).any(|j| {
                anns[j].ideal.contains_ideal(&anns[i].ideal) && !anns[i].ideal.contains_ideal(&anns[j].ideal)
            })
        })
        .unwrap_or(0);
    let a = anns.into_iter().nth(best).expect("non-empty");
    Torsion {
        ideal: a.ideal,
        witness: candidates.swap_remove(best),
        complete: a.complete,
    }
}

#[derive(Clone, Debug)]
pub struct IvIdealReport {
    pub torsion: Ideal,
    pub core: Ideal,
    pub annihilator: Ideal,
    pub holds: bool,
}

/// Compares the Poisson core of the torsion ideal with the annihilator.
/// Meaningful for simple modules, which the caller asserts.
pub fn ividealiii_check(m: &PoissonModule, p: &PoissonAlgebra, options: &CoreOptions) -> Result<IvIdealReport> {
    let t = torsion_ideal(m, p);
    let core = poisson_core_with(&t.ideal, p, options)?.ideal;
    let ann = module_annihilator_z(m, p, m.dim.max(1) as u32).ideal;
    let holds = core == ann;
    Ok(IvIdealReport {
        torsion: t.ideal,
        core,
        annihilator: ann,
        holds,
    })
}

/// `A ⊗_Z M` with `∇(x)(a ⊗ v) = {x, a} ⊗ v + a ⊗ ∇(x) v`, on the basis
/// `e_j ⊗ v_r` indexed by `j·dim + r`.
pub fn induced_module(order: &PoissonOrder, m: &PoissonModule) -> Result<PoissonModule> {
    let n = order.base().nvars();
    if m.x.len() != n {
        return Err(Error::input(format!("module has {} generators, the order {n}", m.x.len())));
    }
    if m.a.len() != 1 {
        return Err(Error::input("induction needs a module over the base algebra"));
    }
    let rank = order.rank();
    let dim = m.dim;
    let total = rank * dim;
    let place = |target: &mut Matrix, l: usize, j: usize, block: &Matrix| {
        for r in 0..dim {
            for c in 0..dim {
                let v = block.get(r, c);
                if !v.is_zero() {
                    let cur = target.get(l * dim + r, j * dim + c).clone();
                    target.set(l * dim + r, j * dim + c, &cur + v);
                }
            }
        }
    };
    let x = m
        .x
        .iter()
        .map(|xi| {
            let mut t = Matrix::zeros(total, total);
            for j in 0..rank {
                place(&mut t, j, j, xi);
            }
            t
        })
        .collect();
    let a = (0..rank)
        .map(|k| {
            let mut t = Matrix::zeros(total, total);
            for j in 0..rank {
                for (l, mu) in order.product_of_basis(k, j).iter().enumerate() {
                    if !mu.is_zero() {
                        place(&mut t, l, j, &m.evaluate(mu));
                    }
                }
            }
            t
        })
        .collect();
    let d = (0..n)
        .map(|i| {
            let mut t = Matrix::zeros(total, total);
            for j in 0..rank {
                place(&mut t, j, j, &m.d[i]);
                for (l, h) in order.ham_entry(i, j).iter().enumerate() {
                    if !h.is_zero() {
                        place(&mut t, l, j, &m.evaluate(h));
                    }
                }
            }
            t
        })
        .collect();
    PoissonModule::with_basis_action(x, d, a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::{matrix_order, rank_one_order};
    use crate::poisson::LieAlgebra;

    fn c(v: i64) -> Coeff {
        Coeff::from_int(v)
    }

    #[test]
    fn point_modules_on_zero_dimensional_leaves() {
        let p = LieAlgebra::heisenberg().poisson_algebra();
        let z = rank_one_order(&p);
        assert!(module_check(&PoissonModule::point(&[c(2), c(-1), c(0)]), &z).is_empty());
        let bad = module_check(&PoissonModule::point(&[c(2), c(-1), c(3)]), &z);
        assert!(bad.iter().any(|v| v.axiom == "(ii)"));
    }

    #[test]
    fn sl2_doublet() {
        let p = LieAlgebra::sl2().poisson_algebra();
        let rep = vec![
            Matrix::from_i64(&[&[0, 1], &[0, 0]]),
            Matrix::from_i64(&[&[1, 0], &[0, -1]]),
            Matrix::from_i64(&[&[0, 0], &[1, 0]]),
        ];
        let m = PoissonModule::lie_representation(rep).unwrap();
        assert!(module_check(&m, &rank_one_order(&p)).is_empty());
        let rep = ividealiii_check(&m, &p, &CoreOptions::default()).unwrap();
        assert!(rep.holds);
        assert_eq!(rep.annihilator, Ideal::parse(p.ring(), &["e", "h", "f"]).unwrap());
    }

    #[test]
    fn annihilators_are_minimal_polynomials() {
        let r = Ring::rational(&["x"]).unwrap();
        let p = PoissonAlgebra::trivial(&r);
        let nil = PoissonModule::new(vec![Matrix::from_i64(&[&[0, 1], &[0, 0]])], vec![Matrix::zeros(2, 2)]).unwrap();
        let ann = module_annihilator_z(&nil, &p, 2);
        assert!(ann.complete);
        assert_eq!(ann.ideal, Ideal::parse(&r, &["x^2"]).unwrap());
        let t = torsion_ideal(&nil, &p);
        assert_eq!(t.ideal, Ideal::parse(&r, &["x"]).unwrap());
        assert_eq!(t.witness, vec![c(1), c(0)]);
        let proj = PoissonModule::new(vec![Matrix::from_i64(&[&[0, 0], &[0, 1]])], vec![Matrix::zeros(2, 2)]).unwrap();
        assert_eq!(module_annihilator_z(&proj, &p, 1).ideal, Ideal::parse(&r, &["x^2 - x"]).unwrap());
    }

    #[test]
    fn non_simple_sum_fails_the_identity() {
        let r = Ring::rational(&["x", "y"]).unwrap();
        let p = PoissonAlgebra::trivial(&r);
        let m = PoissonModule::point(&[c(1), c(0)])
            .direct_sum(&PoissonModule::point(&[c(0), c(2)]))
            .unwrap();
        assert!(!ividealiii_check(&m, &p, &CoreOptions::default()).unwrap().holds);
    }

    #[test]
    fn induced_matrix_module() {
        let p = LieAlgebra::heisenberg().poisson_algebra();
        let a = matrix_order(&p, 2).unwrap();
        let m = PoissonModule::point(&[c(1), c(2), c(0)]);
        let ind = induced_module(&a, &m).unwrap();
        assert_eq!(ind.dimension(), 4);
        assert!(module_check(&ind, &a).is_empty());
        let same = induced_module(&rank_one_order(&p), &m).unwrap();
        assert_eq!(same, m);
    }
}
