use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::field::Coeff;

use super::groebner::{buchberger, reduce, satisfies_buchberger_criterion, ModuleOrder, Vector};
use super::ideal::Ideal;
use super::monomial::{Monomial, MonomialOrder};
use super::polynomial::{Polynomial, Ring};

/// A submodule of the free module `R^rank`, elements given as component
/// vectors.
#[derive(Clone, Debug)]
pub struct Submodule {
    ring: Arc<Ring>,
    rank: usize,
    generators: Vec<Vec<Polynomial>>,
    pot: OnceLock<Vec<Vector>>,
    top: OnceLock<Vec<Vector>>,
}

fn pot_order() -> ModuleOrder {
    ModuleOrder::pot(MonomialOrder::DegRevLex)
}

fn top_order() -> ModuleOrder {
    ModuleOrder::top(MonomialOrder::DegRevLex)
}

impl Submodule {
    pub fn new(ring: &Arc<Ring>, rank: usize, generators: Vec<Vec<Polynomial>>) -> Result<Self> {
        for g in &generators {
            if g.len() != rank {
                return Err(Error::input(format!(
                    "vector of length {} in a module of rank {rank}",
                    g.len()
                )));
            }
            if let Some(p) = g.iter().find(|p| !Ring::same(p.ring(), ring)) {
                return Err(Error::input(format!("component `{p}` lives in a different ring")));
            }
        }
        Ok(Submodule {
            ring: ring.clone(),
            rank,
            generators: generators
                .into_iter()
                .filter(|g| g.iter().any(|p| !p.is_zero()))
                .collect(),
            pot: OnceLock::new(),
            top: OnceLock::new(),
        })
    }

    pub fn zero(ring: &Arc<Ring>, rank: usize) -> Self {
        Submodule::new(ring, rank, Vec::new()).expect("empty")
    }

    /// The whole free module, generated by the standard basis.
    pub fn free(ring: &Arc<Ring>, rank: usize) -> Self {
        Submodule::new(ring, rank, unit_vectors(ring, rank)).expect("standard basis")
    }

    /// `I * R^rank`.
    pub fn from_ideal(ideal: &Ideal, rank: usize) -> Self {
        let ring = ideal.ring();
        let mut gens = Vec::new();
        for g in ideal.groebner_basis() {
            for k in 0..rank {
                let mut v = vec![ring.zero(); rank];
                v[k] = g.clone();
                gens.push(v);
            }
        }
        Submodule::new(ring, rank, gens).expect("same ring")
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generators(&self) -> &[Vec<Polynomial>] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    fn pot_basis(&self) -> &[Vector] {
        self.pot.get_or_init(|| {
            let ord = pot_order();
            let gens: Vec<Vector> = self
                .generators
                .iter()
                .map(|g| Vector::from_components(g, &ord))
                .collect();
            buchberger(&gens, &ord, self.rank == 1)
        })
    }

    fn top_basis(&self) -> &[Vector] {
        self.top.get_or_init(|| {
            let ord = top_order();
            let gens: Vec<Vector> = self
                .generators
                .iter()
                .map(|g| Vector::from_components(g, &ord))
                .collect();
            buchberger(&gens, &ord, self.rank == 1)
        })
    }

    /// Reduced Gröbner basis under position-over-term degrevlex.
    pub fn groebner_basis(&self) -> Vec<Vec<Polynomial>> {
        self.pot_basis()
            .iter()
            .map(|v| v.to_components(&self.ring, self.rank))
            .collect()
    }

    pub fn satisfies_buchberger_criterion(&self) -> bool {
        satisfies_buchberger_criterion(self.pot_basis(), &pot_order())
    }

    fn check_vector(&self, v: &[Polynomial]) -> Result<()> {
        if v.len() != self.rank {
            return Err(Error::input(format!(
                "vector of length {} in a module of rank {}",
                v.len(),
                self.rank
            )));
        }
        for p in v {
            if !Ring::same(p.ring(), &self.ring) {
                return Err(Error::input(format!("component `{p}` lives in a different ring")));
            }
        }
        Ok(())
    }

    pub fn normal_form(&self, v: &[Polynomial]) -> Result<Vec<Polynomial>> {
        self.check_vector(v)?;
        let ord = pot_order();
        Ok(reduce(&Vector::from_components(v, &ord), self.pot_basis(), &ord, None)
            .to_components(&self.ring, self.rank))
    }

    pub fn contains(&self, v: &[Polynomial]) -> bool {
        self.normal_form(v)
            .map(|r| r.iter().all(Polynomial::is_zero))
            .unwrap_or(false)
    }

    pub fn contains_module(&self, other: &Submodule) -> bool {
        other.rank == self.rank && other.generators.iter().all(|g| self.contains(g))
    }

    pub fn same(&self, other: &Submodule) -> bool {
        self.rank == other.rank
            && Ring::same(&self.ring, &other.ring)
            && self.pot_basis() == other.pot_basis()
    }

    pub fn sum(&self, other: &Submodule) -> Submodule {
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Submodule::new(&self.ring, self.rank, gens).expect("same shape")
    }

    /// Replaces the generators by the reduced basis.
    pub fn reduced(&self) -> Submodule {
        let basis = self.pot_basis().to_vec();
        let gens = basis
            .iter()
            .map(|v| v.to_components(&self.ring, self.rank))
            .collect();
        let pot = OnceLock::new();
        let _ = pot.set(basis);
        Submodule {
            ring: self.ring.clone(),
            rank: self.rank,
            generators: gens,
            pot,
            top: OnceLock::new(),
        }
    }

    /// A spanning set, over the coefficient field, of the elements of total
    /// degree at most `d`.
    pub fn span_up_to_degree(&self, d: u32) -> Vec<Vec<Polynomial>> {
        let n = self.ring.nvars();
        let mut out = Vec::new();
        for g in self.top_basis() {
            let gd = g.max_degree();
            if gd > d {
                continue;
            }
            let comps = g.to_components(&self.ring, self.rank);
            for m in monomials_up_to(n, d - gd) {
                out.push(
                    comps
                        .iter()
                        .map(|p| p.mul_term(&Coeff::one(), &m))
                        .collect(),
                );
            }
        }
        out
    }
}

impl PartialEq for Submodule {
    fn eq(&self, other: &Self) -> bool {
        self.same(other)
    }
}

pub(crate) fn unit_vectors(ring: &Arc<Ring>, rank: usize) -> Vec<Vec<Polynomial>> {
    (0..rank)
        .map(|k| {
            let mut v = vec![ring.zero(); rank];
            v[k] = ring.one();
            v
        })
        .collect()
}

/// All monomials in `n` variables of total degree at most `d`, ascending degree.
pub fn monomials_up_to(n: usize, d: u32) -> Vec<Monomial> {
    let mut out = vec![Monomial::one(n)];
    let mut layer = vec![Monomial::one(n)];
    for _ in 0..d {
        let mut next = Vec::new();
        for m in &layer {
            // extend only at or after the last occupied variable to avoid repeats
            let start = (0..n).rev().find(|&i| m.exponent(i) > 0).unwrap_or(0);
            for i in start..n {
                next.push(m.mul(&Monomial::variable(n, i)));
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// `{g ∈ R^m : Σ_j g_j rows[j] ∈ target}`, where each row has the rank of
/// `target`.
pub fn preimage(ring: &Arc<Ring>, rows: &[Vec<Polynomial>], target: &Submodule) -> Result<Submodule> {
    let n = target.rank();
    let m = rows.len();
    if !Ring::same(ring, target.ring()) {
        return Err(Error::input("target module lives in a different ring"));
    }
    for (j, r) in rows.iter().enumerate() {
        if r.len() != n {
            return Err(Error::input(format!(
                "row {j} has length {}, expected {n}",
                r.len()
            )));
        }
        if let Some(p) = r.iter().find(|p| !Ring::same(p.ring(), ring)) {
            return Err(Error::input(format!("entry `{p}` lives in a different ring")));
        }
    }
    if m == 0 {
        return Ok(Submodule::zero(ring, 0));
    }
    let ord = pot_order();
    let mut gens: Vec<Vector> = Vec::with_capacity(m + target.generators().len());
    for (j, r) in rows.iter().enumerate() {
        let mut comps = r.clone();
        comps.extend((0..m).map(|k| if k == j { ring.one() } else { ring.zero() }));
        gens.push(Vector::from_components(&comps, &ord));
    }
    for t in target.pot_basis() {
        gens.push(t.clone());
    }
    let basis = buchberger(&gens, &ord, false);
    let kernel = basis
        .iter()
        .filter(|v| v.lead().is_some_and(|(p, _, _)| *p >= n))
        .map(|v| v.to_components(ring, n + m).split_off(n))
        .collect();
    Submodule::new(ring, m, kernel)
}

/// Generators of `{g ∈ R^m : Σ_j g_j rows[j] ∈ I·R^n}`.
pub fn syzygy_kernel(rows: &[Vec<Polynomial>], ideal: &Ideal) -> Result<Submodule> {
    let n = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != n) {
        return Err(Error::input("rows of a syzygy problem must have equal length"));
    }
    if n == 0 {
        return Ok(Submodule::free(ideal.ring(), rows.len()));
    }
    preimage(ideal.ring(), rows, &Submodule::from_ideal(ideal, n))
}
