//! Poisson brackets on polynomial rings.

mod lie;
mod localize;

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Coeff;
use crate::poly::linalg::{nullspace, span_basis, MonomialIndex};
use crate::poly::{monomials_up_to, Matrix, Polynomial, Ring};

pub use lie::{lie_poisson, LieAlgebra};
pub use localize::{Fraction, LocalizedPoissonAlgebra};

/// A polynomial ring with an antisymmetric table `B[i][j] = {x_i, x_j}`,
/// extended to all polynomials as a biderivation.
#[derive(Clone, Debug)]
pub struct PoissonAlgebra {
    ring: Arc<Ring>,
    table: Vec<Vec<Polynomial>>,
}

/// A generator triple on which the Jacobi identity fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiViolation {
    pub triple: (usize, usize, usize),
    pub defect: Polynomial,
}

impl fmt::Display for JacobiViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (i, j, k) = self.triple;
        let v = self.defect.ring().variables();
        write!(f, "({}, {}, {}): {}", v[i], v[j], v[k], self.defect)
    }
}

/// A derivation of the polynomial ring, stored by its values on generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    components: Vec<Polynomial>,
}

impl Derivation {
    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    /// `Σ_i c_i ∂g/∂x_i`.
    pub fn apply(&self, g: &Polynomial) -> Polynomial {
        let mut acc = g.ring().zero();
        for (i, c) in self.components.iter().enumerate() {
            if !c.is_zero() {
                acc = &acc + &(c * &g.derivative(i));
            }
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Polynomial::is_zero)
    }
}

impl PoissonAlgebra {
    /// Validates shape, antisymmetry and the Jacobi identity.
    pub fn new(ring: &Arc<Ring>, table: Vec<Vec<Polynomial>>) -> Result<Self> {
        let p = PoissonAlgebra::skew(ring, table)?;
        if let Some(v) = p.jacobi_check().into_iter().next() {
            return Err(Error::validation("jacobi", format!("Jacobi identity fails on {v}")));
        }
        Ok(p)
    }

    /// Validates shape and antisymmetry only. Useful for studying tables that
    /// are not Poisson.
    pub fn skew(ring: &Arc<Ring>, table: Vec<Vec<Polynomial>>) -> Result<Self> {
        let n = ring.nvars();
        if table.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(Error::input(format!("bracket table must be {n}x{n}")));
        }
        let v = ring.variables();
        for i in 0..n {
            for j in 0..n {
                let b = &table[i][j];
                if !Ring::same(b.ring(), ring) {
                    return Err(Error::input(format!("entry {{{}, {}}} lives in another ring", v[i], v[j])));
                }
                if &table[j][i] != &-b {
                    return Err(Error::validation(
                        "antisymmetry",
                        format!("{{{0}, {1}}} = {2} but {{{1}, {0}}} = {3}", v[i], v[j], b, table[j][i]),
                    ));
                }
            }
        }
        Ok(PoissonAlgebra {
            ring: ring.clone(),
            table,
        })
    }

    /// Builds the table from upper-triangle entries `(x_i, x_j, {x_i, x_j})`;
    /// unspecified entries are zero.
    pub fn from_brackets(ring: &Arc<Ring>, entries: &[(&str, &str, &str)]) -> Result<Self> {
        let n = ring.nvars();
        let mut table = vec![vec![ring.zero(); n]; n];
        let mut seen = vec![vec![false; n]; n];
        for (a, b, text) in entries {
            let i = index_of(ring, a)?;
            let j = index_of(ring, b)?;
            if i == j {
                return Err(Error::validation("antisymmetry", format!("{{{a}, {a}}} must be zero")));
            }
            let p = ring.parse(text)?;
            if seen[i][j] {
                if table[i][j] != p {
                    return Err(Error::validation(
                        "antisymmetry",
                        format!("conflicting values for {{{a}, {b}}}"),
                    ));
                }
                continue;
            }
            seen[i][j] = true;
            seen[j][i] = true;
            table[j][i] = -&p;
            table[i][j] = p;
        }
        PoissonAlgebra::new(ring, table)
    }

    /// The zero bracket.
    pub fn trivial(ring: &Arc<Ring>) -> Self {
        let n = ring.nvars();
        PoissonAlgebra {
            ring: ring.clone(),
            table: vec![vec![ring.zero(); n]; n],
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn table(&self) -> &[Vec<Polynomial>] {
        &self.table
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.table[i][j]
    }

    pub fn is_trivial(&self) -> bool {
        self.table.iter().flatten().all(Polynomial::is_zero)
    }

    /// `{f, g} = Σ_{i<j} B_ij (∂_i f ∂_j g - ∂_j f ∂_i g)`.
    pub fn bracket(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        assert!(
            Ring::same(f.ring(), &self.ring) && Ring::same(g.ring(), &self.ring),
            "bracket arguments must live in the algebra's ring"
        );
        let n = self.nvars();
        let df: Vec<Polynomial> = (0..n).map(|i| f.derivative(i)).collect();
        let dg: Vec<Polynomial> = (0..n).map(|i| g.derivative(i)).collect();
        let mut acc = self.ring.zero();
        for i in 0..n {
            for j in i + 1..n {
                let b = &self.table[i][j];
                if b.is_zero() {
                    continue;
                }
                let w = &(&df[i] * &dg[j]) - &(&df[j] * &dg[i]);
                if !w.is_zero() {
                    acc = &acc + &(b * &w);
                }
            }
        }
        acc
    }

    /// `{x_i, p}`.
    pub fn bracket_var(&self, i: usize, p: &Polynomial) -> Polynomial {
        let mut acc = self.ring.zero();
        for (l, b) in self.table[i].iter().enumerate() {
            if !b.is_zero() {
                let d = p.derivative(l);
                if !d.is_zero() {
                    acc = &acc + &(b * &d);
                }
            }
        }
        acc
    }

    /// Generator triples `i < j < k` whose Jacobiator is nonzero.
    pub fn jacobi_check(&self) -> Vec<JacobiViolation> {
        let n = self.nvars();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let defect = &(&self.bracket_var(i, &self.table[j][k])
                        + &self.bracket_var(j, &self.table[k][i]))
                        + &self.bracket_var(k, &self.table[i][j]);
                    if !defect.is_zero() {
                        out.push(JacobiViolation {
                            triple: (i, j, k),
                            defect,
                        });
                    }
                }
            }
        }
        out
    }

    /// `H(z) = {z, ·}`, with components `{z, x_i}`.
    pub fn hamiltonian(&self, z: &Polynomial) -> Derivation {
        let n = self.nvars();
        let components = (0..n).map(|i| -&self.bracket_var(i, z)).collect();
        Derivation { components }
    }

    /// Basis of the Casimirs of degree at most `d`, in echelon form.
    pub fn poisson_centre(&self, d: u32) -> Vec<Polynomial> {
        let n = self.nvars();
        let monos = monomials_up_to(n, d);
        let images: Vec<Vec<Polynomial>> = monos
            .iter()
            .map(|m| {
                let p = self.ring.term(Coeff::one(), m.clone());
                (0..n).map(|i| self.bracket_var(i, &p)).collect()
            })
            .collect();
        let all: Vec<Polynomial> = images.iter().flatten().cloned().collect();
        let idx = MonomialIndex::new(&self.ring, &all);
        // one column per candidate monomial, rows indexed by (generator, output monomial)
        let ncols = monos.len();
        let mut rows = vec![vec![Coeff::zero(); ncols]; n * idx.len()];
        for (c, imgs) in images.iter().enumerate() {
            for (i, p) in imgs.iter().enumerate() {
                for (r, v) in idx.coords(p).expect("indexed").into_iter().enumerate() {
                    rows[i * idx.len() + r][c] = v;
                }
            }
        }
        let kernel: Vec<Polynomial> = nullspace(&rows, ncols)
            .into_iter()
            .map(|v| {
                Polynomial::from_terms(
                    &self.ring,
                    monos.iter().cloned().zip(v).filter(|(_, c)| !c.is_zero()),
                )
            })
            .collect();
        let mut basis = span_basis(&self.ring, &kernel);
        basis.sort_by_key(|p| p.total_degree());
        basis
    }

    /// The bracket matrix evaluated at a point.
    pub fn matrix_at(&self, point: &[Coeff]) -> Result<Matrix> {
        let n = self.nvars();
        if point.len() != n {
            return Err(Error::input(format!(
                "point has {} coordinates, algebra has {n} variables",
                point.len()
            )));
        }
        if let Some(c) = point.iter().find(|c| !self.ring.field().contains(c)) {
            return Err(Error::input(format!("coordinate {c} is outside {}", self.ring.field())));
        }
        Ok(Matrix::from_rows(
            self.table
                .iter()
                .map(|row| row.iter().map(|b| b.eval(point)).collect())
                .collect(),
        ))
    }

    /// Dimension of the symplectic leaf through `point`.
    pub fn leaf_rank(&self, point: &[Coeff]) -> Result<usize> {
        Ok(self.matrix_at(point)?.rank())
    }

    pub fn localize(&self, s: &Polynomial) -> Result<LocalizedPoissonAlgebra> {
        LocalizedPoissonAlgebra::new(self, s)
    }

    /// Upper-triangle nonzero entries `(i, j, B_ij)`.
    pub fn upper_entries(&self) -> Vec<(usize, usize, &Polynomial)> {
        let n = self.nvars();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if !self.table[i][j].is_zero() {
                    out.push((i, j, &self.table[i][j]));
                }
            }
        }
        out
    }
}

impl PartialEq for PoissonAlgebra {
    fn eq(&self, other: &Self) -> bool {
        Ring::same(&self.ring, &other.ring) && self.table == other.table
    }
}

impl fmt::Display for PoissonAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.ring.variables();
        write!(f, "Poisson algebra on [{}] over {}", v.join(", "), self.ring.field())?;
        for (i, j, b) in self.upper_entries() {
            write!(f, "\n  {{{}, {}}} = {}", v[i], v[j], b)?;
        }
        Ok(())
    }
}

fn index_of(ring: &Arc<Ring>, name: &str) -> Result<usize> {
    ring.var_index(name)
        .ok_or_else(|| Error::input(format!("unknown variable `{name}`")))
}
