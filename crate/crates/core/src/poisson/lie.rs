use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{Coeff, CoefficientField};
use crate::poly::{Polynomial, Ring};

use super::PoissonAlgebra;

/// A finite-dimensional Lie algebra given by structure constants
/// `[x_i, x_j] = Σ_k c[i][j][k] x_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    names: Vec<String>,
    field: CoefficientField,
    constants: Vec<Vec<Vec<Coeff>>>,
}

impl LieAlgebra {
    /// Validates antisymmetry and the Jacobi identity.
    pub fn new<S: AsRef<str>>(names: &[S], field: CoefficientField, constants: Vec<Vec<Vec<Coeff>>>) -> Result<Self> {
        let n = names.len();
        Ring::new(names, field)?;
        if constants.len() != n || constants.iter().any(|r| r.len() != n || r.iter().any(|c| c.len() != n)) {
            return Err(Error::input(format!("structure constants must have shape {n}x{n}x{n}")));
        }
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if constants[i][j][k] != -&constants[j][i][k] {
                        return Err(Error::validation(
                            "antisymmetry",
                            format!("c[{}][{}] is not minus c[{}][{}]", names[i], names[j], names[j], names[i]),
                        ));
                    }
                }
            }
        }
        let g = LieAlgebra {
            names,
            field,
            constants,
        };
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let unit = |a: usize| {
                        let mut v = vec![Coeff::zero(); n];
                        v[a] = Coeff::one();
                        v
                    };
                    let (a, b, c) = (unit(i), unit(j), unit(k));
                    let t1 = g.bracket(&a, &g.bracket(&b, &c));
                    let t2 = g.bracket(&b, &g.bracket(&c, &a));
                    let t3 = g.bracket(&c, &g.bracket(&a, &b));
                    if (0..n).any(|l| !(&(&t1[l] + &t2[l]) + &t3[l]).is_zero()) {
                        return Err(Error::validation(
                            "jacobi",
                            format!(
                                "Jacobi identity fails on ({}, {}, {})",
                                g.names[i], g.names[j], g.names[k]
                            ),
                        ));
                    }
                }
            }
        }
        Ok(g)
    }

    /// Reads brackets given as linear forms, e.g. `("h", "e", "2*e")`.
    pub fn parse(names: &[&str], brackets: &[(&str, &str, &str)]) -> Result<Self> {
        let ring = Ring::rational(names)?;
        let n = names.len();
        let mut c = vec![vec![vec![Coeff::zero(); n]; n]; n];
        for (a, b, text) in brackets {
            let i = ring
                .var_index(a)
                .ok_or_else(|| Error::input(format!("unknown generator `{a}`")))?;
            let j = ring
                .var_index(b)
                .ok_or_else(|| Error::input(format!("unknown generator `{b}`")))?;
            let p = ring.parse(text)?;
            let coords = linear_coordinates(&p)?;
            for k in 0..n {
                c[j][i][k] = -&coords[k];
                c[i][j][k] = coords[k].clone();
            }
        }
        LieAlgebra::new(names, CoefficientField::Rationals, c)
    }

    /// `sl_2` with basis `e, h, f`: `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`.
    pub fn sl2() -> Self {
        LieAlgebra::parse(&["e", "h", "f"], &[("h", "e", "2*e"), ("h", "f", "-2*f"), ("e", "f", "h")])
            .expect("sl2")
    }

    /// Heisenberg algebra `[x, y] = z`.
    pub fn heisenberg() -> Self {
        LieAlgebra::parse(&["x", "y", "z"], &[("x", "y", "z")]).expect("heisenberg")
    }

    /// Two-dimensional non-abelian algebra `[x, y] = y`.
    pub fn solvable() -> Self {
        LieAlgebra::parse(&["x", "y"], &[("x", "y", "y")]).expect("solvable")
    }

    pub fn abelian(names: &[&str]) -> Self {
        LieAlgebra::parse(names, &[]).expect("abelian")
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn field(&self) -> CoefficientField {
        self.field
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Coeff {
        &self.constants[i][j][k]
    }

    /// Bracket of coordinate vectors.
    pub fn bracket(&self, u: &[Coeff], v: &[Coeff]) -> Vec<Coeff> {
        let n = self.dim();
        let mut out = vec![Coeff::zero(); n];
        for i in 0..n {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if v[j].is_zero() {
                    continue;
                }
                let s = &u[i] * &v[j];
                for (k, o) in out.iter_mut().enumerate() {
                    let c = &self.constants[i][j][k];
                    if !c.is_zero() {
                        *o += &(&s * c);
                    }
                }
            }
        }
        out
    }

    /// The Lie-Poisson structure on the symmetric algebra, `B_ij = Σ_k c_ij^k x_k`.
    pub fn poisson_algebra(&self) -> PoissonAlgebra {
        let ring = Ring::new(&self.names, self.field).expect("validated names");
        let table = self.table(&ring);
        PoissonAlgebra::skew(&ring, table).expect("antisymmetric")
    }

    fn table(&self, ring: &Arc<Ring>) -> Vec<Vec<Polynomial>> {
        let n = self.dim();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut acc = ring.zero();
                        for k in 0..n {
                            let c = &self.constants[i][j][k];
                            if !c.is_zero() {
                                acc = &acc + &ring.var(k).scale(c);
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect()
    }
}

fn linear_coordinates(p: &Polynomial) -> Result<Vec<Coeff>> {
    let n = p.ring().nvars();
    let mut out = vec![Coeff::zero(); n];
    for (m, c) in p.terms() {
        if m.degree() != 1 {
            return Err(Error::input(format!("Lie bracket value `{p}` is not a linear form")));
        }
        let k = (0..n).find(|&k| m.exponent(k) == 1).expect("degree one");
        out[k] = c.clone();
    }
    Ok(out)
}

/// The Lie-Poisson algebra of the given structure constants; rejects
/// constants that violate antisymmetry or Jacobi.
pub fn lie_poisson(names: &[&str], constants: Vec<Vec<Vec<Coeff>>>) -> Result<PoissonAlgebra> {
    Ok(LieAlgebra::new(names, CoefficientField::Rationals, constants)?.poisson_algebra())
}
