//! Comparison of `k[g*]^e` with `U(g ⊗ k[ε]/(ε²))`.

use std::fmt;

use crate::error::Result;
use crate::field::Coeff;
use crate::poisson::LieAlgebra;

use super::{EnvElement, Envelope};

/// A basis pair of `g_D` whose bracket is not preserved.
#[derive(Clone, Debug)]
pub struct UgdMismatch {
    pub left: String,
    pub right: String,
    pub defect: String,
}

impl fmt::Display for UgdMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]: defect {}", self.left, self.right, self.defect)
    }
}

/// Checks `[i(u), i(v)] = i([u, v])` for all basis pairs of `g_D`, where
/// `i(x + εy) = δ(x) + α(y)`. An empty list means the map respects brackets.
pub fn ugd_compare(g: &LieAlgebra) -> Result<Vec<UgdMismatch>> {
    let p = g.poisson_algebra();
    let env = Envelope::of_algebra(&p);
    let ring = p.ring().clone();
    let n = g.dim();
    let names = g.names();
    // basis of g_D: x_k for k < n, then εx_k
    let image = |t: usize| -> EnvElement {
        if t < n {
            env.delta(t)
        } else {
            env.alpha_poly(&ring.var(t - n))
        }
    };
    let label = |t: usize| if t < n { names[t].clone() } else { format!("ε{}", names[t - n]) };
    // [u, v] in g_D, as coordinates on the same basis
    let bracket = |s: usize, t: usize| -> Vec<Coeff> {
        let mut out = vec![Coeff::zero(); 2 * n];
        if s >= n && t >= n {
            return out;
        }
        let (a, b) = (s % n, t % n);
        let shift = if s >= n || t >= n { n } else { 0 };
        for (k, c) in g.bracket(&unit(n, a), &unit(n, b)).into_iter().enumerate() {
            out[shift + k] = c;
        }
        out
    };
    let mut mismatches = Vec::new();
    for s in 0..2 * n {
        for t in s + 1..2 * n {
            let (u, v) = (image(s), image(t));
            let comm = env.mul(&u, &v)?.sub(&env.mul(&v, &u)?);
            let mut want = env.zero();
            for (k, c) in bracket(s, t).iter().enumerate() {
                if !c.is_zero() {
                    want = want.add(&image(k).scale(c));
                }
            }
            let defect = comm.sub(&want);
            if !defect.is_zero() {
                mismatches.push(UgdMismatch {
                    left: label(s),
                    right: label(t),
                    defect: defect.to_string(),
                });
            }
        }
    }
    Ok(mismatches)
}

fn unit(n: usize, k: usize) -> Vec<Coeff> {
    (0..n).map(|i| if i == k { Coeff::one() } else { Coeff::zero() }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_lie_algebras_pass() {
        for g in [
            LieAlgebra::sl2(),
            LieAlgebra::heisenberg(),
            LieAlgebra::solvable(),
            LieAlgebra::abelian(&["a", "b"]),
        ] {
            assert!(ugd_compare(&g).unwrap().is_empty());
        }
    }
}
