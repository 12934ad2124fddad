//! The Poisson core `P(I)`, the largest Poisson ideal inside `I`.
//!
//! Two monotone sequences squeeze the core. The upper sequence
//! `I_{k+1} = {f ∈ I_k : {x_i, f} ∈ I_k}` decreases to `P(I)` and is computed
//! with syzygies; it need not stabilise (for a point on a two-dimensional
//! leaf it runs through `J + m^k` forever). The lower sequence takes the
//! largest subspace `W` of `I ∩ Z_{≤d}` whose brackets land in the ideal
//! generated by `W`; that ideal is Poisson and inside `I`, and grows with `d`.
//! A result is returned only with a certificate that it equals `P(I)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Coeff;
use crate::poisson::PoissonAlgebra;
use crate::poly::linalg::{nullspace, span_basis, MonomialIndex};
use crate::poly::{monomials_up_to, syzygy_kernel, Ideal, Polynomial, Ring};

use super::certify::{certainly_prime, point_of, rational_points};
use super::is_poisson;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreOptions {
    /// Largest degree used for the lower bound.
    pub degree_cap: u32,
    /// Largest number of upper-iteration rounds before giving up.
    pub round_cap: usize,
}

impl Default for CoreOptions {
    fn default() -> Self {
        CoreOptions {
            degree_cap: 4,
            round_cap: 64,
        }
    }
}

/// Why the returned ideal is the core.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoreCertificate {
    /// The upper iteration reached a fixed point.
    FixedPoint { rounds: usize },
    /// Lower and upper bounds coincide.
    Sandwich { rounds: usize, degree: u32 },
    /// The lower bound is prime and the core is a prime of at least its
    /// dimension. `dimension` bounds the dimension of the core from below:
    /// the bracket rank at the point when `I` is a point ideal, or the
    /// dimension of `V(I)` plus one when `I` is prime and not Poisson.
    Dimension { degree: u32, dimension: i64 },
    /// The intersection of the cores of the rational points of `V(I)` lies
    /// inside the lower bound.
    PointCores { degree: u32, points: usize },
}

impl CoreCertificate {
    pub fn name(&self) -> &'static str {
        match self {
            CoreCertificate::FixedPoint { .. } => "fixed-point",
            CoreCertificate::Sandwich { .. } => "sandwich",
            CoreCertificate::Dimension { .. } => "dimension",
            CoreCertificate::PointCores { .. } => "point-cores",
        }
    }
}

impl fmt::Display for CoreCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoreCertificate::FixedPoint { rounds } => write!(f, "fixed point after {rounds} rounds"),
            CoreCertificate::Sandwich { rounds, degree } => {
                write!(f, "bounds met after {rounds} rounds at degree {degree}")
            }
            CoreCertificate::Dimension { degree, dimension } => {
                write!(f, "prime lower bound of dimension {dimension} at degree {degree}")
            }
            CoreCertificate::PointCores { degree, points } => {
                write!(f, "contains the cores of {points} points at degree {degree}")
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct CoreResult {
    pub ideal: Ideal,
    pub certificate: CoreCertificate,
}

/// The Poisson core with default options.
pub fn poisson_core(ideal: &Ideal, p: &PoissonAlgebra) -> Result<Ideal> {
    Ok(poisson_core_with(ideal, p, &CoreOptions::default())?.ideal)
}

pub fn poisson_core_with(ideal: &Ideal, p: &PoissonAlgebra, options: &CoreOptions) -> Result<CoreResult> {
    if !Ring::same(ideal.ring(), p.ring()) {
        return Err(Error::input("ideal and Poisson algebra live in different rings"));
    }
    let ring = ideal.ring();
    if ideal.is_zero() || ideal.is_unit() || is_poisson(ideal, p) {
        return Ok(CoreResult {
            ideal: ideal.reduced(),
            certificate: CoreCertificate::FixedPoint { rounds: 0 },
        });
    }

    let point = point_of(ideal);
    let prime = point.is_some() || certainly_prime(ideal);
    // a lower bound for the dimension of V(P(I)) when I is prime
    let mut dimension_floor = -1i64;
    if prime {
        dimension_floor = ideal.krull_dimension() + 1;
        if let Some(pt) = &point {
            dimension_floor = dimension_floor.max(p.leaf_rank(pt)? as i64);
        }
    }
    let mut point_cores: Option<Option<(Ideal, usize)>> = None;

    let mut upper = ideal.reduced();
    let mut lower = Ideal::zero(ring);
    let mut degree = 0u32;
    for round in 1..=options.round_cap {
        if degree < options.degree_cap {
            degree += 1;
            lower = lower_bound(ideal, p, degree);
            if prime && certainly_prime(&lower) && dimension_floor >= lower.krull_dimension() {
                return Ok(CoreResult {
                    ideal: lower,
                    certificate: CoreCertificate::Dimension {
                        degree,
                        dimension: dimension_floor,
                    },
                });
            }
            if point.is_none() {
                if point_cores.is_none() {
                    point_cores = Some(intersect_point_cores(ideal, p, options)?);
                }
                if let Some(Some((c, count))) = &point_cores {
                    if lower.contains_ideal(c) {
                        return Ok(CoreResult {
                            ideal: lower,
                            certificate: CoreCertificate::PointCores { degree, points: *count },
                        });
                    }
                }
            }
        }
        let next = upper_step(&upper, p)?;
        if next.same_ideal(&upper) {
            return Ok(CoreResult {
                ideal: upper,
                certificate: CoreCertificate::FixedPoint { rounds: round },
            });
        }
        upper = next;
        if upper.same_ideal(&lower) {
            return Ok(CoreResult {
                ideal: lower,
                certificate: CoreCertificate::Sandwich { rounds: round, degree },
            });
        }
    }
    Err(Error::RoundCap {
        rounds: options.round_cap,
    })
}

/// `∩_p P(m_p)` over the rational points of a zero-dimensional ideal.
fn intersect_point_cores(ideal: &Ideal, p: &PoissonAlgebra, options: &CoreOptions) -> Result<Option<(Ideal, usize)>> {
    let pts = rational_points(ideal);
    if pts.is_empty() {
        return Ok(None);
    }
    let mut acc: Option<Ideal> = None;
    for pt in &pts {
        let m = Ideal::of_point(ideal.ring(), pt)?;
        let core = poisson_core_with(&m, p, options)?.ideal;
        acc = Some(match acc {
            None => core,
            Some(a) => a.intersect(&core).reduced(),
        });
    }
    Ok(acc.map(|a| (a, pts.len())))
}

/// One step `I_k -> {f ∈ I_k : {x_i, f} ∈ I_k for all i}` via syzygies.
pub(crate) fn upper_step(current: &Ideal, p: &PoissonAlgebra) -> Result<Ideal> {
    let gens = current.groebner_basis();
    let n = p.nvars();
    let rows: Vec<Vec<Polynomial>> = gens
        .iter()
        .map(|f| (0..n).map(|i| p.bracket_var(i, f)).collect())
        .collect();
    let kernel = syzygy_kernel(&rows, current)?;
    let ring = current.ring();
    let new_gens: Vec<Polynomial> = kernel
        .groebner_basis()
        .iter()
        .map(|g| {
            g.iter()
                .zip(gens)
                .fold(ring.zero(), |acc, (c, f)| &acc + &(c * f))
        })
        .collect();
    Ok(Ideal::new(ring, new_gens)?.reduced())
}

/// The Poisson ideal generated by the largest subspace `W ⊆ I ∩ Z_{≤d}`
/// with `{x_i, W} ⊆ (W)`.
pub(crate) fn lower_bound(ideal: &Ideal, p: &PoissonAlgebra, d: u32) -> Ideal {
    let ring = ideal.ring();
    let n = ring.nvars();
    let base = ideal.with_order(crate::poly::MonomialOrder::DegRevLex).expect("degrevlex");
    let mut spanning = Vec::new();
    for g in base.groebner_basis() {
        let gd = g.total_degree().unwrap_or(0);
        if gd > d {
            continue;
        }
        for m in monomials_up_to(n, d - gd) {
            spanning.push(g.mul_term(&Coeff::one(), &m));
        }
    }
    let mut w = span_basis(ring, &spanning);
    loop {
        if w.is_empty() {
            return Ideal::zero(ring);
        }
        let generated = Ideal::new(ring, w.clone()).expect("same ring");
        let images: Vec<Vec<Polynomial>> = w
            .iter()
            .map(|b| (0..n).map(|i| generated.normal_form(&p.bracket_var(i, b))).collect())
            .collect();
        let all: Vec<Polynomial> = images.iter().flatten().cloned().collect();
        let idx = MonomialIndex::new(ring, &all);
        let ncols = w.len();
        let mut rows = vec![vec![Coeff::zero(); ncols]; n * idx.len()];
        for (c, imgs) in images.iter().enumerate() {
            for (i, q) in imgs.iter().enumerate() {
                for (r, v) in idx.coords(q).expect("indexed").into_iter().enumerate() {
                    rows[i * idx.len() + r][c] = v;
                }
            }
        }
        let kernel = nullspace(&rows, ncols);
        if kernel.len() == ncols {
            return generated.reduced();
        }
        let next: Vec<Polynomial> = kernel
            .iter()
            .map(|v| {
                v.iter()
                    .zip(&w)
                    .filter(|(c, _)| !c.is_zero())
                    .fold(ring.zero(), |acc, (c, b)| &acc + &b.scale(c))
            })
            .collect();
        w = span_basis(ring, &next);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poisson::LieAlgebra;

    fn pt(v: &[i64]) -> Vec<Coeff> {
        v.iter().map(|&x| Coeff::from_int(x)).collect()
    }

    #[test]
    fn heisenberg_cores() {
        let p = LieAlgebra::heisenberg().poisson_algebra();
        let r = p.ring().clone();
        let m = Ideal::of_point(&r, &pt(&[2, -1, 3])).unwrap();
        let core = poisson_core_with(&m, &p, &CoreOptions::default()).unwrap();
        assert_eq!(core.ideal, Ideal::parse(&r, &["z - 3"]).unwrap());
        let m0 = Ideal::of_point(&r, &pt(&[2, -1, 0])).unwrap();
        assert_eq!(poisson_core(&m0, &p).unwrap(), m0);
    }

    #[test]
    fn sl2_point_on_nilpotent_cone() {
        let p = LieAlgebra::sl2().poisson_algebra();
        let r = p.ring().clone();
        let m = Ideal::of_point(&r, &pt(&[0, 0, 1])).unwrap();
        assert_eq!(poisson_core(&m, &p).unwrap(), Ideal::parse(&r, &["h^2 + 4*e*f"]).unwrap());
    }

    #[test]
    fn upper_step_cuts_non_poisson_part() {
        let p = LieAlgebra::heisenberg().poisson_algebra();
        let r = p.ring().clone();
        let m = Ideal::of_point(&r, &pt(&[0, 0, 1])).unwrap();
        let next = upper_step(&m, &p).unwrap();
        assert!(m.contains_ideal(&next));
        assert!(!next.contains(&r.var(0)));
        assert!(next.contains(&r.parse("z - 1").unwrap()));
    }

    #[test]
    fn prime_non_poisson_ideal_has_zero_core() {
        let p = LieAlgebra::sl2().poisson_algebra();
        let i = Ideal::parse(p.ring(), &["e"]).unwrap();
        let res = poisson_core_with(&i, &p, &CoreOptions::default()).unwrap();
        assert!(res.ideal.is_zero() || res.ideal.groebner_basis().is_empty());
        assert_eq!(res.certificate.name(), "dimension");
    }

    #[test]
    fn sl2_generic_point_and_pair() {
        let p = LieAlgebra::sl2().poisson_algebra();
        let r = p.ring().clone();
        let a = Ideal::of_point(&r, &pt(&[1, 1, 1])).unwrap();
        let ca = poisson_core_with(&a, &p, &CoreOptions::default()).unwrap();
        assert_eq!(ca.ideal, Ideal::parse(&r, &["h^2 + 4*e*f - 5"]).unwrap());
        let b = Ideal::of_point(&r, &pt(&[0, 0, 1])).unwrap();
        let both = poisson_core_with(&a.intersect(&b), &p, &CoreOptions::default()).unwrap();
        assert_eq!(both.ideal, Ideal::parse(&r, &["(h^2 + 4*e*f - 5)*(h^2 + 4*e*f)"]).unwrap());
        assert_eq!(both.certificate.name(), "point-cores");
        let o = Ideal::of_point(&r, &pt(&[0, 0, 0])).unwrap();
        assert_eq!(poisson_core(&o, &p).unwrap(), o);
    }
}
