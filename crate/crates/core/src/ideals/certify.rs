//! Sufficient tests used to certify core computations.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::field::{Coeff, CoefficientField};
use crate::poly::linalg::rank;
use crate::poly::{Ideal, Polynomial};

/// `true` only when the ideal is provably prime: it is generated by affine
/// linear forms, plus at most one irreducible quadric in the remaining
/// variables. `false` means "not decided", not "composite".
pub fn certainly_prime(ideal: &Ideal) -> bool {
    if ideal.is_unit() {
        return false;
    }
    let gb = ideal.groebner_basis();
    let higher: Vec<&Polynomial> = gb.iter().filter(|g| g.total_degree() != Some(1)).collect();
    match higher.as_slice() {
        [] => true,
        [q] if q.total_degree() == Some(2) => quadric_rank(q) >= 3,
        _ => false,
    }
}

/// Rank of the symmetric matrix of the homogenised quadric.
fn quadric_rank(q: &Polynomial) -> usize {
    let n = q.ring().nvars();
    let half = Coeff::from_ratio(1, 2);
    // index n stands for the homogenising variable
    let mut m = vec![vec![Coeff::zero(); n + 1]; n + 1];
    for (mono, c) in q.terms() {
        let support: Vec<usize> = (0..n)
            .flat_map(|i| std::iter::repeat(i).take(mono.exponent(i) as usize))
            .collect();
        match support.as_slice() {
            [] => m[n][n] += c,
            [i] => {
                let h = c * &half;
                m[*i][n] += &h;
                m[n][*i] += &h;
            }
            [i, j] if i == j => m[*i][*i] += c,
            [i, j] => {
                let h = c * &half;
                m[*i][*j] += &h;
                m[*j][*i] += &h;
            }
            _ => unreachable!("degree at most two"),
        }
    }
    rank(&m)
}

const DIVISOR_LIMIT: u64 = 1 << 40;
const CANDIDATE_LIMIT: usize = 4096;

/// Rational points of a zero-dimensional ideal over the rationals, as found
/// by the rational-root test on each eliminant. Returns an empty list when
/// the ideal is not zero-dimensional or the search is out of range; the list
/// may miss irrational points by design.
pub fn rational_points(ideal: &Ideal) -> Vec<Vec<Coeff>> {
    let ring = ideal.ring();
    if ring.field() != CoefficientField::Rationals || ideal.is_unit() || ideal.krull_dimension() != 0 {
        return Vec::new();
    }
    let n = ring.nvars();
    if let Some(p) = point_of(ideal) {
        return vec![p];
    }
    let mut roots: Vec<Vec<BigRational>> = Vec::with_capacity(n);
    for i in 0..n {
        let others: Vec<&str> = ring
            .variables()
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != i)
            .map(|(_, v)| v.as_str())
            .collect();
        let Ok(elim) = ideal.eliminate_variables(&others) else {
            return Vec::new();
        };
        let Some(g) = elim.groebner_basis().first() else {
            return Vec::new();
        };
        let Some(r) = univariate_rational_roots(g, i) else {
            return Vec::new();
        };
        roots.push(r);
    }
    let total: usize = roots.iter().map(Vec::len).product();
    if total > CANDIDATE_LIMIT {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut idx = vec![0usize; n];
    if total == 0 {
        return out;
    }
    loop {
        let pt: Vec<Coeff> = (0..n)
            .map(|i| Coeff::from_rational(roots[i][idx[i]].clone()))
            .collect();
        if ideal.generators().iter().all(|g| g.eval(&pt).is_zero()) {
            out.push(pt);
        }
        let mut k = 0;
        loop {
            if k == n {
                return out;
            }
            idx[k] += 1;
            if idx[k] < roots[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// The point when the ideal is `(x_1 - a_1, ..., x_n - a_n)`.
pub(crate) fn point_of(ideal: &Ideal) -> Option<Vec<Coeff>> {
    let ring = ideal.ring();
    let n = ring.nvars();
    let gb = ideal.groebner_basis();
    if gb.len() != n {
        return None;
    }
    let mut pt = vec![Coeff::zero(); n];
    let mut seen = vec![false; n];
    for g in gb {
        if g.total_degree() != Some(1) || g.len() > 2 {
            return None;
        }
        let (lead, c) = &g.terms()[0];
        if lead.degree() != 1 || !c.is_one() {
            return None;
        }
        let i = (0..n).find(|&i| lead.exponent(i) == 1)?;
        if g.len() == 2 && !g.terms()[1].0.is_one() {
            return None;
        }
        seen[i] = true;
        pt[i] = -&g.constant_term();
    }
    seen.iter().all(|&s| s).then_some(pt)
}

fn univariate_rational_roots(g: &Polynomial, var: usize) -> Option<Vec<BigRational>> {
    let deg = g.degree_in(var) as usize;
    let mut coeffs = vec![BigRational::zero(); deg + 1];
    for (m, c) in g.terms() {
        coeffs[m.exponent(var) as usize] = c.as_rational()?.clone();
    }
    let lcm = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    let mut roots = Vec::new();
    let low = ints.iter().position(|c| !c.is_zero())?;
    if low > 0 {
        roots.push(BigRational::zero());
    }
    let a0 = ints[low].abs();
    let an = ints[deg].abs();
    if deg == low {
        return Some(roots);
    }
    let ps = divisors(&a0)?;
    let qs = divisors(&an)?;
    let eval = |x: &BigRational| {
        ints.iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
    };
    for p in &ps {
        for q in &qs {
            for sign in [1i32, -1] {
                let x = BigRational::new(p * BigInt::from(sign), q.clone());
                if !roots.contains(&x) && eval(&x).is_zero() {
                    roots.push(x);
                }
            }
        }
    }
    roots.sort();
    Some(roots)
}

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let v = n.to_u64()?;
    if v > DIVISOR_LIMIT {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= v {
        if v % d == 0 {
            out.push(BigInt::from(d));
            if d * d != v {
                out.push(BigInt::from(v / d));
            }
        }
        d += 1;
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;

    #[test]
    fn primality_of_simple_ideals() {
        let r = Ring::rational(&["e", "h", "f"]).unwrap();
        assert!(certainly_prime(&Ideal::parse(&r, &["h^2 + 4*e*f"]).unwrap()));
        assert!(certainly_prime(&Ideal::parse(&r, &["h^2 + 4*e*f - 1"]).unwrap()));
        assert!(certainly_prime(&Ideal::parse(&r, &["e", "h - 1"]).unwrap()));
        assert!(!certainly_prime(&Ideal::parse(&r, &["e*f"]).unwrap()));
        assert!(!certainly_prime(&Ideal::parse(&r, &["h^2 - 1"]).unwrap()));
        assert!(certainly_prime(&Ideal::zero(&r)));
        assert!(!certainly_prime(&Ideal::unit(&r)));
    }

    #[test]
    fn points_of_two_point_ideal() {
        let r = Ring::rational(&["x", "y"]).unwrap();
        let a = Ideal::parse(&r, &["x - 1", "y"]).unwrap();
        let b = Ideal::parse(&r, &["x + 1/2", "y - 2"]).unwrap();
        let pts = rational_points(&a.intersect(&b));
        assert_eq!(pts.len(), 2);
        let irr = Ideal::parse(&r, &["x^2 - 2", "y"]).unwrap();
        assert!(rational_points(&irr).is_empty());
        assert_eq!(point_of(&a), Some(vec![Coeff::one(), Coeff::zero()]));
    }
}
