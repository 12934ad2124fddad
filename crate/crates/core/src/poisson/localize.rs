use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{Polynomial, Ring};

use super::PoissonAlgebra;

/// `Z[s^-1]` with its unique extended bracket.
#[derive(Clone, Debug)]
pub struct LocalizedPoissonAlgebra {
    base: PoissonAlgebra,
    denominator: Polynomial,
}

/// `numerator / s^power`.
#[derive(Clone, Debug)]
pub struct Fraction {
    pub numerator: Polynomial,
    pub power: u32,
}

impl LocalizedPoissonAlgebra {
    pub fn new(base: &PoissonAlgebra, s: &Polynomial) -> Result<Self> {
        if !Ring::same(s.ring(), base.ring()) {
            return Err(Error::input("denominator lives in another ring"));
        }
        if s.is_zero() {
            return Err(Error::input("cannot localize at the zero polynomial"));
        }
        Ok(LocalizedPoissonAlgebra {
            base: base.clone(),
            denominator: s.clone(),
        })
    }

    pub fn base(&self) -> &PoissonAlgebra {
        &self.base
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.denominator
    }

    pub fn element(&self, numerator: &Polynomial, power: u32) -> Fraction {
        assert!(Ring::same(numerator.ring(), self.base.ring()));
        Fraction {
            numerator: numerator.clone(),
            power,
        }
    }

    /// Cancels common factors of `s` while possible.
    pub fn reduce(&self, a: &Fraction) -> Fraction {
        let mut num = a.numerator.clone();
        let mut k = a.power;
        if self.denominator.is_constant() {
            let c = self.denominator.constant_term().inv().expect("nonzero");
            return Fraction {
                numerator: num.scale(&c.pow(k as u64)),
                power: 0,
            };
        }
        while k > 0 {
            if num.is_zero() {
                k = 0;
                break;
            }
            match num.div_exact(&self.denominator) {
                Some(q) => {
                    num = q;
                    k -= 1;
                }
                None => break,
            }
        }
        Fraction {
            numerator: num,
            power: k,
        }
    }

    fn lift(&self, a: &Fraction, to: u32) -> Polynomial {
        &a.numerator * &self.denominator.pow(to - a.power)
    }

    /// Equality in the localization, by cross-multiplication.
    pub fn equivalent(&self, a: &Fraction, b: &Fraction) -> bool {
        let k = a.power.max(b.power);
        self.lift(a, k) == self.lift(b, k)
    }

    pub fn add(&self, a: &Fraction, b: &Fraction) -> Fraction {
        let k = a.power.max(b.power);
        self.reduce(&Fraction {
            numerator: &self.lift(a, k) + &self.lift(b, k),
            power: k,
        })
    }

    pub fn mul(&self, a: &Fraction, b: &Fraction) -> Fraction {
        self.reduce(&Fraction {
            numerator: &a.numerator * &b.numerator,
            power: a.power + b.power,
        })
    }

    /// `{p/s^k, q/s^l} = (s{p,q} - k p{s,q} - l q{p,s}) / s^(k+l+1)`.
    pub fn bracket(&self, a: &Fraction, b: &Fraction) -> Fraction {
        let (p, k) = (&a.numerator, a.power);
        let (q, l) = (&b.numerator, b.power);
        let s = &self.denominator;
        let br = |x: &Polynomial, y: &Polynomial| self.base.bracket(x, y);
        if k == 0 && l == 0 {
            return Fraction {
                numerator: br(p, q),
                power: 0,
            };
        }
        let k_c = crate::field::Coeff::from_int(k as i64);
        let l_c = crate::field::Coeff::from_int(l as i64);
        let num = &(&(s * &br(p, q)) - &(p * &br(s, q)).scale(&k_c)) - &(q * &br(p, s)).scale(&l_c);
        self.reduce(&Fraction {
            numerator: num,
            power: k + l + 1,
        })
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.power == 0 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "({}) / s^{}", self.numerator, self.power)
        }
    }
}

#[cfg(test)]
mod tests {
    use crate::poisson::LieAlgebra;

    #[test]
    fn bracket_with_inverse() {
        let p = LieAlgebra::sl2().poisson_algebra();
        let r = p.ring().clone();
        let h = r.var(1);
        let loc = p.localize(&h).unwrap();
        let e = loc.element(&r.var(0), 0);
        let inv_h = loc.element(&r.one(), 1);
        // {e, 1/h} = -{e,h}/h^2 = 2e/h^2
        let got = loc.bracket(&e, &inv_h);
        let want = loc.element(&r.parse("2*e").unwrap(), 2);
        assert!(loc.equivalent(&got, &want));
    }

    #[test]
    fn e_with_f_over_h() {
        let p = LieAlgebra::sl2().poisson_algebra();
        let r = p.ring().clone();
        let loc = p.localize(&r.var(1)).unwrap();
        let got = loc.bracket(&loc.element(&r.var(0), 0), &loc.element(&r.var(2), 1));
        // cross-multiplied: h{e,f} - f{e,h} = h^2 + 2ef over h^2
        let want = loc.element(&r.parse("h^2 + 2*e*f").unwrap(), 2);
        assert!(loc.equivalent(&got, &want));
    }

    #[test]
    fn zero_denominator_is_rejected() {
        let p = LieAlgebra::sl2().poisson_algebra();
        assert!(p.localize(&p.ring().zero()).is_err());
    }
}
