use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{Coeff, CoefficientField};

use super::monomial::{Monomial, MonomialOrder};

/// A polynomial ring: ordered variable names over a coefficient field.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    variables: Vec<String>,
    field: CoefficientField,
}

fn valid_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Ring {
    pub fn new<S: AsRef<str>>(variables: &[S], field: CoefficientField) -> Result<Arc<Ring>> {
        let variables: Vec<String> = variables.iter().map(|v| v.as_ref().to_string()).collect();
        for (i, v) in variables.iter().enumerate() {
            if !valid_identifier(v) || v == "zeta" {
                return Err(Error::input(format!("invalid variable name `{v}`")));
            }
            if variables[..i].contains(v) {
                return Err(Error::input(format!("duplicate variable `{v}`")));
            }
        }
        Ok(Arc::new(Ring { variables, field }))
    }

    /// Convenience constructor over the rationals.
    pub fn rational<S: AsRef<str>>(variables: &[S]) -> Result<Arc<Ring>> {
        Ring::new(variables, CoefficientField::Rationals)
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn field(&self) -> CoefficientField {
        self.field
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == name)
    }

    pub fn zero(self: &Arc<Self>) -> Polynomial {
        Polynomial {
            ring: self.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(self: &Arc<Self>) -> Polynomial {
        self.constant(Coeff::one())
    }

    pub fn constant(self: &Arc<Self>, c: Coeff) -> Polynomial {
        self.term(c, Monomial::one(self.nvars()))
    }

    pub fn term(self: &Arc<Self>, c: Coeff, m: Monomial) -> Polynomial {
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Polynomial {
            ring: self.clone(),
            terms,
        }
    }

    pub fn var(self: &Arc<Self>, i: usize) -> Polynomial {
        self.term(Coeff::one(), Monomial::variable(self.nvars(), i))
    }

    pub fn vars(self: &Arc<Self>) -> Vec<Polynomial> {
        (0..self.nvars()).map(|i| self.var(i)).collect()
    }

    pub fn parse(self: &Arc<Self>, text: &str) -> Result<Polynomial> {
        super::parse::parse_polynomial(self, text)
    }

    /// Ring with `extra` new variables prepended; names are made unique.
    pub(crate) fn with_prefix_vars(&self, base_names: &[&str]) -> Arc<Ring> {
        let mut names: Vec<String> = Vec::new();
        for b in base_names {
            let mut name = b.to_string();
            while self.variables.contains(&name) || names.contains(&name) {
                name.push('_');
            }
            names.push(name);
        }
        names.extend(self.variables.iter().cloned());
        Arc::new(Ring {
            variables: names,
            field: self.field,
        })
    }

    pub(crate) fn permuted(&self, perm: &[usize]) -> Arc<Ring> {
        Arc::new(Ring {
            variables: perm.iter().map(|&p| self.variables[p].clone()).collect(),
            field: self.field,
        })
    }

    pub fn same(a: &Arc<Ring>, b: &Arc<Ring>) -> bool {
        Arc::ptr_eq(a, b) || a == b
    }
}

/// A polynomial with exact coefficients. Terms are kept sorted by the
/// canonical (degree reverse lexicographic) order, largest first, with no
/// zero coefficients.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: Arc<Ring>,
    terms: Vec<(Monomial, Coeff)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        Ring::same(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

pub(crate) fn canonical_cmp(a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
    MonomialOrder::DegRevLex.cmp(a, b)
}

impl Polynomial {
    /// Builds a polynomial from arbitrary (possibly repeated, zero) terms.
    pub fn from_terms(ring: &Arc<Ring>, terms: impl IntoIterator<Item = (Monomial, Coeff)>) -> Self {
        let mut acc: HashMap<Monomial, Coeff> = HashMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), ring.nvars());
            if c.is_zero() {
                continue;
            }
            match acc.get_mut(&m) {
                Some(e) => *e += &c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<(Monomial, Coeff)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| canonical_cmp(&b.0, &a.0));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Coeff)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// The constant coefficient.
    pub fn constant_term(&self) -> Coeff {
        self.terms
            .last()
            .filter(|(m, _)| m.is_one())
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Coeff::zero)
    }

    pub fn coefficient(&self, m: &Monomial) -> Coeff {
        self.terms
            .iter()
            .find(|(t, _)| t == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Coeff::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.exponent(var)).max().unwrap_or(0)
    }

    /// Leading monomial and coefficient under `order`.
    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &Coeff)> {
        if matches!(order, MonomialOrder::DegRevLex) {
            return self.terms.first().map(|(m, c)| (m, c));
        }
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(&a.0, &b.0))
            .map(|(m, c)| (m, c))
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return self.ring.zero();
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// Multiplies by `c * m`.
    pub fn mul_term(&self, c: &Coeff, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return self.ring.zero();
        }
        // multiplying by a monomial preserves the degrevlex order
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect(),
        }
    }

    /// Normalises to leading coefficient one under `order`.
    pub fn monic(&self, order: &MonomialOrder) -> Polynomial {
        match self.leading_term(order) {
            Some((_, c)) if !c.is_one() => self.scale(&c.inv().expect("nonzero")),
            _ => self.clone(),
        }
    }

    pub fn pow(&self, mut exp: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = self.ring.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn derivative(&self, var: usize) -> Polynomial {
        let terms = self.terms.iter().filter_map(|(m, c)| {
            let e = m.exponent(var);
            (e > 0).then(|| {
                let mut m2 = m.clone();
                m2.set(var, e - 1);
                (m2, c * &Coeff::from_int(e as i64))
            })
        });
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Evaluates at a point with one coordinate per variable.
    pub fn eval(&self, point: &[Coeff]) -> Coeff {
        assert_eq!(point.len(), self.ring.nvars(), "point dimension mismatch");
        let mut acc = Coeff::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = &t * &point[i].pow(e as u64);
                }
            }
            acc += &t;
        }
        acc
    }

    /// Substitutes `x_i -> images[i]` (images may live in another ring).
    pub fn substitute(&self, target: &Arc<Ring>, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.ring.nvars());
        let mut acc = target.zero();
        let mut powers: Vec<Vec<Polynomial>> = vec![vec![target.one()]; images.len()];
        for (m, c) in &self.terms {
            let mut t = target.constant(c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                while powers[i].len() <= e as usize {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                if e > 0 {
                    t = &t * &powers[i][e as usize];
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Reinterprets in `target`, whose variables include this ring's; `map[i]`
    /// is the index in `target` of variable `i`.
    pub(crate) fn embed(&self, target: &Arc<Ring>, map: &[usize]) -> Polynomial {
        let n = target.nvars();
        Polynomial::from_terms(
            target,
            self.terms.iter().map(|(m, c)| {
                let mut t = Monomial::one(n);
                for (i, &e) in m.exponents().iter().enumerate() {
                    t.set(map[i], e);
                }
                (t, c.clone())
            }),
        )
    }

    /// Embeds into a ring obtained by prepending `extra` variables.
    pub(crate) fn shift_into(&self, target: &Arc<Ring>, extra: usize) -> Polynomial {
        Polynomial::from_terms(
            target,
            self.terms.iter().map(|(m, c)| (m.shifted(extra), c.clone())),
        )
    }

    /// Drops the first `extra` variables, which must not occur.
    pub(crate) fn unshift_into(&self, target: &Arc<Ring>, extra: usize) -> Polynomial {
        Polynomial::from_terms(
            target,
            self.terms.iter().map(|(m, c)| {
                debug_assert!(m.exponents()[..extra].iter().all(|&e| e == 0));
                (
                    Monomial::from_exponents(m.exponents()[extra..].iter().copied()),
                    c.clone(),
                )
            }),
        )
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let (lm, lc) = divisor.leading_term(&MonomialOrder::DegRevLex)?;
        let lc_inv = lc.inv().expect("nonzero");
        let mut rem = self.clone();
        let mut quot: Vec<(Monomial, Coeff)> = Vec::new();
        while let Some((m, c)) = rem.terms.first().cloned() {
            let q = m.div(lm)?;
            let qc = &c * &lc_inv;
            rem = &rem - &divisor.mul_term(&qc, &q);
            quot.push((q, qc));
        }
        Some(Polynomial::from_terms(&self.ring, quot))
    }

    fn check_ring(&self, other: &Polynomial) {
        assert!(
            Ring::same(&self.ring, &other.ring),
            "polynomials from different rings"
        );
    }

    /// Checked variant of the ring compatibility assertion.
    pub fn ensure_same_ring(&self, other: &Polynomial) -> Result<()> {
        if Ring::same(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::input(format!(
                "mixed rings: [{}] over {} vs [{}] over {}",
                self.ring.variables.join(","),
                self.ring.field,
                other.ring.variables.join(","),
                other.ring.field
            )))
        }
    }
}

fn merge(a: &[(Monomial, Coeff)], b: &[(Monomial, Coeff)], negate_b: bool) -> Vec<(Monomial, Coeff)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match canonical_cmp(&a[i].0, &b[j].0) {
            std::cmp::Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Less => {
                let c = if negate_b { -&b[j].1 } else { b[j].1.clone() };
                out.push((b[j].0.clone(), c));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let c = if negate_b { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                if !c.is_zero() {
                    out.push((a[i].0.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(a[i..].iter().cloned());
    out.extend(
        b[j..]
            .iter()
            .map(|(m, c)| (m.clone(), if negate_b { -c } else { c.clone() })),
    );
    out
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.check_ring(rhs);
        Polynomial {
            ring: self.ring.clone(),
            terms: merge(&self.terms, &rhs.terms, false),
        }
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.check_ring(rhs);
        Polynomial {
            ring: self.ring.clone(),
            terms: merge(&self.terms, &rhs.terms, true),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.check_ring(rhs);
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return rhs.mul_term(c, m);
        }
        if rhs.terms.len() == 1 {
            let (m, c) = &rhs.terms[0];
            return self.mul_term(c, m);
        }
        let products = self
            .terms
            .iter()
            .flat_map(|(ma, ca)| rhs.terms.iter().map(move |(mb, cb)| (ma.mul(mb), ca * cb)));
        Polynomial::from_terms(&self.ring, products)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}

pub(crate) fn fmt_monomial(vars: &[String], m: &Monomial) -> String {
    let parts: Vec<String> = m
        .exponents()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            if e == 1 {
                vars[i].clone()
            } else {
                format!("{}^{e}", vars[i])
            }
        })
        .collect();
    parts.join("*")
}

/// Formats `c * mono` as a signed term: returns (is_negative, body).
pub(crate) fn fmt_term(c: &Coeff, mono: &str) -> (bool, String) {
    let neg = c.is_negative_rational();
    let abs = if neg { -c } else { c.clone() };
    let coeff = match &abs {
        Coeff::Rational(_) => abs.to_string(),
        Coeff::Cyclotomic(_) => {
            let s = abs.to_string();
            if s.contains(' ') || s.starts_with('-') {
                format!("({s})")
            } else {
                s
            }
        }
    };
    let body = if mono.is_empty() {
        coeff
    } else if abs.is_one() {
        mono.to_string()
    } else {
        format!("{coeff}*{mono}")
    };
    (neg, body)
}

pub(crate) fn join_terms(terms: impl IntoIterator<Item = (bool, String)>) -> String {
    let mut out = String::new();
    for (k, (neg, body)) in terms.into_iter().enumerate() {
        match (k, neg) {
            (0, true) => {
                out.push('-');
                out.push_str(&body);
            }
            (0, false) => out.push_str(&body),
            (_, true) => {
                out.push_str(" - ");
                out.push_str(&body);
            }
            (_, false) => {
                out.push_str(" + ");
                out.push_str(&body);
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vars = &self.ring.variables;
        let s = join_terms(
            self.terms
                .iter()
                .map(|(m, c)| fmt_term(c, &fmt_monomial(vars, m))),
        );
        f.write_str(&s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> Arc<Ring> {
        Ring::rational(&["x", "y"]).unwrap()
    }

    #[test]
    fn canonical_printing() {
        let r = ring();
        let p = r.parse("y - 1 + 3/2*x^2*y").unwrap();
        assert_eq!(p.to_string(), "3/2*x^2*y + y - 1");
        assert_eq!(r.zero().to_string(), "0");
        assert_eq!((-&r.var(0)).to_string(), "-x");
    }

    #[test]
    fn derivative_and_eval() {
        let r = ring();
        let p = r.parse("x^2*y + 3*x - 2").unwrap();
        assert_eq!(p.derivative(0), r.parse("2*x*y + 3").unwrap());
        assert_eq!(p.derivative(1), r.parse("x^2").unwrap());
        assert_eq!(p.eval(&[Coeff::from_int(2), Coeff::from_int(1)]), Coeff::from_int(8));
    }

    #[test]
    fn exact_division() {
        let r = ring();
        let f = r.parse("x^2 - y^2").unwrap();
        let g = r.parse("x + y").unwrap();
        assert_eq!(f.div_exact(&g).unwrap(), r.parse("x - y").unwrap());
        assert!(r.parse("x^2 + 1").unwrap().div_exact(&g).is_none());
    }

    #[test]
    fn rejects_bad_rings() {
        assert!(Ring::rational(&["x", "x"]).is_err());
        assert!(Ring::rational(&["zeta"]).is_err());
        assert!(Ring::rational(&["1x"]).is_err());
    }

    #[test]
    fn cyclotomic_coefficients_print_in_zeta() {
        let r = Ring::new(&["u"], CoefficientField::Cyclotomic(3)).unwrap();
        let p = r.parse("(zeta + 2)*u - zeta").unwrap();
        assert_eq!(p.to_string(), "(zeta + 2)*u + (-zeta)");
    }
}
