//! Quantum affine space `X_i X_j = q X_j X_i (i < j)` and the Poisson
//! bracket induced on its `ℓ`-centre at a primitive `ℓ`-th root of unity.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Coeff, CoefficientField};
use crate::poisson::PoissonAlgebra;
use crate::poly::{Monomial, Polynomial, Ring};

/// A Laurent polynomial in `q` with rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Laurent(BTreeMap<i64, Coeff>);

impl Laurent {
    pub fn monomial(c: Coeff, e: i64) -> Laurent {
        let mut m = BTreeMap::new();
        if !c.is_zero() {
            m.insert(e, c);
        }
        Laurent(m)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Coeff)> {
        self.0.iter().map(|(e, c)| (*e, c))
    }

    fn add_term(&mut self, e: i64, c: &Coeff) {
        let v = self.0.entry(e).or_insert_with(Coeff::zero);
        *v += c;
        if v.is_zero() {
            self.0.remove(&e);
        }
    }

    pub fn add(&self, other: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (e, c) in &other.0 {
            out.add_term(*e, c);
        }
        out
    }

    pub fn neg(&self) -> Laurent {
        Laurent(self.0.iter().map(|(e, c)| (*e, -c)).collect())
    }

    pub fn mul(&self, other: &Laurent) -> Laurent {
        let mut out = Laurent::default();
        for (e1, c1) in &self.0 {
            for (e2, c2) in &other.0 {
                out.add_term(e1 + e2, &(c1 * c2));
            }
        }
        out
    }

    /// Value at a nonzero `q`.
    pub fn eval(&self, q: &Coeff) -> Coeff {
        let mut acc = Coeff::zero();
        for (e, c) in &self.0 {
            acc += &(c * &q.powi(*e));
        }
        acc
    }

    fn low(&self) -> i64 {
        self.0.keys().next().copied().unwrap_or(0)
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.0.iter().rev() {
            let negative = c.is_negative_rational();
            let abs = if negative { -c } else { c.clone() };
            let mono = match e {
                0 => String::new(),
                1 => "q".into(),
                e => format!("q^{e}"),
            };
            let body = match (abs.is_one(), mono.is_empty()) {
                (true, true) => "1".into(),
                (true, false) => mono,
                (false, true) => abs.to_string(),
                (false, false) => format!("{abs}*{mono}"),
            };
            match (first, negative) {
                (true, true) => write!(f, "-{body}")?,
                (true, false) => write!(f, "{body}")?,
                (false, true) => write!(f, " - {body}")?,
                (false, false) => write!(f, " + {body}")?,
            }
            first = false;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuantumAffineSpace {
    n: usize,
}

/// An element `Σ c_a(q) X^a` in ordered monomials `X_1^{a_1}⋯X_n^{a_n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QElement {
    terms: BTreeMap<Vec<u32>, Laurent>,
}

impl QuantumAffineSpace {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::input("quantum affine space needs at least one generator"));
        }
        Ok(QuantumAffineSpace { n })
    }

    pub fn ngens(&self) -> usize {
        self.n
    }

    pub fn monomial(&self, exps: &[u32]) -> Result<QElement> {
        if exps.len() != self.n {
            return Err(Error::input(format!("expected {} exponents", self.n)));
        }
        let mut terms = BTreeMap::new();
        terms.insert(exps.to_vec(), Laurent::monomial(Coeff::one(), 0));
        Ok(QElement { terms })
    }

    pub fn generator(&self, i: usize) -> QElement {
        let mut e = vec![0; self.n];
        e[i] = 1;
        self.monomial(&e).expect("right length")
    }

    pub fn generator_power(&self, i: usize, k: u32) -> QElement {
        let mut e = vec![0; self.n];
        e[i] = k;
        self.monomial(&e).expect("right length")
    }

    /// `X^a X^b = q^{-Σ_{i<j} b_i a_j} X^{a+b}`.
    pub fn mul(&self, u: &QElement, v: &QElement) -> QElement {
        let mut out: BTreeMap<Vec<u32>, Laurent> = BTreeMap::new();
        for (a, ca) in &u.terms {
            for (b, cb) in &v.terms {
                let mut swaps = 0i64;
                for i in 0..self.n {
                    for j in i + 1..self.n {
                        swaps += b[i] as i64 * a[j] as i64;
                    }
                }
                let exps: Vec<u32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                let c = ca.mul(cb).mul(&Laurent::monomial(Coeff::one(), -swaps));
                let entry = out.entry(exps.clone()).or_default();
                *entry = entry.add(&c);
                if entry.is_zero() {
                    out.remove(&exps);
                }
            }
        }
        QElement { terms: out }
    }

    pub fn commutator(&self, u: &QElement, v: &QElement) -> QElement {
        self.mul(u, v).sub(&self.mul(v, u))
    }
}

impl QElement {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Laurent)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn coefficient(&self, exps: &[u32]) -> Laurent {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    pub fn sub(&self, other: &QElement) -> QElement {
        let mut out = self.terms.clone();
        for (e, c) in &other.terms {
            let entry = out.entry(e.clone()).or_default();
            *entry = entry.add(&c.neg());
            if entry.is_zero() {
                out.remove(e);
            }
        }
        QElement { terms: out }
    }

    /// Whether every coefficient vanishes at `q = zeta`.
    pub fn vanishes_at(&self, zeta: &Coeff) -> bool {
        self.terms.values().all(|c| c.eval(zeta).is_zero())
    }
}

impl fmt::Display for QElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(i, &k)| if k == 1 { format!("X{}", i + 1) } else { format!("X{}^{k}", i + 1) })
                    .collect();
                let mono = if mono.is_empty() { "1".to_string() } else { mono.join("*") };
                format!("({c})*{mono}")
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

pub fn q_mul(u: &QElement, v: &QElement, q: &QuantumAffineSpace) -> QElement {
    q.mul(u, v)
}

/// `p(q) / (q - zeta)` by synthetic division; coefficients of `p` are
/// listed from the constant term up. Returns the quotient and remainder.
pub fn divide_by_linear(p: &[Coeff], zeta: &Coeff) -> (Vec<Coeff>, Coeff) {
    if p.is_empty() {
        return (Vec::new(), Coeff::zero());
    }
    let deg = p.len() - 1;
    let mut quotient = vec![Coeff::zero(); deg];
    let mut carry = Coeff::zero();
    for k in (0..=deg).rev() {
        let v = &p[k] + &carry;
        if k == 0 {
            return (quotient, v);
        }
        quotient[k - 1] = v.clone();
        carry = &v * zeta;
    }
    unreachable!()
}

/// The structure of the semiclassical limit on `u_i = X_i^ℓ`.
#[derive(Clone, Debug)]
pub struct EllCentre {
    pub algebra: PoissonAlgebra,
    /// `{u_i, u_j} = scalar · u_i u_j` for each `i < j`.
    pub scalars: Vec<((usize, usize), Coeff)>,
}

/// `{u_i, u_j} = ((q - ζ)^{-1} [X_i^ℓ, X_j^ℓ])|_{q=ζ}` over `Q(ζ_ℓ)`.
pub fn ell_centre_bracket(q: &QuantumAffineSpace, ell: u32) -> Result<EllCentre> {
    if ell < 2 {
        return Err(Error::input(format!("the root of unity must have order at least 2, got {ell}")));
    }
    let field = CoefficientField::cyclotomic(ell)?;
    let zeta = field.zeta();
    let n = q.ngens();
    let names: Vec<String> = (1..=n).map(|i| format!("u{i}")).collect();
    let ring = Ring::new(&names, field)?;
    let mut table = vec![vec![ring.zero(); n]; n];
    let mut scalars = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let a = q.generator_power(i, ell);
            let b = q.generator_power(j, ell);
            let comm = q.commutator(&a, &b);
            let mut exps = vec![0u32; n];
            exps[i] = ell;
            exps[j] = ell;
            let coeff = comm.coefficient(&exps);
            if comm.terms().any(|(e, _)| e != exps.as_slice()) {
                return Err(Error::Internal(format!("[X{}^{ell}, X{}^{ell}] left the expected monomial", i + 1, j + 1)));
            }
            // clear negative powers, divide, then undo the shift at q = ζ
            let shift = -coeff.low().min(0);
            let top = coeff.terms().map(|(e, _)| e + shift).max().unwrap_or(0);
            let mut dense = vec![Coeff::zero(); top as usize + 1];
            for (e, c) in coeff.terms() {
                dense[(e + shift) as usize] = c.clone();
            }
            let (quot, rem) = divide_by_linear(&dense, &zeta);
            if !rem.is_zero() {
                return Err(Error::Internal(format!(
                    "division of [X{}^{ell}, X{}^{ell}] by (q - zeta) leaves remainder {rem}",
                    i + 1,
                    j + 1
                )));
            }
            let mut value = Coeff::zero();
            for (k, c) in quot.iter().enumerate() {
                value += &(c * &zeta.pow(k as u64));
            }
            let value = &value * &zeta.powi(-shift);
            let uu = ring.term(value.clone(), Monomial::variable(n, i).mul(&Monomial::variable(n, j)));
            table[j][i] = -&uu;
            table[i][j] = uu;
            scalars.push(((i, j), value));
        }
    }
    let algebra = PoissonAlgebra::skew(&ring, table)?;
    Ok(EllCentre { algebra, scalars })
}

/// Whether `[X_i^ℓ, X_j] = 0` for all `i, j`, either at `q = ζ_ℓ` or, with
/// `specialize` false, for generic `q`.
pub fn centrality_check(q: &QuantumAffineSpace, ell: u32, specialize: bool) -> Result<bool> {
    if ell < 2 {
        return Err(Error::input(format!("the root of unity must have order at least 2, got {ell}")));
    }
    let zeta = CoefficientField::cyclotomic(ell)?.zeta();
    let n = q.ngens();
    for i in 0..n {
        for j in 0..n {
            let c = q.commutator(&q.generator_power(i, ell), &q.generator(j));
            let ok = if specialize { c.vanishes_at(&zeta) } else { c.is_zero() };
            if !ok {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

impl EllCentre {
    pub fn bracket_of(&self, i: usize, j: usize) -> &Polynomial {
        self.algebra.entry(i, j)
    }
}
