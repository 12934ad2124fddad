//! Exact coefficient arithmetic over the rationals and cyclotomic fields.
//!
//! A coefficient is either a rational number or an element of `Q(zeta_l)`
//! stored as its residue modulo the cyclotomic polynomial `Phi_l`. Residues
//! of degree zero are always stored as plain rationals, so equality and
//! hashing are structural. Rationals embed into every cyclotomic field, which
//! lets rational constants mix freely with cyclotomic elements.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Largest cyclotomic order accepted by default.
pub const MAX_CYCLOTOMIC_ORDER: u32 = 12;

/// The ground field of a polynomial ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoefficientField {
    Rationals,
    /// `Q(zeta_l)` for a primitive `l`-th root of unity.
    Cyclotomic(u32),
}

impl CoefficientField {
    pub fn cyclotomic(ell: u32) -> Result<Self> {
        if ell == 0 || ell > MAX_CYCLOTOMIC_ORDER {
            return Err(Error::input(format!(
                "cyclotomic order must lie in 1..={MAX_CYCLOTOMIC_ORDER}, got {ell}"
            )));
        }
        Ok(CoefficientField::Cyclotomic(ell))
    }

    /// Degree of the field over `Q`.
    pub fn degree(&self) -> usize {
        match self {
            CoefficientField::Rationals => 1,
            CoefficientField::Cyclotomic(ell) => cyclotomic_polynomial(*ell).len() - 1,
        }
    }

    /// The distinguished primitive root of unity. Over `Q` this is `1`.
    pub fn zeta(&self) -> Coeff {
        match self {
            CoefficientField::Rationals => Coeff::one(),
            CoefficientField::Cyclotomic(ell) => Coeff::from_residue(
                *ell,
                vec![BigRational::zero(), BigRational::one()],
            ),
        }
    }

    pub fn contains(&self, c: &Coeff) -> bool {
        match (self, c) {
            (_, Coeff::Rational(_)) => true,
            (CoefficientField::Cyclotomic(a), Coeff::Cyclotomic(e)) => *a == e.ell,
            (CoefficientField::Rationals, Coeff::Cyclotomic(_)) => false,
        }
    }

    pub fn ell(&self) -> Option<u32> {
        match self {
            CoefficientField::Rationals => None,
            CoefficientField::Cyclotomic(ell) => Some(*ell),
        }
    }
}

impl fmt::Display for CoefficientField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientField::Rationals => write!(f, "rationals"),
            CoefficientField::Cyclotomic(ell) => write!(f, "cyclotomic({ell})"),
        }
    }
}

impl std::str::FromStr for CoefficientField {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "rationals" || s == "QQ" {
            return Ok(CoefficientField::Rationals);
        }
        let inner = s
            .strip_prefix("cyclotomic(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::input(format!("unknown coefficient field `{s}`")))?;
        let ell: u32 = inner
            .trim()
            .parse()
            .map_err(|_| Error::input(format!("bad cyclotomic order `{inner}`")))?;
        CoefficientField::cyclotomic(ell)
    }
}

/// Coefficients of `Phi_ell`, lowest degree first. Cached per order.
pub fn cyclotomic_polynomial(ell: u32) -> Arc<[BigInt]> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<[BigInt]>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().expect("cyclotomic cache poisoned").get(&ell) {
        return p.clone();
    }
    // Phi_n = (t^n - 1) / prod_{d | n, d < n} Phi_d
    let n = ell as usize;
    let mut num = vec![BigInt::zero(); n + 1];
    num[0] = BigInt::from(-1);
    num[n] = BigInt::one();
    for d in 1..ell {
        if ell % d == 0 {
            num = exact_div_monic(&num, &cyclotomic_polynomial(d));
        }
    }
    let p: Arc<[BigInt]> = num.into();
    cache
        .lock()
        .expect("cyclotomic cache poisoned")
        .insert(ell, p.clone());
    p
}

fn exact_div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = rem.len() - 1 - dd;
    let mut quot = vec![BigInt::zero(); qd + 1];
    for k in (0..=qd).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[k + j] -= &c * dj;
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

/// An element of `Q(zeta_ell)` of residue degree at least one.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclotomicElement {
    ell: u32,
    residue: Vec<BigRational>,
}

impl CyclotomicElement {
    pub fn ell(&self) -> u32 {
        self.ell
    }

    /// Residue coefficients, constant term first.
    pub fn residue(&self) -> &[BigRational] {
        &self.residue
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coeff {
    Rational(BigRational),
    Cyclotomic(CyclotomicElement),
}

impl Default for Coeff {
    fn default() -> Self {
        Coeff::zero()
    }
}

fn trim(v: &mut Vec<BigRational>) {
    while v.len() > 1 && v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

fn reduce_mod_phi(ell: u32, mut v: Vec<BigRational>) -> Vec<BigRational> {
    let phi = cyclotomic_polynomial(ell);
    let d = phi.len() - 1;
    while v.len() > d {
        let top = v.pop().expect("nonempty");
        if top.is_zero() {
            continue;
        }
        let k = v.len() - d;
        for (j, pj) in phi.iter().enumerate().take(d) {
            v[k + j] -= &top * BigRational::from_integer(pj.clone());
        }
    }
    trim(&mut v);
    v
}

fn uni_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn uni_degree(a: &[BigRational]) -> Option<usize> {
    a.iter().rposition(|c| !c.is_zero())
}

/// Returns (q, r) with a = q*b + r over Q.
fn uni_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let db = uni_degree(b).expect("division by zero polynomial");
    let mut r = a.to_vec();
    let mut q = vec![BigRational::zero(); a.len().max(1)];
    let lead = b[db].clone();
    while let Some(dr) = uni_degree(&r) {
        if dr < db {
            break;
        }
        let c = &r[dr] / &lead;
        let shift = dr - db;
        for j in 0..=db {
            r[shift + j] -= &c * &b[j];
        }
        q[shift] += c;
    }
    trim(&mut q);
    trim(&mut r);
    (q, r)
}

/// Inverse of a nonzero residue modulo `Phi_ell` by the extended Euclidean algorithm.
fn uni_inverse_mod(a: &[BigRational], ell: u32) -> Vec<BigRational> {
    let phi: Vec<BigRational> = cyclotomic_polynomial(ell)
        .iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect();
    // invariant: s_i * a == r_i (mod phi)
    let (mut r0, mut r1) = (phi, a.to_vec());
    let (mut s0, mut s1) = (vec![BigRational::zero()], vec![BigRational::one()]);
    while uni_degree(&r1).is_some() {
        let (q, r) = uni_divrem(&r0, &r1);
        let qs = uni_mul(&q, &s1);
        let mut s2 = s0.clone();
        if s2.len() < qs.len() {
            s2.resize(qs.len(), BigRational::zero());
        }
        for (i, c) in qs.into_iter().enumerate() {
            s2[i] -= c;
        }
        trim(&mut s2);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    // r0 is a nonzero constant because Phi is irreducible
    let c = r0[0].clone();
    let inv: Vec<BigRational> = s0.into_iter().map(|x| x / &c).collect();
    reduce_mod_phi(ell, inv)
}

impl Coeff {
    pub fn zero() -> Self {
        Coeff::Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Coeff::Rational(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Coeff::Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Coeff::Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Coeff::Rational(r)
    }

    /// Builds `sum residue[k] * zeta^k`, reducing modulo `Phi_ell`.
    pub fn from_residue(ell: u32, residue: Vec<BigRational>) -> Self {
        let v = reduce_mod_phi(ell, residue);
        if v.len() <= 1 {
            Coeff::Rational(v.into_iter().next().unwrap_or_else(BigRational::zero))
        } else {
            Coeff::Cyclotomic(CyclotomicElement { ell, residue: v })
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Coeff::Rational(r) if r.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Coeff::Rational(r) if r.is_one())
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Coeff::Rational(r) => Some(r),
            Coeff::Cyclotomic(_) => None,
        }
    }

    /// The cyclotomic order this coefficient requires, if irrational.
    pub fn ell(&self) -> Option<u32> {
        match self {
            Coeff::Rational(_) => None,
            Coeff::Cyclotomic(e) => Some(e.ell),
        }
    }

    /// Negative rationals print with a leading minus sign.
    pub fn is_negative_rational(&self) -> bool {
        matches!(self, Coeff::Rational(r) if r.is_negative())
    }

    fn residue_parts(&self) -> (Option<u32>, Vec<BigRational>) {
        match self {
            Coeff::Rational(r) => (None, vec![r.clone()]),
            Coeff::Cyclotomic(e) => (Some(e.ell), e.residue.clone()),
        }
    }

    fn common_ell(a: Option<u32>, b: Option<u32>) -> Option<u32> {
        match (a, b) {
            (Some(x), Some(y)) => {
                assert_eq!(x, y, "coefficients from different cyclotomic fields");
                Some(x)
            }
            (x, None) | (None, x) => x,
        }
    }

    pub fn inv(&self) -> Option<Coeff> {
        match self {
            Coeff::Rational(r) => (!r.is_zero()).then(|| Coeff::Rational(r.recip())),
            Coeff::Cyclotomic(e) => Some(Coeff::from_residue(
                e.ell,
                uni_inverse_mod(&e.residue, e.ell),
            )),
        }
    }

    /// Division; panics on a zero divisor.
    pub fn div(&self, other: &Coeff) -> Coeff {
        self * &other.inv().expect("division by zero coefficient")
    }

    pub fn pow(&self, mut exp: u64) -> Coeff {
        let mut base = self.clone();
        let mut acc = Coeff::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    /// Integer power, negative exponents through the inverse.
    pub fn powi(&self, exp: i64) -> Coeff {
        if exp >= 0 {
            self.pow(exp as u64)
        } else {
            self.inv()
                .expect("negative power of zero")
                .pow(exp.unsigned_abs())
        }
    }
}

impl<'a> Add<&'a Coeff> for &'a Coeff {
    type Output = Coeff;

    fn add(self, rhs: &Coeff) -> Coeff {
        if let (Coeff::Rational(a), Coeff::Rational(b)) = (self, rhs) {
            return Coeff::Rational(a + b);
        }
        let (ea, mut va) = self.residue_parts();
        let (eb, vb) = rhs.residue_parts();
        let ell = Coeff::common_ell(ea, eb).expect("cyclotomic");
        if va.len() < vb.len() {
            va.resize(vb.len(), BigRational::zero());
        }
        for (i, c) in vb.into_iter().enumerate() {
            va[i] += c;
        }
        Coeff::from_residue(ell, va)
    }
}

impl<'a> Sub<&'a Coeff> for &'a Coeff {
    type Output = Coeff;

    fn sub(self, rhs: &Coeff) -> Coeff {
        if let (Coeff::Rational(a), Coeff::Rational(b)) = (self, rhs) {
            return Coeff::Rational(a - b);
        }
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Coeff> for &'a Coeff {
    type Output = Coeff;

    fn mul(self, rhs: &Coeff) -> Coeff {
        match (self, rhs) {
            (Coeff::Rational(a), Coeff::Rational(b)) => Coeff::Rational(a * b),
            (Coeff::Rational(a), Coeff::Cyclotomic(e)) | (Coeff::Cyclotomic(e), Coeff::Rational(a)) => {
                if a.is_zero() {
                    return Coeff::zero();
                }
                Coeff::Cyclotomic(CyclotomicElement {
                    ell: e.ell,
                    residue: e.residue.iter().map(|c| c * a).collect(),
                })
            }
            (Coeff::Cyclotomic(x), Coeff::Cyclotomic(y)) => {
                let ell = Coeff::common_ell(Some(x.ell), Some(y.ell)).expect("cyclotomic");
                Coeff::from_residue(ell, uni_mul(&x.residue, &y.residue))
            }
        }
    }
}

impl Neg for &Coeff {
    type Output = Coeff;

    fn neg(self) -> Coeff {
        match self {
            Coeff::Rational(a) => Coeff::Rational(-a),
            Coeff::Cyclotomic(e) => Coeff::Cyclotomic(CyclotomicElement {
                ell: e.ell,
                residue: e.residue.iter().map(|c| -c).collect(),
            }),
        }
    }
}

impl Neg for Coeff {
    type Output = Coeff;

    fn neg(self) -> Coeff {
        -&self
    }
}

impl Add for Coeff {
    type Output = Coeff;

    fn add(self, rhs: Coeff) -> Coeff {
        &self + &rhs
    }
}

impl Sub for Coeff {
    type Output = Coeff;

    fn sub(self, rhs: Coeff) -> Coeff {
        &self - &rhs
    }
}

impl Mul for Coeff {
    type Output = Coeff;

    fn mul(self, rhs: Coeff) -> Coeff {
        &self * &rhs
    }
}

impl AddAssign<&Coeff> for Coeff {
    fn add_assign(&mut self, rhs: &Coeff) {
        if let (Coeff::Rational(a), Coeff::Rational(b)) = (&mut *self, rhs) {
            *a += b;
            return;
        }
        *self = &*self + rhs;
    }
}

impl SubAssign<&Coeff> for Coeff {
    fn sub_assign(&mut self, rhs: &Coeff) {
        if let (Coeff::Rational(a), Coeff::Rational(b)) = (&mut *self, rhs) {
            *a -= b;
            return;
        }
        *self = &*self - rhs;
    }
}

impl From<i64> for Coeff {
    fn from(n: i64) -> Self {
        Coeff::from_int(n)
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Coeff {
    /// Rationals print as `p/q`; cyclotomic elements as a polynomial in `zeta`,
    /// highest power first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Rational(r) => write!(f, "{}", fmt_rational(r)),
            Coeff::Cyclotomic(e) => {
                let mut first = true;
                for (k, c) in e.residue.iter().enumerate().rev() {
                    if c.is_zero() {
                        continue;
                    }
                    let neg = c.is_negative();
                    let abs = c.abs();
                    if first {
                        if neg {
                            write!(f, "-")?;
                        }
                    } else {
                        write!(f, "{}", if neg { " - " } else { " + " })?;
                    }
                    first = false;
                    let zeta = match k {
                        0 => String::new(),
                        1 => "zeta".to_string(),
                        _ => format!("zeta^{k}"),
                    };
                    if k == 0 {
                        write!(f, "{}", fmt_rational(&abs))?;
                    } else if abs.is_one() {
                        write!(f, "{zeta}")?;
                    } else {
                        write!(f, "{}*{zeta}", fmt_rational(&abs))?;
                    }
                }
                Ok(())
            }
        }
    }
}
