//! The Poisson enveloping algebra `A^e` in PBW normal form, with
//! finite-dimensional Poisson modules.

mod module;
mod rewrite;
mod ugd;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::field::Coeff;
use crate::order::{rank_one_order, OrderElement, PoissonOrder};
use crate::poisson::PoissonAlgebra;
use crate::poly::linalg::rank;
use crate::poly::{monomials_up_to, Monomial, Polynomial};

pub use module::{
    induced_module, ividealiii_check, module_annihilator_z, module_check, torsion_ideal, Annihilator, IvIdealReport,
    ModuleViolation,
    PoissonModule, Torsion,
};
pub use rewrite::{diamond_overlap_check, Overlap};
pub use ugd::{ugd_compare, UgdMismatch};

/// δ-monomial ↦ coefficient in `A`, meaning `Σ a_b δ^b` with `a_b` on the left.
type Terms = BTreeMap<Monomial, OrderElement>;

/// `A^e` for a Poisson order `A` over a polynomial Poisson algebra.
#[derive(Clone)]
pub struct Envelope(Arc<Inner>);

struct Inner {
    order: PoissonOrder,
    cache: Mutex<HashMap<(usize, Monomial), Terms>>,
}

impl fmt::Debug for Envelope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Envelope({})", self.0.order)
    }
}

#[derive(Clone, Debug)]
pub struct EnvElement {
    env: Envelope,
    terms: Terms,
}

impl Envelope {
    pub fn new(order: &PoissonOrder) -> Envelope {
        Envelope(Arc::new(Inner {
            order: order.clone(),
            cache: Mutex::new(HashMap::new()),
        }))
    }

    /// `Z^e`, with `Z` as a rank-one order over itself.
    pub fn of_algebra(p: &PoissonAlgebra) -> Envelope {
        Envelope::new(&rank_one_order(p))
    }

    pub fn order(&self) -> &PoissonOrder {
        &self.0.order
    }

    pub fn nvars(&self) -> usize {
        self.0.order.base().nvars()
    }

    fn wrap(&self, terms: Terms) -> EnvElement {
        EnvElement {
            env: self.clone(),
            terms,
        }
    }

    fn same(&self, other: &Envelope) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.order == other.0.order
    }

    pub fn zero(&self) -> EnvElement {
        self.wrap(Terms::new())
    }

    pub fn one(&self) -> EnvElement {
        self.alpha(self.order().unit()).expect("unit has the right shape")
    }

    /// `α(a)` for `a ∈ A`.
    pub fn alpha(&self, a: &[Polynomial]) -> Result<EnvElement> {
        if a.len() != self.order().rank() {
            return Err(Error::input(format!("expected {} coordinates", self.order().rank())));
        }
        let mut t = Terms::new();
        add_into(&mut t, Monomial::one(self.nvars()), a.to_vec());
        Ok(self.wrap(t))
    }

    /// `α(p·1_A)`.
    pub fn alpha_poly(&self, p: &Polynomial) -> EnvElement {
        self.alpha(&self.order().scalar(p)).expect("scalar has the right shape")
    }

    /// `δ(x_i)`.
    pub fn delta(&self, i: usize) -> EnvElement {
        let mut t = Terms::new();
        t.insert(Monomial::variable(self.nvars(), i), self.order().unit().clone());
        self.wrap(t)
    }

    /// `δ(p) = Σ_k ∂_k p · δ(x_k)`.
    pub fn delta_of(&self, p: &Polynomial) -> EnvElement {
        let n = self.nvars();
        let mut t = Terms::new();
        for k in 0..n {
            let d = p.derivative(k);
            if !d.is_zero() {
                add_into(&mut t, Monomial::variable(n, k), self.order().scalar(&d));
            }
        }
        self.wrap(t)
    }

    /// The normal monomial `e_j x^α δ^b`.
    pub fn monomial(&self, basis: usize, x: &Monomial, b: &Monomial) -> EnvElement {
        let ring = self.order().ring();
        let mut a = self.order().zero();
        a[basis] = ring.term(Coeff::one(), x.clone());
        let mut t = Terms::new();
        add_into(&mut t, b.clone(), a);
        self.wrap(t)
    }

    pub fn mul(&self, u: &EnvElement, v: &EnvElement) -> Result<EnvElement> {
        if !self.same(&u.env) || !self.same(&v.env) {
            return Err(Error::input("enveloping algebra elements have different parents"));
        }
        let n = self.nvars();
        let mut out = Terms::new();
        for (b, a) in &u.terms {
            let mut t = v.terms.clone();
            for i in (0..n).rev() {
                for _ in 0..b.exponent(i) {
                    t = self.delta_left(i, &t);
                }
            }
            for (c, y) in self.left_mul(a, &t) {
                add_into(&mut out, c, y);
            }
        }
        Ok(self.wrap(out))
    }

    fn left_mul(&self, a: &[Polynomial], t: &Terms) -> Terms {
        let mut out = Terms::new();
        for (b, y) in t {
            add_into(&mut out, b.clone(), self.order().mul(a, y));
        }
        out
    }

    /// `δ_i · t`, using `δ_i a = a δ_i + {x_i, a}`.
    fn delta_left(&self, i: usize, t: &Terms) -> Terms {
        let order = self.order();
        let mut out = Terms::new();
        for (b, a) in t {
            for (c, y) in self.left_mul(a, &self.delta_mono(i, b)) {
                add_into(&mut out, c, y);
            }
            add_into(&mut out, b.clone(), order.ham_var(i, a));
        }
        out
    }

    /// Normal form of `δ_i δ^c`, using `δ_i δ_j = δ_j δ_i + δ({x_i, x_j})` for `i > j`.
    fn delta_mono(&self, i: usize, c: &Monomial) -> Terms {
        let key = (i, c.clone());
        if let Some(t) = self.0.cache.lock().expect("cache").get(&key) {
            return t.clone();
        }
        let n = self.nvars();
        let order = self.order();
        let first = (0..n).find(|&j| c.exponent(j) > 0);
        let out = match first {
            Some(j) if j < i => {
                let rest = c.div(&Monomial::variable(n, j)).expect("divides");
                let mut out = self.delta_left(j, &self.delta_mono(i, &rest));
                let bij = order.base().entry(i, j);
                for k in 0..n {
                    let d = bij.derivative(k);
                    if d.is_zero() {
                        continue;
                    }
                    for (b, y) in self.left_mul(&order.scalar(&d), &self.delta_mono(k, &rest)) {
                        add_into(&mut out, b, y);
                    }
                }
                out
            }
            _ => {
                let mut t = Terms::new();
                t.insert(c.mul(&Monomial::variable(n, i)), order.unit().clone());
                t
            }
        };
        self.0.cache.lock().expect("cache").insert(key, out.clone());
        out
    }

    /// Parses a sum of products whose factors are basis names, polynomials
    /// (parenthesised when they have several terms) and `d[x]^k`. Factors
    /// are multiplied in the order written.
    pub fn parse(&self, text: &str) -> Result<EnvElement> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::input("empty enveloping algebra expression"));
        }
        let mut total = self.zero();
        for (negative, body) in split_terms(text)? {
            let mut acc = self.one();
            for factor in split_top(&body, '*') {
                let f = self.parse_factor(factor.trim())?;
                acc = self.mul(&acc, &f)?;
            }
            total = if negative { total.sub(&acc) } else { total.add(&acc) };
        }
        Ok(total)
    }

    fn parse_factor(&self, f: &str) -> Result<EnvElement> {
        let order = self.order();
        let ring = order.ring();
        if let Some(rest) = f.strip_prefix("d[") {
            let close = rest
                .find(']')
                .ok_or_else(|| Error::input(format!("unclosed `d[` in `{f}`")))?;
            let name = &rest[..close];
            let i = ring
                .var_index(name)
                .ok_or_else(|| Error::input(format!("unknown variable `{name}` in `{f}`")))?;
            let tail = rest[close + 1..].trim();
            let power = if tail.is_empty() {
                1
            } else {
                tail.strip_prefix('^')
                    .and_then(|e| e.trim().parse::<u32>().ok())
                    .ok_or_else(|| Error::input(format!("bad exponent in `{f}`")))?
            };
            let mut out = self.one();
            for _ in 0..power {
                out = self.mul(&out, &self.delta(i))?;
            }
            return Ok(out);
        }
        if let Some(j) = order.basis_names().iter().position(|b| b == f) {
            return self.alpha(&order.basis_element(j));
        }
        let inner = if f.starts_with('(') && f.ends_with(')') { &f[1..f.len() - 1] } else { f };
        Ok(self.alpha_poly(&ring.parse(inner)?))
    }

    /// Text of a single normal term.
    fn format_term(&self, basis: usize, poly: &Polynomial, b: &Monomial) -> String {
        let order = self.order();
        let name = &order.basis_names()[basis];
        let mut negative = false;
        let mut factors = Vec::new();
        if order.rank() > 1 || name != "1" {
            factors.push(name.clone());
        }
        let mut p = poly.clone();
        if p.len() == 1 && p.terms()[0].1.is_negative_rational() {
            negative = true;
            p = -&p;
        }
        if !(p.is_constant() && p.constant_term().is_one()) {
            if p.len() == 1 {
                factors.push(p.to_string());
            } else {
                factors.push(format!("({p})"));
            }
        }
        let vars = order.ring().variables();
        for (i, v) in vars.iter().enumerate() {
            match b.exponent(i) {
                0 => {}
                1 => factors.push(format!("d[{v}]")),
                e => factors.push(format!("d[{v}]^{e}")),
            }
        }
        let body = if factors.is_empty() { "1".to_string() } else { factors.join("*") };
        if negative {
            format!("-{body}")
        } else {
            body
        }
    }
}

fn add_into(t: &mut Terms, b: Monomial, a: OrderElement) {
    if a.iter().all(Polynomial::is_zero) {
        return;
    }
    match t.get_mut(&b) {
        Some(existing) => {
            for (x, y) in existing.iter_mut().zip(&a) {
                *x = &*x + y;
            }
            if existing.iter().all(Polynomial::is_zero) {
                t.remove(&b);
            }
        }
        None => {
            t.insert(b, a);
        }
    }
}

fn split_top(s: &str, sep: char) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push(&s[start..i]);
                start = i + ch.len_utf8();
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

/// Splits at top-level binary `+` and `-`, returning (negated, body) pairs.
fn split_terms(s: &str) -> Result<Vec<(bool, String)>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut current = String::new();
    let mut negative = false;
    let mut prev = None::<char>;
    for ch in s.chars() {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            _ => {}
        }
        if depth < 0 {
            return Err(Error::input(format!("unbalanced brackets in `{s}`")));
        }
        let binary = !matches!(prev, None | Some('^') | Some('*') | Some('/'));
        if (ch == '+' || ch == '-') && depth == 0 && binary {
            if !current.trim().is_empty() {
                out.push((negative, current.trim().to_string()));
            }
            current.clear();
            negative = ch == '-';
        } else if (ch == '-' || ch == '+') && depth == 0 && prev.is_none() {
            negative = ch == '-';
        } else {
            current.push(ch);
        }
        if !ch.is_whitespace() {
            prev = Some(ch);
        }
    }
    if depth != 0 {
        return Err(Error::input(format!("unbalanced brackets in `{s}`")));
    }
    if current.trim().is_empty() {
        return Err(Error::input(format!("dangling sign in `{s}`")));
    }
    out.push((negative, current.trim().to_string()));
    Ok(out)
}

impl EnvElement {
    pub fn envelope(&self) -> &Envelope {
        &self.env
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest total δ-degree, or `None` for zero.
    pub fn delta_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// The terms of δ-degree exactly `k`.
    pub fn part_of_degree(&self, k: u32) -> EnvElement {
        let t = self
            .terms
            .iter()
            .filter(|(b, _)| b.degree() == k)
            .map(|(b, a)| (b.clone(), a.clone()))
            .collect();
        self.env.wrap(t)
    }

    /// The `A`-coefficient of `δ^b`.
    pub fn coefficient(&self, b: &Monomial) -> OrderElement {
        self.terms.get(b).cloned().unwrap_or_else(|| self.env.order().zero())
    }

    /// Normal monomials `(basis, x-monomial, δ-monomial)` with coefficients.
    pub fn normal_terms(&self) -> Vec<(usize, Monomial, Monomial, Coeff)> {
        let mut out = Vec::new();
        for (b, a) in &self.terms {
            for (j, p) in a.iter().enumerate() {
                for (m, c) in p.terms() {
                    out.push((j, m.clone(), b.clone(), c.clone()));
                }
            }
        }
        out
    }

    pub fn add(&self, other: &EnvElement) -> EnvElement {
        let mut t = self.terms.clone();
        for (b, a) in &other.terms {
            add_into(&mut t, b.clone(), a.clone());
        }
        self.env.wrap(t)
    }

    pub fn neg(&self) -> EnvElement {
        let t = self
            .terms
            .iter()
            .map(|(b, a)| (b.clone(), a.iter().map(|p| -p).collect()))
            .collect();
        self.env.wrap(t)
    }

    pub fn sub(&self, other: &EnvElement) -> EnvElement {
        self.add(&other.neg())
    }

    /// `self · δ(x_i)`.
    pub fn mul_delta(&self, i: usize) -> EnvElement {
        self.env.mul(self, &self.env.delta(i)).expect("same parent")
    }

    pub fn scale(&self, c: &Coeff) -> EnvElement {
        if c.is_zero() {
            return self.env.zero();
        }
        let t = self
            .terms
            .iter()
            .map(|(b, a)| (b.clone(), a.iter().map(|p| p.scale(c)).collect()))
            .collect();
        self.env.wrap(t)
    }
}

impl PartialEq for EnvElement {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl fmt::Display for EnvElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<&Monomial> = self.terms.keys().collect();
        keys.sort_by(|a, b| b.degree().cmp(&a.degree()).then_with(|| b.cmp(a)));
        let mut first = true;
        for b in keys {
            for (j, p) in self.terms[b].iter().enumerate() {
                if p.is_zero() {
                    continue;
                }
                let t = self.env.format_term(j, p, b);
                if first {
                    write!(f, "{t}")?;
                    first = false;
                } else if let Some(rest) = t.strip_prefix('-') {
                    write!(f, " - {rest}")?;
                } else {
                    write!(f, " + {t}")?;
                }
            }
        }
        Ok(())
    }
}

pub fn env_mul(u: &EnvElement, v: &EnvElement) -> Result<EnvElement> {
    u.env.mul(u, v)
}

pub fn delta_of(env: &Envelope, p: &Polynomial) -> Result<EnvElement> {
    if !crate::poly::Ring::same(p.ring(), env.order().ring()) {
        return Err(Error::input("polynomial lives in another ring"));
    }
    Ok(env.delta_of(p))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PbwReport {
    pub filtration_degree: u32,
    pub polynomial_degree: u32,
    pub predicted: u64,
    pub actual: u64,
    /// Each product has the expected normal monomial as its top term.
    pub leading_terms_ok: bool,
    pub ok: bool,
}

impl fmt::Display for PbwReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "k = {}, d = {}: predicted {}, actual {}, {}",
            self.filtration_degree,
            self.polynomial_degree,
            self.predicted,
            self.actual,
            if self.ok { "ok" } else { "MISMATCH" }
        )
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// `rank · C(d+n, n) · Σ_{j ≤ k} C(j+n-1, n-1)`.
pub fn pbw_prediction(rank: usize, nvars: usize, k: u32, d: u32) -> u64 {
    let n = nvars as u64;
    let x_count = binomial(d as u64 + n, n);
    let delta_count: u64 = (0..=k as u64)
        .map(|j| if n == 0 { u64::from(j == 0) } else { binomial(j + n - 1, n - 1) })
        .sum();
    rank as u64 * x_count * delta_count
}

/// Multiplies every `δ`-word of length at most `k`, written in descending
/// variable order, by every `e_j x^α` with `|α| ≤ d` on the right, and
/// counts the rank of the results against the predicted PBW count.
pub fn pbw_dimension_check(env: &Envelope, k: u32, d: u32) -> PbwReport {
    let n = env.nvars();
    let order = env.order();
    let predicted = pbw_prediction(order.rank(), n, k, d);
    let xs = monomials_up_to(n, d);
    let deltas = monomials_up_to(n, k);
    let mut columns: HashMap<(Monomial, usize, Monomial), usize> = HashMap::new();
    let mut rows: Vec<Vec<(usize, Coeff)>> = Vec::new();
    let mut leading_ok = true;
    for b in &deltas {
        let mut word = env.one();
        for i in (0..n).rev() {
            for _ in 0..b.exponent(i) {
                word = env.mul(&word, &env.delta(i)).expect("same parent");
            }
        }
        for j in 0..order.rank() {
            for x in &xs {
                let right = env.monomial(j, x, &Monomial::one(n));
                let prod = env.mul(&word, &right).expect("same parent");
                let top = prod.part_of_degree(b.degree());
                if top != env.monomial(j, x, b) {
                    leading_ok = false;
                }
                let mut row = Vec::new();
                for (jj, m, bb, c) in prod.normal_terms() {
                    let len = columns.len();
                    let col = *columns.entry((bb, jj, m)).or_insert(len);
                    row.push((col, c));
                }
                rows.push(row);
            }
        }
    }
    let ncols = columns.len();
    let dense: Vec<Vec<Coeff>> = rows
        .into_iter()
        .map(|r| {
            let mut v = vec![Coeff::zero(); ncols];
            for (c, x) in r {
                v[c] = x;
            }
            v
        })
        .collect();
    let actual = rank(&dense) as u64;
    PbwReport {
        filtration_degree: k,
        polynomial_degree: d,
        predicted,
        actual,
        leading_terms_ok: leading_ok,
        ok: leading_ok && actual == predicted,
    }
}
