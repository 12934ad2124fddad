use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::field::Coeff;

use super::groebner::{buchberger, ModuleOrder, Vector};
use super::monomial::{Monomial, MonomialOrder};
use super::polynomial::{Polynomial, Ring};

/// A polynomial ideal with a lazily computed reduced Gröbner basis.
#[derive(Clone, Debug)]
pub struct Ideal {
    ring: Arc<Ring>,
    generators: Vec<Polynomial>,
    order: MonomialOrder,
    basis: OnceLock<Vec<Polynomial>>,
}

impl Ideal {
    pub fn new(ring: &Arc<Ring>, generators: Vec<Polynomial>) -> Result<Self> {
        for g in &generators {
            if !Ring::same(g.ring(), ring) {
                return Err(Error::input(format!("generator `{g}` lives in a different ring")));
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
            order: MonomialOrder::DegRevLex,
            basis: OnceLock::new(),
        })
    }

    pub fn parse(ring: &Arc<Ring>, generators: &[&str]) -> Result<Self> {
        let gens = generators
            .iter()
            .map(|g| ring.parse(g))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, gens)
    }

    pub fn zero(ring: &Arc<Ring>) -> Self {
        Ideal::new(ring, Vec::new()).expect("empty")
    }

    pub fn unit(ring: &Arc<Ring>) -> Self {
        Ideal::new(ring, vec![ring.one()]).expect("unit")
    }

    /// Maximal ideal `(x_1 - a_1, ..., x_n - a_n)` of a point.
    pub fn of_point(ring: &Arc<Ring>, point: &[Coeff]) -> Result<Self> {
        if point.len() != ring.nvars() {
            return Err(Error::input(format!(
                "point has {} coordinates, ring has {} variables",
                point.len(),
                ring.nvars()
            )));
        }
        for c in point {
            if !ring.field().contains(c) {
                return Err(Error::input(format!("coordinate {c} is outside {}", ring.field())));
            }
        }
        let gens = point
            .iter()
            .enumerate()
            .map(|(i, a)| &ring.var(i) - &ring.constant(a.clone()))
            .collect();
        Ideal::new(ring, gens)
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    /// Same ideal, Gröbner basis taken under `order`.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Self> {
        order.validate(self.ring.nvars())?;
        Ok(Ideal {
            ring: self.ring.clone(),
            generators: self.generators.clone(),
            order,
            basis: OnceLock::new(),
        })
    }

    /// Reduced Gröbner basis under this ideal's order, monic, sorted by
    /// decreasing leading monomial.
    pub fn groebner_basis(&self) -> &[Polynomial] {
        self.basis.get_or_init(|| {
            let ord = ModuleOrder::pot(self.order.clone());
            let gens: Vec<Vector> = self
                .generators
                .iter()
                .map(|g| Vector::from_poly(g, 0, &ord))
                .collect();
            buchberger(&gens, &ord, true)
                .iter()
                .map(|v| v.to_poly(&self.ring))
                .collect()
        })
    }

    /// Replaces the generators by the reduced basis.
    pub fn reduced(&self) -> Ideal {
        let basis = self.groebner_basis().to_vec();
        let cell = OnceLock::new();
        let _ = cell.set(basis.clone());
        Ideal {
            ring: self.ring.clone(),
            generators: basis,
            order: self.order.clone(),
            basis: cell,
        }
    }

    fn basis_vectors(&self) -> (ModuleOrder, Vec<Vector>) {
        let ord = ModuleOrder::pot(self.order.clone());
        let vs = self
            .groebner_basis()
            .iter()
            .map(|g| Vector::from_poly(g, 0, &ord))
            .collect();
        (ord, vs)
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        assert!(Ring::same(f.ring(), &self.ring), "polynomial from a different ring");
        let (ord, basis) = self.basis_vectors();
        super::groebner::reduce(&Vector::from_poly(f, 0, &ord), &basis, &ord, None).to_poly(&self.ring)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        other.generators.iter().all(|g| self.contains(g))
    }

    pub fn is_unit(&self) -> bool {
        self.groebner_basis().iter().any(Polynomial::is_constant)
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// Equality of ideals, decided by comparing reduced bases.
    pub fn same_ideal(&self, other: &Ideal) -> bool {
        if !Ring::same(&self.ring, &other.ring) {
            return false;
        }
        if self.order == other.order {
            self.groebner_basis() == other.groebner_basis()
        } else {
            self.contains_ideal(other) && other.contains_ideal(self)
        }
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Ideal::new(&self.ring, gens).expect("same ring")
    }

    pub fn product(&self, other: &Ideal) -> Ideal {
        let gens = self
            .generators
            .iter()
            .flat_map(|a| other.generators.iter().map(move |b| a * b))
            .collect();
        Ideal::new(&self.ring, gens).expect("same ring")
    }

    /// `I ∩ J` via a tag variable `t`: eliminate `t` from `tI + (1 - t)J`.
    pub fn intersect(&self, other: &Ideal) -> Ideal {
        if self.is_zero() || other.is_zero() {
            return Ideal::zero(&self.ring);
        }
        let n = self.ring.nvars();
        let tagged = self.ring.with_prefix_vars(&["t"]);
        let t = tagged.var(0);
        let one_minus_t = &tagged.one() - &t;
        let mut gens: Vec<Polynomial> = self
            .generators
            .iter()
            .map(|g| &t * &g.shift_into(&tagged, 1))
            .collect();
        gens.extend(
            other
                .generators
                .iter()
                .map(|g| &one_minus_t * &g.shift_into(&tagged, 1)),
        );
        let big = Ideal::new(&tagged, gens)
            .expect("same ring")
            .with_order(MonomialOrder::Block(vec![1, n]))
            .expect("valid block");
        let kept: Vec<Polynomial> = big
            .groebner_basis()
            .iter()
            .filter(|g| g.degree_in(0) == 0)
            .map(|g| g.unshift_into(&self.ring, 1))
            .collect();
        Ideal::new(&self.ring, kept).expect("same ring")
    }

    /// `I : g = { h : h g ∈ I }`.
    pub fn quotient_by(&self, g: &Polynomial) -> Ideal {
        if g.is_zero() {
            return Ideal::unit(&self.ring);
        }
        let principal = Ideal::new(&self.ring, vec![g.clone()]).expect("same ring");
        let inter = self.intersect(&principal);
        let gens = inter
            .groebner_basis()
            .iter()
            .map(|h| h.div_exact(g).expect("elements of (g) are divisible by g"))
            .collect();
        Ideal::new(&self.ring, gens).expect("same ring")
    }

    /// `I : J = ∩_g (I : g)` over the generators of `J`.
    pub fn quotient(&self, other: &Ideal) -> Ideal {
        let mut acc = Ideal::unit(&self.ring);
        for g in &other.generators {
            acc = acc.intersect(&self.quotient_by(g)).reduced();
        }
        acc
    }

    /// Saturation `I : g^∞`.
    pub fn saturate(&self, g: &Polynomial) -> Ideal {
        let mut current = self.reduced();
        loop {
            let next = current.quotient_by(g).reduced();
            if next.same_ideal(&current) {
                return current;
            }
            current = next;
        }
    }

    /// Radical membership by the Rabinowitsch trick: `f ∈ √I` iff
    /// `1 ∈ I + (1 - t f)`.
    pub fn radical_contains(&self, f: &Polynomial) -> bool {
        let tagged = self.ring.with_prefix_vars(&["t"]);
        let mut gens: Vec<Polynomial> = self
            .generators
            .iter()
            .map(|g| g.shift_into(&tagged, 1))
            .collect();
        gens.push(&tagged.one() - &(&tagged.var(0) * &f.shift_into(&tagged, 1)));
        Ideal::new(&tagged, gens).expect("same ring").is_unit()
    }

    /// Elimination ideal `I ∩ k[remaining variables]`, expressed in this ring.
    /// `vars` must be the leading variables and `order` must eliminate them.
    pub fn eliminate(&self, vars: &[&str], order: &MonomialOrder) -> Result<Ideal> {
        let n = self.ring.nvars();
        order.validate(n)?;
        let mut idx = Vec::new();
        for v in vars {
            idx.push(
                self.ring
                    .var_index(v)
                    .ok_or_else(|| Error::input(format!("unknown variable `{v}`")))?,
            );
        }
        idx.sort_unstable();
        idx.dedup();
        let k = idx.len();
        if idx != (0..k).collect::<Vec<_>>() || !order.eliminates_prefix(k, n) {
            return Err(Error::input(format!(
                "order {order} is not an elimination order for {vars:?}"
            )));
        }
        let gb = self.with_order(order.clone())?;
        let kept = gb
            .groebner_basis()
            .iter()
            .filter(|g| (0..k).all(|i| g.degree_in(i) == 0))
            .cloned()
            .collect();
        Ideal::new(&self.ring, kept)
    }

    /// Eliminates an arbitrary set of variables by reordering them first.
    pub fn eliminate_variables(&self, vars: &[&str]) -> Result<Ideal> {
        let n = self.ring.nvars();
        let mut first = Vec::new();
        for v in vars {
            let i = self
                .ring
                .var_index(v)
                .ok_or_else(|| Error::input(format!("unknown variable `{v}`")))?;
            if !first.contains(&i) {
                first.push(i);
            }
        }
        if first.is_empty() {
            return Ok(self.clone());
        }
        let k = first.len();
        let mut perm = first.clone();
        perm.extend((0..n).filter(|i| !first.contains(i)));
        let permuted = self.ring.permuted(&perm);
        // old index perm[j] -> new index j
        let mut to_new = vec![0; n];
        for (j, &p) in perm.iter().enumerate() {
            to_new[p] = j;
        }
        let gens = self.generators.iter().map(|g| g.embed(&permuted, &to_new)).collect();
        let order = if k == n {
            MonomialOrder::DegRevLex
        } else {
            MonomialOrder::Block(vec![k, n - k])
        };
        let moved = Ideal::new(&permuted, gens)?.with_order(order)?;
        let kept = moved
            .groebner_basis()
            .iter()
            .filter(|g| (0..k).all(|i| g.degree_in(i) == 0))
            .map(|g| g.embed(&self.ring, &perm))
            .collect();
        Ideal::new(&self.ring, kept)
    }

    fn leading_monomials(&self) -> Vec<Monomial> {
        let deg = self.with_order(MonomialOrder::DegRevLex).expect("degrevlex");
        let basis = if self.order == MonomialOrder::DegRevLex {
            self.groebner_basis().to_vec()
        } else {
            deg.groebner_basis().to_vec()
        };
        basis
            .iter()
            .map(|g| g.leading_term(&MonomialOrder::DegRevLex).expect("nonzero").0.clone())
            .collect()
    }

    /// Krull dimension of the quotient ring; `-1` for the unit ideal.
    /// Computed as the largest set of variables independent modulo the
    /// leading-term ideal.
    pub fn krull_dimension(&self) -> i64 {
        if self.is_unit() {
            return -1;
        }
        let n = self.ring.nvars();
        let leads = self.leading_monomials();
        let mut best = 0usize;
        for mask in 0u64..(1u64 << n) {
            let size = mask.count_ones() as usize;
            if size <= best {
                continue;
            }
            let allowed: Vec<bool> = (0..n).map(|i| mask >> i & 1 == 1).collect();
            if leads.iter().all(|m| !m.supported_in(&allowed)) {
                best = size;
            }
        }
        best as i64
    }

    /// Monomials outside the leading-term ideal when there are finitely many.
    pub fn standard_monomials(&self) -> Option<Vec<Monomial>> {
        if self.is_unit() {
            return Some(Vec::new());
        }
        let n = self.ring.nvars();
        let leads = self.leading_monomials();
        // zero-dimensional iff each variable has a pure power among the leads
        let mut bounds = vec![0u32; n];
        for (i, b) in bounds.iter_mut().enumerate() {
            *b = leads
                .iter()
                .filter(|m| m.exponents().iter().enumerate().all(|(j, &e)| j == i || e == 0))
                .map(|m| m.exponent(i))
                .min()?;
        }
        let mut out = Vec::new();
        let mut exps = vec![0u32; n];
        loop {
            let m = Monomial::from_exponents(exps.iter().copied());
            if !leads.iter().any(|l| l.divides(&m)) {
                out.push(m);
            }
            let mut i = 0;
            loop {
                if i == n {
                    out.sort_by(|a, b| MonomialOrder::DegRevLex.cmp(a, b));
                    return Some(out);
                }
                exps[i] += 1;
                if exps[i] < bounds[i] {
                    break;
                }
                exps[i] = 0;
                i += 1;
            }
        }
    }

    /// Vector-space dimension of the quotient ring, when finite.
    pub fn quotient_dimension(&self) -> Option<usize> {
        self.standard_monomials().map(|v| v.len())
    }
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.same_ideal(other)
    }
}

impl fmt::Display for Ideal {
    /// Prints the reduced Gröbner basis, e.g. `(h^2 + 4*e*f)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let basis = self.groebner_basis();
        if basis.is_empty() {
            return write!(f, "(0)");
        }
        let parts: Vec<String> = basis.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}
