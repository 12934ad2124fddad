//! Buchberger's algorithm for submodules of a free module `R^r`.
//!
//! Ideals are handled as submodules of rank one. Elements are sparse vectors
//! of (position, monomial, coefficient) terms kept sorted by a
//! [`ModuleOrder`]. Pairs are selected by the sugar strategy and pruned with
//! Buchberger's chain criterion, plus the coprime-leading-term criterion in
//! rank one.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::sync::Arc;

use crate::field::Coeff;

use super::monomial::{Monomial, MonomialOrder};
use super::polynomial::{Polynomial, Ring};

/// How positions and monomials combine into a term order on `R^r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ModuleOrderKind {
    /// Position over term: lower positions dominate.
    PositionOverTerm,
    /// Term over position: compares monomials first.
    TermOverPosition,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModuleOrder {
    pub monomial: MonomialOrder,
    pub kind: ModuleOrderKind,
}

impl ModuleOrder {
    pub fn pot(monomial: MonomialOrder) -> Self {
        ModuleOrder {
            monomial,
            kind: ModuleOrderKind::PositionOverTerm,
        }
    }

    pub fn top(monomial: MonomialOrder) -> Self {
        ModuleOrder {
            monomial,
            kind: ModuleOrderKind::TermOverPosition,
        }
    }

    pub fn cmp(&self, a: (usize, &Monomial), b: (usize, &Monomial)) -> Ordering {
        match self.kind {
            ModuleOrderKind::PositionOverTerm => b.0.cmp(&a.0).then_with(|| self.monomial.cmp(a.1, b.1)),
            ModuleOrderKind::TermOverPosition => self.monomial.cmp(a.1, b.1).then_with(|| b.0.cmp(&a.0)),
        }
    }
}

pub(crate) type Term = (usize, Monomial, Coeff);

/// A sparse vector in `R^r`, terms sorted largest first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Vector {
    pub terms: Vec<Term>,
}

impl Vector {
    pub fn from_unsorted(mut terms: Vec<Term>, order: &ModuleOrder) -> Self {
        terms.retain(|t| !t.2.is_zero());
        terms.sort_by(|a, b| order.cmp((b.0, &b.1), (a.0, &a.1)));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.0 == t.0 && last.1 == t.1 => last.2 += &t.2,
                _ => out.push(t),
            }
        }
        out.retain(|t| !t.2.is_zero());
        Vector { terms: out }
    }

    pub fn from_poly(p: &Polynomial, pos: usize, order: &ModuleOrder) -> Self {
        let terms = p.terms().iter().map(|(m, c)| (pos, m.clone(), c.clone())).collect();
        Vector::from_unsorted(terms, order)
    }

    pub fn from_components(components: &[Polynomial], order: &ModuleOrder) -> Self {
        let terms = components
            .iter()
            .enumerate()
            .flat_map(|(k, p)| p.terms().iter().map(move |(m, c)| (k, m.clone(), c.clone())))
            .collect();
        Vector::from_unsorted(terms, order)
    }

    pub fn to_components(&self, ring: &Arc<Ring>, rank: usize) -> Vec<Polynomial> {
        let mut parts: Vec<Vec<(Monomial, Coeff)>> = vec![Vec::new(); rank];
        for (k, m, c) in &self.terms {
            parts[*k].push((m.clone(), c.clone()));
        }
        parts
            .into_iter()
            .map(|t| Polynomial::from_terms(ring, t))
            .collect()
    }

    pub fn to_poly(&self, ring: &Arc<Ring>) -> Polynomial {
        debug_assert!(self.terms.iter().all(|t| t.0 == 0));
        Polynomial::from_terms(ring, self.terms.iter().map(|(_, m, c)| (m.clone(), c.clone())))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn max_degree(&self) -> u32 {
        self.terms.iter().map(|t| t.1.degree()).max().unwrap_or(0)
    }

    pub fn make_monic(&mut self) {
        if let Some(lc) = self.terms.first().map(|t| t.2.clone()) {
            if !lc.is_one() {
                let inv = lc.inv().expect("nonzero");
                for t in &mut self.terms {
                    t.2 = &t.2 * &inv;
                }
            }
        }
    }

    pub fn scale_mono(&self, c: &Coeff, m: &Monomial) -> Vector {
        Vector {
            terms: self.terms.iter().map(|(p, t, a)| (*p, t.mul(m), a * c)).collect(),
        }
    }
}

/// `a - c*m*b` (or `a + b` when `scale` is `None` and `negate` false).
fn merge_sub(a: &[Term], b: &[Term], scale: Option<(&Coeff, &Monomial)>, order: &ModuleOrder, negate: bool) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mapped = |t: &Term| -> Term {
        match scale {
            Some((c, m)) => (t.0, t.1.mul(m), -&(&t.2 * c)),
            None if negate => (t.0, t.1.clone(), -&t.2),
            None => t.clone(),
        }
    };
    let (mut i, mut j) = (0, 0);
    let mut pending: Option<Term> = b.first().map(mapped);
    while i < a.len() {
        let Some(bt) = pending.as_ref() else { break };
        match order.cmp((a[i].0, &a[i].1), (bt.0, &bt.1)) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(pending.take().expect("pending"));
                j += 1;
                pending = b.get(j).map(mapped);
            }
            Ordering::Equal => {
                let c = &a[i].2 + &bt.2;
                if !c.is_zero() {
                    out.push((a[i].0, a[i].1.clone(), c));
                }
                i += 1;
                j += 1;
                pending = b.get(j).map(mapped);
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    if let Some(bt) = pending {
        out.push(bt);
        out.extend(b[j + 1..].iter().map(mapped));
    }
    out
}

fn find_reducer<'a>(basis: &'a [Vector], pos: usize, m: &Monomial, skip: Option<usize>) -> Option<(usize, &'a Vector)> {
    basis.iter().enumerate().find(|(k, g)| {
        Some(*k) != skip
            && g.lead()
                .is_some_and(|(p, lm, _)| *p == pos && lm.divides(m))
    })
}

/// Normal form of `f` against `basis` (every element monic).
pub(crate) fn reduce(f: &Vector, basis: &[Vector], order: &ModuleOrder, skip: Option<usize>) -> Vector {
    let mut rest = f.terms.clone();
    let mut rem: Vec<Term> = Vec::new();
    while !rest.is_empty() {
        let (pos, m, c) = rest[0].clone();
        match find_reducer(basis, pos, &m, skip) {
            Some((_, g)) => {
                let (_, lm, _) = g.lead().expect("nonzero");
                let q = m.div(lm).expect("divides");
                rest = merge_sub(&rest, &g.terms, Some((&c, &q)), order, false);
            }
            None => {
                rem.push(rest.remove(0));
            }
        }
    }
    Vector { terms: rem }
}

/// Reduces only until the leading term is irreducible.
fn top_reduce(f: Vector, basis: &[Vector], order: &ModuleOrder) -> Vector {
    let mut rest = f.terms;
    while let Some((pos, m, c)) = rest.first().cloned() {
        match find_reducer(basis, pos, &m, None) {
            Some((_, g)) => {
                let (_, lm, _) = g.lead().expect("nonzero");
                let q = m.div(lm).expect("divides");
                rest = merge_sub(&rest, &g.terms, Some((&c, &q)), order, false);
            }
            None => break,
        }
    }
    Vector { terms: rest }
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    pos: usize,
    sugar: u32,
}

fn s_vector(f: &Vector, g: &Vector, lcm: &Monomial) -> (Vector, Monomial, Monomial) {
    let (_, lf, _) = f.lead().expect("nonzero");
    let (_, lg, _) = g.lead().expect("nonzero");
    let mf = lcm.div(lf).expect("lcm");
    let mg = lcm.div(lg).expect("lcm");
    (f.scale_mono(&Coeff::one(), &mf), mf, mg)
}

/// Reduced Gröbner basis of the submodule generated by `gens`, monic, sorted
/// by decreasing leading term. `coprime_criterion` may be set only when every
/// element lives in a single position (the ideal case).
pub(crate) fn buchberger(gens: &[Vector], order: &ModuleOrder, coprime_criterion: bool) -> Vec<Vector> {
    let mut basis: Vec<Vector> = Vec::new();
    let mut sugar: Vec<u32> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();

    let add_element = |h: Vector,
                           s: u32,
                           basis: &mut Vec<Vector>,
                           sugar: &mut Vec<u32>,
                           pairs: &mut Vec<Pair>,
                           pending: &mut HashSet<(usize, usize)>| {
        let (hp, hm, _) = h.lead().cloned().expect("nonzero");
        let new = basis.len();
        for (k, g) in basis.iter().enumerate() {
            let (gp, gm, _) = g.lead().expect("nonzero");
            if *gp != hp {
                continue;
            }
            if coprime_criterion && gm.is_coprime(&hm) {
                continue;
            }
            let lcm = gm.lcm(&hm);
            let ps = (sugar[k] + lcm.degree() - gm.degree()).max(s + lcm.degree() - hm.degree());
            pairs.push(Pair {
                i: k,
                j: new,
                lcm,
                pos: hp,
                sugar: ps,
            });
            pending.insert((k, new));
        }
        basis.push(h);
        sugar.push(s);
    };

    // seed with inter-reduced, monic generators
    let mut seeds: Vec<Vector> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    seeds.sort_by(|a, b| {
        let (ap, am, _) = a.lead().expect("nonzero");
        let (bp, bm, _) = b.lead().expect("nonzero");
        order.cmp((*ap, am), (*bp, bm))
    });
    for g in seeds {
        let s = g.max_degree();
        let mut h = reduce(&g, &basis, order, None);
        if h.is_zero() {
            continue;
        }
        h.make_monic();
        add_element(h, s, &mut basis, &mut sugar, &mut pairs, &mut pending);
    }

    while !pairs.is_empty() {
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                pairs[a].sugar.cmp(&pairs[b].sugar).then_with(|| {
                    order.cmp((pairs[a].pos, &pairs[a].lcm), (pairs[b].pos, &pairs[b].lcm))
                })
            })
            .expect("nonempty");
        let pair = pairs.swap_remove(best);
        pending.remove(&(pair.i, pair.j));

        let key = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
        let chain = basis.iter().enumerate().any(|(k, g)| {
            k != pair.i
                && k != pair.j
                && g.lead()
                    .is_some_and(|(p, m, _)| *p == pair.pos && m.divides(&pair.lcm))
                && !pending.contains(&key(pair.i, k))
                && !pending.contains(&key(pair.j, k))
        });
        if chain {
            continue;
        }

        let (left, _, mg) = s_vector(&basis[pair.i], &basis[pair.j], &pair.lcm);
        let right = basis[pair.j].scale_mono(&Coeff::one(), &mg);
        let s = Vector {
            terms: merge_sub(&left.terms, &right.terms, None, order, true),
        };
        let mut h = top_reduce(s, &basis, order);
        if h.is_zero() {
            continue;
        }
        h = reduce(&h, &basis, order, None);
        h.make_monic();
        add_element(h, pair.sugar, &mut basis, &mut sugar, &mut pairs, &mut pending);
    }

    interreduce(basis, order)
}

/// Minimal, fully reduced, monic basis sorted by decreasing leading term.
pub(crate) fn interreduce(mut basis: Vec<Vector>, order: &ModuleOrder) -> Vec<Vector> {
    basis.retain(|v| !v.is_zero());
    for v in basis.iter_mut() {
        v.make_monic();
    }
    basis.sort_by(|a, b| {
        let (ap, am, _) = a.lead().expect("nonzero");
        let (bp, bm, _) = b.lead().expect("nonzero");
        order.cmp((*ap, am), (*bp, bm))
    });
    let mut minimal: Vec<Vector> = Vec::new();
    for v in basis {
        let (vp, vm, _) = v.lead().expect("nonzero");
        let redundant = minimal
            .iter()
            .any(|g| g.lead().is_some_and(|(p, m, _)| p == vp && m.divides(vm)));
        if !redundant {
            minimal.push(v);
        }
    }
    let mut out: Vec<Vector> = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let mut r = reduce(&minimal[k], &minimal, order, Some(k));
        r.make_monic();
        out.push(r);
    }
    out.reverse();
    out
}

/// Buchberger's criterion: every S-vector reduces to zero.
pub(crate) fn satisfies_buchberger_criterion(basis: &[Vector], order: &ModuleOrder) -> bool {
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let (pi, mi, ci) = basis[i].lead().expect("nonzero");
            let (pj, mj, cj) = basis[j].lead().expect("nonzero");
            if pi != pj {
                continue;
            }
            let lcm = mi.lcm(mj);
            let a = basis[i].scale_mono(&ci.inv().expect("nonzero"), &lcm.div(mi).expect("lcm"));
            let b = basis[j].scale_mono(&cj.inv().expect("nonzero"), &lcm.div(mj).expect("lcm"));
            let s = Vector {
                terms: merge_sub(&a.terms, &b.terms, None, order, true),
            };
            let monic: Vec<Vector> = basis
                .iter()
                .map(|v| {
                    let mut v = v.clone();
                    v.make_monic();
                    v
                })
                .collect();
            if !reduce(&s, &monic, order, None).is_zero() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal_gb(ring: &Arc<Ring>, gens: &[&str], order: MonomialOrder) -> Vec<String> {
        let ord = ModuleOrder::pot(order);
        let gens: Vec<Vector> = gens
            .iter()
            .map(|g| Vector::from_poly(&ring.parse(g).unwrap(), 0, &ord))
            .collect();
        let gb = buchberger(&gens, &ord, true);
        assert!(satisfies_buchberger_criterion(&gb, &ord));
        gb.iter().map(|v| v.to_poly(ring).to_string()).collect()
    }

    #[test]
    fn linear_elimination() {
        let r = Ring::rational(&["x", "y"]).unwrap();
        assert_eq!(ideal_gb(&r, &["x + y", "x - y"], MonomialOrder::DegRevLex), vec!["x", "y"]);
    }

    #[test]
    fn hyperbola_and_circle_lex() {
        let r = Ring::rational(&["x", "y"]).unwrap();
        // x^2 + y^2 - 1, x - y  ->  x - y, y^2 - 1/2
        assert_eq!(
            ideal_gb(&r, &["x^2 + y^2 - 1", "x - y"], MonomialOrder::Lex),
            vec!["x - y", "y^2 - 1/2"]
        );
    }

    #[test]
    fn module_basis_in_two_positions() {
        let r = Ring::rational(&["x", "y"]).unwrap();
        let ord = ModuleOrder::pot(MonomialOrder::DegRevLex);
        let v1 = Vector::from_components(&[r.var(0), r.var(1)], &ord);
        let v2 = Vector::from_components(&[r.var(1), r.zero()], &ord);
        let gb = buchberger(&[v1, v2], &ord, false);
        assert!(satisfies_buchberger_criterion(&gb, &ord));
        // (x, y) and (y, 0) give the syzygy-derived (0, y^2)
        let comps: Vec<Vec<String>> = gb
            .iter()
            .map(|v| v.to_components(&r, 2).iter().map(|p| p.to_string()).collect())
            .collect();
        assert!(comps.contains(&vec!["0".to_string(), "y^2".to_string()]));
    }
}
