//! A word-rewriting presentation of `A^e`, used to test confluence.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::field::Coeff;
use crate::order::PoissonOrder;
use crate::poly::Polynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Letter {
    X(usize),
    E(usize),
    D(usize),
}

type Word = Vec<Letter>;
type Combination = BTreeMap<Word, Coeff>;

/// An ambiguity `abc` whose two reductions disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Overlap {
    pub letters: [String; 3],
    /// Difference of the two normal forms, as `coefficient*word` terms.
    pub difference: String,
}

impl fmt::Display for Overlap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {}) leaves {}",
            self.letters[0], self.letters[1], self.letters[2], self.difference
        )
    }
}

struct System<'a> {
    order: &'a PoissonOrder,
    with_basis: bool,
    memo: HashMap<Word, Combination>,
}

fn add(c: &mut Combination, w: Word, k: Coeff) {
    if k.is_zero() {
        return;
    }
    let mut remove = false;
    match c.get_mut(&w) {
        Some(v) => {
            *v += &k;
            remove = v.is_zero();
        }
        None => {
            c.insert(w.clone(), k);
        }
    }
    if remove {
        c.remove(&w);
    }
}

impl<'a> System<'a> {
    fn new(order: &'a PoissonOrder) -> Self {
        // a rank-one order with unit e_1 needs no basis letters
        let with_basis = order.rank() > 1 || !order.unit()[0].is_constant() || !order.unit()[0].constant_term().is_one();
        System {
            order,
            with_basis,
            memo: HashMap::new(),
        }
    }

    fn letters(&self) -> Vec<Letter> {
        let n = self.order.base().nvars();
        let mut out: Vec<Letter> = (0..n).map(Letter::X).collect();
        if self.with_basis {
            out.extend((0..self.order.rank()).map(Letter::E));
        }
        out.extend((0..n).map(Letter::D));
        out
    }

    fn name(&self, l: Letter) -> String {
        let vars = self.order.ring().variables();
        match l {
            Letter::X(i) => vars[i].clone(),
            Letter::E(j) => self.order.basis_names()[j].clone(),
            Letter::D(i) => format!("d[{}]", vars[i]),
        }
    }

    /// Words for `p`, optionally followed by a letter.
    fn poly_words(&self, p: &Polynomial, then: Option<Letter>, out: &mut Combination, sign: &Coeff) {
        for (m, c) in p.terms() {
            let mut w: Word = Vec::new();
            for i in 0..m.nvars() {
                for _ in 0..m.exponent(i) {
                    w.push(Letter::X(i));
                }
            }
            w.extend(then);
            add(out, w, c * sign);
        }
    }

    /// Coordinates in `A` as words `x^α e_l`, or bare `x^α` without basis letters.
    fn element_words(&self, a: &[Polynomial], out: &mut Combination) {
        for (l, p) in a.iter().enumerate() {
            let then = self.with_basis.then_some(Letter::E(l));
            self.poly_words(p, then, out, &Coeff::one());
        }
    }

    /// The rewrite of the pair `(a, b)`, if it is a left-hand side.
    fn rule(&self, a: Letter, b: Letter) -> Option<Combination> {
        let p = self.order.base();
        let mut out = Combination::new();
        match (a, b) {
            (Letter::X(i), Letter::X(k)) if i > k => {
                add(&mut out, vec![b, a], Coeff::one());
            }
            (Letter::E(_), Letter::X(_)) => {
                add(&mut out, vec![b, a], Coeff::one());
            }
            (Letter::E(j), Letter::E(k)) => {
                self.element_words(self.order.product_of_basis(j, k), &mut out);
            }
            (Letter::D(i), Letter::X(k)) => {
                add(&mut out, vec![b, a], Coeff::one());
                self.poly_words(p.entry(i, k), None, &mut out, &Coeff::one());
            }
            (Letter::D(i), Letter::E(j)) => {
                add(&mut out, vec![b, a], Coeff::one());
                self.element_words(self.order.ham_entry(i, j), &mut out);
            }
            (Letter::D(i), Letter::D(j)) if i > j => {
                add(&mut out, vec![b, a], Coeff::one());
                let bij = p.entry(i, j);
                for k in 0..p.nvars() {
                    self.poly_words(&bij.derivative(k), Some(Letter::D(k)), &mut out, &Coeff::one());
                }
            }
            _ => return None,
        }
        Some(out)
    }

    /// Normal form by leftmost reduction.
    fn normalize_word(&mut self, w: &Word) -> Combination {
        if let Some(c) = self.memo.get(w) {
            return c.clone();
        }
        let mut result = Combination::new();
        let hit = (0..w.len().saturating_sub(1)).find_map(|p| self.rule(w[p], w[p + 1]).map(|r| (p, r)));
        match hit {
            None => add(&mut result, w.clone(), Coeff::one()),
            Some((p, r)) => {
                for (mid, k) in r {
                    let mut next = w[..p].to_vec();
                    next.extend(mid);
                    next.extend_from_slice(&w[p + 2..]);
                    for (nw, c) in self.normalize_word(&next) {
                        add(&mut result, nw, &c * &k);
                    }
                }
            }
        }
        self.memo.insert(w.clone(), result.clone());
        result
    }

    fn normalize(&mut self, c: &Combination) -> Combination {
        let mut out = Combination::new();
        for (w, k) in c {
            for (nw, c2) in self.normalize_word(w) {
                add(&mut out, nw, &c2 * k);
            }
        }
        out
    }

    /// Inserts the unit into normal words lacking a basis letter.
    fn with_unit(&mut self, c: &Combination) -> Combination {
        if !self.with_basis {
            return c.clone();
        }
        let mut out = Combination::new();
        for (w, k) in c {
            if w.iter().any(|l| matches!(l, Letter::E(_))) {
                add(&mut out, w.clone(), k.clone());
                continue;
            }
            let split = w.iter().position(|l| matches!(l, Letter::D(_))).unwrap_or(w.len());
            let mut unit = Combination::new();
            self.element_words(self.order.unit(), &mut unit);
            for (uw, uk) in unit {
                let mut nw = w[..split].to_vec();
                nw.extend(uw);
                nw.extend_from_slice(&w[split..]);
                for (fw, fk) in self.normalize_word(&nw) {
                    add(&mut out, fw, &(&fk * &uk) * k);
                }
            }
        }
        out
    }

    fn format(&self, c: &Combination) -> String {
        if c.is_empty() {
            return "0".into();
        }
        c.iter()
            .map(|(w, k)| {
                let body: Vec<String> = w.iter().map(|&l| self.name(l)).collect();
                format!("({k})*{}", if body.is_empty() { "1".into() } else { body.join("*") })
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Resolves every overlap `abc` of two rewriting rules both ways; an empty
/// list means the system is locally confluent.
pub fn diamond_overlap_check(order: &PoissonOrder) -> Vec<Overlap> {
    let mut sys = System::new(order);
    let letters = sys.letters();
    let mut out = Vec::new();
    for &a in &letters {
        for &b in &letters {
            let Some(left) = sys.rule(a, b) else { continue };
            for &c in &letters {
                let Some(right) = sys.rule(b, c) else { continue };
                let mut one = Combination::new();
                for (w, k) in &left {
                    let mut nw = w.clone();
                    nw.push(c);
                    add(&mut one, nw, k.clone());
                }
                let mut two = Combination::new();
                for (w, k) in &right {
                    let mut nw = vec![a];
                    nw.extend(w);
                    add(&mut two, nw, k.clone());
                }
                let n1 = sys.normalize(&one);
                let n1 = sys.with_unit(&n1);
                let n2 = sys.normalize(&two);
                let n2 = sys.with_unit(&n2);
                if n1 != n2 {
                    let mut diff = n1.clone();
                    for (w, k) in n2 {
                        add(&mut diff, w, -&k);
                    }
                    out.push(Overlap {
                        letters: [sys.name(a), sys.name(b), sys.name(c)],
                        difference: sys.format(&diff),
                    });
                }
            }
        }
    }
    out
}
