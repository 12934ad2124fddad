use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Exponent vector of a monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(SmallVec<[u32; 8]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn from_exponents(exps: impl IntoIterator<Item = u32>) -> Self {
        Monomial(exps.into_iter().collect())
    }

    pub fn variable(nvars: usize, i: usize) -> Self {
        let mut m = Monomial::one(nvars);
        m.0[i] = 1;
        m
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0
            .iter()
            .zip(other.0.iter())
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        other.divides(self).then(|| {
            Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a - b).collect())
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(&a, &b)| a.max(b))
                .collect(),
        )
    }

    /// Exponent vector with `extra` zero slots prepended.
    pub(crate) fn shifted(&self, extra: usize) -> Monomial {
        let mut v: SmallVec<[u32; 8]> = SmallVec::from_elem(0, extra);
        v.extend_from_slice(&self.0);
        Monomial(v)
    }

    pub(crate) fn set(&mut self, i: usize, e: u32) {
        self.0[i] = e;
    }

    /// Support is contained in the variable set `mask`.
    pub(crate) fn supported_in(&self, mask: &[bool]) -> bool {
        self.0.iter().zip(mask).all(|(&e, &allowed)| e == 0 || allowed)
    }
}

/// Monomial orders. Variables are ranked in ring order, `x_1 > x_2 > ...`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    #[default]
    DegRevLex,
    Lex,
    /// Consecutive blocks of the given sizes, compared block by block, each
    /// block by degree reverse lexicographic order.
    Block(Vec<usize>),
}

fn degrevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for (x, y) in a.iter().zip(b.iter()).rev() {
        if x != y {
            // smaller exponent of the last variable ranks higher
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::DegRevLex => degrevlex(&a.0, &b.0),
            MonomialOrder::Lex => a.0.cmp(&b.0),
            MonomialOrder::Block(sizes) => {
                let mut start = 0;
                for &s in sizes {
                    let end = (start + s).min(a.0.len());
                    match degrevlex(&a.0[start..end], &b.0[start..end]) {
                        Ordering::Equal => {}
                        o => return o,
                    }
                    start = end;
                }
                degrevlex(&a.0[start..], &b.0[start..])
            }
        }
    }

    /// Every monomial of higher total degree ranks higher.
    pub fn is_degree_compatible(&self) -> bool {
        match self {
            MonomialOrder::DegRevLex => true,
            MonomialOrder::Lex => false,
            MonomialOrder::Block(sizes) => sizes.len() <= 1,
        }
    }

    /// Whether the order eliminates the first `k` variables.
    pub fn eliminates_prefix(&self, k: usize, nvars: usize) -> bool {
        if k == 0 {
            return true;
        }
        match self {
            MonomialOrder::DegRevLex => k == nvars,
            MonomialOrder::Lex => true,
            MonomialOrder::Block(sizes) => {
                let mut acc = 0;
                for &s in sizes {
                    acc += s;
                    if acc == k {
                        return true;
                    }
                    if acc > k {
                        return false;
                    }
                }
                acc <= k && k == nvars
            }
        }
    }

    pub(crate) fn validate(&self, nvars: usize) -> Result<()> {
        if let MonomialOrder::Block(sizes) = self {
            if sizes.iter().sum::<usize>() != nvars || sizes.contains(&0) {
                return Err(Error::input(format!(
                    "block sizes {sizes:?} do not partition {nvars} variables"
                )));
            }
        }
        Ok(())
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::DegRevLex => write!(f, "degrevlex"),
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::Block(s) => {
                let parts: Vec<String> = s.iter().map(|x| x.to_string()).collect();
                write!(f, "block:{}", parts.join(","))
            }
        }
    }
}

impl std::str::FromStr for MonomialOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "degrevlex" => Ok(MonomialOrder::DegRevLex),
            "lex" => Ok(MonomialOrder::Lex),
            other => {
                let sizes = other
                    .strip_prefix("block:")
                    .ok_or_else(|| Error::input(format!("unknown monomial order `{other}`")))?;
                let sizes = sizes
                    .split(',')
                    .map(|p| p.trim().parse::<usize>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|_| Error::input(format!("bad block sizes `{sizes}`")))?;
                Ok(MonomialOrder::Block(sizes))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e.iter().copied())
    }

    #[test]
    fn degrevlex_ranks_quadrics() {
        // e > h > f
        let mut monos = vec![m(&[0, 0, 2]), m(&[1, 0, 1]), m(&[0, 2, 0]), m(&[2, 0, 0]), m(&[1, 1, 0]), m(&[0, 1, 1])];
        monos.sort_by(|a, b| MonomialOrder::DegRevLex.cmp(b, a));
        assert_eq!(
            monos,
            vec![m(&[2, 0, 0]), m(&[1, 1, 0]), m(&[0, 2, 0]), m(&[1, 0, 1]), m(&[0, 1, 1]), m(&[0, 0, 2])]
        );
    }

    #[test]
    fn block_order_eliminates_first_block() {
        let ord = MonomialOrder::Block(vec![1, 2]);
        assert_eq!(ord.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
        assert!(ord.eliminates_prefix(1, 3));
        assert!(!ord.eliminates_prefix(2, 3));
        assert!(!MonomialOrder::DegRevLex.eliminates_prefix(1, 3));
        assert!(MonomialOrder::Lex.eliminates_prefix(2, 3));
    }

    #[test]
    fn parse_round_trip() {
        for s in ["degrevlex", "lex", "block:2,1"] {
            assert_eq!(s.parse::<MonomialOrder>().unwrap().to_string(), s);
        }
        assert!("grlex".parse::<MonomialOrder>().is_err());
    }
}
