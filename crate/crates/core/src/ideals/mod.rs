//! Poisson ideals: stability, closures, cores and symplectic cores.

mod certify;
mod core;

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Coeff;
use crate::poisson::PoissonAlgebra;
use crate::poly::{Ideal, Polynomial, Ring};

pub use self::core::{poisson_core, poisson_core_with, CoreCertificate, CoreOptions, CoreResult};
pub use certify::{certainly_prime, rational_points};

/// A failed stability check: `{x_var, generator}` is not in the ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub variable: usize,
    pub generator: usize,
    pub bracket: Polynomial,
}

#[derive(Clone, Debug)]
pub struct PoissonIdealReport {
    pub ideal: Ideal,
    pub is_poisson: bool,
    pub witnesses: Vec<Witness>,
}

impl fmt::Display for PoissonIdealReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_poisson {
            return write!(f, "{} is a Poisson ideal", self.ideal);
        }
        let vars = self.ideal.ring().variables();
        write!(f, "{} is not a Poisson ideal", self.ideal)?;
        for w in &self.witnesses {
            write!(
                f,
                "\n  {{{}, {}}} = {} is not in the ideal",
                vars[w.variable],
                self.ideal.generators()[w.generator],
                w.bracket
            )?;
        }
        Ok(())
    }
}

fn check_ring(ideal: &Ideal, p: &PoissonAlgebra) -> Result<()> {
    if Ring::same(ideal.ring(), p.ring()) {
        Ok(())
    } else {
        Err(Error::input("ideal and Poisson algebra live in different rings"))
    }
}

/// Checks `{x_i, f_j} ∈ I` for every variable and generator.
pub fn is_poisson_stable(ideal: &Ideal, p: &PoissonAlgebra) -> Result<PoissonIdealReport> {
    check_ring(ideal, p)?;
    let mut witnesses = Vec::new();
    for (j, f) in ideal.generators().iter().enumerate() {
        for i in 0..p.nvars() {
            let b = p.bracket_var(i, f);
            if !ideal.contains(&b) {
                witnesses.push(Witness {
                    variable: i,
                    generator: j,
                    bracket: b,
                });
            }
        }
    }
    Ok(PoissonIdealReport {
        ideal: ideal.clone(),
        is_poisson: witnesses.is_empty(),
        witnesses,
    })
}

pub(crate) fn is_poisson(ideal: &Ideal, p: &PoissonAlgebra) -> bool {
    ideal
        .groebner_basis()
        .iter()
        .all(|f| (0..p.nvars()).all(|i| ideal.contains(&p.bracket_var(i, f))))
}

/// The smallest Poisson ideal containing `ideal`.
pub fn poisson_closure(ideal: &Ideal, p: &PoissonAlgebra, round_cap: usize) -> Result<Ideal> {
    check_ring(ideal, p)?;
    let mut current = ideal.reduced();
    for _ in 0..round_cap {
        let mut gens = current.generators().to_vec();
        let mut grew = false;
        for f in current.groebner_basis() {
            for i in 0..p.nvars() {
                let b = p.bracket_var(i, f);
                if !current.contains(&b) {
                    gens.push(b);
                    grew = true;
                }
            }
        }
        if !grew {
            return Ok(current);
        }
        current = Ideal::new(ideal.ring(), gens)?.reduced();
    }
    Err(Error::RoundCap { rounds: round_cap })
}

/// The Poisson core of the maximal ideal of `point`.
pub fn symplectic_core_ideal(point: &[Coeff], p: &PoissonAlgebra) -> Result<Ideal> {
    Ok(symplectic_core_with(point, p, &CoreOptions::default())?.ideal)
}

pub fn symplectic_core_with(point: &[Coeff], p: &PoissonAlgebra, options: &CoreOptions) -> Result<CoreResult> {
    let m = Ideal::of_point(p.ring(), point)?;
    poisson_core_with(&m, p, options)
}
