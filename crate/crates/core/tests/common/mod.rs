#![allow(dead_code)]

use std::cmp::Reverse;
use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use poisson_order::field::Coeff;
use poisson_order::{Ideal, Monomial, Polynomial, Ring};

/// Columns sort by descending degree, so the first key of a row is its
/// highest-degree monomial.
type Key = (Reverse<u32>, Vec<u32>);
type Row = BTreeMap<Key, BigRational>;

fn key(exps: &[u32]) -> Key {
    (Reverse(exps.iter().sum()), exps.to_vec())
}

pub fn rational(c: &Coeff) -> BigRational {
    c.as_rational().expect("rational coefficient").clone()
}

fn row_of(p: &Polynomial) -> Row {
    p.terms().iter().map(|(m, c)| (key(m.exponents()), rational(c))).collect()
}

fn times_monomial(row: &Row, m: &[u32]) -> Row {
    row.iter()
        .map(|((_, e), c)| {
            let exps: Vec<u32> = e.iter().zip(m).map(|(a, b)| a + b).collect();
            (key(&exps), c.clone())
        })
        .collect()
}

fn monomials_of_degree_at_most(n: usize, d: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![0; n]];
    for i in 0..n {
        let mut next = Vec::new();
        for m in &out {
            let used: u32 = m.iter().sum();
            for e in 0..=d - used {
                let mut m2 = m.clone();
                m2[i] = e;
                next.push(m2);
            }
        }
        out = next;
    }
    out
}

/// Degree-truncated span `{m·g : deg(m·g) ≤ D}` of an ideal's generators,
/// kept in semi-echelon form with distinct leading monomials.
pub struct Truncation {
    pivots: BTreeMap<Key, Row>,
    pub degree: u32,
}

impl Truncation {
    fn reduce(&self, mut row: Row) -> Row {
        loop {
            let Some((lead, c)) = row.iter().find(|(k, _)| self.pivots.contains_key(*k)).map(|(k, c)| (k.clone(), c.clone())) else {
                return row;
            };
            for (k, v) in &self.pivots[&lead] {
                let entry = row.entry(k.clone()).or_insert_with(BigRational::zero);
                *entry -= &c * v;
                if entry.is_zero() {
                    row.remove(k);
                }
            }
        }
    }

    fn insert(&mut self, row: Row) {
        let row = self.reduce(row);
        if let Some((lead, c)) = row.iter().next().map(|(k, c)| (k.clone(), c.clone())) {
            let inv = c.recip();
            let normalized = row.into_iter().map(|(k, v)| (k, v * &inv)).collect();
            self.pivots.insert(lead, normalized);
        }
    }

    pub fn new(generators: &[Polynomial], nvars: usize, degree: u32) -> Truncation {
        let mut t = Truncation {
            pivots: BTreeMap::new(),
            degree,
        };
        for g in generators {
            let Some(dg) = g.total_degree() else { continue };
            if dg > degree {
                continue;
            }
            let base = row_of(g);
            for m in monomials_of_degree_at_most(nvars, degree - dg) {
                t.insert(times_monomial(&base, &m));
            }
        }
        t
    }

    /// Dimension of the part of the span supported in degrees `≤ q`.
    pub fn dimension_up_to(&self, q: u32) -> usize {
        self.pivots.keys().filter(|(Reverse(d), _)| *d <= q).count()
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.reduce(row_of(f)).is_empty()
    }
}

/// Membership by linear algebra: raises the truncation degree until the
/// part of the span in degrees `≤ deg f` has been stable for two steps.
pub fn brute_force_member(f: &Polynomial, ideal: &Ideal) -> bool {
    let q = f.total_degree().unwrap_or(0);
    let n = ideal.ring().nvars();
    let mut d = q.max(1);
    let mut last = Truncation::new(ideal.generators(), n, d);
    let mut stable = 0;
    while stable < 2 && d < q + 8 {
        d += 1;
        let next = Truncation::new(ideal.generators(), n, d);
        if next.dimension_up_to(q) == last.dimension_up_to(q) {
            stable += 1;
        } else {
            stable = 0;
        }
        last = next;
    }
    last.contains(f)
}

/// `(q^N - 1) / (q - zeta)` by schoolbook long division over `Q`, evaluated
/// at `q = zeta` and multiplied by `zeta^-N`, for a rational root `zeta`.
pub fn semiclassical_scalar_by_division(n_exp: usize, zeta: i64) -> (BigRational, BigRational) {
    // coefficients, highest degree first
    let mut num: Vec<BigRational> = vec![BigRational::zero(); n_exp + 1];
    num[0] = BigRational::one();
    num[n_exp] = -BigRational::one();
    let z = BigRational::from_integer(BigInt::from(zeta));
    let mut quotient = Vec::new();
    let mut rem = num.clone();
    for i in 0..n_exp {
        let lead = rem[i].clone();
        quotient.push(lead.clone());
        rem[i + 1] += &lead * &z;
        rem[i] = BigRational::zero();
    }
    let remainder = rem[n_exp].clone();
    let mut value = BigRational::zero();
    for c in &quotient {
        value = value * &z + c;
    }
    let zinv_n = z.recip().pow(n_exp as i32);
    (value * zinv_n, remainder)
}

pub fn c(v: i64) -> Coeff {
    Coeff::from_int(v)
}

pub fn coeffs(v: &[i64]) -> Vec<Coeff> {
    v.iter().map(|&x| c(x)).collect()
}

/// Random polynomials with small integer coefficients.
pub fn polynomial(ring: Arc<Ring>, max_degree: u32, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    let n = ring.nvars();
    prop::collection::vec((prop::collection::vec(0..=max_degree, n), -3i64..=3), 0..=max_terms).prop_map(
        move |terms| {
            Polynomial::from_terms(
                &ring,
                terms.into_iter().filter_map(|(e, k)| {
                    (e.iter().sum::<u32>() <= max_degree).then(|| (Monomial::from_exponents(e), Coeff::from_int(k)))
                }),
            )
        },
    )
}

/// Random elements of a rank-`m` free module.
pub fn vector(ring: Arc<Ring>, rank: usize, max_degree: u32) -> impl Strategy<Value = Vec<Polynomial>> {
    prop::collection::vec(polynomial(ring, max_degree, 3), rank)
}

/// Twenty ideals in at most four variables with generators of degree at most four.
pub fn groebner_corpus() -> Vec<Ideal> {
    let specs: &[(&[&str], &[&str])] = &[
        (&["x", "y"], &["x^2 - y", "x*y - 1"]),
        (&["x", "y"], &["x^2 + y^2 - 1", "x - y"]),
        (&["x", "y"], &["x^3 - y^2"]),
        (&["x", "y"], &["x*y", "y^2 - y"]),
        (&["x", "y"], &["x^4 - y^3", "x^2*y - x"]),
        (&["x", "y", "z"], &["y - x^2", "z - x^3"]),
        (&["x", "y", "z"], &["x*y - z", "y*z - x", "x*z - y"]),
        (&["x", "y", "z"], &["x^2 + y^2 + z^2 - 1", "x + y + z"]),
        (&["x", "y", "z"], &["x*y*z - 1", "x^2 - y"]),
        (&["x", "y", "z"], &["x^2*y - z^2", "x*z - y^2", "y*z - x^2"]),
        (&["e", "h", "f"], &["h^2 + 4*e*f"]),
        (&["e", "h", "f"], &["e", "h", "f - 1"]),
        (&["e", "h", "f"], &["h^2 + 4*e*f - 4", "e - f"]),
        (&["x", "y", "z"], &["x^3 - 2*x*y", "x^2*y - 2*y^2 + x"]),
        (&["x", "y", "z"], &["z^2 - x*y", "x^2 - z", "y^3"]),
        (&["a", "b", "c", "d"], &["a*d - b*c"]),
        (&["a", "b", "c", "d"], &["a*c - b^2", "b*d - c^2", "a*d - b*c"]),
        (&["a", "b", "c", "d"], &["a + b + c + d", "a*b + b*c + c*d + d*a", "a*b*c*d - 1"]),
        (&["a", "b", "c", "d"], &["a^2 - b", "b^2 - c", "c^2 - d"]),
        (&["a", "b", "c", "d"], &["a*b - c*d", "a^2 - d^2", "b^3 - c"]),
    ];
    specs
        .iter()
        .map(|(vars, gens)| Ideal::parse(&Ring::rational(vars).unwrap(), gens).unwrap())
        .collect()
}

/// Queries for one ideal: half are combinations `Σ h_i g_i`, half are those
/// plus a random low-degree perturbation.
pub fn membership_queries(ideal: &Ideal, count: usize, rng: &mut impl rand::Rng) -> Vec<Polynomial> {
    let ring = ideal.ring().clone();
    let n = ring.nvars();
    let random_poly = |rng: &mut dyn rand::RngCore, max_degree: u32, terms: usize| {
        Polynomial::from_terms(
            &ring,
            (0..terms).map(|_| {
                let mut e = vec![0u32; n];
                let mut left = rand::Rng::gen_range(rng, 0..=max_degree);
                for slot in e.iter_mut() {
                    let take = rand::Rng::gen_range(rng, 0..=left);
                    *slot = take;
                    left -= take;
                }
                (Monomial::from_exponents(e), Coeff::from_int(rand::Rng::gen_range(rng, -4..=4)))
            }),
        )
    };
    (0..count)
        .map(|i| {
            let mut f = ring.zero();
            for g in ideal.generators() {
                let room = 4u32.saturating_sub(g.total_degree().unwrap_or(0));
                f = &f + &(&random_poly(rng, room.min(2), 2) * g);
            }
            if i % 2 == 1 {
                f = &f + &random_poly(rng, 2, 2);
            }
            f
        })
        .collect()
}

use poisson_order::{LieAlgebra, PoissonAlgebra};

pub fn sl2() -> PoissonAlgebra {
    LieAlgebra::sl2().poisson_algebra()
}

pub fn heis() -> PoissonAlgebra {
    LieAlgebra::heisenberg().poisson_algebra()
}

pub fn solvable() -> PoissonAlgebra {
    LieAlgebra::solvable().poisson_algebra()
}

pub fn flat() -> PoissonAlgebra {
    PoissonAlgebra::trivial(&Ring::rational(&["x", "y"]).unwrap())
}

pub fn ideal(p: &PoissonAlgebra, gens: &[&str]) -> Ideal {
    Ideal::parse(p.ring(), gens).unwrap()
}

pub fn point(p: &PoissonAlgebra, v: &[i64]) -> Ideal {
    Ideal::of_point(p.ring(), &coeffs(v)).unwrap()
}

/// `(algebra, I, J)` with `J` a Poisson ideal inside `I`, built by hand.
pub fn poisson_subideal_cases() -> Vec<(PoissonAlgebra, Ideal, Ideal)> {
    let (s, h, v, f) = (sl2(), heis(), solvable(), flat());
    vec![
        (s.clone(), point(&s, &[0, 0, 1]), ideal(&s, &["h^2 + 4*e*f"])),
        (s.clone(), ideal(&s, &["e", "h", "f"]), ideal(&s, &["e", "h", "f"])),
        (s.clone(), ideal(&s, &["e", "h"]), ideal(&s, &["h^2 + 4*e*f"])),
        (h.clone(), point(&h, &[1, 2, 3]), ideal(&h, &["z - 3"])),
        (h.clone(), point(&h, &[1, 0, 0]), point(&h, &[1, 0, 0])),
        (h.clone(), ideal(&h, &["x", "z^2"]), ideal(&h, &["z^2"])),
        (h.clone(), ideal(&h, &["x", "y", "z^2 - z"]), ideal(&h, &["x*z - x", "y*z - y", "z^2 - z"])),
        (v.clone(), point(&v, &[1, 0]), ideal(&v, &["y"])),
        (v.clone(), ideal(&v, &["x", "y^2"]), ideal(&v, &["y^2"])),
        (f.clone(), ideal(&f, &["x^2 - y"]), ideal(&f, &["x^2 - y"])),
    ]
}

/// Pairs of ideals for `P(I ∩ J) = P(I) ∩ P(J)`.
pub fn intersection_cases() -> Vec<(PoissonAlgebra, Ideal, Ideal)> {
    let (s, h, v, f) = (sl2(), heis(), solvable(), flat());
    vec![
        (s.clone(), point(&s, &[0, 0, 1]), point(&s, &[1, 0, 1])),
        (s.clone(), point(&s, &[0, 0, 1]), point(&s, &[0, 0, 0])),
        (s.clone(), point(&s, &[0, 0, 0]), point(&s, &[1, 0, 1])),
        (h.clone(), point(&h, &[1, 2, 3]), point(&h, &[0, 0, 3])),
        (h.clone(), point(&h, &[1, 2, 3]), point(&h, &[1, 2, 0])),
        (h.clone(), point(&h, &[1, 0, 0]), point(&h, &[0, 1, 0])),
        (h.clone(), ideal(&h, &["x", "z^2"]), ideal(&h, &["y", "z^2"])),
        (v.clone(), point(&v, &[1, 0]), point(&v, &[2, 0])),
        (v.clone(), ideal(&v, &["x", "y^2"]), point(&v, &[1, 1])),
        (f.clone(), ideal(&f, &["x"]), ideal(&f, &["y^2 - x"])),
    ]
}

use poisson_order::order::{make_order, PoissonOrder};

/// The same order rebuilt from its tables, without the central-ideal flag.
pub fn unflagged(o: &PoissonOrder) -> PoissonOrder {
    let m = o.rank();
    let n = o.base().nvars();
    make_order(
        o.base(),
        o.basis_names().to_vec(),
        (0..m).map(|j| (0..m).map(|k| o.product_of_basis(j, k).clone()).collect()).collect(),
        o.unit().clone(),
        (0..n).map(|i| (0..m).map(|j| o.ham_entry(i, j).clone()).collect()).collect(),
    )
    .unwrap()
}

use poisson_order::envelope::{EnvElement, Envelope, PoissonModule};
use poisson_order::order::{matrix_order, rank_one_order};
use poisson_order::Matrix;

/// The example orders used for envelope checks.
pub fn example_orders() -> Vec<(&'static str, PoissonOrder)> {
    vec![
        ("trivial", rank_one_order(&flat())),
        ("heisenberg", rank_one_order(&heis())),
        ("sl2", rank_one_order(&sl2())),
        ("solvable", rank_one_order(&solvable())),
        ("Mat_2(solvable)", matrix_order(&solvable(), 2).unwrap()),
        ("Mat_2(heisenberg)", matrix_order(&heis(), 2).unwrap()),
    ]
}

pub fn random_poly(ring: &Arc<Ring>, rng: &mut impl rand::Rng, max_degree: u32, terms: usize) -> Polynomial {
    let n = ring.nvars();
    Polynomial::from_terms(
        ring,
        (0..terms).map(|_| {
            let mut e = vec![0u32; n];
            let mut left = rng.gen_range(0..=max_degree);
            for slot in e.iter_mut() {
                let take = rng.gen_range(0..=left);
                *slot = take;
                left -= take;
            }
            (Monomial::from_exponents(e), Coeff::from_int(rng.gen_range(-3..=3)))
        }),
    )
}

pub fn random_order_element(o: &PoissonOrder, rng: &mut impl rand::Rng) -> Vec<Polynomial> {
    (0..o.rank()).map(|_| random_poly(o.ring(), rng, 1, 2)).collect()
}

/// `Σ α(a_t) δ(x_{i_t})` plus a scalar part, with small random data.
pub fn random_env_element(env: &Envelope, rng: &mut impl rand::Rng) -> EnvElement {
    let o = env.order();
    let mut u = env.alpha(&random_order_element(o, rng)).unwrap();
    for _ in 0..2 {
        let a = env.alpha(&random_order_element(o, rng)).unwrap();
        let i = rng.gen_range(0..env.nvars());
        u = u.add(&env.mul(&a, &env.delta(i)).unwrap());
    }
    u
}

/// Simple finite-dimensional Poisson modules, with the algebra they live over.
pub fn simple_modules() -> Vec<(&'static str, PoissonAlgebra, PoissonModule)> {
    let doublet = PoissonModule::lie_representation(vec![
        Matrix::from_i64(&[&[0, 1], &[0, 0]]),
        Matrix::from_i64(&[&[1, 0], &[0, -1]]),
        Matrix::from_i64(&[&[0, 0], &[1, 0]]),
    ])
    .unwrap();
    // adjoint representation on the basis e, h, f
    let adjoint = PoissonModule::lie_representation(vec![
        Matrix::from_i64(&[&[0, -2, 0], &[0, 0, 1], &[0, 0, 0]]),
        Matrix::from_i64(&[&[2, 0, 0], &[0, 0, 0], &[0, 0, -2]]),
        Matrix::from_i64(&[&[0, 0, 0], &[-1, 0, 0], &[0, 2, 0]]),
    ])
    .unwrap();
    vec![
        ("sl2 origin", sl2(), PoissonModule::point(&coeffs(&[0, 0, 0]))),
        ("heisenberg point", heis(), PoissonModule::point(&coeffs(&[2, -1, 0]))),
        ("sl2 doublet", sl2(), doublet),
        ("sl2 adjoint", sl2(), adjoint),
        ("solvable point", solvable(), PoissonModule::point(&coeffs(&[5, 0]))),
        ("trivial point", flat(), PoissonModule::point(&coeffs(&[1, 2]))),
    ]
}

/// A direct sum of point modules at two different points.
pub fn non_simple_module() -> (PoissonAlgebra, PoissonModule) {
    let m = PoissonModule::point(&coeffs(&[1, 0]))
        .direct_sum(&PoissonModule::point(&coeffs(&[0, 2])))
        .unwrap();
    (flat(), m)
}

pub fn data_file(name: &str) -> String {
    format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

pub fn corpus_files() -> Vec<String> {
    let mut files: Vec<String> = std::fs::read_dir(format!("{}/data", env!("CARGO_MANIFEST_DIR")))
        .unwrap()
        .filter_map(|e| {
            let p = e.unwrap().path();
            (p.extension().is_some_and(|x| x == "toml")).then(|| p.display().to_string())
        })
        .collect();
    files.sort();
    files
}

/// One invocation of every command against the shipped corpus.
pub fn corpus_commands() -> Vec<Vec<String>> {
    let table: &[(&str, &[&str])] = &[
        ("sl2.toml", &["jacobi", "sl2"]),
        ("sl2.toml", &["bracket", "sl2", "e^2", "f"]),
        ("sl2.toml", &["hamiltonian", "sl2", "h^2 + 4*e*f"]),
        ("sl2.toml", &["centre", "sl2", "--degree-cap", "3"]),
        ("sl2.toml", &["core", "sl2", "--point", "0,0,1"]),
        ("sl2.toml", &["core", "sl2", "--ideal", "level", "--order", "lex"]),
        ("sl2.toml", &["closure", "sl2", "--gens", "e"]),
        ("sl2.toml", &["symplectic-core", "sl2", "--point", "1,2,3"]),
        ("sl2.toml", &["leaf-rank", "sl2", "--point", "1,0,0"]),
        ("sl2.toml", &["localize", "sl2", "--by", "h"]),
        ("sl2.toml", &["order-verify", "M2"]),
        ("sl2.toml", &["order-core", "M2", "--ideal", "nilpotent"]),
        ("sl2.toml", &["env-mul", "sl2", "d[e]", "f*d[f]"]),
        ("sl2.toml", &["ugd-compare", "sl2"]),
        ("sl2.toml", &["module-check", "doublet"]),
        ("sl2.toml", &["ivideal-check", "doublet", "--format", "json"]),
        ("heisenberg.toml", &["core", "heis", "--ideal", "p_central"]),
        ("heisenberg.toml", &["pbw-check", "heis", "--k", "2", "--d", "1"]),
        ("heisenberg.toml", &["overlap-check", "M2op"]),
        ("heisenberg.toml", &["order-core", "M2", "--ideal", "p_flat"]),
        ("heisenberg.toml", &["module-check", "induced_candidate"]),
        ("heisenberg.toml", &["induce", "leaf", "--into", "M2"]),
        ("solvable.toml", &["pbw-check", "M2", "--k", "2", "--d", "2"]),
        ("solvable.toml", &["order-verify", "M2xM2"]),
        ("solvable.toml", &["ugd-compare", "solv"]),
        ("trivial.toml", &["core", "flat", "--ideal", "cusp"]),
        ("trivial.toml", &["annihilator", "nilpotent"]),
        ("trivial.toml", &["torsion", "nilpotent"]),
        ("trivial.toml", &["ivideal-check", "two_points"]),
        ("orders.toml", &["order-verify", "dual_matrices"]),
        ("orders.toml", &["order-core", "dual", "--element", "s,1"]),
        ("orders.toml", &["env-mul", "dual", "t*d[s]", "t"]),
        ("non_jacobi.toml", &["jacobi", "skew"]),
        ("non_jacobi.toml", &["overlap-check", "skew"]),
        ("quantum.toml", &["q-specialize", "--space", "plane", "--ell", "2"]),
        ("quantum.toml", &["centrality", "--space", "space3", "--ell", "3"]),
        ("quantum.toml", &["centrality", "--space", "plane", "--ell", "3", "--generic"]),
    ];
    let mut out: Vec<Vec<String>> = table
        .iter()
        .map(|(file, args)| {
            let mut v = vec!["poisson-order".to_string(), "--input".into(), data_file(file)];
            v.extend(args.iter().map(|s| s.to_string()));
            v
        })
        .collect();
    out.push(["poisson-order", "q-specialize", "--n", "2", "--ell", "2"].map(String::from).to_vec());
    for f in corpus_files() {
        out.push(vec!["poisson-order".into(), "--input".into(), f, "normalize".into()]);
    }
    out
}
