//! The ten acceptance criteria. Each prints one PASS/FAIL line; the test
//! fails if any criterion fails or exceeds its time limit.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_rational::BigRational;
use rand::SeedableRng;

use common::*;
use poisson_order::cli::execute;
use poisson_order::envelope::{
    diamond_overlap_check, ividealiii_check, module_check, pbw_dimension_check, pbw_prediction, ugd_compare, Envelope,
};
use poisson_order::field::Coeff;
use poisson_order::ideals::{is_poisson_stable, poisson_core, symplectic_core_ideal, CoreOptions};
use poisson_order::order::{matrix_order, order_poisson_core_with, rank_one_order, OrderIdeal};
use poisson_order::poly::{ideal_member, is_groebner_basis};
use poisson_order::semiclassical::{divide_by_linear, ell_centre_bracket, QuantumAffineSpace};
use poisson_order::session::Session;
use poisson_order::{LieAlgebra, MonomialOrder, PoissonAlgebra, Ring};

/// `{u1, u2}` on the 2-centre, frozen from the long-division oracle.
const GOLDEN_ELL_TWO: i64 = -4;

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn groebner_kernel() -> Outcome {
    let corpus = groebner_corpus();
    let mut rng = rand::rngs::StdRng::seed_from_u64(2024);
    let mut queries = 0;
    let mut members = 0;
    for ideal in &corpus {
        check(is_groebner_basis(ideal.groebner_basis(), &MonomialOrder::DegRevLex), || {
            format!("basis of {ideal} fails the criterion")
        })?;
        let lex = ideal.with_order(MonomialOrder::Lex).map_err(|e| e.to_string())?;
        check(is_groebner_basis(lex.groebner_basis(), &MonomialOrder::Lex), || {
            format!("lex basis of {ideal} fails the criterion")
        })?;
        for f in membership_queries(ideal, 10, &mut rng) {
            let got = ideal_member(&f, ideal).map_err(|e| e.to_string())?;
            check(got == brute_force_member(&f, ideal), || format!("membership of {f} in {ideal} disagrees"))?;
            queries += 1;
            members += usize::from(got);
        }
    }
    Ok(format!("{} ideals, {queries} queries ({members} members)", corpus.len()))
}

fn core_correctness() -> Outcome {
    let (s, h) = (sl2(), heis());
    let cases = [
        (&s, vec![1, 2, 3], ideal(&s, &["h^2 + 4*e*f - 16"])),
        (&s, vec![1, 0, 1], ideal(&s, &["h^2 + 4*e*f - 4"])),
        (&s, vec![0, 0, 0], ideal(&s, &["e", "h", "f"])),
        (&h, vec![1, 2, 3], ideal(&h, &["z - 3"])),
        (&h, vec![4, -1, -2], ideal(&h, &["z + 2"])),
        (&h, vec![1, 2, 0], ideal(&h, &["x - 1", "y - 2", "z"])),
    ];
    for (p, pt, want) in &cases {
        let start = Instant::now();
        let got = symplectic_core_ideal(&coeffs(pt), p).map_err(|e| e.to_string())?;
        check(&got == want, || format!("core at {pt:?} is {got}, expected {want}"))?;
        check(start.elapsed() < Duration::from_secs(10), || format!("core at {pt:?} took too long"))?;
    }
    Ok(format!("{} cores", cases.len()))
}

fn core_laws() -> Outcome {
    for (p, i, j) in poisson_subideal_cases() {
        let core = poisson_core(&i, &p).map_err(|e| e.to_string())?;
        check(is_poisson_stable(&core, &p).map_err(|e| e.to_string())?.is_poisson, || {
            format!("P({i}) = {core} is not Poisson")
        })?;
        check(i.contains_ideal(&core), || format!("P({i}) is not inside {i}"))?;
        check(is_poisson_stable(&j, &p).map_err(|e| e.to_string())?.is_poisson, || format!("{j} is not Poisson"))?;
        check(core.contains_ideal(&j), || format!("{j} is not inside P({i}) = {core}"))?;
    }
    for (p, i, j) in intersection_cases() {
        let left = poisson_core(&i.intersect(&j), &p).map_err(|e| e.to_string())?;
        let right = poisson_core(&i, &p)
            .and_then(|a| poisson_core(&j, &p).map(|b| a.intersect(&b)))
            .map_err(|e| e.to_string())?;
        check(left.same_ideal(&right), || format!("P({i} ∩ {j}) = {left} but P ∩ P = {right}"))?;
    }
    Ok(format!(
        "{} maximality cases, {} intersection pairs",
        poisson_subideal_cases().len(),
        intersection_cases().len()
    ))
}

fn pbw() -> Outcome {
    let targets = [
        ("trivial", rank_one_order(&flat())),
        ("heisenberg", rank_one_order(&heis())),
        ("sl2", rank_one_order(&sl2())),
        ("Mat_2(solvable)", matrix_order(&solvable(), 2).map_err(|e| e.to_string())?),
    ];
    let mut checked = 0;
    for (name, o) in &targets {
        let env = Envelope::new(o);
        for k in 0..=3 {
            for d in 0..=3 {
                let r = pbw_dimension_check(&env, k, d);
                check(r.predicted == pbw_prediction(o.rank(), o.base().nvars(), k, d), || {
                    format!("{name}: prediction mismatch")
                })?;
                check(r.ok && r.leading_terms_ok, || format!("{name}: {r}"))?;
                checked += 1;
            }
        }
        let overlaps = diamond_overlap_check(o);
        check(overlaps.is_empty(), || format!("{name}: {}", overlaps[0]))?;
    }
    let r = Ring::rational(&["x1", "x2", "x3"]).map_err(|e| e.to_string())?;
    let skew = PoissonAlgebra::skew(
        &r,
        vec![
            vec![r.zero(), r.var(2), r.var(0)],
            vec![-r.var(2), r.zero(), r.var(0)],
            vec![-r.var(0), -r.var(0), r.zero()],
        ],
    )
    .map_err(|e| e.to_string())?;
    let bad = diamond_overlap_check(&rank_one_order(&skew));
    check(!bad.is_empty(), || "non-Jacobi table resolved every overlap".into())?;
    Ok(format!("{checked} (k, d) counts, non-Jacobi table leaves {} overlaps", bad.len()))
}

fn relation_fidelity() -> Outcome {
    let mut rng = rand::rngs::StdRng::seed_from_u64(99);
    let orders = example_orders();
    let mut checks = 0;
    while checks < 500 {
        for (name, o) in &orders {
            let env = Envelope::new(o);
            let ring = o.ring().clone();
            let x = random_poly(&ring, &mut rng, 2, 2);
            let y = random_poly(&ring, &mut rng, 2, 2);
            let a = random_order_element(o, &mut rng);
            let alpha_a = env.alpha(&a).map_err(|e| e.to_string())?;
            let dx = env.delta_of(&x);
            let comm = env
                .mul(&dx, &alpha_a)
                .and_then(|l| env.mul(&alpha_a, &dx).map(|r| l.sub(&r)))
                .map_err(|e| e.to_string())?;
            check(comm == env.alpha(&o.hamiltonian(&x, &a)).map_err(|e| e.to_string())?, || {
                format!("{name}: [d({x}), a] != alpha({{x, a}})")
            })?;
            let rhs = env
                .mul(&env.alpha_poly(&x), &env.delta_of(&y))
                .and_then(|l| env.mul(&env.alpha_poly(&y), &dx).map(|r| l.add(&r)))
                .map_err(|e| e.to_string())?;
            check(env.delta_of(&(&x * &y)) == rhs, || format!("{name}: d({x} * {y}) fails the product rule"))?;
            let u = random_env_element(&env, &mut rng);
            let v = random_env_element(&env, &mut rng);
            let w = random_env_element(&env, &mut rng);
            let left = env.mul(&u, &v).and_then(|uv| env.mul(&uv, &w)).map_err(|e| e.to_string())?;
            let right = env.mul(&v, &w).and_then(|vw| env.mul(&u, &vw)).map_err(|e| e.to_string())?;
            check(left == right, || format!("{name}: multiplication is not associative"))?;
            checks += 3;
        }
    }
    Ok(format!("{checks} randomized checks over {} orders", orders.len()))
}

fn ugd() -> Outcome {
    let algebras = [
        ("abelian", LieAlgebra::abelian(&["a", "b", "c"])),
        ("heisenberg", LieAlgebra::heisenberg()),
        ("sl2", LieAlgebra::sl2()),
        ("solvable", LieAlgebra::solvable()),
    ];
    for (name, g) in &algebras {
        let bad = ugd_compare(g).map_err(|e| e.to_string())?;
        check(bad.is_empty(), || format!("{name}: {}", bad[0]))?;
    }
    Ok(format!("{} Lie algebras", algebras.len()))
}

fn torsion_identity() -> Outcome {
    let modules = simple_modules();
    for (name, p, m) in &modules {
        check(module_check(m, &rank_one_order(p)).is_empty(), || format!("{name} is not a Poisson module"))?;
        let r = ividealiii_check(m, p, &CoreOptions::default()).map_err(|e| e.to_string())?;
        check(r.holds, || format!("{name}: P(T) = {}, Ann = {}", r.core, r.annihilator))?;
    }
    let (p, m) = non_simple_module();
    let r = ividealiii_check(&m, &p, &CoreOptions::default()).map_err(|e| e.to_string())?;
    check(!r.holds && r.torsion.contains_ideal(&r.annihilator), || {
        "the non-simple control does not separate torsion and annihilator".into()
    })?;
    Ok(format!("{} simple modules hold, non-simple control fails as documented", modules.len()))
}

fn semiclassical() -> Outcome {
    let (oracle, remainder) = semiclassical_scalar_by_division(4, -1);
    check(remainder == BigRational::from_integer(0.into()), || "oracle division left a remainder".into())?;
    check(oracle == BigRational::from_integer(GOLDEN_ELL_TWO.into()), || {
        format!("oracle gives {oracle}, frozen value is {GOLDEN_ELL_TWO}")
    })?;
    let q = QuantumAffineSpace::new(2).map_err(|e| e.to_string())?;
    for ell in 2..=5u32 {
        // the division step: (q^N - 1) / (q - zeta), lowest degree first
        let n = (ell * ell) as usize;
        let mut poly = vec![Coeff::zero(); n + 1];
        poly[0] = Coeff::from_int(-1);
        poly[n] = Coeff::one();
        let zeta = poisson_order::CoefficientField::cyclotomic(ell).map_err(|e| e.to_string())?.zeta();
        let (_, rem) = divide_by_linear(&poly, &zeta);
        check(rem.is_zero(), || format!("ell = {ell}: nonzero remainder {rem}"))?;
        let c = ell_centre_bracket(&q, ell).map_err(|e| e.to_string())?;
        check(c.algebra.jacobi_check().is_empty(), || format!("ell = {ell}: Jacobi fails"))?;
        if ell == 2 {
            check(c.scalars[0].1 == Coeff::from_int(GOLDEN_ELL_TWO), || {
                format!("ell = 2 scalar is {}", c.scalars[0].1)
            })?;
        }
    }
    Ok(format!("ell = 2..5, golden scalar {GOLDEN_ELL_TWO}"))
}

fn contraction_identity() -> Outcome {
    let (s, h) = (sl2(), heis());
    let cases = [
        (&s, point(&s, &[0, 0, 1])),
        (&s, point(&s, &[0, 0, 0])),
        (&s, point(&s, &[1, 0, 1])),
        (&h, point(&h, &[1, 2, 3])),
        (&h, point(&h, &[1, 2, 0])),
        (&h, ideal(&h, &["x", "z^2"])),
    ];
    for (p, i) in &cases {
        let a = matrix_order(p, 2).map_err(|e| e.to_string())?;
        let j = OrderIdeal::extension(&a, i).map_err(|e| e.to_string())?;
        let core = order_poisson_core_with(&j, &CoreOptions::default()).map_err(|e| e.to_string())?;
        let left = core.ideal.contraction().map_err(|e| e.to_string())?;
        let right = poisson_core(&j.contraction().map_err(|e| e.to_string())?, p).map_err(|e| e.to_string())?;
        check(left == right, || format!("P(J) ∩ Z = {left} but P(J ∩ Z) = {right} for J = ({i})A"))?;
        check(core.ideal.is_poisson(), || format!("core of ({i})A is not Poisson"))?;
    }
    // the generic path, without the central shortcut
    for i in [point(&h, &[1, 2, 0]), ideal(&h, &["x", "z^2"])] {
        let a = unflagged(&matrix_order(&h, 2).map_err(|e| e.to_string())?);
        let j = OrderIdeal::extension(&a, &i).map_err(|e| e.to_string())?;
        let core = order_poisson_core_with(&j, &CoreOptions::default()).map_err(|e| e.to_string())?;
        let left = core.ideal.contraction().map_err(|e| e.to_string())?;
        check(left == poisson_core(&i, &h).map_err(|e| e.to_string())?, || {
            format!("generic path: contraction {left} for ({i})A")
        })?;
    }
    Ok(format!("{} instances plus 2 on the generic path", cases.len()))
}

fn cli_determinism() -> Outcome {
    let commands = corpus_commands();
    for args in &commands {
        let first = execute(args.clone());
        let second = execute(args.clone());
        check(first == second, || format!("{args:?} is not deterministic"))?;
        check(first.stderr.is_empty(), || format!("{args:?}: {}", first.stderr))?;
    }
    let files = corpus_files();
    for file in &files {
        let src = std::fs::read_to_string(file).map_err(|e| e.to_string())?;
        let once = Session::parse(&src).map_err(|d| d.to_string())?.to_toml();
        let twice = Session::parse(&once).map_err(|d| d.to_string())?.to_toml();
        check(once == twice, || format!("{file} does not normalize idempotently"))?;
    }
    Ok(format!("{} invocations, {} documents", commands.len(), files.len()))
}

#[test]
fn acceptance() {
    let criteria: [(&str, u64, fn() -> Outcome); 10] = [
        ("groebner kernel", 30, groebner_kernel),
        ("poisson core correctness", 60, core_correctness),
        ("core algebra laws", 60, core_laws),
        ("PBW at desk scale", 60, pbw),
        ("relation fidelity", 60, relation_fidelity),
        ("U(g_D) isomorphism", 10, ugd),
        ("torsion and annihilator", 30, torsion_identity),
        ("semiclassical limit", 10, semiclassical),
        ("contraction identity for orders", 60, contraction_identity),
        ("CLI determinism and round trip", 30, cli_determinism),
    ];
    let mut failures = Vec::new();
    for (number, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > Duration::from_secs(*limit) => {
                Err(format!("{detail}; took {elapsed:.2?}, limit {limit}s"))
            }
            other => other,
        };
        match &outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name} ({elapsed:.2?}): {detail}", number + 1),
            Err(why) => {
                println!("criterion {:>2} FAIL  {name} ({elapsed:.2?}): {why}", number + 1);
                failures.push(number + 1);
            }
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
