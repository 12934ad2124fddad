use poisson_order::field::Coeff;
use poisson_order::ideals::{is_poisson_stable, poisson_closure, poisson_core_with, symplectic_core_ideal, CoreOptions};
use poisson_order::{Ideal, LieAlgebra};

fn point(v: &[i64]) -> Vec<Coeff> {
    v.iter().map(|&c| Coeff::from_int(c)).collect()
}

fn main() -> poisson_order::Result<()> {
    let sl2 = LieAlgebra::sl2().poisson_algebra();
    println!("Casimirs up to degree 2: {:?}", sl2.poisson_centre(2).iter().map(|p| p.to_string()).collect::<Vec<_>>());

    for pt in [[0, 0, 1], [0, 0, 0], [1, 0, 1]] {
        let core = symplectic_core_ideal(&point(&pt), &sl2)?;
        println!("sl2 core at {pt:?}: {core}");
    }

    let heis = LieAlgebra::heisenberg().poisson_algebra();
    for pt in [[1, 2, 3], [1, 2, 0]] {
        let r = poisson_core_with(&Ideal::of_point(heis.ring(), &point(&pt))?, &heis, &CoreOptions::default())?;
        println!("heisenberg core at {pt:?}: {} ({})", r.ideal, r.certificate.name());
    }

    let e = Ideal::parse(sl2.ring(), &["e"])?;
    println!("{}", is_poisson_stable(&e, &sl2)?);
    println!("closure of (e): {}", poisson_closure(&e, &sl2, 16)?);
    Ok(())
}
