use poisson_order::envelope::{induced_module, ividealiii_check, module_check, torsion_ideal, PoissonModule};
use poisson_order::field::Coeff;
use poisson_order::ideals::CoreOptions;
use poisson_order::order::{matrix_order, rank_one_order};
use poisson_order::{LieAlgebra, Matrix, PoissonAlgebra, Ring};

fn main() -> poisson_order::Result<()> {
    let sl2 = LieAlgebra::sl2().poisson_algebra();
    let doublet = PoissonModule::lie_representation(vec![
        Matrix::from_i64(&[&[0, 1], &[0, 0]]),
        Matrix::from_i64(&[&[1, 0], &[0, -1]]),
        Matrix::from_i64(&[&[0, 0], &[1, 0]]),
    ])?;
    println!("doublet axioms violated: {}", module_check(&doublet, &rank_one_order(&sl2)).len());
    let r = ividealiii_check(&doublet, &sl2, &CoreOptions::default())?;
    println!("P(T(M)) = {}, Ann(M) = {}, equal: {}", r.core, r.annihilator, r.holds);

    let heis = LieAlgebra::heisenberg().poisson_algebra();
    let leaf = PoissonModule::point(&[Coeff::from_int(1), Coeff::from_int(2), Coeff::zero()]);
    let r = ividealiii_check(&leaf, &heis, &CoreOptions::default())?;
    println!("heisenberg point module: {}", r.holds);
    let induced = induced_module(&matrix_order(&heis, 2)?, &leaf)?;
    println!("induced to Mat_2: dimension {}", induced.dimension());

    let flat = PoissonAlgebra::trivial(&Ring::rational(&["x", "y"])?);
    let sum = PoissonModule::point(&[Coeff::one(), Coeff::zero()]).direct_sum(&PoissonModule::point(&[Coeff::zero(), Coeff::from_int(2)]))?;
    let t = torsion_ideal(&sum, &flat);
    let r = ividealiii_check(&sum, &flat, &CoreOptions::default())?;
    println!("non-simple sum: torsion {}, annihilator {}, equal: {}", t.ideal, r.annihilator, r.holds);
    Ok(())
}
