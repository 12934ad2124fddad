use poisson_order::ideals::CoreOptions;
use poisson_order::order::{matrix_order, order_poisson_core_with, tensor_order, verify, OrderIdeal};
use poisson_order::{Ideal, LieAlgebra};

fn main() -> poisson_order::Result<()> {
    let sl2 = LieAlgebra::sl2().poisson_algebra();
    let m2 = matrix_order(&sl2, 2)?;
    verify(&m2)?;
    println!("{m2}");

    let e12 = m2.basis_element(1);
    let e21 = m2.basis_element(2);
    println!("E12*E21 = {}", m2.format_element(&m2.mul(&e12, &e21)));
    let casimir = sl2.ring().parse("h^2 + 4*e*f")?;
    let e = sl2.ring().parse("e")?;
    println!("H(e)(f*E12) = {}", m2.format_element(&m2.hamiltonian(&e, &m2.scale(&sl2.ring().parse("f")?, &e12))));
    println!("H(casimir)(E12) = {}", m2.format_element(&m2.hamiltonian(&casimir, &e12)));

    let point = Ideal::parse(sl2.ring(), &["e", "h", "f - 1"])?;
    let j = OrderIdeal::extension(&m2, &point)?;
    let core = order_poisson_core_with(&j, &CoreOptions::default())?;
    println!("core of the extended point ideal contracts to {}", core.ideal.contraction()?);
    println!("certificate: {}", core.certificate.name());

    let m4 = tensor_order(&m2, &m2)?;
    println!("Mat_2 (x) Mat_2 has rank {}", m4.rank());
    Ok(())
}
