use poisson_order::semiclassical::{centrality_check, ell_centre_bracket, QuantumAffineSpace};

fn main() -> poisson_order::Result<()> {
    let q = QuantumAffineSpace::new(2)?;
    let x1 = q.generator_power(0, 2);
    let x2 = q.generator_power(1, 2);
    println!("[X1^2, X2^2] = {}", q.commutator(&x1, &x2));
    for ell in 2..=5 {
        let c = ell_centre_bracket(&q, ell)?;
        println!(
            "ell = {ell}: {{u1, u2}} = {}, central at the root: {}, jacobi ok: {}",
            c.bracket_of(0, 1),
            centrality_check(&q, ell, true)?,
            c.algebra.jacobi_check().is_empty()
        );
    }
    let q3 = QuantumAffineSpace::new(3)?;
    let c = ell_centre_bracket(&q3, 3)?;
    for ((i, j), s) in &c.scalars {
        println!("n = 3: {{u{}, u{}}} = ({s}) u{} u{}", i + 1, j + 1, i + 1, j + 1);
    }
    Ok(())
}
