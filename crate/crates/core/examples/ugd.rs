use poisson_order::envelope::ugd_compare;
use poisson_order::LieAlgebra;

fn main() -> poisson_order::Result<()> {
    for (name, g) in [
        ("abelian", LieAlgebra::abelian(&["a", "b"])),
        ("heisenberg", LieAlgebra::heisenberg()),
        ("sl2", LieAlgebra::sl2()),
        ("solvable", LieAlgebra::solvable()),
    ] {
        let bad = ugd_compare(&g)?;
        println!("{name}: {} brackets of g_D checked, {} mismatches", (2 * g.dim()) * (2 * g.dim() - 1) / 2, bad.len());
    }
    Ok(())
}
