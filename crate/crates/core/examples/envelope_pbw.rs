use poisson_order::envelope::{diamond_overlap_check, pbw_dimension_check, Envelope};
use poisson_order::order::{matrix_order, rank_one_order};
use poisson_order::{LieAlgebra, PoissonAlgebra, Ring};

fn main() -> poisson_order::Result<()> {
    let sl2 = LieAlgebra::sl2().poisson_algebra();
    let env = Envelope::of_algebra(&sl2);
    let de = env.parse("d[e]")?;
    let df = env.parse("d[f]")?;
    let f = env.parse("f")?;
    println!("d[f]*d[e] = {}", env.mul(&df, &de)?);
    println!("d[e]*f    = {}", env.mul(&de, &f)?);

    for k in 0..=3 {
        println!("{}", pbw_dimension_check(&env, k, 2));
    }

    let solv = LieAlgebra::solvable().poisson_algebra();
    let m2 = matrix_order(&solv, 2)?;
    println!("Mat_2 over the solvable algebra: {}", pbw_dimension_check(&Envelope::new(&m2), 2, 2));
    println!("overlaps left unresolved: {}", diamond_overlap_check(&m2).len());

    let r = Ring::rational(&["x1", "x2", "x3"])?;
    let skew = PoissonAlgebra::skew(
        &r,
        vec![
            vec![r.zero(), r.var(2), r.var(0)],
            vec![-r.var(2), r.zero(), r.var(0)],
            vec![-r.var(0), -r.var(0), r.zero()],
        ],
    )?;
    for o in diamond_overlap_check(&rank_one_order(&skew)) {
        println!("non-Jacobi table: {o}");
    }
    Ok(())
}
