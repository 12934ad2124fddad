use poisson_order::poly::{ideal_member, is_groebner_basis};
use poisson_order::{Ideal, MonomialOrder, Ring};

fn main() -> poisson_order::Result<()> {
    let r = Ring::rational(&["x", "y", "z"])?;
    let twisted = Ideal::parse(&r, &["y - x^2", "z - x^3"])?;
    println!("degrevlex basis: {twisted}");
    let lex = twisted.with_order(MonomialOrder::Lex)?;
    println!("lex basis:       {lex}");
    println!("buchberger criterion: {}", is_groebner_basis(lex.groebner_basis(), &MonomialOrder::Lex));

    let f = r.parse("x*z - y^2")?;
    println!("{f} in ideal: {}", ideal_member(&f, &twisted)?);

    let plane_curve = twisted.eliminate_variables(&["z"])?;
    println!("eliminating z: {plane_curve}");

    let a = Ideal::parse(&r, &["x", "y"])?;
    let b = Ideal::parse(&r, &["y", "z"])?;
    println!("intersection: {}", a.intersect(&b));
    println!("quotient (x,y)^2 : (x): {}", a.product(&a).quotient(&Ideal::parse(&r, &["x"])?));
    println!("krull dimension of the curve: {}", twisted.krull_dimension());
    Ok(())
}
