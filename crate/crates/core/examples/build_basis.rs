//! Parse a bound quiver algebra and list its path basis.
use tiltkit::algebra::{parse_presentation, AlgebraBasis};
use tiltkit::Rational;

fn main() -> Result<(), tiltkit::Error> {
    let p = parse_presentation(include_str!("../fixtures/cycle4_rad2.alg"))?;
    let a: AlgebraBasis<Rational> = AlgebraBasis::build(&p)?;
    println!("dim A = {}, radical vanishes at power {}", a.dim(), a.nilpotency_index());
    for i in 0..a.dim() {
        println!("  b{i} = {}", a.basis_label(i));
    }
    let q = a.quiver();
    let beta = a.normal_form(&tiltkit::PathWord::arrow(q, q.arrow_index("beta").unwrap()));
    let delta = a.normal_form(&tiltkit::PathWord::arrow(q, q.arrow_index("delta").unwrap()));
    println!("beta * delta = {}", a.format_element(&a.multiply(&beta, &delta)));
    Ok(())
}
