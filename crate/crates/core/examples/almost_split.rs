//! The almost split sequence ending at a simple module.
use tiltkit::algebra::{parse_presentation, AlgebraBasis};
use tiltkit::arquiver::almost_split_sequence;
use tiltkit::Rational;

fn main() -> Result<(), tiltkit::Error> {
    let a: AlgebraBasis<Rational> =
        AlgebraBasis::build(&parse_presentation(include_str!("../fixtures/cycle4_rad2.alg"))?)?;
    let s = almost_split_sequence(&a, &a.simple(0))?;
    println!("0 -> {:?} -> {:?} -> {:?} -> 0", s.left.dims, s.middle.dims, s.right.dims);
    for (ar, m) in a.quiver().arrows.iter().zip(&s.middle.maps) {
        println!("  {}: {:?}", ar.label, m);
    }
    Ok(())
}
