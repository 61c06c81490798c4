//! Decide whether an algebra is tilted by searching for a faithful cut.
use tiltkit::algebra::{parse_presentation, AlgebraBasis};
use tiltkit::cuts::{certify_tilted, CertifyOptions};
use tiltkit::Rational;

fn main() -> Result<(), tiltkit::Error> {
    for (name, text) in [
        ("B", include_str!("../fixtures/b_a3.alg")),
        ("3-cycle", include_str!("../fixtures/cycle3_rad2.alg")),
        ("4-cycle", include_str!("../fixtures/cycle4_rad2.alg")),
    ] {
        let a: AlgebraBasis<Rational> = AlgebraBasis::build(&parse_presentation(text)?)?;
        let c = certify_tilted(&a, &CertifyOptions::default())?;
        println!("{name}: {} after {} cuts, witness {:?}", c.verdict, c.cuts_examined, c.witness);
        if !c.sincere_only_cuts.is_empty() {
            println!("  sincere but not faithful: {:?}", c.sincere_only_cuts);
        }
    }
    Ok(())
}
