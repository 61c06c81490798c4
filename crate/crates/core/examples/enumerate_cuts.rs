//! List every cut of an AR quiver.
use tiltkit::algebra::{parse_presentation, AlgebraBasis};
use tiltkit::arquiver::{knit, KnitLimits};
use tiltkit::cuts::{enumerate_cuts, hom_tau_test, DEFAULT_CUT_CAP};
use tiltkit::Rational;

fn main() -> Result<(), tiltkit::Error> {
    let a: AlgebraBasis<Rational> =
        AlgebraBasis::build(&parse_presentation(include_str!("../fixtures/cycle4_rad2.alg"))?)?;
    let arq = knit(&a, KnitLimits::default())?;
    for c in enumerate_cuts(&arq, DEFAULT_CUT_CAP)? {
        let t = hom_tau_test(&arq, &c)?;
        println!("{:?}  Hom(X, tau Y) = 0: {}", arq.names(&c), t.forward_zero);
    }
    Ok(())
}
