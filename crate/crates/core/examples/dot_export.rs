//! Render an AR quiver as Graphviz, highlighting a cut.
use tiltkit::algebra::{parse_presentation, AlgebraBasis};
use tiltkit::arquiver::{knit, KnitLimits};
use tiltkit::cli::export_dot;
use tiltkit::Rational;

fn main() -> Result<(), tiltkit::Error> {
    let a: AlgebraBasis<Rational> =
        AlgebraBasis::build(&parse_presentation(include_str!("../fixtures/cycle4_rad2.alg"))?)?;
    let arq = knit(&a, KnitLimits::default())?;
    print!("{}", export_dot(&arq, &arq.resolve(&["P_b", "S_b", "P_d"])?));
    Ok(())
}
