//! Everything about one candidate cut: conditions, Hom tables, annihilator,
//! convexity, slice and section.
use tiltkit::algebra::{parse_presentation, AlgebraBasis};
use tiltkit::arquiver::{knit, KnitLimits};
use tiltkit::cuts::analyze_cut;
use tiltkit::Rational;

fn main() -> Result<(), tiltkit::Error> {
    let a: AlgebraBasis<Rational> =
        AlgebraBasis::build(&parse_presentation(include_str!("../fixtures/cycle4_rad2.alg"))?)?;
    let arq = knit(&a, KnitLimits::default())?;
    let delta = arq.resolve(&["P_b", "S_b", "P_d"])?;
    let r = analyze_cut(&a, &arq, &delta)?;
    println!("{}", serde_json::to_string_pretty(&r).unwrap());
    Ok(())
}
