//! Quotient by the annihilator of a cut, with a recovered presentation.
use tiltkit::algebra::{parse_presentation, AlgebraBasis};
use tiltkit::arquiver::{knit, KnitLimits};
use tiltkit::cuts::{quotient_by_cut, CertifyOptions};
use tiltkit::Rational;

fn main() -> Result<(), tiltkit::Error> {
    let a: AlgebraBasis<Rational> =
        AlgebraBasis::build(&parse_presentation(include_str!("../fixtures/cycle4_rad2.alg"))?)?;
    let arq = knit(&a, KnitLimits::default())?;
    let delta = arq.resolve(&["P_b", "S_b", "P_d"])?;
    let q = quotient_by_cut(&a, &arq, &delta, &CertifyOptions::default())?;
    println!("ann = span{{{}}}", q.annihilator.join(", "));
    print!("{}", q.presentation.to_text());
    println!("dim B = {}, verdict {}", q.algebra.dim(), q.certificate.verdict);
    println!("cut in B: {}, slice in B: {}", q.cut_in_quotient, q.slice_in_quotient);
    Ok(())
}
