//! Depth of maps in the radical filtration, and nonzero paths.
use tiltkit::algebra::{parse_presentation, AlgebraBasis};
use tiltkit::arquiver::{knit, KnitLimits};
use tiltkit::modrep::hom_basis;
use tiltkit::Rational;

fn main() -> Result<(), tiltkit::Error> {
    let a: AlgebraBasis<Rational> =
        AlgebraBasis::build(&parse_presentation(include_str!("../fixtures/cycle4_rad2.alg"))?)?;
    let arq = knit(&a, KnitLimits::default())?;
    let id = |n: &str| arq.find(n).unwrap();
    let (pb, sb, sc, pd) = (id("P_b"), id("S_b"), id("S_c"), id("P_d"));
    let q = a.quiver();
    let f = &hom_basis(q, arq.module(pb)?, arq.module(sb)?)[0];
    let g = &hom_basis(q, arq.module(sb)?, arq.module(pd)?)[0];
    println!("dp(P_b -> S_b) = {:?}", arq.rad_power_depth(pb, sb, f)?);
    println!("dp(P_b -> S_b -> P_d) = {:?}", arq.rad_power_depth(pb, pd, &g.compose(f))?);
    println!("nonzero path P_b ~> P_d through S_b: {}", arq.nonzero_path_exists(pb, pd, Some(sb), None)?);
    println!("nonzero path P_b ~> P_d through S_c: {}", arq.nonzero_path_exists(pb, pd, Some(sc), None)?);
    let rf = arq.radical_filtration()?;
    println!("rad^{} = 0, Harada-Sai bound {}", rf.nilpotency(), rf.harada_sai_bound());
    Ok(())
}
