//! Projective covers, Auslander-Reiten translates via DTr, Ext and pdim.
use tiltkit::algebra::{parse_presentation, AlgebraBasis};
use tiltkit::modrep::{ext1_dim, pdim_le_1, projective_cover, translate, Direction};
use tiltkit::Rational;

fn main() -> Result<(), tiltkit::Error> {
    let a: AlgebraBasis<Rational> =
        AlgebraBasis::build(&parse_presentation(include_str!("../fixtures/cycle4_rad2.alg"))?)?;
    let names = &a.quiver().vertices;
    for v in 0..a.num_vertices() {
        let s = a.simple(v);
        let cover = projective_cover(&a, &s);
        let tau = translate(&a, &s, Direction::Forward);
        println!(
            "S_{}: cover dims {:?}, tau S = {:?}, pdim <= 1: {}, dim Ext1(S, S) = {}",
            names[v],
            cover.module.dims,
            tau.dims,
            pdim_le_1(&a, &s),
            ext1_dim(&a, &s, &s)
        );
    }
    Ok(())
}
