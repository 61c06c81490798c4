//! Projectives, injectives and simples; Hom spaces and decomposition.
use tiltkit::algebra::{canonical_modules, parse_presentation, AlgebraBasis};
use tiltkit::modrep::{decompose, hom_dim};
use tiltkit::{Module, Rational};

fn main() -> Result<(), tiltkit::Error> {
    let a: AlgebraBasis<Rational> = AlgebraBasis::build(&parse_presentation(include_str!("../fixtures/b_a3.alg"))?)?;
    let q = a.quiver();
    for c in canonical_modules(&a) {
        println!(
            "{}: P {:?}  I {:?}  S {:?}",
            q.vertices[c.vertex], c.projective.dims, c.injective.dims, c.simple.dims
        );
    }
    let (pa, sb) = (a.projective(0), a.simple(1));
    println!("dim Hom(P_a, S_b) = {}", hom_dim(q, &pa, &sb));
    let sum = Module::direct_sum(&[a.projective(1), a.simple(1), a.projective(1)]);
    for (m, k) in decompose(q, &sum)? {
        println!("summand {:?} with multiplicity {k}", m.dims);
    }
    Ok(())
}
