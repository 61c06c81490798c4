//! Knit the Auslander-Reiten quiver and print vertices, arrows and τ.
use tiltkit::algebra::{parse_presentation, AlgebraBasis};
use tiltkit::arquiver::{knit, KnitLimits};
use tiltkit::Rational;

fn main() -> Result<(), tiltkit::Error> {
    let path = std::env::args().nth(1);
    let text = match &path {
        Some(p) => std::fs::read_to_string(p).expect("readable algebra file"),
        None => include_str!("../fixtures/cycle3_rad2.alg").to_string(),
    };
    let a: AlgebraBasis<Rational> = AlgebraBasis::build(&parse_presentation(&text)?)?;
    let arq = knit(&a, KnitLimits::default())?;
    for v in &arq.vertices {
        let flags = [(v.is_projective, " proj"), (v.is_injective, " inj")];
        let flags: String = flags.iter().filter(|f| f.0).map(|f| f.1).collect();
        println!("{:6} {:?}{flags}  aka {:?}", v.name, v.dim_vector().unwrap(), v.aliases);
    }
    for e in &arq.arrows {
        println!("{} -> {} ({})", arq.vertices[e.source].name, arq.vertices[e.target].name, e.multiplicity);
    }
    for (x, t) in arq.tau.iter().enumerate() {
        if let Some(t) = t {
            println!("tau {} = {}", arq.vertices[x].name, arq.vertices[*t].name);
        }
    }
    Ok(())
}
