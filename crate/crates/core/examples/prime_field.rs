//! The same computations over a finite prime field.
use tiltkit::algebra::{parse_presentation, AlgebraBasis};
use tiltkit::arquiver::{knit, KnitLimits};
use tiltkit::cuts::{certify_tilted, CertifyOptions};
use tiltkit::Fp;

fn main() -> Result<(), tiltkit::Error> {
    let text = "field F 101\nvertex 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 1 -> 2\n";
    let a: AlgebraBasis<Fp<101>> = AlgebraBasis::build(&parse_presentation(text)?)?;
    match knit(&a, KnitLimits { max_vertices: 40, max_dim: 20 }) {
        Ok(arq) => println!("{} indecomposables", arq.len()),
        Err(e) => println!("not representation-finite within limits: {e}"),
    }
    let b = "field F 7\nvertex a b d\narrow beta: b -> a\narrow delta: d -> b\nrelation beta*delta\n";
    let b: AlgebraBasis<Fp<7>> = AlgebraBasis::build(&parse_presentation(b)?)?;
    println!("B over F 7: {}", certify_tilted(&b, &CertifyOptions::default())?.verdict);
    Ok(())
}
