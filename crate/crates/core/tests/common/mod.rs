#![allow(dead_code)]

use tiltkit::algebra::{parse_presentation, AlgebraBasis};
use tiltkit::arquiver::{knit, KnitLimits};
use tiltkit::{ARQuiver, Rational};

pub const FIXTURES: [&str; 4] = ["cycle4_rad2", "cycle3_rad2", "b_a3", "a2"];

pub fn fixture_path(name: &str) -> String {
    format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

pub fn fixture_text(name: &str) -> String {
    std::fs::read_to_string(fixture_path(&format!("{name}.alg"))).expect("fixture present")
}

pub fn algebra(name: &str) -> AlgebraBasis<Rational> {
    AlgebraBasis::build(&parse_presentation(&fixture_text(name)).unwrap()).unwrap()
}

pub fn setup(name: &str) -> (AlgebraBasis<Rational>, ARQuiver<Rational>) {
    let a = algebra(name);
    let arq = knit(&a, KnitLimits::default()).unwrap();
    (a, arq)
}

pub fn run_cli(args: &[&str]) -> (i32, String, String) {
    let argv: Vec<String> = std::iter::once("tiltkit").chain(args.iter().copied()).map(String::from).collect();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = tiltkit::cli::run_command(&argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}
