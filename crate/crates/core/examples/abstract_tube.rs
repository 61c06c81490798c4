//! Combinatorial mode: cuts in a truncated stable tube.
use tiltkit::arquiver::import_abstract;
use tiltkit::cuts::is_cut;
use tiltkit::{ARQuiver, Rational};

fn main() -> Result<(), tiltkit::Error> {
    let tube: ARQuiver<Rational> = import_abstract(include_str!("../fixtures/tube3.tq"))?;
    let ray = tube.resolve(&["E0_1", "E0_2", "E0_3", "E0_4", "E0_5"])?;
    let coray = tube.resolve(&["E0_1", "E2_2", "E1_3", "E0_4", "E2_5"])?;
    let orbit = tube.resolve(&["E0_1", "E1_1", "E2_1"])?;
    println!("ray is a cut: {}", is_cut(&tube, &ray).is_cut);
    println!("coray is a cut: {}", is_cut(&tube, &coray).is_cut);
    let c = is_cut(&tube, &orbit);
    println!("mouth orbit is a cut: {} ({} violations)", c.is_cut, c.violations.len());
    Ok(())
}
