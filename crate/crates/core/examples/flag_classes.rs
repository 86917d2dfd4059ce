//! Classes of the flags S² ⊃ equator ⊃ point and Σ(T²) ⊃ Σ(circle) in
//! middle-perversity intersection homology.

use ihom::corpus;
use ihom::ichains::{flag_classes, FlagInput};

fn main() -> ihom::Result<()> {
    for c in flag_classes(&FlagInput::new(corpus::sphere_flag())?)? {
        let coords: Vec<String> = c.coordinates.iter().map(ToString::to_string).collect();
        println!(
            "sphere flag step {}: degree {}, coordinates ({})",
            c.step,
            c.degree,
            coords.join(",")
        );
    }
    match flag_classes(&FlagInput::new(corpus::torus_flag())?) {
        Ok(_) => println!("torus flag lifts"),
        Err(e) => println!("torus flag: {e}"),
    }
    Ok(())
}
