//! Whether the fundamental class of X extends to a middle-perversity class
//! of Y, decided by the link map at the apex and confirmed by lifting.

use ihom::complex::{Perversity, StratifiedComplex};
use ihom::corpus;
use ihom::ichains::{fundamental_class, lift_class, link_map};

fn report(name: &str, x: &StratifiedComplex, y: &StratifiedComplex) -> ihom::Result<()> {
    let lm = link_map(x, y, "N", 1, &Perversity::Middle)?;
    let z = fundamental_class(x)?.transfer(x.complex(), y.complex())?;
    let lift = lift_class(y, &z)?;
    println!("{name}");
    println!(
        "  link map in degree 1: {}x{}, rank {}",
        lm.matrix.rows(),
        lm.matrix.cols(),
        lm.rank
    );
    match lift {
        Some(l) => println!("  lifts; witness has {} simplices", l.witness.len()),
        None => println!("  does not lift"),
    }
    Ok(())
}

fn main() -> ihom::Result<()> {
    report(
        "Σ(equator) ⊂ Σ(S²)",
        &corpus::suspended_equator(),
        &corpus::suspended_sphere(),
    )?;
    report(
        "Σ(factor circle) ⊂ Σ(T²)",
        &corpus::suspended_factor_circle(),
        &corpus::suspended_torus(),
    )
}
