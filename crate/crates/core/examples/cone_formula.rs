//! Relative intersection homology of (cone L, L) from the chain engine next
//! to the closed-form answer, for four links.

use ihom::complex::StratifiedComplex;
use ihom::corpus;
use ihom::ichains::verify_cone_formula;

fn main() -> ihom::Result<()> {
    let links = [
        ("circle", corpus::hexagon()),
        ("torus", corpus::torus()),
        ("sphere", corpus::octahedron()),
        ("Klein bottle", corpus::klein_bottle()),
    ];
    for (name, l) in links {
        let r = verify_cone_formula(&StratifiedComplex::unstratified(l))?;
        println!(
            "{name:<13} IH(L) {:<10} engine {:<10} formula {:<10} {}",
            r.link_dims.to_string(),
            r.engine.to_string(),
            r.formula.to_string(),
            if r.holds() { "agree" } else { "differ" }
        );
    }
    Ok(())
}
