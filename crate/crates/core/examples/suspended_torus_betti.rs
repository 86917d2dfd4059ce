//! Intersection homology of the suspended torus for every built-in
//! perversity, then the same after one barycentric subdivision.

use ihom::complex::{barycentric_subdivide, Perversity};
use ihom::corpus;
use ihom::ichains::ih_betti;

fn main() -> ihom::Result<()> {
    let x = corpus::suspended_torus();
    let sd = barycentric_subdivide(&x)?;
    let perversities = [
        Perversity::Zero,
        Perversity::Middle,
        Perversity::UpperMiddle,
        Perversity::Log,
        Perversity::Top,
    ];
    println!("{:<14} {:>10} {:>12}", "perversity", "ΣT²", "sd(ΣT²)");
    for p in perversities {
        let a = ih_betti(&x, &p, None)?;
        let b = ih_betti(&sd, &p, None)?;
        println!(
            "{:<14} {:>10} {:>12}",
            p.to_string(),
            a.dims.to_string(),
            b.dims.to_string()
        );
    }
    Ok(())
}
