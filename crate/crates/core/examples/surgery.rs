//! Cone surgery at both apexes of Σ(equator) ⊂ Σ(S²), and the obstructed
//! case for the factor circle of the torus.

use ihom::corpus;
use ihom::ichains::fundamental_class;
use ihom::surgery::{repair_cycle, SurgeryProblem};

fn main() -> ihom::Result<()> {
    let x = corpus::suspended_equator();
    let y = corpus::suspended_sphere();
    let xi = fundamental_class(&x)?;
    let mut problem = SurgeryProblem::new(x.clone(), y.clone(), "N", &xi)?;
    for apex in ["N", "S"] {
        let r = repair_cycle(&problem)?.expect("the equator bounds");
        println!(
            "apex {apex}: η has {} terms, ζ has {} terms",
            r.eta.len(),
            r.zeta.len()
        );
        println!("  ξ' = {}", r.cycle.display(y.complex()));
        println!("  intersection chain of Y: {}", r.allowable_in_y);
        problem = SurgeryProblem::in_target(x.clone(), y.clone(), "S", r.cycle)?;
    }

    let x = corpus::suspended_factor_circle();
    let xi = fundamental_class(&x)?;
    let p = SurgeryProblem::new(x, corpus::suspended_torus(), "N", &xi)?;
    match repair_cycle(&p)? {
        Some(_) => println!("factor circle: repaired"),
        None => println!("factor circle: obstructed, the circle does not bound in the torus"),
    }
    Ok(())
}
