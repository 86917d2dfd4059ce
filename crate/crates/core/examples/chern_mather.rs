//! Chern–Mather classes of P² and of smooth plane curves from their polar
//! classes.

use std::collections::BTreeMap;

use ihom::conecalc::{chern_mather_lift, LefschetzData, PolarData};
use ihom::exactla::{q, GradedDims, RationalMatrix};

fn main() -> ihom::Result<()> {
    let plane = LefschetzData::new(
        GradedDims(vec![1, 0, 1, 0, 1]),
        BTreeMap::from([
            (2, RationalMatrix::from_int_rows(&[&[1]])),
            (4, RationalMatrix::from_int_rows(&[&[1]])),
        ]),
    )?;
    let p2 = PolarData::new(2, plane.clone(), BTreeMap::from([(0, vec![q(1)])]))?;
    for c in chern_mather_lift(&p2)? {
        println!("P²: c_{} = {} h^{}", c.index, c.coordinates[0], c.index);
    }
    for degree in 1..=5i64 {
        let polar = degree * (degree - 1);
        let curve = PolarData::new(
            1,
            plane.clone(),
            BTreeMap::from([(0, vec![q(degree)]), (1, vec![q(polar)])]),
        )?;
        let c1 = &chern_mather_lift(&curve)?[1].coordinates[0];
        println!("plane curve of degree {degree}: deg c_1 = {c1}");
    }
    Ok(())
}
