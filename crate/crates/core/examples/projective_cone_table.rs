//! Intersection homology of projective cones over points in P¹, compared
//! with the chain engine on two spheres glued at a point.

use std::collections::BTreeMap;

use ihom::complex::Perversity;
use ihom::conecalc::{projective_cone_table, LefschetzData, PairMorphismData};
use ihom::corpus;
use ihom::exactla::{GradedDims, RationalMatrix};
use ihom::ichains::ih_betti;

fn points_in_line(points: usize) -> ihom::Result<PairMorphismData> {
    let x = LefschetzData::new(GradedDims(vec![points]), BTreeMap::new())?;
    let y = LefschetzData::new(
        GradedDims(vec![1, 0, 1]),
        BTreeMap::from([(2, RationalMatrix::from_int_rows(&[&[1]]))]),
    )?;
    let alpha = RationalMatrix::from_int_rows(&[&vec![1; points]]);
    PairMorphismData::new(x, y, BTreeMap::from([(0, alpha)]))
}

fn main() -> ihom::Result<()> {
    for points in [1, 2] {
        let t = projective_cone_table(&points_in_line(points)?, 1)?;
        println!(
            "{points} point(s) in P¹: IH(KX) {} IH(KY) {} ranks {:?}",
            t.kx,
            t.ky,
            t.ranks()
        );
    }
    let engine = ih_betti(&corpus::crossing_spheres(), &Perversity::Middle, None)?;
    println!(
        "chain engine, two spheres meeting at a point: {}",
        engine.dims
    );
    Ok(())
}
