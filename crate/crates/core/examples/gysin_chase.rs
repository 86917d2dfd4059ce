//! Link homology of cones over P¹ and P¹×P¹ from the Gysin sequence, and
//! the chase showing the link map of a genus-1 curve in the quadric
//! vanishes.

use std::collections::BTreeMap;

use ihom::conecalc::{gysin_link, link_map_chase, LefschetzData, PairMorphismData};
use ihom::exactla::{GradedDims, RationalMatrix};

fn lefschetz(dims: &[usize], lambda: &[(usize, &[&[i64]])]) -> ihom::Result<LefschetzData> {
    let maps = lambda
        .iter()
        .map(|(i, rows)| (*i, RationalMatrix::from_int_rows(rows)))
        .collect();
    LefschetzData::new(GradedDims(dims.to_vec()), maps)
}

fn main() -> ihom::Result<()> {
    let line = lefschetz(&[1, 0, 1], &[(2, &[&[1]])])?;
    let quadric = lefschetz(&[1, 0, 2, 0, 1], &[(2, &[&[1, 1]]), (4, &[&[1], &[1]])])?;
    println!("link over P¹:     {}", gysin_link(&line).dims);
    println!("link over P¹×P¹:  {}", gysin_link(&quadric).dims);

    let curve = lefschetz(&[1, 2, 1], &[(2, &[&[4]])])?;
    let alpha = BTreeMap::from([
        (0, RationalMatrix::from_int_rows(&[&[1]])),
        (1, RationalMatrix::zeros(0, 2)),
        (2, RationalMatrix::from_int_rows(&[&[2], &[2]])),
    ]);
    let pair = PairMorphismData::new(curve, quadric, alpha)?;
    let r = link_map_chase(&pair, 2)?;
    for (i, s) in r.steps.iter().enumerate() {
        println!(
            "{}. [{}] {}",
            i + 1,
            if s.holds { "ok" } else { "fails" },
            s.claim
        );
    }
    println!("link map zero: {}", r.is_zero());
    Ok(())
}
