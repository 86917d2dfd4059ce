//! Hard Lefschetz for Λ: y₃ → y₁ derived from a hyperplane section whose
//! link map vanishes, with and without the weak Lefschetz input.

use std::collections::BTreeMap;

use ihom::conecalc::{hard_lefschetz_from_links, LefschetzData};
use ihom::exactla::{GradedDims, RationalMatrix};

fn lefschetz(dims: &[usize], lambda: &[(usize, &[&[i64]])]) -> ihom::Result<LefschetzData> {
    let maps = lambda
        .iter()
        .map(|(i, rows)| (*i, RationalMatrix::from_int_rows(rows)))
        .collect();
    LefschetzData::new(GradedDims(dims.to_vec()), maps)
}

fn main() -> ihom::Result<()> {
    let curve = lefschetz(&[1, 2, 1], &[(2, &[&[4]])])?;
    let surface = lefschetz(&[1, 2, 3, 2, 1], &[(3, &[&[1, 0], &[0, 1]])])?;
    let onto = BTreeMap::from([(1, RationalMatrix::identity(2))]);
    let not_onto = BTreeMap::from([(1, RationalMatrix::from_int_rows(&[&[1, 0], &[0, 0]]))]);
    for (name, i_star) in [("i₁ onto", onto), ("i₁ not onto", not_onto)] {
        let r = hard_lefschetz_from_links(&curve, &surface, &i_star, true, 2)?;
        println!("{name}: {:?}", r.verdict);
        for s in &r.steps {
            println!("  [{}] {}", if s.holds { "ok" } else { "fails" }, s.claim);
        }
    }
    Ok(())
}
