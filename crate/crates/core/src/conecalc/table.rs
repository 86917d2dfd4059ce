use super::{is_iso, PairMorphismData};
use crate::error::{Error, Result};
use crate::exactla::{inverse, rank, GradedDims, RationalMatrix};

/// Intersection homology of the projective cones `K𝔛 ⊂ K𝔜` and the map
/// between them, degree by degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeTable {
    pub kx: GradedDims,
    pub ky: GradedDims,
    /// `maps[i]: IH_i(K𝔛) → IH_i(K𝔜)`.
    pub maps: Vec<RationalMatrix>,
}

impl ConeTable {
    pub fn ranks(&self) -> Vec<usize> {
        self.maps.iter().map(rank).collect()
    }
}

/// Evaluates the projective-cone table for `dim 𝔛 = n - 1`, `dim 𝔜 = n`.
///
/// Rows `i < n` carry `x_i → y_i` by `α_i`. Row `n` is
/// `im(Λ: x_n → x_{n-2}) → y_n` by `ᾱ_n = α_n Λ_x^{-1}`, in the basis of
/// `x_{n-2}`. Row `n + 1` is `x_{n-1} → im(Λ: y_{n+1} → y_{n-1})` by
/// `Λ_y^{-1} α_{n-1}`, in the basis of `y_{n+1}`. Rows `n + 2 ..= 2n` carry
/// `x_{i-2} → y_{i-2}` by `α_{i-2}`; the last two rows of `K𝔛` vanish.
pub fn projective_cone_table(d: &PairMorphismData, n: usize) -> Result<ConeTable> {
    if n == 0 {
        return Err(Error::Malformed("n must be at least 1".into()));
    }
    let ni = n as isize;
    let lx = d.x.lambda(ni);
    if !is_iso(&lx) {
        return Err(Error::HardLefschetz(format!(
            "Λ: x_{n} → x_{} is not an isomorphism",
            ni - 2
        )));
    }
    let ly = d.y.lambda(ni + 1);
    if !is_iso(&ly) {
        return Err(Error::HardLefschetz(format!(
            "Λ: y_{} → y_{} is not an isomorphism",
            n + 1,
            ni - 1
        )));
    }
    let lx_inv = inverse(&lx).expect("checked invertible");
    let ly_inv = inverse(&ly).expect("checked invertible");

    let mut kx = Vec::with_capacity(2 * n + 3);
    let mut ky = Vec::with_capacity(2 * n + 3);
    let mut maps = Vec::with_capacity(2 * n + 3);
    for i in 0..=(2 * n + 2) {
        let ii = i as isize;
        let (x_dim, y_dim, map) = if i < n {
            (d.x.dim(ii), d.y.dim(ii), d.alpha(ii))
        } else if i == n {
            (lx.rows(), d.y.dim(ii), d.alpha(ii).mul(&lx_inv)?)
        } else if i == n + 1 {
            (d.x.dim(ii - 2), ly.cols(), ly_inv.mul(&d.alpha(ii - 2))?)
        } else if i <= 2 * n {
            (d.x.dim(ii - 2), d.y.dim(ii - 2), d.alpha(ii - 2))
        } else {
            let y_dim = d.y.dim(ii - 2);
            (0, y_dim, RationalMatrix::zeros(y_dim, 0))
        };
        kx.push(x_dim);
        ky.push(y_dim);
        maps.push(map);
    }
    while kx.len() > 2 * n + 1 && kx.last() == Some(&0) {
        kx.pop();
    }
    Ok(ConeTable {
        kx: GradedDims(kx),
        ky: GradedDims(ky),
        maps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conecalc::LefschetzData;
    use std::collections::BTreeMap;

    fn points_in_line(points: usize) -> PairMorphismData {
        let x = LefschetzData::new(GradedDims(vec![points]), BTreeMap::new()).unwrap();
        let y = LefschetzData::new(
            GradedDims(vec![1, 0, 1]),
            BTreeMap::from([(2, RationalMatrix::from_int_rows(&[&[1]]))]),
        )
        .unwrap();
        let alpha = RationalMatrix::from_int_rows(&[&vec![1; points]]);
        PairMorphismData::new(x, y, BTreeMap::from([(0, alpha)])).unwrap()
    }

    #[test]
    fn point_in_projective_line() {
        let t = projective_cone_table(&points_in_line(1), 1).unwrap();
        assert_eq!(t.kx, GradedDims(vec![1, 0, 1]));
        assert_eq!(t.ky, GradedDims(vec![1, 0, 1, 0, 1]));
        assert_eq!(t.ranks(), vec![1, 0, 1, 0, 0]);
    }

    #[test]
    fn two_points_in_projective_line() {
        let t = projective_cone_table(&points_in_line(2), 1).unwrap();
        assert_eq!(t.kx, GradedDims(vec![2, 0, 2]));
    }

    #[test]
    fn zero_x_gives_shifted_y() {
        let x = LefschetzData::new(GradedDims(vec![0, 0, 0]), BTreeMap::new()).unwrap();
        let y = LefschetzData::new(
            GradedDims(vec![1, 0, 1, 0, 1]),
            BTreeMap::from([
                (2, RationalMatrix::from_int_rows(&[&[1]])),
                (4, RationalMatrix::from_int_rows(&[&[1]])),
            ]),
        )
        .unwrap();
        let d = PairMorphismData::new(x, y, BTreeMap::new()).unwrap();
        let t = projective_cone_table(&d, 2).unwrap();
        assert_eq!(t.kx.total(), 0);
        assert_eq!(t.ky, GradedDims(vec![1, 0, 1, 0, 1, 0, 1]));
    }

    #[test]
    fn non_iso_lambda_is_a_precondition_failure() {
        let x = LefschetzData::new(GradedDims(vec![1]), BTreeMap::new()).unwrap();
        let y = LefschetzData::new(GradedDims(vec![1, 0, 1]), BTreeMap::new()).unwrap();
        let d = PairMorphismData::new(x, y, BTreeMap::new()).unwrap();
        let err = projective_cone_table(&d, 1).unwrap_err();
        assert!(matches!(err, Error::HardLefschetz(_)));
        assert!(err.is_precondition());
    }
}
