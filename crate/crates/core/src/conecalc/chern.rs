use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::LefschetzData;
use crate::error::{Error, Result};
use crate::exactla::{from_dense, to_dense, Rational};

/// Polar classes `[𝔛^j] ∈ H_{2(n-j)}` of an `n`-dimensional projective
/// variety, in an ambient homology with the hyperplane action `h`
/// (degree `i` to `i - 2`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolarData {
    n: usize,
    ambient: LefschetzData,
    classes: BTreeMap<usize, Vec<Rational>>,
}

impl PolarData {
    pub fn new(
        n: usize,
        ambient: LefschetzData,
        classes: BTreeMap<usize, Vec<Rational>>,
    ) -> Result<Self> {
        for (&j, v) in &classes {
            if j > n {
                return Err(Error::Shape(format!(
                    "polar class {j} exceeds dimension {n}"
                )));
            }
            let want = ambient.dim(2 * (n - j) as isize);
            if v.len() != want {
                return Err(Error::Shape(format!(
                    "polar class {j} has {} coordinates, expected {want}",
                    v.len()
                )));
            }
        }
        Ok(PolarData {
            n,
            ambient,
            classes,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ambient(&self) -> &LefschetzData {
        &self.ambient
    }

    pub fn classes(&self) -> &BTreeMap<usize, Vec<Rational>> {
        &self.classes
    }

    fn class(&self, j: usize) -> Vec<Rational> {
        self.classes
            .get(&j)
            .cloned()
            .unwrap_or_else(|| vec![Rational::zero(); self.ambient.dim(2 * (self.n - j) as isize)])
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernClass {
    pub index: usize,
    /// Homological degree `2(n - index)`.
    pub degree: usize,
    pub coordinates: Vec<Rational>,
}

/// Chern–Mather classes from polar classes:
/// `c_i = Σ_{j ≤ i} (-1)^j C(n + 1 - j, i - j) h^{i-j} [𝔛^j]`.
pub fn chern_mather_lift(d: &PolarData) -> Result<Vec<ChernClass>> {
    let n = d.n;
    let mut out = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let degree = 2 * (n - i);
        let mut total = vec![Rational::zero(); d.ambient.dim(degree as isize)];
        for j in 0..=i {
            let mut v = from_dense(&d.class(j));
            let mut deg = 2 * (n - j);
            while deg > degree {
                v = d.ambient.lambda(deg as isize).mul_vec(&v);
                deg -= 2;
            }
            let mut coeff = Rational::from_integer(num_integer::binomial(
                BigInt::from(n + 1 - j),
                BigInt::from(i - j),
            ));
            if j % 2 == 1 {
                coeff = -coeff;
            }
            for (t, x) in total
                .iter_mut()
                .zip(to_dense(&v, d.ambient.dim(degree as isize)))
            {
                *t += &coeff * x;
            }
        }
        out.push(ChernClass {
            index: i,
            degree,
            coordinates: total,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{q, GradedDims, RationalMatrix};

    fn plane() -> LefschetzData {
        LefschetzData::new(
            GradedDims(vec![1, 0, 1, 0, 1]),
            BTreeMap::from([
                (2, RationalMatrix::from_int_rows(&[&[1]])),
                (4, RationalMatrix::from_int_rows(&[&[1]])),
            ]),
        )
        .unwrap()
    }

    fn coords(c: &[ChernClass]) -> Vec<Vec<Rational>> {
        c.iter().map(|c| c.coordinates.clone()).collect()
    }

    #[test]
    fn projective_plane() {
        let d = PolarData::new(2, plane(), BTreeMap::from([(0, vec![q(1)])])).unwrap();
        let c = chern_mather_lift(&d).unwrap();
        assert_eq!(coords(&c), vec![vec![q(1)], vec![q(3)], vec![q(3)]]);
    }

    #[test]
    fn plane_curves_follow_the_genus_formula() {
        for (deg, expected) in [(1, 2), (2, 2), (3, 0), (4, -4)] {
            // a smooth plane curve of degree e has e(e - 1) points of polar class
            let polar = deg * (deg - 1);
            let d = PolarData::new(
                1,
                plane(),
                BTreeMap::from([(0, vec![q(deg)]), (1, vec![q(polar)])]),
            )
            .unwrap();
            let c = chern_mather_lift(&d).unwrap();
            assert_eq!(c[1].degree, 0);
            assert_eq!(c[1].coordinates, vec![q(expected)], "degree {deg}");
        }
    }

    #[test]
    fn class_shapes_are_checked() {
        assert!(PolarData::new(2, plane(), BTreeMap::from([(0, vec![q(1), q(2)])])).is_err());
        assert!(PolarData::new(2, plane(), BTreeMap::from([(3, vec![])])).is_err());
    }
}
