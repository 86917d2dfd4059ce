//! Formula-level calculations on graded dimensions and structure maps.
//!
//! Inputs are graded dimensions together with matrices for the Lefschetz
//! operator `Λ` (degree `i` to `i - 2`), for morphisms `α_i` and for
//! hyperplane-section maps. Nothing here looks at a triangulation; these are
//! the linear-algebra consequences of the sheaf-level statements, checked
//! exactly.

mod chern;
mod gysin;
mod lefschetz;
mod table;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exactla::{GradedDims, RationalMatrix};

pub use chern::{chern_mather_lift, ChernClass, PolarData};
pub use gysin::{gysin_link, link_map_chase, ChaseReport, ChaseStep, GysinLink};
pub use lefschetz::{hard_lefschetz_from_links, HlReport, HlVerdict};
pub use table::{projective_cone_table, ConeTable};

/// Intersection homology of the open cone on `L` with closed supports:
/// `IH_{i-1}(L)` for `i > cone_dim / 2`, zero otherwise, in degrees
/// `0..=cone_dim`.
pub fn cone_formula(ih_l: &GradedDims, cone_dim: usize) -> GradedDims {
    GradedDims(
        (0..=cone_dim)
            .map(|i| {
                if 2 * i > cone_dim {
                    ih_l.get(i as isize - 1)
                } else {
                    0
                }
            })
            .collect(),
    )
}

/// Graded dimensions with the Lefschetz operator `Λ_i: V_i → V_{i-2}`,
/// keyed by source degree. Missing entries are zero maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LefschetzData {
    dims: GradedDims,
    lambda: BTreeMap<usize, RationalMatrix>,
}

impl LefschetzData {
    pub fn new(dims: GradedDims, lambda: BTreeMap<usize, RationalMatrix>) -> Result<Self> {
        for (&i, m) in &lambda {
            if i < 2 || i >= dims.len() {
                return Err(Error::Shape(format!(
                    "Λ given out of degree {i}, outside 2..{}",
                    dims.len()
                )));
            }
            let want = (dims.get(i as isize - 2), dims.get(i as isize));
            if (m.rows(), m.cols()) != want {
                return Err(Error::Shape(format!(
                    "Λ out of degree {i} is {}x{}, expected {}x{}",
                    m.rows(),
                    m.cols(),
                    want.0,
                    want.1
                )));
            }
        }
        Ok(LefschetzData { dims, lambda })
    }

    pub fn dims(&self) -> &GradedDims {
        &self.dims
    }

    pub fn dim(&self, i: isize) -> usize {
        self.dims.get(i)
    }

    /// `Λ: V_i → V_{i-2}`; zero (possibly with empty shape) when not given.
    pub fn lambda(&self, i: isize) -> RationalMatrix {
        if i >= 0 {
            if let Some(m) = self.lambda.get(&(i as usize)) {
                return m.clone();
            }
        }
        RationalMatrix::zeros(self.dims.get(i - 2), self.dims.get(i))
    }

    pub fn lambda_entries(&self) -> &BTreeMap<usize, RationalMatrix> {
        &self.lambda
    }
}

/// A pair `𝔛 ⊂ 𝔜` with a morphism `α_i: x_i → y_i` keyed by degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairMorphismData {
    pub x: LefschetzData,
    pub y: LefschetzData,
    alpha: BTreeMap<usize, RationalMatrix>,
}

impl PairMorphismData {
    pub fn new(
        x: LefschetzData,
        y: LefschetzData,
        alpha: BTreeMap<usize, RationalMatrix>,
    ) -> Result<Self> {
        for (&i, m) in &alpha {
            let want = (y.dim(i as isize), x.dim(i as isize));
            if (m.rows(), m.cols()) != want {
                return Err(Error::Shape(format!(
                    "α_{i} is {}x{}, expected {}x{}",
                    m.rows(),
                    m.cols(),
                    want.0,
                    want.1
                )));
            }
        }
        Ok(PairMorphismData { x, y, alpha })
    }

    /// `α_i`; zero when not given.
    pub fn alpha(&self, i: isize) -> RationalMatrix {
        if i >= 0 {
            if let Some(m) = self.alpha.get(&(i as usize)) {
                return m.clone();
            }
        }
        RationalMatrix::zeros(self.y.dim(i), self.x.dim(i))
    }

    pub fn alpha_entries(&self) -> &BTreeMap<usize, RationalMatrix> {
        &self.alpha
    }
}

pub(crate) fn is_iso(m: &RationalMatrix) -> bool {
    m.rows() == m.cols() && crate::exactla::rank(m) == m.rows()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cone_formula_examples() {
        assert_eq!(
            cone_formula(&GradedDims(vec![1, 2, 1]), 3),
            GradedDims(vec![0, 0, 2, 1])
        );
        assert_eq!(
            cone_formula(&GradedDims(vec![1, 0, 1]), 3),
            GradedDims(vec![0, 0, 0, 1])
        );
        assert_eq!(
            cone_formula(&GradedDims(vec![1, 1]), 2),
            GradedDims(vec![0, 0, 1])
        );
    }

    #[test]
    fn cone_formula_vanishes_below_half() {
        for n in 1..8 {
            let ih = GradedDims((0..n).map(|i| i + 1).collect());
            let out = cone_formula(&ih, n);
            for i in 0..=n {
                if 2 * i <= n {
                    assert_eq!(out.get(i as isize), 0);
                }
            }
            let above: usize = (0..=n)
                .filter(|i| 2 * i > n)
                .map(|i| ih.get(i as isize - 1))
                .sum();
            assert_eq!(out.total(), above);
        }
    }

    #[test]
    fn shapes_are_checked() {
        let dims = GradedDims(vec![1, 0, 1]);
        let bad = BTreeMap::from([(2, RationalMatrix::zeros(2, 1))]);
        assert!(LefschetzData::new(dims, bad).is_err());
    }
}
