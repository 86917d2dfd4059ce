use std::fmt;

use num_traits::Zero;

use super::echelon::{kernel_basis, pivot_columns, rank, solve_many};
use super::matrix::{Rational, RationalMatrix, SparseVector};
use crate::error::{Error, Result};

/// Dimensions of a graded vector space, indexed by homological degree from 0.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GradedDims(pub Vec<usize>);

impl GradedDims {
    pub fn zeros(len: usize) -> Self {
        GradedDims(vec![0; len])
    }

    /// Dimension in degree `d`; degrees outside the stored range are zero.
    pub fn get(&self, d: isize) -> usize {
        if d < 0 {
            return 0;
        }
        self.0.get(d as usize).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(d, &n)| if d % 2 == 0 { n as i64 } else { -(n as i64) })
            .sum()
    }

    pub fn is_palindromic(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

impl From<Vec<usize>> for GradedDims {
    fn from(v: Vec<usize>) -> Self {
        GradedDims(v)
    }
}

impl fmt::Display for GradedDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A finite chain complex given by its boundary matrices.
///
/// `boundary(d)` maps degree `d` to degree `d - 1`; `boundary(0)` has zero
/// rows. The composite of consecutive boundaries is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplexMatrices {
    boundaries: Vec<RationalMatrix>,
}

impl ChainComplexMatrices {
    pub fn new(boundaries: Vec<RationalMatrix>) -> Result<Self> {
        if let Some(b0) = boundaries.first() {
            if b0.rows() != 0 {
                return Err(Error::Shape(
                    "boundary in degree 0 must have no rows".into(),
                ));
            }
        }
        for d in 1..boundaries.len() {
            if boundaries[d].rows() != boundaries[d - 1].cols() {
                return Err(Error::Shape(format!(
                    "boundary {d} has {} rows but degree {} has rank {}",
                    boundaries[d].rows(),
                    d - 1,
                    boundaries[d - 1].cols()
                )));
            }
            if !boundaries[d - 1].mul(&boundaries[d])?.is_zero() {
                return Err(Error::NotAComplex(format!("d{} d{}", d - 1, d)));
            }
        }
        Ok(ChainComplexMatrices { boundaries })
    }

    /// Builds from the positive-degree boundaries `d_1, ..., d_n` plus the
    /// rank of the degree-0 group.
    pub fn from_positive(rank0: usize, positive: Vec<RationalMatrix>) -> Result<Self> {
        let mut all = vec![RationalMatrix::zeros(0, rank0)];
        all.extend(positive);
        Self::new(all)
    }

    /// Number of degrees (top degree + 1).
    pub fn len(&self) -> usize {
        self.boundaries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boundaries.is_empty()
    }

    pub fn rank_in(&self, d: usize) -> usize {
        self.boundaries.get(d).map_or(0, RationalMatrix::cols)
    }

    /// Boundary out of degree `d`; a zero map above the top degree.
    pub fn boundary(&self, d: usize) -> RationalMatrix {
        match self.boundaries.get(d) {
            Some(b) => b.clone(),
            None => RationalMatrix::zeros(self.rank_in(d.wrapping_sub(1)), 0),
        }
    }

    pub fn boundaries(&self) -> &[RationalMatrix] {
        &self.boundaries
    }

    pub fn chain_dims(&self) -> GradedDims {
        GradedDims(self.boundaries.iter().map(RationalMatrix::cols).collect())
    }

    /// Homology basis in degree `d`, chosen by the pivot convention.
    pub fn homology_basis(&self, d: usize) -> HomologyBasis {
        let bd = self.boundary(d);
        let cycles = kernel_basis(&bd);
        let above = self.boundary(d + 1);
        let boundaries: Vec<SparseVector> = above.columns().to_vec();
        HomologyBasis::select(self.rank_in(d), boundaries, cycles)
    }
}

/// A basis of `ker d_d / im d_{d+1}` given by cycle representatives.
#[derive(Clone, Debug)]
pub struct HomologyBasis {
    ambient: usize,
    representatives: Vec<SparseVector>,
    boundaries: Vec<SparseVector>,
}

impl HomologyBasis {
    /// Keeps the cycles that are independent modulo the boundaries, scanning
    /// boundaries first and then cycles in order.
    pub fn select(
        ambient: usize,
        boundaries: Vec<SparseVector>,
        cycles: Vec<SparseVector>,
    ) -> Self {
        let nb = boundaries.len();
        let mut columns = boundaries.clone();
        columns.extend(cycles.iter().cloned());
        let stacked =
            RationalMatrix::from_columns(ambient, columns).expect("vectors fit the ambient space");
        let representatives = pivot_columns(&stacked)
            .into_iter()
            .filter(|&c| c >= nb)
            .map(|c| cycles[c - nb].clone())
            .collect();
        HomologyBasis {
            ambient,
            representatives,
            boundaries,
        }
    }

    pub fn dim(&self) -> usize {
        self.representatives.len()
    }

    pub fn representatives(&self) -> &[SparseVector] {
        &self.representatives
    }

    /// Coordinates of each cycle's class; `None` for vectors that are not in
    /// `span(representatives) + boundaries` (i.e. not cycles).
    pub fn coordinates(&self, cycles: &[SparseVector]) -> Vec<Option<Vec<Rational>>> {
        let mut columns = self.representatives.clone();
        columns.extend(self.boundaries.iter().cloned());
        let m = RationalMatrix::from_columns(self.ambient, columns)
            .expect("vectors fit the ambient space");
        let h = self.dim();
        solve_many(&m, cycles)
            .into_iter()
            .map(|sol| {
                sol.map(|x| {
                    (0..h)
                        .map(|i| x.get(&i).cloned().unwrap_or_else(Rational::zero))
                        .collect()
                })
            })
            .collect()
    }

    /// Is the class of `cycle` zero? `None` if it is not a cycle.
    pub fn is_boundary(&self, cycle: &SparseVector) -> Option<bool> {
        self.coordinates(std::slice::from_ref(cycle))
            .pop()
            .flatten()
            .map(|c| c.iter().all(Zero::is_zero))
    }
}

pub fn homology_dims(c: &ChainComplexMatrices) -> GradedDims {
    GradedDims(
        (0..c.len())
            .map(|d| {
                let z = c.rank_in(d) - rank(&c.boundary(d));
                z - rank(&c.boundary(d + 1))
            })
            .collect(),
    )
}

/// Matrix of the map induced on degree-`degree` homology by `chain_map`
/// (one matrix per degree, source -> target), in the pivot-convention bases.
pub fn induced_map_on_homology(
    src: &ChainComplexMatrices,
    tgt: &ChainComplexMatrices,
    chain_map: &[RationalMatrix],
    degree: usize,
) -> Result<RationalMatrix> {
    check_chain_map(src, tgt, chain_map)?;
    let f = chain_map
        .get(degree)
        .cloned()
        .unwrap_or_else(|| RationalMatrix::zeros(tgt.rank_in(degree), src.rank_in(degree)));
    let hs = src.homology_basis(degree);
    let ht = tgt.homology_basis(degree);
    let images: Vec<SparseVector> = hs.representatives().iter().map(|z| f.mul_vec(z)).collect();
    let coords = ht.coordinates(&images);
    let mut out = RationalMatrix::zeros(ht.dim(), hs.dim());
    for (j, c) in coords.into_iter().enumerate() {
        let c = c.ok_or(Error::NotAChainMap(degree))?;
        for (i, v) in c.into_iter().enumerate() {
            out.set(i, j, v);
        }
    }
    Ok(out)
}

fn check_chain_map(
    src: &ChainComplexMatrices,
    tgt: &ChainComplexMatrices,
    chain_map: &[RationalMatrix],
) -> Result<()> {
    let top = src.len().max(tgt.len());
    if chain_map.len() > top {
        return Err(Error::Shape(
            "chain map has more degrees than the complexes".into(),
        ));
    }
    for (d, f) in chain_map.iter().enumerate() {
        if f.rows() != tgt.rank_in(d) || f.cols() != src.rank_in(d) {
            return Err(Error::Shape(format!(
                "chain map in degree {d} is {}x{}, expected {}x{}",
                f.rows(),
                f.cols(),
                tgt.rank_in(d),
                src.rank_in(d)
            )));
        }
        if d == 0 {
            continue;
        }
        let Some(prev) = chain_map.get(d - 1) else {
            continue;
        };
        let left = tgt.boundary(d).mul(f)?;
        let right = prev.mul(&src.boundary(d))?;
        if left != right {
            return Err(Error::NotAChainMap(d));
        }
    }
    Ok(())
}
