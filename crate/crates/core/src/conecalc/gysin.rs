use num_traits::One;

use super::{is_iso, LefschetzData, PairMorphismData};
use crate::error::{Error, Result};
use crate::exactla::{
    kernel_basis, pivot_columns, rank, solve, GradedDims, Rational, RationalMatrix, SparseVector,
};

/// Intersection homology of the link of the cone point over a projective
/// base `B`, with the maps of the Gysin sequence
/// `b_{k+1} → b_{k-1} → IH_k(ℓ) → b_k → b_{k-2}`.
///
/// `IH_k(ℓ)` is split as `coker(Λ: b_{k+1} → b_{k-1}) ⊕ ker(Λ: b_k → b_{k-2})`,
/// cokernel coordinates first. The cokernel complement is spanned by the
/// standard basis vectors of `b_{k-1}` that are pivots of `[Λ | I]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GysinLink {
    pub dims: GradedDims,
    /// `p_star[k]: b_{k-1} → IH_k(ℓ)`.
    pub p_star: Vec<RationalMatrix>,
    /// `p_lower[k]: IH_k(ℓ) → b_k`.
    pub p_lower: Vec<RationalMatrix>,
}

/// Link homology in degrees `0..=top + 1`, where `top` is the last degree
/// of the base.
pub fn gysin_link(base: &LefschetzData) -> GysinLink {
    let len = base.dims().len() + 1;
    let mut dims = Vec::with_capacity(len);
    let mut p_star = Vec::with_capacity(len);
    let mut p_lower = Vec::with_capacity(len);
    for k in 0..len as isize {
        let (star, lower) = gysin_maps(base, k);
        dims.push(star.rows());
        p_star.push(star);
        p_lower.push(lower);
    }
    GysinLink {
        dims: GradedDims(dims),
        p_star,
        p_lower,
    }
}

fn gysin_maps(base: &LefschetzData, k: isize) -> (RationalMatrix, RationalMatrix) {
    let into = base.lambda(k + 1);
    let below = base.dim(k - 1);
    let stacked = into
        .hstack(&RationalMatrix::identity(below))
        .expect("same row count");
    let complement: Vec<usize> = pivot_columns(&stacked)
        .into_iter()
        .filter(|&c| c >= into.cols())
        .map(|c| c - into.cols())
        .collect();
    let kernel = kernel_basis(&base.lambda(k));
    let (nc, nk) = (complement.len(), kernel.len());

    // [image basis | complement] is invertible onto b_{k-1}
    let image_cols: Vec<usize> = pivot_columns(&stacked)
        .into_iter()
        .filter(|&c| c < into.cols())
        .collect();
    let mut basis = into.select_columns(&image_cols);
    let comp = RationalMatrix::from_columns(
        below,
        complement
            .iter()
            .map(|&j| SparseVector::from([(j, Rational::one())]))
            .collect(),
    )
    .expect("unit vectors fit");
    basis = basis.hstack(&comp).expect("same row count");
    let ni = image_cols.len();
    let mut star = RationalMatrix::zeros(nc + nk, below);
    for i in 0..below {
        let e = SparseVector::from([(i, Rational::one())]);
        let x = solve(&basis, &e).expect("basis spans");
        for (j, v) in x {
            if j >= ni {
                star.set(j - ni, i, v);
            }
        }
    }

    let mut columns = vec![SparseVector::new(); nc];
    columns.extend(kernel);
    let lower = RationalMatrix::from_columns(base.dim(k), columns).expect("kernel vectors fit");
    (star, lower)
}

/// One implication in a diagram chase, with the exact check behind it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChaseStep {
    pub claim: String,
    pub holds: bool,
    pub evidence: String,
}

/// Certificate that the link map vanishes in degree `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChaseReport {
    pub degree: usize,
    /// `IH_k(ℓ_X) → IH_k(ℓ_Y)`, computed as `q* ∘ α_{k-1} ∘ s` for a
    /// section `s` of the surjection `p*`.
    pub matrix: RationalMatrix,
    pub steps: Vec<ChaseStep>,
}

impl ChaseReport {
    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn certified(&self) -> bool {
        self.is_zero() && self.steps.iter().all(|s| s.holds)
    }
}

/// Chases the morphism of Gysin sequences induced by `α` for `𝔛 ⊂ 𝔜`,
/// `dim 𝔛 = k - 1`, `dim 𝔜 = k`, and shows the link map in degree `k` is
/// zero.
///
/// Needs `Λ: x_k → x_{k-2}` and `Λ: y_{k+1} → y_{k-1}` to be isomorphisms;
/// otherwise [`Error::HardLefschetz`]. `α` must commute with `Λ` in degrees
/// `k + 1` and `k`.
pub fn link_map_chase(d: &PairMorphismData, k: usize) -> Result<ChaseReport> {
    let ki = k as isize;
    let lx = d.x.lambda(ki);
    if !is_iso(&lx) {
        return Err(Error::HardLefschetz(format!(
            "Λ: x_{k} → x_{} is not an isomorphism",
            ki - 2
        )));
    }
    let ly = d.y.lambda(ki + 1);
    if !is_iso(&ly) {
        return Err(Error::HardLefschetz(format!(
            "Λ: y_{} → y_{} is not an isomorphism",
            k + 1,
            ki - 1
        )));
    }
    for deg in [ki + 1, ki] {
        let left = d.y.lambda(deg).mul(&d.alpha(deg))?;
        let right = d.alpha(deg - 2).mul(&d.x.lambda(deg))?;
        if left != right {
            return Err(Error::Precondition(format!(
                "α does not commute with Λ out of degree {deg}"
            )));
        }
    }

    let (p_star, p_lower) = gysin_maps(&d.x, ki);
    let (q_star, q_lower) = gysin_maps(&d.y, ki);
    let mut steps = Vec::new();
    steps.push(ChaseStep {
        claim: format!("Λ: x_{k} → x_{} is injective, so p_* = 0", ki - 2),
        holds: p_lower.is_zero(),
        evidence: format!(
            "rank Λ = {} = dim x_{k}; p_* is {}x{} zero",
            rank(&lx),
            p_lower.rows(),
            p_lower.cols()
        ),
    });
    let link_x = p_star.rows();
    steps.push(ChaseStep {
        claim: format!("p*: x_{} → IH_{k}(ℓ_X) is onto", ki - 1),
        holds: rank(&p_star) == link_x,
        evidence: format!("rank p* = {} = dim IH_{k}(ℓ_X) = {link_x}", rank(&p_star)),
    });
    steps.push(ChaseStep {
        claim: format!("Λ: y_{} → y_{} is onto, so q* = 0", k + 1, ki - 1),
        holds: q_star.is_zero(),
        evidence: format!("rank Λ = {} = dim y_{}", rank(&ly), ki - 1),
    });
    steps.push(ChaseStep {
        claim: format!("q_*: IH_{k}(ℓ_Y) → y_{k} is injective"),
        holds: rank(&q_lower) == q_lower.cols(),
        evidence: format!("rank q_* = {} = dim IH_{k}(ℓ_Y)", rank(&q_lower)),
    });
    steps.push(ChaseStep {
        claim: format!("α commutes with Λ out of degrees {} and {k}", k + 1),
        holds: true,
        evidence: "checked exactly".into(),
    });

    let section = right_inverse(&p_star);
    let matrix = q_star.mul(&d.alpha(ki - 1))?.mul(&section)?;
    steps.push(ChaseStep {
        claim: "λ ∘ p* = q* ∘ α with p* onto and q* = 0, so λ = 0".into(),
        holds: matrix.is_zero(),
        evidence: format!(
            "λ is {}x{} with rank {}",
            matrix.rows(),
            matrix.cols(),
            rank(&matrix)
        ),
    });
    Ok(ChaseReport {
        degree: k,
        matrix,
        steps,
    })
}

/// A right inverse of a surjection: each standard basis vector of the
/// target is solved for.
fn right_inverse(m: &RationalMatrix) -> RationalMatrix {
    let columns = (0..m.rows())
        .map(|i| solve(m, &SparseVector::from([(i, Rational::one())])).expect("surjective"))
        .collect();
    RationalMatrix::from_columns(m.cols(), columns).expect("solutions fit")
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    fn lefschetz(dims: &[usize], lambda: &[(usize, &[&[i64]])]) -> LefschetzData {
        LefschetzData::new(
            GradedDims(dims.to_vec()),
            lambda
                .iter()
                .map(|(i, rows)| (*i, RationalMatrix::from_int_rows(rows)))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn link_over_projective_line_is_a_three_sphere() {
        let g = gysin_link(&lefschetz(&[1, 0, 1], &[(2, &[&[1]])]));
        assert_eq!(g.dims, GradedDims(vec![1, 0, 0, 1]));
    }

    #[test]
    fn link_over_a_point_is_a_circle() {
        let g = gysin_link(&lefschetz(&[1], &[]));
        assert_eq!(g.dims, GradedDims(vec![1, 1]));
    }

    #[test]
    fn link_over_quadric_surface() {
        let g = gysin_link(&lefschetz(
            &[1, 0, 2, 0, 1],
            &[(2, &[&[1, 1]]), (4, &[&[1], &[1]])],
        ));
        assert_eq!(g.dims, GradedDims(vec![1, 0, 1, 1, 0, 1]));
        assert_eq!(g.dims.euler_characteristic(), 0);
    }

    #[test]
    fn sequence_is_exact_at_the_link() {
        let base = lefschetz(&[1, 0, 2, 0, 1], &[(2, &[&[1, 1]]), (4, &[&[1], &[1]])]);
        let g = gysin_link(&base);
        for k in 0..g.dims.len() {
            let composite = g.p_lower[k].mul(&g.p_star[k]).unwrap();
            assert!(composite.is_zero(), "p_* p* = 0 in degree {k}");
            let lp = g.p_star[k].mul(&base.lambda(k as isize + 1)).unwrap();
            assert!(lp.is_zero(), "p* Λ = 0 in degree {k}");
            assert_eq!(
                rank(&g.p_star[k]) + rank(&g.p_lower[k]),
                g.dims.get(k as isize)
            );
        }
    }

    fn elliptic_in_quadric() -> PairMorphismData {
        let x = lefschetz(&[1, 2, 1], &[(2, &[&[4]])]);
        let y = lefschetz(&[1, 0, 2, 0, 1], &[(2, &[&[1, 1]]), (4, &[&[1], &[1]])]);
        let alpha = BTreeMap::from([
            (0, RationalMatrix::from_int_rows(&[&[1]])),
            (1, RationalMatrix::zeros(0, 2)),
            (2, RationalMatrix::from_int_rows(&[&[2], &[2]])),
        ]);
        PairMorphismData::new(x, y, alpha).unwrap()
    }

    #[test]
    fn chase_certifies_zero_link_map() {
        let r = link_map_chase(&elliptic_in_quadric(), 2).unwrap();
        assert!(r.is_zero());
        assert!(r.certified(), "{:?}", r.steps);
    }

    #[test]
    fn chase_needs_hard_lefschetz() {
        let mut d = elliptic_in_quadric();
        d.x = lefschetz(&[1, 2, 1], &[]);
        let d = PairMorphismData::new(d.x.clone(), d.y.clone(), d.alpha_entries().clone()).unwrap();
        assert!(matches!(
            link_map_chase(&d, 2),
            Err(Error::HardLefschetz(_))
        ));
    }

    #[test]
    fn chase_rejects_non_commuting_alpha() {
        let d = elliptic_in_quadric();
        let mut alpha = d.alpha_entries().clone();
        alpha.insert(2, RationalMatrix::from_int_rows(&[&[1], &[2]]));
        let d = PairMorphismData::new(d.x.clone(), d.y.clone(), alpha).unwrap();
        assert!(matches!(link_map_chase(&d, 2), Err(Error::Precondition(_))));
    }
}
