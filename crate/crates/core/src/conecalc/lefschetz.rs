use std::collections::BTreeMap;

use super::gysin::ChaseStep;
use super::LefschetzData;
use crate::error::{Error, Result};
use crate::exactla::{rank, RationalMatrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HlVerdict {
    /// `Λ: y_{n+1} → y_{n-1}` is forced to be an isomorphism and the given
    /// matrix is one.
    Certified,
    /// The chase forces surjectivity but the given `Λ` is not onto.
    Inconsistent(String),
    /// A hypothesis of the chase fails; nothing is claimed.
    NoConclusion(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HlReport {
    pub verdict: HlVerdict,
    pub steps: Vec<ChaseStep>,
    /// Statements outside the degree-one argument, listed for completeness.
    pub standard_steps: Vec<String>,
}

/// Derives the isomorphism `Λ: y_{n+1} → y_{n-1}` for `dim 𝔜 = n` from a
/// hyperplane section `𝔛` whose link map into `𝔜` vanishes in degree `n`.
///
/// The chase: `q* ∘ i_{n-1} = λ ∘ p* = 0` and `i_{n-1}` is onto, so `q* = 0`;
/// by exactness `Λ` is onto `y_{n-1}`, and Poincaré duality on `y` makes the
/// dimensions agree.
pub fn hard_lefschetz_from_links(
    x: &LefschetzData,
    y: &LefschetzData,
    i_star: &BTreeMap<usize, RationalMatrix>,
    link_middle_map_is_zero: bool,
    n: usize,
) -> Result<HlReport> {
    if n == 0 {
        return Err(Error::Malformed("n must be at least 1".into()));
    }
    for (&i, m) in i_star {
        let want = (y.dim(i as isize), x.dim(i as isize));
        if (m.rows(), m.cols()) != want {
            return Err(Error::Shape(format!(
                "i_{i} is {}x{}, expected {}x{}",
                m.rows(),
                m.cols(),
                want.0,
                want.1
            )));
        }
    }
    let ni = n as isize;
    let standard_steps = (2..=n)
        .map(|k| {
            format!(
                "Λ^{k}: y_{} → y_{} by induction on hyperplane sections",
                n + k,
                ni - k as isize
            )
        })
        .collect();
    let mut steps = Vec::new();
    let finish = |verdict, steps| {
        Ok(HlReport {
            verdict,
            steps,
            standard_steps,
        })
    };

    let palindromic = y.dims().len() == 2 * n + 1 && y.dims().is_palindromic();
    steps.push(ChaseStep {
        claim: format!("y satisfies Poincaré duality in dimension {}", 2 * n),
        holds: palindromic,
        evidence: format!("y = {}", y.dims()),
    });
    if !palindromic {
        return finish(
            HlVerdict::NoConclusion("y is not palindromic of length 2n + 1".into()),
            steps,
        );
    }

    let target = y.dim(ni - 1);
    let i_low = i_star
        .get(&(n - 1))
        .cloned()
        .unwrap_or_else(|| RationalMatrix::zeros(target, x.dim(ni - 1)));
    let onto = rank(&i_low) == target;
    steps.push(ChaseStep {
        claim: format!("i_{}: x_{0} → y_{0} is onto", n - 1),
        holds: onto,
        evidence: format!("rank i_{} = {} of {target}", n - 1, rank(&i_low)),
    });
    if !onto {
        return finish(
            HlVerdict::NoConclusion(format!("i_{} is not onto", n - 1)),
            steps,
        );
    }

    steps.push(ChaseStep {
        claim: format!("the link map vanishes in degree {n}"),
        holds: link_middle_map_is_zero,
        evidence: "given".into(),
    });
    if !link_middle_map_is_zero {
        return finish(
            HlVerdict::NoConclusion("the link map is not known to vanish".into()),
            steps,
        );
    }
    steps.push(ChaseStep {
        claim: "q* ∘ i = λ ∘ p* = 0 with i onto, so q* = 0".into(),
        holds: true,
        evidence: "follows from the two steps above".into(),
    });

    let lambda = y.lambda(ni + 1);
    let r = rank(&lambda);
    let iso = lambda.rows() == lambda.cols() && r == target;
    steps.push(ChaseStep {
        claim: format!(
            "Λ: y_{} → y_{} is onto, hence an isomorphism",
            n + 1,
            ni - 1
        ),
        holds: iso,
        evidence: format!(
            "rank Λ = {r}, dim y_{} = {}, dim y_{} = {target}",
            n + 1,
            lambda.cols(),
            ni - 1
        ),
    });
    let verdict = if iso {
        HlVerdict::Certified
    } else {
        HlVerdict::Inconsistent(format!(
            "the given Λ out of degree {} has rank {r}, not {target}",
            n + 1
        ))
    };
    finish(verdict, steps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::GradedDims;

    fn ld(dims: &[usize], lambda: &[(usize, &[&[i64]])]) -> LefschetzData {
        LefschetzData::new(
            GradedDims(dims.to_vec()),
            lambda
                .iter()
                .map(|(i, r)| (*i, RationalMatrix::from_int_rows(r)))
                .collect(),
        )
        .unwrap()
    }

    fn surface_with_curve() -> (
        LefschetzData,
        LefschetzData,
        BTreeMap<usize, RationalMatrix>,
    ) {
        // a curve of genus 1 on a surface with b_1 = 2, b_3 = 2
        let x = ld(&[1, 2, 1], &[(2, &[&[4]])]);
        let y = ld(&[1, 2, 3, 2, 1], &[(3, &[&[1, 0], &[0, 1]])]);
        let i = BTreeMap::from([(1, RationalMatrix::from_int_rows(&[&[1, 0], &[0, 1]]))]);
        (x, y, i)
    }

    #[test]
    fn certified_when_hypotheses_hold() {
        let (x, y, i) = surface_with_curve();
        let r = hard_lefschetz_from_links(&x, &y, &i, true, 2).unwrap();
        assert_eq!(r.verdict, HlVerdict::Certified);
        assert_eq!(r.standard_steps.len(), 1);
    }

    #[test]
    fn no_conclusion_without_vanishing() {
        let (x, y, i) = surface_with_curve();
        let r = hard_lefschetz_from_links(&x, &y, &i, false, 2).unwrap();
        assert!(matches!(r.verdict, HlVerdict::NoConclusion(_)));
    }

    #[test]
    fn no_conclusion_when_restriction_is_not_onto() {
        let (x, y, _) = surface_with_curve();
        let i = BTreeMap::from([(1, RationalMatrix::from_int_rows(&[&[1, 0], &[0, 0]]))]);
        let r = hard_lefschetz_from_links(&x, &y, &i, true, 2).unwrap();
        assert!(matches!(r.verdict, HlVerdict::NoConclusion(_)));
    }

    #[test]
    fn no_conclusion_without_duality() {
        let (x, _, i) = surface_with_curve();
        let y = ld(&[1, 2, 3, 1, 1], &[]);
        let r = hard_lefschetz_from_links(&x, &y, &i, true, 2).unwrap();
        assert!(matches!(r.verdict, HlVerdict::NoConclusion(_)));
    }

    #[test]
    fn inconsistent_lambda_is_flagged() {
        let (x, _, i) = surface_with_curve();
        let y = ld(&[1, 2, 3, 2, 1], &[(3, &[&[1, 1], &[1, 1]])]);
        let r = hard_lefschetz_from_links(&x, &y, &i, true, 2).unwrap();
        assert!(matches!(r.verdict, HlVerdict::Inconsistent(_)));
    }

    #[test]
    fn projective_plane_with_a_line() {
        let x = ld(&[1, 0, 1], &[(2, &[&[1]])]);
        let y = ld(&[1, 0, 1, 0, 1], &[(2, &[&[1]]), (4, &[&[1]])]);
        let r = hard_lefschetz_from_links(&x, &y, &BTreeMap::new(), true, 2).unwrap();
        assert_eq!(r.verdict, HlVerdict::Certified);
    }
}
