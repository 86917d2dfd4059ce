use super::chains::{intersection_chain_complex, IntersectionChains};
use super::fundamental::fundamental_class;
use super::lift::lift_with;
use crate::complex::{Chain, Perversity, StratifiedComplex};
use crate::error::{Error, Result};
use crate::exactla::Rational;

/// A descending sequence `X^0 ⊃ X^1 ⊃ ... ⊃ X^k` of stratified complexes,
/// matched by vertex names, of strictly decreasing dimension.
#[derive(Clone, Debug)]
pub struct FlagInput {
    complexes: Vec<StratifiedComplex>,
}

impl FlagInput {
    /// Checks nesting, decreasing dimension, and that no `X^i` lies inside
    /// the singular set of `X^{i-1}`.
    pub fn new(complexes: Vec<StratifiedComplex>) -> Result<Self> {
        if complexes.is_empty() {
            return Err(Error::EmptyComplex);
        }
        for i in 1..complexes.len() {
            let (outer, inner) = (&complexes[i - 1], &complexes[i]);
            if !outer.complex().contains_complex(inner.complex()) {
                return Err(Error::Precondition(format!(
                    "flag member {i} is not a subcomplex of member {}",
                    i - 1
                )));
            }
            if inner.dim() >= outer.dim() {
                return Err(Error::Precondition(format!(
                    "flag member {i} does not have smaller dimension than member {}",
                    i - 1
                )));
            }
            let strata = outer.stratification();
            let escapes = inner.complex().maximal_simplices().iter().any(|s| {
                let (t, _) = outer
                    .complex()
                    .translate(inner.complex(), s)
                    .expect("nested");
                !strata.is_singular(&t)
            });
            if !escapes {
                return Err(Error::Precondition(format!(
                    "flag member {i} lies inside the singular set of member {}",
                    i - 1
                )));
            }
        }
        Ok(FlagInput { complexes })
    }

    pub fn complexes(&self) -> &[StratifiedComplex] {
        &self.complexes
    }

    pub fn len(&self) -> usize {
        self.complexes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.complexes.is_empty()
    }
}

/// The class of `X^i` in `IH^m(X^0)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagClass {
    pub step: usize,
    pub degree: usize,
    /// Coordinates in the pivot-convention basis of `IH^m_degree(X^0)`.
    pub coordinates: Vec<Rational>,
    /// The lifted middle-perversity cycle in `X^0`.
    pub representative: Chain,
}

/// For each `X^i`: its fundamental class, pushed into `X^{i-1}` and lifted
/// from the logarithmic to the middle perversity there, step by step down
/// to `X^0`.
///
/// A lift that fails while passing from `X^j` into `X^{j-1}` is reported
/// as [`Error::LiftFailed`] with `step = j`; it means the link obstruction
/// does not vanish.
pub fn flag_classes(f: &FlagInput) -> Result<Vec<FlagClass>> {
    let xs = f.complexes();
    let ics = xs
        .iter()
        .map(|x| {
            Ok((
                intersection_chain_complex(x, &Perversity::Log, None)?,
                intersection_chain_complex(x, &Perversity::Middle, None)?,
            ))
        })
        .collect::<Result<Vec<(IntersectionChains, IntersectionChains)>>>()?;

    let mut out = Vec::with_capacity(xs.len());
    for i in 0..xs.len() {
        let mut z = fundamental_class(&xs[i])?;
        let mut level = i;
        loop {
            let step = if level == i { i } else { level + 1 };
            let (log, middle) = &ics[level];
            let lifted = lift_with(
                &xs[level],
                &z,
                &Perversity::Log,
                &Perversity::Middle,
                log,
                middle,
            )
            .map_err(|e| match e {
                Error::Malformed(m) => {
                    Error::Precondition(format!("class of flag member {i} in member {level}: {m}"))
                }
                other => other,
            })?;
            z = lifted.ok_or(Error::LiftFailed { step })?.cycle;
            if level == 0 {
                break;
            }
            z = z.transfer(xs[level].complex(), xs[level - 1].complex())?;
            level -= 1;
        }
        let degree = z.degree();
        let coordinates = ics[0]
            .1
            .class_of(degree, &z.to_vector(xs[0].complex())?)
            .ok_or(Error::NotAChainMap(degree))?;
        out.push(FlagClass {
            step: i,
            degree,
            coordinates,
            representative: z,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn single_member_flag_is_the_fundamental_class() {
        let f = FlagInput::new(vec![corpus::suspended_torus()]).unwrap();
        let classes = flag_classes(&f).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].degree, 3);
        assert_eq!(classes[0].coordinates.len(), 1);
    }

    #[test]
    fn sphere_flag_degrees() {
        let f = FlagInput::new(corpus::sphere_flag()).unwrap();
        let classes = flag_classes(&f).unwrap();
        let degrees: Vec<usize> = classes.iter().map(|c| c.degree).collect();
        assert_eq!(degrees, vec![2, 1, 0]);
        // the equator bounds on the sphere; the point generates H_0
        assert!(classes[1].coordinates.is_empty());
        assert_eq!(classes[2].coordinates.len(), 1);
    }

    #[test]
    fn torus_flag_fails_at_step_one() {
        let f = FlagInput::new(corpus::torus_flag()).unwrap();
        assert!(matches!(
            flag_classes(&f),
            Err(Error::LiftFailed { step: 1 })
        ));
    }

    #[test]
    fn member_inside_singular_set_is_rejected() {
        let y = corpus::suspended_torus();
        let apex = crate::complex::SimplicialComplex::from_named::<&str>(&["N"], &[]).unwrap();
        let err = FlagInput::new(vec![y, StratifiedComplex::unstratified(apex)]).unwrap_err();
        assert!(matches!(err, Error::Precondition(_)));
    }
}
