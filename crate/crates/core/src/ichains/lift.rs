use super::allowable::is_intersection_chain;
use super::chains::{intersection_chain_complex, IntersectionChains};
use crate::complex::{Chain, Perversity, StratifiedComplex};
use crate::error::{Error, Result};
use crate::exactla::{kernel_basis, solve, RationalMatrix, SparseVector};

/// A representative of a class for the smaller perversity together with the
/// evidence that it is homologous to the input: `z - cycle = ∂ witness`,
/// where `witness` is an intersection chain for the larger perversity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lift {
    pub cycle: Chain,
    pub witness: Chain,
}

/// Lifts a logarithmic-perversity cycle of `y` to a middle-perversity one,
/// if its class is in the image of `IH^m(Y) → IH^p(Y)`.
pub fn lift_class(y: &StratifiedComplex, z: &Chain) -> Result<Option<Lift>> {
    lift_class_between(y, z, &Perversity::Log, &Perversity::Middle)
}

/// Decides whether the `from`-class of the cycle `z` comes from
/// `IH^to(Y)`, and returns a `to`-allowable representative if so.
///
/// One linear system `[Z^to_d | ∂ IC^from_{d+1}] (a, b) = z` settles it:
/// `Z^to_d` spans the `to` intersection cycles, the second block the
/// `from` boundaries.
pub fn lift_class_between(
    y: &StratifiedComplex,
    z: &Chain,
    from: &Perversity,
    to: &Perversity,
) -> Result<Option<Lift>> {
    let ic_from = intersection_chain_complex(y, from, None)?;
    let ic_to = intersection_chain_complex(y, to, None)?;
    lift_with(y, z, from, to, &ic_from, &ic_to)
}

pub(crate) fn lift_with(
    y: &StratifiedComplex,
    z: &Chain,
    from: &Perversity,
    to: &Perversity,
    ic_from: &IntersectionChains,
    ic_to: &IntersectionChains,
) -> Result<Option<Lift>> {
    let k = y.complex();
    let d = z.degree();
    if !z.boundary().is_zero() {
        return Err(Error::Malformed("the chain to lift is not a cycle".into()));
    }
    if !is_intersection_chain(z, from, y)? {
        return Err(Error::Malformed(format!(
            "the chain to lift is not {from}-allowable"
        )));
    }
    if is_intersection_chain(z, to, y)? {
        return Ok(Some(Lift {
            cycle: z.clone(),
            witness: Chain::zero(d + 1),
        }));
    }
    let target = z.to_vector(k)?;

    let cycles: Vec<SparseVector> = kernel_basis(&ic_to.matrices().boundary(d))
        .iter()
        .map(|c| ic_to.expand(d, c))
        .collect();
    let fillers: Vec<SparseVector> = ic_from.basis(d + 1).to_vec();
    let bd = k.boundary_matrix(d + 1);
    let mut columns = cycles.clone();
    columns.extend(fillers.iter().map(|f| bd.mul_vec(f)));
    let system = RationalMatrix::from_columns(k.count(d), columns)?;
    let Some(sol) = solve(&system, &target) else {
        return Ok(None);
    };

    let mut cycle = SparseVector::new();
    let mut witness = SparseVector::new();
    for (i, c) in &sol {
        if *i < cycles.len() {
            crate::exactla::axpy(&mut cycle, c, &cycles[*i]);
        } else {
            crate::exactla::axpy(&mut witness, c, &fillers[*i - cycles.len()]);
        }
    }
    Ok(Some(Lift {
        cycle: Chain::from_vector(k, d, &cycle),
        witness: Chain::from_vector(k, d + 1, &witness),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::ichains::fundamental_class;

    fn suspended_cycle(sub: &StratifiedComplex, sup: &StratifiedComplex) -> Chain {
        fundamental_class(sub)
            .unwrap()
            .transfer(sub.complex(), sup.complex())
            .unwrap()
    }

    #[test]
    fn equator_cycle_lifts() {
        let y = corpus::suspended_sphere();
        let z = suspended_cycle(&corpus::suspended_equator(), &y);
        let lift = lift_class(&y, &z)
            .unwrap()
            .expect("the equator bounds in the link");
        let n = y.complex().vertex_id("N").unwrap();
        let s = y.complex().vertex_id("S").unwrap();
        assert!(!lift.cycle.touches_vertex(n) && !lift.cycle.touches_vertex(s));
        assert!(lift.cycle.boundary().is_zero());
        assert_eq!(z.sub(&lift.cycle).unwrap(), lift.witness.boundary());
        assert!(is_intersection_chain(&lift.witness, &Perversity::Log, &y).unwrap());
    }

    #[test]
    fn factor_circle_cycle_does_not_lift() {
        let y = corpus::suspended_torus();
        let z = suspended_cycle(&corpus::suspended_factor_circle(), &y);
        assert!(lift_class(&y, &z).unwrap().is_none());
    }

    #[test]
    fn allowable_cycle_lifts_to_itself() {
        let y = corpus::suspended_torus();
        let z = fundamental_class(&y).unwrap();
        let lift = lift_class(&y, &z).unwrap().unwrap();
        assert_eq!(lift.cycle, z);
        assert!(lift.witness.is_zero());
    }
}
