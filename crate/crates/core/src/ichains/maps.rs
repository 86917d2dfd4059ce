use super::allowable::first_violation;
use super::chains::{intersection_chain_complex, IntersectionChains};
use crate::complex::{link, Chain, Perversity, StratifiedComplex};
use crate::error::{Error, Result};
use crate::exactla::{rank, RationalMatrix};

/// Matrix of `IH^{p_src}_d(X) → IH^{p_tgt}_d(Y)` induced by the inclusion of
/// `xsub` into `ysup` (matched by vertex names), in the pivot-convention
/// bases.
///
/// Every basis chain of `IC^{p_src}` in degrees `d` and `d + 1` must be an
/// intersection chain of `Y` for `p_tgt`; the first one that is not is
/// reported with the offending simplex.
pub fn induced_ih_map(
    xsub: &StratifiedComplex,
    ysup: &StratifiedComplex,
    p_src: &Perversity,
    p_tgt: &Perversity,
    d: usize,
) -> Result<RationalMatrix> {
    let icx = intersection_chain_complex(xsub, p_src, None)?;
    let icy = intersection_chain_complex(ysup, p_tgt, None)?;
    induced_between(xsub, &icx, ysup, &icy, d)
}

pub(crate) fn induced_between(
    xsub: &StratifiedComplex,
    icx: &IntersectionChains,
    ysup: &StratifiedComplex,
    icy: &IntersectionChains,
    d: usize,
) -> Result<RationalMatrix> {
    let (kx, ky) = (xsub.complex(), ysup.complex());
    for deg in [d, d + 1] {
        for v in icx.basis(deg) {
            let moved = Chain::from_vector(kx, deg, v).transfer(kx, ky)?;
            let w = moved.to_vector(ky)?;
            if icy.coordinates(deg, &w).is_none() {
                let p = icy.perversity();
                let bad = match first_violation(&moved, p, ysup)? {
                    Some(s) => s,
                    None => first_violation(&moved.boundary(), p, ysup)?
                        .expect("a non-intersection chain has a non-allowable simplex"),
                };
                return Err(Error::TransferFails {
                    simplex: ky.display_simplex(&bad),
                    reason: format!("not {p}-allowable in the target"),
                });
            }
        }
    }
    let hx = icx.homology_basis(d);
    let hy_dim = icy.homology_basis(d).dim();
    let mut out = RationalMatrix::zeros(hy_dim, hx.dim());
    for (j, z) in hx.representatives().iter().enumerate() {
        let moved = Chain::from_vector(kx, d, &icx.expand(d, z)).transfer(kx, ky)?;
        let coords = icy
            .class_of(d, &moved.to_vector(ky)?)
            .ok_or(Error::NotAChainMap(d))?;
        for (i, c) in coords.into_iter().enumerate() {
            out.set(i, j, c);
        }
    }
    Ok(out)
}

/// The map on intersection homology of links induced by `ℓ_X ⊂ ℓ_Y` at a
/// singular vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkMap {
    pub degree: usize,
    pub matrix: RationalMatrix,
    pub rank: usize,
}

impl LinkMap {
    pub fn is_zero(&self) -> bool {
        self.rank == 0
    }
}

/// Induced map `IH^p_d(ℓ_X) → IH^p_d(ℓ_Y)` of the links of `vertex` in
/// `x ⊂ y`. The extension criterion uses `d` equal to the codimension of
/// the stratum in `x`.
pub fn link_map(
    x: &StratifiedComplex,
    y: &StratifiedComplex,
    vertex: &str,
    d: usize,
    p: &Perversity,
) -> Result<LinkMap> {
    for (space, which) in [(x, "source"), (y, "target")] {
        let v = space.complex().require_vertex(vertex)?;
        let singular = space
            .stratification()
            .singular_set()
            .is_some_and(|m| m.vertices().contains(&v));
        if !singular {
            return Err(Error::Precondition(format!(
                "vertex '{vertex}' is not singular in the {which}"
            )));
        }
    }
    let lx = link(x, vertex)?;
    let ly = link(y, vertex)?;
    let matrix = induced_ih_map(&lx, &ly, p, p, d)?;
    Ok(LinkMap {
        degree: d,
        rank: rank(&matrix),
        matrix,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn identity_on_the_same_space() {
        let x = corpus::suspended_torus();
        for d in 0..4 {
            let m = induced_ih_map(&x, &x, &Perversity::Middle, &Perversity::Middle, d).unwrap();
            assert_eq!(m, RationalMatrix::identity(m.rows()));
        }
    }

    #[test]
    fn factor_circle_link_map_is_nonzero() {
        let lm = link_map(
            &corpus::suspended_factor_circle(),
            &corpus::suspended_torus(),
            "N",
            1,
            &Perversity::Middle,
        )
        .unwrap();
        assert_eq!(lm.rank, 1);
    }

    #[test]
    fn equator_link_map_is_zero() {
        let lm = link_map(
            &corpus::suspended_equator(),
            &corpus::suspended_sphere(),
            "N",
            1,
            &Perversity::Middle,
        )
        .unwrap();
        assert!(lm.is_zero());
        assert_eq!((lm.matrix.rows(), lm.matrix.cols()), (0, 1));
    }
}
