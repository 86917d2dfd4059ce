use std::collections::HashMap;

use super::allowable::simplex_is_allowable;
use crate::complex::{validate, Chain, Perversity, SimplicialComplex, StratifiedComplex};
use crate::error::{Error, Result};
use crate::exactla::{
    homology_dims, kernel_with_free, q, ChainComplexMatrices, GradedDims, HomologyBasis,
    RationalMatrix, SparseVector,
};

/// The intersection chain complex `IC^p_*` of a stratified complex,
/// optionally relative to a subcomplex.
///
/// In degree `d` the group is the space of chains on allowable, non-relative
/// `d`-simplices whose boundary (modulo the relative subcomplex) is again
/// allowable. Its basis is the pivot-convention kernel basis, so each basis
/// vector has a 1 at its own free simplex and 0 at the others; a chain's
/// coordinates are its entries at the free simplices.
#[derive(Clone, Debug)]
pub struct IntersectionChains {
    perversity: Perversity,
    degrees: Vec<Degree>,
    matrices: ChainComplexMatrices,
}

#[derive(Clone, Debug)]
struct Degree {
    basis: Vec<SparseVector>,
    free: Vec<usize>,
    relative: Vec<bool>,
}

/// Builds `IC^p_*(x)`, or `IC^p_*(x, rel)` when `rel` is given (matched to
/// `x` by vertex names).
pub fn intersection_chain_complex(
    x: &StratifiedComplex,
    p: &Perversity,
    rel: Option<&SimplicialComplex>,
) -> Result<IntersectionChains> {
    let report = validate(x);
    if let Some(v) = report.violations.first() {
        return Err(Error::InvalidComplex(v.to_string()));
    }
    let k = x.complex();
    let n = k.dim().ok_or(Error::EmptyComplex)?;

    let mut relative: Vec<Vec<bool>> = (0..=n).map(|d| vec![false; k.count(d)]).collect();
    if let Some(r) = rel {
        for s in r.all_simplices() {
            let (t, _) = k.translate(r, s).ok_or_else(|| {
                Error::InvalidComplex(format!(
                    "relative subcomplex simplex {} is not in the complex",
                    r.display_simplex(s)
                ))
            })?;
            relative[t.dim()][k.index_of(&t).expect("translated")] = true;
        }
    }
    let mut allowable: Vec<Vec<bool>> = Vec::with_capacity(n + 1);
    for d in 0..=n {
        let row = k
            .simplices(d)
            .iter()
            .map(|s| simplex_is_allowable(x, s, p))
            .collect::<Result<Vec<bool>>>()?;
        allowable.push(row);
    }

    let mut degrees = Vec::with_capacity(n + 1);
    for d in 0..=n {
        let cols: Vec<usize> = (0..k.count(d))
            .filter(|&i| allowable[d][i] && !relative[d][i])
            .collect();
        let mut row_of: HashMap<usize, usize> = HashMap::new();
        let mut triplets = Vec::new();
        if d > 0 {
            for (j, &i) in cols.iter().enumerate() {
                for (f, sign) in k.simplices(d)[i].boundary() {
                    let fi = k.index_of(&f).expect("face-closed");
                    if allowable[d - 1][fi] || relative[d - 1][fi] {
                        continue;
                    }
                    let next = row_of.len();
                    let r = *row_of.entry(fi).or_insert(next);
                    triplets.push((r, j, q(sign)));
                }
            }
        }
        let obstruction = RationalMatrix::from_triplets(row_of.len(), cols.len(), triplets)?;
        let (free_local, kernel) = kernel_with_free(&obstruction);
        let basis = kernel
            .into_iter()
            .map(|v| v.into_iter().map(|(j, c)| (cols[j], c)).collect())
            .collect();
        let free = free_local.into_iter().map(|j| cols[j]).collect();
        degrees.push(Degree {
            basis,
            free,
            relative: relative[d].clone(),
        });
    }

    let mut boundaries = vec![RationalMatrix::zeros(0, degrees[0].basis.len())];
    for d in 1..=n {
        let bd = k.boundary_matrix(d);
        let columns = degrees[d]
            .basis
            .iter()
            .map(|v| {
                let image = bd.mul_vec(v);
                let below = &degrees[d - 1];
                let reduced: SparseVector = image
                    .into_iter()
                    .filter(|(i, _)| !below.relative[*i])
                    .collect();
                let coords = read_free(&below.free, &reduced);
                debug_assert_eq!(expand(&below.basis, &coords), reduced);
                coords
            })
            .collect();
        boundaries.push(RationalMatrix::from_columns(
            degrees[d - 1].basis.len(),
            columns,
        )?);
    }
    Ok(IntersectionChains {
        perversity: p.clone(),
        degrees,
        matrices: ChainComplexMatrices::new(boundaries)?,
    })
}

fn read_free(free: &[usize], v: &SparseVector) -> SparseVector {
    free.iter()
        .enumerate()
        .filter_map(|(i, f)| v.get(f).map(|c| (i, c.clone())))
        .collect()
}

fn expand(basis: &[SparseVector], coords: &SparseVector) -> SparseVector {
    let mut out = SparseVector::new();
    for (&i, c) in coords {
        crate::exactla::axpy(&mut out, c, &basis[i]);
    }
    out
}

impl IntersectionChains {
    pub fn perversity(&self) -> &Perversity {
        &self.perversity
    }

    pub fn matrices(&self) -> &ChainComplexMatrices {
        &self.matrices
    }

    /// Top degree + 1.
    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn rank_in(&self, d: usize) -> usize {
        self.degrees.get(d).map_or(0, |g| g.basis.len())
    }

    /// Basis of `IC_d` in simplicial coordinates.
    pub fn basis(&self, d: usize) -> &[SparseVector] {
        self.degrees.get(d).map_or(&[], |g| g.basis.as_slice())
    }

    pub fn betti(&self) -> GradedDims {
        homology_dims(&self.matrices)
    }

    /// Expresses a simplicial `d`-chain in the basis of `IC_d`, after
    /// discarding its relative part. `None` if it is not an intersection
    /// chain.
    pub fn coordinates(&self, d: usize, v: &SparseVector) -> Option<SparseVector> {
        let g = self.degrees.get(d)?;
        let reduced: SparseVector = v
            .iter()
            .filter(|(i, _)| !g.relative.get(**i).copied().unwrap_or(false))
            .map(|(i, c)| (*i, c.clone()))
            .collect();
        let coords = read_free(&g.free, &reduced);
        (expand(&g.basis, &coords) == reduced).then_some(coords)
    }

    /// Simplicial coordinates of an `IC_d` coordinate vector.
    pub fn expand(&self, d: usize, coords: &SparseVector) -> SparseVector {
        expand(self.basis(d), coords)
    }

    /// Homology basis of `IC` in degree `d`, in `IC` coordinates.
    pub fn homology_basis(&self, d: usize) -> HomologyBasis {
        self.matrices.homology_basis(d)
    }

    /// Simplicial chains representing the homology basis in degree `d`.
    pub fn basis_cycles(&self, k: &SimplicialComplex, d: usize) -> Vec<Chain> {
        self.homology_basis(d)
            .representatives()
            .iter()
            .map(|z| Chain::from_vector(k, d, &self.expand(d, z)))
            .collect()
    }

    /// Coordinates of the homology class of an intersection cycle in the
    /// degree-`d` homology basis. `None` if `v` is not an intersection
    /// cycle.
    pub fn class_of(&self, d: usize, v: &SparseVector) -> Option<Vec<crate::exactla::Rational>> {
        let coords = self.coordinates(d, v)?;
        self.homology_basis(d)
            .coordinates(&[coords])
            .pop()
            .flatten()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::cone;
    use crate::corpus;

    #[test]
    fn unstratified_complex_is_the_simplicial_complex() {
        let t = StratifiedComplex::unstratified(corpus::torus());
        let ic = intersection_chain_complex(&t, &Perversity::Middle, None).unwrap();
        assert_eq!(ic.betti(), GradedDims(vec![1, 2, 1]));
        for d in 0..3 {
            assert_eq!(ic.rank_in(d), t.complex().count(d));
        }
    }

    #[test]
    fn relative_cone_chain_groups_are_quotients() {
        let t = StratifiedComplex::unstratified(corpus::torus());
        let c = cone(&t, "apex").unwrap();
        let ic = intersection_chain_complex(&c, &Perversity::Top, Some(t.complex())).unwrap();
        // apex vertex and apex edges are never allowable at codimension 3;
        // degree 2 is the cone on the 1-cycles of the torus, 21 - 6 = 15
        assert_eq!(ic.rank_in(0), 0);
        assert_eq!(ic.rank_in(1), 0);
        assert_eq!(ic.rank_in(2), 15);
        assert_eq!(ic.rank_in(3), 14);
        assert_eq!(ic.betti(), GradedDims(vec![0, 0, 2, 1]));
    }

    #[test]
    fn suspended_torus_middle_drops_apex_edges() {
        let x = corpus::suspended_torus();
        let ic = intersection_chain_complex(&x, &Perversity::Middle, None).unwrap();
        let k = x.complex();
        for v in ic.basis(1) {
            for i in v.keys() {
                let s = &k.simplices(1)[*i];
                let names = k.simplex_names(s);
                assert!(!names.iter().any(|n| n == "N" || n == "S"), "{names:?}");
            }
        }
    }

    #[test]
    fn coordinates_round_trip() {
        let x = corpus::suspended_torus();
        let ic = intersection_chain_complex(&x, &Perversity::Log, None).unwrap();
        for d in 0..4 {
            for (i, b) in ic.basis(d).iter().enumerate() {
                assert_eq!(ic.coordinates(d, b), Some(SparseVector::from([(i, q(1))])));
            }
        }
    }
}
