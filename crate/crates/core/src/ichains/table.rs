use super::chains::intersection_chain_complex;
use crate::complex::{cone, Chain, Perversity, SimplicialComplex, StratifiedComplex};
use crate::conecalc::cone_formula;
use crate::error::{Error, Result};
use crate::exactla::GradedDims;

/// Intersection homology Betti numbers with a basis of cycles per degree.
#[derive(Clone, Debug)]
pub struct IhTable {
    pub perversity: Perversity,
    /// `(codim, value)` for each codimension in the filtration.
    pub perversity_values: Vec<(usize, i64)>,
    pub dims: GradedDims,
    pub basis_cycles: Vec<Vec<Chain>>,
}

/// `IH^p_*(x)` or `IH^p_*(x, rel)`.
pub fn ih_betti(
    x: &StratifiedComplex,
    p: &Perversity,
    rel: Option<&SimplicialComplex>,
) -> Result<IhTable> {
    let ic = intersection_chain_complex(x, p, rel)?;
    let dims = ic.betti();
    let basis_cycles = (0..ic.len())
        .map(|d| ic.basis_cycles(x.complex(), d))
        .collect();
    Ok(IhTable {
        perversity: p.clone(),
        perversity_values: p.table(&x.stratification().codims())?,
        dims,
        basis_cycles,
    })
}

/// Both sides of the cone formula for one link.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeFormulaReport {
    pub link_dims: GradedDims,
    pub cone_dim: usize,
    /// Relative intersection homology of `(cone L, L)` from the chain engine.
    pub engine: GradedDims,
    /// `IH_{i-1}(L)` above half the cone dimension, zero at or below.
    pub formula: GradedDims,
    /// `(degree, engine, formula)` where the sides differ.
    pub diff: Vec<(usize, usize, usize)>,
}

impl ConeFormulaReport {
    pub fn holds(&self) -> bool {
        self.diff.is_empty()
    }
}

/// Checks the cone formula for the compact pseudomanifold `l`.
///
/// Closed-support intersection homology of the open cone is computed as the
/// relative group of `(cone l, l)`. The cut-off "zero at or below half the
/// cone dimension" is the upper-middle convention at the odd-dimensional
/// apex, so the computation uses [`Perversity::UpperMiddle`], which agrees
/// with the middle perversity at every even codimension.
pub fn verify_cone_formula(l: &StratifiedComplex) -> Result<ConeFormulaReport> {
    let n = l.dim().ok_or(Error::EmptyComplex)?;
    let mut apex = String::from("*");
    while l.complex().vertex_id(&apex).is_some() {
        apex.push('\'');
    }
    let p = Perversity::UpperMiddle;
    let c = cone(l, &apex)?;
    let engine = intersection_chain_complex(&c, &p, Some(l.complex()))?.betti();
    let link_dims = intersection_chain_complex(l, &p, None)?.betti();
    let formula = cone_formula(&link_dims, n + 1);
    let diff = (0..=n + 1)
        .filter_map(|i| {
            let (e, f) = (engine.get(i as isize), formula.get(i as isize));
            (e != f).then_some((i, e, f))
        })
        .collect();
    Ok(ConeFormulaReport {
        link_dims,
        cone_dim: n + 1,
        engine,
        formula,
        diff,
    })
}
