use std::collections::BTreeSet;

use super::simplex::Simplex;
use super::simplicial::SimplicialComplex;
use crate::error::{Error, Result};

/// One closed member `Σ_j` of a filtration, with its declared codimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiltrationMember {
    codim: usize,
    simplices: BTreeSet<Simplex>,
    vertices: BTreeSet<usize>,
}

impl FiltrationMember {
    fn new(codim: usize, generators: impl IntoIterator<Item = Simplex>) -> Self {
        let mut simplices = BTreeSet::new();
        for g in generators {
            if !simplices.contains(&g) {
                simplices.extend(g.faces());
            }
        }
        let vertices = simplices
            .iter()
            .flat_map(|s| s.vertices().to_vec())
            .collect();
        FiltrationMember {
            codim,
            simplices,
            vertices,
        }
    }

    pub fn codim(&self) -> usize {
        self.codim
    }

    pub fn simplices(&self) -> &BTreeSet<Simplex> {
        &self.simplices
    }

    pub fn vertices(&self) -> &BTreeSet<usize> {
        &self.vertices
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.simplices.contains(s)
    }

    pub fn dim(&self) -> Option<usize> {
        self.simplices.iter().map(Simplex::dim).max()
    }

    /// Largest dimension of a face of `s` lying in this member.
    pub fn max_face_dim(&self, s: &Simplex) -> Option<usize> {
        let inside: Vec<usize> = s
            .vertices()
            .iter()
            .copied()
            .filter(|v| self.vertices.contains(v))
            .collect();
        if inside.is_empty() {
            return None;
        }
        let span = Simplex::from_sorted(inside);
        if self.simplices.contains(&span) {
            return Some(span.dim());
        }
        span.faces()
            .into_iter()
            .filter(|f| self.simplices.contains(f))
            .map(|f| f.dim())
            .max()
    }

    /// Maximal simplices of the member.
    pub fn maximal_simplices(&self) -> Vec<Simplex> {
        self.simplices
            .iter()
            .filter(|s| {
                !self
                    .vertices
                    .iter()
                    .any(|&v| s.with(v).is_some_and(|t| self.simplices.contains(&t)))
            })
            .cloned()
            .collect()
    }
}

/// A descending filtration `Σ_0 ⊇ Σ_1 ⊇ ...` by closed subcomplexes.
///
/// `Σ_0` is the singular set; an empty filtration means no singularities.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Stratification {
    members: Vec<FiltrationMember>,
}

impl Stratification {
    pub fn members(&self) -> &[FiltrationMember] {
        &self.members
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn codims(&self) -> Vec<usize> {
        self.members.iter().map(FiltrationMember::codim).collect()
    }

    pub fn singular_set(&self) -> Option<&FiltrationMember> {
        self.members.first()
    }

    pub fn is_singular(&self, s: &Simplex) -> bool {
        self.singular_set().is_some_and(|m| m.contains(s))
    }
}

/// A simplicial complex together with its filtration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratifiedComplex {
    complex: SimplicialComplex,
    strata: Stratification,
}

impl StratifiedComplex {
    /// Attaches a filtration given as `(codim, generating simplices)` pairs,
    /// deepest member last. Generators are closed under faces.
    ///
    /// Checks that every generator is in the complex, codimensions are
    /// positive and strictly increasing, members are nested, and
    /// `dim Σ_j <= dim X - c_j`. The codimension-two condition is left to
    /// [`validate`](super::validate), which reports it.
    pub fn new(complex: SimplicialComplex, filtration: Vec<(usize, Vec<Simplex>)>) -> Result<Self> {
        let n = complex.dim().unwrap_or(0);
        let mut members = Vec::with_capacity(filtration.len());
        for (j, (codim, generators)) in filtration.into_iter().enumerate() {
            if codim == 0 {
                return Err(Error::InvalidComplex(format!(
                    "filtration member {j} has codimension 0"
                )));
            }
            for g in &generators {
                if !complex.contains(g) {
                    return Err(Error::MissingSimplex(complex.display_simplex(g)));
                }
            }
            let member = FiltrationMember::new(codim, generators);
            if let Some(prev) = members.last() {
                let prev: &FiltrationMember = prev;
                if codim <= prev.codim {
                    return Err(Error::InvalidComplex(format!(
                        "codimensions must increase strictly, got {} then {codim}",
                        prev.codim
                    )));
                }
                if let Some(s) = member.simplices.iter().find(|s| !prev.contains(s)) {
                    return Err(Error::InvalidComplex(format!(
                        "filtration member {j} is not inside its predecessor ({} missing)",
                        complex.display_simplex(s)
                    )));
                }
            }
            if let Some(d) = member.dim() {
                if d + codim > n {
                    return Err(Error::InvalidComplex(format!(
                        "filtration member {j} has dimension {d}, too large for codimension {codim} in a {n}-complex"
                    )));
                }
            }
            members.push(member);
        }
        Ok(StratifiedComplex {
            complex,
            strata: Stratification { members },
        })
    }

    /// A complex with the empty filtration.
    pub fn unstratified(complex: SimplicialComplex) -> Self {
        StratifiedComplex {
            complex,
            strata: Stratification::default(),
        }
    }

    /// Filtration members given as lists of vertex-name lists.
    pub fn from_named<S: AsRef<str>>(
        complex: SimplicialComplex,
        filtration: &[(usize, Vec<Vec<S>>)],
    ) -> Result<Self> {
        let mut resolved = Vec::with_capacity(filtration.len());
        for (codim, simplices) in filtration {
            let gens = simplices
                .iter()
                .map(|s| complex.simplex_from_names(s).map(|(t, _)| t))
                .collect::<Result<Vec<_>>>()?;
            resolved.push((*codim, gens));
        }
        Self::new(complex, resolved)
    }

    pub(crate) fn from_parts(
        names: Vec<String>,
        simplices: BTreeSet<Simplex>,
        filtration: Vec<(usize, Vec<Simplex>)>,
    ) -> Result<Self> {
        let complex = SimplicialComplex::with_names(names, simplices)?;
        Self::new(complex, filtration)
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn stratification(&self) -> &Stratification {
        &self.strata
    }

    pub fn members(&self) -> &[FiltrationMember] {
        self.strata.members()
    }

    pub fn dim(&self) -> Option<usize> {
        self.complex.dim()
    }

    /// Vertices in the singular set, by name.
    pub fn singular_vertices(&self) -> Vec<&str> {
        self.strata
            .singular_set()
            .map(|m| {
                m.vertices()
                    .iter()
                    .map(|&v| self.complex.vertex_name(v))
                    .collect()
            })
            .unwrap_or_default()
    }

    /// Codimension of the deepest member containing vertex `v`.
    pub fn vertex_codim(&self, v: usize) -> Option<usize> {
        self.members()
            .iter()
            .rev()
            .find(|m| m.vertices().contains(&v))
            .map(FiltrationMember::codim)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_triangles() -> SimplicialComplex {
        SimplicialComplex::from_named(
            &["a", "b", "c", "d", "e"],
            &[vec!["a", "b", "c"], vec!["c", "d", "e"]],
        )
        .unwrap()
    }

    #[test]
    fn member_face_dimensions() {
        let x = StratifiedComplex::from_named(two_triangles(), &[(2, vec![vec!["c"]])]).unwrap();
        let m = &x.members()[0];
        let (t, _) = x.complex().simplex_from_names(&["a", "b", "c"]).unwrap();
        let (e, _) = x.complex().simplex_from_names(&["a", "b"]).unwrap();
        assert_eq!(m.max_face_dim(&t), Some(0));
        assert_eq!(m.max_face_dim(&e), None);
    }

    #[test]
    fn nesting_and_order_are_enforced() {
        let err = StratifiedComplex::from_named(
            two_triangles(),
            &[(2, vec![vec!["c"]]), (2, vec![vec!["c"]])],
        )
        .unwrap_err();
        assert!(matches!(err, Error::InvalidComplex(_)));
        let err = StratifiedComplex::from_named(two_triangles(), &[(2, vec![vec!["a", "b"]])])
            .unwrap_err();
        assert!(matches!(err, Error::InvalidComplex(_)));
    }

    #[test]
    fn non_full_member_face_dimension() {
        // the member holds two edges of a triangle but not the triangle
        let x = SimplicialComplex::from_named(&["a", "b", "c"], &[vec!["a", "b", "c"]]).unwrap();
        let member = FiltrationMember::new(
            1,
            [vec!["a", "b"], vec!["b", "c"]]
                .iter()
                .map(|s| x.simplex_from_names(s).unwrap().0),
        );
        let top = x.simplices(2)[0].clone();
        assert_eq!(member.max_face_dim(&top), Some(1));
        assert_eq!(member.maximal_simplices().len(), 2);
    }
}
