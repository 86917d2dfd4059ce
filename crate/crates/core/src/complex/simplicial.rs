use std::collections::{BTreeSet, HashMap};

use super::simplex::Simplex;
use crate::error::{Error, Result};
use crate::exactla::{q, ChainComplexMatrices, RationalMatrix};

/// A finite abstract simplicial complex with named vertices.
///
/// The vertex list fixes the vertex ids (position in the list), which in turn
/// fixes the canonical orientation of every simplex. Simplices of each
/// dimension are kept sorted, so indices into [`SimplicialComplex::simplices`]
/// are stable and used as chain coordinates.
#[derive(Clone, Debug)]
pub struct SimplicialComplex {
    names: Vec<String>,
    name_index: HashMap<String, usize>,
    skeleta: Vec<Vec<Simplex>>,
    lookup: HashMap<Simplex, usize>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.skeleta == other.skeleta
    }
}

impl Eq for SimplicialComplex {}

impl SimplicialComplex {
    /// Builds the smallest complex containing `simplices` (given as vertex
    /// ids into `names`). Every named vertex is a 0-simplex.
    pub fn new(names: Vec<String>, simplices: &[Vec<usize>]) -> Result<Self> {
        let mut name_index = HashMap::new();
        for (i, n) in names.iter().enumerate() {
            if name_index.insert(n.clone(), i).is_some() {
                return Err(Error::VertexExists(n.clone()));
            }
        }
        let mut all: BTreeSet<Simplex> = (0..names.len()).map(Simplex::vertex).collect();
        for s in simplices {
            if let Some(&bad) = s.iter().find(|&&v| v >= names.len()) {
                return Err(Error::UnknownVertex(format!("#{bad}")));
            }
            let (simplex, _) = Simplex::oriented(s.clone()).ok_or_else(|| {
                Error::InvalidSimplex(format!("{s:?} repeats a vertex or is empty"))
            })?;
            if all.contains(&simplex) {
                continue;
            }
            all.extend(simplex.faces());
        }
        Ok(Self::from_closed(names, name_index, all))
    }

    /// Builds from vertex names; simplices given as lists of names.
    pub fn from_named<S: AsRef<str>>(names: &[S], simplices: &[Vec<S>]) -> Result<Self> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        let index: HashMap<&str, usize> = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.as_str(), i))
            .collect();
        let ids = simplices
            .iter()
            .map(|s| {
                s.iter()
                    .map(|v| {
                        index
                            .get(v.as_ref())
                            .copied()
                            .ok_or_else(|| Error::UnknownVertex(v.as_ref().to_string()))
                    })
                    .collect::<Result<Vec<usize>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(names, &ids)
    }

    fn from_closed(
        names: Vec<String>,
        name_index: HashMap<String, usize>,
        all: BTreeSet<Simplex>,
    ) -> Self {
        let top = all.iter().map(Simplex::dim).max();
        let mut skeleta = vec![Vec::new(); top.map_or(0, |d| d + 1)];
        for s in all {
            skeleta[s.dim()].push(s);
        }
        for sk in &mut skeleta {
            sk.sort();
        }
        let lookup = skeleta
            .iter()
            .flat_map(|sk| sk.iter().enumerate().map(|(i, s)| (s.clone(), i)))
            .collect();
        SimplicialComplex {
            names,
            name_index,
            skeleta,
            lookup,
        }
    }

    pub fn empty() -> Self {
        Self::from_closed(Vec::new(), HashMap::new(), BTreeSet::new())
    }

    /// Maximal simplex dimension; `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.skeleta.len().checked_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.skeleta.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn num_vertices(&self) -> usize {
        self.names.len()
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn vertex_id(&self, name: &str) -> Option<usize> {
        self.name_index.get(name).copied()
    }

    pub fn require_vertex(&self, name: &str) -> Result<usize> {
        self.vertex_id(name)
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn simplices(&self, d: usize) -> &[Simplex] {
        self.skeleta.get(d).map_or(&[], Vec::as_slice)
    }

    pub fn all_simplices(&self) -> impl Iterator<Item = &Simplex> {
        self.skeleta.iter().flatten()
    }

    pub fn num_simplices(&self) -> usize {
        self.skeleta.iter().map(Vec::len).sum()
    }

    pub fn count(&self, d: usize) -> usize {
        self.simplices(d).len()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.lookup.contains_key(s)
    }

    /// Index of `s` among the simplices of its dimension.
    pub fn index_of(&self, s: &Simplex) -> Option<usize> {
        self.lookup.get(s).copied()
    }

    pub fn simplex_from_names<S: AsRef<str>>(&self, names: &[S]) -> Result<(Simplex, i64)> {
        let ids = names
            .iter()
            .map(|n| self.require_vertex(n.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        let (s, sign) = Simplex::oriented(ids).ok_or_else(|| {
            Error::InvalidSimplex(format!(
                "[{}] repeats a vertex or is empty",
                names
                    .iter()
                    .map(AsRef::as_ref)
                    .collect::<Vec<_>>()
                    .join(",")
            ))
        })?;
        if !self.contains(&s) {
            return Err(Error::MissingSimplex(self.display_simplex(&s)));
        }
        Ok((s, sign))
    }

    pub fn simplex_names(&self, s: &Simplex) -> Vec<String> {
        s.vertices()
            .iter()
            .map(|&v| self.names[v].clone())
            .collect()
    }

    pub fn display_simplex(&self, s: &Simplex) -> String {
        format!("[{}]", self.simplex_names(s).join(","))
    }

    /// Simplices not contained in any larger simplex, by dimension then order.
    pub fn maximal_simplices(&self) -> Vec<Simplex> {
        let mut covered: BTreeSet<&Simplex> = BTreeSet::new();
        let mut out = Vec::new();
        for d in (0..self.skeleta.len()).rev() {
            for s in &self.skeleta[d] {
                if !covered.contains(s) {
                    out.push(s.clone());
                }
            }
            if d > 0 {
                for s in &self.skeleta[d] {
                    for (f, _) in s.boundary() {
                        if let Some(idx) = self.index_of(&f) {
                            covered.insert(&self.skeleta[d - 1][idx]);
                        }
                    }
                }
            }
        }
        out.sort_by(|a, b| a.dim().cmp(&b.dim()).then(a.cmp(b)));
        out
    }

    /// Every maximal simplex has the top dimension.
    pub fn is_pure(&self) -> bool {
        match self.dim() {
            None => true,
            Some(n) => self.maximal_simplices().iter().all(|s| s.dim() == n),
        }
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.skeleta
            .iter()
            .enumerate()
            .map(|(d, sk)| {
                if d % 2 == 0 {
                    sk.len() as i64
                } else {
                    -(sk.len() as i64)
                }
            })
            .sum()
    }

    /// Top-dimensional simplices containing each codimension-one face.
    pub fn cofaces(&self, d: usize) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.count(d.wrapping_sub(1))];
        if d == 0 {
            return out;
        }
        for (j, s) in self.simplices(d).iter().enumerate() {
            for (f, _) in s.boundary() {
                out[self.index_of(&f).expect("face-closed")].push(j);
            }
        }
        out
    }

    /// Matrix of the simplicial boundary from degree `d` to `d - 1`.
    pub fn boundary_matrix(&self, d: usize) -> RationalMatrix {
        if d == 0 {
            return RationalMatrix::zeros(0, self.count(0));
        }
        let triplets = self.simplices(d).iter().enumerate().flat_map(|(j, s)| {
            s.boundary()
                .into_iter()
                .map(move |(f, sign)| (self.index_of(&f).expect("face-closed"), j, q(sign)))
        });
        RationalMatrix::from_triplets(self.count(d - 1), self.count(d), triplets)
            .expect("indices are in range")
    }

    pub fn chain_complex(&self) -> ChainComplexMatrices {
        let bds = (0..self.skeleta.len())
            .map(|d| self.boundary_matrix(d))
            .collect();
        ChainComplexMatrices::new(bds).expect("simplicial boundary squares to zero")
    }

    /// Translates a simplex of `other` into this complex by vertex names.
    pub fn translate(&self, other: &SimplicialComplex, s: &Simplex) -> Option<(Simplex, i64)> {
        let (t, sign) = s.relabel(|v| self.vertex_id(other.vertex_name(v)))?;
        self.contains(&t).then_some((t, sign))
    }

    /// Is every simplex of `other` (matched by vertex names) in this complex?
    pub fn contains_complex(&self, other: &SimplicialComplex) -> bool {
        other
            .all_simplices()
            .all(|s| self.translate(other, s).is_some())
    }

    pub(crate) fn with_names(names: Vec<String>, simplices: BTreeSet<Simplex>) -> Result<Self> {
        let mut name_index = HashMap::new();
        for (i, n) in names.iter().enumerate() {
            if name_index.insert(n.clone(), i).is_some() {
                return Err(Error::VertexExists(n.clone()));
            }
        }
        let mut all: BTreeSet<Simplex> = (0..names.len()).map(Simplex::vertex).collect();
        for s in simplices {
            all.extend(s.faces());
        }
        Ok(Self::from_closed(names, name_index, all))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::exactla::{homology_dims, GradedDims};

    #[test]
    fn tetrahedron_boundary_is_a_sphere() {
        let s2 = corpus::tetrahedron_boundary();
        assert_eq!(s2.num_simplices(), 14);
        assert!(s2.is_pure());
        assert_eq!(
            homology_dims(&s2.chain_complex()),
            GradedDims(vec![1, 0, 1])
        );
    }

    #[test]
    fn seven_vertex_torus_homology_by_rank_counting() {
        let t = corpus::torus();
        assert_eq!((t.count(0), t.count(1), t.count(2)), (7, 21, 14));
        assert_eq!(homology_dims(&t.chain_complex()), GradedDims(vec![1, 2, 1]));
    }

    #[test]
    fn unknown_vertex_is_rejected() {
        let err = SimplicialComplex::from_named(&["a", "b"], &[vec!["a", "c"]]).unwrap_err();
        assert!(matches!(err, Error::UnknownVertex(v) if v == "c"));
    }

    #[test]
    fn maximal_simplices_and_purity() {
        let x = SimplicialComplex::from_named(
            &["a", "b", "c", "d", "e"],
            &[vec!["a", "b", "c"], vec!["b", "c", "d"], vec!["d", "e"]],
        )
        .unwrap();
        assert_eq!(x.maximal_simplices().len(), 3);
        assert!(!x.is_pure());
    }
}
