use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::simplex::Simplex;
use super::simplicial::SimplicialComplex;
use crate::error::{Error, Result};
use crate::exactla::{q, Rational, SparseVector};

/// A finite rational combination of canonically oriented simplices of one
/// degree. Simplices refer to vertex ids of a particular complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    degree: usize,
    terms: BTreeMap<Simplex, Rational>,
}

impl Chain {
    pub fn zero(degree: usize) -> Self {
        Chain {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// Builds a chain from `(vertex names, coefficient)` pairs. Names may be
    /// listed in any order; the coefficient is reoriented accordingly.
    pub fn from_named<S: AsRef<str>>(
        complex: &SimplicialComplex,
        degree: usize,
        terms: &[(Vec<S>, Rational)],
    ) -> Result<Self> {
        let mut chain = Chain::zero(degree);
        for (names, coeff) in terms {
            let (s, sign) = complex.simplex_from_names(names)?;
            chain.add_term(s, &(coeff * q(sign)))?;
        }
        Ok(chain)
    }

    /// Reads simplicial coordinates (indices into `complex.simplices(degree)`).
    pub fn from_vector(complex: &SimplicialComplex, degree: usize, v: &SparseVector) -> Self {
        let cells = complex.simplices(degree);
        Chain {
            degree,
            terms: v
                .iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(&i, c)| (cells[i].clone(), c.clone()))
                .collect(),
        }
    }

    pub fn to_vector(&self, complex: &SimplicialComplex) -> Result<SparseVector> {
        self.terms
            .iter()
            .map(|(s, c)| {
                complex
                    .index_of(s)
                    .map(|i| (i, c.clone()))
                    .ok_or_else(|| Error::MissingSimplex(complex.display_simplex(s)))
            })
            .collect()
    }

    /// Adds `coeff * s`; the simplex must have the chain's degree.
    pub fn add_term(&mut self, s: Simplex, coeff: &Rational) -> Result<()> {
        if s.dim() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: s.dim(),
            });
        }
        self.add_unchecked(s, coeff);
        Ok(())
    }

    fn add_unchecked(&mut self, s: Simplex, coeff: &Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(s) {
            Entry::Vacant(e) => {
                e.insert(coeff.clone());
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Simplex, Rational> {
        &self.terms
    }

    pub fn coefficient(&self, s: &Simplex) -> Rational {
        self.terms.get(s).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = &Simplex> {
        self.terms.keys()
    }

    pub fn touches_vertex(&self, v: usize) -> bool {
        self.terms.keys().any(|s| s.contains_vertex(v))
    }

    /// Simplicial boundary; the boundary of a 0-chain is the zero 0-chain.
    pub fn boundary(&self) -> Chain {
        if self.degree == 0 {
            return Chain::zero(0);
        }
        let mut out = Chain::zero(self.degree - 1);
        for (s, c) in &self.terms {
            for (f, sign) in s.boundary() {
                out.add_unchecked(f, &(c * q(sign)));
            }
        }
        out
    }

    pub fn scale(&self, factor: &Rational) -> Chain {
        if factor.is_zero() {
            return Chain::zero(self.degree);
        }
        Chain {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(s, c)| (s.clone(), c * factor))
                .collect(),
        }
    }

    pub fn add(&self, other: &Chain) -> Result<Chain> {
        self.check_degree(other)?;
        let mut out = self.clone();
        for (s, c) in &other.terms {
            out.add_unchecked(s.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Chain) -> Result<Chain> {
        self.add(&other.scale(&-Rational::one()))
    }

    fn check_degree(&self, other: &Chain) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: other.degree,
            });
        }
        Ok(())
    }

    /// Keeps the terms whose simplex satisfies `keep`.
    pub fn restrict(&self, keep: impl Fn(&Simplex) -> bool) -> Chain {
        Chain {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .filter(|(s, _)| keep(s))
                .map(|(s, c)| (s.clone(), c.clone()))
                .collect(),
        }
    }

    /// Moves the chain from `from` to `to` by matching vertex names,
    /// reorienting each simplex to the target's vertex order.
    pub fn transfer(&self, from: &SimplicialComplex, to: &SimplicialComplex) -> Result<Chain> {
        let mut out = Chain::zero(self.degree);
        for (s, c) in &self.terms {
            let (t, sign) = to.translate(from, s).ok_or_else(|| Error::TransferFails {
                simplex: from.display_simplex(s),
                reason: "no simplex with these vertex names in the target".into(),
            })?;
            out.add_unchecked(t, &(c * q(sign)));
        }
        Ok(out)
    }

    /// `(vertex names, coefficient)` pairs in simplex order.
    pub fn named_terms(&self, complex: &SimplicialComplex) -> Vec<(Vec<String>, Rational)> {
        self.terms
            .iter()
            .map(|(s, c)| (complex.simplex_names(s), c.clone()))
            .collect()
    }

    pub fn display(&self, complex: &SimplicialComplex) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (s, c)) in self.terms.iter().enumerate() {
            let neg = c < &Rational::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            match (i, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            if !mag.is_one() {
                out.push_str(&format!("{mag}*"));
            }
            out.push_str(&complex.display_simplex(s));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn boundary_of_boundary_vanishes() {
        let s2 = corpus::tetrahedron_boundary();
        for t in s2.simplices(2) {
            let mut c = Chain::zero(2);
            c.add_term(t.clone(), &q(3)).unwrap();
            assert!(c.boundary().boundary().is_zero());
        }
    }

    #[test]
    fn names_reorient_coefficients() {
        let s2 = corpus::tetrahedron_boundary();
        let a = Chain::from_named(&s2, 1, &[(vec!["1", "0"], q(1))]).unwrap();
        let b = Chain::from_named(&s2, 1, &[(vec!["0", "1"], q(-1))]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.add(&b).unwrap(), a.scale(&q(2)));
        assert!(a.sub(&b).unwrap().is_zero());
    }

    #[test]
    fn degree_is_enforced() {
        let s2 = corpus::tetrahedron_boundary();
        let err = Chain::from_named(&s2, 2, &[(vec!["0", "1"], q(1))]).unwrap_err();
        assert!(matches!(
            err,
            Error::DegreeMismatch {
                expected: 2,
                found: 1
            }
        ));
    }
}
