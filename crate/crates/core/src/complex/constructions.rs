use std::collections::{BTreeMap, BTreeSet};

use super::chain::Chain;
use super::simplex::Simplex;
use super::simplicial::SimplicialComplex;
use super::stratification::StratifiedComplex;
use crate::error::{Error, Result};
use crate::exactla::q;

/// Cone on `x` with a new apex vertex appended last.
///
/// Each filtration member `Σ_j` becomes `cone(Σ_j)` with the same
/// codimension, and the apex is added as the deepest member with codimension
/// `dim x + 1`.
pub fn cone(x: &StratifiedComplex, apex: &str) -> Result<StratifiedComplex> {
    let n = x.dim().ok_or(Error::EmptyComplex)?;
    let k = x.complex();
    if k.vertex_id(apex).is_some() {
        return Err(Error::VertexExists(apex.to_string()));
    }
    if n + 1 < 2 {
        return Err(Error::CodimTooSmall(n + 1));
    }
    let a = k.num_vertices();
    let mut names = k.names().to_vec();
    names.push(apex.to_string());

    let joined = |simplices: &mut dyn Iterator<Item = &Simplex>| -> Vec<Simplex> {
        simplices
            .flat_map(|s| [s.clone(), s.with(a).expect("apex is new")])
            .collect()
    };
    let maximal = k.maximal_simplices();
    let simplices: BTreeSet<Simplex> = joined(&mut maximal.iter()).into_iter().collect();

    let mut filtration: Vec<(usize, Vec<Simplex>)> = x
        .members()
        .iter()
        .filter(|m| !m.is_empty())
        .map(|m| {
            let mut gens = joined(&mut m.maximal_simplices().iter());
            gens.push(Simplex::vertex(a));
            (m.codim(), gens)
        })
        .collect();
    filtration.push((n + 1, vec![Simplex::vertex(a)]));
    StratifiedComplex::from_parts(names, simplices, filtration)
}

/// Suspension of `x`: two cones glued along `x`, apexes appended in the
/// order `north`, `south`.
///
/// The apexes form the deepest member with codimension `dim x + 1`. For a
/// zero-dimensional `x` that codimension is 1, no singular point arises
/// (the suspension of a point is an interval), and the apexes are left out
/// of the filtration.
pub fn suspension(x: &StratifiedComplex, north: &str, south: &str) -> Result<StratifiedComplex> {
    let n = x.dim().ok_or(Error::EmptyComplex)?;
    let k = x.complex();
    for name in [north, south] {
        if k.vertex_id(name).is_some() {
            return Err(Error::VertexExists(name.to_string()));
        }
    }
    if north == south {
        return Err(Error::VertexExists(south.to_string()));
    }
    let (a, b) = (k.num_vertices(), k.num_vertices() + 1);
    let mut names = k.names().to_vec();
    names.push(north.to_string());
    names.push(south.to_string());

    let suspend = |simplices: &[Simplex]| -> Vec<Simplex> {
        simplices
            .iter()
            .flat_map(|s| [s.with(a).expect("new apex"), s.with(b).expect("new apex")])
            .collect()
    };
    let simplices: BTreeSet<Simplex> = suspend(&k.maximal_simplices()).into_iter().collect();

    let apexes = vec![Simplex::vertex(a), Simplex::vertex(b)];
    let with_apexes = n + 1 >= 2;
    let mut filtration: Vec<(usize, Vec<Simplex>)> = x
        .members()
        .iter()
        .filter(|m| !m.is_empty())
        .map(|m| {
            let mut gens = suspend(&m.maximal_simplices());
            if with_apexes {
                gens.extend(apexes.iter().cloned());
            }
            (m.codim(), gens)
        })
        .collect();
    if with_apexes {
        filtration.push((n + 1, apexes));
    }
    StratifiedComplex::from_parts(names, simplices, filtration)
}

/// Simplicial link of the named vertex.
///
/// The link keeps the vertex names of `x`. Its filtration member of
/// codimension `c` consists of the simplices `τ` of the link with `τ ∪ v`
/// in the member of `x` of codimension `c`; members that become empty are
/// dropped.
pub fn link(x: &StratifiedComplex, vertex: &str) -> Result<StratifiedComplex> {
    let k = x.complex();
    let v = k.require_vertex(vertex)?;
    let star_tops: Vec<Simplex> = k
        .maximal_simplices()
        .into_iter()
        .filter(|s| s.contains_vertex(v))
        .collect();
    let mut kept: BTreeSet<usize> = BTreeSet::new();
    for s in &star_tops {
        kept.extend(s.vertices().iter().copied().filter(|&w| w != v));
    }
    let renumber: BTreeMap<usize, usize> = kept.iter().enumerate().map(|(i, &w)| (w, i)).collect();
    let names: Vec<String> = kept.iter().map(|&w| k.vertex_name(w).to_string()).collect();
    let relabel = |s: &Simplex| -> Simplex {
        Simplex::from_sorted(s.vertices().iter().map(|w| renumber[w]).collect())
    };

    let simplices: BTreeSet<Simplex> = star_tops
        .iter()
        .filter_map(|s| s.without(v))
        .map(|s| relabel(&s))
        .collect();
    let filtration = x
        .members()
        .iter()
        .filter_map(|m| {
            let gens: Vec<Simplex> = m
                .simplices()
                .iter()
                .filter(|s| s.contains_vertex(v))
                .filter_map(|s| s.without(v))
                .map(|s| relabel(&s))
                .collect();
            (!gens.is_empty()).then(|| (m.codim(), gens))
        })
        .collect();
    StratifiedComplex::from_parts(names, simplices, filtration)
}

/// Name of the barycenter of `s`: the vertex name for a vertex, otherwise
/// the braced, lexicographically sorted list of vertex names. Sorting makes
/// the name independent of the complex's vertex order, so subdivisions of a
/// complex and of a subcomplex agree by name.
pub fn barycenter_name(x: &SimplicialComplex, s: &Simplex) -> String {
    if s.dim() == 0 {
        x.vertex_name(s.vertices()[0]).to_string()
    } else {
        let mut names = x.simplex_names(s);
        names.sort();
        format!("{{{}}}", names.join(","))
    }
}

/// Barycentric subdivision.
///
/// Vertices of the subdivision are the simplices of `x` in (dimension,
/// index) order, so a flag `σ_0 < σ_1 < ...` is already in canonical
/// order. Each filtration member is replaced by its subdivision, which is a
/// full subcomplex.
pub fn barycentric_subdivide(x: &StratifiedComplex) -> Result<StratifiedComplex> {
    let k = x.complex();
    let mut id: BTreeMap<&Simplex, usize> = BTreeMap::new();
    let mut names = Vec::with_capacity(k.num_simplices());
    for s in k.all_simplices() {
        id.insert(s, names.len());
        names.push(barycenter_name(k, s));
    }
    let flags_of = |s: &Simplex| -> Vec<Simplex> {
        maximal_flags(s)
            .into_iter()
            .map(|flag| Simplex::from_sorted(flag.iter().map(|f| id[f]).collect()))
            .collect()
    };
    let simplices: BTreeSet<Simplex> = k.maximal_simplices().iter().flat_map(&flags_of).collect();
    let filtration = x
        .members()
        .iter()
        .map(|m| {
            (
                m.codim(),
                m.maximal_simplices().iter().flat_map(&flags_of).collect(),
            )
        })
        .collect();
    StratifiedComplex::from_parts(names, simplices, filtration)
}

/// All maximal flags of faces ending in `s`, smallest face first.
fn maximal_flags(s: &Simplex) -> Vec<Vec<Simplex>> {
    if s.dim() == 0 {
        return vec![vec![s.clone()]];
    }
    let mut out = Vec::new();
    for &v in s.vertices() {
        let face = s.without(v).expect("dimension > 0");
        for mut flag in maximal_flags(&face) {
            flag.push(s.clone());
            out.push(flag);
        }
    }
    out
}

/// Image of a chain of `x` under the subdivision chain map into `sd`, the
/// complex returned by [`barycentric_subdivide`].
///
/// `sd(σ) = (-1)^d cone_b(sd ∂σ)` with the barycenter `b` of `σ` placed
/// last, which commutes with the boundary.
pub fn subdivide_chain(
    x: &SimplicialComplex,
    sd: &SimplicialComplex,
    chain: &Chain,
) -> Result<Chain> {
    let mut memo: BTreeMap<Simplex, Chain> = BTreeMap::new();
    let mut out = Chain::zero(chain.degree());
    for (s, c) in chain.terms() {
        let piece = subdivide_simplex(x, sd, s, &mut memo)?;
        out = out.add(&piece.scale(c))?;
    }
    Ok(out)
}

fn subdivide_simplex(
    x: &SimplicialComplex,
    sd: &SimplicialComplex,
    s: &Simplex,
    memo: &mut BTreeMap<Simplex, Chain>,
) -> Result<Chain> {
    if let Some(c) = memo.get(s) {
        return Ok(c.clone());
    }
    let name = barycenter_name(x, s);
    let b = sd.require_vertex(&name)?;
    let d = s.dim();
    let result = if d == 0 {
        let mut c = Chain::zero(0);
        c.add_term(Simplex::vertex(b), &q(1))?;
        c
    } else {
        let mut bd = Chain::zero(d - 1);
        for (f, sign) in s.boundary() {
            bd = bd.add(&subdivide_simplex(x, sd, &f, memo)?.scale(&q(sign)))?;
        }
        let sign = if d.is_multiple_of(2) { 1 } else { -1 };
        let mut c = Chain::zero(d);
        for (t, coeff) in bd.terms() {
            let mut vs = t.vertices().to_vec();
            vs.push(b);
            let (joined, orient) = Simplex::oriented(vs).ok_or_else(|| {
                Error::InvalidSimplex(format!("barycenter {name} repeats in its own subdivision"))
            })?;
            if !sd.contains(&joined) {
                return Err(Error::MissingSimplex(sd.display_simplex(&joined)));
            }
            c.add_term(joined, &(coeff * q(sign * orient)))?;
        }
        c
    };
    memo.insert(s.clone(), result.clone());
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::exactla::{homology_dims, GradedDims};

    #[test]
    fn cone_counts_and_strata() {
        let s2 = StratifiedComplex::unstratified(corpus::tetrahedron_boundary());
        let c = cone(&s2, "apex").unwrap();
        assert_eq!(c.complex().num_simplices(), 2 * 14 + 1);
        assert_eq!(c.dim(), Some(3));
        assert_eq!(c.stratification().codims(), vec![3]);
        let t = StratifiedComplex::unstratified(corpus::torus());
        let ct = cone(&t, "apex").unwrap();
        assert_eq!(ct.complex().num_simplices(), 2 * 42 + 1);
    }

    #[test]
    fn cone_rejects_codim_one_and_collisions() {
        let pts = SimplicialComplex::from_named::<&str>(&["p", "q"], &[]).unwrap();
        let err = cone(&StratifiedComplex::unstratified(pts), "a").unwrap_err();
        assert!(matches!(err, Error::CodimTooSmall(1)));
        let s2 = StratifiedComplex::unstratified(corpus::tetrahedron_boundary());
        assert!(matches!(cone(&s2, "0"), Err(Error::VertexExists(_))));
    }

    #[test]
    fn link_of_apex_recovers_base() {
        let t = StratifiedComplex::unstratified(corpus::torus());
        let c = cone(&t, "apex").unwrap();
        let l = link(&c, "apex").unwrap();
        assert_eq!(l.complex(), t.complex());
        assert!(l.members().is_empty());
    }

    #[test]
    fn suspension_euler_characteristic() {
        for base in [
            corpus::hexagon(),
            corpus::torus(),
            corpus::tetrahedron_boundary(),
        ] {
            let x = StratifiedComplex::unstratified(base.clone());
            let s = suspension(&x, "N", "S").unwrap();
            let cone_chi = cone(&x, "a").unwrap().complex().euler_characteristic();
            assert_eq!(cone_chi, 1);
            assert_eq!(
                s.complex().euler_characteristic(),
                2 * cone_chi - base.euler_characteristic()
            );
        }
    }

    #[test]
    fn suspension_of_point_is_interval() {
        let pt = SimplicialComplex::from_named::<&str>(&["p"], &[]).unwrap();
        let s = suspension(&StratifiedComplex::unstratified(pt), "N", "S").unwrap();
        assert_eq!((s.complex().count(0), s.complex().count(1)), (3, 2));
        assert!(s.members().is_empty());
    }

    #[test]
    fn subdivision_counts() {
        let edge = SimplicialComplex::from_named(&["a", "b"], &[vec!["a", "b"]]).unwrap();
        let sd = barycentric_subdivide(&StratifiedComplex::unstratified(edge)).unwrap();
        assert_eq!((sd.complex().count(0), sd.complex().count(1)), (3, 2));
        let tri = SimplicialComplex::from_named(&["a", "b", "c"], &[vec!["a", "b", "c"]]).unwrap();
        let sd = barycentric_subdivide(&StratifiedComplex::unstratified(tri)).unwrap();
        assert_eq!(sd.complex().count(2), 6);
    }

    #[test]
    fn subdivision_preserves_homology() {
        let t = StratifiedComplex::unstratified(corpus::torus());
        let sd = barycentric_subdivide(&t).unwrap();
        assert_eq!(
            homology_dims(&sd.complex().chain_complex()),
            GradedDims(vec![1, 2, 1])
        );
    }

    #[test]
    fn subdivision_is_a_chain_map() {
        let s2 = corpus::tetrahedron_boundary();
        let sd = barycentric_subdivide(&StratifiedComplex::unstratified(s2.clone())).unwrap();
        for d in 1..=2 {
            for s in s2.simplices(d) {
                let mut c = Chain::zero(d);
                c.add_term(s.clone(), &q(1)).unwrap();
                let lhs = subdivide_chain(&s2, sd.complex(), &c).unwrap().boundary();
                let rhs = subdivide_chain(&s2, sd.complex(), &c.boundary()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }
}
