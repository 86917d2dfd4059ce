//! Cone surgery on cycles at an isolated singular vertex.
//!
//! A cycle `ξ` of `Y` that passes through the apex `x` agrees near `x` with
//! the cone `cη` on a cycle `η` of the link. If `η = ∂ζ` in the link of `Y`,
//! replacing `cη` by `ζ` gives a homologous cycle `ξ' = ξ - cη + ζ` that
//! avoids the apex. If `η` does not bound, that is exactly the obstruction
//! detected by the link map.

use crate::complex::{
    barycentric_subdivide, link, subdivide_chain, Chain, Perversity, Simplex, StratifiedComplex,
};
use crate::error::{Error, Result};
use crate::exactla::{q, solve};
use crate::ichains::is_intersection_chain;

/// A cycle to repair at one apex of a pair `X ⊂ Y`.
#[derive(Clone, Debug)]
pub struct SurgeryProblem {
    x: StratifiedComplex,
    y: StratifiedComplex,
    apex: String,
    xi: Chain,
    perversity: Perversity,
}

impl SurgeryProblem {
    /// `xi` is a chain of `x`; it is carried into `y` by vertex names. The
    /// repaired cycle is re-checked against the middle perversity of `y`.
    pub fn new(x: StratifiedComplex, y: StratifiedComplex, apex: &str, xi: &Chain) -> Result<Self> {
        let xi = xi.transfer(x.complex(), y.complex())?;
        Self::in_target(x, y, apex, xi)
    }

    /// Like [`SurgeryProblem::new`] with `xi` already a chain of `y`. Its
    /// part near the apex must still lie in `x`; the rest is unrestricted,
    /// which allows surgery at a second apex after a first repair.
    pub fn in_target(
        x: StratifiedComplex,
        y: StratifiedComplex,
        apex: &str,
        xi: Chain,
    ) -> Result<Self> {
        if !y.complex().contains_complex(x.complex()) {
            return Err(Error::Precondition("X is not a subcomplex of Y".into()));
        }
        y.complex().require_vertex(apex)?;
        if !xi.boundary().is_zero() {
            return Err(Error::Malformed("ξ is not a cycle".into()));
        }
        Ok(SurgeryProblem {
            x,
            y,
            apex: apex.to_string(),
            xi,
            perversity: Perversity::Middle,
        })
    }

    /// Perversity used to re-check the repaired cycle in `Y`.
    pub fn with_perversity(mut self, p: Perversity) -> Self {
        self.perversity = p;
        self
    }

    pub fn x(&self) -> &StratifiedComplex {
        &self.x
    }

    pub fn y(&self) -> &StratifiedComplex {
        &self.y
    }

    pub fn apex(&self) -> &str {
        &self.apex
    }

    pub fn perversity(&self) -> &Perversity {
        &self.perversity
    }

    /// `ξ` as a chain of `Y`.
    pub fn xi(&self) -> &Chain {
        &self.xi
    }

    /// The same problem after one barycentric subdivision of `X`, `Y` and
    /// `ξ`. Vertices keep their names, so the apex is unchanged.
    pub fn subdivided(&self) -> Result<SurgeryProblem> {
        let sx = barycentric_subdivide(&self.x)?;
        let sy = barycentric_subdivide(&self.y)?;
        let xi = subdivide_chain(self.y.complex(), sy.complex(), &self.xi)?;
        Ok(SurgeryProblem::in_target(sx, sy, &self.apex, xi)?
            .with_perversity(self.perversity.clone()))
    }

    fn apex_id(&self) -> usize {
        self.y
            .complex()
            .vertex_id(&self.apex)
            .expect("checked on construction")
    }

    /// `cone(τ) = [apex, τ]` as a chain of `Y`, for a chain `τ` of the link.
    fn cone_on(&self, link_y: &StratifiedComplex, c: &Chain) -> Result<Chain> {
        let (ky, kl) = (self.y.complex(), link_y.complex());
        let a = self.apex_id();
        let mut out = Chain::zero(c.degree() + 1);
        for (t, coeff) in c.terms() {
            let mut vs = vec![a];
            vs.extend(
                t.vertices()
                    .iter()
                    .map(|&v| ky.vertex_id(kl.vertex_name(v)).expect("link vertex")),
            );
            let (s, sign) = Simplex::oriented(vs).expect("apex is not in its link");
            out.add_term(s, &(coeff * q(sign)))?;
        }
        Ok(out)
    }
}

/// `η` with `ξ|star(apex) = cone(η)`, as a chain of the link of the apex in
/// `Y`. Zero when `ξ` avoids the apex.
pub fn extract_link_cycle(p: &SurgeryProblem) -> Result<Chain> {
    let ly = link(&p.y, &p.apex)?;
    extract_in(p, &ly)
}

fn extract_in(p: &SurgeryProblem, ly: &StratifiedComplex) -> Result<Chain> {
    let (ky, kl) = (p.y.complex(), ly.complex());
    let a = p.apex_id();
    let d = p.xi.degree();
    if !p.xi.touches_vertex(a) {
        return Ok(Chain::zero(d.saturating_sub(1)));
    }
    if d == 0 {
        return Err(Error::NotConeShaped(p.apex.clone()));
    }
    let mut eta = Chain::zero(d - 1);
    for (s, c) in p.xi.terms() {
        let Some(pos) = s.vertices().iter().position(|&v| v == a) else {
            continue;
        };
        if p.x.complex().translate(ky, s).is_none() {
            return Err(Error::Precondition(format!(
                "ξ meets the apex in {}, which is not a simplex of X",
                ky.display_simplex(s)
            )));
        }
        let tau = s.without(a).expect("dimension > 0");
        let (t, sign) = kl
            .translate(ky, &tau)
            .expect("face of a simplex through the apex");
        let flip = if pos % 2 == 0 { 1 } else { -1 };
        eta.add_term(t, &(c * q(sign * flip)))?;
    }
    if !eta.boundary().is_zero() {
        return Err(Error::NotConeShaped(p.apex.clone()));
    }
    Ok(eta)
}

/// Result of a successful repair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Repair {
    /// `ξ' = ξ - cone(η) + ζ`, a chain of `Y`.
    pub cycle: Chain,
    /// `η`, a chain of the link of the apex in `Y`.
    pub eta: Chain,
    /// `ζ` with `∂ζ = η`, a chain of the same link.
    pub zeta: Chain,
    /// `cone(ζ)` in `Y`; `ξ - ξ' = -∂ cone(ζ)`.
    pub filler: Chain,
    /// Whether `ξ'` is an intersection chain of `Y` for the problem's
    /// perversity. Reported, not assumed.
    pub allowable_in_y: bool,
}

/// Replaces `cone(η)` by the pivot-minimal `ζ` with `∂ζ = η` in the link of
/// `Y`. `None` when `η` does not bound there.
pub fn repair_cycle(p: &SurgeryProblem) -> Result<Option<Repair>> {
    let ly = link(&p.y, &p.apex)?;
    let eta = extract_in(p, &ly)?;
    let d = p.xi.degree();
    if eta.is_zero() {
        return Ok(Some(Repair {
            cycle: p.xi.clone(),
            eta,
            zeta: Chain::zero(d),
            filler: Chain::zero(d + 1),
            allowable_in_y: is_intersection_chain(&p.xi, &p.perversity, &p.y)?,
        }));
    }
    let kl = ly.complex();
    let target = eta.to_vector(kl)?;
    let Some(z) = solve(&kl.boundary_matrix(d), &target) else {
        return Ok(None);
    };
    let zeta = Chain::from_vector(kl, d, &z);
    let cone_eta = p.cone_on(&ly, &eta)?;
    let zeta_in_y = zeta.transfer(kl, p.y.complex())?;
    let cycle = p.xi.sub(&cone_eta)?.add(&zeta_in_y)?;
    let filler = p.cone_on(&ly, &zeta)?;
    let allowable_in_y = is_intersection_chain(&cycle, &p.perversity, &p.y)?;
    Ok(Some(Repair {
        cycle,
        eta,
        zeta,
        filler,
        allowable_in_y,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::ichains::fundamental_class;

    fn problem(x: StratifiedComplex, y: StratifiedComplex, apex: &str) -> SurgeryProblem {
        let xi = fundamental_class(&x).unwrap();
        SurgeryProblem::new(x, y, apex, &xi).unwrap()
    }

    #[test]
    fn equator_repair_avoids_the_apex() {
        let p = problem(corpus::suspended_equator(), corpus::suspended_sphere(), "N");
        let eta = extract_link_cycle(&p).unwrap();
        assert_eq!(eta.len(), 4);
        let r = repair_cycle(&p)
            .unwrap()
            .expect("the equator bounds a hemisphere");
        let n = p.y().complex().vertex_id("N").unwrap();
        assert!(r.cycle.boundary().is_zero());
        assert!(!r.cycle.touches_vertex(n));
        assert_eq!(
            p.xi().sub(&r.cycle).unwrap(),
            r.filler.boundary().scale(&q(-1))
        );
    }

    #[test]
    fn factor_circle_is_obstructed() {
        let p = problem(
            corpus::suspended_factor_circle(),
            corpus::suspended_torus(),
            "N",
        );
        assert_eq!(extract_link_cycle(&p).unwrap().len(), 7);
        assert!(repair_cycle(&p).unwrap().is_none());
    }

    #[test]
    fn both_apexes_in_turn() {
        let p = problem(corpus::suspended_equator(), corpus::suspended_sphere(), "N");
        let first = repair_cycle(&p).unwrap().unwrap();
        let q2 = SurgeryProblem::in_target(p.x().clone(), p.y().clone(), "S", first.cycle).unwrap();
        let second = repair_cycle(&q2).unwrap().unwrap();
        let k = p.y().complex();
        for apex in ["N", "S"] {
            assert!(!second.cycle.touches_vertex(k.vertex_id(apex).unwrap()));
        }
        assert!(second.allowable_in_y);
    }

    #[test]
    fn cycle_avoiding_the_apex_is_unchanged() {
        let y = corpus::suspended_sphere();
        let x = corpus::suspended_equator();
        let eq = StratifiedComplex::unstratified(corpus::equator());
        let xi = fundamental_class(&eq)
            .unwrap()
            .transfer(eq.complex(), x.complex())
            .unwrap();
        let p = SurgeryProblem::new(x, y, "N", &xi).unwrap();
        assert!(extract_link_cycle(&p).unwrap().is_zero());
        assert_eq!(repair_cycle(&p).unwrap().unwrap().cycle, *p.xi());
    }

    #[test]
    fn subdivided_problem_still_repairs() {
        let p = problem(corpus::suspended_equator(), corpus::suspended_sphere(), "N");
        let sp = p.subdivided().unwrap();
        let r = repair_cycle(&sp).unwrap().unwrap();
        assert!(r.cycle.boundary().is_zero());
        assert!(!r
            .cycle
            .touches_vertex(sp.y().complex().vertex_id("N").unwrap()));
    }
}
