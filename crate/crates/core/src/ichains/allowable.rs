use crate::complex::{Chain, Perversity, Simplex, StratifiedComplex};
use crate::error::Result;

/// Does `s` meet every filtration member of codimension `c` in a face of
/// dimension at most `dim s - c + p(c)`?
pub fn simplex_is_allowable(x: &StratifiedComplex, s: &Simplex, p: &Perversity) -> Result<bool> {
    for m in x.members() {
        if let Some(face) = m.max_face_dim(s) {
            let bound = s.dim() as i64 - m.codim() as i64 + p.value(m.codim())?;
            if face as i64 > bound {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Is every simplex in the support of `c` allowable?
pub fn is_allowable(c: &Chain, p: &Perversity, x: &StratifiedComplex) -> Result<bool> {
    Ok(first_violation(c, p, x)?.is_none())
}

/// Are `c` and its boundary both allowable?
pub fn is_intersection_chain(c: &Chain, p: &Perversity, x: &StratifiedComplex) -> Result<bool> {
    Ok(is_allowable(c, p, x)? && is_allowable(&c.boundary(), p, x)?)
}

/// First simplex of the support (in simplex order) that is not allowable.
pub fn first_violation(
    c: &Chain,
    p: &Perversity,
    x: &StratifiedComplex,
) -> Result<Option<Simplex>> {
    for s in c.support() {
        if !simplex_is_allowable(x, s, p)? {
            return Ok(Some(s.clone()));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::SimplicialComplex;
    use crate::exactla::q;

    fn crossing() -> StratifiedComplex {
        crate::corpus::crossing_spheres()
    }

    #[test]
    fn edge_through_codim_two_point() {
        let x = crossing();
        let (e, _) = x.complex().simplex_from_names(&["c", "a1"]).unwrap();
        assert!(!simplex_is_allowable(&x, &e, &Perversity::Middle).unwrap());
        assert!(simplex_is_allowable(&x, &e, &Perversity::Log).unwrap());
    }

    #[test]
    fn chains_off_the_singular_set_are_always_allowable() {
        let x = crossing();
        let c = Chain::from_named(
            x.complex(),
            1,
            &[(vec!["a1", "a2"], q(1)), (vec!["b2", "b3"], q(-2))],
        )
        .unwrap();
        for p in [
            Perversity::Zero,
            Perversity::Middle,
            Perversity::Log,
            Perversity::Top,
        ] {
            assert!(is_allowable(&c, &p, &x).unwrap());
        }
    }

    #[test]
    fn unstratified_has_no_conditions() {
        let k = SimplicialComplex::from_named(&["a", "b"], &[vec!["a", "b"]]).unwrap();
        let x = StratifiedComplex::unstratified(k);
        let c = Chain::from_named(x.complex(), 0, &[(vec!["a"], q(1))]).unwrap();
        assert!(is_intersection_chain(&c, &Perversity::Zero, &x).unwrap());
    }
}
