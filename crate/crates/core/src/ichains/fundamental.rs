use std::collections::VecDeque;

use crate::complex::{Chain, StratifiedComplex};
use crate::error::{Error, Result};
use crate::exactla::q;

/// Sum of coherently oriented top simplices.
///
/// Orientations propagate along the dual graph whose edges are the
/// `(n-1)`-faces outside the singular set lying in exactly two top
/// simplices. Each component is rooted at its smallest top simplex, which
/// keeps its canonical orientation. The result is checked to have boundary
/// supported in the singular set.
pub fn fundamental_class(x: &StratifiedComplex) -> Result<Chain> {
    let k = x.complex();
    let n = k.dim().ok_or(Error::EmptyComplex)?;
    if !k.is_pure() {
        return Err(Error::InvalidComplex("complex is not pure".into()));
    }
    let tops = k.simplices(n);
    if n == 0 {
        let mut c = Chain::zero(0);
        for s in tops {
            c.add_term(s.clone(), &q(1))?;
        }
        return Ok(c);
    }
    let faces = k.simplices(n - 1);
    let cofaces = k.cofaces(n);
    let strata = x.stratification();

    // adjacency: (neighbor, face index)
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); tops.len()];
    for (fi, cof) in cofaces.iter().enumerate() {
        if cof.len() == 2 && !strata.is_singular(&faces[fi]) {
            adj[cof[0]].push((cof[1], fi));
            adj[cof[1]].push((cof[0], fi));
        }
    }
    let sign_in = |top: usize, fi: usize| -> i64 {
        tops[top]
            .boundary()
            .into_iter()
            .find(|(f, _)| *f == faces[fi])
            .map(|(_, s)| s)
            .expect("face of its coface")
    };

    let mut orient: Vec<i64> = vec![0; tops.len()];
    for root in 0..tops.len() {
        if orient[root] != 0 {
            continue;
        }
        orient[root] = 1;
        let mut queue = VecDeque::from([root]);
        while let Some(t) = queue.pop_front() {
            for &(u, fi) in &adj[t] {
                let wanted = -orient[t] * sign_in(t, fi) * sign_in(u, fi);
                if orient[u] == 0 {
                    orient[u] = wanted;
                    queue.push_back(u);
                } else if orient[u] != wanted {
                    return Err(Error::NonOrientable(k.display_simplex(&faces[fi])));
                }
            }
        }
    }

    let mut c = Chain::zero(n);
    for (t, s) in tops.iter().enumerate() {
        c.add_term(s.clone(), &q(orient[t]))?;
    }
    if let Some(f) = c.boundary().support().find(|f| !strata.is_singular(f)) {
        return Err(Error::NotACycle(k.display_simplex(f)));
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{Perversity, StratifiedComplex};
    use crate::corpus;
    use crate::ichains::is_allowable;

    #[test]
    fn sphere_and_torus() {
        for k in [corpus::tetrahedron_boundary(), corpus::torus()] {
            let x = StratifiedComplex::unstratified(k.clone());
            let c = fundamental_class(&x).unwrap();
            assert_eq!(c.len(), k.count(2));
            assert!(c.boundary().is_zero());
        }
    }

    #[test]
    fn klein_bottle_is_not_orientable() {
        let x = StratifiedComplex::unstratified(corpus::klein_bottle());
        assert!(matches!(
            fundamental_class(&x),
            Err(Error::NonOrientable(_))
        ));
    }

    #[test]
    fn crossing_spheres_sum_both_spheres() {
        let x = corpus::crossing_spheres();
        let c = fundamental_class(&x).unwrap();
        assert_eq!(c.len(), 8);
        assert!(c.boundary().is_zero());
        // the triangles at the crossing meet it in a point: 0 <= 2 - 2 + m(2)
        assert!(is_allowable(&c, &Perversity::Middle, &x).unwrap());
    }

    #[test]
    fn disk_is_not_a_cycle() {
        let t = StratifiedComplex::unstratified(corpus::torus());
        let c = crate::complex::cone(&t, "apex").unwrap();
        assert!(matches!(fundamental_class(&c), Err(Error::NotACycle(_))));
    }
}
