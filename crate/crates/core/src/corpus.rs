//! Small triangulations used throughout the tests and examples.
//!
//! Everything here is a fixed, explicit complex; the stratified variants
//! carry the natural filtration (apexes of suspensions, crossing points).

use crate::complex::{suspension, SimplicialComplex, StratifiedComplex};

fn numbered(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

fn build(names: Vec<String>, simplices: &[Vec<usize>]) -> SimplicialComplex {
    SimplicialComplex::new(names, simplices).expect("corpus complexes are well formed")
}

/// Boundary of the 3-simplex on vertices `0..4`: a 2-sphere with 14 simplices.
pub fn tetrahedron_boundary() -> SimplicialComplex {
    let faces = (0..4)
        .map(|skip| (0..4).filter(|&v| v != skip).collect())
        .collect::<Vec<_>>();
    build(numbered(4), &faces)
}

/// Octahedron: a 2-sphere on `x+ y+ x- y- z+ z-`.
pub fn octahedron() -> SimplicialComplex {
    let names = ["x+", "y+", "x-", "y-", "z+", "z-"]
        .map(String::from)
        .to_vec();
    let mut faces = Vec::new();
    for i in 0..4 {
        for pole in [4, 5] {
            faces.push(vec![i, (i + 1) % 4, pole]);
        }
    }
    build(names, &faces)
}

/// The equator `x+ y+ x- y-` of [`octahedron`].
pub fn equator() -> SimplicialComplex {
    let names = ["x+", "y+", "x-", "y-"].map(String::from).to_vec();
    let edges: Vec<Vec<usize>> = (0..4).map(|i| vec![i, (i + 1) % 4]).collect();
    build(names, &edges)
}

/// Hexagon: a circle on vertices `0..6`.
pub fn hexagon() -> SimplicialComplex {
    let edges: Vec<Vec<usize>> = (0..6).map(|i| vec![i, (i + 1) % 6]).collect();
    build(numbered(6), &edges)
}

/// The 7-vertex torus: triangles `{i, i+1, i+3}` and `{i, i+2, i+3}` mod 7.
pub fn torus() -> SimplicialComplex {
    let mut faces = Vec::new();
    for i in 0..7 {
        faces.push(vec![i, (i + 1) % 7, (i + 3) % 7]);
        faces.push(vec![i, (i + 2) % 7, (i + 3) % 7]);
    }
    build(numbered(7), &faces)
}

/// The circle `0-1-2-...-6` on the edges of difference one in [`torus`].
/// It represents a primitive class in the first homology of the torus.
pub fn factor_circle() -> SimplicialComplex {
    let edges: Vec<Vec<usize>> = (0..7).map(|i| vec![i, (i + 1) % 7]).collect();
    build(numbered(7), &edges)
}

/// Klein bottle from a 3x3 grid: the sides are glued straight, the top to
/// the bottom with a flip.
pub fn klein_bottle() -> SimplicialComplex {
    let m = 3;
    let id = |x: usize, y: usize| -> usize {
        let (x, y) = if y == m {
            ((m - x % m) % m, 0)
        } else {
            (x % m, y)
        };
        y * m + x
    };
    let names = (0..m * m).map(|i| format!("k{}{}", i % m, i / m)).collect();
    let mut faces = Vec::new();
    for y in 0..m {
        for x in 0..m {
            faces.push(vec![id(x, y), id(x + 1, y), id(x + 1, y + 1)]);
            faces.push(vec![id(x, y), id(x, y + 1), id(x + 1, y + 1)]);
        }
    }
    build(names, &faces)
}

/// Two tetrahedron boundaries sharing the vertex `c`, which is a singular
/// point of codimension 2: a model of two complex lines crossing in a
/// projective plane, each closed up to a sphere.
pub fn crossing_spheres() -> StratifiedComplex {
    let names = ["c", "a1", "a2", "a3", "b1", "b2", "b3"]
        .map(String::from)
        .to_vec();
    let mut faces = Vec::new();
    for block in [[0, 1, 2, 3], [0, 4, 5, 6]] {
        for skip in 0..4 {
            faces.push(
                block
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &v)| v)
                    .collect(),
            );
        }
    }
    let k = build(names, &faces);
    StratifiedComplex::from_named(k, &[(2, vec![vec!["c"]])]).expect("c is a vertex")
}

fn suspend(k: SimplicialComplex) -> StratifiedComplex {
    suspension(&StratifiedComplex::unstratified(k), "N", "S").expect("corpus bases are nonempty")
}

/// Suspension of [`torus`] with apexes `N`, `S` (codimension 3).
pub fn suspended_torus() -> StratifiedComplex {
    suspend(torus())
}

/// Suspension of [`octahedron`] with apexes `N`, `S`: a 3-sphere.
pub fn suspended_sphere() -> StratifiedComplex {
    suspend(octahedron())
}

/// Suspension of [`equator`], a subcomplex of [`suspended_sphere`].
pub fn suspended_equator() -> StratifiedComplex {
    suspend(equator())
}

/// Suspension of [`factor_circle`], a subcomplex of [`suspended_torus`].
pub fn suspended_factor_circle() -> StratifiedComplex {
    suspend(factor_circle())
}

/// The flag octahedron ⊃ equator ⊃ point `x+`.
pub fn sphere_flag() -> Vec<StratifiedComplex> {
    let point = build(vec!["x+".to_string()], &[]);
    vec![
        StratifiedComplex::unstratified(octahedron()),
        StratifiedComplex::unstratified(equator()),
        StratifiedComplex::unstratified(point),
    ]
}

/// The flag suspended torus ⊃ suspended factor circle.
pub fn torus_flag() -> Vec<StratifiedComplex> {
    vec![suspended_torus(), suspended_factor_circle()]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::validate;
    use crate::exactla::{homology_dims, GradedDims};

    fn betti(k: &SimplicialComplex) -> GradedDims {
        homology_dims(&k.chain_complex())
    }

    #[test]
    fn corpus_homology() {
        assert_eq!(betti(&octahedron()), GradedDims(vec![1, 0, 1]));
        assert_eq!(betti(&hexagon()), GradedDims(vec![1, 1]));
        assert_eq!(betti(&equator()), GradedDims(vec![1, 1]));
        assert_eq!(betti(&factor_circle()), GradedDims(vec![1, 1]));
    }

    #[test]
    fn klein_bottle_is_a_closed_surface_with_rational_homology_of_a_circle() {
        let k = klein_bottle();
        assert_eq!(k.count(0), 9);
        assert_eq!(k.count(2), 18);
        assert_eq!(k.euler_characteristic(), 0);
        let r = validate(&StratifiedComplex::unstratified(k.clone()));
        assert!(r.is_clean() && r.boundary_faces.is_empty(), "{r:?}");
        assert_eq!(betti(&k), GradedDims(vec![1, 1, 0]));
    }

    #[test]
    fn pairs_are_subcomplexes() {
        assert!(torus().contains_complex(&factor_circle()));
        assert!(octahedron().contains_complex(&equator()));
        assert!(suspended_torus()
            .complex()
            .contains_complex(suspended_factor_circle().complex()));
        assert!(suspended_sphere()
            .complex()
            .contains_complex(suspended_equator().complex()));
    }

    #[test]
    fn crossing_spheres_is_clean() {
        let x = crossing_spheres();
        assert!(validate(&x).is_clean());
        assert_eq!(betti(x.complex()), GradedDims(vec![1, 0, 2]));
    }
}
