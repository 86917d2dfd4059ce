use std::fmt;

/// An unoriented simplex: a strictly increasing list of vertex ids.
///
/// The canonical orientation of a simplex is the order of its vertex ids.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex(Vec<usize>);

impl Simplex {
    /// Builds a simplex from vertices in any order and returns the sign of
    /// the sorting permutation, i.e. the orientation of the given order
    /// relative to the canonical one. `None` on a repeated vertex.
    pub fn oriented(mut vertices: Vec<usize>) -> Option<(Simplex, i64)> {
        if vertices.is_empty() {
            return None;
        }
        let sign = permutation_sign(&vertices);
        vertices.sort_unstable();
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        Some((Simplex(vertices), sign))
    }

    /// Builds a simplex from sorted, distinct vertex ids.
    pub fn from_sorted(vertices: Vec<usize>) -> Simplex {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Simplex(vertices)
    }

    pub fn vertex(v: usize) -> Simplex {
        Simplex(vec![v])
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_face_of(&self, other: &Simplex) -> bool {
        self.0.iter().all(|v| other.contains_vertex(*v))
    }

    /// Codimension-one faces with their boundary signs `(-1)^i`.
    pub fn boundary(&self) -> Vec<(Simplex, i64)> {
        if self.0.len() == 1 {
            return Vec::new();
        }
        (0..self.0.len())
            .map(|i| {
                let mut f = self.0.clone();
                f.remove(i);
                (Simplex(f), if i % 2 == 0 { 1 } else { -1 })
            })
            .collect()
    }

    /// All nonempty faces, including the simplex itself.
    pub fn faces(&self) -> Vec<Simplex> {
        let n = self.0.len();
        (1u64..(1 << n))
            .map(|mask| {
                Simplex(
                    (0..n)
                        .filter(|i| mask & (1 << i) != 0)
                        .map(|i| self.0[i])
                        .collect(),
                )
            })
            .collect()
    }

    /// The simplex with `v` removed, or `None` if `v` is not a vertex or the
    /// result would be empty.
    pub fn without(&self, v: usize) -> Option<Simplex> {
        let pos = self.0.binary_search(&v).ok()?;
        if self.0.len() == 1 {
            return None;
        }
        let mut f = self.0.clone();
        f.remove(pos);
        Some(Simplex(f))
    }

    /// Join with a vertex not in the simplex, canonical orientation.
    pub fn with(&self, v: usize) -> Option<Simplex> {
        match self.0.binary_search(&v) {
            Ok(_) => None,
            Err(pos) => {
                let mut f = self.0.clone();
                f.insert(pos, v);
                Some(Simplex(f))
            }
        }
    }

    /// Relabels vertices through `map` and returns the reoriented simplex.
    pub fn relabel(&self, map: impl Fn(usize) -> Option<usize>) -> Option<(Simplex, i64)> {
        let vs: Option<Vec<usize>> = self.0.iter().map(|&v| map(v)).collect();
        Simplex::oriented(vs?)
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Sign of the permutation that sorts `v` (distinct entries assumed).
pub fn permutation_sign(v: &[usize]) -> i64 {
    let mut inversions = 0usize;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] > v[j] {
                inversions += 1;
            }
        }
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orientation_sign_follows_permutation_parity() {
        assert_eq!(Simplex::oriented(vec![0, 1, 2]).unwrap().1, 1);
        assert_eq!(Simplex::oriented(vec![1, 0, 2]).unwrap().1, -1);
        assert_eq!(Simplex::oriented(vec![2, 0, 1]).unwrap().1, 1);
        assert!(Simplex::oriented(vec![1, 1]).is_none());
    }

    #[test]
    fn faces_of_triangle() {
        let t = Simplex::from_sorted(vec![0, 1, 2]);
        assert_eq!(t.faces().len(), 7);
        let b = t.boundary();
        assert_eq!(b[0], (Simplex::from_sorted(vec![1, 2]), 1));
        assert_eq!(b[1], (Simplex::from_sorted(vec![0, 2]), -1));
    }
}
