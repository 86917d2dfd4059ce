//! Sparse Gauss-Jordan elimination over the rationals.
//!
//! Columns are processed left to right and every column that can carry a
//! pivot gets one, so the pivot set is the lexicographically smallest set of
//! independent columns. The reduced form is unique, which is what makes
//! kernel bases and solutions reproducible.

use std::collections::BTreeSet;

use num_traits::{One, Zero};

use super::matrix::{axpy, Rational, RationalMatrix, SparseVector};

/// Reduced row echelon form of a (possibly augmented) row system.
pub(crate) struct Reduction {
    rows: Vec<SparseVector>,
    /// `(pivot column, row index)` in increasing column order.
    pivots: Vec<(usize, usize)>,
    is_pivot_row: Vec<bool>,
    col_rows: Vec<BTreeSet<usize>>,
}

impl Reduction {
    /// Reduces `rows` (each a sparse row over `width` columns), choosing
    /// pivots only among the first `pivot_limit` columns.
    pub(crate) fn new(rows: Vec<SparseVector>, width: usize, pivot_limit: usize) -> Self {
        let mut col_rows = vec![BTreeSet::new(); width];
        for (r, row) in rows.iter().enumerate() {
            for &c in row.keys() {
                col_rows[c].insert(r);
            }
        }
        let n = rows.len();
        let mut red = Reduction {
            rows,
            pivots: Vec::new(),
            is_pivot_row: vec![false; n],
            col_rows,
        };
        for c in 0..pivot_limit.min(width) {
            red.eliminate_column(c);
        }
        red
    }

    fn eliminate_column(&mut self, c: usize) {
        // sparsest candidate keeps fill-in down; ties go to the lowest row
        let pivot = self.col_rows[c]
            .iter()
            .copied()
            .filter(|&r| !self.is_pivot_row[r])
            .min_by_key(|&r| (self.rows[r].len(), r));
        let Some(p) = pivot else { return };

        let inv = Rational::one() / &self.rows[p][&c];
        if !inv.is_one() {
            for v in self.rows[p].values_mut() {
                *v *= &inv;
            }
        }
        let pivot_row = self.rows[p].clone();
        let targets: Vec<usize> = self.col_rows[c]
            .iter()
            .copied()
            .filter(|&r| r != p)
            .collect();
        for r in targets {
            let factor = -self.rows[r][&c].clone();
            self.add_scaled_row(r, &factor, &pivot_row);
        }
        self.is_pivot_row[p] = true;
        self.pivots.push((c, p));
    }

    fn add_scaled_row(&mut self, r: usize, factor: &Rational, src: &SparseVector) {
        let row = &mut self.rows[r];
        for (&k, v) in src {
            let delta = factor * v;
            match row.get_mut(&k) {
                Some(cur) => {
                    *cur += delta;
                    if cur.is_zero() {
                        row.remove(&k);
                        self.col_rows[k].remove(&r);
                    }
                }
                None => {
                    row.insert(k, delta);
                    self.col_rows[k].insert(r);
                }
            }
        }
    }

    pub(crate) fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub(crate) fn pivot_columns(&self) -> Vec<usize> {
        self.pivots.iter().map(|&(c, _)| c).collect()
    }

    /// Null space basis of the first `cols` columns, one vector per free
    /// column (in increasing order), normalized to 1 at that column.
    pub(crate) fn kernel(&self, cols: usize) -> (Vec<usize>, Vec<SparseVector>) {
        let pivot_set: BTreeSet<usize> = self.pivots.iter().map(|&(c, _)| c).collect();
        let free: Vec<usize> = (0..cols).filter(|c| !pivot_set.contains(c)).collect();
        let slot: std::collections::HashMap<usize, usize> =
            free.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let mut basis: Vec<SparseVector> = free
            .iter()
            .map(|&f| SparseVector::from([(f, Rational::one())]))
            .collect();
        for &(pc, r) in &self.pivots {
            for (&j, v) in self.rows[r].range(..cols) {
                if let Some(&i) = slot.get(&j) {
                    basis[i].insert(pc, -v.clone());
                }
            }
        }
        (free, basis)
    }

    /// Solution of the system whose right-hand side sits in column `rhs_col`,
    /// with every free variable set to zero. `None` when inconsistent.
    pub(crate) fn solution(&self, rhs_col: usize) -> Option<SparseVector> {
        if self.col_rows[rhs_col]
            .iter()
            .any(|&r| !self.is_pivot_row[r])
        {
            return None;
        }
        let mut x = SparseVector::new();
        for &(c, r) in &self.pivots {
            if let Some(v) = self.rows[r].get(&rhs_col) {
                x.insert(c, v.clone());
            }
        }
        Some(x)
    }
}

pub fn rank(m: &RationalMatrix) -> usize {
    Reduction::new(m.row_vectors(), m.cols(), m.cols()).rank()
}

/// Basis of the null space: `cols - rank` vectors, each mapping to zero.
pub fn kernel_basis(m: &RationalMatrix) -> Vec<SparseVector> {
    Reduction::new(m.row_vectors(), m.cols(), m.cols())
        .kernel(m.cols())
        .1
}

/// Kernel basis together with the free columns; a kernel vector is
/// recovered from its entries at the free columns.
pub(crate) fn kernel_with_free(m: &RationalMatrix) -> (Vec<usize>, Vec<SparseVector>) {
    Reduction::new(m.row_vectors(), m.cols(), m.cols()).kernel(m.cols())
}

/// Indices of the leftmost maximal independent set of columns.
pub fn pivot_columns(m: &RationalMatrix) -> Vec<usize> {
    Reduction::new(m.row_vectors(), m.cols(), m.cols()).pivot_columns()
}

/// Some `x` with `m x = b`, or `None` when `b` is not in the column space.
///
/// The returned solution has zero free variables, so it is the same on
/// every run.
pub fn solve(m: &RationalMatrix, b: &SparseVector) -> Option<SparseVector> {
    solve_many(m, std::slice::from_ref(b)).pop().flatten()
}

/// Solves `m x = b` for several right-hand sides with one elimination.
pub fn solve_many(m: &RationalMatrix, rhs: &[SparseVector]) -> Vec<Option<SparseVector>> {
    let width = m.cols() + rhs.len();
    let mut rows = m.row_vectors();
    for (k, b) in rhs.iter().enumerate() {
        for (&i, v) in b {
            assert!(i < m.rows(), "right-hand side longer than the matrix");
            rows[i].insert(m.cols() + k, v.clone());
        }
    }
    let red = Reduction::new(rows, width, m.cols());
    (0..rhs.len()).map(|k| red.solution(m.cols() + k)).collect()
}

/// Inverse of a square matrix, `None` when singular.
pub fn inverse(m: &RationalMatrix) -> Option<RationalMatrix> {
    if m.rows() != m.cols() {
        return None;
    }
    let n = m.rows();
    let unit: Vec<SparseVector> = (0..n)
        .map(|i| SparseVector::from([(i, Rational::one())]))
        .collect();
    let cols: Option<Vec<SparseVector>> = solve_many(m, &unit).into_iter().collect();
    RationalMatrix::from_columns(n, cols?).ok()
}

/// Basis of the column space (the pivot columns themselves).
pub fn image_basis(m: &RationalMatrix) -> Vec<SparseVector> {
    pivot_columns(m)
        .into_iter()
        .map(|c| m.column(c).clone())
        .collect()
}

/// Checks `m x == b` exactly.
pub fn satisfies(m: &RationalMatrix, x: &SparseVector, b: &SparseVector) -> bool {
    let mut r = m.mul_vec(x);
    axpy(&mut r, &-Rational::one(), b);
    r.is_empty()
}
