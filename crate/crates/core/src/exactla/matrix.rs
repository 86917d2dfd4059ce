use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Sparse vector: index -> nonzero rational. Zero entries are never stored.
pub type SparseVector = BTreeMap<usize, Rational>;

pub fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(d))
}

/// Parses `"p"`, `"-p"` or `"p/q"`; the result is in lowest terms.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = || Error::Malformed(format!("not a rational number: '{text}'"));
    match text.split_once('/') {
        None => text
            .parse::<BigInt>()
            .map(Rational::from_integer)
            .map_err(|_| bad()),
        Some((p, d)) => {
            let p = p.trim().parse::<BigInt>().map_err(|_| bad())?;
            let d = d.trim().parse::<BigInt>().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, d))
        }
    }
}

/// Adds `factor * src` into `dst`, dropping entries that cancel.
pub fn axpy(dst: &mut SparseVector, factor: &Rational, src: &SparseVector) {
    if factor.is_zero() {
        return;
    }
    for (&i, v) in src {
        let delta = factor * v;
        match dst.get_mut(&i) {
            Some(cur) => {
                *cur += delta;
                if cur.is_zero() {
                    dst.remove(&i);
                }
            }
            None => {
                dst.insert(i, delta);
            }
        }
    }
}

pub fn scaled(v: &SparseVector, factor: &Rational) -> SparseVector {
    if factor.is_zero() {
        return SparseVector::new();
    }
    v.iter().map(|(&i, x)| (i, x * factor)).collect()
}

pub fn to_dense(v: &SparseVector, len: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); len];
    for (&i, x) in v {
        out[i] = x.clone();
    }
    out
}

pub fn from_dense(v: &[Rational]) -> SparseVector {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

/// Exact rational matrix stored column by column.
///
/// Invariants: no stored entry is zero and every row index is `< rows`.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    columns: Vec<SparseVector>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            columns: vec![SparseVector::new(); cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.columns[i].insert(i, Rational::one());
        }
        m
    }

    /// Builds a matrix from sparse columns. Zero entries are dropped.
    pub fn from_columns(rows: usize, columns: Vec<SparseVector>) -> Result<Self> {
        let cols = columns.len();
        let mut clean = Vec::with_capacity(cols);
        for col in columns {
            if let Some((&r, _)) = col.iter().next_back() {
                if r >= rows {
                    return Err(Error::Shape(format!(
                        "row index {r} out of bounds for {rows} rows"
                    )));
                }
            }
            clean.push(col.into_iter().filter(|(_, v)| !v.is_zero()).collect());
        }
        Ok(RationalMatrix {
            rows,
            cols,
            columns: clean,
        })
    }

    /// Builds a matrix from `(row, col, value)` triplets; repeated positions add up.
    pub fn from_triplets(
        rows: usize,
        cols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, Rational)>,
    ) -> Result<Self> {
        let mut m = Self::zeros(rows, cols);
        for (r, c, v) in triplets {
            if r >= rows || c >= cols {
                return Err(Error::Shape(format!(
                    "entry ({r}, {c}) outside a {rows}x{cols} matrix"
                )));
            }
            let single = SparseVector::from([(r, v)]);
            axpy(&mut m.columns[c], &Rational::one(), &single);
        }
        Ok(m)
    }

    pub fn from_rows(rows: &[Vec<Rational>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape("ragged rows".into()));
        }
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    m.columns[j].insert(i, v.clone());
                }
            }
        }
        Ok(m)
    }

    /// Integer convenience constructor, mostly for tests and fixtures.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let rows: Vec<Vec<Rational>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| q(x)).collect())
            .collect();
        Self::from_rows(&rows).expect("rectangular integer rows")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, j: usize) -> &SparseVector {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[SparseVector] {
        &self.columns
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        self.columns[c]
            .get(&r)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        if v.is_zero() {
            self.columns[c].remove(&r);
        } else {
            self.columns[c].insert(r, v);
        }
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(BTreeMap::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(BTreeMap::is_empty)
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> Vec<(usize, usize, Rational)> {
        let mut out: Vec<_> = self
            .columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(&r, v)| (r, c, v.clone())))
            .collect();
        out.sort_by_key(|(r, c, _)| (*r, *c));
        out
    }

    /// Sparse rows, index `i` holding row `i`.
    pub fn row_vectors(&self) -> Vec<SparseVector> {
        let mut rows = vec![SparseVector::new(); self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for (&r, v) in col {
                rows[r].insert(c, v.clone());
            }
        }
        rows
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        let mut out = vec![vec![Rational::zero(); self.cols]; self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for (&r, v) in col {
                out[r][c] = v.clone();
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        RationalMatrix {
            rows: self.cols,
            cols: self.rows,
            columns: self.row_vectors(),
        }
    }

    pub fn mul_vec(&self, v: &SparseVector) -> SparseVector {
        let mut out = SparseVector::new();
        for (&j, x) in v {
            if j < self.cols {
                axpy(&mut out, x, &self.columns[j]);
            }
        }
        out
    }

    pub fn mul(&self, rhs: &RationalMatrix) -> Result<RationalMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let columns = rhs.columns.iter().map(|c| self.mul_vec(c)).collect();
        Ok(RationalMatrix {
            rows: self.rows,
            cols: rhs.cols,
            columns,
        })
    }

    pub fn scale(&self, factor: &Rational) -> RationalMatrix {
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            columns: self.columns.iter().map(|c| scaled(c, factor)).collect(),
        }
    }

    pub fn sub(&self, rhs: &RationalMatrix) -> Result<RationalMatrix> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::Shape(
                "cannot subtract matrices of different shapes".into(),
            ));
        }
        let mut out = self.clone();
        let minus = -Rational::one();
        for (dst, src) in out.columns.iter_mut().zip(&rhs.columns) {
            axpy(dst, &minus, src);
        }
        Ok(out)
    }

    /// Horizontal concatenation `[self | rhs]`.
    pub fn hstack(&self, rhs: &RationalMatrix) -> Result<RationalMatrix> {
        if self.rows != rhs.rows {
            return Err(Error::Shape("hstack with different row counts".into()));
        }
        let mut columns = self.columns.clone();
        columns.extend(rhs.columns.iter().cloned());
        Ok(RationalMatrix {
            rows: self.rows,
            cols: self.cols + rhs.cols,
            columns,
        })
    }

    /// Keeps the listed columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> RationalMatrix {
        RationalMatrix {
            rows: self.rows,
            cols: cols.len(),
            columns: cols.iter().map(|&c| self.columns[c].clone()).collect(),
        }
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalMatrix({}x{})[", self.rows, self.cols)?;
        for (i, row) in self.to_dense().iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        write!(f, "]")
    }
}
