//! Dense matrices over a Bézout ring, row-major.
//!
//! Shapes are validated with assertions: matrix arithmetic is an internal
//! building block and a shape error is a programming error, not an input
//! error. All operations are pure.

use std::fmt;

use num_traits::Zero;

use crate::fraction::Fraction;
use crate::ring::BezoutRing;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    entries: Vec<R>,
}

impl<R: BezoutRing> Matrix<R> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix { rows, cols, entries }
    }

    /// Builds from row vectors; all rows must have equal length.
    /// An empty list yields the 0×0 matrix.
    pub fn from_rows(rows: Vec<Vec<R>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let row_count = rows.len();
        Matrix {
            rows: row_count,
            cols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn row_vector(entries: Vec<R>) -> Self {
        Matrix {
            rows: 1,
            cols: entries.len(),
            entries,
        }
    }

    pub fn column_vector(entries: Vec<R>) -> Self {
        Matrix {
            rows: entries.len(),
            cols: 1,
            entries,
        }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| R::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { R::one() } else { R::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, row: usize, col: usize) -> &R {
        assert!(row < self.rows && col < self.cols, "index out of bounds");
        &self.entries[row * self.cols + col]
    }

    pub fn row(&self, row: usize) -> &[R] {
        assert!(row < self.rows, "row out of bounds");
        &self.entries[row * self.cols..(row + 1) * self.cols]
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "inner dimensions differ");
        Self::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = R::zero();
            for k in 0..self.cols {
                acc = acc + self.at(i, k).clone() * rhs.at(k, j).clone();
            }
            acc
        })
    }

    /// Vertical concatenation.
    pub fn stack(&self, below: &Self) -> Self {
        assert_eq!(self.cols, below.cols, "column counts differ");
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&below.entries);
        Matrix {
            rows: self.rows + below.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn top_rows(&self, n: usize) -> Self {
        assert!(n <= self.rows);
        Matrix {
            rows: n,
            cols: self.cols,
            entries: self.entries[..n * self.cols].to_vec(),
        }
    }

    pub fn left_columns(&self, n: usize) -> Self {
        assert!(n <= self.cols);
        Self::from_fn(self.rows, n, |i, j| self.at(i, j).clone())
    }

    /// Kronecker product; block `(i, j)` of the result is
    /// `self[i][j] * rhs`, i.e. index `(i, k)` maps to `i * rhs.rows + k`.
    pub fn kronecker(&self, rhs: &Self) -> Self {
        Self::from_fn(self.rows * rhs.rows, self.cols * rhs.cols, |i, j| {
            let (bi, ii) = (i / rhs.rows, i % rhs.rows);
            let (bj, jj) = (j / rhs.cols, j % rhs.cols);
            self.at(bi, bj).clone() * rhs.at(ii, jj).clone()
        })
    }

    /// Laplace expansion along the first column. Exact and fine at the
    /// small dimensions this crate works with.
    pub fn determinant(&self) -> R {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        match self.rows {
            0 => R::one(),
            1 => self.at(0, 0).clone(),
            2 => {
                self.at(0, 0).clone() * self.at(1, 1).clone()
                    - self.at(0, 1).clone() * self.at(1, 0).clone()
            }
            n => {
                let mut acc = R::zero();
                for i in 0..n {
                    if self.at(i, 0).is_zero() {
                        continue;
                    }
                    let minor = self.minor(i, 0).determinant();
                    let term = self.at(i, 0).clone() * minor;
                    acc = if i % 2 == 0 { acc + term } else { acc - term };
                }
                acc
            }
        }
    }

    /// The matrix with row `row` and column `col` removed.
    pub fn minor(&self, row: usize, col: usize) -> Self {
        assert!(self.rows > 0 && self.cols > 0);
        Self::from_fn(self.rows - 1, self.cols - 1, |i, j| {
            let si = if i < row { i } else { i + 1 };
            let sj = if j < col { j } else { j + 1 };
            self.at(si, sj).clone()
        })
    }

    pub fn map<S: BezoutRing>(&self, f: impl FnMut(&R) -> S) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn to_fractions(&self) -> Matrix<Fraction<R>> {
        self.map(|e| Fraction::from_ring(e.clone()))
    }

    pub(crate) fn scale_row(&mut self, row: usize, factor: &R) {
        for j in 0..self.cols {
            let idx = row * self.cols + j;
            self.entries[idx] = self.entries[idx].clone() * factor.clone();
        }
    }

    /// Replaces rows `(i, k)` by `(t0*row_i + t1*row_k, t2*row_i + t3*row_k)`.
    pub(crate) fn transform_row_pair(&mut self, i: usize, k: usize, t: &[R; 4]) {
        assert_ne!(i, k);
        for j in 0..self.cols {
            let a = self.at(i, j).clone();
            let b = self.at(k, j).clone();
            self.entries[i * self.cols + j] = t[0].clone() * a.clone() + t[1].clone() * b.clone();
            self.entries[k * self.cols + j] = t[2].clone() * a + t[3].clone() * b;
        }
    }
}

impl<R: BezoutRing> fmt::Display for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let rendered: Vec<String> = self.row(i).iter().map(R::to_string).collect();
            writeln!(f, "[{}]", rendered.join(", "))?;
        }
        Ok(())
    }
}
