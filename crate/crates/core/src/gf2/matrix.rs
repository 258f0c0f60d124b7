use std::fmt;

use super::affine::solve_affine;
use super::vector::BitVector;
use crate::error::{Error, Result};

/// A dense row-major matrix over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BitVector>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    /// Nonzero rows of the reduced matrix, one per pivot.
    pub matrix: BinaryMatrix,
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `v` against the echelon rows; the result is zero iff `v` is in the row space.
    pub fn reduce(&self, v: &BitVector) -> BitVector {
        let mut r = v.clone();
        for (row, &p) in self.matrix.data.iter().zip(&self.pivots) {
            if r.get(p) {
                r.xor_assign(row);
            }
        }
        r
    }

    pub fn contains(&self, v: &BitVector) -> bool {
        self.reduce(v).is_zero()
    }
}

impl BinaryMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        BinaryMatrix {
            rows,
            cols,
            data: vec![BitVector::zeros(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = BinaryMatrix::zeros(n, n);
        for i in 0..n {
            m.data[i].set(i, true);
        }
        m
    }

    /// Builds a matrix from rows that must all have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<BitVector>) -> Result<Self> {
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != cols) {
            return Err(Error::Dimension(format!(
                "row {i} has length {}, expected {cols}",
                r.len()
            )));
        }
        Ok(BinaryMatrix {
            rows: rows.len(),
            cols,
            data: rows,
        })
    }

    /// Parses rows written as strings of `0`/`1` (spaces ignored).
    pub fn from_strs<S: AsRef<str>>(rows: &[S]) -> Result<Self> {
        let parsed = rows
            .iter()
            .map(|r| r.as_ref().parse::<BitVector>())
            .collect::<Result<Vec<_>>>()?;
        let cols = parsed.first().map_or(0, BitVector::len);
        BinaryMatrix::from_rows(cols, parsed)
    }

    /// Builds a matrix from its columns, each given as a word with row 0 in bit 0.
    pub fn from_column_words(rows: usize, columns: &[u64]) -> Self {
        let mut m = BinaryMatrix::zeros(rows, columns.len());
        for (j, &c) in columns.iter().enumerate() {
            for i in 0..rows {
                if (c >> i) & 1 == 1 {
                    m.data[i].set(j, true);
                }
            }
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn row(&self, i: usize) -> &BitVector {
        &self.data[i]
    }

    pub fn row_vectors(&self) -> &[BitVector] {
        &self.data
    }

    pub fn into_rows(self) -> Vec<BitVector> {
        self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i].get(j)
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.data[i].set(j, value)
    }

    pub fn column(&self, j: usize) -> BitVector {
        let mut c = BitVector::zeros(self.rows);
        for i in 0..self.rows {
            if self.data[i].get(j) {
                c.set(i, true);
            }
        }
        c
    }

    /// Columns as words (row 0 in bit 0); needs at most 64 rows.
    pub fn column_words(&self) -> Vec<u64> {
        assert!(self.rows <= 64);
        let mut cols = vec![0u64; self.cols];
        for (i, row) in self.data.iter().enumerate() {
            for j in row.iter_ones() {
                cols[j] |= 1 << i;
            }
        }
        cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(BitVector::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == BinaryMatrix::identity(self.rows)
    }

    pub fn transpose(&self) -> BinaryMatrix {
        let mut t = BinaryMatrix::zeros(self.cols, self.rows);
        for (i, row) in self.data.iter().enumerate() {
            for j in row.iter_ones() {
                t.data[j].set(i, true);
            }
        }
        t
    }

    /// Matrix product over GF(2).
    pub fn mul(&self, other: &BinaryMatrix) -> Result<BinaryMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self
            .data
            .iter()
            .map(|row| {
                let mut acc = BitVector::zeros(other.cols);
                for j in row.iter_ones() {
                    acc.xor_assign(&other.data[j]);
                }
                acc
            })
            .collect();
        Ok(BinaryMatrix {
            rows: self.rows,
            cols: other.cols,
            data,
        })
    }

    /// `self * self^T`.
    pub fn gram(&self) -> BinaryMatrix {
        let mut g = BinaryMatrix::zeros(self.rows, self.rows);
        for i in 0..self.rows {
            for j in i..self.rows {
                if self.data[i].dot_unchecked(&self.data[j]) {
                    g.data[i].set(j, true);
                    g.data[j].set(i, true);
                }
            }
        }
        g
    }

    /// Reduced row echelon form; pivots are the leftmost nonzero column, taken
    /// from the topmost available row.
    pub fn echelon(&self) -> Echelon {
        let mut rows = self.data.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..self.cols {
            if r == rows.len() {
                break;
            }
            let Some(p) = (r..rows.len()).find(|&i| rows[i].get(col)) else {
                continue;
            };
            rows.swap(r, p);
            let pivot = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && row.get(col) {
                    row.xor_assign(&pivot);
                }
            }
            pivots.push(col);
            r += 1;
        }
        rows.truncate(r);
        Echelon {
            matrix: BinaryMatrix {
                rows: r,
                cols: self.cols,
                data: rows,
            },
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }

    /// Basis of `{x : self * x^T = 0}`, one vector per free column in ascending order.
    pub fn nullspace_basis(&self) -> BinaryMatrix {
        let ech = self.echelon();
        let mut is_pivot = vec![false; self.cols];
        for &p in &ech.pivots {
            is_pivot[p] = true;
        }
        let data: Vec<BitVector> = (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = BitVector::zeros(self.cols);
                v.set(f, true);
                for (row, &p) in ech.matrix.data.iter().zip(&ech.pivots) {
                    if row.get(f) {
                        v.set(p, true);
                    }
                }
                v
            })
            .collect();
        BinaryMatrix {
            rows: data.len(),
            cols: self.cols,
            data,
        }
    }

    /// Finds `x` with `x * self = target`, if one exists.
    pub fn solve_left(&self, target: &BitVector) -> Option<BitVector> {
        assert_eq!(target.len(), self.cols);
        let constraints: Vec<(BitVector, bool)> = (0..self.cols)
            .map(|j| (self.column(j), target.get(j)))
            .collect();
        solve_affine(&constraints, self.rows).map(|s| s.particular)
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &BinaryMatrix) -> Result<BinaryMatrix> {
        if self.rows != other.rows {
            return Err(Error::Dimension(format!(
                "hstack of {} and {} rows",
                self.rows, other.rows
            )));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.concat(b))
            .collect();
        Ok(BinaryMatrix {
            rows: self.rows,
            cols: self.cols + other.cols,
            data,
        })
    }

    /// `self` on top of `other`.
    pub fn vstack(&self, other: &BinaryMatrix) -> Result<BinaryMatrix> {
        if self.cols != other.cols {
            return Err(Error::Dimension(format!(
                "vstack of {} and {} columns",
                self.cols, other.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(BinaryMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Keeps the listed columns, in the listed order.
    pub fn select_columns(&self, cols: &[usize]) -> BinaryMatrix {
        BinaryMatrix {
            rows: self.rows,
            cols: cols.len(),
            data: self.data.iter().map(|r| r.select(cols)).collect(),
        }
    }

    /// Moves column `j` to position `perm[j]`.
    pub fn permute_columns(&self, perm: &[usize]) -> BinaryMatrix {
        BinaryMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|r| r.permuted(perm)).collect(),
        }
    }

    pub fn select_rows(&self, rows: &[usize]) -> BinaryMatrix {
        BinaryMatrix {
            rows: rows.len(),
            cols: self.cols,
            data: rows.iter().map(|&i| self.data[i].clone()).collect(),
        }
    }
}

impl fmt::Display for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.data.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{row}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BinaryMatrix {}x{} [", self.rows, self.cols)?;
        for row in &self.data {
            writeln!(f, "  {row}")?;
        }
        write!(f, "]")
    }
}
