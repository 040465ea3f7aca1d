//! Sparse integer matrices.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

/// A sparse vector: strictly increasing indices, no stored zeros.
pub type SparseVec = Vec<(usize, BigInt)>;

/// Sparse integer matrix stored column by column.
///
/// Columns are sorted by row index and never hold explicit zeros, so two
/// matrices are equal exactly when their entries agree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    columns: Vec<SparseVec>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, columns: vec![Vec::new(); cols] }
    }

    pub fn identity(n: usize) -> Self {
        let columns = (0..n).map(|i| vec![(i, BigInt::one())]).collect();
        IntMatrix { rows: n, cols: n, columns }
    }

    /// Builds a matrix from row-major small integers.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut m = IntMatrix::zeros(nrows, ncols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), ncols, "ragged rows");
            for (j, &v) in row.iter().enumerate() {
                if v != 0 {
                    m.columns[j].push((i, BigInt::from(v)));
                }
            }
        }
        m
    }

    /// Builds a matrix from sparse columns; entries are merged and zeros dropped.
    pub fn from_columns<I, C>(rows: usize, columns: I) -> Self
    where
        I: IntoIterator<Item = C>,
        C: IntoIterator<Item = (usize, BigInt)>,
    {
        let columns: Vec<SparseVec> = columns.into_iter().map(|c| normalize(rows, c)).collect();
        IntMatrix { rows, cols: columns.len(), columns }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, j: usize) -> &SparseVec {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.columns
    }

    pub fn push_column<C: IntoIterator<Item = (usize, BigInt)>>(&mut self, col: C) {
        self.columns.push(normalize(self.rows, col));
        self.cols += 1;
    }

    pub fn get(&self, i: usize, j: usize) -> BigInt {
        let col = &self.columns[j];
        match col.binary_search_by_key(&i, |e| e.0) {
            Ok(k) => col[k].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        assert!(i < self.rows && j < self.cols, "index out of range");
        let col = &mut self.columns[j];
        match col.binary_search_by_key(&i, |e| e.0) {
            Ok(k) => {
                if v.is_zero() {
                    col.remove(k);
                } else {
                    col[k].1 = v;
                }
            }
            Err(k) => {
                if !v.is_zero() {
                    col.insert(k, (i, v));
                }
            }
        }
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    /// Iterates over `(row, col, value)` in column-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(j, c)| c.iter().map(move |(i, v)| (*i, j, v)))
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut cols: Vec<SparseVec> = vec![Vec::new(); self.rows];
        for (i, j, v) in self.entries() {
            cols[i].push((j, v.clone()));
        }
        IntMatrix { rows: self.cols, cols: self.rows, columns: cols }
    }

    pub fn to_dense(&self) -> Vec<Vec<BigInt>> {
        let mut d = vec![vec![BigInt::zero(); self.cols]; self.rows];
        for (i, j, v) in self.entries() {
            d[i][j] = v.clone();
        }
        d
    }

    pub fn mul_vec(&self, x: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(x.len(), self.cols, "dimension mismatch");
        let mut y = vec![BigInt::zero(); self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            if x[j].is_zero() {
                continue;
            }
            for (i, v) in col {
                y[*i] += v * &x[j];
            }
        }
        y
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let columns = other.columns.iter().map(|oc| {
            let mut acc: BTreeMap<usize, BigInt> = BTreeMap::new();
            for (k, b) in oc {
                for (i, a) in &self.columns[*k] {
                    *acc.entry(*i).or_default() += a * b;
                }
            }
            acc.into_iter()
        });
        IntMatrix::from_columns(self.rows, columns)
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hcat(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.rows, other.rows, "dimension mismatch");
        let mut columns = self.columns.clone();
        columns.extend(other.columns.iter().cloned());
        IntMatrix { rows: self.rows, cols: columns.len(), columns }
    }

    /// Returns the submatrix keeping only the listed rows (renumbered in order).
    pub fn select_rows(&self, keep: &[usize]) -> IntMatrix {
        let mut map = vec![usize::MAX; self.rows];
        for (new, &old) in keep.iter().enumerate() {
            map[old] = new;
        }
        let columns = self.columns.iter().map(|c| {
            c.iter()
                .filter(|(i, _)| map[*i] != usize::MAX)
                .map(|(i, v)| (map[*i], v.clone()))
                .collect::<Vec<_>>()
        });
        IntMatrix::from_columns(keep.len(), columns)
    }
}

fn normalize<C: IntoIterator<Item = (usize, BigInt)>>(rows: usize, col: C) -> SparseVec {
    let mut acc: BTreeMap<usize, BigInt> = BTreeMap::new();
    for (i, v) in col {
        assert!(i < rows, "row index {i} out of range {rows}");
        *acc.entry(i).or_default() += v;
    }
    acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.to_dense() {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Dense vector helpers shared across the crate.
pub fn dense_from_sparse(len: usize, v: &[(usize, BigInt)]) -> Vec<BigInt> {
    let mut d = vec![BigInt::zero(); len];
    for (i, x) in v {
        d[*i] += x;
    }
    d
}

pub fn dense_from_i64(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn sparse_dot(row: &[(usize, BigInt)], x: &[BigInt]) -> BigInt {
    let mut s = BigInt::zero();
    for (j, u) in row {
        if !x[*j].is_zero() {
            s += u * &x[*j];
        }
    }
    s
}
