//! Exact rational linear algebra: sparse matrices, reduced row-echelon forms,
//! kernels and the subspace lattice.
//!
//! Everything is deterministic: pivots are always the first nonzero entry in
//! column order, so echelon data (and hence every downstream report) is
//! reproducible byte-for-byte.

use crate::scalar::Scalar;
use num_traits::Zero;
use std::collections::BTreeMap;
use thiserror::Error;

/// A sparse vector: `(index, coefficient)` pairs sorted by index, no zeros.
pub type SparseVec = Vec<(usize, Scalar)>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExactLinError {
    #[error("subspaces live in different ambient dimensions: {0} vs {1}")]
    MismatchedAmbient(usize, usize),
}

/// `a + c*b` for sorted sparse vectors, dropping cancellations.
pub fn add_scaled(a: &SparseVec, c: &Scalar, b: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        match (a.get(i), b.get(j)) {
            (Some((ia, va)), Some((ib, vb))) => {
                if ia < ib {
                    out.push((*ia, va.clone()));
                    i += 1;
                } else if ib < ia {
                    let v = c * vb;
                    if !v.is_zero() {
                        out.push((*ib, v));
                    }
                    j += 1;
                } else {
                    let v = va + c * vb;
                    if !v.is_zero() {
                        out.push((*ia, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
            (Some((ia, va)), None) => {
                out.push((*ia, va.clone()));
                i += 1;
            }
            (None, Some((ib, vb))) => {
                let v = c * vb;
                if !v.is_zero() {
                    out.push((*ib, v));
                }
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

pub fn dense_to_sparse(v: &[Scalar]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

pub fn sparse_to_dense(v: &SparseVec, dim: usize) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); dim];
    for (i, c) in v {
        out[*i] = c.clone();
    }
    out
}

/// A sparse matrix over the rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    entries: BTreeMap<(usize, usize), Scalar>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn set(&mut self, row: usize, col: usize, value: Scalar) {
        assert!(row < self.rows && col < self.cols);
        if value.is_zero() {
            self.entries.remove(&(row, col));
        } else {
            self.entries.insert((row, col), value);
        }
    }

    pub fn add_to(&mut self, row: usize, col: usize, value: &Scalar) {
        if value.is_zero() {
            return;
        }
        let e = self
            .entries
            .entry((row, col))
            .or_insert_with(Scalar::zero);
        *e += value;
        if e.is_zero() {
            self.entries.remove(&(row, col));
        }
    }

    pub fn get(&self, row: usize, col: usize) -> Scalar {
        self.entries
            .get(&(row, col))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>, cols: usize) -> Self {
        let mut m = Matrix::new(rows.len(), cols);
        for (i, r) in rows.into_iter().enumerate() {
            assert_eq!(r.len(), cols);
            for (j, v) in r.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    /// Row-major sparse view.
    pub fn sparse_rows(&self) -> Vec<SparseVec> {
        let mut rows = vec![Vec::new(); self.rows];
        for ((r, c), v) in &self.entries {
            rows[*r].push((*c, v.clone()));
        }
        rows
    }

    /// `self * v` for a dense vector `v`.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        let mut out = vec![Scalar::zero(); self.rows];
        for ((r, c), a) in &self.entries {
            if !v[*c].is_zero() {
                out[*r] += a * &v[*c];
            }
        }
        out
    }
}

/// A linear subspace of `K^ambient_dim`, stored as a reduced row-echelon
/// basis. Two subspaces are equal iff their stored data is equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    pub ambient_dim: usize,
    pub basis: Vec<SparseVec>,
    pub pivot_cols: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Vec::new(),
            pivot_cols: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        let basis = (0..ambient_dim)
            .map(|i| vec![(i, Scalar::from_integer(1.into()))])
            .collect();
        Subspace {
            ambient_dim,
            basis,
            pivot_cols: (0..ambient_dim).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Echelonizes a spanning set.
    pub fn from_sparse_vectors(ambient_dim: usize, vectors: Vec<SparseVec>) -> Self {
        let (basis, pivot_cols) = rref(vectors);
        Subspace {
            ambient_dim,
            basis,
            pivot_cols,
        }
    }

    pub fn from_vectors(ambient_dim: usize, vectors: Vec<Vec<Scalar>>) -> Self {
        Self::from_sparse_vectors(
            ambient_dim,
            vectors.iter().map(|v| dense_to_sparse(v)).collect(),
        )
    }

    /// Reduces `v` modulo the basis; the result has zeros at all pivots.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut r = v.clone();
        for (row, p) in self.basis.iter().zip(&self.pivot_cols) {
            if let Ok(k) = r.binary_search_by_key(p, |(i, _)| *i) {
                let c = -r[k].1.clone();
                r = add_scaled(&r, &c, row);
            }
        }
        r
    }

    pub fn contains_vector(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains_vector(v))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, ExactLinError> {
        self.check_ambient(other)?;
        let mut vectors = self.basis.clone();
        vectors.extend(other.basis.iter().cloned());
        Ok(Subspace::from_sparse_vectors(self.ambient_dim, vectors))
    }

    /// Zassenhaus: echelonize `[a|a]` and `[b|0]`; rows whose left block
    /// vanished have right blocks spanning the intersection.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, ExactLinError> {
        self.check_ambient(other)?;
        let n = self.ambient_dim;
        let mut stacked: Vec<SparseVec> = Vec::new();
        for v in &self.basis {
            let mut row = v.clone();
            row.extend(v.iter().map(|(i, c)| (i + n, c.clone())));
            stacked.push(row);
        }
        for v in &other.basis {
            stacked.push(v.clone());
        }
        let (rows, _) = rref(stacked);
        let vectors = rows
            .into_iter()
            .filter(|r| r.first().is_none_or(|(i, _)| *i >= n))
            .map(|r| r.into_iter().map(|(i, c)| (i - n, c)).collect())
            .collect();
        Ok(Subspace::from_sparse_vectors(n, vectors))
    }

    /// `dim(self + other) - dim(other)`.
    pub fn quotient_dim(&self, other: &Subspace) -> Result<usize, ExactLinError> {
        Ok(self.sum(other)?.dim() - other.dim())
    }

    fn check_ambient(&self, other: &Subspace) -> Result<(), ExactLinError> {
        if self.ambient_dim != other.ambient_dim {
            return Err(ExactLinError::MismatchedAmbient(
                self.ambient_dim,
                other.ambient_dim,
            ));
        }
        Ok(())
    }
}

/// Reduced row-echelon form of a spanning set. Returns the basis rows sorted
/// by pivot column together with the pivot columns.
pub fn rref(vectors: Vec<SparseVec>) -> (Vec<SparseVec>, Vec<usize>) {
    // basis kept sorted by pivot column
    let mut basis: Vec<SparseVec> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for v in vectors {
        let mut r = v;
        loop {
            let Some((lead, _)) = r.first().cloned() else {
                break;
            };
            match pivots.binary_search(&lead) {
                Ok(k) => {
                    let c = -r[0].1.clone();
                    r = add_scaled(&r, &c, &basis[k]);
                }
                Err(k) => {
                    let inv = r[0].1.clone();
                    for (_, c) in r.iter_mut() {
                        *c /= &inv;
                    }
                    // clear the new pivot column from existing rows
                    for row in basis.iter_mut() {
                        if let Ok(p) = row.binary_search_by_key(&lead, |(i, _)| *i) {
                            let c = -row[p].1.clone();
                            *row = add_scaled(row, &c, &r);
                        }
                    }
                    basis.insert(k, r);
                    pivots.insert(k, lead);
                    break;
                }
            }
        }
    }
    (basis, pivots)
}

/// Rank and exact null space of `m`.
pub fn echelon_kernel(m: &Matrix) -> (usize, Subspace) {
    let (basis, pivots) = rref(m.sparse_rows());
    let rank = basis.len();
    let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
    let mut kernel_vectors: Vec<SparseVec> = Vec::new();
    for free in 0..m.cols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v: Vec<(usize, Scalar)> = vec![(free, Scalar::from_integer(1.into()))];
        for (row, p) in basis.iter().zip(&pivots) {
            if let Ok(k) = row.binary_search_by_key(&free, |(i, _)| *i) {
                v.push((*p, -row[k].1.clone()));
            }
        }
        v.sort_by_key(|(i, _)| *i);
        kernel_vectors.push(v);
    }
    (rank, Subspace::from_sparse_vectors(m.cols, kernel_vectors))
}
