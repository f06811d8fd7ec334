//! Minimal sparse matrix support: coordinate-format accumulation,
//! compressed-row storage with matrix-vector products, and a direct LU
//! solver backed by `faer`.

use nalgebra::DMatrix;

use crate::error::{DgError, Result};

/// Coordinate-format accumulator for sparse assembly. Duplicate entries
/// are summed on conversion to CSR.
#[derive(Debug, Clone)]
pub struct CooMatrix {
    pub nrows: usize,
    pub ncols: usize,
    entries: Vec<(usize, usize, f64)>,
}

impl CooMatrix {
    pub fn new(nrows: usize, ncols: usize) -> CooMatrix {
        CooMatrix { nrows, ncols, entries: Vec::new() }
    }

    pub fn push(&mut self, row: usize, col: usize, value: f64) {
        debug_assert!(row < self.nrows && col < self.ncols);
        if value != 0.0 {
            self.entries.push((row, col, value));
        }
    }

    /// Accumulate a dense block with its top-left corner at `(row0, col0)`.
    pub fn push_block(&mut self, row0: usize, col0: usize, block: &DMatrix<f64>, scale: f64) {
        for j in 0..block.ncols() {
            for i in 0..block.nrows() {
                self.push(row0 + i, col0 + j, scale * block[(i, j)]);
            }
        }
    }

    pub fn to_csr(mut self) -> CsrMatrix {
        self.entries.sort_unstable_by_key(|&(i, j, _)| (i, j));
        let mut row_counts = vec![0usize; self.nrows];
        let mut col_idx = Vec::with_capacity(self.entries.len());
        let mut values: Vec<f64> = Vec::with_capacity(self.entries.len());
        let mut last = None;
        for &(i, j, v) in &self.entries {
            if last == Some((i, j)) {
                *values.last_mut().unwrap() += v;
            } else {
                col_idx.push(j);
                values.push(v);
                row_counts[i] += 1;
                last = Some((i, j));
            }
        }
        let mut row_ptr = vec![0usize; self.nrows + 1];
        for i in 0..self.nrows {
            row_ptr[i + 1] = row_ptr[i] + row_counts[i];
        }
        CsrMatrix {
            nrows: self.nrows,
            ncols: self.ncols,
            row_ptr,
            col_idx,
            values,
        }
    }
}

/// Compressed sparse row matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct CsrMatrix {
    pub nrows: usize,
    pub ncols: usize,
    pub row_ptr: Vec<usize>,
    pub col_idx: Vec<usize>,
    pub values: Vec<f64>,
}

impl CsrMatrix {
    pub fn nnz(&self) -> usize {
        self.values.len()
    }

    /// `y = self * x`.
    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.ncols);
        let mut y = vec![0.0; self.nrows];
        for i in 0..self.nrows {
            let mut acc = 0.0;
            for idx in self.row_ptr[i]..self.row_ptr[i + 1] {
                acc += self.values[idx] * x[self.col_idx[idx]];
            }
            y[i] = acc;
        }
        y
    }

    /// Linear combination of conforming sparse matrices.
    pub fn linear_combination(terms: &[(f64, &CsrMatrix)]) -> CsrMatrix {
        assert!(!terms.is_empty());
        let (nrows, ncols) = (terms[0].1.nrows, terms[0].1.ncols);
        let mut coo = CooMatrix::new(nrows, ncols);
        for &(c, m) in terms {
            assert_eq!((m.nrows, m.ncols), (nrows, ncols));
            for i in 0..m.nrows {
                for idx in m.row_ptr[i]..m.row_ptr[i + 1] {
                    coo.push(i, m.col_idx[idx], c * m.values[idx]);
                }
            }
        }
        coo.to_csr()
    }

    pub fn to_dense(&self) -> DMatrix<f64> {
        let mut out = DMatrix::zeros(self.nrows, self.ncols);
        for i in 0..self.nrows {
            for idx in self.row_ptr[i]..self.row_ptr[i + 1] {
                out[(i, self.col_idx[idx])] += self.values[idx];
            }
        }
        out
    }
}

/// Sparse LU factorization (with fill-reducing ordering) of a square matrix.
pub struct SparseLu {
    lu: faer::sparse::linalg::solvers::Lu<usize, f64>,
    n: usize,
}

impl SparseLu {
    pub fn new(a: &CsrMatrix) -> Result<SparseLu> {
        use faer::sparse::{SparseColMat, Triplet};
        if a.nrows != a.ncols {
            return Err(DgError::InvalidArgument("LU requires a square matrix".into()));
        }
        let mut triplets = Vec::with_capacity(a.nnz());
        for i in 0..a.nrows {
            for idx in a.row_ptr[i]..a.row_ptr[i + 1] {
                triplets.push(Triplet::new(i, a.col_idx[idx], a.values[idx]));
            }
        }
        let mat = SparseColMat::try_new_from_triplets(a.nrows, a.ncols, &triplets)
            .map_err(|e| DgError::NumericalFailure(format!("sparse conversion failed: {e:?}")))?;
        let lu = mat
            .sp_lu()
            .map_err(|e| DgError::NumericalFailure(format!("sparse LU failed: {e:?}")))?;
        Ok(SparseLu { lu, n: a.nrows })
    }

    pub fn solve(&self, rhs: &[f64]) -> Vec<f64> {
        use faer::linalg::solvers::Solve as _;
        assert_eq!(rhs.len(), self.n);
        let b = faer::Mat::from_fn(self.n, 1, |i, _| rhs[i]);
        let x = self.lu.solve(&b);
        (0..self.n).map(|i| x[(i, 0)]).collect()
    }
}
