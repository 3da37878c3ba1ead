use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::frame::Frame;

/// Largest frame for which dense `2^N` vectors and `2^N × 2^N` matrices are built.
pub const MAX_DENSE_FRAME_SIZE: usize = 10;

pub(crate) fn ensure_dense(frame: &Frame) -> Result<()> {
    if frame.len() > MAX_DENSE_FRAME_SIZE {
        return Err(Error::FrameTooLargeForDense {
            size: frame.len(),
            max: MAX_DENSE_FRAME_SIZE,
        });
    }
    Ok(())
}

/// Row-major square matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    dim: usize,
    data: Vec<f64>,
}

impl DenseMatrix {
    pub(crate) fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                data.push(f(i, j));
            }
        }
        DenseMatrix { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.data[row * self.dim + col]
    }

    pub fn row(&self, row: usize) -> &[f64] {
        &self.data[row * self.dim..(row + 1) * self.dim]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.data.chunks_exact(self.dim.max(1))
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Row vector times matrix, `out_j = Σ_i v_i M_ij`, summed in ascending `i`.
    ///
    /// # Panics
    /// If `v.len()` differs from the matrix dimension.
    pub fn left_mul(&self, v: &[f64]) -> Vec<f64> {
        assert_eq!(v.len(), self.dim, "vector length must match matrix dimension");
        let mut out = alloc::vec![0.0; self.dim];
        for (vi, row) in v.iter().zip(self.rows()) {
            for (o, m) in out.iter_mut().zip(row) {
                *o += vi * m;
            }
        }
        out
    }
}

/// Largest entrywise absolute difference; `0` for empty input.
pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .fold(0.0, |acc: f64, (x, y)| acc.max((x - y).abs()))
}
