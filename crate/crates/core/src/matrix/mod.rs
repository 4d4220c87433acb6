//! Dense symmetric matrices, permutations, and the Frobenius/trace algebra.

mod eigen;
mod graph;
pub mod io;

pub use eigen::{
    clustering_of, eig_sym, spectral_decompose, Clustering, SpectralDecomp, SymEigen,
    DEFAULT_CLUSTER_TOL, DEFAULT_RANK_TOL, DEFAULT_SWEEP_TOL,
};
pub use graph::{adjacency, laplacian, Graph};

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Relative asymmetry accepted (and averaged away) when building a [`SymMatrix`].
const SYMMETRY_TOL: f64 = 1e-12;

/// Dense real symmetric `n × n` matrix, stored row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(n: usize) -> Self {
        SymMatrix {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = 1.0;
        }
        m
    }

    /// Builds from row-major data. Entries that disagree with their transpose by
    /// more than a relative `1e-12` are rejected; smaller discrepancies are averaged.
    pub fn from_row_major(n: usize, data: Vec<f64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Precondition("matrix order must be at least 1".into()));
        }
        if data.len() != n * n {
            return Err(Error::DimensionMismatch {
                left: n * n,
                right: data.len(),
            });
        }
        let scale = data.iter().fold(1.0f64, |acc, x| acc.max(x.abs()));
        let mut data = data;
        for i in 0..n {
            for j in (i + 1)..n {
                let (a, b) = (data[i * n + j], data[j * n + i]);
                if !a.is_finite() || !b.is_finite() {
                    return Err(Error::Precondition(format!(
                        "non-finite entry at ({i}, {j})"
                    )));
                }
                if (a - b).abs() > SYMMETRY_TOL * scale {
                    return Err(Error::NotSymmetric { i, j, a, b });
                }
                let mean = 0.5 * (a + b);
                data[i * n + j] = mean;
                data[j * n + i] = mean;
            }
            if !data[i * n + i].is_finite() {
                return Err(Error::Precondition(format!("non-finite entry at ({i}, {i})")));
            }
        }
        Ok(SymMatrix { n, data })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    left: n,
                    right: row.len(),
                });
            }
            data.extend_from_slice(row);
        }
        Self::from_row_major(n, data)
    }

    /// Builds `f(i, j)` for `i ≤ j` and mirrors it.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in i..n {
                let v = f(i, j);
                m.data[i * n + j] = v;
                m.data[j * n + i] = v;
            }
        }
        m
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    /// Sets `(i, j)` and `(j, i)`.
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.n + j] = v;
        self.data[j * self.n + i] = v;
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn add(&self, other: &SymMatrix) -> Result<SymMatrix> {
        same_order(self, other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(SymMatrix { n: self.n, data })
    }

    pub fn sub(&self, other: &SymMatrix) -> Result<SymMatrix> {
        same_order(self, other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Ok(SymMatrix { n: self.n, data })
    }

    pub fn scale(&self, s: f64) -> SymMatrix {
        SymMatrix {
            n: self.n,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    /// True when every entry is 0 or 1 and the diagonal is zero.
    pub fn is_zero_one(&self) -> bool {
        (0..self.n).all(|i| self.get(i, i) == 0.0)
            && self.data.iter().all(|&x| x == 0.0 || x == 1.0)
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0f64, |acc, x| acc.max(x.abs()))
    }
}

impl fmt::Display for SymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

fn same_order(a: &SymMatrix, b: &SymMatrix) -> Result<()> {
    if a.n != b.n {
        return Err(Error::DimensionMismatch {
            left: a.n,
            right: b.n,
        });
    }
    Ok(())
}

/// Dense row-major rectangular matrix; used for eigenvector blocks.
#[derive(Clone, Debug, PartialEq)]
pub struct Dense {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Dense {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Dense {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
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
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<f64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    /// `selfᵀ · self`, a `cols × cols` Gram matrix.
    pub fn gram(&self) -> Dense {
        let mut g = Dense::zeros(self.cols, self.cols);
        for a in 0..self.cols {
            for b in 0..self.cols {
                let s = (0..self.rows).map(|i| self.get(i, a) * self.get(i, b)).sum();
                g.set(a, b, s);
            }
        }
        g
    }

    /// `self · other`.
    pub fn matmul(&self, other: &Dense) -> Result<Dense> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                left: self.cols,
                right: other.rows,
            });
        }
        let mut out = Dense::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let s = (0..self.cols).map(|t| self.get(i, t) * other.get(t, j)).sum();
                out.set(i, j, s);
            }
        }
        Ok(out)
    }
}

/// A permutation of `0..n`, stored as its image sequence `π(0), …, π(n−1)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &x in &image {
            if x >= n {
                return Err(Error::InvalidPermutation(format!(
                    "image {x} out of range for n = {n}"
                )));
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidPermutation(format!("image {x} repeated")));
            }
        }
        Ok(Permutation(image))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        Permutation(inv)
    }

    /// `self ∘ inner`, i.e. `i ↦ self(inner(i))`.
    pub fn compose(&self, inner: &Permutation) -> Result<Permutation> {
        if self.len() != inner.len() {
            return Err(Error::DimensionMismatch {
                left: self.len(),
                right: inner.len(),
            });
        }
        Ok(Permutation(inner.0.iter().map(|&i| self.0[i]).collect()))
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::new(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Vec<usize> {
        p.0
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

pub fn frobenius_norm(m: &SymMatrix) -> f64 {
    m.data.iter().map(|x| x * x).sum::<f64>().sqrt()
}

/// `⟨X, Y⟩ = tr(Xᵀ Y) = Σ X_ij Y_ij`.
pub fn trace_inner(x: &SymMatrix, y: &SymMatrix) -> Result<f64> {
    same_order(x, y)?;
    Ok(x.data.iter().zip(&y.data).map(|(a, b)| a * b).sum())
}

/// `result[π(i)][π(j)] = m[i][j]`.
pub fn permute(m: &SymMatrix, pi: &Permutation) -> Result<SymMatrix> {
    if pi.len() != m.n {
        return Err(Error::InvalidPermutation(format!(
            "length {} for a matrix of order {}",
            pi.len(),
            m.n
        )));
    }
    let n = m.n;
    let mut out = SymMatrix::zeros(n);
    for i in 0..n {
        let pi_i = pi.apply(i);
        for j in 0..n {
            out.data[pi_i * n + pi.apply(j)] = m.data[i * n + j];
        }
    }
    Ok(out)
}

/// `‖A^π − B‖_F²` evaluated entrywise without materializing `A^π`.
pub fn permuted_dist_sq(a: &SymMatrix, b: &SymMatrix, pi: &Permutation) -> Result<f64> {
    same_order(a, b)?;
    if pi.len() != a.n {
        return Err(Error::InvalidPermutation(format!(
            "length {} for a matrix of order {}",
            pi.len(),
            a.n
        )));
    }
    let n = a.n;
    let mut s = 0.0;
    for i in 0..n {
        let pi_i = pi.apply(i);
        for j in 0..n {
            let d = a.data[i * n + j] - b.data[pi_i * n + pi.apply(j)];
            s += d * d;
        }
    }
    Ok(s)
}
