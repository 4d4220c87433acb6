//! Cyclic Jacobi eigensolver, truncated spectral decompositions, and the
//! clustering of spectral rows.

use super::{frobenius_norm, Dense, SymMatrix};
use crate::error::{Error, Result};

pub const DEFAULT_SWEEP_TOL: f64 = 1e-12;
pub const DEFAULT_RANK_TOL: f64 = 1e-9;
pub const DEFAULT_CLUSTER_TOL: f64 = 1e-7;

const MAX_SWEEPS: usize = 100;

/// Full eigensystem: `values` descending, column `j` of `vectors` pairs with `values[j]`.
#[derive(Clone, Debug)]
pub struct SymEigen {
    pub values: Vec<f64>,
    pub vectors: Dense,
}

/// Eigendecomposition by cyclic Jacobi rotations.
///
/// Sweeps stop once the off-diagonal Frobenius mass drops below
/// `sweep_tol · ‖M‖_F`. Repeated eigenvalues come back with an arbitrary
/// orthonormal basis of their eigenspace.
pub fn eig_sym(m: &SymMatrix, sweep_tol: f64) -> Result<SymEigen> {
    if sweep_tol.is_nan() || sweep_tol <= 0.0 {
        return Err(Error::Precondition(format!(
            "sweep tolerance must be positive, got {sweep_tol}"
        )));
    }
    let n = m.n();
    let mut a: Vec<f64> = m.as_slice().to_vec();
    let mut v = Dense::zeros(n, n);
    for i in 0..n {
        v.set(i, i, 1.0);
    }
    let target = sweep_tol * frobenius_norm(m);

    let off_norm = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += a[i * n + j] * a[i * n + j];
                }
            }
        }
        s.sqrt()
    };

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        if off_norm(&a) <= target {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = if theta.is_infinite() {
                    0.0
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k * n + p], a[k * n + q]);
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p * n + k], a[q * n + k]);
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for k in 0..n {
                    let (vkp, vkq) = (v.get(k, p), v.get(k, q));
                    v.set(k, p, c * vkp - s * vkq);
                    v.set(k, q, s * vkp + c * vkq);
                }
            }
        }
    }
    if !converged {
        let residual = off_norm(&a);
        if residual > target {
            return Err(Error::NoConvergence {
                sweeps: MAX_SWEEPS,
                residual,
            });
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    // stable sort keeps equal eigenvalues in solver order
    order.sort_by(|&i, &j| a[j * n + j].total_cmp(&a[i * n + i]));
    let values = order.iter().map(|&i| a[i * n + i]).collect();
    let mut vectors = Dense::zeros(n, n);
    for (new_col, &old_col) in order.iter().enumerate() {
        for r in 0..n {
            vectors.set(r, new_col, v.get(r, old_col));
        }
    }
    Ok(SymEigen { values, vectors })
}

/// Truncated eigendecomposition `M ≈ U · diag(λ) · Uᵀ` keeping the
/// eigenpairs with `|λ| > rank_tol · max|λ|`.
#[derive(Clone, Debug)]
pub struct SpectralDecomp {
    pub n: usize,
    pub k: usize,
    /// Retained eigenvalues, descending by value.
    pub eigvals: Vec<f64>,
    /// `n × k`, orthonormal columns.
    pub u: Dense,
    pub rank_tol: f64,
    /// Smallest eigenvalue of the full spectrum, kept for semidefiniteness checks.
    pub min_eig: f64,
    /// Largest eigenvalue magnitude of the full spectrum.
    pub max_abs_eig: f64,
}

impl SpectralDecomp {
    pub fn row(&self, i: usize) -> &[f64] {
        self.u.row(i)
    }

    pub fn reconstruct(&self) -> SymMatrix {
        SymMatrix::from_fn(self.n, |i, j| {
            (0..self.k)
                .map(|t| self.u.get(i, t) * self.eigvals[t] * self.u.get(j, t))
                .sum()
        })
    }
}

pub fn spectral_decompose(m: &SymMatrix, rank_tol: f64) -> Result<SpectralDecomp> {
    if !(rank_tol > 0.0 && rank_tol < 1.0) {
        return Err(Error::Precondition(format!(
            "rank tolerance must lie in (0, 1), got {rank_tol}"
        )));
    }
    let eig = eig_sym(m, DEFAULT_SWEEP_TOL)?;
    let n = m.n();
    let max_abs = eig.values.iter().fold(0.0f64, |acc, x| acc.max(x.abs()));
    let min_eig = eig.values.iter().copied().fold(f64::INFINITY, f64::min);
    let keep: Vec<usize> = (0..n)
        .filter(|&j| max_abs > 0.0 && eig.values[j].abs() > rank_tol * max_abs)
        .collect();

    let k = keep.len();
    let mut u = Dense::zeros(n, k);
    for (col, &j) in keep.iter().enumerate() {
        let column = eig.vectors.column(j);
        let largest = column.iter().fold(0.0f64, |acc, x| acc.max(x.abs()));
        // first entry of (near-)maximal magnitude decides the sign
        let pivot = column
            .iter()
            .position(|x| x.abs() >= largest * (1.0 - 1e-9))
            .unwrap_or(0);
        let sign = if column[pivot] < 0.0 { -1.0 } else { 1.0 };
        for (r, x) in column.iter().enumerate() {
            u.set(r, col, sign * x);
        }
    }
    Ok(SpectralDecomp {
        n,
        k,
        eigvals: keep.iter().map(|&j| eig.values[j]).collect(),
        u,
        rank_tol,
        min_eig,
        max_abs_eig: max_abs,
    })
}

/// Rows of a spectral basis grouped into classes of (numerically) identical rows.
#[derive(Clone, Debug)]
pub struct Clustering {
    pub p: usize,
    /// First row of each class, in order of first appearance.
    pub representatives: Vec<Vec<f64>>,
    /// Row indices of each class, ascending.
    pub blocks: Vec<Vec<usize>>,
    pub multiplicities: Vec<usize>,
    /// Absolute max-norm tolerance that was applied.
    pub abs_tol: f64,
    /// Smallest max-norm distance between two representatives (infinite when `p = 1`).
    pub min_separation: f64,
    /// Set when two classes lie within ten times the tolerance of each other.
    pub near_threshold: bool,
}

/// Groups the rows of `d.u` that agree within `cluster_tol · max row norm` in max-norm.
pub fn clustering_of(d: &SpectralDecomp, cluster_tol: f64) -> Result<Clustering> {
    if cluster_tol.is_nan() || cluster_tol < 0.0 {
        return Err(Error::Precondition(format!(
            "cluster tolerance must be non-negative, got {cluster_tol}"
        )));
    }
    let max_row_norm = (0..d.n)
        .map(|i| d.row(i).iter().map(|x| x * x).sum::<f64>().sqrt())
        .fold(0.0f64, f64::max);
    let abs_tol = cluster_tol * max_row_norm;

    let dist = |x: &[f64], y: &[f64]| -> f64 {
        x.iter().zip(y).fold(0.0f64, |acc, (a, b)| acc.max((a - b).abs()))
    };

    let mut representatives: Vec<Vec<f64>> = Vec::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for i in 0..d.n {
        let row = d.row(i);
        match representatives.iter().position(|r| dist(r, row) <= abs_tol) {
            Some(c) => blocks[c].push(i),
            None => {
                representatives.push(row.to_vec());
                blocks.push(vec![i]);
            }
        }
    }

    let mut min_separation = f64::INFINITY;
    for a in 0..representatives.len() {
        for b in (a + 1)..representatives.len() {
            min_separation = min_separation.min(dist(&representatives[a], &representatives[b]));
        }
    }
    let near_threshold = min_separation <= 10.0 * abs_tol && max_row_norm > 0.0;
    let multiplicities = blocks.iter().map(Vec::len).collect();
    Ok(Clustering {
        p: representatives.len(),
        representatives,
        blocks,
        multiplicities,
        abs_tol,
        min_separation,
        near_threshold,
    })
}
