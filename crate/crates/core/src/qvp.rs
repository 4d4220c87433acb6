//! Quadratic vector partition instances and the reduction from matrix
//! similarity of positive semidefinite inputs.
//!
//! With `A = U Λ Uᵀ` and `B = V Γ Vᵀ`, write `S_1 … S_p` for the classes of
//! identical rows of `V` and `Ṽ^l` for their common row. For any permutation,
//! `⟨A^π, B⟩ = Σ_{l,m} K_lm ⟨W^{T_l}, W^{T_m}⟩_Λ` where `W` are the rows of `U`,
//! `T_l = π⁻¹(S_l)`, `W^T = Σ_{i∈T} w_i` and `K_lm = ⟨Ṽ^l, Ṽ^m⟩_Γ`. Minimizing the
//! distance therefore means maximizing this objective over ordered partitions
//! with block sizes `|S_l|`.

use crate::error::{Error, Result};
use crate::matrix::{
    clustering_of, eig_sym, spectral_decompose, trace_inner, Clustering, Permutation,
    SpectralDecomp, SymMatrix, DEFAULT_SWEEP_TOL,
};
use serde::{Deserialize, Serialize};

/// Ordered partition `(T_1, …, T_p)` of `0..n`; blocks are kept sorted.
///
/// Ordering compares the block sequences lexicographically, which is the
/// tie-break used by every solver in this crate.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct OrderedPartition {
    blocks: Vec<Vec<usize>>,
}

impl OrderedPartition {
    pub fn new(mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let n: usize = blocks.iter().map(Vec::len).sum();
        let mut seen = vec![false; n];
        for b in &mut blocks {
            b.sort_unstable();
            for &i in b.iter() {
                if i >= n || std::mem::replace(&mut seen[i], true) {
                    return Err(Error::Infeasible(format!(
                        "blocks do not partition 0..{n} (element {i})"
                    )));
                }
            }
        }
        Ok(OrderedPartition { blocks })
    }

    /// `labels[i]` is the block of element `i`.
    pub fn from_labels(labels: &[usize], p: usize) -> Self {
        let mut blocks = vec![Vec::new(); p];
        for (i, &l) in labels.iter().enumerate() {
            blocks[l].push(i);
        }
        OrderedPartition { blocks }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn p(&self) -> usize {
        self.blocks.len()
    }

    pub fn n(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    pub fn cardinalities(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    pub fn labels(&self) -> Vec<usize> {
        let mut labels = vec![0; self.n()];
        for (l, b) in self.blocks.iter().enumerate() {
            for &i in b {
                labels[i] = l;
            }
        }
        labels
    }

    /// Lexicographically least partition with the given block sizes:
    /// consecutive runs `0..n_1`, `n_1..n_1+n_2`, ….
    pub fn canonical(cards: &[usize]) -> Self {
        let mut start = 0;
        let blocks = cards
            .iter()
            .map(|&c| {
                let b = (start..start + c).collect();
                start += c;
                b
            })
            .collect();
        OrderedPartition { blocks }
    }
}

/// Points `w_1 … w_n ∈ R^k`, PSD coupling `K` (`p × p`), positive weights `Λ`
/// and prescribed block sizes.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct QvpInstance {
    k: usize,
    points: Vec<Vec<f64>>,
    coupling: Vec<Vec<f64>>,
    weights: Vec<f64>,
    cards: Vec<usize>,
}

impl QvpInstance {
    pub fn new(
        points: Vec<Vec<f64>>,
        coupling: Vec<Vec<f64>>,
        weights: Vec<f64>,
        cards: Vec<usize>,
    ) -> Result<Self> {
        let k = weights.len();
        let n = points.len();
        let p = cards.len();
        if n == 0 {
            return Err(Error::Precondition("instance needs at least one point".into()));
        }
        if let Some(bad) = points.iter().find(|w| w.len() != k) {
            return Err(Error::DimensionMismatch {
                left: k,
                right: bad.len(),
            });
        }
        if points.iter().flatten().any(|x| !x.is_finite()) {
            return Err(Error::Precondition("non-finite point coordinate".into()));
        }
        if let Some(&w) = weights.iter().find(|&&w| !(w > 0.0 && w.is_finite())) {
            return Err(Error::Precondition(format!("weights must be positive, got {w}")));
        }
        if p == 0 || cards.iter().sum::<usize>() != n {
            return Err(Error::Infeasible(format!(
                "block sizes {cards:?} do not sum to {n}"
            )));
        }
        if coupling.len() != p || coupling.iter().any(|r| r.len() != p) {
            return Err(Error::DimensionMismatch {
                left: p,
                right: coupling.len(),
            });
        }
        let kmat = SymMatrix::from_rows(&coupling)?;
        let min_eig = eig_sym(&kmat, DEFAULT_SWEEP_TOL)?
            .values
            .last()
            .copied()
            .unwrap_or(0.0);
        let tol = 1e-9 * kmat.max_abs().max(1.0);
        if min_eig < -tol {
            return Err(Error::NotPsd {
                which: "K",
                min_eig,
                tol,
            });
        }
        Ok(QvpInstance {
            k,
            points,
            coupling: kmat.rows(),
            weights,
            cards,
        })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.points.len()
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.k
    }

    #[inline]
    pub fn p(&self) -> usize {
        self.cards.len()
    }

    pub fn points(&self) -> &[Vec<f64>] {
        &self.points
    }

    pub fn coupling(&self) -> &[Vec<f64>] {
        &self.coupling
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn cards(&self) -> &[usize] {
        &self.cards
    }

    /// Objective of a complete labeling; assumes `labels` is feasible.
    ///
    /// Evaluated from block sums in a fixed order, so equal labelings always
    /// produce bit-identical values.
    pub fn objective_of_labels(&self, labels: &[usize]) -> f64 {
        let (p, k) = (self.p(), self.k);
        let mut sums = vec![0.0; p * k];
        for (w, &l) in self.points.iter().zip(labels) {
            for (s, x) in sums[l * k..(l + 1) * k].iter_mut().zip(w) {
                *s += x;
            }
        }
        let mut total = 0.0;
        for l in 0..p {
            for m in 0..p {
                let kl = self.coupling[l][m];
                if kl == 0.0 {
                    continue;
                }
                let inner: f64 = (0..k)
                    .map(|q| self.weights[q] * sums[l * k + q] * sums[m * k + q])
                    .sum();
                total += kl * inner;
            }
        }
        total
    }

    pub fn check_feasible(&self, part: &OrderedPartition) -> Result<()> {
        if part.n() != self.n() || part.cardinalities() != self.cards {
            return Err(Error::Infeasible(format!(
                "block sizes {:?} (n = {}) do not match the required {:?} (n = {})",
                part.cardinalities(),
                part.n(),
                self.cards,
                self.n()
            )));
        }
        Ok(())
    }
}

/// `F(P) = Σ_{l,m} K_lm ⟨W^{T_l}, W^{T_m}⟩_Λ`.
pub fn qvp_objective(q: &QvpInstance, part: &OrderedPartition) -> Result<f64> {
    q.check_feasible(part)?;
    Ok(q.objective_of_labels(&part.labels()))
}

/// Bookkeeping needed to map a partition back to a permutation and distance.
#[derive(Clone, Debug)]
pub struct ReductionContext {
    /// Classes of identical spectral rows of `B`.
    pub clusters: Clustering,
    /// `⟨A, A⟩ + ⟨B, B⟩`.
    pub const_term: f64,
    pub decomp_a: SpectralDecomp,
    pub decomp_b: SpectralDecomp,
}

impl ReductionContext {
    pub fn near_threshold(&self) -> bool {
        self.clusters.near_threshold
    }
}

fn check_psd(d: &SpectralDecomp, which: &'static str) -> Result<()> {
    let tol = d.rank_tol * d.max_abs_eig;
    if d.min_eig < -tol {
        return Err(Error::NotPsd {
            which,
            min_eig: d.min_eig,
            tol,
        });
    }
    Ok(())
}

pub fn reduce_msim_to_qvp(
    a: &SymMatrix,
    b: &SymMatrix,
    rank_tol: f64,
    cluster_tol: f64,
) -> Result<(QvpInstance, ReductionContext)> {
    if a.n() != b.n() {
        return Err(Error::DimensionMismatch {
            left: a.n(),
            right: b.n(),
        });
    }
    let decomp_a = spectral_decompose(a, rank_tol)?;
    check_psd(&decomp_a, "A")?;
    let decomp_b = spectral_decompose(b, rank_tol)?;
    check_psd(&decomp_b, "B")?;
    let clusters = clustering_of(&decomp_b, cluster_tol)?;

    let gamma = &decomp_b.eigvals;
    let reps = &clusters.representatives;
    let coupling: Vec<Vec<f64>> = reps
        .iter()
        .map(|vl| {
            reps.iter()
                .map(|vm| (0..gamma.len()).map(|t| vl[t] * gamma[t] * vm[t]).sum())
                .collect()
        })
        .collect();
    let points = (0..a.n()).map(|i| decomp_a.row(i).to_vec()).collect();
    let q = QvpInstance::new(
        points,
        coupling,
        decomp_a.eigvals.clone(),
        clusters.multiplicities.clone(),
    )?;
    let const_term = trace_inner(a, a)? + trace_inner(b, b)?;
    Ok((
        q,
        ReductionContext {
            clusters,
            const_term,
            decomp_a,
            decomp_b,
        },
    ))
}

/// Sends the sorted elements of `T_l` onto the sorted elements of `S_l`.
pub fn partition_to_permutation(
    part: &OrderedPartition,
    ctx: &ReductionContext,
) -> Result<Permutation> {
    let targets = &ctx.clusters.blocks;
    if part.p() != targets.len()
        || part.blocks().iter().zip(targets).any(|(t, s)| t.len() != s.len())
    {
        return Err(Error::Infeasible(format!(
            "block sizes {:?} do not match the cluster sizes {:?}",
            part.cardinalities(),
            ctx.clusters.multiplicities
        )));
    }
    let mut image = vec![0; part.n()];
    for (t, s) in part.blocks().iter().zip(targets) {
        for (&i, &j) in t.iter().zip(s) {
            image[i] = j;
        }
    }
    Permutation::new(image)
}

/// `√max(0, ⟨A,A⟩ + ⟨B,B⟩ − 2·F_max)`.
pub fn msim_value(ctx: &ReductionContext, f_max: f64) -> f64 {
    (ctx.const_term - 2.0 * f_max).max(0.0).sqrt()
}
