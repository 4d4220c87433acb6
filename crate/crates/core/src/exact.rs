//! Brute-force oracles. Size guards keep them from being used at scale.

use crate::error::{Error, Result};
use crate::matrix::{adjacency, Graph, Permutation, SymMatrix};
use crate::qvp::{OrderedPartition, QvpInstance};
use serde::{Deserialize, Serialize};

pub const MAX_MSIM_ORACLE_N: usize = 10;
pub const MAX_QVP_ORACLE_N: usize = 12;

/// Optimal permutation and distance for one similarity instance.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SimResult {
    pub perm: Permutation,
    pub dist: f64,
    pub dist_sq: f64,
    /// Number of π-mismatches when both inputs are 0/1 matrices.
    pub mismatches: Option<usize>,
    /// Partition objective reached by the solver, when one was used.
    pub objective: Option<f64>,
}

impl SimResult {
    pub(crate) fn from_perm(a: &SymMatrix, b: &SymMatrix, perm: Permutation, dist_sq: f64) -> Self {
        let mismatches = (a.is_zero_one() && b.is_zero_one()).then(|| (dist_sq / 2.0).round() as usize);
        SimResult {
            perm,
            dist: dist_sq.sqrt(),
            dist_sq,
            mismatches,
            objective: None,
        }
    }
}

/// Unordered pairs `{i, j}` whose edge status in `g` differs from `{π(i), π(j)}` in `h`.
pub fn mismatch_count(g: &Graph, h: &Graph, pi: &Permutation) -> Result<usize> {
    if g.n() != h.n() {
        return Err(Error::DimensionMismatch {
            left: g.n(),
            right: h.n(),
        });
    }
    if !g.is_unweighted() || !h.is_unweighted() {
        return Err(Error::Weighted);
    }
    if pi.len() != g.n() {
        return Err(Error::InvalidPermutation(format!(
            "length {} for graphs on {} vertices",
            pi.len(),
            g.n()
        )));
    }
    let (ag, ah) = (adjacency(g), adjacency(h));
    let n = g.n();
    let mut count = 0;
    for i in 0..n {
        for j in (i + 1)..n {
            if ag.get(i, j) != ah.get(pi.apply(i), pi.apply(j)) {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// Exhaustive minimum of `‖A^π − B‖_F` over all `n!` permutations.
///
/// Permutations are visited in lexicographic order and only a strictly better
/// value replaces the incumbent, so ties resolve to the least permutation.
pub fn brute_force_msim(a: &SymMatrix, b: &SymMatrix) -> Result<SimResult> {
    let n = a.n();
    if n != b.n() {
        return Err(Error::DimensionMismatch {
            left: n,
            right: b.n(),
        });
    }
    if n > MAX_MSIM_ORACLE_N {
        return Err(Error::TooLarge {
            what: "brute-force matrix oracle",
            size: n,
            limit: MAX_MSIM_ORACLE_N,
        });
    }

    struct Search<'a> {
        a: &'a SymMatrix,
        b: &'a SymMatrix,
        n: usize,
        prefix: Vec<usize>,
        used: Vec<bool>,
        best: f64,
        best_perm: Vec<usize>,
    }

    impl Search<'_> {
        fn descend(&mut self, partial: f64) {
            let t = self.prefix.len();
            if t == self.n {
                if partial < self.best {
                    self.best = partial;
                    self.best_perm.clone_from(&self.prefix);
                }
                return;
            }
            for x in 0..self.n {
                if self.used[x] {
                    continue;
                }
                let d = self.a.get(t, t) - self.b.get(x, x);
                let mut add = d * d;
                for (s, &ps) in self.prefix.iter().enumerate() {
                    let d = self.a.get(s, t) - self.b.get(ps, x);
                    add += 2.0 * d * d;
                }
                self.used[x] = true;
                self.prefix.push(x);
                self.descend(partial + add);
                self.prefix.pop();
                self.used[x] = false;
            }
        }
    }

    let mut search = Search {
        a,
        b,
        n,
        prefix: Vec::with_capacity(n),
        used: vec![false; n],
        best: f64::INFINITY,
        best_perm: vec![],
    };
    search.descend(0.0);
    let perm = Permutation::new(search.best_perm)?;
    Ok(SimResult::from_perm(a, b, perm, search.best))
}

/// Exhaustive maximum of the partition objective over every ordered partition
/// with the prescribed block sizes. Ties go to the least block sequence.
pub fn brute_force_qvp(q: &QvpInstance) -> Result<(OrderedPartition, f64)> {
    let n = q.n();
    if n > MAX_QVP_ORACLE_N {
        return Err(Error::TooLarge {
            what: "brute-force partition oracle",
            size: n,
            limit: MAX_QVP_ORACLE_N,
        });
    }
    let mut best: Option<(f64, OrderedPartition)> = None;
    let mut labels = vec![0; n];
    let mut remaining = q.cards().to_vec();
    enumerate_labelings(0, &mut labels, &mut remaining, &mut |labels| {
        let f = q.objective_of_labels(labels);
        consider(&mut best, f, || OrderedPartition::from_labels(labels, q.p()));
    });
    let (f, part) = best.ok_or_else(|| Error::Infeasible("no feasible partition".into()))?;
    Ok((part, f))
}

/// Calls `visit` for every completion of `labels[pos..]` that uses exactly
/// `remaining[l]` more elements of block `l`.
pub(crate) fn enumerate_labelings(
    pos: usize,
    labels: &mut [usize],
    remaining: &mut [usize],
    visit: &mut impl FnMut(&[usize]),
) {
    if pos == labels.len() {
        visit(labels);
        return;
    }
    for l in 0..remaining.len() {
        if remaining[l] == 0 {
            continue;
        }
        remaining[l] -= 1;
        labels[pos] = l;
        enumerate_labelings(pos + 1, labels, remaining, visit);
        remaining[l] += 1;
    }
}

/// Keeps the larger objective; equal objectives keep the smaller partition.
pub(crate) fn consider(
    best: &mut Option<(f64, OrderedPartition)>,
    f: f64,
    make: impl FnOnce() -> OrderedPartition,
) {
    match best {
        Some((bf, _)) if f < *bf => {}
        Some((bf, bp)) if f == *bf => {
            let cand = make();
            if cand < *bp {
                *bp = cand;
            }
        }
        _ => *best = Some((f, make())),
    }
}
