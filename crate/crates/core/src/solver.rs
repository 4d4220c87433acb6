//! Exact partition search by enumerating separating hyperplanes.
//!
//! For every unordered block pair `{l, m}` pick a hyperplane spanned by `k`
//! input points and an orientation `σ_lm`: block `l` must lie on side `σ_lm`,
//! block `m` on side `−σ_lm`. A point strictly inside the region of exactly
//! one block joins that block; every other point is ambiguous and is tried in
//! every block. Optimal partitions are mutually weakly separable, and any such
//! separation can be realized by hyperplanes through input points once the
//! points are symbolically perturbed into general position, so some branch
//! reproduces an optimum. With the perturbation the only points a correct
//! branch leaves ambiguous are hyperplane-defining points, so branches with
//! more than `p²·k` ambiguous points are dropped.

use crate::error::{Error, Result};
use crate::exact::{consider, enumerate_labelings, SimResult};
use crate::geometry::{binomial, enumerate_candidate_hyperplanes, sos_orientation, PointSet};
use crate::matrix::{
    clustering_of, permuted_dist_sq, spectral_decompose, SymMatrix, DEFAULT_CLUSTER_TOL,
    DEFAULT_RANK_TOL,
};
use crate::qvp::{
    msim_value, partition_to_permutation, reduce_msim_to_qvp, OrderedPartition, QvpInstance,
};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::HashSet;

pub const DEFAULT_BUDGET: u128 = 100_000_000;

const AMBIGUOUS: u8 = u8::MAX;

#[derive(Clone, Debug)]
pub struct SolverOptions {
    /// Refuse instances whose branch count exceeds this.
    pub budget: u128,
    /// Drop branches with more than `p²·k` ambiguous points.
    pub prune: bool,
    /// Enumerate partitions directly when the hyperplane branches exceed the
    /// budget but the partitions fit in it.
    pub exhaustive_fallback: bool,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            budget: DEFAULT_BUDGET,
            prune: true,
            exhaustive_fallback: true,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SolveStats {
    /// Hyperplane and orientation choices visited.
    pub branches: u128,
    /// Branches dropped by the ambiguity bound.
    pub pruned: u128,
    /// Feasible complete partitions evaluated.
    pub leaves: u128,
    pub max_ambiguous: usize,
    /// Set when the instance went to exhaustive search instead.
    pub fallback: bool,
}

impl SolveStats {
    fn merge(mut self, other: SolveStats) -> SolveStats {
        self.branches += other.branches;
        self.pruned += other.pruned;
        self.leaves += other.leaves;
        self.max_ambiguous = self.max_ambiguous.max(other.max_ambiguous);
        self.fallback |= other.fallback;
        self
    }
}

#[derive(Clone, Debug)]
pub struct QvpSolution {
    pub partition: OrderedPartition,
    pub objective: f64,
    pub stats: SolveStats,
}

/// Number of hyperplane/orientation branches: `C(n,k)^P · 2^P`, `P = p(p−1)/2`.
pub fn branch_count(n: usize, k: usize, p: usize) -> u128 {
    let pairs = (p * p.saturating_sub(1) / 2) as u32;
    let per_pair = binomial(n, k).saturating_mul(2);
    per_pair.checked_pow(pairs).unwrap_or(u128::MAX)
}

/// Number of feasible ordered partitions, `n! / ∏ n_l!`.
pub fn partition_count(cards: &[usize]) -> u128 {
    let mut total = 0usize;
    let mut count: u128 = 1;
    for &c in cards {
        for j in 1..=c {
            total += 1;
            // running product of binomials stays integral
            count = match count.checked_mul(total as u128) {
                Some(v) => v / j as u128,
                None => return u128::MAX,
            };
        }
    }
    count
}

pub fn solve_qvp(q: &QvpInstance) -> Result<(OrderedPartition, f64)> {
    let s = solve_qvp_with(q, &SolverOptions::default())?;
    Ok((s.partition, s.objective))
}

/// Exhaustive search for instances with no usable hyperplanes (`n ≤ k`) or
/// too few points to bother.
pub fn fallback_small(q: &QvpInstance) -> Result<(OrderedPartition, f64)> {
    let limit = q.k().max(crate::exact::MAX_QVP_ORACLE_N);
    if q.n() > limit {
        return Err(Error::TooLarge {
            what: "exhaustive partition fallback",
            size: q.n(),
            limit,
        });
    }
    exhaustive(q)
}

fn exhaustive(q: &QvpInstance) -> Result<(OrderedPartition, f64)> {
    let mut best = None;
    let mut labels = vec![0; q.n()];
    let mut remaining = q.cards().to_vec();
    enumerate_labelings(0, &mut labels, &mut remaining, &mut |labels| {
        let f = q.objective_of_labels(labels);
        consider(&mut best, f, || OrderedPartition::from_labels(labels, q.p()));
    });
    best.map(|(f, part)| (part, f))
        .ok_or_else(|| Error::Infeasible("no feasible partition".into()))
}

pub fn solve_qvp_with(q: &QvpInstance, opts: &SolverOptions) -> Result<QvpSolution> {
    let (n, k, p) = (q.n(), q.k(), q.p());
    if p == 1 || k == 0 {
        // one block, or every partition scores zero
        let partition = OrderedPartition::canonical(q.cards());
        let objective = q.objective_of_labels(&partition.labels());
        return Ok(QvpSolution {
            partition,
            objective,
            stats: SolveStats::default(),
        });
    }
    if n <= k {
        let (partition, objective) = fallback_small(q)?;
        return Ok(QvpSolution {
            partition,
            objective,
            stats: SolveStats {
                fallback: true,
                ..SolveStats::default()
            },
        });
    }
    let branches = branch_count(n, k, p);
    if branches > opts.budget {
        if opts.exhaustive_fallback && partition_count(q.cards()) <= opts.budget {
            let (partition, objective) = exhaustive(q)?;
            return Ok(QvpSolution {
                partition,
                objective,
                stats: SolveStats {
                    fallback: true,
                    ..SolveStats::default()
                },
            });
        }
        return Err(Error::BudgetExceeded {
            branches,
            budget: opts.budget,
        });
    }

    let search = Search::new(q, opts.prune)?;
    let outcome = (0..search.hyperplanes.len())
        .into_par_iter()
        .map(|first| {
            let mut best = None;
            let stats = search.run_task(first, &mut |labels| {
                let f = q.objective_of_labels(labels);
                consider(&mut best, f, || OrderedPartition::from_labels(labels, p));
            });
            (best, stats)
        })
        .reduce(
            || (None, SolveStats::default()),
            |(a, sa), (b, sb)| {
                let mut best = a;
                if let Some((f, part)) = b {
                    consider(&mut best, f, || part);
                }
                (best, sa.merge(sb))
            },
        );
    let (best, stats) = outcome;
    let (objective, partition) =
        best.ok_or_else(|| Error::Infeasible("no branch produced a feasible partition".into()))?;
    Ok(QvpSolution {
        partition,
        objective,
        stats,
    })
}

/// Immutable search state shared by all workers.
pub(crate) struct Search<'a> {
    q: &'a QvpInstance,
    hyperplanes: Vec<Vec<usize>>,
    /// `sides[h * n + i]`: +1 / −1 for the side of point `i`, 0 when it spans `h`.
    sides: Vec<i8>,
    pairs: Vec<(usize, usize)>,
    /// `pair_index[l * p + m]` for `l ≠ m`.
    pair_index: Vec<usize>,
    ambiguity_bound: usize,
    prune: bool,
}

impl<'a> Search<'a> {
    pub(crate) fn new(q: &'a QvpInstance, prune: bool) -> Result<Self> {
        let (n, k, p) = (q.n(), q.k(), q.p());
        let points = PointSet::from_reals(q.points())?;
        let hyperplanes: Vec<Vec<usize>> = enumerate_candidate_hyperplanes(n, k).collect();
        let sides = hyperplanes
            .par_iter()
            .map(|defs| {
                (0..n)
                    .map(|i| sos_orientation(&points, defs, i).map(|s| s.sign()))
                    .collect::<Result<Vec<i8>>>()
            })
            .collect::<Result<Vec<Vec<i8>>>>()?
            .concat();
        let mut pairs = vec![];
        let mut pair_index = vec![usize::MAX; p * p];
        for l in 0..p {
            for m in (l + 1)..p {
                pair_index[l * p + m] = pairs.len();
                pair_index[m * p + l] = pairs.len();
                pairs.push((l, m));
            }
        }
        Ok(Search {
            q,
            hyperplanes,
            sides,
            pairs,
            pair_index,
            ambiguity_bound: p * p * k,
            prune,
        })
    }

    /// All branches whose first pair uses hyperplane `first`; calls `visit`
    /// on every feasible labeling they produce. Each base assignment is
    /// expanded once per task.
    pub(crate) fn run_task(&self, first: usize, visit: &mut impl FnMut(&[usize])) -> SolveStats {
        let (n, p) = (self.q.n(), self.q.p());
        let npairs = self.pairs.len();
        let nh = self.hyperplanes.len();
        let cards = self.q.cards();
        let mut stats = SolveStats::default();
        let mut seen: HashSet<Vec<u8>> = HashSet::new();

        let mut choice = vec![0usize; npairs];
        choice[0] = first;
        let mut base = vec![0u8; n];
        let mut labels = vec![0usize; n];
        let mut counts = vec![0usize; p];
        let mut ambiguous = Vec::with_capacity(n);

        loop {
            for orient in 0u64..(1u64 << npairs) {
                stats.branches += 1;
                counts.iter_mut().for_each(|c| *c = 0);
                ambiguous.clear();
                let mut overfull = false;
                for i in 0..n {
                    let mut region = None;
                    for q in 0..p {
                        let inside = (0..p).filter(|&r| r != q).all(|r| {
                            let idx = self.pair_index[q * p + r];
                            let sigma: i8 = if orient >> idx & 1 == 1 { -1 } else { 1 };
                            let wanted = if q < r { sigma } else { -sigma };
                            self.sides[choice[idx] * n + i] == wanted
                        });
                        if inside {
                            assert!(region.is_none(), "regions of one branch overlap");
                            region = Some(q);
                        }
                    }
                    match region {
                        Some(q) => {
                            base[i] = q as u8;
                            counts[q] += 1;
                            overfull |= counts[q] > cards[q];
                        }
                        None => {
                            base[i] = AMBIGUOUS;
                            ambiguous.push(i);
                        }
                    }
                }
                stats.max_ambiguous = stats.max_ambiguous.max(ambiguous.len());
                if self.prune && ambiguous.len() > self.ambiguity_bound {
                    stats.pruned += 1;
                    continue;
                }
                if overfull || !seen.insert(base.clone()) {
                    continue;
                }
                for (label, &b) in labels.iter_mut().zip(&base) {
                    if b != AMBIGUOUS {
                        *label = b as usize;
                    }
                }
                let mut remaining: Vec<usize> = cards.iter().zip(&counts).map(|(c, k)| c - k).collect();
                assign_ambiguous(&ambiguous, 0, &mut labels, &mut remaining, &mut |l| {
                    stats.leaves += 1;
                    visit(l);
                });
            }
            // odometer over the remaining pairs' hyperplanes
            let mut pos = npairs;
            loop {
                if pos == 1 {
                    return stats;
                }
                pos -= 1;
                choice[pos] += 1;
                if choice[pos] < nh {
                    break;
                }
                choice[pos] = 0;
            }
        }
    }
}

fn assign_ambiguous(
    points: &[usize],
    at: usize,
    labels: &mut [usize],
    remaining: &mut [usize],
    visit: &mut impl FnMut(&[usize]),
) {
    if at == points.len() {
        visit(labels);
        return;
    }
    for l in 0..remaining.len() {
        if remaining[l] == 0 {
            continue;
        }
        remaining[l] -= 1;
        labels[points[at]] = l;
        assign_ambiguous(points, at + 1, labels, remaining, visit);
        remaining[l] += 1;
    }
}

#[derive(Clone, Debug)]
pub struct MsimOptions {
    pub rank_tol: f64,
    pub cluster_tol: f64,
    pub solver: SolverOptions,
    /// Let the input whose spectral rows have fewer classes play `B`.
    pub orient: bool,
}

impl Default for MsimOptions {
    fn default() -> Self {
        MsimOptions {
            rank_tol: DEFAULT_RANK_TOL,
            cluster_tol: DEFAULT_CLUSTER_TOL,
            solver: SolverOptions::default(),
            orient: true,
        }
    }
}

#[derive(Clone, Debug)]
pub struct MsimSolution {
    pub result: SimResult,
    /// Rank of the input whose eigenvectors became the points.
    pub k: usize,
    /// Clustering number of the other input.
    pub p: usize,
    pub swapped: bool,
    /// `√(⟨A,A⟩ + ⟨B,B⟩ − 2F)` from the partition objective alone.
    pub value_from_objective: f64,
    /// Spectral classes were within ten times the clustering tolerance.
    pub near_threshold: bool,
    pub stats: SolveStats,
}

fn orientation_key(a: &SymMatrix, b: &SymMatrix, opts: &MsimOptions) -> Result<(usize, usize)> {
    let da = spectral_decompose(a, opts.rank_tol)?;
    let db = spectral_decompose(b, opts.rank_tol)?;
    Ok((clustering_of(&db, opts.cluster_tol)?.p, da.k))
}

/// Distance between two PSD matrices through the partition reduction.
///
/// `result.dist_sq` is evaluated directly from the returned permutation;
/// `value_from_objective` is the same quantity recovered from the objective.
pub fn solve_msim(a: &SymMatrix, b: &SymMatrix, opts: &MsimOptions) -> Result<MsimSolution> {
    if a.n() != b.n() {
        return Err(Error::DimensionMismatch {
            left: a.n(),
            right: b.n(),
        });
    }
    let swapped = opts.orient && {
        let keep = orientation_key(a, b, opts)?;
        let flip = orientation_key(b, a, opts)?;
        flip < keep
    };
    let (x, y) = if swapped { (b, a) } else { (a, b) };
    let (q, ctx) = reduce_msim_to_qvp(x, y, opts.rank_tol, opts.cluster_tol)?;
    let sol = solve_qvp_with(&q, &opts.solver)?;
    let pi = partition_to_permutation(&sol.partition, &ctx)?;
    let pi = if swapped { pi.inverse() } else { pi };
    let dist_sq = permuted_dist_sq(a, b, &pi)?;
    let mut result = SimResult::from_perm(a, b, pi, dist_sq);
    result.objective = Some(sol.objective);
    Ok(MsimSolution {
        result,
        k: q.k(),
        p: q.p(),
        swapped,
        value_from_objective: msim_value(&ctx, sol.objective),
        near_threshold: ctx.near_threshold(),
        stats: sol.stats,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{brute_force_msim, brute_force_qvp};
    use crate::matrix::{laplacian, permute, Graph, Permutation};
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_instance(rng: &mut ChaCha8Rng, n: usize, k: usize, p: usize, integer: bool) -> QvpInstance {
        let points = (0..n)
            .map(|_| {
                (0..k)
                    .map(|_| {
                        if integer {
                            rng.gen_range(-2..=2) as f64
                        } else {
                            rng.gen_range(-1.0..1.0)
                        }
                    })
                    .collect()
            })
            .collect();
        let g: Vec<Vec<f64>> = (0..p).map(|_| (0..p).map(|_| rng.gen_range(-1.0..1.0)).collect()).collect();
        let coupling = (0..p)
            .map(|l| (0..p).map(|m| (0..p).map(|t| g[l][t] * g[m][t]).sum()).collect())
            .collect();
        let weights = (0..k).map(|_| rng.gen_range(0.2..2.0)).collect();
        let mut labels: Vec<usize> = (0..n).map(|i| i % p).collect();
        labels.shuffle(rng);
        let cards = (0..p).map(|l| labels.iter().filter(|&&x| x == l).count()).collect();
        QvpInstance::new(points, coupling, weights, cards).unwrap()
    }

    #[test]
    fn single_block_needs_no_search() {
        let q = QvpInstance::new(vec![vec![1.0], vec![2.0]], vec![vec![2.0]], vec![1.0], vec![2]).unwrap();
        let s = solve_qvp_with(&q, &SolverOptions::default()).unwrap();
        assert_eq!(s.partition.blocks(), &[vec![0, 1]]);
        assert_eq!(s.objective, 18.0);
        assert_eq!(s.stats.branches, 0);
    }

    #[test]
    fn sign_classes_on_the_line() {
        let q = QvpInstance::new(
            vec![vec![-1.0], vec![-1.0], vec![1.0], vec![1.0]],
            vec![vec![1.0, 0.0], vec![0.0, 1.0]],
            vec![1.0],
            vec![2, 2],
        )
        .unwrap();
        let (part, f) = solve_qvp(&q).unwrap();
        assert_eq!(f, 8.0);
        assert_eq!(part.blocks(), &[vec![0, 1], vec![2, 3]]);
    }

    #[test]
    fn small_instances_fall_back() {
        let q = QvpInstance::new(
            vec![vec![1.0, 0.0, 2.0], vec![0.0, 1.0, -1.0]],
            vec![vec![1.0, 0.5], vec![0.5, 1.0]],
            vec![1.0, 1.0, 1.0],
            vec![1, 1],
        )
        .unwrap();
        let s = solve_qvp_with(&q, &SolverOptions::default()).unwrap();
        assert!(s.stats.fallback);
        assert_eq!(s.objective, brute_force_qvp(&q).unwrap().1);
        assert_eq!(fallback_small(&q).unwrap(), brute_force_qvp(&q).unwrap());

        let square = QvpInstance::new(
            vec![vec![1.0, 0.0], vec![0.0, 1.0]],
            vec![vec![2.0, 0.0], vec![0.0, 1.0]],
            vec![1.0, 3.0],
            vec![1, 1],
        )
        .unwrap();
        let s = solve_qvp_with(&square, &SolverOptions::default()).unwrap();
        assert!(s.stats.fallback);
        assert_eq!(s.objective, brute_force_qvp(&square).unwrap().1);
    }

    #[test]
    fn matches_oracle_on_random_instances() {
        let mut rng = ChaCha8Rng::seed_from_u64(101);
        for round in 0..60 {
            let n = rng.gen_range(3..=8);
            let k = rng.gen_range(1..=2);
            let p = rng.gen_range(2..=3);
            let q = random_instance(&mut rng, n, k, p, round % 2 == 0);
            let (_, expected) = brute_force_qvp(&q).unwrap();
            let s = solve_qvp_with(&q, &SolverOptions::default()).unwrap();
            assert!((s.objective - expected).abs() <= 1e-9, "round {round}: {} vs {expected}", s.objective);
            assert!(s.stats.max_ambiguous <= n);
        }
    }

    #[test]
    fn overlapping_fallback_agrees() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..15 {
            let q = random_instance(&mut rng, 6, 2, 2, true);
            assert_eq!(solve_qvp(&q).unwrap().1, fallback_small(&q).unwrap().1);
        }
    }

    #[test]
    fn pruning_never_changes_the_optimum() {
        let mut rng = ChaCha8Rng::seed_from_u64(55);
        for _ in 0..20 {
            let n = rng.gen_range(3..=7);
            let (k, p) = (rng.gen_range(1..=2), rng.gen_range(2..=3));
            let q = random_instance(&mut rng, n, k, p, true);
            let fast = solve_qvp_with(&q, &SolverOptions::default()).unwrap();
            let slow = solve_qvp_with(&q, &SolverOptions { prune: false, ..Default::default() }).unwrap();
            assert_eq!(fast.objective, slow.objective);
            assert_eq!(fast.partition, slow.partition);
            assert_eq!(slow.stats.pruned, 0);
        }
    }

    #[test]
    fn planted_separated_partition_is_reached() {
        // three well separated groups in the plane
        let centers = [[-6.0, 0.0], [6.0, 0.0], [0.0, 8.0]];
        let offsets = [[0.0, 0.0], [1.0, 0.5], [-0.5, 1.0]];
        let mut points = vec![];
        let mut planted = vec![vec![]; 3];
        for (g, c) in centers.iter().enumerate() {
            for o in &offsets {
                planted[g].push(points.len());
                points.push(vec![c[0] + o[0], c[1] + o[1]]);
            }
        }
        let q = QvpInstance::new(
            points,
            vec![vec![1.0, 0.0, 0.0], vec![0.0, 1.0, 0.0], vec![0.0, 0.0, 1.0]],
            vec![1.0, 1.0],
            vec![3, 3, 3],
        )
        .unwrap();
        let target = OrderedPartition::new(planted).unwrap();
        let search = Search::new(&q, true).unwrap();
        let mut found = false;
        for first in 0..search.hyperplanes.len() {
            search.run_task(first, &mut |labels| {
                found |= OrderedPartition::from_labels(labels, 3) == target;
            });
        }
        assert!(found);
    }

    #[test]
    fn budget_guard() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let q = random_instance(&mut rng, 8, 2, 3, false);
        assert_eq!(branch_count(8, 2, 3), 28u128.pow(3) * 8);
        let strict = SolverOptions { budget: 1000, exhaustive_fallback: false, ..Default::default() };
        let err = solve_qvp_with(&q, &strict).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { branches: 175_616, budget: 1000 }));
        let loose = SolverOptions { budget: 1000, ..Default::default() };
        let s = solve_qvp_with(&q, &loose).unwrap();
        assert!(s.stats.fallback);
        assert_eq!(s.objective, brute_force_qvp(&q).unwrap().1);
        let tiny = SolverOptions { budget: 10, ..Default::default() };
        assert!(matches!(solve_qvp_with(&q, &tiny), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn counts_partitions() {
        assert_eq!(partition_count(&[2, 2]), 6);
        assert_eq!(partition_count(&[3, 3, 2]), 560);
        assert_eq!(partition_count(&[1; 6]), 720);
        assert_eq!(partition_count(&[1; 40]), u128::MAX);
    }

    #[test]
    fn parallel_and_serial_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        let q = random_instance(&mut rng, 8, 2, 3, true);
        let run = |threads| {
            rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .unwrap()
                .install(|| solve_qvp_with(&q, &SolverOptions::default()).unwrap())
        };
        let (one, many) = (run(1), run(4));
        assert_eq!(one.partition, many.partition);
        assert_eq!(one.objective.to_bits(), many.objective.to_bits());
        assert_eq!(one.stats, many.stats);
    }

    #[test]
    fn msim_identical_and_relabeled() {
        let a = SymMatrix::from_fn(4, |i, j| ((i + 1) * (j + 1)) as f64);
        let r = solve_msim(&a, &a, &MsimOptions::default()).unwrap();
        assert!(r.result.dist < 1e-6);

        let l = laplacian(&Graph::cycle(6));
        let pi = Permutation::new(vec![3, 5, 0, 2, 4, 1]).unwrap();
        let r = solve_msim(&l, &permute(&l, &pi).unwrap(), &MsimOptions::default()).unwrap();
        assert!(r.result.dist < 1e-6);
    }

    #[test]
    fn msim_rejects_indefinite() {
        let a = SymMatrix::from_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap();
        let err = solve_msim(&a, &SymMatrix::identity(2), &MsimOptions::default()).unwrap_err();
        assert!(matches!(err, Error::NotPsd { .. }));
    }

    #[test]
    fn msim_matches_oracle_either_orientation() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..12 {
            let n = rng.gen_range(3..=7);
            let p = rng.gen_range(1..=3);
            let (a, b) = crate::qvp::tests::random_psd_pair(&mut rng, n, p);
            let oracle = brute_force_msim(&a, &b).unwrap();
            for orient in [false, true] {
                let opts = MsimOptions { orient, ..Default::default() };
                let r = solve_msim(&a, &b, &opts).unwrap();
                assert!((r.result.dist - oracle.dist).abs() < 1e-6);
                assert!((r.value_from_objective - oracle.dist).abs() < 1e-6);
                let r = solve_msim(&b, &a, &opts).unwrap();
                assert!((r.result.dist - oracle.dist).abs() < 1e-6);
            }
        }
    }
}
