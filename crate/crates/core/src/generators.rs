//! Instances built from the hardness reductions, each with a planted
//! certificate and a value it must reproduce.
//!
//! An instance directory holds `left.txt`, `right.txt` and an `instance.json`
//! sidecar `{kind, seed, params, claimed, certificate}`.

use crate::error::{Error, Result};
use crate::exact::{brute_force_msim, mismatch_count, MAX_MSIM_ORACLE_N};
use crate::matrix::io::{format_graph, format_matrix, read_input, Input};
use crate::matrix::{
    adjacency, frobenius_norm, laplacian, permute, permuted_dist_sq, spectral_decompose,
    trace_inner, Graph, Permutation, SymMatrix, DEFAULT_RANK_TOL,
};
use crate::solver::{solve_msim, MsimOptions};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use std::fs;
use std::path::Path;

/// Permutations are checked exhaustively up to this order, sampled beyond.
const EXHAUSTIVE_IDENTITY_N: usize = 8;
const IDENTITY_SAMPLES: usize = 2000;
const PAIRING_ATTEMPTS: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Hamcycle,
    Threepart,
    ThreepartForest,
    Partition,
    PartitionPsd,
    LaplacianPair,
    Lowrank,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Hamcycle => "hamcycle",
            Kind::Threepart => "threepart",
            Kind::ThreepartForest => "threepart_forest",
            Kind::Partition => "partition",
            Kind::PartitionPsd => "partition_psd",
            Kind::LaplacianPair => "laplacian_pair",
            Kind::Lowrank => "lowrank",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    /// Minimum π-mismatch count between the two graphs.
    Mismatches,
    /// Minimum over π of `−⟨left^π, right⟩`.
    MinNegInner,
    /// `⟨left^π, right⟩ − ⟨left^π, right − offset·I⟩`, for every π.
    InnerOffset,
    /// Laplacian distance² minus adjacency distance², for every π.
    DistSqOffset,
    /// Squared distance.
    DistSq,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Meaning {
    /// The optimum equals the value.
    Optimum,
    /// Every permutation reaches at least the value.
    LowerBound,
    /// The certificate reaches the value; the optimum may be lower.
    UpperBound,
    /// A source instance is a YES instance iff the optimum is at most the value.
    Threshold,
    /// Holds for every permutation.
    Identity,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Claim {
    pub quantity: Quantity,
    pub meaning: Meaning,
    pub value: f64,
}

#[derive(Clone, Debug)]
pub struct PlantedInstance {
    pub kind: Kind,
    pub seed: Option<u64>,
    pub params: Value,
    pub left: Input,
    pub right: Input,
    pub claimed: Claim,
    pub certificate: Option<Permutation>,
}

#[derive(Serialize, Deserialize)]
struct Sidecar {
    kind: Kind,
    seed: Option<u64>,
    params: Value,
    claimed: Claim,
    certificate: Option<Permutation>,
}

fn as_matrix(input: &Input) -> SymMatrix {
    match input {
        Input::Graph(g) => adjacency(g),
        Input::Matrix(m) => m.clone(),
    }
}

fn as_graph(input: &Input) -> Result<&Graph> {
    match input {
        Input::Graph(g) => Ok(g),
        Input::Matrix(_) => Err(Error::Precondition("instance side is a matrix, not a graph".into())),
    }
}

impl PlantedInstance {
    pub fn n(&self) -> usize {
        match &self.left {
            Input::Graph(g) => g.n(),
            Input::Matrix(m) => m.n(),
        }
    }

    pub fn left_matrix(&self) -> SymMatrix {
        as_matrix(&self.left)
    }

    pub fn right_matrix(&self) -> SymMatrix {
        as_matrix(&self.right)
    }

    pub fn write_dir(&self, dir: &Path) -> Result<()> {
        fs::create_dir_all(dir)?;
        let text = |input: &Input| match input {
            Input::Graph(g) => format_graph(g),
            Input::Matrix(m) => format_matrix(m),
        };
        fs::write(dir.join("left.txt"), text(&self.left))?;
        fs::write(dir.join("right.txt"), text(&self.right))?;
        let sidecar = Sidecar {
            kind: self.kind,
            seed: self.seed,
            params: self.params.clone(),
            claimed: self.claimed.clone(),
            certificate: self.certificate.clone(),
        };
        let mut json = serde_json::to_string_pretty(&sidecar)?;
        json.push('\n');
        fs::write(dir.join("instance.json"), json)?;
        Ok(())
    }

    pub fn read_dir(dir: &Path) -> Result<Self> {
        let sidecar: Sidecar = serde_json::from_str(&fs::read_to_string(dir.join("instance.json"))?)?;
        let left = read_input(&dir.join("left.txt"))?;
        let right = read_input(&dir.join("right.txt"))?;
        Ok(PlantedInstance {
            kind: sidecar.kind,
            seed: sidecar.seed,
            params: sidecar.params,
            left,
            right,
            claimed: sidecar.claimed,
            certificate: sidecar.certificate,
        })
    }
}

fn check_cubic(g: &Graph) -> Result<()> {
    if !g.is_unweighted() {
        return Err(Error::Weighted);
    }
    if let Some(v) = g.degrees().iter().position(|&d| d != 3) {
        return Err(Error::Precondition(format!("graph is not 3-regular: vertex {v} has degree {}", g.degrees()[v])));
    }
    Ok(())
}

fn check_cycle(g: &Graph, cycle: &[usize]) -> Result<Permutation> {
    let n = g.n();
    if cycle.len() != n {
        return Err(Error::Precondition(format!("cycle lists {} vertices, graph has {n}", cycle.len())));
    }
    let perm = Permutation::new(cycle.to_vec())
        .map_err(|_| Error::Precondition("cycle must list every vertex once".into()))?;
    let nbrs = g.neighbors();
    for i in 0..n {
        let (u, v) = (cycle[i], cycle[(i + 1) % n]);
        if nbrs[u].binary_search(&v).is_err() {
            return Err(Error::Precondition(format!("cycle step {u}-{v} is not an edge")));
        }
    }
    Ok(perm)
}

/// `(C_n, G)` for a 3-regular `G`. A Hamiltonian cycle, listed as a vertex
/// sequence, becomes the certificate `i ↦ cycle[i]`.
pub fn gen_hamcycle(g: &Graph, cycle: Option<&[usize]>) -> Result<PlantedInstance> {
    check_cubic(g)?;
    let n = g.n();
    let certificate = cycle.map(|c| check_cycle(g, c)).transpose()?;
    let meaning = if certificate.is_some() { Meaning::Optimum } else { Meaning::LowerBound };
    Ok(PlantedInstance {
        kind: Kind::Hamcycle,
        seed: None,
        params: json!({ "n": n, "cycle": cycle }),
        left: Input::Graph(Graph::cycle(n)),
        right: Input::Graph(g.clone()),
        claimed: Claim {
            quantity: Quantity::Mismatches,
            meaning,
            value: (n / 2) as f64,
        },
        certificate,
    })
}

/// `(L(C_n), L(G))` for a 3-regular `G`; the distance² exceeds the adjacency
/// distance² by `n` under every permutation.
pub fn gen_laplacian_pair(g: &Graph, cycle: Option<&[usize]>) -> Result<PlantedInstance> {
    check_cubic(g)?;
    let n = g.n();
    let certificate = cycle.map(|c| check_cycle(g, c)).transpose()?;
    Ok(PlantedInstance {
        kind: Kind::LaplacianPair,
        seed: None,
        params: json!({ "n": n, "cycle": cycle }),
        left: Input::Matrix(laplacian(&Graph::cycle(n))),
        right: Input::Matrix(laplacian(g)),
        claimed: Claim {
            quantity: Quantity::DistSqOffset,
            meaning: Meaning::Identity,
            value: n as f64,
        },
        certificate,
    })
}

fn check_three_partition(m: usize, a: &[u64], target: u64) -> Result<()> {
    if m == 0 || a.len() != 3 * m {
        return Err(Error::Precondition(format!("need 3m = {} sizes, got {}", 3 * m, a.len())));
    }
    if a.iter().sum::<u64>() != m as u64 * target {
        return Err(Error::Precondition(format!("sizes must sum to m·A = {}", m as u64 * target)));
    }
    if let Some(&x) = a.iter().find(|&&x| 4 * x <= target || 2 * x >= target) {
        return Err(Error::Precondition(format!("size {x} is not strictly between A/4 and A/2")));
    }
    Ok(())
}

fn check_triples(m: usize, a: &[u64], target: u64, triples: &[[usize; 3]]) -> Result<()> {
    let mut used = vec![false; a.len()];
    if triples.len() != m {
        return Err(Error::Precondition(format!("need {m} triples")));
    }
    for t in triples {
        for &i in t {
            if i >= a.len() || std::mem::replace(&mut used[i], true) {
                return Err(Error::Precondition(format!("triple index {i} is out of range or repeated")));
            }
        }
        if t.iter().map(|&i| a[i]).sum::<u64>() != target {
            return Err(Error::Precondition(format!("triple {t:?} does not sum to {target}")));
        }
    }
    Ok(())
}

/// Two trees (or, with `trees == false`, the bare path forests) whose
/// mismatch optimum encodes a three-partition instance.
///
/// Layout: hub `0`, then path vertices in order, then `8m` leaves per path
/// vertex. The forest variant has only the path vertices.
pub fn gen_three_partition(
    m: usize,
    a: &[u64],
    target: u64,
    triples: Option<&[[usize; 3]]>,
    trees: bool,
) -> Result<PlantedInstance> {
    check_three_partition(m, a, target)?;
    if let Some(t) = triples {
        check_triples(m, a, target, t)?;
    }
    let core = m * target as usize;
    let hub = usize::from(trees);
    let leaves = if trees { 8 * m } else { 0 };
    let n = hub + core + core * leaves;

    let build = |sizes: &[usize]| -> Result<Graph> {
        let mut edges = vec![];
        let mut v = hub;
        for &s in sizes {
            if trees {
                edges.push((0, v));
            }
            for j in 1..s {
                edges.push((v + j - 1, v + j));
            }
            v += s;
        }
        for u in 0..core {
            for r in 0..leaves {
                edges.push((hub + u, hub + core + u * leaves + r));
            }
        }
        Graph::unweighted(n, &edges)
    };
    let left_sizes: Vec<usize> = a.iter().map(|&x| x as usize).collect();
    let left = build(&left_sizes)?;
    let right = build(&vec![target as usize; m])?;

    let certificate = triples.map(|ts| {
        let starts: Vec<usize> = left_sizes
            .iter()
            .scan(0, |acc, &s| {
                let start = *acc;
                *acc += s;
                Some(start)
            })
            .collect();
        let mut image = vec![0; n];
        for (t, triple) in ts.iter().enumerate() {
            let mut offset = t * target as usize;
            for &i in triple {
                for o in 0..left_sizes[i] {
                    image[hub + starts[i] + o] = hub + offset + o;
                }
                offset += left_sizes[i];
            }
        }
        for u in 0..core {
            let w = image[hub + u] - hub;
            for r in 0..leaves {
                image[hub + core + u * leaves + r] = hub + core + w * leaves + r;
            }
        }
        Permutation::new(image).expect("triples cover every path vertex")
    });
    let value = if trees { 4 * m } else { 2 * m };
    let meaning = if certificate.is_some() { Meaning::UpperBound } else { Meaning::Threshold };
    Ok(PlantedInstance {
        kind: if trees { Kind::Threepart } else { Kind::ThreepartForest },
        seed: None,
        params: json!({ "m": m, "a": a, "A": target, "triples": triples }),
        left: Input::Graph(left),
        right: Input::Graph(right),
        claimed: Claim {
            quantity: Quantity::Mismatches,
            meaning,
            value: value as f64,
        },
        certificate,
    })
}

fn check_partition_sizes(a: &[u64]) -> Result<u64> {
    if a.is_empty() || !a.len().is_multiple_of(2) {
        return Err(Error::Precondition(format!("need an even number of sizes, got {}", a.len())));
    }
    if a.contains(&0) {
        return Err(Error::Precondition("sizes must be positive".into()));
    }
    let total: u64 = a.iter().sum();
    if !total.is_multiple_of(2) {
        return Err(Error::Precondition(format!("sizes sum to {total}, which is odd")));
    }
    Ok(total / 2)
}

/// `C = aaᵀ` and the two-block matrix with `−1` on both diagonal blocks.
pub fn partition_matrices(a: &[u64]) -> (SymMatrix, SymMatrix) {
    let half = a.len() / 2;
    let c = SymMatrix::from_fn(a.len(), |i, j| (a[i] * a[j]) as f64);
    let b = SymMatrix::from_fn(a.len(), |i, j| if (i < half) == (j < half) { -1.0 } else { 0.0 });
    (c, b)
}

fn split_certificate(a: &[u64], half_sum: u64, split: &[usize]) -> Result<Permutation> {
    let half = a.len() / 2;
    let mut inside = vec![false; a.len()];
    for &i in split {
        if i >= a.len() || std::mem::replace(&mut inside[i], true) {
            return Err(Error::Precondition(format!("split index {i} is out of range or repeated")));
        }
    }
    if split.len() != half || split.iter().map(|&i| a[i]).sum::<u64>() != half_sum {
        return Err(Error::Precondition(format!("split must pick {half} sizes summing to {half_sum}")));
    }
    let mut image = vec![0; a.len()];
    let (mut lo, mut hi) = (0, half);
    for i in 0..a.len() {
        if inside[i] {
            image[i] = lo;
            lo += 1;
        } else {
            image[i] = hi;
            hi += 1;
        }
    }
    Permutation::new(image)
}

pub fn gen_partition(a: &[u64], split: Option<&[usize]>) -> Result<PlantedInstance> {
    let half_sum = check_partition_sizes(a)?;
    let (c, b) = partition_matrices(a);
    let certificate = split.map(|s| split_certificate(a, half_sum, s)).transpose()?;
    let meaning = if certificate.is_some() { Meaning::Optimum } else { Meaning::LowerBound };
    Ok(PlantedInstance {
        kind: Kind::Partition,
        seed: None,
        params: json!({ "a": a, "A": half_sum, "split": split }),
        left: Input::Matrix(c),
        right: Input::Matrix(b),
        claimed: Claim {
            quantity: Quantity::MinNegInner,
            meaning,
            value: 2.0 * (half_sum * half_sum) as f64,
        },
        certificate,
    })
}

/// As [`gen_partition`] with `n·I` added to the block matrix, `n = |a|/2`.
pub fn gen_partition_psd(a: &[u64], split: Option<&[usize]>) -> Result<PlantedInstance> {
    let half_sum = check_partition_sizes(a)?;
    let (c, b) = partition_matrices(a);
    let half = a.len() / 2;
    let shifted = b.add(&SymMatrix::identity(a.len()).scale(half as f64))?;
    let certificate = split.map(|s| split_certificate(a, half_sum, s)).transpose()?;
    let squares: u64 = a.iter().map(|x| x * x).sum();
    Ok(PlantedInstance {
        kind: Kind::PartitionPsd,
        seed: None,
        params: json!({ "a": a, "A": half_sum, "shift": half, "split": split }),
        left: Input::Matrix(c),
        right: Input::Matrix(shifted),
        claimed: Claim {
            quantity: Quantity::InnerOffset,
            meaning: Meaning::Identity,
            value: (half as u64 * squares) as f64,
        },
        certificate,
    })
}

/// Random PSD pair `XXᵀ`, `YYᵀ` with integer `X, Y ∈ Z^{n×rank}` and `Y`
/// drawn from `p` prototype rows, so the right side has at most `p` spectral
/// classes. The claimed distance² comes from the permutation oracle.
pub fn gen_lowrank(n: usize, rank: usize, p: usize, seed: u64) -> Result<PlantedInstance> {
    if n == 0 || n > MAX_MSIM_ORACLE_N || rank == 0 || p == 0 {
        return Err(Error::Precondition(format!(
            "lowrank needs 1 ≤ n ≤ {MAX_MSIM_ORACLE_N}, rank ≥ 1, p ≥ 1"
        )));
    }
    let (a, b) = lowrank_pair(n, rank, p, seed);
    let oracle = brute_force_msim(&a, &b)?;
    Ok(PlantedInstance {
        kind: Kind::Lowrank,
        seed: Some(seed),
        params: json!({ "n": n, "rank": rank, "p": p }),
        left: Input::Matrix(a),
        right: Input::Matrix(b),
        claimed: Claim {
            quantity: Quantity::DistSq,
            meaning: Meaning::Optimum,
            value: oracle.dist_sq,
        },
        certificate: Some(oracle.perm),
    })
}

pub fn lowrank_pair(n: usize, rank: usize, p: usize, seed: u64) -> (SymMatrix, SymMatrix) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let row = |rng: &mut ChaCha8Rng| -> Vec<f64> { (0..rank).map(|_| rng.gen_range(-3..=3) as f64).collect() };
    let x: Vec<Vec<f64>> = (0..n).map(|_| row(&mut rng)).collect();
    let protos: Vec<Vec<f64>> = (0..p).map(|_| row(&mut rng)).collect();
    let y: Vec<&Vec<f64>> = (0..n).map(|_| &protos[rng.gen_range(0..p)]).collect();
    let gram = |v: &[&Vec<f64>]| SymMatrix::from_fn(n, |i, j| v[i].iter().zip(v[j]).map(|(s, t)| s * t).sum());
    let xs: Vec<&Vec<f64>> = x.iter().collect();
    (gram(&xs), gram(&y))
}

/// Uniform-ish simple 3-regular graph from the pairing model, rejecting
/// loops and parallel edges.
pub fn random_cubic(n: usize, rng: &mut ChaCha8Rng) -> Result<Graph> {
    if n < 4 || !n.is_multiple_of(2) {
        return Err(Error::Precondition(format!("3-regular graphs need even n ≥ 4, got {n}")));
    }
    let mut stubs: Vec<usize> = (0..3 * n).map(|s| s / 3).collect();
    'attempt: for _ in 0..PAIRING_ATTEMPTS {
        stubs.shuffle(rng);
        let mut edges = Vec::with_capacity(3 * n / 2);
        for pair in stubs.chunks(2) {
            let (u, v) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if u == v || edges.contains(&(u, v)) {
                continue 'attempt;
            }
            edges.push((u, v));
        }
        edges.sort_unstable();
        return Graph::unweighted(n, &edges);
    }
    Err(Error::Infeasible(format!("pairing model failed {PAIRING_ATTEMPTS} times")))
}

/// Random 3-regular graph built around a hidden Hamiltonian cycle; returns
/// the graph and the cycle as a vertex sequence.
pub fn random_hamiltonian_cubic(n: usize, rng: &mut ChaCha8Rng) -> Result<(Graph, Vec<usize>)> {
    if n < 4 || !n.is_multiple_of(2) {
        return Err(Error::Precondition(format!("3-regular graphs need even n ≥ 4, got {n}")));
    }
    let mut cycle: Vec<usize> = (0..n).collect();
    cycle.shuffle(rng);
    let ring: Vec<(usize, usize)> = (0..n)
        .map(|i| {
            let (u, v) = (cycle[i], cycle[(i + 1) % n]);
            (u.min(v), u.max(v))
        })
        .collect();
    let mut verts: Vec<usize> = (0..n).collect();
    'attempt: for _ in 0..PAIRING_ATTEMPTS {
        verts.shuffle(rng);
        let mut edges = ring.clone();
        for pair in verts.chunks(2) {
            let e = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if edges.contains(&e) {
                continue 'attempt;
            }
            edges.push(e);
        }
        edges.sort_unstable();
        return Ok((Graph::unweighted(n, &edges)?, cycle));
    }
    Err(Error::Infeasible(format!("chord matching failed {PAIRING_ATTEMPTS} times")))
}

/// Backtracking search for a Hamiltonian cycle through vertex 0.
pub fn find_hamiltonian_cycle(g: &Graph, max_n: usize) -> Result<Option<Vec<usize>>> {
    let n = g.n();
    if n > max_n {
        return Err(Error::TooLarge {
            what: "Hamiltonian cycle search",
            size: n,
            limit: max_n,
        });
    }
    if n < 3 {
        return Ok(None);
    }
    fn extend(nbrs: &[Vec<usize>], path: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let last = *path.last().unwrap();
        if path.len() == nbrs.len() {
            return nbrs[last].binary_search(&path[0]).is_ok();
        }
        for &v in &nbrs[last] {
            if !used[v] {
                used[v] = true;
                path.push(v);
                if extend(nbrs, path, used) {
                    return true;
                }
                path.pop();
                used[v] = false;
            }
        }
        false
    }
    let nbrs = g.neighbors();
    let mut used = vec![false; n];
    used[0] = true;
    let mut path = vec![0];
    Ok(extend(&nbrs, &mut path, &mut used).then_some(path))
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub observed: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Verification {
    pub checks: Vec<Check>,
}

impl Verification {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    fn push(&mut self, name: &str, expected: impl ToString, observed: impl ToString, pass: bool) {
        self.checks.push(Check {
            name: name.into(),
            expected: expected.to_string(),
            observed: observed.to_string(),
            pass,
        });
    }
}

fn sampled_perms(n: usize, seed: u64) -> Vec<Permutation> {
    if n <= EXHAUSTIVE_IDENTITY_N {
        let mut all = vec![];
        let mut image: Vec<usize> = (0..n).collect();
        heap_permutations(n, &mut image, &mut all);
        return all;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..IDENTITY_SAMPLES)
        .map(|_| {
            let mut image: Vec<usize> = (0..n).collect();
            image.shuffle(&mut rng);
            Permutation::new(image).unwrap()
        })
        .collect()
}

fn heap_permutations(k: usize, image: &mut Vec<usize>, out: &mut Vec<Permutation>) {
    if k <= 1 {
        out.push(Permutation::new(image.clone()).unwrap());
        return;
    }
    for i in 0..k {
        heap_permutations(k - 1, image, out);
        let j = if k.is_multiple_of(2) { i } else { 0 };
        if i + 1 < k {
            image.swap(j, k - 1);
        }
    }
}

fn adjacency_of_laplacian(l: &SymMatrix) -> SymMatrix {
    SymMatrix::from_fn(l.n(), |i, j| if i == j { 0.0 } else { -l.get(i, j) })
}

fn fmt_value(x: f64) -> String {
    if x.fract() == 0.0 && x.abs() < 1e15 {
        format!("{}", x as i64)
    } else {
        format!("{x:.9}")
    }
}

/// Recompute the certificate value and, when the instance is small enough,
/// the optimum by exhaustive search; compare both against the claim.
pub fn verify(inst: &PlantedInstance) -> Result<Verification> {
    let mut out = Verification::default();
    let (a, b) = (inst.left_matrix(), inst.right_matrix());
    let n = inst.n();
    let claim = &inst.claimed;
    let small = n <= MAX_MSIM_ORACLE_N;
    match claim.quantity {
        Quantity::Mismatches => {
            let (g, h) = (as_graph(&inst.left)?, as_graph(&inst.right)?);
            if inst.kind == Kind::Hamcycle {
                let ok = check_cubic(h).is_ok();
                out.push("right graph is 3-regular", true, ok, ok);
            }
            if let Some(pi) = &inst.certificate {
                let delta = mismatch_count(g, h, pi)?;
                out.push("certificate mismatches", fmt_value(claim.value), delta, delta as f64 == claim.value);
            }
            if small {
                let opt = brute_force_msim(&a, &b)?.mismatches.unwrap_or(usize::MAX) as f64;
                let (rel, pass) = match claim.meaning {
                    Meaning::Optimum => ("==", opt == claim.value),
                    Meaning::LowerBound => (">=", opt >= claim.value),
                    Meaning::UpperBound => ("<=", opt <= claim.value),
                    _ => ("any", true),
                };
                out.push("optimal mismatches", format!("{rel} {}", fmt_value(claim.value)), fmt_value(opt), pass);
            }
        }
        Quantity::MinNegInner => {
            if let Some(pi) = &inst.certificate {
                let v = -trace_inner(&permute(&a, pi)?, &b)?;
                out.push("certificate value", fmt_value(claim.value), fmt_value(v), v == claim.value);
            }
            if small {
                let r = brute_force_msim(&a, &b)?;
                let v = -trace_inner(&permute(&a, &r.perm)?, &b)?;
                let pass = match claim.meaning {
                    Meaning::Optimum => v == claim.value,
                    _ => v >= claim.value,
                };
                let rel = if claim.meaning == Meaning::Optimum { "==" } else { ">=" };
                out.push("minimum value", format!("{rel} {}", fmt_value(claim.value)), fmt_value(v), pass);
                out.push("balanced split exists", "-", v == claim.value, true);
            }
        }
        Quantity::InnerOffset => {
            let shift = inst.params["shift"].as_u64().unwrap_or(0) as f64;
            let base = b.sub(&SymMatrix::identity(n).scale(shift))?;
            let mut worst = 0.0f64;
            for pi in sampled_perms(n, inst.seed.unwrap_or(0)) {
                let ap = permute(&a, &pi)?;
                let gap = trace_inner(&ap, &b)? - trace_inner(&ap, &base)?;
                worst = worst.max((gap - claim.value).abs());
            }
            out.push("offset under every sampled π", fmt_value(claim.value), format!("max deviation {worst}"), worst == 0.0);
            let min_eig = spectral_decompose(&b, DEFAULT_RANK_TOL).map(|d| d.min_eig);
            let scale = b.max_abs().max(1.0);
            let psd = matches!(min_eig, Ok(e) if e >= -DEFAULT_RANK_TOL * scale);
            out.push("right side is PSD", true, psd, psd);
        }
        Quantity::DistSqOffset => {
            let (ga, gb) = (adjacency_of_laplacian(&a), adjacency_of_laplacian(&b));
            let mut worst = 0.0f64;
            for pi in sampled_perms(n, inst.seed.unwrap_or(0)) {
                let gap = permuted_dist_sq(&a, &b, &pi)? - permuted_dist_sq(&ga, &gb, &pi)?;
                worst = worst.max((gap - claim.value).abs());
            }
            out.push("offset under every sampled π", fmt_value(claim.value), format!("max deviation {worst}"), worst == 0.0);
            if let Some(pi) = &inst.certificate {
                let v = permuted_dist_sq(&a, &b, pi)?;
                let expected = claim.value + 2.0 * (n / 2) as f64;
                out.push("certificate distance²", fmt_value(expected), fmt_value(v), v == expected);
            }
            if small {
                let opt = brute_force_msim(&a, &b)?.dist_sq;
                let adj = brute_force_msim(&ga, &gb)?.dist_sq;
                out.push("optimal distance² offset", fmt_value(claim.value), fmt_value(opt - adj), opt - adj == claim.value);
            }
        }
        Quantity::DistSq => {
            if let Some(pi) = &inst.certificate {
                let v = permuted_dist_sq(&a, &b, pi)?;
                out.push("certificate distance²", fmt_value(claim.value), fmt_value(v), (v - claim.value).abs() <= 1e-9);
            }
            if small {
                let opt = brute_force_msim(&a, &b)?.dist_sq;
                out.push("optimal distance²", fmt_value(claim.value), fmt_value(opt), (opt - claim.value).abs() <= 1e-9);
            }
            let solved = solve_msim(&a, &b, &MsimOptions::default())?.result;
            let pass = (solved.dist - claim.value.sqrt()).abs() <= 1e-6;
            out.push("partition solver distance", format!("{:.9}", claim.value.sqrt()), format!("{:.9}", solved.dist), pass);
        }
    }
    if frobenius_norm(&a).is_nan() || frobenius_norm(&b).is_nan() {
        out.push("finite entries", true, false, false);
    }
    Ok(out)
}
