use super::SymMatrix;
use crate::error::{Error, Result};
use std::collections::HashSet;

/// Undirected graph on `0..n` with real edge weights and no self-loops.
#[derive(Clone, Debug, PartialEq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize, f64)>,
}

impl Graph {
    pub fn new(n: usize, edges: Vec<(usize, usize, f64)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGraph("graph must have at least one vertex".into()));
        }
        let mut seen = HashSet::with_capacity(edges.len());
        for &(u, v, w) in &edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) out of range for n = {n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at {u}")));
            }
            if !w.is_finite() {
                return Err(Error::InvalidGraph(format!("non-finite weight on ({u}, {v})")));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::InvalidGraph(format!("duplicate edge ({u}, {v})")));
            }
        }
        Ok(Graph { n, edges })
    }

    pub fn unweighted(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::new(n, edges.iter().map(|&(u, v)| (u, v, 1.0)).collect())
    }

    pub fn empty(n: usize) -> Self {
        Graph { n, edges: vec![] }
    }

    pub fn path(n: usize) -> Self {
        Graph {
            n,
            edges: (1..n).map(|i| (i - 1, i, 1.0)).collect(),
        }
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        let mut g = Self::path(n);
        g.edges.push((n - 1, 0, 1.0));
        g
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = vec![];
        for u in 0..n {
            for v in (u + 1)..n {
                edges.push((u, v, 1.0));
            }
        }
        Graph { n, edges }
    }

    /// `K_{1,leaves}` with center 0.
    pub fn star(leaves: usize) -> Self {
        Graph {
            n: leaves + 1,
            edges: (1..=leaves).map(|v| (0, v, 1.0)).collect(),
        }
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut edges = vec![];
        for u in 0..a {
            for v in a..a + b {
                edges.push((u, v, 1.0));
            }
        }
        Graph { n: a + b, edges }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize, f64)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_unweighted(&self) -> bool {
        self.edges.iter().all(|&(_, _, w)| w == 1.0)
    }

    pub fn neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![vec![]; self.n];
        for &(u, v, _) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v, _) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn is_connected(&self) -> bool {
        let adj = self.neighbors();
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.edges.len() + 1 == self.n && self.is_connected()
    }

    /// True for a simple path on all `n` vertices (a single vertex counts).
    pub fn is_path(&self) -> bool {
        self.is_tree() && self.degrees().iter().all(|&d| d <= 2)
    }
}

pub fn adjacency(g: &Graph) -> SymMatrix {
    let mut m = SymMatrix::zeros(g.n);
    for &(u, v, w) in &g.edges {
        m.set(u, v, w);
    }
    m
}

/// `L = D − A`. Negative weights are accepted with a warning; the result is
/// then not guaranteed to be semidefinite.
pub fn laplacian(g: &Graph) -> SymMatrix {
    if g.edges.iter().any(|&(_, _, w)| w < 0.0) {
        log::warn!("laplacian of a graph with negative weights is not positive semidefinite");
    }
    let mut m = adjacency(g).scale(-1.0);
    for &(u, v, w) in &g.edges {
        m.set(u, u, m.get(u, u) + w);
        m.set(v, v, m.get(v, v) + w);
    }
    m
}
