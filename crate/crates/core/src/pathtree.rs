//! Distance between a path and a tree on the same number of vertices.
//!
//! Under any bijection the path edges that land on tree edges form a system of
//! vertex-disjoint paths in the tree. With `c*` the most edges such a system
//! can cover, the optimum leaves `n − 1 − c*` edges unmatched on each side, so
//! `‖A_P^π − A_T‖² = 2·Δ = 4·(n − 1 − c*)`.
//!
//! `c*` comes from a post-order pass. For vertex `v` with children `c`:
//! `A(v)` is the best cover of the subtree at `v`, `B(v)` the best cover in which
//! `v` is the end of a path, and `gain(c) = 1 + B(c) − A(c) ∈ {0, 1}` is what
//! extending a path from `v` into `c` is worth. Then
//! `B(v) = Σ A(c) + max(0, best gain)` and
//! `A(v) = Σ A(c) + max(0, best gain, sum of the two best gains)`.

use crate::error::{Error, Result};
use crate::exact::SimResult;
use crate::matrix::{Graph, Permutation};

/// A tree rooted at vertex 0.
#[derive(Clone, Debug)]
pub struct RootedTree {
    pub parent: Vec<Option<usize>>,
    pub children: Vec<Vec<usize>>,
    /// Vertices in depth-first preorder.
    pub preorder: Vec<usize>,
}

impl RootedTree {
    pub fn new(h: &Graph) -> Result<Self> {
        if !h.is_tree() {
            return Err(Error::NotATree(format!(
                "{} vertices, {} edges{}",
                h.n(),
                h.edge_count(),
                if h.is_connected() { "" } else { ", disconnected" }
            )));
        }
        let n = h.n();
        let adj = h.neighbors();
        let mut parent = vec![None; n];
        let mut children = vec![Vec::new(); n];
        let mut preorder = Vec::with_capacity(n);
        let mut stack = vec![0];
        let mut seen = vec![false; n];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            preorder.push(v);
            for &c in adj[v].iter().rev() {
                if !seen[c] {
                    seen[c] = true;
                    parent[c] = Some(v);
                    stack.push(c);
                }
            }
        }
        for &v in &preorder {
            if let Some(p) = parent[v] {
                children[p].push(v);
            }
        }
        Ok(RootedTree {
            parent,
            children,
            preorder,
        })
    }

    pub fn n(&self) -> usize {
        self.parent.len()
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DpCell {
    /// Most edges covered by disjoint paths in the subtree.
    pub a: usize,
    /// Same, with one of the paths ending at the subtree root.
    pub b: usize,
}

fn gain(cell: DpCell) -> usize {
    debug_assert!(cell.b + 1 >= cell.a && cell.b <= cell.a);
    1 + cell.b - cell.a
}

/// Children with gain 1, in child order, at most two of them.
fn gaining_children(tree: &RootedTree, cells: &[DpCell], v: usize) -> Vec<usize> {
    tree.children[v]
        .iter()
        .copied()
        .filter(|&c| gain(cells[c]) == 1)
        .take(2)
        .collect()
}

pub fn dp_table(tree: &RootedTree) -> Vec<DpCell> {
    let mut cells = vec![DpCell::default(); tree.n()];
    for &v in tree.preorder.iter().rev() {
        let sum_a: usize = tree.children[v].iter().map(|&c| cells[c].a).sum();
        let gainers = gaining_children(tree, &cells, v).len();
        cells[v] = DpCell {
            a: sum_a + gainers,
            b: sum_a + gainers.min(1),
        };
    }
    cells
}

pub fn max_path_cover(h: &Graph) -> Result<usize> {
    let tree = RootedTree::new(h)?;
    Ok(dp_table(&tree)[0].a)
}

/// Edges of one optimal path system.
pub fn optimal_cover(tree: &RootedTree) -> Vec<(usize, usize)> {
    let cells = dp_table(tree);
    let mut edges = Vec::new();
    // (vertex, must v be a path end within its subtree)
    let mut stack = vec![(0usize, false)];
    while let Some((v, end_required)) = stack.pop() {
        let mut take = gaining_children(tree, &cells, v);
        if end_required {
            take.truncate(1);
        }
        for &c in &tree.children[v] {
            let used = take.contains(&c);
            if used {
                edges.push((v, c));
            }
            stack.push((c, used));
        }
    }
    edges
}

/// Vertices of a path graph listed from the lower-numbered end.
pub fn path_order(g: &Graph) -> Option<Vec<usize>> {
    if !g.is_path() {
        return None;
    }
    let adj = g.neighbors();
    let start = (0..g.n()).find(|&v| adj[v].len() <= 1)?;
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(&next) = adj[cur].iter().find(|&&x| x != prev) {
        order.push(next);
        prev = cur;
        cur = next;
    }
    Some(order)
}

/// Optimal distance between `P_n` (vertices `0-1-…-(n−1)`) and the tree `h`.
///
/// The witness lays the covering paths end to end in the order their first
/// vertex is met by a preorder walk of the tree.
pub fn path_tree_distance(n: usize, h: &Graph) -> Result<SimResult> {
    if h.n() != n {
        return Err(Error::DimensionMismatch {
            left: n,
            right: h.n(),
        });
    }
    let tree = RootedTree::new(h)?;
    let cover = optimal_cover(&tree);
    let covered = cover.len();

    let mut adj = vec![Vec::with_capacity(2); n];
    for &(u, v) in &cover {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut seen = vec![false; n];
    let mut sequence = Vec::with_capacity(n);
    for &v in &tree.preorder {
        if seen[v] {
            continue;
        }
        // walk to one end of v's component, then along it
        let (mut prev, mut end) = (usize::MAX, v);
        while let Some(&next) = adj[end].iter().find(|&&x| x != prev) {
            prev = end;
            end = next;
        }
        let (mut prev, mut cur) = (usize::MAX, end);
        loop {
            seen[cur] = true;
            sequence.push(cur);
            match adj[cur].iter().find(|&&x| x != prev) {
                Some(&next) => {
                    prev = cur;
                    cur = next;
                }
                None => break,
            }
        }
    }
    let perm = Permutation::new(sequence)?;
    let uncovered = n - 1 - covered;
    let dist_sq = 4.0 * uncovered as f64;
    Ok(SimResult {
        perm,
        dist: dist_sq.sqrt(),
        dist_sq,
        mismatches: Some(2 * uncovered),
        objective: None,
    })
}

/// Path-vs-tree distance for arbitrarily labeled inputs, in either order.
/// The returned permutation maps the first graph's vertices onto the second's.
pub fn path_tree_between(g: &Graph, h: &Graph) -> Result<SimResult> {
    if g.n() != h.n() {
        return Err(Error::DimensionMismatch {
            left: g.n(),
            right: h.n(),
        });
    }
    if !g.is_unweighted() || !h.is_unweighted() {
        return Err(Error::Weighted);
    }
    let (path, tree, path_first) = match (path_order(g), path_order(h)) {
        (Some(order), _) if h.is_tree() => (order, h, true),
        (_, Some(order)) if g.is_tree() => (order, g, false),
        _ => {
            return Err(Error::NotATree(
                "one input must be a path and the other a tree".into(),
            ))
        }
    };
    let mut r = path_tree_distance(path.len(), tree)?;
    // r.perm sends path position t to a tree vertex; relabel positions by `path`
    let mut image = vec![0; path.len()];
    for (t, &v) in path.iter().enumerate() {
        image[v] = r.perm.apply(t);
    }
    let perm = Permutation::new(image)?;
    r.perm = if path_first { perm } else { perm.inverse() };
    Ok(r)
}
