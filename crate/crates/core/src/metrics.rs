//! Distance matrices and the Wiener-type indices, the directed
//! decomposition of the vertex-weighted Wiener index, and the
//! weak-majorization comparator (ascending-prefix convention).

use crate::error::Error;
use crate::tree::{RootedTree, Tree, WeightedTree};
use crate::Result;

/// Pairwise distances over all vertices of a tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    entries: Vec<u32>,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.entries[u * self.n + v]
    }

    pub fn row_sum(&self, u: usize) -> u64 {
        self.entries[u * self.n..(u + 1) * self.n]
            .iter()
            .map(|&d| d as u64)
            .sum()
    }

    pub fn total(&self) -> u64 {
        self.entries.iter().map(|&d| d as u64).sum()
    }

    /// Dense row-major copy in floating point.
    pub fn to_dense(&self) -> Vec<f64> {
        self.entries.iter().map(|&d| d as f64).collect()
    }

    /// Row-major CSV, no header.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for u in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|v| self.get(u, v).to_string()).collect();
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }
}

/// Pairwise distances restricted to the pendent vertices, ordered by
/// ascending vertex id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TerminalDistanceMatrix {
    leaf_ids: Vec<usize>,
    entries: Vec<u32>,
}

impl TerminalDistanceMatrix {
    pub fn leaf_count(&self) -> usize {
        self.leaf_ids.len()
    }

    pub fn leaf_ids(&self) -> &[usize] {
        &self.leaf_ids
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.leaf_ids.len() + j]
    }

    pub fn row_sum(&self, i: usize) -> u64 {
        let n = self.leaf_ids.len();
        self.entries[i * n..(i + 1) * n].iter().map(|&d| d as u64).sum()
    }

    pub fn total(&self) -> u64 {
        self.entries.iter().map(|&d| d as u64).sum()
    }

    pub fn to_dense(&self) -> Vec<f64> {
        self.entries.iter().map(|&d| d as f64).collect()
    }

    /// Row-major CSV with a header row of leaf vertex ids.
    pub fn to_csv(&self) -> String {
        let n = self.leaf_ids.len();
        let mut out = self
            .leaf_ids
            .iter()
            .map(|id| id.to_string())
            .collect::<Vec<_>>()
            .join(",");
        out.push('\n');
        for i in 0..n {
            let row: Vec<String> = (0..n).map(|j| self.get(i, j).to_string()).collect();
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }
}

/// All-pairs distances via one BFS per vertex.
pub fn distance_matrix(t: &Tree) -> DistanceMatrix {
    let n = t.order();
    let mut entries = vec![0u32; n * n];
    for u in 0..n {
        let dist = t.bfs_distances(u);
        entries[u * n..(u + 1) * n].copy_from_slice(&dist);
    }
    DistanceMatrix { n, entries }
}

/// Restriction of the distance matrix to pendent vertices.
pub fn terminal_distance_matrix(t: &Tree) -> TerminalDistanceMatrix {
    let leaf_ids = t.leaves();
    let n = leaf_ids.len();
    let mut entries = vec![0u32; n * n];
    for (i, &u) in leaf_ids.iter().enumerate() {
        let dist = t.bfs_distances(u);
        for (j, &v) in leaf_ids.iter().enumerate() {
            entries[i * n + j] = dist[v];
        }
    }
    TerminalDistanceMatrix { leaf_ids, entries }
}

/// Wiener index: half the sum of all distance-matrix entries.
pub fn wiener(t: &Tree) -> u64 {
    distance_matrix(t).total() / 2
}

/// Terminal Wiener index: half the sum over pendent vertex pairs.
pub fn terminal_wiener(t: &Tree) -> u64 {
    terminal_distance_matrix(t).total() / 2
}

/// Vertex-weighted Wiener index, the quadratic form `mu' D mu / 2`.
pub fn vwwi(t: &WeightedTree) -> f64 {
    let d = distance_matrix(&t.tree);
    let n = t.tree.order();
    let w = t.weights();
    let mut acc = 0.0;
    for u in 0..n {
        for v in u + 1..n {
            acc += w[u] * w[v] * d.get(u, v) as f64;
        }
    }
    acc
}

/// Terminal vertex-weighted Wiener index; internal weights are ignored.
pub fn tvwwi(t: &WeightedTree) -> f64 {
    let rd = terminal_distance_matrix(&t.tree);
    let ids = rd.leaf_ids();
    let n = ids.len();
    let w = t.weights();
    let mut acc = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            acc += w[ids[i]] * w[ids[j]] * rd.get(i, j) as f64;
        }
    }
    acc
}

/// Directed decomposition of VWWI: the sum over non-root vertices of
/// `f(v) * (total - f(v))`, which equals `vwwi` of the underlying tree
/// for any internal root.
pub fn vwwi_directed(rt: &RootedTree) -> f64 {
    let total = rt.tree.total_weight();
    let f = rt.subtree_weights();
    let root = rt.root();
    f.iter()
        .enumerate()
        .filter(|&(v, _)| v != root)
        .map(|(_, &fv)| fv * (total - fv))
        .sum()
}

/// Outcome of the weak-majorization comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Majorization {
    /// `x` strictly weakly majorizes `y` (relation holds, sequences differ).
    Strict,
    /// `x` weakly majorizes `y` and the sorted sequences coincide.
    Weak,
    /// The relation does not hold.
    None,
}

impl Majorization {
    pub fn holds(self) -> bool {
        !matches!(self, Majorization::None)
    }
}

/// Whether `x` weakly majorizes `y` in the ascending-prefix sense: every
/// ascending-order prefix sum of `x` is at most the matching prefix sum
/// of `y`.
///
/// This is the reverse of the common descending-order convention.
pub fn weak_majorizes(x: &[f64], y: &[f64]) -> Result<Majorization> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch(x.len(), y.len()));
    }
    let mut xs = x.to_vec();
    let mut ys = y.to_vec();
    xs.sort_by(|a, b| a.partial_cmp(b).unwrap());
    ys.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut px = 0.0;
    let mut py = 0.0;
    for (&a, &b) in xs.iter().zip(&ys) {
        px += a;
        py += b;
        if px > py {
            return Ok(Majorization::None);
        }
    }
    if xs == ys {
        Ok(Majorization::Weak)
    } else {
        Ok(Majorization::Strict)
    }
}

/// Tolerant variant for floating-point sequences: prefix sums may exceed
/// by at most `tol`.
pub fn weak_majorizes_tol(x: &[f64], y: &[f64], tol: f64) -> Result<bool> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch(x.len(), y.len()));
    }
    let mut xs = x.to_vec();
    let mut ys = y.to_vec();
    xs.sort_by(|a, b| a.partial_cmp(b).unwrap());
    ys.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut px = 0.0;
    let mut py = 0.0;
    for (&a, &b) in xs.iter().zip(&ys) {
        px += a;
        py += b;
        if px > py + tol {
            return Ok(false);
        }
    }
    Ok(true)
}
