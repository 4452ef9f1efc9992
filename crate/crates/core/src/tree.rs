//! Tree data structures and the two constructive algorithms: the
//! level-by-level greedy (BFS) tree and the generalized Huffman tree,
//! plus rooting, subordinate-group weights, Prüfer enumeration and
//! AHU canonical forms.

use std::collections::{HashSet, VecDeque};

use crate::degseq::DegreeSequence;
use crate::error::Error;
use crate::Result;

/// An undirected tree on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tree {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Tree {
    /// Builds a tree from an edge list, checking connectivity and edge count.
    pub fn from_edges(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidTree(format!("order {n} < 2")));
        }
        if edges.len() != n - 1 {
            return Err(Error::InvalidTree(format!(
                "{} edges, expected {}",
                edges.len(),
                n - 1
            )));
        }
        let mut adj = vec![Vec::new(); n];
        let mut seen = HashSet::new();
        for &(u, v) in &edges {
            if u >= n || v >= n || u == v {
                return Err(Error::InvalidTree(format!("bad edge ({u},{v})")));
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(Error::InvalidTree(format!("duplicate edge ({u},{v})")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let tree = Self { n, edges, adj };
        // n-1 distinct edges plus connectivity rules out cycles.
        let mut visited = vec![false; n];
        let mut queue = VecDeque::from([0usize]);
        visited[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &tree.adj[u] {
                if !visited[v] {
                    visited[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        if count != n {
            return Err(Error::InvalidTree("disconnected".into()));
        }
        Ok(tree)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.degree(v) == 1
    }

    /// Leaf vertex ids in ascending order.
    pub fn leaves(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.is_leaf(v)).collect()
    }

    /// Internal vertex ids in ascending order.
    pub fn internal_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| !self.is_leaf(v)).collect()
    }

    /// The (sorted) degree sequence of this tree.
    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::new((0..self.n).map(|v| self.degree(v)).collect())
            .expect("a tree always has a valid degree sequence")
    }

    /// BFS distances from `source` to every vertex.
    pub fn bfs_distances(&self, source: usize) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.n];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if dist[v] == u32::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Edge-list text: header `N <order>`, then one `u v` pair per line.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("N {}\n", self.n);
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Parses the `to_edge_list` format.
    pub fn from_edge_list(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::InvalidTree("empty edge list".into()))?;
        let n: usize = header
            .strip_prefix("N ")
            .and_then(|s| s.trim().parse().ok())
            .ok_or_else(|| Error::InvalidTree(format!("bad header {header:?}")))?;
        let mut edges = Vec::new();
        for line in lines {
            let mut it = line.split_whitespace();
            let u: usize = it
                .next()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| Error::InvalidTree(format!("bad edge line {line:?}")))?;
            let v: usize = it
                .next()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| Error::InvalidTree(format!("bad edge line {line:?}")))?;
            edges.push((u, v));
        }
        Self::from_edges(n, edges)
    }

    /// DOT export; leaves are drawn as circles, internal vertices as boxes.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph tree {\n");
        for v in 0..self.n {
            let shape = if self.is_leaf(v) { "circle" } else { "box" };
            out.push_str(&format!("  {v} [shape={shape}];\n"));
        }
        for &(u, v) in &self.edges {
            out.push_str(&format!("  {u} -- {v};\n"));
        }
        out.push_str("}\n");
        out
    }
}

/// A tree with a non-negative weight on every vertex.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedTree {
    pub tree: Tree,
    weights: Vec<f64>,
}

impl WeightedTree {
    pub fn new(tree: Tree, weights: Vec<f64>) -> Result<Self> {
        if weights.len() != tree.order() {
            return Err(Error::LengthMismatch(weights.len(), tree.order()));
        }
        if weights.iter().any(|&w| w < 0.0 || !w.is_finite()) {
            return Err(Error::InvalidArgument("weights must be finite and >= 0".into()));
        }
        Ok(Self { tree, weights })
    }

    /// Unit weight on every vertex.
    pub fn unit(tree: Tree) -> Self {
        let weights = vec![1.0; tree.order()];
        Self { tree, weights }
    }

    /// Given leaf weights (by ascending leaf id) and zero internal weights.
    pub fn with_leaf_weights(tree: Tree, leaf_weights: &[f64]) -> Result<Self> {
        let leaves = tree.leaves();
        if leaf_weights.len() != leaves.len() {
            return Err(Error::LengthMismatch(leaf_weights.len(), leaves.len()));
        }
        let mut weights = vec![0.0; tree.order()];
        for (&v, &w) in leaves.iter().zip(leaf_weights) {
            weights[v] = w;
        }
        Self::new(tree, weights)
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn weight(&self, v: usize) -> f64 {
        self.weights[v]
    }

    /// Total weight over all vertices.
    pub fn total_weight(&self) -> f64 {
        self.weights.iter().sum()
    }
}

/// A weighted tree with all edges directed toward an internal root.
#[derive(Debug, Clone, PartialEq)]
pub struct RootedTree {
    pub tree: WeightedTree,
    root: usize,
    parent: Vec<Option<usize>>,
}

impl RootedTree {
    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    /// Subtree weight `f(v)` for every vertex; `f(root)` is the total weight.
    pub fn subtree_weights(&self) -> Vec<f64> {
        let n = self.tree.tree.order();
        let mut f = self.tree.weights().to_vec();
        // Children are strictly farther from the root, so accumulating in
        // decreasing BFS-distance order sees every child before its parent.
        let dist = self.tree.tree.bfs_distances(self.root);
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(dist[v]));
        for v in order {
            if let Some(p) = self.parent[v] {
                f[p] += f[v];
            }
        }
        f
    }

    /// The ascending vector of subordinate-group weights over internal
    /// non-root vertices.
    pub fn subordinate_vector(&self) -> Vec<f64> {
        let f = self.subtree_weights();
        let mut out: Vec<f64> = (0..self.tree.tree.order())
            .filter(|&v| v != self.root && !self.tree.tree.is_leaf(v))
            .map(|v| f[v])
            .collect();
        out.sort_by(|a, b| a.partial_cmp(b).unwrap());
        out
    }
}

/// Orients all edges of `t` toward the internal vertex `r`.
pub fn root_at(t: WeightedTree, r: usize) -> Result<RootedTree> {
    if t.tree.degree(r) < 2 {
        return Err(Error::RootIsLeaf(r));
    }
    let n = t.tree.order();
    let mut parent = vec![None; n];
    let mut visited = vec![false; n];
    visited[r] = true;
    let mut queue = VecDeque::from([r]);
    while let Some(u) = queue.pop_front() {
        for &v in t.tree.neighbors(u) {
            if !visited[v] {
                visited[v] = true;
                parent[v] = Some(u);
                queue.push_back(v);
            }
        }
    }
    Ok(RootedTree { tree: t, root: r, parent })
}

/// Vertex weights plus degrees summing to `2(N-1)`; the input of the
/// generalized Huffman algorithm. Weight `i` belongs to vertex `i`, whose
/// degree is the `i`-th entry of the ascending sequence.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneratingTuple {
    pub degrees: DegreeSequence,
    pub weights: Vec<f64>,
}

impl GeneratingTuple {
    pub fn new(degrees: DegreeSequence, weights: Vec<f64>) -> Result<Self> {
        if weights.len() != degrees.order() {
            return Err(Error::LengthMismatch(weights.len(), degrees.order()));
        }
        if weights.iter().any(|&w| w < 0.0 || !w.is_finite()) {
            return Err(Error::InvalidArgument("weights must be finite and >= 0".into()));
        }
        Ok(Self { degrees, weights })
    }

    /// Leaf weights from `mu` (in order), zero weights on internal vertices.
    pub fn with_leaf_weights(degrees: DegreeSequence, mu: &[f64]) -> Result<Self> {
        let n_leaves = degrees.leaf_count();
        if mu.len() != n_leaves {
            return Err(Error::LengthMismatch(mu.len(), n_leaves));
        }
        // Ascending order puts the degree-1 vertices first.
        let mut weights = vec![0.0; degrees.order()];
        weights[..n_leaves].copy_from_slice(mu);
        Self::new(degrees, weights)
    }

    /// True iff internal weights are non-decreasing in degree and every
    /// pendent weight is positive.
    pub fn is_degree_monotone(&self) -> bool {
        let degs = self.degrees.degrees();
        for (i, (&d, &w)) in degs.iter().zip(&self.weights).enumerate() {
            if d == 1 {
                if w <= 0.0 {
                    return false;
                }
            } else {
                for (&d2, &w2) in degs[i + 1..].iter().zip(&self.weights[i + 1..]) {
                    if d < d2 && w > w2 {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Output of the generalized Huffman algorithm: the constructed weighted
/// tree (original weights restored) and its root, the internal vertex
/// processed last. Rooting the tree there reproduces the directed Huffman
/// tree.
#[derive(Debug, Clone)]
pub struct HuffmanTree {
    pub tree: WeightedTree,
    pub root: usize,
}

impl HuffmanTree {
    pub fn rooted(&self) -> RootedTree {
        root_at(self.tree.clone(), self.root).expect("huffman root is internal")
    }
}

/// Level-by-level greedy construction: the root takes the largest degree,
/// and each level is filled left to right consuming the remaining degrees
/// in descending order. Vertices are numbered in creation order.
pub fn build_bfs_tree(seq: &DegreeSequence) -> Tree {
    let n = seq.order();
    let mut desc: Vec<usize> = seq.degrees().to_vec();
    desc.reverse();
    let mut edges = Vec::with_capacity(n - 1);
    // capacity = number of children still to attach
    let mut capacity = vec![0usize; n];
    capacity[0] = desc[0];
    let mut queue = VecDeque::from([0usize]);
    let mut next = 1;
    while let Some(v) = queue.pop_front() {
        for _ in 0..capacity[v] {
            if next >= n {
                break;
            }
            edges.push((v, next));
            capacity[next] = desc[next] - 1;
            queue.push_back(next);
            next += 1;
        }
    }
    Tree::from_edges(n, edges).expect("BFS construction yields a valid tree")
}

/// The generalized Huffman algorithm.
///
/// At each step the internal vertex of least current weight is selected
/// (ties by least degree, then lowest index), the `d - 1` lightest current
/// pendent vertices are attached to it (ties by lowest index), their
/// weights are merged into it and its degree becomes 1. The last internal
/// vertex takes all remaining pendants.
pub fn build_huffman(tuple: &GeneratingTuple) -> Result<HuffmanTree> {
    let n = tuple.degrees.order();
    if n < 3 {
        return Err(Error::NoInternalVertex);
    }
    let orig_degrees = tuple.degrees.degrees();
    let mut weight: Vec<f64> = tuple.weights.clone();
    let mut degree: Vec<usize> = orig_degrees.to_vec();
    // pendent = current degree 1 and not yet attached to anything
    let mut available = vec![true; n];
    let mut edges = Vec::with_capacity(n - 1);

    let internal_total = degree.iter().filter(|&&d| d >= 2).count();
    let mut root = 0;
    for step in 0..internal_total {
        let last = step == internal_total - 1;
        let m = (0..n)
            .filter(|&v| available[v] && degree[v] >= 2)
            .min_by(|&a, &b| {
                weight[a]
                    .partial_cmp(&weight[b])
                    .unwrap()
                    .then(degree[a].cmp(&degree[b]))
                    .then(a.cmp(&b))
            })
            .expect("internal vertex available");
        let take = if last { degree[m] } else { degree[m] - 1 };
        let mut pendants: Vec<usize> = (0..n)
            .filter(|&v| available[v] && degree[v] == 1)
            .collect();
        pendants.sort_by(|&a, &b| weight[a].partial_cmp(&weight[b]).unwrap().then(a.cmp(&b)));
        debug_assert!(pendants.len() >= take);
        for &w in pendants.iter().take(take) {
            edges.push((w, m));
            available[w] = false;
            weight[m] += weight[w];
        }
        degree[m] = 1;
        root = m;
    }

    let tree = Tree::from_edges(n, edges)?;
    debug_assert_eq!(tree.degree_sequence().degrees(), orig_degrees);
    let weighted = WeightedTree::new(tree, tuple.weights.clone())?;
    Ok(HuffmanTree { tree: weighted, root })
}

/// Multinomial count of labeled trees: `(N-2)! / prod (d_i - 1)!`.
pub fn labeled_tree_count(seq: &DegreeSequence) -> u128 {
    let n = seq.order();
    if n == 2 {
        return 1;
    }
    // Incremental binomial product keeps intermediates small.
    let mut count: u128 = 1;
    let mut placed: u128 = 0;
    for &d in seq.degrees() {
        let reps = (d - 1) as u128;
        for i in 1..=reps {
            placed += 1;
            count = count * placed / i;
        }
    }
    count
}

/// Enumeration mode for [`enumerate_trees`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnumerationMode {
    /// Every distinct labeled tree (one per Prüfer multiset permutation).
    Labeled,
    /// One representative per isomorphism class.
    Unlabeled,
}

/// Decodes a Prüfer sequence over vertices `0..n` into a tree.
fn decode_pruefer(n: usize, code: &[usize]) -> Tree {
    debug_assert_eq!(code.len(), n - 2);
    let mut remaining_degree = vec![1usize; n];
    for &v in code {
        remaining_degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    // Min-heap of current leaves.
    let mut heap: std::collections::BinaryHeap<std::cmp::Reverse<usize>> = (0..n)
        .filter(|&v| remaining_degree[v] == 1)
        .map(std::cmp::Reverse)
        .collect();
    for &v in code {
        let std::cmp::Reverse(leaf) = heap.pop().expect("leaf available");
        edges.push((leaf, v));
        remaining_degree[v] -= 1;
        if remaining_degree[v] == 1 {
            heap.push(std::cmp::Reverse(v));
        }
    }
    let std::cmp::Reverse(u) = heap.pop().unwrap();
    let std::cmp::Reverse(v) = heap.pop().unwrap();
    edges.push((u, v));
    Tree::from_edges(n, edges).expect("Prüfer decode yields a tree")
}

/// In-place next lexicographic permutation; false when already the last one.
fn next_permutation(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// All trees with the given degree sequence.
///
/// Labeled mode decodes every distinct permutation of the Prüfer multiset
/// in which vertex `i` appears `d_i - 1` times; unlabeled mode keeps one
/// representative per [`canonical_form`] class. `budget` caps the labeled
/// count in both modes.
pub fn enumerate_trees(
    seq: &DegreeSequence,
    mode: EnumerationMode,
    budget: u128,
) -> Result<Vec<Tree>> {
    let count = labeled_tree_count(seq);
    if count > budget {
        return Err(Error::BudgetExceeded { count, budget });
    }
    let n = seq.order();
    if n == 2 {
        return Ok(vec![Tree::from_edges(2, vec![(0, 1)])?]);
    }
    let mut code: Vec<usize> = Vec::with_capacity(n - 2);
    for (v, &d) in seq.degrees().iter().enumerate() {
        code.extend(std::iter::repeat(v).take(d - 1));
    }
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    loop {
        let tree = decode_pruefer(n, &code);
        match mode {
            EnumerationMode::Labeled => out.push(tree),
            EnumerationMode::Unlabeled => {
                if seen.insert(canonical_form(&tree)) {
                    out.push(tree);
                }
            }
        }
        if !next_permutation(&mut code) {
            break;
        }
    }
    Ok(out)
}

fn ahu_encode(t: &Tree, v: usize, parent: Option<usize>) -> String {
    let mut child_codes: Vec<String> = t
        .neighbors(v)
        .iter()
        .filter(|&&c| Some(c) != parent)
        .map(|&c| ahu_encode(t, c, Some(v)))
        .collect();
    child_codes.sort();
    format!("({})", child_codes.concat())
}

/// Tree center: one or two vertices found by repeated leaf pruning.
fn centers(t: &Tree) -> Vec<usize> {
    let n = t.order();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &u in t.neighbors(v) {
                if degree[u] > 1 {
                    degree[u] -= 1;
                    if degree[u] == 1 {
                        next.push(u);
                    }
                }
            }
            degree[v] = 0;
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

/// Center-rooted AHU encoding; two trees get equal strings iff isomorphic.
///
/// A bicentral tree is encoded at the virtual midpoint of its central edge
/// so that no tie-breaking between the two centers is needed.
pub fn canonical_form(t: &Tree) -> String {
    let cs = centers(t);
    match cs.as_slice() {
        [c] => ahu_encode(t, *c, None),
        [c1, c2] => {
            let mut halves = [ahu_encode(t, *c1, Some(*c2)), ahu_encode(t, *c2, Some(*c1))];
            halves.sort();
            format!("({}{})", halves[0], halves[1])
        }
        _ => unreachable!("a tree has one or two centers"),
    }
}
