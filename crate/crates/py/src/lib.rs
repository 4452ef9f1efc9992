//! Python bindings: the tree constructions, indices, spectral bounds and
//! experiment reports behind a small flat API. Reports come back as JSON
//! strings so Python can `json.loads` them.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use treebound::bounds::bounds_for;
use treebound::degseq::{enumerate_tree_sequences, DegreeSequence};
use treebound::experiments::{
    probe_lemma1, probe_perturbation, probe_theorem2, records_to_csv, scan, verify_conjectures,
    ScanMetric,
};
use treebound::metrics::{terminal_wiener, tvwwi, vwwi, wiener};
use treebound::spectral::{dsr, tdsr};
use treebound::tree::{
    build_bfs_tree, build_huffman, canonical_form, GeneratingTuple, Tree as CoreTree, WeightedTree,
};

fn err(e: treebound::Error) -> PyError {
    PyValueError::new_err(e.to_string())
}

type PyError = PyErr;

fn parse_seq(seq: &str) -> PyResult<DegreeSequence> {
    DegreeSequence::parse(seq).map_err(err)
}

/// An unweighted tree; weights enter through the index methods.
#[pyclass(name = "Tree")]
#[derive(Clone)]
struct PyTree {
    inner: CoreTree,
}

#[pymethods]
impl PyTree {
    /// Greedy (BFS) tree of a degree sequence.
    #[staticmethod]
    fn bfs(seq: &str) -> PyResult<Self> {
        Ok(PyTree { inner: build_bfs_tree(&parse_seq(seq)?) })
    }

    /// Generalized Huffman tree; returns the tree and its root.
    #[staticmethod]
    fn huffman(seq: &str, weights: Vec<f64>) -> PyResult<(Self, usize)> {
        let s = parse_seq(seq)?;
        let tuple = if weights.len() == s.leaf_count() {
            GeneratingTuple::with_leaf_weights(s, &weights)
        } else {
            GeneratingTuple::new(s, weights)
        }
        .map_err(err)?;
        let h = build_huffman(&tuple).map_err(err)?;
        Ok((PyTree { inner: h.tree.tree }, h.root))
    }

    #[staticmethod]
    fn from_edges(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(PyTree { inner: CoreTree::from_edges(n, edges).map_err(err)? })
    }

    fn order(&self) -> usize {
        self.inner.order()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().to_vec()
    }

    fn leaves(&self) -> Vec<usize> {
        self.inner.leaves()
    }

    fn degree_sequence(&self) -> String {
        self.inner.degree_sequence().to_compact_string()
    }

    fn canonical_form(&self) -> String {
        canonical_form(&self.inner)
    }

    fn wiener(&self) -> u64 {
        wiener(&self.inner)
    }

    fn terminal_wiener(&self) -> u64 {
        terminal_wiener(&self.inner)
    }

    /// Vertex-weighted Wiener index for full vertex weights.
    fn vwwi(&self, weights: Vec<f64>) -> PyResult<f64> {
        Ok(vwwi(&WeightedTree::new(self.inner.clone(), weights).map_err(err)?))
    }

    /// Terminal weighted index for pendent-vertex weights.
    fn tvwwi(&self, leaf_weights: Vec<f64>) -> PyResult<f64> {
        Ok(tvwwi(
            &WeightedTree::with_leaf_weights(self.inner.clone(), &leaf_weights).map_err(err)?,
        ))
    }

    /// Distance spectral radius.
    #[pyo3(signature = (tol = 1e-10, max_iter = 100_000))]
    fn dsr(&self, tol: f64, max_iter: usize) -> PyResult<f64> {
        Ok(dsr(&self.inner, tol, max_iter).map_err(err)?.radius)
    }

    /// Terminal distance spectral radius.
    #[pyo3(signature = (tol = 1e-10, max_iter = 100_000))]
    fn tdsr(&self, tol: f64, max_iter: usize) -> PyResult<f64> {
        Ok(tdsr(&self.inner, tol, max_iter).map_err(err)?.radius)
    }

    fn to_dot(&self) -> String {
        self.inner.to_dot()
    }

    fn __repr__(&self) -> String {
        format!("Tree({})", self.degree_sequence())
    }
}

/// Normalized compact form, order and pendent count of a sequence.
#[pyfunction]
fn validate(seq: &str) -> PyResult<(String, usize, usize)> {
    let s = parse_seq(seq)?;
    Ok((s.to_compact_string(), s.order(), s.leaf_count()))
}

#[pyfunction]
fn enumerate_sequences(order: usize) -> PyResult<Vec<String>> {
    Ok(enumerate_tree_sequences(order)
        .map_err(err)?
        .iter()
        .map(DegreeSequence::to_compact_string)
        .collect())
}

#[pyfunction]
fn family_ab(a: usize, b: usize) -> String {
    treebound::degseq::family_ab(a, b).to_compact_string()
}

#[pyfunction]
fn family_starlike(d: usize, k: usize) -> String {
    treebound::degseq::family_starlike(d, k).to_compact_string()
}

#[pyfunction]
fn tdsr_ab_closed(a: usize, b: usize) -> f64 {
    treebound::spectral::tdsr_ab_closed(a, b)
}

#[pyfunction]
fn tlb_ab_closed(a: usize, b: usize) -> f64 {
    treebound::spectral::tlb_ab_closed(a, b)
}

#[pyfunction]
fn terr_ab(a: usize, b: usize) -> f64 {
    treebound::spectral::terr_ab(a, b)
}

#[pyfunction]
fn terr_limit() -> f64 {
    treebound::spectral::terr_limit()
}

#[pyfunction]
fn extremal_a(n: f64) -> f64 {
    treebound::spectral::extremal_a(n)
}

/// Bounds report for a degree sequence, as a JSON string.
#[pyfunction]
#[pyo3(signature = (seq, tol = 1e-10, max_iter = 100_000))]
fn bounds(seq: &str, tol: f64, max_iter: usize) -> PyResult<String> {
    let report = bounds_for(&parse_seq(seq)?, tol, max_iter).map_err(err)?;
    Ok(serde_json::to_string(&report).expect("serialize"))
}

/// Gap scan over all sequences of orders `4..=max_order`, as CSV text.
#[pyfunction]
#[pyo3(signature = (metric, max_order, tol = 1e-10, max_iter = 100_000))]
fn scan_csv(metric: &str, max_order: usize, tol: f64, max_iter: usize) -> PyResult<String> {
    let metric: ScanMetric = metric.parse().map_err(err)?;
    let records = scan(metric, max_order, tol, max_iter).map_err(err)?;
    Ok(records_to_csv(&records))
}

/// Exhaustive minimality verification report, as a JSON string.
#[pyfunction]
#[pyo3(signature = (seq, budget = 1_000_000, tol = 1e-10, max_iter = 100_000))]
fn verify(seq: &str, budget: u128, tol: f64, max_iter: usize) -> PyResult<String> {
    let report = verify_conjectures(&parse_seq(seq)?, budget, tol, max_iter).map_err(err)?;
    Ok(serde_json::to_string(&report).expect("serialize"))
}

/// Seeded randomized probe ("lemma1", "theorem2" or "perturbation"), as a
/// JSON string.
#[pyfunction]
#[pyo3(signature = (name, seq, samples = 100, seed = 42, budget = 1_000_000))]
fn probe(name: &str, seq: &str, samples: usize, seed: u64, budget: u128) -> PyResult<String> {
    let s = parse_seq(seq)?;
    let report = match name {
        "lemma1" => probe_lemma1(&s, samples, seed, budget, 1e-10, 100_000),
        "theorem2" => probe_theorem2(&s, samples, seed, budget),
        "perturbation" => probe_perturbation(&s, samples, seed),
        other => {
            return Err(PyValueError::new_err(format!("unknown probe {other:?}")));
        }
    }
    .map_err(err)?;
    Ok(serde_json::to_string(&report).expect("serialize"))
}

#[pymodule]
fn treebound_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyTree>()?;
    m.add_function(wrap_pyfunction!(validate, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_sequences, m)?)?;
    m.add_function(wrap_pyfunction!(family_ab, m)?)?;
    m.add_function(wrap_pyfunction!(family_starlike, m)?)?;
    m.add_function(wrap_pyfunction!(tdsr_ab_closed, m)?)?;
    m.add_function(wrap_pyfunction!(tlb_ab_closed, m)?)?;
    m.add_function(wrap_pyfunction!(terr_ab, m)?)?;
    m.add_function(wrap_pyfunction!(terr_limit, m)?)?;
    m.add_function(wrap_pyfunction!(extremal_a, m)?)?;
    m.add_function(wrap_pyfunction!(bounds, m)?)?;
    m.add_function(wrap_pyfunction!(scan_csv, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(probe, m)?)?;
    Ok(())
}
