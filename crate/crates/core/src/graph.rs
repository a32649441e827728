//! Simple undirected labeled graphs and the normalization of raw adjacency data.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Result, SxError};

pub type VertexId = usize;

/// A square adjacency matrix as read from disk, with one label per row/column.
///
/// Entries are kept as read; [`normalize_graph`] decides what counts as an edge.
#[derive(Debug, Clone, PartialEq)]
pub struct RawMatrix {
    pub labels: Vec<String>,
    pub entries: Vec<Vec<f64>>,
}

impl RawMatrix {
    pub fn new(labels: Vec<String>, entries: Vec<Vec<f64>>) -> Self {
        Self { labels, entries }
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    fn validate(&self) -> Result<()> {
        let n = self.labels.len();
        if n == 0 && self.entries.is_empty() {
            return Err(SxError::EmptyMatrix);
        }
        if self.entries.len() != n {
            return Err(SxError::NonSquare {
                row: self.entries.len().min(n),
                found: self.entries.len(),
                expected: n,
            });
        }
        for (row, values) in self.entries.iter().enumerate() {
            if values.len() != n {
                return Err(SxError::NonSquare {
                    row,
                    found: values.len(),
                    expected: n,
                });
            }
        }
        check_distinct(&self.labels)
    }
}

fn check_distinct(labels: &[String]) -> Result<()> {
    let mut seen = HashMap::with_capacity(labels.len());
    for (position, label) in labels.iter().enumerate() {
        if seen.insert(label.as_str(), position).is_some() {
            return Err(SxError::DuplicateLabel {
                label: label.clone(),
                position,
            });
        }
    }
    Ok(())
}

/// A simple undirected graph on vertices `0..n`, each carrying a text label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    adjacency: Vec<Vec<VertexId>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from labels and unordered vertex pairs.
    ///
    /// Duplicate pairs (in either orientation) collapse into one edge; loops
    /// and endpoints outside `0..labels.len()` are rejected.
    pub fn new(labels: Vec<String>, edges: impl IntoIterator<Item = (VertexId, VertexId)>) -> Result<Self> {
        check_distinct(&labels)?;
        let n = labels.len();
        let mut sets = vec![BTreeSet::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(SxError::UnknownVertex(u, v));
            }
            if u == v {
                return Err(SxError::SelfLoop(u));
            }
            sets[u].insert(v);
            sets[v].insert(u);
        }
        let adjacency: Vec<Vec<VertexId>> = sets.into_iter().map(|s| s.into_iter().collect()).collect();
        let edge_count = adjacency.iter().map(Vec::len).sum::<usize>() / 2;
        Ok(Self {
            labels,
            adjacency,
            edge_count,
        })
    }

    /// Convenience constructor addressing vertices by label.
    pub fn from_labeled_edges(labels: &[&str], edges: &[(&str, &str)]) -> Result<Self> {
        let index: HashMap<&str, usize> = labels.iter().enumerate().map(|(i, l)| (*l, i)).collect();
        let mut pairs = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            let u = *index
                .get(a)
                .ok_or_else(|| SxError::InvalidParameter(format!("unknown vertex label {a:?}")))?;
            let v = *index
                .get(b)
                .ok_or_else(|| SxError::InvalidParameter(format!("unknown vertex label {b:?}")))?;
            pairs.push((u, v));
        }
        Self::new(labels.iter().map(|s| s.to_string()).collect(), pairs)
    }

    /// Unlabeled graph; vertices are named by their index.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (VertexId, VertexId)>) -> Result<Self> {
        Self::new((0..n).map(|i| i.to_string()).collect(), edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.adjacency.len() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().copied().filter(move |&v| v > u).map(move |v| (u, v)))
    }
}

/// Turns a raw (possibly directed, looped) matrix into a simple undirected graph.
///
/// `{i, j}` becomes an edge when either `raw[i][j]` or `raw[j][i]` is nonzero
/// and `i != j`; diagonal entries are dropped. With `keep_isolated == false`
/// vertices left without neighbors are removed and the survivors renumbered
/// in their original order.
pub fn normalize_graph(raw: &RawMatrix, keep_isolated: bool) -> Result<Graph> {
    raw.validate()?;
    let n = raw.size();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if raw.entries[i][j] != 0.0 || raw.entries[j][i] != 0.0 {
                edges.push((i, j));
            }
        }
    }

    if keep_isolated {
        return Graph::new(raw.labels.clone(), edges);
    }

    let mut touched = vec![false; n];
    for &(u, v) in &edges {
        touched[u] = true;
        touched[v] = true;
    }
    let mut remap = vec![usize::MAX; n];
    let mut labels = Vec::new();
    for (old, _) in touched.iter().enumerate().filter(|(_, t)| **t) {
        remap[old] = labels.len();
        labels.push(raw.labels[old].clone());
    }
    Graph::new(labels, edges.into_iter().map(|(u, v)| (remap[u], remap[v])))
}
