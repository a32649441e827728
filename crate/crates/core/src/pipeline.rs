//! End-to-end analysis: raw matrix → graph → clique complex → per-level
//! adjacency, connectivity, centralities and rankings.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::adjacency::{connectivity, level_adjacency, LevelAdjacency};
use crate::centrality::{
    betweenness_centrality, closeness_centrality, cross_level_from_levels, degree_centrality, eigenvector_centrality,
    rank_simplices, subgraph_centrality, CentralityScores, CrossLevelReport, Flag, LabeledRank, LevelRanks, Measure,
    DEFAULT_EIGEN_MAX_ITER, DEFAULT_TOL,
};
use crate::cliques::maximal_cliques;
use crate::complex::{clique_complex, SimplicialComplex};
use crate::error::Result;
use crate::graph::{normalize_graph, Graph};
use crate::io::ParsedMatrix;
use crate::walks::all_pairs_distances;

pub const TOOL_VERSION: &str = concat!("sx ", env!("CARGO_PKG_VERSION"));

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisOptions {
    pub keep_isolated: bool,
    pub max_dim: Option<usize>,
    pub levels: Vec<usize>,
    /// Analyze every level `0..=dim` instead of `levels`.
    pub all_levels: bool,
    pub measures: Vec<Measure>,
    pub tol: f64,
    pub max_iter: usize,
    /// N of the cross-level lift table.
    pub top_n: usize,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        Self {
            keep_isolated: false,
            max_dim: None,
            levels: vec![0, 1, 2],
            all_levels: false,
            measures: Measure::ALL.to_vec(),
            tol: DEFAULT_TOL,
            max_iter: DEFAULT_EIGEN_MAX_ITER,
            top_n: 5,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub input_sha256: Option<String>,
    pub tool_version: String,
}

/// Size summary: vertices, edges, clique counts per size and clique number.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexSummary {
    pub vertices: usize,
    pub edges: usize,
    /// `clique_counts[k]` is the number of (k+1)-cliques, i.e. k-simplices.
    pub clique_counts: Vec<usize>,
    pub clique_number: usize,
}

impl ComplexSummary {
    pub fn cliques_of_size(&self, size: usize) -> usize {
        size.checked_sub(1)
            .and_then(|k| self.clique_counts.get(k).copied())
            .unwrap_or(0)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScoreEntry {
    pub simplex: Vec<String>,
    pub index: usize,
    pub score: f64,
    pub rank: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub flags: Vec<Flag>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LevelStatus {
    #[serde(rename = "ANALYZED")]
    Analyzed,
    #[serde(rename = "NO-SIMPLICES")]
    NoSimplices,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LevelReport {
    pub k: usize,
    pub simplex_count: usize,
    pub status: LevelStatus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub connected: Option<bool>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub components: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub isolated: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub measures: Option<BTreeMap<Measure, Vec<ScoreEntry>>>,
}

impl LevelReport {
    pub fn ranking(&self, measure: Measure) -> Option<&[ScoreEntry]> {
        self.measures.as_ref()?.get(&measure).map(Vec::as_slice)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisRun {
    pub network: String,
    pub options: AnalysisOptions,
    pub provenance: Provenance,
    pub summary: ComplexSummary,
    pub levels: Vec<LevelReport>,
    pub cross_level: BTreeMap<Measure, CrossLevelReport>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

impl AnalysisRun {
    pub fn level(&self, k: usize) -> Option<&LevelReport> {
        self.levels.iter().find(|l| l.k == k)
    }
}

/// Summary tuple of a graph and its (possibly capped) clique complex.
pub fn summarize(graph: &Graph, complex: &SimplicialComplex) -> ComplexSummary {
    ComplexSummary {
        vertices: graph.vertex_count(),
        edges: graph.edge_count(),
        clique_counts: complex.level_counts(),
        clique_number: maximal_cliques(graph).iter().map(Vec::len).max().unwrap_or(0),
    }
}

/// Normalizes a parsed matrix and builds its clique complex.
pub fn build_complex(
    parsed: &ParsedMatrix,
    keep_isolated: bool,
    max_dim: Option<usize>,
) -> Result<(Graph, SimplicialComplex)> {
    let graph = normalize_graph(&parsed.matrix, keep_isolated)?;
    let complex = clique_complex(&graph, max_dim)?;
    Ok((graph, complex))
}

pub fn run_analysis(network: &str, parsed: &ParsedMatrix, options: &AnalysisOptions) -> Result<AnalysisRun> {
    let (graph, complex) = build_complex(parsed, options.keep_isolated, options.max_dim)?;
    let mut run = analyze_graph(network, &graph, &complex, options)?;
    run.provenance.input_sha256 = Some(parsed.sha256.clone());
    let mut warnings: Vec<String> = parsed
        .warnings
        .iter()
        .map(|w| format!("line {}, column {}: {}", w.line, w.column, w.message))
        .collect();
    warnings.append(&mut run.warnings);
    run.warnings = warnings;
    Ok(run)
}

/// Levels an analysis covers under `options`.
pub fn requested_levels(complex: &SimplicialComplex, options: &AnalysisOptions) -> Vec<usize> {
    if options.all_levels {
        (0..complex.clique_number()).collect()
    } else {
        let mut ls = options.levels.clone();
        ls.sort_unstable();
        ls.dedup();
        ls
    }
}

/// Runs the per-level pipeline on an already built complex.
pub fn analyze_graph(
    network: &str,
    graph: &Graph,
    complex: &SimplicialComplex,
    options: &AnalysisOptions,
) -> Result<AnalysisRun> {
    let summary = summarize(graph, complex);
    let mut run = AnalysisRun {
        network: network.to_owned(),
        options: options.clone(),
        provenance: Provenance {
            input_sha256: None,
            tool_version: TOOL_VERSION.to_owned(),
        },
        summary,
        levels: Vec::new(),
        cross_level: BTreeMap::new(),
        warnings: Vec::new(),
    };
    if graph.vertex_count() == 0 {
        log::warn!("{network}: graph is empty after normalization");
        run.warnings
            .push("graph is empty after normalization; nothing to analyze".into());
        return Ok(run);
    }

    for k in requested_levels(complex, options) {
        run.levels.push(analyze_level(complex, k, options)?);
    }

    let mut measures = options.measures.clone();
    measures.sort_unstable();
    measures.dedup();
    for measure in measures {
        let levels: Vec<LevelRanks> = run
            .levels
            .iter()
            .filter_map(|l| {
                l.ranking(measure).map(|entries| LevelRanks {
                    k: l.k,
                    items: entries
                        .iter()
                        .map(|e| LabeledRank {
                            vertices: e.simplex.clone(),
                            score: e.score,
                            rank: e.rank,
                        })
                        .collect(),
                })
            })
            .collect();
        if !levels.is_empty() {
            run.cross_level
                .insert(measure, cross_level_from_levels(measure, &levels, options.top_n));
        }
    }
    Ok(run)
}

/// Connectivity only, no centralities.
pub fn connectivity_report(complex: &SimplicialComplex, k: usize) -> Result<LevelReport> {
    if complex.level(k).is_empty() {
        return Ok(empty_level(k));
    }
    let adj = level_adjacency(complex, k)?;
    let c = connectivity(&adj);
    Ok(LevelReport {
        k,
        simplex_count: adj.size(),
        status: LevelStatus::Analyzed,
        connected: Some(c.connected),
        components: c.components,
        isolated: c.isolated,
        measures: None,
    })
}

fn empty_level(k: usize) -> LevelReport {
    LevelReport {
        k,
        simplex_count: 0,
        status: LevelStatus::NoSimplices,
        connected: None,
        components: Vec::new(),
        isolated: Vec::new(),
        measures: None,
    }
}

fn analyze_level(complex: &SimplicialComplex, k: usize, options: &AnalysisOptions) -> Result<LevelReport> {
    if complex.level(k).is_empty() {
        return Ok(empty_level(k));
    }
    let adj = level_adjacency(complex, k)?;
    let mut report = connectivity_report(complex, k)?;
    let mut measures = BTreeMap::new();
    for &measure in &options.measures {
        let scores = compute_measure(&adj, measure, options)?;
        let ranking = rank_simplices(&scores, &adj.simplices);
        let entries = ranking
            .entries
            .into_iter()
            .map(|e| ScoreEntry {
                simplex: complex.label_list(&e.simplex),
                index: e.index,
                score: e.score,
                rank: e.rank,
                flags: e.flags,
            })
            .collect();
        measures.insert(measure, entries);
    }
    report.measures = Some(measures);
    Ok(report)
}

pub fn compute_measure(adj: &LevelAdjacency, measure: Measure, options: &AnalysisOptions) -> Result<CentralityScores> {
    Ok(match measure {
        Measure::Degree => degree_centrality(adj),
        Measure::Closeness => closeness_centrality(adj, &all_pairs_distances(adj)),
        Measure::Betweenness => betweenness_centrality(adj),
        Measure::Eigenvector => eigenvector_centrality(adj, options.tol, options.max_iter)?,
        Measure::Subgraph => subgraph_centrality(adj, options.tol)?,
    })
}
